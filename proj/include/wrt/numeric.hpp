#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace wrt {

// exp(2 pi i r / modulus) for integer r.
class PhaseTable {
public:
    explicit PhaseTable(long long modulus);

    long long modulus() const { return modulus_; }
    const std::complex<double>& operator()(long long r) const {
        r %= modulus_;
        if (r < 0) r += modulus_;
        return table_[static_cast<std::size_t>(r)];
    }

private:
    long long modulus_;
    std::vector<std::complex<double>> table_;
};

// Neumaier compensated summation, componentwise.
class CompensatedSum {
public:
    void add(std::complex<double> z) {
        step(re_, cre_, z.real());
        step(im_, cim_, z.imag());
    }
    std::complex<double> value() const { return {re_ + cre_, im_ + cim_}; }

private:
    static void step(double& s, double& c, double x) {
        double t = s + x;
        if (std::abs(s) >= std::abs(x)) c += (s - t) + x;
        else c += (x - t) + s;
        s = t;
    }
    double re_ = 0, cre_ = 0, im_ = 0, cim_ = 0;
};

// Worker count: WRT_TORUS_THREADS if set, else hardware concurrency.
unsigned thread_count();

// Calls body(i) for i in [0, n) on up to thread_count() threads. The first
// exception thrown by any call is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

} // namespace wrt
