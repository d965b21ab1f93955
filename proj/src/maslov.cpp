#include "wrt/maslov.hpp"
#include "wrt/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace wrt {

namespace {

constexpr double quadrant_guard = 1e-9;

int mod4(long long x) { return static_cast<int>(((x % 4) + 4) % 4); }

const std::array<cd, 6> index_taus = {cd(0, 1),      cd(0.13, 1.07), cd(-0.21, 0.93),
                                      cd(0.5, 1.0),  cd(0.0, 2.0),   cd(0.31, 1.43)};

} // namespace

int epsilon_of(const SL2& A) { return A.trace() > 2 ? 0 : 1; }

cd d_of(double a, double b, double c, double d, cd tau) {
    cd j = -c * tau + d;
    cd at = (a * tau - b) / j;
    return j * (at - std::conj(at)) / (tau - std::conj(at));
}

cd d_of(const SL2& A, cd tau) { return d_of(double(A.a), double(A.b), double(A.c), double(A.d), tau); }

int index_from_arg(double arg, int epsilon) {
    double x = arg / (std::numbers::pi / 2);
    if (std::abs(x - std::round(x)) < quadrant_guard)
        throw Error(ErrorCode::branch_ambiguity, "arg z lies on a quadrant boundary");
    long long k = static_cast<long long>(std::floor(x));
    int flip = ((k + epsilon) % 2 == 0) ? 0 : 1;
    return mod4(k + flip);
}

int index_2d(const SymplecticLift& lift) {
    if (lift.z == cd(0))
        throw Error(ErrorCode::invalid_argument, "z vanishes");
    return index_from_arg(std::arg(lift.z), lift.epsilon);
}

cd sigma(const M2Element& x, cd tau) {
    cd at = mobius(x.A, tau);
    cd ratio = (at - std::conj(at)) / (tau - std::conj(at));
    return x.e(tau) * std::exp(0.5 * x.n * std::log(ratio));
}

int index_tensor(const SL2& A, const WeylElement& w, cd sigma_value, const RootSystem& rs, cd tau) {
    if (w.matrix.rows() != static_cast<std::size_t>(rs.rank))
        throw Error(ErrorCode::dimension_mismatch, "Weyl element of the wrong rank");
    const int n = rs.rank, p = n / 2, eps = epsilon_of(A);
    cd z = sigma_value / std::pow(d_of(A, tau), p);
    if (n % 2 == 0) {
        int shift;
        if (std::abs(z - 1.0) < 1e-6) shift = 0;
        else if (std::abs(z + 1.0) < 1e-6) shift = 2;
        else throw Error(ErrorCode::branch_ambiguity, "sigma / d^p is not a sign");
        return mod4(2LL * eps * p + shift);
    }
    return mod4(2LL * eps * p + index_2d({A, std::nullopt, z, eps}));
}

int index_tensor_blocks(const SL2& A, cd sigma_value, int n, cd tau) {
    const int eps = epsilon_of(A);
    cd r = std::sqrt(d_of(A, tau));
    cd s = sigma_value / std::pow(r, n);
    int shift;
    if (std::abs(s - 1.0) < 1e-6) shift = 0;
    else if (std::abs(s + 1.0) < 1e-6) shift = 2;
    else throw Error(ErrorCode::branch_ambiguity, "sigma is not a product of block roots");
    return mod4(static_cast<long long>(n) * index_2d({A, std::nullopt, r, eps}) + shift);
}

int metaplectic_index(const M2Element& x, const RootSystem& rs) {
    if (std::llabs(x.A.trace()) <= 2)
        throw Error(ErrorCode::non_hyperbolic, "index needs |tr A| > 2, got " + to_string(x.A));
    WeylElement id{IntMatrix::identity(rs.rank), 1};
    for (const cd& tau : index_taus) {
        try {
            return index_tensor(x.A, id, sigma(x, tau), rs, tau);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::branch_ambiguity) throw;
        }
    }
    throw Error(ErrorCode::branch_ambiguity, "index unresolved at all sample points");
}

} // namespace wrt
