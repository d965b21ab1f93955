#pragma once

#include <complex>
#include <string>
#include <vector>

namespace wrt {

using cd = std::complex<double>;

// Integer 2x2 matrix [[a,b],[c,d]] of determinant one.
struct SL2 {
    long long a = 1, b = 0, c = 0, d = 1;

    long long trace() const { return a + d; }
    bool operator==(const SL2&) const = default;
};

SL2 operator*(const SL2& x, const SL2& y);
SL2 inverse(const SL2& x);
SL2 operator-(const SL2& x);
SL2 sl2_power(const SL2& x, long long e);
std::string to_string(const SL2& x);

inline constexpr SL2 S_gen{0, -1, 1, 0};
inline constexpr SL2 T_gen{1, 1, 0, 1};

// A.tau = (a tau - b) / (-c tau + d)
cd mobius(const SL2& A, cd tau);
// principal branch of (-c tau + d)^{n/2}; the constant i^n |d|^{n/2} when c = 0, d < 0
cd canonical_branch(const SL2& A, cd tau, int n);

enum class Letter { S, T, Gamma, Minus };

struct WordLetter {
    Letter gen;
    long long exp;
    bool operator==(const WordLetter&) const = default;
};

// Word in S, T, the central generator gamma of the M-infinity extension (token G)
// and the central element (I,-1) of M2 (token -).
class ModularWord {
public:
    ModularWord() = default;
    explicit ModularWord(std::vector<WordLetter> letters);

    static ModularWord parse(const std::string& text);

    const std::vector<WordLetter>& letters() const { return letters_; }
    const SL2& matrix() const { return matrix_; }
    bool empty() const { return letters_.empty(); }
    bool contains(Letter l) const;
    std::string str() const;

    ModularWord operator*(const ModularWord& o) const;
    ModularWord inverse() const;

private:
    std::vector<WordLetter> letters_;
    SL2 matrix_;
};

ModularWord sl2_to_word(const SL2& A);

// Element (A, e) of the extension M2 attached to rank n, where
// e = branch * canonical_branch(A, ., n).
struct M2Element {
    SL2 A;
    int branch = 1;
    int n = 1;

    cd e(cd tau) const { return double(branch) * canonical_branch(A, tau, n); }
    bool operator==(const M2Element&) const = default;
};

M2Element m2_identity(int n);
M2Element m2_compose(const M2Element& x, const M2Element& y);
M2Element m2_inverse(const M2Element& x);
// Letters S, T map to (S,+), (T,+); '-' maps to (I,-1). G is rejected.
M2Element m2_from_word(const ModularWord& w, int n);
// Word evaluating to the given element under m2_from_word.
ModularWord word_for(const M2Element& x);

// Element (A, z) of Mp(2,Z) with z^2 = -c tau + d.
struct MpElement {
    SL2 A;
    int branch = 1;

    cd z(cd tau) const { return double(branch) * canonical_branch(A, tau, 1); }
    bool operator==(const MpElement&) const = default;
};

MpElement mp_compose(const MpElement& x, const MpElement& y);
MpElement mp_inverse(const MpElement& x);
MpElement mp_from_word(const ModularWord& w);
// (A, z) -> (A, z * (-c tau + d)^p) for odd rank n = 2p + 1
M2Element mp_to_m2(const MpElement& x, int n);
ModularWord word_for(const MpElement& x);

} // namespace wrt
