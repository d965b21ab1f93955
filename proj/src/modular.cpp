#include "wrt/modular.hpp"
#include "wrt/errors.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <sstream>

namespace wrt {

namespace {

long long checked_mul(long long x, long long y) {
    long long r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(ErrorCode::size_guard, "SL(2,Z) entry overflow");
    return r;
}

long long checked_add(long long x, long long y) {
    long long r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::size_guard, "SL(2,Z) entry overflow");
    return r;
}

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

constexpr double branch_tol = 1e-6;

const std::array<cd, 8> sample_points = {
    cd(0.0, 1.0),  cd(0.37, 1.21), cd(-0.53, 0.81), cd(1.3, 0.6),
    cd(0.11, 2.7), cd(-1.7, 1.9),  cd(0.77, 0.33), cd(2.4, 3.1)};

// Sign s with value(tau) = s * canonical_branch(C, tau, n), decided at two
// sample points that agree.
int resolve_branch(const std::function<cd(cd)>& value, const SL2& C, int n) {
    int first = 0;
    for (const cd& tau : sample_points) {
        cd r = value(tau) / canonical_branch(C, tau, n);
        double dp = std::abs(r - 1.0), dm = std::abs(r + 1.0);
        int s = 0;
        if (dp < branch_tol && dm > branch_tol) s = 1;
        else if (dm < branch_tol && dp > branch_tol) s = -1;
        if (s == 0) continue;
        if (first == 0) first = s;
        else if (s == first) return s;
        else throw Error(ErrorCode::branch_ambiguity, "branch samples disagree for " + to_string(C));
    }
    throw Error(ErrorCode::branch_ambiguity, "branch unresolved for " + to_string(C));
}

} // namespace

SL2 operator*(const SL2& x, const SL2& y) {
    return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
            checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
            checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
            checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

SL2 inverse(const SL2& x) { return {x.d, -x.b, -x.c, x.a}; }

SL2 operator-(const SL2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

SL2 sl2_power(const SL2& x, long long e) {
    SL2 base = e < 0 ? inverse(x) : x;
    SL2 r;
    for (unsigned long long m = e < 0 ? -static_cast<unsigned long long>(e) : e; m; m >>= 1) {
        if (m & 1) r = r * base;
        if (m > 1) base = base * base;
    }
    return r;
}

std::string to_string(const SL2& x) {
    std::ostringstream os;
    os << "[[" << x.a << "," << x.b << "],[" << x.c << "," << x.d << "]]";
    return os.str();
}

cd mobius(const SL2& A, cd tau) {
    return (double(A.a) * tau - double(A.b)) / (-double(A.c) * tau + double(A.d));
}

cd canonical_branch(const SL2& A, cd tau, int n) {
    if (A.c == 0 && A.d < 0)
        return std::pow(cd(0, 1), n) * std::pow(double(-A.d), 0.5 * n);
    cd j = -double(A.c) * tau + double(A.d);
    return std::exp(0.5 * n * std::log(j));
}

ModularWord::ModularWord(std::vector<WordLetter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_) {
        if (l.gen == Letter::S) matrix_ = matrix_ * sl2_power(S_gen, l.exp);
        else if (l.gen == Letter::T) matrix_ = matrix_ * sl2_power(T_gen, l.exp);
    }
}

ModularWord ModularWord::parse(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<WordLetter> out;
    while (in >> tok) {
        if (tok == "-") {
            out.push_back({Letter::Minus, 1});
            continue;
        }
        char g = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        Letter l;
        if (g == 'S') l = Letter::S;
        else if (g == 'T') l = Letter::T;
        else if (g == 'G') l = Letter::Gamma;
        else throw Error(ErrorCode::invalid_word, "unknown token '" + tok + "'");
        long long e = 1;
        if (tok.size() > 1) {
            if (tok[1] != '^' || tok.size() < 3)
                throw Error(ErrorCode::invalid_word, "malformed token '" + tok + "'");
            std::string ex = tok.substr(2);
            std::size_t used = 0;
            try {
                e = std::stoll(ex, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != ex.size() || used == 0)
                throw Error(ErrorCode::invalid_word, "malformed exponent in '" + tok + "'");
        }
        if (e != 0) out.push_back({l, e});
    }
    return ModularWord(std::move(out));
}

bool ModularWord::contains(Letter l) const {
    for (const auto& x : letters_)
        if (x.gen == l) return true;
    return false;
}

std::string ModularWord::str() const {
    std::string s;
    for (const auto& l : letters_) {
        if (!s.empty()) s += ' ';
        if (l.gen == Letter::Minus) {
            s += '-';
            continue;
        }
        s += l.gen == Letter::S ? 'S' : l.gen == Letter::T ? 'T' : 'G';
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

ModularWord ModularWord::operator*(const ModularWord& o) const {
    std::vector<WordLetter> l = letters_;
    l.insert(l.end(), o.letters_.begin(), o.letters_.end());
    return ModularWord(std::move(l));
}

ModularWord ModularWord::inverse() const {
    std::vector<WordLetter> l;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        l.push_back({it->gen, it->gen == Letter::Minus ? 1 : -it->exp});
    return ModularWord(std::move(l));
}

ModularWord sl2_to_word(const SL2& A) {
    if (checked_add(checked_mul(A.a, A.d), -checked_mul(A.b, A.c)) != 1)
        throw Error(ErrorCode::invalid_argument, "determinant of " + to_string(A) + " is not 1");
    std::vector<WordLetter> w;
    SL2 M = A;
    while (M.c != 0) {
        long long q = floor_div(M.a, M.c);
        if (q != 0) {
            w.push_back({Letter::T, q});
            M = sl2_power(T_gen, -q) * M;
        }
        w.push_back({Letter::S, 1});
        M = inverse(S_gen) * M;
    }
    if (M.a == 1) {
        if (M.b != 0) w.push_back({Letter::T, M.b});
    } else {
        w.push_back({Letter::S, 1});
        w.push_back({Letter::S, 1});
        if (M.b != 0) w.push_back({Letter::T, -M.b});
    }
    return ModularWord(std::move(w));
}

M2Element m2_identity(int n) { return {SL2{}, 1, n}; }

M2Element m2_compose(const M2Element& x, const M2Element& y) {
    if (x.n != y.n) throw Error(ErrorCode::invalid_argument, "m2_compose: rank mismatch");
    SL2 C = x.A * y.A;
    auto value = [&](cd tau) { return x.e(mobius(y.A, tau)) * y.e(tau); };
    return {C, resolve_branch(value, C, x.n), x.n};
}

M2Element m2_inverse(const M2Element& x) {
    SL2 Ai = inverse(x.A);
    for (int b : {1, -1}) {
        M2Element cand{Ai, b, x.n};
        if (m2_compose(x, cand).branch == 1) return cand;
    }
    throw Error(ErrorCode::branch_ambiguity, "m2_inverse failed");
}

M2Element m2_from_word(const ModularWord& w, int n) {
    const M2Element s{S_gen, 1, n}, t{T_gen, 1, n}, minus{SL2{}, -1, n};
    const M2Element si = m2_inverse(s), ti = m2_inverse(t);
    M2Element r = m2_identity(n);
    for (const auto& l : w.letters()) {
        if (l.gen == Letter::Gamma)
            throw Error(ErrorCode::invalid_word, "G is not an element of M2 or Mp");
        if (l.gen == Letter::Minus) {
            r = m2_compose(r, minus);
            continue;
        }
        const M2Element& g = l.gen == Letter::S ? (l.exp > 0 ? s : si) : (l.exp > 0 ? t : ti);
        for (long long i = 0; i < std::llabs(l.exp); ++i) r = m2_compose(r, g);
    }
    return r;
}

ModularWord word_for(const M2Element& x) {
    ModularWord w = sl2_to_word(x.A);
    if (m2_from_word(w, x.n).branch != x.branch)
        return ModularWord({{Letter::Minus, 1}}) * w;
    return w;
}

MpElement mp_compose(const MpElement& x, const MpElement& y) {
    M2Element r = m2_compose({x.A, x.branch, 1}, {y.A, y.branch, 1});
    return {r.A, r.branch};
}

MpElement mp_inverse(const MpElement& x) {
    M2Element r = m2_inverse({x.A, x.branch, 1});
    return {r.A, r.branch};
}

MpElement mp_from_word(const ModularWord& w) {
    M2Element r = m2_from_word(w, 1);
    return {r.A, r.branch};
}

M2Element mp_to_m2(const MpElement& x, int n) {
    if (n % 2 == 0) throw Error(ErrorCode::wrong_parity, "Mp(2,Z) maps to M2 only for odd rank");
    // z * (-c tau + d)^p and the canonical branch of rank n share the same sign bit
    return {x.A, x.branch, n};
}

ModularWord word_for(const MpElement& x) { return word_for(M2Element{x.A, x.branch, 1}); }

} // namespace wrt
