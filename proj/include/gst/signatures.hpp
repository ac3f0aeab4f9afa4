#pragma once

// Signatures, the genus maps, and the cone order.
//
// A signature sigma = (h; m_1, ..., m_e) records an orbit genus h and the
// multiplicities m_i of elliptic generators of order p^i.  The reduced genus
// map is
//     g~(sigma) = (h-1) p^e + Sum_i (p^e - p^{e-i})/2 * m_i,
// and the full genus is g = p^{n-e} g~ + 1.  The level N(sigma) is the
// largest index with m_N != 0 (0 if none).
//
// The cone C(sigma) consists of the signatures (h'; m') with h' >= h,
// m'_i >= m_i and the same level; the reduced genera attained on C(sigma)
// are exactly g~(sigma) + p^{e-N} Omega_N(p).

#include <vector>

#include "gst/omega.hpp"

namespace gst {

struct PrimeProfile {
    i64 p = 3;
    i64 n = 4;
    i64 e = 2;
};

// Structural violations of the (p, n, e) ranges, as human-readable strings.
inline std::vector<std::string> validate_prime_profile(const PrimeProfile& pr) {
    std::vector<std::string> v;
    if (!is_odd_prime(pr.p)) v.push_back("p must be an odd prime >= 3");
    if (pr.n < 4) v.push_back("n must be >= 4");
    if (pr.e < 2 || pr.e > pr.n) v.push_back("e must satisfy 2 <= e <= n");
    if (!v.empty()) return v;
    if (pr.n == pr.p + 1 && pr.e != 2) v.push_back("n = p+1 forces e = 2");
    if (pr.n >= pr.p + 2) {
        i64 lo = 2 + (pr.e - 1) * (pr.p - 1);
        i64 hi = 1 + pr.e * (pr.p - 1);
        if (pr.n < lo || pr.n > hi)
            v.push_back("n must satisfy 2+(e-1)(p-1) <= n <= 1+e(p-1)");
    }
    if (pr.n < pr.p + 1) v.push_back("n must be >= p+1");
    return v;
}

struct Signature {
    i64 h = 0;
    std::vector<i64> m;  // m_1 .. m_e

    i64 mi(i64 i) const { return m.at(static_cast<size_t>(i - 1)); }
};

// Largest k with m_k != 0; 0 when all m_i vanish.
inline i64 level(const Signature& sig) {
    for (i64 k = static_cast<i64>(sig.m.size()); k >= 1; --k)
        if (sig.mi(k) != 0) return k;
    return 0;
}

inline i64 reduced_genus(const Signature& sig, const PrimeProfile& pr) {
    if (static_cast<i64>(sig.m.size()) != pr.e)
        throw domain_error("reduced_genus: signature length must equal e");
    i64 pe = ipow(pr.p, pr.e);
    i64 g = checked_mul(sig.h - 1, pe);
    for (i64 i = 1; i <= pr.e; ++i)
        g = checked_add(g, checked_mul(omega_weight(pr.p, pr.e, i), sig.mi(i)));
    return g;
}

inline i64 genus(const Signature& sig, const PrimeProfile& pr) {
    return checked_add(checked_mul(ipow(pr.p, pr.n - pr.e), reduced_genus(sig, pr)), 1);
}

inline bool cone_contains(const Signature& base, const Signature& cand) {
    if (base.m.size() != cand.m.size())
        throw domain_error("cone_contains: signature lengths differ");
    if (cand.h < base.h) return false;
    for (size_t i = 0; i < base.m.size(); ++i)
        if (cand.m[i] < base.m[i]) return false;
    return level(cand) == level(base);
}

// True iff some signature in C(base) attains target as its reduced genus,
// i.e. (target - g~(base)) / p^{e-N} is a nonnegative member of Omega_N(p).
inline bool cone_reaches(const Signature& base, const PrimeProfile& pr, i64 target) {
    i64 diff = checked_sub(target, reduced_genus(base, pr));
    if (diff < 0) return false;
    i64 N = level(base);
    i64 scale = ipow(pr.p, pr.e - N);
    if (diff % scale != 0) return false;
    return omega_contains(OmegaLevel{pr.p, N}, diff / scale);
}

}  // namespace gst
