#pragma once

// The diophantine solution sets Omega_N(p).
//
// Omega_N(p) is the set of values
//     y = h p^N + Sum_{i=1..N} (p^N - p^{N-i})/2 * x_i,   h, x_i >= 0,
// with Omega_0(p) := the natural numbers by convention.  Membership for
// y >= 1 is decided by the digit criterion
//     S_N(2y) >= (N - tau(y)) (p - 1),
// where S_N is the digit sum of the truncated expansion of 2y at level N and
// tau(y) is the index of its first nonzero digit.  An independent exhaustive
// search (omega_brute) over the finite region h <= y/p^N,
// x_i <= 2y/(p^N - p^{N-i}) serves as oracle.
//
// sigma_stable(p, e) = [e(p-1)p^e - 3(p^e - 1)]/2 is the least value from
// which Omega_e(p) contains every integer; the canonical witness is h = 0,
// x_1 = ... = x_{e-1} = p-1, x_e = p-3.

#include <optional>
#include <vector>

#include "gst/padic.hpp"

namespace gst {

struct OmegaLevel {
    i64 p = 3;
    i64 level = 0;
};

struct OmegaSolution {
    i64 h = 0;
    std::vector<i64> x;  // x_1 .. x_N

    i64 value(const OmegaLevel& lv) const {
        i64 pN = ipow(lv.p, lv.level);
        i64 v = checked_mul(h, pN);
        for (size_t i = 0; i < x.size(); ++i) {
            i64 wi = half_exact(checked_sub(pN, ipow(lv.p, lv.level - static_cast<i64>(i) - 1)));
            v = checked_add(v, checked_mul(wi, x[i]));
        }
        return v;
    }
};

// The coefficient (p^N - p^{N-i})/2 of x_i.
inline i64 omega_weight(i64 p, i64 N, i64 i) {
    return half_exact(checked_sub(ipow(p, N), ipow(p, N - i)));
}

inline bool omega_contains(const OmegaLevel& lv, i64 y) {
    require_odd_prime(lv.p);
    if (lv.level < 0) throw domain_error("omega_contains: negative level");
    if (y < 0) return false;
    if (lv.level == 0) return true;  // Omega_0(p) = N by convention
    if (y == 0) return true;         // trivial all-zero solution
    TruncatedExpansion x = truncated_expansion(checked_mul(2, y), lv.p, lv.level);
    i64 S = digit_sum(x);
    i64 t = tau(y, lv.p, lv.level);
    return S >= checked_mul(lv.level - t, lv.p - 1);
}

inline std::optional<OmegaSolution> omega_brute(const OmegaLevel& lv, i64 y) {
    require_odd_prime(lv.p);
    if (lv.level < 1) throw domain_error("omega_brute: requires level >= 1");
    if (y < 0) return std::nullopt;
    const i64 N = lv.level;
    std::vector<i64> w(static_cast<size_t>(N) + 1);
    w[0] = ipow(lv.p, N);  // the h coefficient
    for (i64 i = 1; i <= N; ++i) w[static_cast<size_t>(i)] = omega_weight(lv.p, N, i);

    // Coin-style reachability over [0, y]: used[v] records which weight last
    // extended a reachable value, giving a witness by walking back.
    std::vector<int> used(static_cast<size_t>(y) + 1, -1);
    std::vector<char> reach(static_cast<size_t>(y) + 1, 0);
    reach[0] = 1;
    for (size_t i = 0; i < w.size(); ++i) {
        for (i64 v = w[i]; v <= y; ++v)
            if (!reach[static_cast<size_t>(v)] && reach[static_cast<size_t>(v - w[i])]) {
                reach[static_cast<size_t>(v)] = 1;
                used[static_cast<size_t>(v)] = static_cast<int>(i);
            }
    }
    if (!reach[static_cast<size_t>(y)]) return std::nullopt;
    OmegaSolution sol;
    sol.x.assign(static_cast<size_t>(N), 0);
    for (i64 v = y; v > 0;) {
        int i = used[static_cast<size_t>(v)];
        if (i == 0)
            ++sol.h;
        else
            ++sol.x[static_cast<size_t>(i - 1)];
        v -= w[static_cast<size_t>(i)];
    }
    return sol;
}

inline i64 sigma_stable(i64 p, i64 e) {
    require_odd_prime(p);
    if (e < 1) throw domain_error("sigma_stable: requires e >= 1");
    i64 pe = ipow(p, e);
    i64 t = checked_mul(checked_mul(e, p - 1), pe);
    return half_exact(checked_sub(t, checked_mul(3, checked_sub(pe, 1))));
}

}  // namespace gst
