#pragma once

// Exact base-p arithmetic utilities.
//
// A truncated p-adic expansion writes m = a_0 + a_1 p + ... + a_e p^e with
// 0 <= a_i < p for i < e and a_e carrying the unbounded remainder.  The digit
// sum S_e and the index tau of the first nonzero digit of 2N drive the
// membership criterion for the diophantine solution sets Omega_N(p).
//
// The order-class index k(i) is the unique integer >= -1 with
//     i + k(i)(p-1) <= n - p < i + (k(i)+1)(p-1),
// which determines the common element order p^{k(i)+2} on the layer
// G_i \ G_{i+1} of a maximal class group of order p^n, n >= p+2.

#include <numeric>
#include <vector>

#include "gst/common.hpp"

namespace gst {

struct TruncatedExpansion {
    i64 p = 3;
    i64 level = 0;
    std::vector<i64> digits;  // a_0 .. a_level

    // Reconstructs the expanded value Sum a_i p^i.
    i64 value() const {
        i64 v = 0;
        for (i64 i = static_cast<i64>(digits.size()) - 1; i >= 0; --i)
            v = checked_add(checked_mul(v, p), digits[static_cast<size_t>(i)]);
        return v;
    }
};

inline TruncatedExpansion truncated_expansion(i64 m, i64 p, i64 level) {
    require_odd_prime(p);
    if (m < 0) throw domain_error("truncated_expansion: m must be nonnegative");
    if (level < 0) throw domain_error("truncated_expansion: level must be nonnegative");
    TruncatedExpansion x;
    x.p = p;
    x.level = level;
    x.digits.assign(static_cast<size_t>(level) + 1, 0);
    for (i64 i = 0; i < level; ++i) {
        x.digits[static_cast<size_t>(i)] = m % p;
        m /= p;
    }
    x.digits[static_cast<size_t>(level)] = m;  // unbounded top digit
    return x;
}

inline i64 digit_sum(const TruncatedExpansion& x) {
    i64 s = 0;
    for (i64 d : x.digits) s = checked_add(s, d);
    return s;
}

// Index of the first nonzero digit in the truncated expansion of 2N.
// Defined only for N >= 1.
inline i64 tau(i64 N, i64 p, i64 level) {
    if (N < 1) throw domain_error("tau: undefined for N = 0");
    TruncatedExpansion x = truncated_expansion(checked_mul(2, N), p, level);
    for (size_t i = 0; i < x.digits.size(); ++i)
        if (x.digits[i] != 0) return static_cast<i64>(i);
    throw domain_error("tau: expansion of a positive value has no nonzero digit");
}

// The unique k >= -1 with i + k(p-1) <= n-p < i + (k+1)(p-1); requires n >= p+2.
inline i64 order_class_index(i64 i, i64 p, i64 n) {
    require_odd_prime(p);
    if (n < p + 2) throw domain_error("order_class_index: requires n >= p+2");
    if (i < 1 || i > n - 1) throw domain_error("order_class_index: requires 1 <= i <= n-1");
    i64 num = n - p - i;
    // floor division toward minus infinity; num >= 1-p so the result is >= -1.
    i64 k = num >= 0 ? num / (p - 1) : -((-num + p - 2) / (p - 1));
    return k;
}

// The exponent e of a maximal class group of order p^n:
// for n >= p+2 the unique e with 1+(e-2)(p-1) <= n-p < 1+(e-1)(p-1)
// (equivalently k(1)+2); for n = p+1 the exponent is p^2.
inline i64 exponent_from_order(i64 p, i64 n) {
    require_odd_prime(p);
    if (n == p + 1) return 2;
    return order_class_index(1, p, n) + 2;
}

}  // namespace gst
