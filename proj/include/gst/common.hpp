#pragma once

// Shared scaffolding for the genus-spectrum toolkit: exact 64-bit integer
// arithmetic with overflow detection, small prime utilities, and the error
// taxonomy used across modules.  All quantities in this library are exact
// integers; any operation that would wrap raises gst::overflow_error rather
// than returning a wrapped value.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gst {

using i64 = long long;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid arguments (non-prime base, out-of-range parameters, ...).
struct domain_error : error {
    explicit domain_error(const std::string& what) : error(what) {}
};

// 64-bit overflow detected during an exact computation.
struct overflow_error : error {
    explicit overflow_error(const std::string& what) : error(what) {}
};

// A table row needs a generation-type flag that was not supplied.
struct flag_required_error : error {
    explicit flag_required_error(const std::string& what) : error(what) {}
};

// The requested profile falls outside every encoded table regime.
struct table_range_error : error {
    explicit table_range_error(const std::string& what) : error(what) {}
};

// A spectrum window is too small to confirm the requested quantity.
struct window_error : error {
    explicit window_error(const std::string& what) : error(what) {}
};

inline i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in addition");
    return r;
}

inline i64 checked_sub(i64 a, i64 b) {
    i64 r;
    if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in subtraction");
    return r;
}

inline i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in multiplication");
    return r;
}

// p^k with overflow detection; k >= 0.
inline i64 ipow(i64 p, i64 k) {
    if (k < 0) throw domain_error("ipow: negative exponent");
    i64 r = 1;
    for (i64 i = 0; i < k; ++i) r = checked_mul(r, p);
    return r;
}

// Exact halving; every table entry and genus term this library halves is even
// by construction (odd p), so an odd argument signals a logic error upstream.
inline i64 half_exact(i64 x) {
    if (x % 2 != 0) throw domain_error("half_exact: odd argument");
    return x / 2;
}

inline bool is_odd_prime(i64 p) {
    if (p < 3 || p % 2 == 0) return false;
    for (i64 d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

inline void require_odd_prime(i64 p) {
    if (!is_odd_prime(p)) throw domain_error("base must be an odd prime >= 3");
}

}  // namespace gst
