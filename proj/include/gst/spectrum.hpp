#pragma once

// Genus-spectrum assembly, enumeration, and extremes.
//
// The reduced spectrum of a group matching a profile is assembled two
// independent ways:
//   * assemble(): the F-set form  sp~ = Union_{N=0..e} p^{e-N} (F_N + Omega_N),
//     with the F_N rows taken from three tables (e >= 3; e = 2 with
//     |G| >= p^{p+2}; |G| = p^{p+1}).  An empty F_N contributes nothing, and
//     the N = 0 term ranges over omega >= 1 so that F_0 = {0} emits the
//     positive multiples of p^e.
//   * enumerate_window(): direct admissible-signature search over the finite
//     box h <= bound/p^e + 1, m_i <= 2 bound/(p^e - p^{e-i}) + 1, which is
//     exhaustive for reduced genus <= bound.
// Both paths keep only reduced genus >= 1: the spectrum collects surface
// genera g >= 2 and g = p^{n-e} g~ + 1.
// Agreement of the two paths on a window is the principal correctness check.
//
// min_genus() returns the closed-form reduced minimum in the n >= p+2, e >= 3
// regime and falls back to enumeration elsewhere; stable_upper() locates the
// least s with [s, bound] fully contained in the window, confirmed by a p^e
// margin.

#include <algorithm>
#include <set>

#include "gst/group_profile.hpp"

namespace gst {

struct FSetFamily {
    i64 p = 3;
    i64 e = 2;
    std::vector<std::vector<i64>> sets;  // sets[N] = F_N, sorted, N = 0..e
};

namespace detail {

inline void put(std::vector<std::vector<i64>>& F, i64 N, i64 v) {
    if (v < 0) throw domain_error("f_sets: negative table entry");
    F[static_cast<size_t>(N)].push_back(v);
}

inline bool need_flag(const std::optional<bool>& f, const char* what) {
    if (!f) throw flag_required_error(std::string("f_sets: row requires the ") + what + " flag");
    return *f;
}

// e >= 3 table (both ed classes).
inline void f_sets_e3(const GroupProfile& gp, std::vector<std::vector<i64>>& F) {
    const i64 p = gp.p(), e = gp.e();
    const bool ed1 = gp.ed_class == EdClass::One;
    auto P = [&](i64 k) { return ipow(p, k); };
    // (a p^N - b p^{N-1} - c p^{N-2} - 1)/2, the recurring entry shape.
    auto abc = [&](i64 N, i64 a, i64 b, i64 c) {
        return half_exact(a * P(N) - b * P(N - 1) - c * P(N - 2) - 1);
    };
    if (ed1) put(F, 0, 0);

    switch (gp.type_class) {
        case TypeClass::I:
            if (!ed1) {
                put(F, e, P(e));
                put(F, e, half_exact(P(e) - 1));
                put(F, e, half_exact(P(e) - 2 * P(e - 1) - 1));
                put(F, 1, p - 1);
                put(F, 1, half_exact(p - 3));
            } else {
                put(F, e, P(e) - 1);
                put(F, e, half_exact(3 * P(e) - 2 * P(e - 1) - 1));
                put(F, e, half_exact(P(e) - 2 * P(e - 1) - 1));
                put(F, 1, p - 1);
                put(F, 1, half_exact(3 * p - 1));
                put(F, 1, half_exact(p - 3));
            }
            for (i64 N = 2; N <= e - 1; ++N) {
                if (ed1) put(F, N, half_exact(3 * P(N) - 1));
                put(F, N, abc(N, 3, 2, 0));
                put(F, N, abc(N, 2, 3, 0));
            }
            break;
        case TypeClass::II:
            if (!ed1) {
                put(F, e, P(e));
                put(F, e, half_exact(P(e) - 1));
                put(F, e, half_exact(P(e) - 2 * P(e - 2) - 1));
                put(F, 2, P(2) - 1);
                put(F, 2, half_exact(P(2) - 3));
            } else {
                put(F, e, P(e) - 1);
                put(F, e, half_exact(3 * P(e) - 2 * P(e - 2) - 1));
                put(F, e, half_exact(P(e) - 2 * P(e - 2) - 1));
                put(F, 2, P(2) - 1);
                put(F, 2, half_exact(3 * P(2) - 1));
                put(F, 2, half_exact(P(2) - 3));
                put(F, 1, half_exact(3 * p - 1));
            }
            for (i64 N = 3; N <= e - 1; ++N) {
                if (ed1) put(F, N, half_exact(3 * P(N) - 1));
                put(F, N, abc(N, 3, 0, 2));
                put(F, N, abc(N, 2, 0, 3));
            }
            break;
        case TypeClass::III:
            if (!ed1) {
                put(F, e, P(e));
                put(F, e, half_exact(P(e) - 1));
                for (auto [a, b] : {std::pair<i64, i64>{0, 2}, {1, 1}, {2, 0}})
                    put(F, e, abc(e, 1, a, b));
                // p - 1 arises from (1; 2, 0, ..., 0), admissible here exactly
                // as for the other p-in-||G*_0|| types.
                put(F, 1, p - 1);
                put(F, 1, half_exact(p - 3));
            } else {
                put(F, e, P(e) - 1);
                for (i64 a : {1, 3})
                    for (auto [b, c] : {std::pair<i64, i64>{2, 0}, {1, 1}, {0, 2}})
                        put(F, e, abc(e, a, b, c));
                put(F, 1, p - 1);
                put(F, 1, half_exact(3 * p - 1));
                put(F, 1, half_exact(p - 3));
            }
            put(F, 2, P(2) - 1);
            if (ed1) put(F, 2, half_exact(3 * P(2) - 1));
            put(F, 2, half_exact(3 * P(2) - 2 * p - 1));
            for (auto [b, c] : {std::pair<i64, i64>{2, 1}, {1, 2}, {0, 3}})
                put(F, 2, half_exact(P(2) - b * p - c));
            for (i64 N = 3; N <= e - 1; ++N) {
                if (ed1) put(F, N, half_exact(3 * P(N) - 1));
                for (auto [a, b, c] : {std::tuple<i64, i64, i64>{3, 2, 0},
                                       {3, 0, 2},
                                       {2, 3, 0},
                                       {2, 2, 1},
                                       {2, 1, 2},
                                       {2, 0, 3}})
                    put(F, N, abc(N, a, b, c));
            }
            break;
        case TypeClass::IV:
            if (!ed1) {
                put(F, e, P(e));
                put(F, e, half_exact(P(e) - 1));
                put(F, e, abc(e, 1, 1, 1));
                put(F, e, abc(e, 1, 0, 2));
                put(F, 1, p - 1);
            } else {
                put(F, e, P(e) - 1);
                for (i64 a : {1, 3})
                    for (auto [b, c] : {std::pair<i64, i64>{1, 1}, {0, 2}})
                        put(F, e, abc(e, a, b, c));
                put(F, 1, p - 1);
                put(F, 1, half_exact(3 * p - 1));
            }
            put(F, 2, P(2) - 1);
            if (ed1) put(F, 2, half_exact(3 * P(2) - 1));
            put(F, 2, half_exact(3 * P(2) - 2 * p - 1));
            put(F, 2, half_exact(P(2) - p - 2));
            for (i64 N = 3; N <= e - 1; ++N) {
                if (ed1) put(F, N, half_exact(3 * P(N) - 1));
                for (auto [a, b, c] :
                     {std::tuple<i64, i64, i64>{3, 0, 2}, {3, 2, 0}, {2, 1, 2}})
                    put(F, N, abc(N, a, b, c));
            }
            break;
        case TypeClass::V:
            if (!ed1) {
                put(F, e, P(e));
                put(F, e, half_exact(P(e) - 1));
                put(F, e, abc(e, 1, 1, 1));
                put(F, e, half_exact(P(e) - 2 * P(e - 1) - 1));
                put(F, 1, p - 1);
            } else {
                put(F, e, P(e) - 1);
                for (i64 a : {1, 3})
                    for (auto [b, c] : {std::pair<i64, i64>{1, 1}, {2, 0}})
                        put(F, e, abc(e, a, b, c));
                put(F, 1, p - 1);
                put(F, 1, half_exact(3 * p - 1));
            }
            put(F, 2, P(2) - 1);
            if (ed1) put(F, 2, half_exact(3 * P(2) - 1));
            put(F, 2, half_exact(3 * P(2) - 2 * p - 1));
            put(F, 2, half_exact(P(2) - 2 * p - 1));
            for (i64 N = 3; N <= e - 1; ++N) {
                if (ed1) put(F, N, half_exact(3 * P(N) - 1));
                for (auto [a, b, c] :
                     {std::tuple<i64, i64, i64>{3, 0, 2}, {3, 2, 0}, {2, 2, 1}})
                    put(F, N, abc(N, a, b, c));
            }
            break;
    }
}

// e = 2 table, orders p^{p+2} .. p^{2p-1} (ed >= 2 automatically).
inline void f_sets_e2(const GroupProfile& gp, std::vector<std::vector<i64>>& F) {
    const i64 p = gp.p();
    const i64 p2 = p * p;
    switch (gp.type_class) {
        case TypeClass::I:
            put(F, 2, p2);
            put(F, 2, half_exact(p2 - 1));
            put(F, 2, half_exact(p2 - 2 * p - 1));
            put(F, 1, p - 1);
            put(F, 1, half_exact(p - 3));
            break;
        case TypeClass::II:
            put(F, 2, p2);
            put(F, 2, half_exact(p2 - 1));
            put(F, 2, half_exact(p2 - 3));
            break;
        case TypeClass::III: {
            put(F, 2, p2);
            put(F, 2, half_exact(p2 - 1));
            for (auto [a, b] : {std::pair<i64, i64>{2, 1}, {1, 2}, {0, 3}})
                put(F, 2, half_exact(p2 - a * p - b));
            if (need_flag(gp.ppp_type, "(p,p,p)-type")) {
                put(F, 1, p - 1);
                put(F, 1, half_exact(p - 3));
            } else {
                put(F, 1, p - 1);
                put(F, 1, p - 2);
            }
            break;
        }
        case TypeClass::IV:
            put(F, 2, p2);
            put(F, 2, half_exact(p2 - 1));
            put(F, 2, half_exact(p2 - p - 2));
            put(F, 2, half_exact(p2 - 3));
            put(F, 1, p - 1);
            break;
        case TypeClass::V:
            if (p >= 5) {
                put(F, 2, p2);
                put(F, 2, half_exact(p2 - 1));
                put(F, 2, half_exact(p2 - 2 * p - 1));
                put(F, 1, p - 1);
                put(F, 1, half_exact(p - 3));
            } else {
                put(F, 2, 9);
                put(F, 2, 4);
                // 2 = g((0; 1, 2)); the order-243 3^2-exceptional groups
                // admit that signature with a single order-3 generator.
                put(F, 2, 2);
                put(F, 2, 1);
                put(F, 1, 2);
                put(F, 1, 1);
            }
            break;
    }
}

// |G| = p^{p+1} table; rows keyed additionally by exp(G_1) and, for type III,
// by a generation-type flag.  F_0 = {0} throughout.
inline void f_sets_ord_p_plus_1(const GroupProfile& gp, std::vector<std::vector<i64>>& F) {
    const i64 p = gp.p();
    const i64 p2 = p * p;
    const i64 eg = gp.exp_g1.value_or(0);
    put(F, 0, 0);

    auto row_I = [&] {
        put(F, 2, p2 - 1);
        put(F, 2, half_exact(3 * p2 - 2 * p - 1));
        put(F, 2, half_exact(p2 - 2 * p - 1));
        put(F, 1, half_exact(p - 1));
        put(F, 1, half_exact(p - 3));
    };
    auto row_II_expp = [&] {
        put(F, 2, p2 - 1);
        put(F, 2, half_exact(p2 - 3));
        put(F, 2, half_exact(p2 - p - 2));
        put(F, 1, half_exact(p - 1));
    };
    auto row_III_expp2_notppp_f2 = [&] {
        // Shared by type V with exp(G_1) = p^2, p >= 5.
        put(F, 2, p2 - 1);
        put(F, 2, p2 - 2);
        put(F, 2, half_exact(3 * p2 - 2 * p - 1));
        for (auto [a, b] : {std::pair<i64, i64>{1, 2}, {2, 1}})
            put(F, 2, half_exact(p2 - a * p - b));
    };
    auto row_IV_exp3 = [&] {
        for (i64 v : {1, 2, 7, 8, 10}) put(F, 2, v);
        put(F, 1, 1);
    };

    switch (gp.type_class) {
        case TypeClass::I:
            row_I();
            break;
        case TypeClass::II:
            put(F, 2, p2 - 1);
            put(F, 2, half_exact(p2 - 3));
            if (eg == 1) put(F, 2, half_exact(p2 - p - 2));
            put(F, 1, half_exact(p - 1));
            break;
        case TypeClass::III:
            if (eg == 1) {
                put(F, 2, p2 - 1);
                put(F, 2, p2 - 2);
                put(F, 2, half_exact(3 * p2 - 2 * p - 1));
                if (need_flag(gp.p2_triple_type, "(p^2,p^2,p^2)-type"))
                    put(F, 2, half_exact(p2 - 3));
                for (auto [a, b] : {std::pair<i64, i64>{1, 2}, {2, 1}})
                    put(F, 2, half_exact(p2 - a * p - b));
                put(F, 1, half_exact(p - 1));
                put(F, 1, half_exact(p - 3));
            } else {
                put(F, 2, p2 - 1);
                put(F, 2, half_exact(3 * p2 - 2 * p - 1));
                for (auto [a, b] : {std::pair<i64, i64>{0, 3}, {1, 2}, {2, 1}})
                    put(F, 2, half_exact(p2 - a * p - b));
                if (need_flag(gp.ppp_type, "(p,p,p)-type")) {
                    put(F, 1, half_exact(p - 1));
                    put(F, 1, half_exact(p - 3));
                } else {
                    put(F, 1, p - 2);
                    put(F, 1, half_exact(p - 1));
                }
            }
            break;
        case TypeClass::IV:
            if (eg == 2) {
                row_II_expp();
            } else if (p == 3) {
                row_IV_exp3();
            } else {
                put(F, 2, half_exact(p2 - 2 * p - 1));
                put(F, 2, half_exact(p2 - p - 2));
                put(F, 2, half_exact(p2 - 3));
                put(F, 2, p2 - 1);
                put(F, 2, half_exact(3 * p2 - 2 * p - 1));
                put(F, 1, half_exact(p - 1));
                put(F, 1, p - 2);
            }
            break;
        case TypeClass::V:
            if (eg == 1) {
                row_I();
            } else if (p >= 5) {
                row_III_expp2_notppp_f2();
                put(F, 1, half_exact(p - 1));
                put(F, 1, half_exact(p - 3));
            } else {
                row_IV_exp3();
            }
            break;
    }
}

}  // namespace detail

inline FSetFamily f_sets(const GroupProfile& gp) {
    {
        auto v = validate(gp);
        if (!v.empty()) throw domain_error("f_sets: invalid profile: " + v.front());
    }
    FSetFamily fam;
    fam.p = gp.p();
    fam.e = gp.e();
    fam.sets.assign(static_cast<size_t>(gp.e()) + 1, {});
    if (gp.n() == gp.p() + 1)
        detail::f_sets_ord_p_plus_1(gp, fam.sets);
    else if (gp.e() == 2)
        detail::f_sets_e2(gp, fam.sets);
    else if (gp.e() >= 3)
        detail::f_sets_e3(gp, fam.sets);
    else
        throw table_range_error("f_sets: profile outside every encoded table regime");
    for (auto& s : fam.sets) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    return fam;
}

struct SpectrumWindow {
    GroupProfile profile;
    i64 bound = 0;
    std::vector<i64> reduced_values;      // sorted, within [1, bound]
    i64 min_reduced = 0;
    std::optional<i64> stable_reduced;    // unset when not confirmed by a p^e margin
    std::vector<i64> gaps;                // [min_reduced, bound] \ reduced_values
};

namespace detail {

inline SpectrumWindow finalize_window(const GroupProfile& gp, i64 bound,
                                      const std::set<i64>& values) {
    if (values.empty())
        throw window_error("spectrum window is empty; enlarge the bound");
    SpectrumWindow w;
    w.profile = gp;
    w.bound = bound;
    w.reduced_values.assign(values.begin(), values.end());
    w.min_reduced = w.reduced_values.front();
    // Least s with [s, bound] fully present, accepted only with p^e headroom.
    i64 s = bound + 1;
    for (i64 v = bound; v >= w.min_reduced && values.count(v); --v) s = v;
    if (s <= bound && bound - s >= ipow(gp.p(), gp.e())) w.stable_reduced = s;
    for (i64 v = w.min_reduced; v <= bound; ++v)
        if (!values.count(v)) w.gaps.push_back(v);
    return w;
}

}  // namespace detail

// Theorem-A path: union of the scaled F-set/Omega cosets.
inline SpectrumWindow assemble(const GroupProfile& gp, i64 bound) {
    if (bound < sigma_stable(gp.p(), gp.e()))
        throw domain_error("assemble: bound must be >= sigma_e(p)");
    FSetFamily fam = f_sets(gp);
    std::set<i64> values;
    for (i64 N = 0; N <= gp.e(); ++N) {
        i64 scale = ipow(gp.p(), gp.e() - N);
        OmegaLevel lv{gp.p(), N};
        for (i64 f : fam.sets[static_cast<size_t>(N)]) {
            i64 w0 = (N == 0) ? 1 : 0;  // Omega_0 ranges over {1, 2, ...} here
            for (i64 w = w0; checked_mul(scale, checked_add(f, w)) <= bound; ++w) {
                i64 val = scale * (f + w);
                // Reduced genera start at 1 (genus 1 actions fall outside the
                // spectrum, which collects surface genera >= 2).
                if (val >= 1 && (N == 0 || omega_contains(lv, w))) values.insert(val);
            }
        }
    }
    return detail::finalize_window(gp, bound, values);
}

// Independent path: exhaustive admissible-signature search over the finite
// box that covers every signature of reduced genus <= bound.
inline SpectrumWindow enumerate_window(const GroupProfile& gp, i64 bound) {
    {
        auto v = validate(gp);
        if (!v.empty()) throw domain_error("enumerate_window: invalid profile: " + v.front());
    }
    if (bound < 0) throw domain_error("enumerate_window: bound must be nonnegative");
    const i64 p = gp.p(), e = gp.e();
    const i64 pe = ipow(p, e);
    std::vector<i64> weight(static_cast<size_t>(e));
    std::vector<i64> mmax(static_cast<size_t>(e));
    for (i64 i = 1; i <= e; ++i) {
        weight[static_cast<size_t>(i - 1)] = omega_weight(p, e, i);
        mmax[static_cast<size_t>(i - 1)] = 2 * bound / (pe - ipow(p, e - i)) + 1;
    }
    const i64 hmax = bound / pe + 1;

    std::set<i64> values;
    Signature sig;
    sig.m.assign(static_cast<size_t>(e), 0);
    auto rec = [&](auto&& self, size_t i, i64 wsum) -> void {
        if (i == sig.m.size()) {
            for (sig.h = 0; sig.h <= hmax; ++sig.h) {
                i64 g = (sig.h - 1) * pe + wsum;
                if (g > bound) break;
                if (g >= 1 && admissible(gp, sig)) values.insert(g);
            }
            return;
        }
        for (i64 v = 0; v <= mmax[i]; ++v) {
            i64 ws = wsum + v * weight[i];
            if (ws > bound + pe) break;  // even h = 0 overshoots from here on
            sig.m[i] = v;
            self(self, i + 1, ws);
        }
        sig.m[i] = 0;
    };
    rec(rec, 0, 0);
    return detail::finalize_window(gp, bound, values);
}

// Reduced minimum genus: closed forms in the n >= p+2, e >= 3 regime,
// enumeration elsewhere.
inline i64 min_genus(const GroupProfile& gp) {
    const i64 p = gp.p(), e = gp.e();
    if (gp.n() >= p + 2 && e >= 3) {
        switch (gp.uniform_orders) {
            case UniformOrders::P:
                // For p = 3 the generic term (p-3)p^{e-1}/2 vanishes and the
                // minimum comes from the level-e signature (0; 2, 0, ..., 0, 1)
                // instead: (3^{e-1} - 1)/2.
                return p >= 5 ? half_exact(p - 3) * ipow(p, e - 1)
                              : half_exact(ipow(3, e - 1) - 1);
            case UniformOrders::P2:
                return half_exact(p * p - 3) * ipow(p, e - 2);
            case UniformOrders::Both:
                switch (gp.exceptional) {
                    case Exceptional::None:
                        return half_exact(p - 3) * ipow(p, e - 1);
                    case Exceptional::PExc:
                        return half_exact(p * p - p - 2) * ipow(p, e - 2);
                    case Exceptional::P2Exc:
                        return half_exact(p * p - 2 * p - 1) * ipow(p, e - 2);
                }
        }
    }
    return enumerate_window(gp, sigma_stable(p, e) + ipow(p, e)).min_reduced;
}

// Least s <= bound with [s, bound] contained in the window, confirmed by a
// p^e margin.
inline i64 stable_upper(const GroupProfile& gp, i64 bound) {
    if (bound < sigma_stable(gp.p(), gp.e()) + ipow(gp.p(), gp.e()))
        throw domain_error("stable_upper: bound must be >= sigma_e(p) + p^e");
    SpectrumWindow w = enumerate_window(gp, bound);
    if (!w.stable_reduced)
        throw window_error("stable_upper: no stable prefix confirmed within the window");
    return *w.stable_reduced;
}

}  // namespace gst
