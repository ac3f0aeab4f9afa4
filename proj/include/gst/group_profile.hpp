#pragma once

// Group classification records and the signature-admissibility tables.
//
// A GroupProfile captures the invariants of a maximal class p-group that
// select admissibility rows and F-sets: the uniform-element order set
// ||G*_0|| (types I-V), the exceptional status, the exponent-depth class,
// exp(G_1) at order p^{p+1}, and the optional generation-type flags.
//
// The admissibility predicate encodes four tables of minimal conditions:
//   * ed(G) >= 2, exp(G) >= p^3           (orders >= p^{p+2}, e >= 3)
//   * ed(G) >= 2, exp(G) = p^2            (p^{p+2} <= |G| <= p^{2p-1})
//   * ed(G) = 1,  |G| >= p^{p+2}, h >= 1  (h = 0 rows shared with the first)
//   * |G| = p^{p+1}
// Each table row is data: an h-range, an N-selector, a group-property
// matcher and a disjunctive condition over (m_1, m_2, m_N).  Rows are listed
// in source order of the tables so they can be audited entry by entry.

#include <optional>
#include <vector>

#include "gst/signatures.hpp"

namespace gst {

enum class UniformOrders { P, P2, Both };          // ||G*_0|| = {p}, {p^2}, {p,p^2}
enum class Exceptional { None, PExc, P2Exc };
enum class TypeClass { I, II, III, IV, V };
enum class EdClass { One, AtLeastTwo };

struct GroupProfile {
    PrimeProfile profile;
    UniformOrders uniform_orders = UniformOrders::P;
    Exceptional exceptional = Exceptional::None;
    TypeClass type_class = TypeClass::I;
    EdClass ed_class = EdClass::AtLeastTwo;
    std::optional<i64> exp_g1;          // exponent of G_1 as a power of p (1 or 2); order p^{p+1} only
    std::optional<bool> ppp_type;       // (p,p,p)-generation
    std::optional<bool> p2_triple_type; // (p^2,p^2,p^2)-generation
    std::optional<bool> c_zero;         // degree of commutativity zero (possible only at n = p+1)

    i64 p() const { return profile.p; }
    i64 n() const { return profile.n; }
    i64 e() const { return profile.e; }
};

inline UniformOrders uniform_of_type(TypeClass t) {
    switch (t) {
        case TypeClass::I: return UniformOrders::P;
        case TypeClass::II: return UniformOrders::P2;
        default: return UniformOrders::Both;
    }
}

inline Exceptional exceptional_of_type(TypeClass t) {
    switch (t) {
        case TypeClass::IV: return Exceptional::PExc;
        case TypeClass::V: return Exceptional::P2Exc;
        default: return Exceptional::None;
    }
}

inline std::vector<std::string> validate(const GroupProfile& gp) {
    std::vector<std::string> v = validate_prime_profile(gp.profile);
    if (!v.empty()) return v;
    const i64 p = gp.p(), n = gp.n(), e = gp.e();

    if (gp.uniform_orders != uniform_of_type(gp.type_class))
        v.push_back("type class and uniform_orders disagree");
    if (gp.exceptional != exceptional_of_type(gp.type_class))
        v.push_back("type class and exceptional status disagree");
    if (gp.type_class == TypeClass::III && p < 5)
        v.push_back("type III requires p >= 5");
    if (p == 3 && gp.uniform_orders == UniformOrders::Both && gp.exceptional == Exceptional::None)
        v.push_back("p = 3 with ||G*_0|| = {3,9} must be 3- or 3^2-exceptional");

    if (n >= p + 2) {
        bool ed_one = (n == 2 + (e - 1) * (p - 1));
        if ((gp.ed_class == EdClass::One) != ed_one)
            v.push_back("for n >= p+2, ed = 1 holds iff n = 2+(e-1)(p-1)");
        if (gp.exp_g1.has_value())
            v.push_back("exp_g1 is meaningful only at n = p+1");
        if (gp.c_zero.value_or(false))
            v.push_back("c(G) = 0 is possible only at n = p+1");
    } else {  // n == p+1
        if (!gp.exp_g1.has_value()) {
            v.push_back("exp_g1 (1 or 2) is required at n = p+1");
        } else {
            i64 x = *gp.exp_g1;
            if (x != 1 && x != 2) v.push_back("exp_g1 must be 1 or 2");
            if (x == 2 && gp.ed_class != EdClass::One)
                v.push_back("exp(G_1) = p^2 at n = p+1 forces ed = 1");
            if (x == 1 && gp.ed_class != EdClass::AtLeastTwo)
                v.push_back("exp(G_1) = p at n = p+1 forces ed >= 2");
            if (x == 1 && gp.uniform_orders == UniformOrders::P)
                v.push_back("||G*_0|| = {p} at n = p+1 forces exp(G_1) = p^2");
        }
    }

    // Forced (p,p,p)-type values from the z-class count kappa(G).
    if (gp.ppp_type.has_value()) {
        bool f = *gp.ppp_type;
        if (gp.uniform_orders == UniformOrders::P && !f)
            v.push_back("||G*_0|| = {p} forces (p,p,p)-type");
        if (gp.exceptional == Exceptional::P2Exc && p >= 5 && !f)
            v.push_back("p^2-exceptional with p >= 5 forces (p,p,p)-type");
        // At p = 3 with c(G) >= 1 the three z-classes outside G_1 leave at
        // most two of order 3; with c(G) = 0 a p^2-exceptional group may have
        // two order-3 classes and be (3,3,3)-generated, so no constraint.
        bool kappa_small = gp.uniform_orders == UniformOrders::P2 ||
                           gp.exceptional == Exceptional::PExc ||
                           (p == 3 && gp.uniform_orders == UniformOrders::Both &&
                            !gp.c_zero.value_or(false));
        if (kappa_small && f)
            v.push_back("at most two z-classes of order p: cannot be (p,p,p)-type");
    }
    return v;
}

// ---------------------------------------------------------------------------
// Admissibility table encoding.
// ---------------------------------------------------------------------------

namespace detail {

enum class Quant { H, M1, M2, MN, M1PlusM2 };

struct Atom {
    Quant q;
    i64 lo;       // inclusive
    i64 hi = -1;  // inclusive; -1 = unbounded
};

// Disjunction of conjunctions; empty disjunction list means "always true".
struct SigCond {
    std::vector<std::vector<Atom>> any;
};

inline SigCond always() { return {}; }
inline SigCond one(std::vector<Atom> c) { return {{std::move(c)}}; }

struct GroupCond {
    std::optional<UniformOrders> uniform;
    std::optional<Exceptional> exc;
    bool p_in_uniform = false;  // p belongs to ||G*_0||
    i64 p_min = 0;
    i64 p_eq = 0;
    std::optional<i64> exp_g1;
    std::optional<bool> ppp;
    std::optional<bool> p2t;
};

// N-selector: sentinel-coded bounds, NS_E meaning e and NS_E1 meaning e-1.
constexpr i64 NS_E = -100;
constexpr i64 NS_E1 = -101;

struct Row {
    i64 h_lo;
    i64 h_hi;  // -1 unbounded
    i64 n_lo;  // sentinel-coded inclusive N range
    i64 n_hi;
    GroupCond g;
    SigCond s;
};

inline i64 resolve_n(i64 v, i64 e) {
    if (v == NS_E) return e;
    if (v == NS_E1) return e - 1;
    return v;
}

struct FlagView {
    bool ppp;
    bool p2t;
    bool used_ppp = false;
    bool used_p2t = false;
};

inline bool group_matches(const GroupCond& c, const GroupProfile& gp, FlagView& fl) {
    if (c.uniform && gp.uniform_orders != *c.uniform) return false;
    if (c.exc && gp.exceptional != *c.exc) return false;
    if (c.p_in_uniform && gp.uniform_orders == UniformOrders::P2) return false;
    if (c.p_min && gp.p() < c.p_min) return false;
    if (c.p_eq && gp.p() != c.p_eq) return false;
    if (c.exp_g1 && gp.exp_g1.value_or(0) != *c.exp_g1) return false;
    if (c.ppp) {
        bool v = gp.ppp_type ? *gp.ppp_type : (fl.used_ppp = true, fl.ppp);
        if (v != *c.ppp) return false;
    }
    if (c.p2t) {
        bool v = gp.p2_triple_type ? *gp.p2_triple_type : (fl.used_p2t = true, fl.p2t);
        if (v != *c.p2t) return false;
    }
    return true;
}

inline bool sig_matches(const SigCond& c, const Signature& sig, i64 N) {
    auto value = [&](Quant q) -> i64 {
        switch (q) {
            case Quant::H: return sig.h;
            case Quant::M1: return sig.m.empty() ? 0 : sig.mi(1);
            case Quant::M2: return sig.m.size() < 2 ? 0 : sig.mi(2);
            case Quant::MN: return N == 0 ? 0 : sig.mi(N);
            case Quant::M1PlusM2:
                return (sig.m.empty() ? 0 : sig.mi(1)) + (sig.m.size() < 2 ? 0 : sig.mi(2));
        }
        return 0;
    };
    if (c.any.empty()) return true;
    for (const auto& conj : c.any) {
        bool ok = true;
        for (const Atom& a : conj) {
            i64 v = value(a.q);
            if (v < a.lo || (a.hi >= 0 && v > a.hi)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

// --- Row sets, in printed order. -------------------------------------------

using Rows = std::vector<Row>;

inline const Rows& ed2_rows() {
    using Q = Quant;
    static const Rows rows = [] {
        Rows r;
        GroupCond any{};
        GroupCond uP{UniformOrders::P, {}, false, 0, 0, {}, {}, {}};
        GroupCond uP2{UniformOrders::P2, {}, false, 0, 0, {}, {}, {}};
        GroupCond uB{UniformOrders::Both, {}, false, 0, 0, {}, {}, {}};
        GroupCond uBn{UniformOrders::Both, Exceptional::None, false, 0, 0, {}, {}, {}};
        GroupCond uBp{UniformOrders::Both, Exceptional::PExc, false, 0, 0, {}, {}, {}};
        GroupCond uBq{UniformOrders::Both, Exceptional::P2Exc, false, 0, 0, {}, {}, {}};
        GroupCond pin{};
        pin.p_in_uniform = true;

        // h >= 2: every N.
        r.push_back({2, -1, 0, NS_E, any, always()});
        // h = 1, N = e: unconditional.
        r.push_back({1, 1, NS_E, NS_E, any, always()});
        // h = 1, 2 <= N <= e-1.
        r.push_back({1, 1, 2, NS_E1, uP, one({{Q::M1, 2}})});
        r.push_back({1, 1, 2, NS_E1, uP2, one({{Q::M2, 2}})});
        r.push_back({1, 1, 2, NS_E1, uB, {{{{Q::M1, 2}}, {{Q::M2, 2}}}}});
        // h = 1, N = 1.
        r.push_back({1, 1, 1, 1, pin, one({{Q::M1, 2}})});
        // h = 0, N = e.
        r.push_back({0, 0, NS_E, NS_E, uP, one({{Q::M1, 2}})});
        r.push_back({0, 0, NS_E, NS_E, uP2, one({{Q::M2, 2}})});
        r.push_back({0, 0, NS_E, NS_E, uBn, one({{Q::M1PlusM2, 2}})});
        r.push_back({0, 0, NS_E, NS_E, uBp, {{{{Q::M1, 1}, {Q::M2, 1}}, {{Q::M2, 2}}}}});
        r.push_back({0, 0, NS_E, NS_E, uBq, {{{{Q::M1, 1}, {Q::M2, 1}}, {{Q::M1, 2}}}}});
        // h = 0, 1 <= N <= e-1.
        r.push_back({0, 0, 1, NS_E1, uP, one({{Q::M1, 3}})});
        r.push_back({0, 0, 1, NS_E1, uP2, one({{Q::M2, 3}})});
        r.push_back({0, 0, 1, NS_E1, uBp, one({{Q::M1, 1}, {Q::M2, 2}})});
        r.push_back({0, 0, 1, NS_E1, uBq, one({{Q::M1, 2}, {Q::M2, 1}})});
        r.push_back({0, 0, 1, NS_E1, uBn, one({{Q::M1PlusM2, 3}})});
        return r;
    }();
    return rows;
}

inline const Rows& ed2_expp2_rows() {
    using Q = Quant;
    static const Rows rows = [] {
        Rows r;
        GroupCond any{};
        GroupCond uP{UniformOrders::P, {}, false, 0, 0, {}, {}, {}};
        GroupCond uP2{UniformOrders::P2, {}, false, 0, 0, {}, {}, {}};
        GroupCond uBn{UniformOrders::Both, Exceptional::None, false, 0, 0, {}, {}, {}};
        GroupCond uBp{UniformOrders::Both, Exceptional::PExc, false, 0, 0, {}, {}, {}};
        GroupCond pin{};
        pin.p_in_uniform = true;
        GroupCond q5{UniformOrders::Both, Exceptional::P2Exc, false, 5, 0, {}, {}, {}};
        GroupCond bn5y{UniformOrders::Both, Exceptional::None, false, 5, 0, {}, true, {}};
        GroupCond bn5n{UniformOrders::Both, Exceptional::None, false, 5, 0, {}, false, {}};
        GroupCond q3{UniformOrders::Both, Exceptional::P2Exc, false, 0, 3, {}, {}, {}};

        // h >= 2: every N.
        r.push_back({2, -1, 0, 2, any, always()});
        // h = 1, N = 2: unconditional.
        r.push_back({1, 1, 2, 2, any, always()});
        // h = 1, N = 1.
        r.push_back({1, 1, 1, 1, pin, one({{Q::M1, 2}})});
        // h = 0, N = 2 (m_2 >= 1 and m_1 + m_2 >= 3 are necessary throughout).
        r.push_back({0, 0, 2, 2, uP, one({{Q::M1, 2}, {Q::M1PlusM2, 3}})});
        r.push_back({0, 0, 2, 2, uP2, one({{Q::M2, 3}})});
        r.push_back({0, 0, 2, 2, uBn, one({{Q::M1PlusM2, 3}})});
        r.push_back({0, 0, 2, 2, uBp, one({{Q::M2, 2}, {Q::M1PlusM2, 3}})});
        // p^2-exceptional: m_1 >= 2 is necessary only for p >= 5.  At p = 3
        // the order-243 groups admit generating vectors for (0; 1, 2) -- one
        // order-3 generator from a uniform class and two order-9 generators,
        // one of them inside G_1 -- so only m_1 >= 1 survives.
        r.push_back({0, 0, 2, 2, q5, one({{Q::M1, 2}, {Q::M1PlusM2, 3}})});
        r.push_back({0, 0, 2, 2, q3, one({{Q::M1, 1}, {Q::M1PlusM2, 3}})});
        // h = 0, N = 1.
        r.push_back({0, 0, 1, 1, uP, one({{Q::M1, 3}})});
        r.push_back({0, 0, 1, 1, q5, one({{Q::M1, 3}})});
        r.push_back({0, 0, 1, 1, bn5y, one({{Q::M1, 3}})});
        r.push_back({0, 0, 1, 1, bn5n, one({{Q::M1, 4}})});
        r.push_back({0, 0, 1, 1, q3, one({{Q::M1, 4}})});
        return r;
    }();
    return rows;
}

// ed(G) = 1 rows for h >= 1; callers append the h = 0 rows of ed2_rows().
inline const Rows& ed1_rows() {
    using Q = Quant;
    static const Rows rows = [] {
        Rows r;
        GroupCond any{};
        GroupCond uP{UniformOrders::P, {}, false, 0, 0, {}, {}, {}};
        GroupCond uP2{UniformOrders::P2, {}, false, 0, 0, {}, {}, {}};
        GroupCond uB{UniformOrders::Both, {}, false, 0, 0, {}, {}, {}};
        GroupCond uBn{UniformOrders::Both, Exceptional::None, false, 0, 0, {}, {}, {}};
        GroupCond uBp{UniformOrders::Both, Exceptional::PExc, false, 0, 0, {}, {}, {}};
        GroupCond uBq{UniformOrders::Both, Exceptional::P2Exc, false, 0, 0, {}, {}, {}};
        GroupCond pin{};
        pin.p_in_uniform = true;

        // N = 0: h >= 2.
        r.push_back({2, -1, 0, 0, any, always()});
        // N = e, h >= 1: m_e >= 2, or m_e = 1 with the listed conditions.
        r.push_back({1, -1, NS_E, NS_E, any, one({{Q::MN, 2}})});
        r.push_back({1, -1, NS_E, NS_E, uP, one({{Q::MN, 1, 1}, {Q::M1, 2}})});
        r.push_back({1, -1, NS_E, NS_E, uP2, one({{Q::MN, 1, 1}, {Q::M2, 2}})});
        r.push_back({1, -1, NS_E, NS_E, uBn, one({{Q::MN, 1, 1}, {Q::M1PlusM2, 2}})});
        r.push_back({1, -1, NS_E, NS_E, uBp,
                     one({{Q::MN, 1, 1}, {Q::M1PlusM2, 2}, {Q::M2, 1}})});
        r.push_back({1, -1, NS_E, NS_E, uBq,
                     one({{Q::MN, 1, 1}, {Q::M1PlusM2, 2}, {Q::M1, 1}})});
        // 2 <= N <= e-1.
        r.push_back({2, -1, 2, NS_E1, any, always()});
        r.push_back({1, 1, 2, NS_E1, uP, one({{Q::M1, 2}})});
        r.push_back({1, 1, 2, NS_E1, uP2, one({{Q::M2, 2}})});
        r.push_back({1, 1, 2, NS_E1, uB, {{{{Q::M1, 2}}, {{Q::M2, 2}}}}});
        // N = 1.
        r.push_back({2, -1, 1, 1, any, always()});
        r.push_back({1, 1, 1, 1, pin, one({{Q::M1, 2}})});
        return r;
    }();
    return rows;
}

inline const Rows& ord_p_plus_1_rows() {
    using Q = Quant;
    static const Rows rows = [] {
        Rows r;
        GroupCond any{};
        GroupCond uP{UniformOrders::P, {}, false, 0, 0, {}, {}, {}};
        auto both = [](Exceptional ex, i64 eg, i64 pmin = 0, i64 peq = 0) {
            GroupCond c{UniformOrders::Both, ex, false, pmin, peq, eg, {}, {}};
            return c;
        };

        // h >= 2, N = 0.
        r.push_back({2, -1, 0, 0, any, always()});
        // h >= 1, N = 2: m_2 >= 2 unconditionally.
        r.push_back({1, -1, 2, 2, any, one({{Q::M2, 2}})});
        // h >= 1, N = 2, m_2 = 1, m_1 >= 2: all cases except ||G*_0|| = {p^2}
        // and ({p,p^2}, exp(G_1) = p^2, p-exceptional).
        {
            SigCond c = one({{Q::M2, 1, 1}, {Q::M1, 2}});
            r.push_back({1, -1, 2, 2, uP, c});
            r.push_back({1, -1, 2, 2, both(Exceptional::PExc, 1), c});
            r.push_back({1, -1, 2, 2, both(Exceptional::P2Exc, 1), c});
            r.push_back({1, -1, 2, 2, both(Exceptional::P2Exc, 2), c});
            r.push_back({1, -1, 2, 2, both(Exceptional::None, 1), c});
            r.push_back({1, -1, 2, 2, both(Exceptional::None, 2), c});
        }
        // h >= 1, N = 1: unconditional.
        r.push_back({1, -1, 1, 1, any, always()});
        // h = 0, N = 2 (m_2 >= 1 and m_1 + m_2 >= 3 necessary throughout).
        {
            auto pre = [](std::vector<Atom> extra) {
                std::vector<Atom> c{{Q::M1PlusM2, 3}};
                for (auto& a : extra) c.push_back(a);
                return one(std::move(c));
            };
            GroupCond uP2a{UniformOrders::P2, {}, false, 0, 0, 1, {}, {}};
            GroupCond uP2b{UniformOrders::P2, {}, false, 0, 0, 2, {}, {}};
            r.push_back({0, 0, 2, 2, uP, pre({{Q::M1, 2}})});
            r.push_back({0, 0, 2, 2, uP2a, pre({{Q::M2, 2}})});
            r.push_back({0, 0, 2, 2, uP2b, pre({{Q::M2, 3}})});
            r.push_back({0, 0, 2, 2, both(Exceptional::PExc, 1, 5), pre({})});
            r.push_back({0, 0, 2, 2, both(Exceptional::PExc, 1, 0, 3),
                         {{{{Q::M1, 1}, {Q::M1PlusM2, 3}}, {{Q::M1, 0, 0}, {Q::M2, 4}}}}});
            r.push_back({0, 0, 2, 2, both(Exceptional::PExc, 2), pre({{Q::M2, 2}})});
            r.push_back({0, 0, 2, 2, both(Exceptional::P2Exc, 1), pre({{Q::M1, 2}})});
            r.push_back({0, 0, 2, 2, both(Exceptional::P2Exc, 2),
                         {{{{Q::M1, 1}, {Q::M1PlusM2, 3}}, {{Q::M1, 0, 0}, {Q::M2, 4}}}}});
            GroupCond bn1y{UniformOrders::Both, Exceptional::None, false, 0, 0, 1, {}, true};
            GroupCond bn1n{UniformOrders::Both, Exceptional::None, false, 0, 0, 1, {}, false};
            r.push_back({0, 0, 2, 2, bn1y, pre({})});
            r.push_back({0, 0, 2, 2, bn1n,
                         {{{{Q::M1, 1}, {Q::M1PlusM2, 3}}, {{Q::M1, 0, 0}, {Q::M2, 4}}}}});
            r.push_back({0, 0, 2, 2, both(Exceptional::None, 2), pre({})});
        }
        // h = 0, N = 1 (m_1 >= 3 necessary).
        {
            SigCond m3 = one({{Q::M1, 3}});
            SigCond m4 = one({{Q::M1, 4}});
            r.push_back({0, 0, 1, 1, uP, m3});
            r.push_back({0, 0, 1, 1, both(Exceptional::P2Exc, 1), m3});
            r.push_back({0, 0, 1, 1, both(Exceptional::P2Exc, 2, 5), m3});
            r.push_back({0, 0, 1, 1, both(Exceptional::None, 1), m3});
            GroupCond bn2y{UniformOrders::Both, Exceptional::None, false, 0, 0, 2, true, {}};
            GroupCond bn2n{UniformOrders::Both, Exceptional::None, false, 0, 0, 2, false, {}};
            r.push_back({0, 0, 1, 1, bn2y, m3});
            r.push_back({0, 0, 1, 1, both(Exceptional::PExc, 1), m4});
            r.push_back({0, 0, 1, 1, both(Exceptional::P2Exc, 2, 0, 3), m4});
            r.push_back({0, 0, 1, 1, bn2n, m4});
        }
        return r;
    }();
    return rows;
}

enum class TableKind { Ed2, Ed2ExpP2, Ed1, OrdPPlus1 };

inline TableKind table_for(const GroupProfile& gp) {
    if (gp.n() == gp.p() + 1) return TableKind::OrdPPlus1;
    if (gp.e() == 2) return TableKind::Ed2ExpP2;
    if (gp.ed_class == EdClass::AtLeastTwo) return TableKind::Ed2;
    return TableKind::Ed1;
}

inline bool admissible_assuming(const GroupProfile& gp, const Signature& sig, FlagView& fl) {
    const i64 e = gp.e();
    const i64 N = level(sig);
    auto scan = [&](const Rows& rows, bool h0_only) {
        for (const Row& row : rows) {
            if (h0_only && !(row.h_lo == 0 && row.h_hi == 0)) continue;
            if (sig.h < row.h_lo) continue;
            if (row.h_hi >= 0 && sig.h > row.h_hi) continue;
            if (N < resolve_n(row.n_lo, e) || N > resolve_n(row.n_hi, e)) continue;
            if (!group_matches(row.g, gp, fl)) continue;
            if (sig_matches(row.s, sig, N)) return true;
        }
        return false;
    };
    switch (table_for(gp)) {
        case TableKind::Ed2: return scan(ed2_rows(), false);
        case TableKind::Ed2ExpP2: return scan(ed2_expp2_rows(), false);
        case TableKind::OrdPPlus1: return scan(ord_p_plus_1_rows(), false);
        case TableKind::Ed1:
            if (sig.h == 0) return scan(ed2_rows(), true);
            return scan(ed1_rows(), false);
    }
    return false;
}

}  // namespace detail

// True iff sigma lies in the spectrum-signature set S(G) of a group matching
// the profile, per the applicable table.  When the verdict depends on an
// unset ppp/p^2-triple flag, raises flag_required_error instead of guessing.
inline bool admissible(const GroupProfile& gp, const Signature& sig) {
    {
        auto v = validate(gp);
        if (!v.empty()) throw domain_error("admissible: invalid profile: " + v.front());
    }
    if (static_cast<i64>(sig.m.size()) != gp.e())
        throw domain_error("admissible: signature length must equal e");
    if (sig.h < 0) throw domain_error("admissible: h must be nonnegative");
    for (i64 mi : sig.m)
        if (mi < 0) throw domain_error("admissible: multiplicities must be nonnegative");

    bool first = true;
    bool verdict = false;
    bool depends = false;
    for (bool a : {false, true}) {
        for (bool b : {false, true}) {
            detail::FlagView fl{a, b};
            bool r = detail::admissible_assuming(gp, sig, fl);
            if (first) {
                verdict = r;
                first = false;
            } else if (r != verdict) {
                depends = true;
            }
            // If neither flag was consulted, further combos cannot differ.
            if (!fl.used_ppp && !fl.used_p2t && !depends) return r;
        }
    }
    if (depends)
        throw flag_required_error(
            "admissible: verdict depends on an unset (p,p,p)/(p^2,p^2,p^2)-type flag");
    return verdict;
}

}  // namespace gst
