#pragma once

// Shared test fixture: the matrix of mutually consistent group profiles over
// p in {3,5,7} and e in {2,3}, covering every type, both exponent-depth
// classes, both exp(G_1) values at order p^{p+1}, and both settings of each
// generation-type flag where a table row consults it.

#include <vector>

#include "gst/group_profile.hpp"

namespace gsttest {

inline gst::GroupProfile make_profile(gst::i64 p, gst::i64 n, gst::i64 e,
                                      gst::TypeClass t, gst::EdClass ed,
                                      std::optional<gst::i64> exp_g1 = std::nullopt,
                                      std::optional<bool> ppp = std::nullopt,
                                      std::optional<bool> p2t = std::nullopt) {
    gst::GroupProfile gp;
    gp.profile = gst::PrimeProfile{p, n, e};
    gp.type_class = t;
    gp.uniform_orders = gst::uniform_of_type(t);
    gp.exceptional = gst::exceptional_of_type(t);
    gp.ed_class = ed;
    gp.exp_g1 = exp_g1;
    gp.ppp_type = ppp;
    gp.p2_triple_type = p2t;
    if (n == p + 1) gp.c_zero = false;
    return gp;
}

inline std::vector<gst::GroupProfile> profile_matrix() {
    using namespace gst;
    std::vector<GroupProfile> out;
    const EdClass ONE = EdClass::One, TWO = EdClass::AtLeastTwo;
    for (i64 p : {3, 5, 7}) {
        // e = 2, |G| = p^{p+1}: rows keyed by exp(G_1).
        i64 n1 = p + 1;
        out.push_back(make_profile(p, n1, 2, TypeClass::I, ONE, 2));
        out.push_back(make_profile(p, n1, 2, TypeClass::II, TWO, 1));
        out.push_back(make_profile(p, n1, 2, TypeClass::II, ONE, 2));
        if (p >= 5) {
            for (bool f : {false, true}) {
                out.push_back(make_profile(p, n1, 2, TypeClass::III, TWO, 1, std::nullopt, f));
                out.push_back(make_profile(p, n1, 2, TypeClass::III, ONE, 2, f));
            }
        }
        out.push_back(make_profile(p, n1, 2, TypeClass::IV, TWO, 1));
        out.push_back(make_profile(p, n1, 2, TypeClass::IV, ONE, 2));
        out.push_back(make_profile(p, n1, 2, TypeClass::V, TWO, 1));
        out.push_back(make_profile(p, n1, 2, TypeClass::V, ONE, 2));

        // e = 2, |G| = p^{p+2} (exp(G) = p^2, ed >= 2 automatic).
        i64 n2 = p + 2;
        out.push_back(make_profile(p, n2, 2, TypeClass::I, TWO));
        out.push_back(make_profile(p, n2, 2, TypeClass::II, TWO));
        if (p >= 5)
            for (bool f : {false, true})
                out.push_back(make_profile(p, n2, 2, TypeClass::III, TWO, std::nullopt, f));
        out.push_back(make_profile(p, n2, 2, TypeClass::IV, TWO));
        out.push_back(make_profile(p, n2, 2, TypeClass::V, TWO));

        // e = 3: ed = 1 at n = 2+2(p-1), ed >= 2 one step above.
        for (EdClass ed : {ONE, TWO}) {
            i64 n3 = 2 + 2 * (p - 1) + (ed == TWO ? 1 : 0);
            out.push_back(make_profile(p, n3, 3, TypeClass::I, ed));
            out.push_back(make_profile(p, n3, 3, TypeClass::II, ed));
            if (p >= 5) out.push_back(make_profile(p, n3, 3, TypeClass::III, ed));
            out.push_back(make_profile(p, n3, 3, TypeClass::IV, ed));
            out.push_back(make_profile(p, n3, 3, TypeClass::V, ed));
        }
    }
    return out;
}

}  // namespace gsttest
