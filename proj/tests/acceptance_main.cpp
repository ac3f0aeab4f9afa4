// Acceptance harness: nine end-to-end checks, each printing a single
// PASS/FAIL line.  Exit status is the number of failed checks.
//
// Tolerances: every check is exact integer equality; windows carry the fixed
// confirmation margin p^e and all sweep bounds are pinned below.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "gst/group_engine.hpp"
#include "profile_matrix.hpp"

using namespace gst;
using gsttest::make_profile;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what) {
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, what.c_str());
    if (!ok) ++g_failures;
}

MiechParams params(i64 p, i64 n, i64 k, std::map<i64, i64> a, i64 w, i64 z) {
    MiechParams mp;
    mp.p = p;
    mp.n = n;
    mp.k = k;
    mp.a = std::move(a);
    mp.w = w;
    mp.z = z;
    return mp;
}

// All Miech parameter tuples at (p, n).
std::vector<MiechParams> full_sweep(i64 p, i64 n) {
    std::vector<MiechParams> out;
    for (i64 k = 0; k <= p - 2; ++k) {
        std::vector<std::map<i64, i64>> avecs{{}};
        for (i64 j = n - k; j <= n - 1; ++j) {
            std::vector<std::map<i64, i64>> next;
            for (const auto& a : avecs)
                for (i64 v = (j == n - k ? 1 : 0); v < p; ++v) {
                    auto b = a;
                    if (v != 0) b[j] = v;
                    next.push_back(std::move(b));
                }
            avecs = std::move(next);
        }
        for (const auto& a : avecs)
            for (i64 w = 0; w < p; ++w)
                for (i64 z = 0; z < p; ++z) out.push_back(params(p, n, k, a, w, z));
    }
    return out;
}

void criterion1() {
    i64 mismatches = 0;
    for (i64 p : {3, 5, 7})
        for (i64 N = 1; N <= 4; ++N) {
            OmegaLevel lv{p, N};
            for (i64 y = 0; y <= 5000; ++y)
                if (omega_contains(lv, y) != omega_brute(lv, y).has_value()) ++mismatches;
        }
    report(1, mismatches == 0,
           "Omega digit criterion vs reachability oracle, p in {3,5,7}, N in 1..4, "
           "y in [0,5000]: " + std::to_string(mismatches) + " mismatches");
}

void criterion2() {
    bool ok = true;
    for (i64 p : {3, 5, 7})
        for (i64 e = 1; e <= 3; ++e) {
            i64 sigma = sigma_stable(p, e);
            i64 pe = ipow(p, e);
            OmegaLevel lv{p, e};
            // Oracle-only: membership on [sigma, sigma + p^e], non-membership at
            // sigma - 1 establish sigma as the least stable point.
            for (i64 y = sigma; y <= sigma + pe; ++y)
                if (!omega_brute(lv, y)) ok = false;
            if (sigma > 0 && omega_brute(lv, sigma - 1)) ok = false;
        }
    ok = ok && sigma_stable(3, 2) == 6 && sigma_stable(5, 2) == 64 && sigma_stable(5, 3) == 564;
    report(2, ok, "sigma_e(p) equals the oracle least stable point (margin p^e), frozen "
                  "values 6/64/564 confirmed");
}

void criterion3() {
    i64 profiles = 0, disagreements = 0;
    std::string first;
    for (const auto& gp : gsttest::profile_matrix()) {
        i64 B = 2 * sigma_stable(gp.p(), gp.e());
        SpectrumWindow a = assemble(gp, B);
        SpectrumWindow b = enumerate_window(gp, B);
        ++profiles;
        if (a.reduced_values != b.reduced_values) {
            ++disagreements;
            if (first.empty())
                first = " first at p=" + std::to_string(gp.p()) + " n=" + std::to_string(gp.n()) +
                        " type=" + std::to_string(static_cast<int>(gp.type_class) + 1);
        }
    }
    report(3, disagreements == 0,
           "two-path spectrum agreement on [0, 2 sigma_e(p)] over " + std::to_string(profiles) +
               " profiles: " + std::to_string(disagreements) + " disagreements" + first);
}

void criterion4() {
    // The p = 3, ||G*_0|| = {3} minimum is (3^{e-1} - 1)/2 = 4, not 3^{e-1}:
    // the level-e signature (0;2,0,1) carries an explicit generating vector
    // (confirmed by the realizability oracle) of reduced genus 4.
    bool frozen = min_genus(make_profile(5, 11, 3, TypeClass::II, EdClass::AtLeastTwo)) == 55 &&
                  min_genus(make_profile(5, 11, 3, TypeClass::IV, EdClass::AtLeastTwo)) == 45 &&
                  min_genus(make_profile(3, 7, 3, TypeClass::I, EdClass::AtLeastTwo)) == 4;
    i64 checked = 0, bad = 0;
    for (const auto& gp : gsttest::profile_matrix()) {
        if (gp.e() < 3 || gp.n() < gp.p() + 2) continue;
        ++checked;
        i64 B = sigma_stable(gp.p(), gp.e()) + ipow(gp.p(), gp.e());
        if (min_genus(gp) != enumerate_window(gp, B).min_reduced) ++bad;
    }
    report(4, frozen && bad == 0,
           "closed-form reduced minima (55/45 frozen; 4 for p=3 type I, see notes) "
           "match enumeration on " +
               std::to_string(checked) + " e=3 profiles: " + std::to_string(bad) + " mismatches");
}

void criterion5() {
    bool ok = true;
    i64 checked = 0;
    std::string notes;
    for (const auto& gp : gsttest::profile_matrix()) {
        if (gp.e() != 3) continue;
        const i64 p = gp.p();
        i64 sigma = sigma_stable(p, 3), pe = ipow(p, 3);
        bool thmB = (gp.ed_class == EdClass::AtLeastTwo && p >= 5) ||
                    (gp.ed_class == EdClass::One && p >= 7);
        bool note5 = p == 5 && gp.ed_class == EdClass::One &&
                     (gp.type_class == TypeClass::I || gp.type_class == TypeClass::III ||
                      gp.type_class == TypeClass::V);
        if (!thmB && !note5) continue;
        i64 s = stable_upper(gp, 2 * sigma);
        // The p = 5, ed = 1 rows also reach sigma - p^e = 439, not the 451
        // given by the ((e(p-1)-4)/2)p^e - ((p-1)/2)p^{e-1} + 1 formula: the
        // h = 1, N = 1 row (m_1 >= 2 when p divides a uniform order) emits
        // 50 m_1 / 2 and its Omega_1-cosets, covering 439..450 -- e.g. 450 =
        // g((1; 9, 0, 0)) -- and a generating vector for (1; 2, 0, 0) on the
        // order-729 group (k = 0, w = 0, z = 0) confirms that row directly.
        i64 expect = sigma - pe;
        ++checked;
        if (s != expect) {
            ok = false;
            notes += " p=" + std::to_string(p) + " type=" +
                     std::to_string(static_cast<int>(gp.type_class) + 1) + " got " +
                     std::to_string(s) + " want " + std::to_string(expect);
        }
    }
    report(5, ok, "stable upper genus sigma_e(p) - p^e on " + std::to_string(checked) +
                  " e=3 profiles (including the p=5 ed=1 I/III/V rows, see notes)" + notes);
}

void criterion6() {
    bool ok = true;
    std::string notes;
    for (const MiechParams& mp : {
             params(3, 4, 0, {}, 0, 1),
             params(3, 5, 0, {}, 0, 0),
             params(3, 5, 1, {{4, 1}}, 1, 0),
             params(3, 6, 1, {{5, 2}}, 2, 1),
             params(5, 6, 0, {}, 1, 0),
             params(5, 7, 3, {{4, 1}}, 0, 1),
             params(7, 8, 0, {}, 3, 2),
         }) {
        VerifyReport rep = verify_relations(Group(mp));
        if (!rep.ok()) {
            ok = false;
            notes += " (" + std::to_string(mp.p) + "," + std::to_string(mp.n) + "): " +
                     rep.failures.front();
        }
    }
    // Quadratic order prediction over all nine (w, z) at (3, 5, k=1, a_4=1),
    // where psi = a_4 = 1 enters the quadratic.
    for (i64 w = 0; w < 3 && ok; ++w)
        for (i64 z = 0; z < 3 && ok; ++z) {
            Group G(params(3, 5, 1, {{4, 1}}, w, z));
            for (i64 zeta = 0; zeta < 3; ++zeta) {
                i64 ex = (w + z * zeta + zeta * zeta) % 3;
                Group::Elt u = G.mul(G.s(), G.power(G.s1(), zeta));
                if (G.power(u, 3) != G.power(G.si(4), ex) || G.order(u) != (ex == 0 ? 3 : 9)) {
                    ok = false;
                    notes += " quadratic failed at w=" + std::to_string(w) +
                             " z=" + std::to_string(z) + " zeta=" + std::to_string(zeta);
                }
            }
        }
    report(6, ok, "full relation audits (census included below 10^6) and the 9-point "
                  "(w,z) quadratic sweep at (3,5,k=1,a_4=1)" + notes);
}

void criterion7() {
    i64 groups = 0, bad = 0;
    for (i64 n : {4, 5, 6})
        for (const MiechParams& mp : full_sweep(3, n)) {
            Group G(mp);
            bool coincide = G.is_identity(G.comm(G.s1(), G.si(n - 2)));
            bool good = true;
            try {
                auto classes = z_classes(G);  // throws on non-constant class order
                good = static_cast<i64>(classes.size()) == (coincide ? 3 : 2);
            } catch (const domain_error&) {
                good = false;
            }
            ++groups;
            if (!good) ++bad;
        }
    report(7, bad == 0,
           "z-class count law (p with c >= 1, p-1 with c = 0) and order-constancy over " +
               std::to_string(groups) + " groups at p=3, n in {4,5,6}: " + std::to_string(bad) +
               " violations");
}

void criterion8() {
    i64 groups = 0, compared = 0, bad = 0, unknown = 0;
    for (i64 n : {4, 5})
        for (const MiechParams& mp : full_sweep(3, n)) {
            Group G(mp);
            GroupProfile gp = classify(G, /*with_flags=*/true);
            ++groups;
            for (i64 h = 0; h <= 1; ++h)
                for (i64 m1 = 0; m1 <= 4; ++m1)
                    for (i64 m2 = 0; m2 <= 3; ++m2) {
                        Signature sig{h, {m1, m2}};
                        auto r = realizable(G, sig);
                        if (r.verdict == Realizability::Unknown) {
                            ++unknown;
                            continue;
                        }
                        ++compared;
                        if ((r.verdict == Realizability::Yes) != admissible(gp, sig)) ++bad;
                    }
        }
    // One order-729 specimen with e = 3, ed = 1 on the h = 0, sum <= 4 box.
    {
        Group G(params(3, 6, 0, {}, 0, 0));
        GroupProfile gp = classify(G, /*with_flags=*/true);
        bool shape = gp.e() == 3 && gp.ed_class == EdClass::One;
        if (!shape) ++bad;
        ++groups;
        for (i64 m1 = 0; m1 <= 4; ++m1)
            for (i64 m2 = 0; m1 + m2 <= 4; ++m2)
                for (i64 m3 = 0; m1 + m2 + m3 <= 4; ++m3) {
                    Signature sig{0, {m1, m2, m3}};
                    auto r = realizable(G, sig);
                    if (r.verdict == Realizability::Unknown) {
                        ++unknown;
                        continue;
                    }
                    ++compared;
                    if ((r.verdict == Realizability::Yes) != admissible(gp, sig)) ++bad;
                }
    }
    report(8, bad == 0 && unknown == 0,
           "realizability oracle vs admissibility tables on " + std::to_string(compared) +
               " (group, signature) pairs over " + std::to_string(groups) + " groups: " +
               std::to_string(bad) + " mismatches, " + std::to_string(unknown) + " undecided");
}

void criterion9() {
    bool ok = true;
    std::string notes;
    for (i64 p : {5, 7}) {
        i64 n = p + 2, p2exc = 0, errors = 0, total = 0;
        for (const MiechParams& mp : full_sweep(p, n)) {
            ++total;
            try {
                if (classify(Group(mp)).exceptional == Exceptional::P2Exc) ++p2exc;
            } catch (const error&) {
                ++errors;
            }
        }
        notes += " p=" + std::to_string(p) + ": " + std::to_string(p2exc) +
                 " p^2-exceptional / " + std::to_string(total) + " groups";
        if (p2exc != 0 || errors != 0) ok = false;
    }
    {
        i64 found = 0;
        for (const MiechParams& mp : full_sweep(3, 5))
            if (classify(Group(mp)).exceptional == Exceptional::P2Exc) ++found;
        notes += "; p=3 n=5: " + std::to_string(found) + " 3^2-exceptional";
        if (found == 0) ok = false;
    }
    report(9, ok, "no p^2-exceptional groups at p in {5,7}, n = p+2, and at least one "
                  "3^2-exceptional group at p=3, n=5;" + notes);
}

}  // namespace

int main() {
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    void (*criteria[])() = {criterion1, criterion2, criterion3, criterion4, criterion5,
                            criterion6, criterion7, criterion8, criterion9};
    for (int i = 0; i < 9; ++i) {
        try {
            criteria[i]();
        } catch (const std::exception& ex) {
            report(i + 1, false, std::string("unexpected exception: ") + ex.what());
        }
        std::fflush(stdout);
    }
    auto secs = std::chrono::duration_cast<std::chrono::seconds>(clock::now() - t0).count();
    std::printf("%d/9 criteria passed in %llds\n", 9 - g_failures,
                static_cast<long long>(secs));
    return g_failures;
}
