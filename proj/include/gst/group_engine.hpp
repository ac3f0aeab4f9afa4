#pragma once

// Constructive engine for metabelian maximal-class p-groups.
//
// A group of order p^n is presented by Miech parameters
// (p, n, k, a_{n-k}..a_{n-1}, w, z) through the relations
//   (i)   [s_1, s_2] = prod s_j^{a_j},      [s_{i-1}, s] = s_i,
//   (ii)  s^p = s_{n-1}^w,                  s_1^C(p,1) s_2^C(p,2) ... s_p^C(p,p) = s_{n-1}^z,
//   (iii) s_i^C(p,1) s_{i+1}^C(p,2) ... s_{i+p-1}^C(p,p) = 1   (2 <= i <= n-1),
// with s_j = 1 for j >= n.  Elements carry the unique normal form
// s^{e0} s_1^{e1} s_2^{e2} ... s_{n-1}^{e_{n-1}} with exponents in [0, p).
//
// G_2 = <s_2, ..., s_{n-1}> is abelian; relation (iii) is a triangular
// polycyclic power system on it, and conjugation by s and s_1 acts through
// the endomorphisms alpha(e_i) = e_i + e_{i+1} and beta(e_i) = e_i + gamma_i,
// where gamma_2 = -sum a_j e_j and gamma_{i+1} = alpha(gamma_i) - gamma_i
// (the metabelian identity [s_{i+1}, s_1] = [[s_i, s_1], s]).  Collection
// left-to-right then reduces every product to vector arithmetic.
//
// On top of the arithmetic sit: a relation/consistency audit, profile
// classification (element orders on the uniform cosets, z-class counts,
// exceptionality), z-class enumeration, and an exhaustive generating-vector
// search deciding signature realizability, used as the independent oracle
// against the admissibility tables.

#include <map>
#include <random>
#include <unordered_map>

#include "gst/spectrum.hpp"

namespace gst {

struct MiechParams {
    i64 p = 3;
    i64 n = 4;
    i64 k = 0;
    std::map<i64, i64> a;  // a_j for j in [n-k, n-1]
    i64 w = 0;
    i64 z = 0;
};

inline std::vector<std::string> validate_miech(const MiechParams& mp) {
    std::vector<std::string> v;
    if (!is_odd_prime(mp.p)) v.push_back("p must be an odd prime >= 3");
    if (!v.empty()) return v;
    if (mp.n < mp.p + 1) v.push_back("n must be >= p+1");
    if (mp.k < 0 || mp.k > mp.p - 2) v.push_back("k must satisfy 0 <= k <= p-2");
    if (mp.w < 0 || mp.w >= mp.p) v.push_back("w must be a residue mod p");
    if (mp.z < 0 || mp.z >= mp.p) v.push_back("z must be a residue mod p");
    if (!v.empty()) return v;
    if (mp.k == 0 && !mp.a.empty()) v.push_back("k = 0 requires an empty coefficient map");
    if (mp.k >= 1) {
        for (i64 j = mp.n - mp.k; j <= mp.n - 1; ++j) {
            auto it = mp.a.find(j);
            i64 aj = it == mp.a.end() ? 0 : it->second;
            if (aj < 0 || aj >= mp.p) v.push_back("a_j must be residues mod p");
        }
        for (const auto& [j, aj] : mp.a) {
            (void)aj;
            if (j < mp.n - mp.k || j > mp.n - 1)
                v.push_back("coefficient indices must lie in [n-k, n-1]");
        }
        auto it = mp.a.find(mp.n - mp.k);
        if (it == mp.a.end() || it->second % mp.p == 0)
            v.push_back("a_{n-k} must be nonzero when k >= 1");
    }
    return v;
}

class Group {
  public:
    using Elt = std::vector<i64>;  // exponent vector (e0, e1, ..., e_{n-1})

    explicit Group(const MiechParams& mp) : mp_(mp), p_(mp.p), n_(mp.n) {
        auto v = validate_miech(mp);
        if (!v.empty()) throw domain_error("Group: invalid parameters: " + v.front());
        binom_.assign(static_cast<size_t>(p_) + 1, 0);
        binom_[0] = 1;
        for (i64 r = 1; r <= p_; ++r)
            for (i64 j = r; j >= 1; --j) binom_[static_cast<size_t>(j)] += binom_[static_cast<size_t>(j - 1)];

        // gamma_i = [s_i, s_1] on the abelian G_2.
        gamma_.assign(static_cast<size_t>(n_), AVec(static_cast<size_t>(n_), 0));
        AVec g2(static_cast<size_t>(n_), 0);
        for (const auto& [j, aj] : mp_.a) g2[static_cast<size_t>(j)] -= aj;
        reduceA(g2);
        gamma_[2] = g2;
        for (i64 i = 2; i + 1 <= n_ - 1; ++i) {
            AVec t = alphaA(gamma_[static_cast<size_t>(i)]);
            for (i64 j = 2; j < n_; ++j) t[static_cast<size_t>(j)] -= gamma_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            reduceA(t);
            gamma_[static_cast<size_t>(i + 1)] = t;
        }

        // d_t = sum_{i<t} beta^i(e_2), the G_2 tail of (s_1^t) s = s s_1^t (...).
        d_.assign(static_cast<size_t>(p_), AVec(static_cast<size_t>(n_), 0));
        AVec cur(static_cast<size_t>(n_), 0);
        cur[2] = 1;
        for (i64 t = 1; t < p_; ++t) {
            AVec acc = d_[static_cast<size_t>(t - 1)];
            for (i64 j = 2; j < n_; ++j) acc[static_cast<size_t>(j)] += cur[static_cast<size_t>(j)];
            reduceA(acc);
            d_[static_cast<size_t>(t)] = acc;
            cur = betaA(cur);
        }

        // s_1^p from relation (ii): z e_{n-1} - sum_{j=2}^{p} C(p,j) e_j.
        s1p_.assign(static_cast<size_t>(n_), 0);
        s1p_[static_cast<size_t>(n_ - 1)] += mp_.z;
        for (i64 j = 2; j <= p_ && j < n_; ++j) s1p_[static_cast<size_t>(j)] -= binom_[static_cast<size_t>(j)];
        reduceA(s1p_);
    }

    i64 p() const { return p_; }
    i64 n() const { return n_; }
    const MiechParams& params() const { return mp_; }
    i64 size() const { return ipow(p_, n_); }

    Elt identity() const { return Elt(static_cast<size_t>(n_), 0); }
    Elt s() const {
        Elt g = identity();
        g[0] = 1;
        return g;
    }
    Elt s1() const {
        Elt g = identity();
        g[1] = 1;
        return g;
    }
    // s_i for 1 <= i <= n-1 (s_1 is the second generator, the rest lie in G_2).
    Elt si(i64 i) const {
        if (i < 1 || i > n_ - 1) throw domain_error("si: index out of range");
        Elt g = identity();
        g[static_cast<size_t>(i == 1 ? 1 : i)] = 1;
        return g;
    }

    bool is_identity(const Elt& g) const {
        for (i64 v : g)
            if (v != 0) return false;
        return true;
    }

    Elt mul(const Elt& g, const Elt& h) const {
        Elt r = g;
        for (i64 t = 0; t < h[0]; ++t) r = times_s(r);
        for (i64 t = 0; t < h[1]; ++t) r = times_s1(r);
        AVec u(r.begin(), r.end());
        for (i64 j = 2; j < n_; ++j) u[static_cast<size_t>(j)] += h[static_cast<size_t>(j)];
        reduceA(u);
        for (i64 j = 2; j < n_; ++j) r[static_cast<size_t>(j)] = u[static_cast<size_t>(j)];
        return r;
    }

    Elt power(const Elt& g, i64 e) const {
        if (e < 0) throw domain_error("power: negative exponent");
        Elt r = identity(), b = g;
        while (e > 0) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    // Least p^t with g^{p^t} = 1 (orders are p-powers in a p-group).
    i64 order(const Elt& g) const {
        Elt h = g;
        i64 o = 1;
        while (!is_identity(h)) {
            h = power(h, p_);
            o = checked_mul(o, p_);
            if (o > size()) throw domain_error("order: exceeded group order (corrupt tables?)");
        }
        return o;
    }

    Elt inv(const Elt& g) const { return power(g, order(g) - 1); }

    Elt comm(const Elt& g, const Elt& h) const { return mul(mul(inv(g), inv(h)), mul(g, h)); }

    // Dense element ids: base-p packing of the exponent vector.
    i64 id_of(const Elt& g) const {
        i64 id = 0;
        for (i64 i = n_ - 1; i >= 0; --i) id = id * p_ + g[static_cast<size_t>(i)];
        return id;
    }
    Elt elt_of(i64 id) const {
        Elt g = identity();
        for (i64 i = 0; i < n_; ++i) {
            g[static_cast<size_t>(i)] = id % p_;
            id /= p_;
        }
        return g;
    }

    // Negative-control hook: perturbs the conjugation table so the relation
    // audit must report failures.
    void corrupt_for_testing() {
        gamma_[2][static_cast<size_t>(n_ - 1)] = (gamma_[2][static_cast<size_t>(n_ - 1)] + 1) % p_;
        // Rebuild the dependent tables from the corrupted gamma.
        for (i64 i = 2; i + 1 <= n_ - 1; ++i) {
            AVec t = alphaA(gamma_[static_cast<size_t>(i)]);
            for (i64 j = 2; j < n_; ++j) t[static_cast<size_t>(j)] -= gamma_[static_cast<size_t>(i)][static_cast<size_t>(j)];
            reduceA(t);
            gamma_[static_cast<size_t>(i + 1)] = t;
        }
        AVec cur(static_cast<size_t>(n_), 0);
        cur[2] = 1;
        for (i64 t = 1; t < p_; ++t) {
            AVec acc = d_[static_cast<size_t>(t - 1)];
            for (i64 j = 2; j < n_; ++j) acc[static_cast<size_t>(j)] += cur[static_cast<size_t>(j)];
            reduceA(acc);
            d_[static_cast<size_t>(t)] = acc;
            cur = betaA(cur);
        }
    }

  private:
    using AVec = std::vector<i64>;  // G_2 coordinates, indices 2..n-1 used

    MiechParams mp_;
    i64 p_, n_;
    std::vector<i64> binom_;
    std::vector<AVec> gamma_;
    std::vector<AVec> d_;
    AVec s1p_;

    // Normalize against the triangular power relations (iii):
    // p e_i = -sum_{j=1}^{p-1} C(p, j+1) e_{i+j}.
    void reduceA(AVec& v) const {
        for (i64 i = 2; i < n_; ++i) {
            i64 d = ((v[static_cast<size_t>(i)] % p_) + p_) % p_;
            i64 q = (v[static_cast<size_t>(i)] - d) / p_;
            v[static_cast<size_t>(i)] = d;
            if (q == 0) continue;
            for (i64 j = 1; j <= p_ - 1 && i + j < n_; ++j)
                v[static_cast<size_t>(i + j)] =
                    checked_sub(v[static_cast<size_t>(i + j)], checked_mul(q, binom_[static_cast<size_t>(j + 1)]));
        }
    }

    // Conjugation by s: e_i -> e_i + e_{i+1} (e_n = 1).
    AVec alphaA(const AVec& v) const {
        AVec r = v;
        for (i64 j = 2; j + 1 < n_; ++j) r[static_cast<size_t>(j + 1)] += v[static_cast<size_t>(j)];
        reduceA(r);
        return r;
    }

    // Conjugation by s_1: e_i -> e_i + gamma_i.
    AVec betaA(const AVec& v) const {
        AVec r = v;
        for (i64 j = 2; j < n_; ++j) {
            i64 c = v[static_cast<size_t>(j)];
            if (c == 0) continue;
            for (i64 t = 2; t < n_; ++t)
                r[static_cast<size_t>(t)] += c * gamma_[static_cast<size_t>(j)][static_cast<size_t>(t)];
        }
        reduceA(r);
        return r;
    }

    Elt times_s(const Elt& g) const {
        Elt r = g;
        AVec u(g.begin(), g.end());
        u[0] = u[1] = 0;
        AVec au = alphaA(u);
        const AVec& dt = d_[static_cast<size_t>(g[1])];
        for (i64 j = 2; j < n_; ++j) au[static_cast<size_t>(j)] += dt[static_cast<size_t>(j)];
        r[0] = g[0] + 1;
        if (r[0] == p_) {
            r[0] = 0;
            au[static_cast<size_t>(n_ - 1)] += mp_.w;  // fold s^p = s_{n-1}^w
        }
        reduceA(au);
        for (i64 j = 2; j < n_; ++j) r[static_cast<size_t>(j)] = au[static_cast<size_t>(j)];
        return r;
    }

    Elt times_s1(const Elt& g) const {
        Elt r = g;
        AVec u(g.begin(), g.end());
        u[0] = u[1] = 0;
        AVec bu = betaA(u);
        r[1] = g[1] + 1;
        if (r[1] == p_) {
            r[1] = 0;
            for (i64 j = 2; j < n_; ++j) bu[static_cast<size_t>(j)] += s1p_[static_cast<size_t>(j)];
        }
        reduceA(bu);
        for (i64 j = 2; j < n_; ++j) r[static_cast<size_t>(j)] = bu[static_cast<size_t>(j)];
        return r;
    }
};

// ---------------------------------------------------------------------------
// Relation audit.
// ---------------------------------------------------------------------------

struct VerifyReport {
    std::vector<std::string> checks;    // descriptions of checks performed
    std::vector<std::string> failures;  // empty iff the group passed

    bool ok() const { return failures.empty(); }
};

namespace detail {

// psi(k) in the uniform-order quadratic w + z*zeta + psi*zeta^2.
inline i64 miech_psi(const MiechParams& mp) {
    if (mp.k != mp.p - 2) return 0;
    auto it = mp.a.find(mp.n - mp.k);
    return it == mp.a.end() ? 0 : it->second;
}

}  // namespace detail

inline VerifyReport verify_relations(const Group& G, bool light = false) {
    VerifyReport rep;
    const i64 p = G.p(), n = G.n();
    const MiechParams& mp = G.params();
    auto check = [&](bool ok, const std::string& what) {
        rep.checks.push_back(what);
        if (!ok) rep.failures.push_back(what);
    };
    std::vector<i64> binom(static_cast<size_t>(p) + 1, 0);
    binom[0] = 1;
    for (i64 r = 1; r <= p; ++r)
        for (i64 j = r; j >= 1; --j) binom[static_cast<size_t>(j)] += binom[static_cast<size_t>(j - 1)];

    // Commutator chain [s_{i-1}, s] = s_i and centrality of s_{n-1}.
    for (i64 i = 1; i <= n - 2; ++i)
        check(G.comm(G.si(i), G.s()) == G.si(i + 1), "[s_" + std::to_string(i) + ", s] = s_" + std::to_string(i + 1));
    check(G.is_identity(G.comm(G.si(n - 1), G.s())), "s_{n-1} commutes with s");
    check(G.is_identity(G.comm(G.si(n - 1), G.s1())), "s_{n-1} commutes with s_1");
    check(!G.is_identity(G.si(n - 1)), "s_{n-1} is nontrivial");

    // Relation (i): [s_1, s_2] = prod s_j^{a_j}.
    {
        Group::Elt rhs = G.identity();
        for (const auto& [j, aj] : mp.a) rhs = G.mul(rhs, G.power(G.si(j), aj));
        check(G.comm(G.s1(), G.si(2)) == rhs, "[s_1, s_2] = prod s_j^{a_j}");
    }
    // Relation (ii): s^p = s_{n-1}^w and the s_1^p relation.
    check(G.power(G.s(), p) == G.power(G.si(n - 1), mp.w), "s^p = s_{n-1}^w");
    {
        Group::Elt lhs = G.power(G.s1(), p);
        for (i64 j = 2; j <= p && j < n; ++j) lhs = G.mul(lhs, G.power(G.si(j), binom[static_cast<size_t>(j)]));
        check(lhs == G.power(G.si(n - 1), mp.z), "s_1^p s_2^C(p,2) ... = s_{n-1}^z");
    }
    // Relation (iii) for every i.
    for (i64 i = 2; i <= n - 1; ++i) {
        Group::Elt lhs = G.identity();
        for (i64 j = 1; j <= p; ++j) {
            i64 idx = i + j - 1;
            if (idx >= n) break;  // s_j = 1 for j >= n
            lhs = G.mul(lhs, G.power(G.si(idx), binom[static_cast<size_t>(j)]));
        }
        check(G.is_identity(lhs), "power relation (iii) at i = " + std::to_string(i));
    }

    // Uniform-element quadratic: (s s_1^zeta)^p = s_{n-1}^{w + z zeta + psi zeta^2}.
    {
        i64 psi = detail::miech_psi(mp);
        for (i64 zeta = 0; zeta < p; ++zeta) {
            i64 ex = ((mp.w + mp.z * zeta + psi * zeta * zeta) % p + p) % p;
            Group::Elt u = G.mul(G.s(), G.power(G.s1(), zeta));
            check(G.power(u, p) == G.power(G.si(n - 1), ex),
                  "(s s_1^" + std::to_string(zeta) + ")^p matches the quadratic prediction");
            check(G.order(u) == (ex == 0 ? p : p * p),
                  "order of s s_1^" + std::to_string(zeta) + " matches the quadratic prediction");
        }
    }

    // Predicted exponent of the abelian subgroup G_2 for n >= p+2.
    if (n >= p + 2) {
        i64 pred = ipow(p, (n - 2 + p - 2) / (p - 1));  // p^ceil((n-2)/(p-1))
        i64 expg2 = 1;
        for (i64 i = 2; i <= n - 1; ++i) expg2 = std::max(expg2, G.order(G.si(i)));
        check(expg2 == pred, "exp(G_2) matches the power-relation prediction");
    }

    // Randomized associativity and inverse checks.
    {
        std::mt19937_64 rng(12345);
        auto random_elt = [&] {
            Group::Elt g = G.identity();
            for (i64 i = 0; i < n; ++i) g[static_cast<size_t>(i)] = static_cast<i64>(rng() % static_cast<unsigned long long>(p));
            return g;
        };
        i64 triples = light ? 50 : 10000;
        bool assoc = true;
        for (i64 t = 0; t < triples; ++t) {
            Group::Elt a = random_elt(), b = random_elt(), c = random_elt();
            if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
                assoc = false;
                break;
            }
        }
        check(assoc, "associativity on " + std::to_string(triples) + " random triples");
        bool invok = true;
        for (i64 t = 0; t < (light ? 10 : 200); ++t) {
            Group::Elt a = random_elt();
            if (!G.is_identity(G.mul(G.inv(a), a))) {
                invok = false;
                break;
            }
        }
        check(invok, "inv(g) * g = 1 on random elements");
    }

    // Normal-form census: the subgroup generated by s, s_1 exhausts all p^n
    // normal forms (skipped in light mode and above 10^6 elements).
    if (!light && G.size() <= 1000000) {
        std::vector<char> seen(static_cast<size_t>(G.size()), 0);
        std::vector<i64> queue;
        queue.push_back(G.id_of(G.identity()));
        seen[static_cast<size_t>(queue[0])] = 1;
        i64 count = 0;
        Group::Elt gens[2] = {G.s(), G.s1()};
        while (!queue.empty()) {
            i64 id = queue.back();
            queue.pop_back();
            ++count;
            Group::Elt g = G.elt_of(id);
            for (const auto& x : gens) {
                i64 nid = G.id_of(G.mul(g, x));
                if (!seen[static_cast<size_t>(nid)]) {
                    seen[static_cast<size_t>(nid)] = 1;
                    queue.push_back(nid);
                }
            }
        }
        check(count == G.size(), "normal-form census reaches exactly p^n elements");
    }
    return rep;
}

inline Group construct(const MiechParams& mp) {
    Group G(mp);
    VerifyReport rep = verify_relations(G, /*light=*/true);
    if (!rep.ok()) throw domain_error("construct: relation audit failed: " + rep.failures.front());
    return G;
}

// ---------------------------------------------------------------------------
// z-classes and classification.
// ---------------------------------------------------------------------------

struct ZClass {
    Group::Elt representative;  // s * s_1^zeta
    i64 zeta = 0;
    i64 element_order = 0;
    i64 checked_members = 0;
};

namespace detail {

// True iff the two two-step centralizers coincide (degree of commutativity
// >= 1); they differ only at order p^{p+1}.
inline bool centralizers_coincide(const Group& G) {
    return G.is_identity(G.comm(G.s1(), G.si(G.n() - 2)));
}

// The zeta with <s s_1^zeta> G_2 = C_G(G_{n-2}) when the centralizers differ.
inline i64 find_zeta_star(const Group& G) {
    i64 found = -1;
    for (i64 zeta = 0; zeta < G.p(); ++zeta) {
        Group::Elt u = G.mul(G.s(), G.power(G.s1(), zeta));
        if (G.is_identity(G.comm(u, G.si(G.n() - 2)))) {
            if (found >= 0) throw domain_error("z_classes: C_G(G_{n-2}) is not unique");
            found = zeta;
        }
    }
    if (found < 0) throw domain_error("z_classes: C_G(G_{n-2}) not found among maximal subgroups");
    return found;
}

}  // namespace detail

// The z-classes covering the uniform elements G \ (G_1 u C_G(G_{n-2})):
// p classes (representatives s s_1^zeta) when the two-step centralizers
// coincide, p-1 classes otherwise.  Order-constancy on the member cosets
// U_{j=1..p-1} rep^j G_2 is verified by enumeration (sampling above 3*10^4
// members).
inline std::vector<ZClass> z_classes(const Group& G) {
    const i64 p = G.p(), n = G.n();
    bool coincide = detail::centralizers_coincide(G);
    i64 zstar = coincide ? -1 : detail::find_zeta_star(G);

    std::vector<ZClass> classes;
    std::mt19937_64 rng(777);
    for (i64 zeta = 0; zeta < p; ++zeta) {
        if (zeta == zstar) continue;
        ZClass zc;
        zc.zeta = zeta;
        zc.representative = G.mul(G.s(), G.power(G.s1(), zeta));
        zc.element_order = G.order(zc.representative);
        i64 coset = ipow(p, n - 2);
        bool full = (p - 1) * coset <= 30000;
        for (i64 j = 1; j <= p - 1; ++j) {
            Group::Elt base = G.power(zc.representative, j);
            i64 trials = full ? coset : 60;
            for (i64 t = 0; t < trials; ++t) {
                i64 uid = full ? t : static_cast<i64>(rng() % static_cast<unsigned long long>(coset));
                Group::Elt u = G.identity();
                i64 rest = uid;
                for (i64 i = 2; i < n; ++i) {
                    u[static_cast<size_t>(i)] = rest % p;
                    rest /= p;
                }
                if (G.order(G.mul(base, u)) != zc.element_order)
                    throw domain_error("z_classes: non-constant order inside a z-class");
                ++zc.checked_members;
            }
        }
        classes.push_back(std::move(zc));
    }
    return classes;
}

// ---------------------------------------------------------------------------
// Realizability oracle.
// ---------------------------------------------------------------------------

enum class Realizability { Yes, No, Unknown };

struct GeneratingVector {
    std::vector<std::pair<Group::Elt, Group::Elt>> hyperbolic;
    std::vector<std::pair<i64, Group::Elt>> elliptic;  // (order level i, element)
};

struct RealizableResult {
    Realizability verdict = Realizability::No;
    std::optional<GeneratingVector> witness;
    std::string note;
};

namespace detail {

// Subspace lattice of G/Phi(G) = F_p x F_p: 0 trivial, 1..p lines (1,t),
// p+1 the line (0,1), p+2 full.
struct SpanAlgebra {
    i64 p;
    i64 full() const { return p + 2; }
    i64 line_of(i64 x0, i64 x1) const {
        if (x0 == 0 && x1 == 0) return 0;
        if (x0 == 0) return p + 1;
        // Normalize (x0, x1) ~ (1, x1/x0).
        i64 inv = 1;
        for (i64 t = 1; t < p; ++t)
            if ((t * x0) % p == 1) inv = t;
        return 1 + (x1 * inv) % p;
    }
    i64 join(i64 sub, i64 x0, i64 x1) const {
        i64 l = line_of(x0, x1);
        if (l == 0 || l == sub) return sub;
        if (sub == 0) return l;
        return full();  // two distinct lines span everything
    }
};

}  // namespace detail

// Exhaustive generating-vector search for the signature (h; m_1, ..., m_e):
// does some tuple (a_1, b_1, ..., a_h, b_h, X_1, ..., X_r) with the long
// relation prod [a_i, b_i] prod X_j = 1, |X_j| exactly the prescribed p^i,
// and Frattini-spanning images exist?  Runs a forward dynamic program over
// (partial product, spanned subspace of G/Phi(G)) states with one elliptic
// generator solved from the long relation; exhaustive, so "no" is a proof.
inline RealizableResult realizable(const Group& G, const Signature& sig,
                                   i64 budget = 400000000) {
    const i64 p = G.p(), n = G.n();
    const i64 pn = G.size();
    if (pn > 1000000) throw domain_error("realizable: group too large (|G| > 10^6)");
    if (sig.h < 0) throw domain_error("realizable: h must be nonnegative");
    for (i64 m : sig.m)
        if (m < 0) throw domain_error("realizable: multiplicities must be nonnegative");

    RealizableResult res;
    detail::SpanAlgebra span{p};
    const i64 S = p + 3;

    // Element ids, orders, and exact-order strata.
    std::vector<i64> ordv(static_cast<size_t>(pn));
    for (i64 id = 0; id < pn; ++id) ordv[static_cast<size_t>(id)] = G.order(G.elt_of(id));
    std::map<i64, std::vector<i64>> strata;  // level i -> ids of exact order p^i
    for (i64 id = 0; id < pn; ++id) {
        i64 o = ordv[static_cast<size_t>(id)], lvl = 0;
        while (o > 1) {
            o /= p;
            ++lvl;
        }
        if (lvl > 0) strata[lvl].push_back(id);
    }

    // Multiplication as ids; full table when affordable.
    const bool use_table = pn <= 2048;
    std::vector<int> table;
    if (use_table) {
        table.assign(static_cast<size_t>(pn) * static_cast<size_t>(pn), 0);
        for (i64 a = 0; a < pn; ++a) {
            Group::Elt ea = G.elt_of(a);
            for (i64 b = 0; b < pn; ++b)
                table[static_cast<size_t>(a * pn + b)] = static_cast<int>(G.id_of(G.mul(ea, G.elt_of(b))));
        }
    }
    auto mul_id = [&](i64 a, i64 b) -> i64 {
        if (use_table) return table[static_cast<size_t>(a * pn + b)];
        return G.id_of(G.mul(G.elt_of(a), G.elt_of(b)));
    };
    auto fr = [&](i64 id) { return std::pair<i64, i64>{id % p, (id / p) % p}; };

    // Slot list: h hyperbolic slots, then elliptic slots by ascending level
    // with the very last one left implicit (solved from the long relation).
    struct Slot {
        bool hyper;
        i64 level;
    };
    std::vector<Slot> slots;
    for (i64 t = 0; t < sig.h; ++t) slots.push_back({true, 0});
    std::vector<i64> elliptic_levels;
    for (size_t i = 0; i < sig.m.size(); ++i)
        for (i64 t = 0; t < sig.m[i]; ++t) elliptic_levels.push_back(static_cast<i64>(i) + 1);
    for (i64 lvl : elliptic_levels)
        if (strata.find(lvl) == strata.end()) {
            res.note = "no elements of exact order p^" + std::to_string(lvl);
            return res;  // No
        }
    i64 solved_level = -1;
    if (!elliptic_levels.empty()) {
        solved_level = elliptic_levels.back();
        elliptic_levels.pop_back();
    }
    for (i64 lvl : elliptic_levels) slots.push_back({false, lvl});

    // Hyperbolic alphabet: distinct (commutator, span of the pair) values.
    struct HypEntry {
        i64 c;
        i64 sub;
        i64 a, b;
    };
    std::vector<HypEntry> hyp;
    if (sig.h > 0) {
        if (!use_table) {
            res.verdict = Realizability::Unknown;
            res.note = "hyperbolic search not attempted above the table threshold";
            return res;
        }
        std::vector<char> seen(static_cast<size_t>(pn) * static_cast<size_t>(S), 0);
        std::vector<i64> inv_id(static_cast<size_t>(pn));
        for (i64 id = 0; id < pn; ++id) inv_id[static_cast<size_t>(id)] = G.id_of(G.inv(G.elt_of(id)));
        for (i64 a = 0; a < pn; ++a)
            for (i64 b = 0; b < pn; ++b) {
                i64 c = mul_id(mul_id(inv_id[static_cast<size_t>(a)], inv_id[static_cast<size_t>(b)]), mul_id(a, b));
                auto [a0, a1] = fr(a);
                auto [b0, b1] = fr(b);
                i64 sub = span.join(span.line_of(a0, a1), b0, b1);
                i64 key = c * S + sub;
                if (!seen[static_cast<size_t>(key)]) {
                    seen[static_cast<size_t>(key)] = 1;
                    hyp.push_back({c, sub, a, b});
                }
            }
    }

    // Forward DP over (product id, span id) with parent pointers.
    const i64 nstates = pn * S;
    auto state_of = [&](i64 id, i64 sub) { return id * S + sub; };
    std::vector<i64> frontier{state_of(G.id_of(G.identity()), 0)};
    std::vector<std::vector<std::pair<i64, i64>>> parent;  // per slot: state -> (prev, payload)
    i64 work = 0;
    for (const Slot& slot : slots) {
        parent.emplace_back(static_cast<size_t>(nstates), std::pair<i64, i64>{-1, -1});
        auto& par = parent.back();
        std::vector<i64> next;
        auto push = [&](i64 st, i64 prev, i64 payload) {
            if (par[static_cast<size_t>(st)].first >= 0) return;
            par[static_cast<size_t>(st)] = {prev, payload};
            next.push_back(st);
        };
        for (i64 st : frontier) {
            i64 id = st / S, sub = st % S;
            if (slot.hyper) {
                for (size_t hidx = 0; hidx < hyp.size(); ++hidx) {
                    const HypEntry& he = hyp[hidx];
                    i64 nid = mul_id(id, he.c);
                    i64 nsub = sub;
                    auto [a0, a1] = fr(he.a);
                    auto [b0, b1] = fr(he.b);
                    nsub = span.join(span.join(nsub, a0, a1), b0, b1);
                    push(state_of(nid, nsub), st, static_cast<i64>(hidx));
                }
                work += static_cast<i64>(hyp.size());
            } else {
                const auto& elems = strata[slot.level];
                for (i64 x : elems) {
                    auto [x0, x1] = fr(x);
                    push(state_of(mul_id(id, x), span.join(sub, x0, x1)), st, x);
                }
                work += static_cast<i64>(elems.size());
            }
            if (work > budget) {
                res.verdict = Realizability::Unknown;
                res.note = "budget exhausted";
                return res;
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) return res;  // No
    }

    // Close the long relation: the final (implicit) elliptic generator is the
    // inverse of the accumulated product; without one, the product itself
    // must already be trivial with full span.
    i64 hit = -1, last_x = -1;
    for (i64 st : frontier) {
        i64 id = st / S, sub = st % S;
        if (solved_level >= 0) {
            i64 x = G.id_of(G.inv(G.elt_of(id)));
            if (ordv[static_cast<size_t>(x)] != ipow(p, solved_level)) continue;
            auto [x0, x1] = fr(x);
            if (span.join(sub, x0, x1) != span.full()) continue;
            hit = st;
            last_x = x;
            break;
        }
        if (id == 0 && sub == span.full()) {
            hit = st;
            break;
        }
    }
    if (hit < 0) return res;  // No

    // Reconstruct the witness by walking the parent chain.
    GeneratingVector gv;
    std::vector<std::pair<i64, i64>> path;  // (slot index, payload)
    i64 st = hit;
    for (i64 sidx = static_cast<i64>(slots.size()) - 1; sidx >= 0; --sidx) {
        auto [prev, payload] = parent[static_cast<size_t>(sidx)][static_cast<size_t>(st)];
        path.push_back({sidx, payload});
        st = prev;
    }
    std::reverse(path.begin(), path.end());
    for (auto [sidx, payload] : path) {
        if (slots[static_cast<size_t>(sidx)].hyper)
            gv.hyperbolic.push_back({G.elt_of(hyp[static_cast<size_t>(payload)].a),
                                     G.elt_of(hyp[static_cast<size_t>(payload)].b)});
        else
            gv.elliptic.push_back({slots[static_cast<size_t>(sidx)].level, G.elt_of(payload)});
    }
    if (solved_level >= 0) gv.elliptic.push_back({solved_level, G.elt_of(last_x)});

    // Defensive re-check of the witness.
    {
        Group::Elt prod = G.identity();
        i64 sub = 0;
        for (const auto& [a, b] : gv.hyperbolic) {
            prod = G.mul(prod, G.comm(a, b));
            sub = span.join(span.join(sub, a[0], a[1]), b[0], b[1]);
        }
        for (const auto& [lvl, x] : gv.elliptic) {
            prod = G.mul(prod, x);
            sub = span.join(sub, x[0], x[1]);
            if (G.order(x) != ipow(p, lvl)) throw domain_error("realizable: witness order check failed");
        }
        if (!G.is_identity(prod) || sub != span.full())
            throw domain_error("realizable: witness long-relation check failed");
    }
    (void)n;
    res.verdict = Realizability::Yes;
    res.witness = std::move(gv);
    return res;
}

// ---------------------------------------------------------------------------
// Classification.
// ---------------------------------------------------------------------------

// Computes the full profile of a constructed group: exponent data, element
// orders across the z-classes outside G_1, exceptionality, and (optionally,
// via the realizability oracle) the generation-type flags.
inline GroupProfile classify(const Group& G, bool with_flags = false) {
    const i64 p = G.p(), n = G.n();

    // Maximal-class audit: the commutator chain must descend with p-steps to
    // a nontrivial center.
    for (i64 i = 1; i <= n - 2; ++i)
        if (G.comm(G.si(i), G.s()) != G.si(i + 1))
            throw domain_error("classify: not maximal class (commutator chain broken)");
    if (G.is_identity(G.si(n - 1)) || !G.is_identity(G.comm(G.si(n - 1), G.s())) ||
        !G.is_identity(G.comm(G.si(n - 1), G.s1())))
        throw domain_error("classify: not maximal class (center audit failed)");

    bool coincide = detail::centralizers_coincide(G);
    if (!coincide && n != p + 1)
        throw domain_error("classify: c(G) = 0 is only possible at order p^{p+1}");

    // Order census over G \ G_1, one count per z-class.  When c(G) >= 1 the
    // p cosets s s_1^zeta G_2 represent the p uniform z-classes.  When
    // c(G) = 0 the zeta* coset lies inside the two-step centralizer C, and
    // C \ G_2 is a single further z-class of constant element order whose
    // representative the same loop picks up, so counting every zeta once
    // again yields one count per class.
    i64 count_p = 0, count_p2 = 0;
    i64 max_outside = 1;
    for (i64 zeta = 0; zeta < p; ++zeta) {
        Group::Elt u = G.mul(G.s(), G.power(G.s1(), zeta));
        i64 o = G.order(u);
        max_outside = std::max(max_outside, o);
        if (o == p)
            ++count_p;
        else if (o == p * p)
            ++count_p2;
        else
            throw domain_error("classify: element outside G_1 of unexpected order");
    }

    i64 exp_g2 = 1;
    for (i64 i = 2; i <= n - 1; ++i) exp_g2 = std::max(exp_g2, G.order(G.si(i)));
    i64 exp_g1 = std::max(G.order(G.s1()), exp_g2);  // G_1 is regular
    i64 exp_g = std::max(exp_g1, max_outside);
    i64 e = 0;
    for (i64 t = exp_g; t > 1; t /= p) ++e;

    GroupProfile gp;
    gp.profile = PrimeProfile{p, n, e};
    if (n == p + 1) {
        gp.exp_g1 = (exp_g1 == p * p) ? 2 : 1;
        gp.ed_class = (*gp.exp_g1 == 2) ? EdClass::One : EdClass::AtLeastTwo;
        gp.c_zero = !coincide;
    } else {
        gp.ed_class = (exp_g2 == exp_g) ? EdClass::AtLeastTwo : EdClass::One;
        gp.c_zero = false;
    }

    // count_p + count_p2 = p >= 3, so "one class of each order" cannot occur
    // and the exceptional labels below are mutually exclusive.
    if (count_p2 == 0)
        gp.type_class = TypeClass::I;
    else if (count_p == 0)
        gp.type_class = TypeClass::II;
    else if (count_p == 1)
        gp.type_class = TypeClass::IV;
    else if (count_p2 == 1)
        gp.type_class = TypeClass::V;
    else
        gp.type_class = TypeClass::III;
    gp.uniform_orders = uniform_of_type(gp.type_class);
    gp.exceptional = exceptional_of_type(gp.type_class);

    if (with_flags) {
        Signature t1{0, std::vector<i64>(static_cast<size_t>(e), 0)};
        t1.m[0] = 3;
        gp.ppp_type = realizable(G, t1).verdict == Realizability::Yes;
        if (e >= 2) {
            Signature t2{0, std::vector<i64>(static_cast<size_t>(e), 0)};
            t2.m[1] = 3;
            gp.p2_triple_type = realizable(G, t2).verdict == Realizability::Yes;
        }
    }
    return gp;
}

}  // namespace gst
