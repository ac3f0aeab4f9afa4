// Command-line front end.  Every subcommand is a thin adapter over the
// library: parse input (flags, inline JSON, or a JSON file), call one library
// operation, emit text, JSON (schema "gst-1"), or CSV.  Output is
// deterministic: identical inputs produce byte-identical payloads.  Exit
// status is 0 iff the run had no errors and no conformance failures.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gst/group_engine.hpp"

using json = nlohmann::ordered_json;
using namespace gst;

namespace {

// ---------------------------------------------------------------------------
// Serialization helpers.
// ---------------------------------------------------------------------------

const char* type_name(TypeClass t) {
    switch (t) {
        case TypeClass::I: return "I";
        case TypeClass::II: return "II";
        case TypeClass::III: return "III";
        case TypeClass::IV: return "IV";
        case TypeClass::V: return "V";
    }
    return "?";
}

TypeClass type_of_name(const std::string& s) {
    for (TypeClass t : {TypeClass::I, TypeClass::II, TypeClass::III, TypeClass::IV, TypeClass::V})
        if (s == type_name(t)) return t;
    throw domain_error("unknown type class '" + s + "' (expected I..V)");
}

const char* uniform_name(UniformOrders u) {
    switch (u) {
        case UniformOrders::P: return "p";
        case UniformOrders::P2: return "p2";
        case UniformOrders::Both: return "both";
    }
    return "?";
}

const char* exceptional_name(Exceptional x) {
    switch (x) {
        case Exceptional::None: return "none";
        case Exceptional::PExc: return "p";
        case Exceptional::P2Exc: return "p2";
    }
    return "?";
}

json opt_bool(const std::optional<bool>& b) {
    return b ? json(*b) : json(nullptr);
}

json profile_json(const GroupProfile& gp) {
    json j;
    j["p"] = gp.p();
    j["n"] = gp.n();
    j["e"] = gp.e();
    j["uniform_orders"] = uniform_name(gp.uniform_orders);
    j["exceptional"] = exceptional_name(gp.exceptional);
    j["type"] = type_name(gp.type_class);
    j["ed"] = gp.ed_class == EdClass::One ? 1 : 2;
    j["exp_g1"] = gp.exp_g1 ? json(*gp.exp_g1) : json(nullptr);
    j["ppp_type"] = opt_bool(gp.ppp_type);
    j["p2_triple_type"] = opt_bool(gp.p2_triple_type);
    j["c_zero"] = opt_bool(gp.c_zero);
    return j;
}

std::string profile_text(const GroupProfile& gp) {
    std::ostringstream os;
    os << "type " << type_name(gp.type_class) << " (p=" << gp.p() << ", n=" << gp.n()
       << ", e=" << gp.e() << "), ed" << (gp.ed_class == EdClass::One ? " = 1" : " >= 2");
    if (gp.exp_g1) os << ", exp(G_1) = p^" << *gp.exp_g1;
    if (gp.c_zero.value_or(false)) os << ", c(G) = 0";
    if (gp.ppp_type) os << ", (p,p,p)-type: " << (*gp.ppp_type ? "yes" : "no");
    if (gp.p2_triple_type)
        os << ", (p^2,p^2,p^2)-type: " << (*gp.p2_triple_type ? "yes" : "no");
    return os.str();
}

// Inline JSON (leading '{') or a file path.
json load_json(const std::string& src) {
    if (!src.empty() && src.front() == '{') return json::parse(src);
    std::ifstream in(src);
    if (!in) throw domain_error("cannot open input file '" + src + "'");
    return json::parse(in);
}

GroupProfile profile_of_json(const json& j) {
    GroupProfile gp;
    gp.profile = PrimeProfile{j.at("p").get<i64>(), j.at("n").get<i64>(), j.at("e").get<i64>()};
    gp.type_class = type_of_name(j.at("type").get<std::string>());
    gp.uniform_orders = uniform_of_type(gp.type_class);
    gp.exceptional = exceptional_of_type(gp.type_class);
    gp.ed_class = j.at("ed").get<i64>() == 1 ? EdClass::One : EdClass::AtLeastTwo;
    if (j.contains("exp_g1") && !j["exp_g1"].is_null()) gp.exp_g1 = j["exp_g1"].get<i64>();
    if (j.contains("ppp_type") && !j["ppp_type"].is_null()) gp.ppp_type = j["ppp_type"].get<bool>();
    if (j.contains("p2_triple_type") && !j["p2_triple_type"].is_null())
        gp.p2_triple_type = j["p2_triple_type"].get<bool>();
    if (j.contains("c_zero") && !j["c_zero"].is_null()) gp.c_zero = j["c_zero"].get<bool>();
    return gp;
}

MiechParams miech_of_json(const json& j) {
    MiechParams mp;
    mp.p = j.at("p").get<i64>();
    mp.n = j.at("n").get<i64>();
    mp.k = j.at("k").get<i64>();
    if (j.contains("a"))
        for (auto it = j["a"].begin(); it != j["a"].end(); ++it)
            mp.a[std::stoll(it.key())] = it.value().get<i64>();
    mp.w = j.value("w", 0LL);
    mp.z = j.value("z", 0LL);
    return mp;
}

json miech_json(const MiechParams& mp) {
    json j;
    j["p"] = mp.p;
    j["n"] = mp.n;
    j["k"] = mp.k;
    json a = json::object();
    for (const auto& [idx, v] : mp.a) a[std::to_string(idx)] = v;
    j["a"] = a;
    j["w"] = mp.w;
    j["z"] = mp.z;
    return j;
}

// "h;m1,m2,...".
Signature parse_sig(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw domain_error("signature must look like \"h;m1,m2\"");
    Signature sig;
    sig.h = std::stoll(s.substr(0, semi));
    std::stringstream rest(s.substr(semi + 1));
    std::string tok;
    while (std::getline(rest, tok, ',')) sig.m.push_back(std::stoll(tok));
    if (sig.m.empty()) throw domain_error("signature needs at least one multiplicity");
    return sig;
}

json sig_json(const Signature& sig) {
    json j;
    j["h"] = sig.h;
    j["m"] = sig.m;
    return j;
}

// "4:1,5:2" -> {4: 1, 5: 2}.
std::map<i64, i64> parse_amap(const std::string& s) {
    std::map<i64, i64> a;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto colon = tok.find(':');
        if (colon == std::string::npos) throw domain_error("coefficients must look like \"4:1,5:2\"");
        a[std::stoll(tok.substr(0, colon))] = std::stoll(tok.substr(colon + 1));
    }
    return a;
}

json rle_json(const std::vector<i64>& values) {
    json runs = json::array();
    size_t i = 0;
    while (i < values.size()) {
        size_t j = i;
        while (j + 1 < values.size() && values[j + 1] == values[j] + 1) ++j;
        runs.push_back(json::array({values[i], static_cast<i64>(j - i + 1)}));
        i = j + 1;
    }
    return runs;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------------------
// Shared option blocks.
// ---------------------------------------------------------------------------

struct ProfileOpts {
    std::string inline_json;
    i64 p = 0, n = 0, e = 0;
    std::string type;
    i64 ed = 2;
    i64 exp_g1 = 0;        // 0 = unset
    std::string ppp = "";  // "", "true", "false"
    std::string p2t = "";

    void attach(CLI::App* cmd) {
        cmd->add_option("--profile", inline_json, "profile as inline JSON or a file path");
        cmd->add_option("-p", p, "prime p");
        cmd->add_option("-n", n, "order exponent n (|G| = p^n)");
        cmd->add_option("-e", e, "exponent e (exp(G) = p^e)");
        cmd->add_option("--type", type, "type class I..V");
        cmd->add_option("--ed", ed, "exponent depth class: 1 or 2 (meaning >= 2)");
        cmd->add_option("--exp-g1", exp_g1, "exp(G_1) = p^{1|2} (order p^{p+1} only)");
        cmd->add_option("--ppp", ppp, "(p,p,p)-type flag: true|false")
            ->check(CLI::IsMember({"true", "false"}));
        cmd->add_option("--p2t", p2t, "(p^2,p^2,p^2)-type flag: true|false")
            ->check(CLI::IsMember({"true", "false"}));
    }

    GroupProfile resolve() const {
        if (!inline_json.empty()) return profile_of_json(load_json(inline_json));
        if (p == 0 || n == 0 || e == 0 || type.empty())
            throw domain_error("provide --profile or all of -p, -n, -e, --type");
        GroupProfile gp;
        gp.profile = PrimeProfile{p, n, e};
        gp.type_class = type_of_name(type);
        gp.uniform_orders = uniform_of_type(gp.type_class);
        gp.exceptional = exceptional_of_type(gp.type_class);
        gp.ed_class = ed == 1 ? EdClass::One : EdClass::AtLeastTwo;
        if (exp_g1 != 0) gp.exp_g1 = exp_g1;
        if (!ppp.empty()) gp.ppp_type = ppp == "true";
        if (!p2t.empty()) gp.p2_triple_type = p2t == "true";
        auto v = validate(gp);
        if (!v.empty()) throw domain_error("invalid profile: " + v.front());
        return gp;
    }
};

struct MiechOpts {
    std::string inline_json;
    i64 p = 0, n = 0, k = 0, w = 0, z = 0;
    std::string amap;

    void attach(CLI::App* cmd) {
        cmd->add_option("--params", inline_json, "Miech parameters as inline JSON or a file path");
        cmd->add_option("-p", p, "prime p");
        cmd->add_option("-n", n, "order exponent n");
        cmd->add_option("-k", k, "number of commutator coefficients");
        cmd->add_option("-a,--a", amap, "coefficients a_j as \"j:v,j:v\"");
        cmd->add_option("-w", w, "s^p = s_{n-1}^w exponent");
        cmd->add_option("-z", z, "s_1-relation exponent z");
    }

    MiechParams resolve() const {
        if (!inline_json.empty()) return miech_of_json(load_json(inline_json));
        if (p == 0 || n == 0) throw domain_error("provide --params or -p and -n");
        MiechParams mp;
        mp.p = p;
        mp.n = n;
        mp.k = k;
        if (!amap.empty()) mp.a = parse_amap(amap);
        mp.w = w;
        mp.z = z;
        auto v = validate_miech(mp);
        if (!v.empty()) throw domain_error("invalid parameters: " + v.front());
        return mp;
    }
};

// ---------------------------------------------------------------------------
// Subcommand bodies (each returns the process exit code).
// ---------------------------------------------------------------------------

int run_omega(i64 p, i64 N, std::vector<i64> ys, const std::string& range, bool brute,
              const std::string& format) {
    if (!range.empty()) {
        i64 lo, hi;
        if (std::sscanf(range.c_str(), "%lld..%lld", &lo, &hi) != 2 || lo > hi)
            throw domain_error("--range must look like \"60..66\"");
        for (i64 y = lo; y <= hi; ++y) ys.push_back(y);
    }
    if (ys.empty()) throw domain_error("provide -y or --range");
    OmegaLevel lv{p, N};
    json results = json::array();
    for (i64 y : ys) {
        bool member;
        json entry;
        entry["y"] = y;
        if (brute && N >= 1) {
            auto sol = omega_brute(lv, y);
            member = sol.has_value();
            if (sol) {
                entry["member"] = true;
                entry["witness"] = json{{"h", sol->h}, {"x", sol->x}};
            } else {
                entry["member"] = false;
            }
        } else {
            member = omega_contains(lv, y);
            entry["member"] = member;
        }
        results.push_back(entry);
        if (format == "text") std::cout << y << ":" << (member ? "true" : "false") << "\n";
    }
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "omega";
        j["p"] = p;
        j["N"] = N;
        j["results"] = results;
        emit(j);
    }
    return 0;
}

int run_sigma_stable(i64 p, i64 e, const std::string& format) {
    i64 sigma = sigma_stable(p, e);
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "sigma-stable";
        j["p"] = p;
        j["e"] = e;
        j["sigma"] = sigma;
        emit(j);
    } else {
        std::cout << sigma << "\n";
    }
    return 0;
}

int run_genus(i64 p, i64 n, i64 e, const std::string& sigstr, const std::string& format) {
    PrimeProfile pr{p, n, e};
    auto v = validate_prime_profile(pr);
    if (!v.empty()) throw domain_error("invalid profile: " + v.front());
    Signature sig = parse_sig(sigstr);
    i64 gr = reduced_genus(sig, pr);
    i64 g = genus(sig, pr);
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "genus";
        j["p"] = p;
        j["n"] = n;
        j["e"] = e;
        j["sig"] = sig_json(sig);
        j["reduced_genus"] = gr;
        j["genus"] = g;
        emit(j);
    } else {
        std::cout << "reduced_genus " << gr << "\n" << "genus " << g << "\n";
    }
    return 0;
}

json window_json(const SpectrumWindow& w, bool full) {
    json j;
    j["bound"] = w.bound;
    j["min_reduced"] = w.min_reduced;
    j["stable_reduced"] = w.stable_reduced ? json(*w.stable_reduced) : json(nullptr);
    j["gaps"] = w.gaps;
    j["count"] = static_cast<i64>(w.reduced_values.size());
    j["values_runlength"] = rle_json(w.reduced_values);
    if (full || w.reduced_values.size() <= 10000) j["values"] = w.reduced_values;
    return j;
}

int run_spectrum(const ProfileOpts& po, i64 bound, const std::string& mode,
                 const std::string& format, bool full) {
    GroupProfile gp = po.resolve();
    std::optional<SpectrumWindow> wa, we;
    if (mode == "assemble" || mode == "both") wa = assemble(gp, bound);
    if (mode == "enumerate" || mode == "both") we = enumerate_window(gp, bound);
    const SpectrumWindow& w = wa ? *wa : *we;
    bool agree = true;
    if (mode == "both") agree = wa->reduced_values == we->reduced_values;

    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "spectrum";
        j["profile"] = profile_json(gp);
        j["mode"] = mode;
        json body = window_json(w, full);
        for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = it.value();
        if (mode == "both") {
            j["agreement"] = agree ? "AGREE" : "DISAGREE";
            if (!agree) {
                std::vector<i64> only_a, only_e;
                std::set_difference(wa->reduced_values.begin(), wa->reduced_values.end(),
                                    we->reduced_values.begin(), we->reduced_values.end(),
                                    std::back_inserter(only_a));
                std::set_difference(we->reduced_values.begin(), we->reduced_values.end(),
                                    wa->reduced_values.begin(), wa->reduced_values.end(),
                                    std::back_inserter(only_e));
                j["only_assemble"] = only_a;
                j["only_enumerate"] = only_e;
            }
        }
        emit(j);
    } else if (format == "csv") {
        for (i64 v : w.reduced_values) std::cout << v << "\n";
    } else {
        std::cout << profile_text(gp) << "\n";
        if (mode == "both") std::cout << (agree ? "AGREE" : "DISAGREE") << "\n";
        std::cout << "min_reduced " << w.min_reduced << "\n";
        if (w.stable_reduced)
            std::cout << "stable_reduced " << *w.stable_reduced << "\n";
        else
            std::cout << "stable_reduced unconfirmed\n";
        std::cout << "values " << w.reduced_values.size() << ", gaps " << w.gaps.size()
                  << " in [" << w.min_reduced << ", " << w.bound << "]\n";
    }
    return agree ? 0 : 1;
}

int run_classify(const MiechOpts& mo, bool with_flags, const std::string& format) {
    Group G = construct(mo.resolve());
    GroupProfile gp = classify(G, with_flags);
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "classify";
        j["params"] = miech_json(G.params());
        j["profile"] = profile_json(gp);
        emit(j);
    } else {
        std::cout << profile_text(gp) << "\n";
    }
    return 0;
}

int run_zclasses(const MiechOpts& mo, const std::string& format) {
    Group G = construct(mo.resolve());
    auto classes = z_classes(G);
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "zclasses";
        j["params"] = miech_json(G.params());
        j["count"] = static_cast<i64>(classes.size());
        json arr = json::array();
        for (const auto& zc : classes)
            arr.push_back(json{{"zeta", zc.zeta},
                               {"order", zc.element_order},
                               {"checked_members", zc.checked_members}});
        j["classes"] = arr;
        emit(j);
    } else {
        std::cout << classes.size() << " classes, orders [";
        for (size_t i = 0; i < classes.size(); ++i)
            std::cout << (i ? "," : "") << classes[i].element_order;
        std::cout << "]\n";
    }
    return 0;
}

int run_verify_group(const MiechOpts& mo, bool light, const std::string& format) {
    Group G(mo.resolve());
    VerifyReport rep = verify_relations(G, light);
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "verify-group";
        j["params"] = miech_json(G.params());
        j["checks"] = static_cast<i64>(rep.checks.size());
        j["failures"] = rep.failures;
        j["ok"] = rep.ok();
        emit(j);
    } else {
        std::cout << rep.checks.size() << " checks, " << rep.failures.size() << " failures\n";
        for (const auto& f : rep.failures) std::cout << "FAIL " << f << "\n";
    }
    return rep.ok() ? 0 : 1;
}

int run_realizable(const MiechOpts& mo, const std::string& sigstr, i64 budget,
                   const std::string& format) {
    Group G = construct(mo.resolve());
    Signature sig = parse_sig(sigstr);
    RealizableResult r = realizable(G, sig, budget);
    const char* verdict = r.verdict == Realizability::Yes
                              ? "yes"
                              : (r.verdict == Realizability::No ? "no" : "unknown");
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "realizable";
        j["params"] = miech_json(G.params());
        j["sig"] = sig_json(sig);
        j["verdict"] = verdict;
        j["note"] = r.note;
        if (r.witness) {
            json wit;
            json hy = json::array();
            for (const auto& [a, b] : r.witness->hyperbolic)
                hy.push_back(json::array({a, b}));
            wit["hyperbolic"] = hy;
            json el = json::array();
            for (const auto& [lvl, x] : r.witness->elliptic)
                el.push_back(json{{"order_level", lvl}, {"element", x}});
            wit["elliptic"] = el;
            j["witness"] = wit;
        } else {
            j["witness"] = nullptr;
        }
        emit(j);
    } else {
        std::cout << verdict << "\n";
        if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
        if (r.witness) {
            for (const auto& [a, b] : r.witness->hyperbolic) {
                std::cout << "hyperbolic a=(";
                for (size_t i = 0; i < a.size(); ++i) std::cout << (i ? "," : "") << a[i];
                std::cout << ") b=(";
                for (size_t i = 0; i < b.size(); ++i) std::cout << (i ? "," : "") << b[i];
                std::cout << ")\n";
            }
            for (const auto& [lvl, x] : r.witness->elliptic) {
                std::cout << "elliptic order p^" << lvl << " x=(";
                for (size_t i = 0; i < x.size(); ++i) std::cout << (i ? "," : "") << x[i];
                std::cout << ")\n";
            }
        }
    }
    return 0;
}

int run_verify_tables(i64 p, i64 n, i64 hmax, i64 m1max, i64 m2max, bool census_only,
                      i64 budget, const std::string& format) {
    // Sweep every Miech parameter tuple at (p, n), classify each group, and
    // (unless census-only) compare the realizability oracle against the
    // admissibility tables over the signature box.
    std::vector<MiechParams> sweep;
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
                for (i64 z = 0; z < p; ++z) {
                    MiechParams mp;
                    mp.p = p;
                    mp.n = n;
                    mp.k = k;
                    mp.a = a;
                    mp.w = w;
                    mp.z = z;
                    sweep.push_back(std::move(mp));
                }
    }

    bool compare = !census_only && ipow(p, n) <= 1000000;
    std::map<std::string, i64> census;
    i64 compared = 0, mismatches = 0, undecided = 0, errors = 0;
    json mism = json::array();
    for (const MiechParams& mp : sweep) {
        try {
            Group G(mp);
            GroupProfile gp = classify(G, /*with_flags=*/compare);
            std::string key = std::string(type_name(gp.type_class)) +
                              (gp.ed_class == EdClass::One ? "/ed1" : "/ed2");
            ++census[key];
            if (!compare) continue;
            for (i64 h = 0; h <= hmax; ++h)
                for (i64 m1 = 0; m1 <= m1max; ++m1)
                    for (i64 m2 = 0; m2 <= m2max; ++m2) {
                        Signature sig;
                        sig.h = h;
                        sig.m.assign(static_cast<size_t>(gp.e()), 0);
                        sig.m[0] = m1;
                        if (gp.e() >= 2) sig.m[1] = m2;
                        else if (m2 > 0) continue;
                        RealizableResult r = realizable(G, sig, budget);
                        if (r.verdict == Realizability::Unknown) {
                            ++undecided;
                            continue;
                        }
                        ++compared;
                        if ((r.verdict == Realizability::Yes) != admissible(gp, sig)) {
                            ++mismatches;
                            json m;
                            m["params"] = miech_json(mp);
                            m["sig"] = sig_json(sig);
                            m["oracle"] = r.verdict == Realizability::Yes;
                            mism.push_back(m);
                        }
                    }
        } catch (const error& ex) {
            ++errors;
            if (format != "json") std::cerr << "error: " << ex.what() << "\n";
        }
    }

    bool ok = mismatches == 0 && errors == 0;
    if (format == "json") {
        json j;
        j["schema"] = "gst-1";
        j["command"] = "verify-tables";
        j["p"] = p;
        j["n"] = n;
        j["groups"] = static_cast<i64>(sweep.size());
        json c = json::object();
        for (const auto& [k, v] : census) c[k] = v;
        j["census"] = c;
        j["compared"] = compared;
        j["mismatches"] = mism;
        j["undecided"] = undecided;
        j["errors"] = errors;
        j["result"] = ok ? "PASS" : "FAIL";
        emit(j);
    } else {
        std::cout << sweep.size() << " parameter tuples at p=" << p << ", n=" << n << "\n";
        for (const auto& [k, v] : census) std::cout << "  " << k << ": " << v << "\n";
        if (compare)
            std::cout << compared << " (group, signature) pairs compared, " << mismatches
                      << " mismatches, " << undecided << " undecided\n";
        else
            std::cout << "census only (no oracle comparison)\n";
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus spectra of maximal-class p-groups"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    // omega
    auto* omega = app.add_subcommand("omega", "membership in the diophantine set Omega_N(p)");
    i64 o_p = 3, o_N = 1;
    std::vector<i64> o_y;
    std::string o_range;
    bool o_brute = false;
    omega->add_option("-p", o_p, "prime p")->required();
    omega->add_option("-N", o_N, "level N >= 0")->required();
    omega->add_option("-y", o_y, "value(s) to test");
    omega->add_option("--range", o_range, "inclusive range \"lo..hi\"");
    omega->add_flag("--brute", o_brute, "use the reachability oracle (emits witnesses)");

    // sigma-stable
    auto* sst = app.add_subcommand("sigma-stable", "least stable point sigma_e(p) of Omega_e(p)");
    i64 s_p = 3, s_e = 2;
    sst->add_option("-p", s_p, "prime p")->required();
    sst->add_option("-e", s_e, "level e >= 1")->required();

    // genus
    auto* gen = app.add_subcommand("genus", "genus and reduced genus of a signature");
    i64 g_p = 3, g_n = 5, g_e = 2;
    std::string g_sig;
    gen->add_option("-p", g_p, "prime p")->required();
    gen->add_option("-n", g_n, "order exponent n")->required();
    gen->add_option("-e", g_e, "exponent e")->required();
    gen->add_option("--sig", g_sig, "signature \"h;m1,m2,...\"")->required();

    // spectrum
    auto* spec = app.add_subcommand("spectrum", "reduced genus spectrum window of a profile");
    ProfileOpts spec_po;
    spec_po.attach(spec);
    i64 sp_bound = 0;
    std::string sp_mode = "assemble";
    bool sp_full = false;
    spec->add_option("--bound", sp_bound, "window upper bound (reduced genus)")->required();
    spec->add_option("--mode", sp_mode, "assemble|enumerate|both")
        ->check(CLI::IsMember({"assemble", "enumerate", "both"}));
    spec->add_flag("--full", sp_full, "emit the full value list even when large");

    // classify
    auto* cls = app.add_subcommand("classify", "construct a group and compute its profile");
    MiechOpts cls_mo;
    cls_mo.attach(cls);
    bool cls_flags = false;
    cls->add_flag("--flags", cls_flags, "also decide the generation-type flags (oracle)");

    // zclasses
    auto* zc = app.add_subcommand("zclasses", "uniform z-classes of a constructed group");
    MiechOpts zc_mo;
    zc_mo.attach(zc);

    // verify-group
    auto* vg = app.add_subcommand("verify-group", "full relation and consistency audit");
    MiechOpts vg_mo;
    vg_mo.attach(vg);
    bool vg_light = false;
    vg->add_flag("--light", vg_light, "skip the census and heavy randomized checks");

    // realizable
    auto* rz = app.add_subcommand("realizable", "signature realizability by generating vector");
    MiechOpts rz_mo;
    rz_mo.attach(rz);
    std::string rz_sig;
    i64 rz_budget = 400000000;
    rz->add_option("--sig", rz_sig, "signature \"h;m1,m2,...\"")->required();
    rz->add_option("--budget", rz_budget, "search work budget");

    // verify-tables
    auto* vt = app.add_subcommand("verify-tables",
                                  "sweep Miech parameters; census and oracle-vs-table check");
    i64 vt_p = 3, vt_n = 5, vt_hmax = 1, vt_m1 = 4, vt_m2 = 3, vt_budget = 400000000;
    bool vt_census = false;
    vt->add_option("-p", vt_p, "prime p")->required();
    vt->add_option("-n", vt_n, "order exponent n")->required();
    vt->add_option("--hmax", vt_hmax, "signature box: h <= hmax");
    vt->add_option("--m1max", vt_m1, "signature box: m1 <= m1max");
    vt->add_option("--m2max", vt_m2, "signature box: m2 <= m2max");
    vt->add_flag("--census-only", vt_census, "skip the realizability comparison");
    vt->add_option("--budget", vt_budget, "per-call oracle budget");

    CLI11_PARSE(app, argc, argv);

    try {
        if (omega->parsed()) return run_omega(o_p, o_N, o_y, o_range, o_brute, format);
        if (sst->parsed()) return run_sigma_stable(s_p, s_e, format);
        if (gen->parsed()) return run_genus(g_p, g_n, g_e, g_sig, format);
        if (spec->parsed()) return run_spectrum(spec_po, sp_bound, sp_mode, format, sp_full);
        if (cls->parsed()) return run_classify(cls_mo, cls_flags, format);
        if (zc->parsed()) return run_zclasses(zc_mo, format);
        if (vg->parsed()) return run_verify_group(vg_mo, vg_light, format);
        if (rz->parsed()) return run_realizable(rz_mo, rz_sig, rz_budget, format);
        if (vt->parsed())
            return run_verify_tables(vt_p, vt_n, vt_hmax, vt_m1, vt_m2, vt_census, vt_budget,
                                     format);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
