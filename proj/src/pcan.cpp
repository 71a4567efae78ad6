#include "pcanlab/pcan.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pcanlab/errors.hpp"
#include "pcanlab/sl2oracle.hpp"

namespace pcanlab {

using ojson = nlohmann::ordered_json;

const char* basis_name(BasisKind k) {
    switch (k) {
    case BasisKind::regular: return "regular";
    case BasisKind::spherical: return "spherical";
    case BasisKind::antispherical: return "antispherical";
    }
    return "?";
}

const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::internal_p0: return "internal_p0";
    case Provenance::file: return "file";
    case Provenance::oracle_v1: return "oracle_v1";
    }
    return "?";
}

bool PCanTable::has(const Wext& w) const {
    return entries.count(w) || provenance == Provenance::internal_p0;
}

Terms PCanTable::entry(const Wext& w) const {
    auto it = entries.find(w);
    if (it != entries.end()) return it->second;
    if (provenance != Provenance::internal_p0)
        throw MissingEntry("table has no entry for " + group().str(w));
    switch (basis) {
    case BasisKind::regular: return mod->hecke().kl(w);
    case BasisKind::spherical: return mod->canonical(w, Side::sph);
    case BasisKind::antispherical: return mod->canonical(w, Side::asph);
    }
    return {};
}

Terms pcan_p0(const Hecke& H, const Wext& w) { return H.kl(w); }

PCanTable make_p0_table(std::shared_ptr<const SphMod> mod, BasisKind kind, int max_len) {
    PCanTable t;
    t.type = mod->group().tag();
    t.p = 0;
    t.basis = kind;
    t.provenance = Provenance::internal_p0;
    t.note = "internal_p0";
    t.mod = std::move(mod);
    if (max_len >= 0)
        for (const auto& w : t.group().elements_up_to(max_len)) {
            if (kind != BasisKind::regular && !t.group().coset_min(w)) continue;
            t.entries.emplace(w, t.entry(w));
        }
    return t;
}

std::shared_ptr<const SphMod> module_for(const std::string& tag) {
    static std::mutex mu;
    static std::map<std::string, std::shared_ptr<const SphMod>> cache;
    std::lock_guard lock(mu);
    auto it = cache.find(tag);
    if (it != cache.end()) return it->second;
    auto G = WextGroup::from_tag(tag);
    auto H = std::make_shared<Hecke>(G);
    auto S = std::make_shared<SphMod>(H);
    cache.emplace(tag, S);
    return S;
}

std::string bundled_table_path(const std::string& name) { return std::string(PCANLAB_DATA_DIR) + "/" + name; }

namespace {

Wext parse_elt(const WextGroup& G, const ojson& j) {
    if (!j.is_object()) throw SchemaError("element must be an object");
    if (j.contains("omega")) {
        if (!j["omega"].is_number_integer() || !j.contains("word") || !j["word"].is_array())
            throw SchemaError("element needs integer omega and word array");
        int oi = j["omega"].get<int>();
        if (oi < 0 || oi >= static_cast<int>(G.omegas().size())) throw SchemaError("omega index out of range");
        std::vector<int> word;
        for (const auto& g : j["word"]) {
            if (!g.is_number_integer()) throw SchemaError("word entries must be integers");
            int gi = g.get<int>();
            if (gi < 0 || gi >= G.num_gens()) throw SchemaError("generator index out of range");
            word.push_back(gi);
        }
        Wext x = G.from_word(G.omegas()[oi], word);
        if (G.length(x) != static_cast<int>(word.size())) throw SchemaError("word is not reduced");
        return x;
    }
    if (j.contains("w") && j.contains("t")) {
        std::vector<int> w;
        Weight t;
        for (const auto& g : j["w"]) {
            int i = g.get<int>();
            if (i < 0 || i >= G.datum().rank()) throw SchemaError("finite generator out of range");
            w.push_back(i);
        }
        for (const auto& c : j["t"]) t.push_back(c.get<int>());
        if (static_cast<int>(t.size()) != G.dim()) throw SchemaError("translation has wrong rank");
        return G.make(G.fin().from_word(w), t);
    }
    throw SchemaError("element needs {omega, word} or {w, t}");
}

ojson elt_json(const WextGroup& G, const Wext& x) {
    auto d = G.omega_split(x);
    ojson j;
    j["omega"] = G.omega_index(d.omega);
    j["word"] = d.word;
    return j;
}

LaurentInt parse_poly(const ojson& j) {
    if (!j.is_object()) throw SchemaError("poly must be an object");
    LaurentInt r;
    for (auto it = j.begin(); it != j.end(); ++it) {
        int e = 0;
        try {
            size_t pos = 0;
            e = std::stoi(it.key(), &pos);
            if (pos != it.key().size()) throw 0;
        } catch (...) {
            throw SchemaError("bad exponent '" + it.key() + "'");
        }
        mpz_class c;
        if (it.value().is_number_integer()) c = mpz_class(std::to_string(it.value().get<long long>()));
        else if (it.value().is_string()) {
            if (c.set_str(it.value().get<std::string>(), 10) != 0) throw SchemaError("bad coefficient");
        } else {
            throw SchemaError("coefficient must be an integer");
        }
        if (c == 0) throw SchemaError("zero coefficient stored");
        if (r.coeff(e) != 0) throw SchemaError("duplicate exponent");
        r += LaurentInt::monomial(e, c);
    }
    return r;
}

ojson poly_json(const LaurentInt& p) {
    ojson j = ojson::object();
    for (const auto& [e, c] : p.terms()) {
        if (c.fits_slong_p()) j[std::to_string(e)] = c.get_si();
        else j[std::to_string(e)] = c.get_str();
    }
    return j;
}

}  // namespace

PCanTable parse_table(const std::string& text, std::shared_ptr<const SphMod> mod) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const std::exception& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw SchemaError("table must be an object");
    if (j.value("schema", "") != "pcan/1") throw SchemaError("schema must be pcan/1");
    for (const char* k : {"type", "p", "basis", "entries"})
        if (!j.contains(k)) throw SchemaError(std::string("missing field ") + k);
    PCanTable t;
    if (!j["type"].is_string() || !j["p"].is_number_integer() || !j["basis"].is_string() || !j["entries"].is_array())
        throw SchemaError("bad header field types");
    t.type = j["type"].get<std::string>();
    t.p = j["p"].get<int>();
    if (t.p < 0) throw SchemaError("p must be nonnegative");
    std::string b = j["basis"].get<std::string>();
    if (b == "regular") t.basis = BasisKind::regular;
    else if (b == "spherical") t.basis = BasisKind::spherical;
    else if (b == "antispherical") t.basis = BasisKind::antispherical;
    else throw SchemaError("unknown basis '" + b + "'");
    t.graded = j.value("graded", true);
    t.note = j.value("provenance", "");
    t.provenance = Provenance::file;
    try {
        t.mod = mod ? mod : module_for(t.type);
    } catch (const Error& e) {
        throw SchemaError("unusable type tag: " + std::string(e.what()));
    }
    const WextGroup& G = t.group();
    const bool module = t.basis != BasisKind::regular;
    for (const auto& ej : j["entries"]) {
        if (!ej.is_object() || !ej.contains("target") || !ej.contains("coeffs") || !ej["coeffs"].is_array())
            throw SchemaError("entry needs target and coeffs");
        Wext target = parse_elt(G, ej["target"]);
        if (module && !G.coset_min(target)) throw SchemaError("module entry index is not minimal: " + G.str(target));
        Terms terms;
        for (const auto& cj : ej["coeffs"]) {
            if (!cj.is_object() || !cj.contains("elt") || !cj.contains("poly")) throw SchemaError("coefficient needs elt and poly");
            Wext y = parse_elt(G, cj["elt"]);
            if (module && !G.coset_min(y)) throw SchemaError("module key is not minimal: " + G.str(y));
            LaurentInt c = parse_poly(cj["poly"]);
            if (terms.count(y)) throw SchemaError("duplicate coefficient key");
            terms.emplace(y, c);
        }
        if (!t.entries.emplace(target, terms).second) throw SchemaError("duplicate entry " + G.str(target));
    }
    // validation
    for (const auto& [w, terms] : t.entries) {
        auto it = terms.find(w);
        if (it == terms.end() || it->second != LaurentInt(1))
            throw TriangularityViolation("entry " + G.str(w) + " lacks coefficient 1 on its index");
        for (const auto& [y, c] : terms) {
            if (y != w && !G.bruhat_leq(y, w))
                throw TriangularityViolation("entry " + G.str(w) + " has key " + G.str(y) + " not below it");
            for (const auto& [e, a] : c.terms())
                if (a < 0)
                    throw PositivityViolation("entry " + G.str(w) + ", key " + G.str(y) + ", exponent " +
                                              std::to_string(e));
        }
    }
    Report om = verify_omega(t);
    if (!om.pass) throw SchemaError("Omega-inconsistent table: " + (om.lines.empty() ? "" : om.lines.back()));
    return t;
}

PCanTable load_table(const std::string& path, std::shared_ptr<const SphMod> mod) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_table(ss.str(), std::move(mod));
}

std::string table_to_string(const PCanTable& t) {
    const WextGroup& G = t.group();
    ojson head;
    head["schema"] = "pcan/1";
    head["type"] = t.type;
    head["p"] = t.p;
    head["basis"] = basis_name(t.basis);
    head["graded"] = t.graded;
    head["provenance"] = t.note.empty() ? std::string(provenance_name(t.provenance)) : t.note;
    std::string out = head.dump();
    out.pop_back();
    out += ",\"entries\":[";
    std::vector<Wext> keys;
    for (const auto& kv : t.entries) keys.push_back(kv.first);
    std::sort(keys.begin(), keys.end(), [&G](const Wext& a, const Wext& b) { return G.canonical_less(a, b); });
    bool first = true;
    for (const auto& w : keys) {
        ojson e;
        e["target"] = elt_json(G, w);
        e["coeffs"] = ojson::array();
        for (const auto& [y, c] : sorted_terms(G, t.entries.at(w))) {
            ojson cj;
            cj["elt"] = elt_json(G, y);
            cj["poly"] = poly_json(c);
            e["coeffs"].push_back(cj);
        }
        out += first ? "\n" : ",\n";
        first = false;
        out += e.dump();
    }
    out += "\n]}\n";
    return out;
}

void save_table(const PCanTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SchemaError("cannot write " + path);
    out << table_to_string(t);
}

ModElt pcan_asph(const PCanTable& t, const Wext& w) {
    const SphMod& S = *t.mod;
    switch (t.basis) {
    case BasisKind::regular: return S.project(t.entry(w), Side::asph);
    case BasisKind::antispherical:
        if (!t.group().coset_min(w)) return S.zero(Side::asph);
        return ModElt{Side::asph, t.entry(w)};
    case BasisKind::spherical: break;
    }
    throw DatumMismatch("antispherical elements need a regular or antispherical table");
}

ModElt pcan_sph(const PCanTable& t, const Wext& x) {
    const SphMod& S = *t.mod;
    const WextGroup& G = t.group();
    if (!G.coset_min(x)) throw NotMinimal(G.str(x) + " is not a minimal coset representative");
    if (t.basis == BasisKind::spherical) return ModElt{Side::sph, t.entry(x)};
    if (t.basis != BasisKind::regular) throw DatumMismatch("spherical elements need a regular or spherical table");
    // peel off eta(M_y), whose leading term is H_{w0 y}
    Terms rest = t.entry(G.mul(G.w0(), x));
    ModElt m{Side::sph, {}};
    int lw0 = G.length(G.w0());
    while (!rest.empty()) {
        Wext top = rest.begin()->first;
        int lt = G.length(top);
        for (const auto& kv : rest) {
            int l = G.length(kv.first);
            if (l > lt) {
                top = kv.first;
                lt = l;
            }
        }
        Wext y = G.mul(G.w0(), top);
        if (G.length(y) != lt - lw0 || !G.coset_min(y))
            throw TriangularityViolation("entry of " + G.str(G.mul(G.w0(), x)) + " is not in the image of eta");
        LaurentInt c = rest.at(top);
        add_to(m.terms, y, c);
        add_to(rest, S.eta(ModElt{Side::sph, {{y, c}}}), LaurentInt(-1));
    }
    return m;
}

std::string Report::str() const {
    std::string s = name + ": " + (pass ? "PASS" : "FAIL");
    if (!hypothesis_ok) s += " (hypothesis violated: " + hypothesis + ")";
    s += "\n";
    for (const auto& [l, r] : sides) s += "  lhs = " + l + "\n  rhs = " + r + "\n";
    for (const auto& l : lines) s += "  " + l + "\n";
    return s;
}

WeightMultiset weyl_character(const RootDatum& rd, const Weight& l) {
    if (!rd.is_dominant(l)) throw NotDominant("Weyl character needs a dominant weight");
    int n = rd.rank();
    const auto& pc = rd.pos_coroots();
    auto form = [&](const Weight& a, const Weight& b) {
        long s = 0;
        for (const auto& c : pc) s += static_cast<long>(rd.pair(a, c)) * rd.pair(b, c);
        return s;
    };
    // bound on depth: lowest weight w0(l) in simple-root coordinates
    FiniteWeyl W(rd);
    std::vector<int> depth(n, 0);
    Weight cur = l;
    auto w0word = W.word(W.longest());
    for (auto it = w0word.rbegin(); it != w0word.rend(); ++it) {
        int c = rd.pair_simple(cur, *it);
        depth[*it] += c;
        cur = rd.reflect(cur, *it);
    }
    auto weight_of = [&](const std::vector<int>& c) {
        Weight mu = l;
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < rd.dim(); ++k) mu[k] -= c[i] * rd.simple_roots()[i][k];
        return mu;
    };
    std::vector<std::vector<int>> all{{}};
    for (int i = 0; i < n; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& c : all)
            for (int k = 0; k <= depth[i]; ++k) {
                auto d = c;
                d.push_back(k);
                next.push_back(d);
            }
        all.swap(next);
    }
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        int ha = 0, hb = 0;
        for (int x : a) ha += x;
        for (int x : b) hb += x;
        return ha < hb;
    });
    Weight lr = add(scale(l, 2), rd.two_rho());  // 2(l + rho)
    std::map<std::vector<int>, long> mult;
    const auto& coeffs = rd.pos_root_coeffs();
    for (const auto& c : all) {
        if (std::all_of(c.begin(), c.end(), [](int x) { return x == 0; })) {
            mult[c] = 1;
            continue;
        }
        Weight mu = weight_of(c);
        Weight mr = add(scale(mu, 2), rd.two_rho());
        long lhs = form(lr, lr) - form(mr, mr);  // 4(|l+rho|^2 - |mu+rho|^2)
        long rhs = 0;
        for (size_t a = 0; a < coeffs.size(); ++a) {
            const Weight& alpha = rd.pos_roots()[a];
            for (int k = 1;; ++k) {
                std::vector<int> d = c;
                bool ok = true;
                for (int i = 0; i < n; ++i) {
                    d[i] -= k * coeffs[a][i];
                    if (d[i] < 0) ok = false;
                }
                if (!ok) break;
                auto it = mult.find(d);
                if (it == mult.end() || it->second == 0) continue;
                rhs += 8 * form(add(mu, scale(alpha, k)), alpha) * it->second;
            }
        }
        if (lhs == 0) {
            mult[c] = 0;
            continue;
        }
        mult[c] = rhs / lhs;
    }
    WeightMultiset out;
    for (const auto& [c, m] : mult)
        if (m) out.push_back({weight_of(c), m});
    std::sort(out.begin(), out.end());
    return out;
}

WeightMultiset sl2_tilting_weights(int lambda, int p) {
    WeightMultiset out;
    for (const auto& [k, m] : sl2_tilting_char(lambda, p)) out.push_back({Weight{k}, static_cast<long>(m)});
    return out;
}

namespace {

Terms eval_at_one(const Terms& t) {
    Terms r;
    for (const auto& [k, c] : t) add_to(r, k, LaurentInt(lp_eval_one(c)));
    return r;
}

// Restrictedness does not depend on p once p > h, so p = 0 uses a large prime.
int restriction_prime(const PCanTable& t) { return t.p > 0 ? t.p : 10007; }

ModElt maybe_eval(const PCanTable& t, ModElt m) {
    if (!t.graded) m.terms = eval_at_one(m.terms);
    return m;
}

}  // namespace

Report verify_donkin(const PCanTable& t, const Weight& l, const Wext& x, const WeightMultiset& tilting) {
    const WextGroup& G = t.group();
    const SphMod& S = *t.mod;
    Report r;
    r.name = "donkin";
    if (!G.datum().is_dominant(l)) throw NotDominant(weight_str(l) + " is not dominant");
    if (!G.coset_min(x)) throw NotMinimal(G.str(x) + " is not a minimal coset representative");
    Wext y = G.mul(G.translation(scale(G.datum().sigma(), -1)), x);
    if (!G.coset_min(y)) {
        r.hypothesis_ok = false;
        r.hypothesis = "t_{-sigma} x is not minimal";
    } else if (!G.is_restricted(y, restriction_prime(t))) {
        r.hypothesis_ok = false;
        r.hypothesis = "t_{-sigma} x is not restricted";
    }
    Wext top = G.mul(G.translation(l), x);
    ModElt lhs = maybe_eval(t, pcan_asph(t, top));
    ModElt rhs = maybe_eval(t, S.act(pcan_asph(t, x), S.hecke().theta_char(tilting)));
    r.pass = lhs == rhs;
    r.lines.push_back("lambda = " + weight_str(l) + ", x = " + G.str(x) + ", t_lambda x = " + G.str(top));
    r.sides.push_back({S.str(lhs), S.str(rhs)});
    return r;
}

Report verify_steinberg(const PCanTable& t, const Weight& l, const Wext& x, const WeightMultiset& tilting) {
    const WextGroup& G = t.group();
    const SphMod& S = *t.mod;
    Report r;
    r.name = "steinberg";
    if (!G.datum().is_dominant(l)) throw NotDominant(weight_str(l) + " is not dominant");
    if (!G.coset_min(x)) throw NotMinimal(G.str(x) + " is not a minimal coset representative");
    if (!G.is_restricted(x, restriction_prime(t))) {
        r.hypothesis_ok = false;
        r.hypothesis = "x is not restricted";
    }
    Wext top = G.mul(G.translation(l), x);
    ModElt lhs = maybe_eval(t, pcan_sph(t, top));
    ModElt rhs = maybe_eval(t, S.act(pcan_sph(t, x), S.hecke().theta_char(tilting)));
    r.pass = lhs == rhs;
    r.lines.push_back("lambda = " + weight_str(l) + ", x = " + G.str(x) + ", t_lambda x = " + G.str(top));
    r.sides.push_back({S.str(lhs), S.str(rhs)});
    return r;
}

Report verify_phi(const PCanTable& t, const Weight& sigma, const Wext& w) {
    const WextGroup& G = t.group();
    const SphMod& S = *t.mod;
    Report r;
    r.name = "phi";
    ModElt lhs = S.phi(pcan_sph(t, w), sigma);
    ModElt rhs = pcan_asph(t, G.mul(G.translation(sigma), w));
    r.pass = lhs == rhs;
    r.lines.push_back("w = " + G.str(w));
    r.sides.push_back({S.str(lhs), S.str(rhs)});
    return r;
}

Report verify_character_sl2(const PCanTable& t, int p, int lambda_max) {
    const WextGroup& G = t.group();
    const RootDatum& rd = G.datum();
    if (rd.rank() != 1 || rd.dim() != 1 || rd.kind() != LatticeKind::weight)
        throw DatumMismatch("character check needs the A1 weight-lattice datum");
    if (p < 2) throw DatumMismatch("character check needs p >= 2");
    Report r;
    r.name = "character";
    int checked = 0, skipped = 0;
    for (int l = 0; l <= lambda_max; ++l) {
        if ((l + 1) % p == 0) {
            ++skipped;
            r.lines.push_back("lambda = " + std::to_string(l) + ": singular, skipped");
            continue;
        }
        int l0 = l % p;
        Wext x = G.translation({l / p});
        ModElt m = pcan_asph(t, x);
        std::map<int, long long> table;
        for (const auto& [y, c] : m.terms) {
            long long k = lp_eval_one(c).get_si();
            if (k == 0) continue;
            table[G.dot_p(y, {l0}, p)[0]] += k;
        }
        auto oracle = tilting_multiplicities(l, p);
        bool ok = table == oracle;
        r.pass = r.pass && ok;
        ++checked;
        std::string a, b;
        for (auto it = table.rbegin(); it != table.rend(); ++it)
            a += (a.empty() ? "" : ",") + std::to_string(it->first) + ":" + std::to_string(it->second);
        for (auto it = oracle.rbegin(); it != oracle.rend(); ++it)
            b += (b.empty() ? "" : ",") + std::to_string(it->first) + ":" + std::to_string(it->second);
        r.lines.push_back("lambda = " + std::to_string(l) + ": table {" + a + "} oracle {" + b + "} " +
                          (ok ? "ok" : "MISMATCH"));
    }
    r.lines.push_back("checked " + std::to_string(checked) + ", skipped " + std::to_string(skipped));
    return r;
}

Report verify_positivity(const PCanTable& t) {
    const WextGroup& G = t.group();
    Report r;
    r.name = "positivity";
    size_t n = 0;
    for (const auto& [w, terms] : t.entries)
        for (const auto& [y, c] : terms)
            for (const auto& [e, a] : c.terms()) {
                ++n;
                if (a < 0) {
                    r.pass = false;
                    r.lines.push_back("negative coefficient at (" + G.str(w) + ", " + G.str(y) + ", " + std::to_string(e) +
                                      ")");
                }
            }
    r.lines.push_back("scanned " + std::to_string(n) + " coefficients in " + std::to_string(t.entries.size()) +
                      " entries");
    return r;
}

Report verify_omega(const PCanTable& t) {
    const WextGroup& G = t.group();
    const Hecke& H = t.mod->hecke();
    const SphMod& S = *t.mod;
    Report r;
    r.name = "omega";
    int checks = 0;
    for (const auto& [w, terms] : t.entries) {
        auto d = G.omega_split(w);
        if (d.omega == G.e()) continue;
        Wext yr = G.mul(w, G.inv(d.omega));  // w = yr * omega
        if (t.basis == BasisKind::regular) {
            Wext yl = G.from_word(G.e(), d.word);
            auto it = t.entries.find(yl);
            if (it != t.entries.end()) {
                ++checks;
                if (H.left_omega(d.omega, it->second) != terms) {
                    r.pass = false;
                    r.lines.push_back("left Omega rule fails at " + G.str(w));
                }
            }
            auto jt = t.entries.find(yr);
            if (jt != t.entries.end()) {
                ++checks;
                if (H.right_omega(jt->second, d.omega) != terms) {
                    r.pass = false;
                    r.lines.push_back("right Omega rule fails at " + G.str(w));
                }
            }
        } else {
            auto jt = t.entries.find(yr);
            if (jt != t.entries.end()) {
                ++checks;
                Side side = t.basis == BasisKind::spherical ? Side::sph : Side::asph;
                if (S.act_omega(ModElt{side, jt->second}, d.omega).terms != terms) {
                    r.pass = false;
                    r.lines.push_back("right Omega rule fails at " + G.str(w));
                }
            }
        }
    }
    r.lines.push_back(std::to_string(checks) + " Omega factorizations compared");
    return r;
}

Report verify_spherical_decomposition(const PCanTable& t, int lambda, const std::map<int, long long>& mult) {
    const WextGroup& G = t.group();
    const SphMod& S = *t.mod;
    Report r;
    r.name = "spherical-decomposition";
    ModElt lhs = pcan_sph(t, G.mul(G.w0(), G.x_mu({lambda})));
    ModElt rhs{Side::sph, {}};
    for (const auto& [mu, k] : mult) add_to(rhs.terms, S.canonical(G.mul(G.w0(), G.x_mu({mu})), Side::sph), LaurentInt(k));
    r.pass = lhs == rhs;
    r.lines.push_back("lambda = " + std::to_string(lambda));
    r.sides.push_back({S.str(lhs), S.str(rhs)});
    return r;
}

}  // namespace pcanlab
