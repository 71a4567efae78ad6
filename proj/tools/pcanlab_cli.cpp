// pcanlab command-line front end.
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcanlab/errors.hpp"
#include "pcanlab/pcan.hpp"
#include "pcanlab/quiverlab.hpp"
#include "pcanlab/sl2oracle.hpp"

using namespace pcanlab;
using ojson = nlohmann::ordered_json;

namespace {

struct Output {
    std::string text;
    ojson json = ojson::object();
    int status = 0;
    bool raw = false;  // text is a file format and ignores --format
};

Weight parse_weight(const std::string& s, int dim) {
    Weight w;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t pos = 0;
            w.push_back(std::stoi(item, &pos));
            if (pos != item.size()) throw 0;
        } catch (...) {
            throw ParseError("bad weight '" + s + "'");
        }
    }
    if (static_cast<int>(w.size()) != dim) throw ParseError("weight '" + s + "' has the wrong rank");
    return w;
}

ojson poly_json(const LaurentInt& p) {
    ojson j = ojson::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.get_str();
    return j;
}

ojson elt_json(const WextGroup& G, const Wext& x) {
    ojson j;
    j["elt"] = G.str(x);
    j["w"] = G.fin().word(x.w);
    j["t"] = G.trans(x);
    return j;
}

ojson terms_json(const WextGroup& G, const Terms& t) {
    ojson a = ojson::array();
    for (const auto& [y, c] : sorted_terms(G, t)) {
        ojson j = elt_json(G, y);
        j["poly"] = poly_json(c);
        a.push_back(j);
    }
    return a;
}

ojson report_json(const Report& r) {
    ojson j;
    j["check"] = r.name;
    j["result"] = r.pass ? "PASS" : "FAIL";
    j["hypothesis_ok"] = r.hypothesis_ok;
    if (!r.hypothesis_ok) j["hypothesis"] = r.hypothesis;
    j["sides"] = ojson::array();
    for (const auto& [l, rr] : r.sides) j["sides"].push_back({{"lhs", l}, {"rhs", rr}});
    j["lines"] = r.lines;
    return j;
}

Output report_output(const Report& r) {
    Output o;
    o.text = r.str();
    o.json = report_json(r);
    o.status = r.pass ? 0 : 1;
    return o;
}

std::vector<Wext> targets(const WextGroup& G, const std::vector<std::string>& elts, int max_len, bool minimal) {
    std::vector<Wext> out;
    for (const auto& s : elts) out.push_back(G.parse(s));
    if (elts.empty())
        for (const auto& w : G.elements_up_to(max_len))
            if (!minimal || G.coset_min(w)) out.push_back(w);
    return out;
}

PCanTable table_for(const std::string& type, const std::string& path, int p) {
    if (!path.empty()) {
        PCanTable t = load_table(path);
        if (t.p != p) throw DatumMismatch("table has p = " + std::to_string(t.p) + ", requested " + std::to_string(p));
        return t;
    }
    if (p != 0) throw DatumMismatch("p > 0 needs --table");
    return make_p0_table(module_for(type));
}

WeightMultiset tilting_input(const RootDatum& rd, const Weight& l, int p) {
    if (p == 0) return weyl_character(rd, l);
    if (rd.rank() == 1 && rd.dim() == 1 && rd.kind() == LatticeKind::weight) return sl2_tilting_weights(l[0], p);
    throw DatumMismatch("tilting characters for p > 0 are only available in type A1");
}


Field parse_field(int p) {
    if (p == 0) return {};
    if (p < 2) throw ParseError("field must be 0 or a prime");
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) throw ParseError("field must be 0 or a prime");
    return {p};
}

// {"vertices": [...], "arrows": [{"name", "from", "to"}], "relations": [...]}
GradedAlgebra load_algebra(const std::string& path, Field F, int bound) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    try {
        auto j = nlohmann::json::parse(in);
        std::vector<std::string> vs = j.at("vertices").get<std::vector<std::string>>();
        auto vindex = [&](const std::string& v) {
            auto it = std::find(vs.begin(), vs.end(), v);
            if (it == vs.end()) throw ParseError("unknown vertex '" + v + "'");
            return static_cast<int>(it - vs.begin());
        };
        std::vector<Arrow> arrows;
        for (const auto& a : j.at("arrows"))
            arrows.push_back({a.at("name").get<std::string>(), vindex(a.at("from").get<std::string>()),
                              vindex(a.at("to").get<std::string>())});
        std::vector<std::string> rels;
        if (j.contains("relations")) rels = j.at("relations").get<std::vector<std::string>>();
        return GradedAlgebra::parse(vs, arrows, rels, F, bound);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ojson cert_json(const Certificate& c) {
    return {{"check", c.name}, {"result", c.pass ? "PASS" : "FAIL"}, {"lines", c.lines}};
}

ojson dims_json(const GradedAlgebra& A, const GradedModule& M) {
    ojson a = ojson::array();
    for (const auto& [blk, idx] : M.blocks())
        a.push_back({{"vertex", A.vertices()[blk.first]}, {"degree", blk.second}, {"dim", idx.size()}});
    return a;
}

int vertex_of(const GradedAlgebra& A, const std::string& v) {
    const auto& vs = A.vertices();
    auto it = std::find(vs.begin(), vs.end(), v);
    if (it == vs.end()) throw ParseError("unknown vertex '" + v + "'");
    return static_cast<int>(it - vs.begin());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pcanlab: Hecke algebras, p-canonical bases and graded quiver algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text", out_path;
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out_path, "write the report to a file");

    std::function<Output()> job;
    std::string type = "A1-affine-ext";
    std::vector<std::string> elts;
    int max_len = 4, p = 0;

    auto* wext = app.add_subcommand("wext", "extended affine Weyl group elements");
    wext->add_option("--type", type, "group tag");
    wext->add_option("--elt", elts, "elements (e.g. o1.s0.s1, t(2), w_lambda(2))");
    wext->add_option("--max-length", max_len, "list all elements up to this length");
    wext->add_option("--p", p, "prime for the dot action");
    wext->callback([&] {
        job = [&] {
            auto G = WextGroup::from_tag(type);
            Output o;
            o.json["type"] = type;
            o.json["elements"] = ojson::array();
            for (const auto& x : targets(*G, elts, max_len, false)) {
                ojson j = elt_json(*G, x);
                auto d = G->omega_split(x);
                j["omega"] = G->omega_index(d.omega);
                j["word"] = d.word;
                j["length"] = G->length(x);
                j["minimal"] = G->coset_min(x);
                o.text += G->str(x) + "  w=" + std::to_string(x.w) + " t=" + weight_str(G->trans(x)) +
                          " length=" + std::to_string(G->length(x)) + (G->coset_min(x) ? " minimal" : "");
                if (p > 0 && G->coset_min(x)) {
                    j["dot"] = G->dot_p(x, G->datum().zero(), p);
                    j["restricted"] = G->is_restricted(x, p);
                    o.text += " dot=" + weight_str(G->dot_p(x, G->datum().zero(), p)) +
                              (G->is_restricted(x, p) ? " restricted" : "");
                }
                o.text += "\n";
                o.json["elements"].push_back(j);
            }
            return o;
        };
    });

    std::vector<std::string> mul_args;
    std::string bar_arg, theta_arg;
    auto* hecke = app.add_subcommand("hecke", "Hecke algebra arithmetic in the standard basis");
    hecke->add_option("--type", type, "group tag");
    hecke->add_option("--mul", mul_args, "product H_x H_y")->expected(2);
    hecke->add_option("--bar", bar_arg, "bar involution of H_x");
    hecke->add_option("--theta", theta_arg, "Bernstein element of a weight");
    hecke->callback([&] {
        job = [&] {
            auto G = WextGroup::from_tag(type);
            Hecke H(G);
            Output o;
            auto emit = [&](const std::string& key, const std::string& label, const Terms& t) {
                o.text += label + " = " + H.str(t) + "\n";
                o.json[key] = terms_json(*G, t);
            };
            if (!mul_args.empty())
                emit("mul", "H_" + mul_args[0] + " H_" + mul_args[1],
                     H.mul(H.std(G->parse(mul_args[0])), H.std(G->parse(mul_args[1]))));
            if (!bar_arg.empty()) emit("bar", "bar(H_" + bar_arg + ")", H.bar_std(G->parse(bar_arg)));
            if (!theta_arg.empty())
                emit("theta", "theta_" + theta_arg, H.bernstein(parse_weight(theta_arg, G->dim())));
            if (o.text.empty()) throw ParseError("hecke needs --mul, --bar or --theta");
            return o;
        };
    });

    auto* kl = app.add_subcommand("kl", "Kazhdan-Lusztig basis");
    kl->add_option("--type", type, "group tag");
    kl->add_option("--elt", elts, "elements");
    kl->add_option("--max-length", max_len, "all elements up to this length");
    kl->callback([&] {
        job = [&] {
            auto G = WextGroup::from_tag(type);
            Hecke H(G);
            Output o;
            o.json["type"] = type;
            o.json["entries"] = ojson::array();
            for (const auto& w : targets(*G, elts, max_len, false)) {
                o.text += "C(" + G->str(w) + ") = " + H.str(H.kl(w)) + "\n";
                o.json["entries"].push_back({{"target", G->str(w)}, {"terms", terms_json(*G, H.kl(w))}});
            }
            return o;
        };
    });

    std::string side = "asph";
    auto* asph = app.add_subcommand("asph", "canonical bases of the spherical and antispherical modules");
    asph->add_option("--type", type, "group tag");
    asph->add_option("--side", side, "sph or asph")->check(CLI::IsMember({"sph", "asph"}));
    asph->add_option("--elt", elts, "minimal coset representatives");
    asph->add_option("--max-length", max_len, "all minimal elements up to this length");
    asph->callback([&] {
        job = [&] {
            auto S = module_for(type);
            const WextGroup& G = S->group();
            Side sd = side == "sph" ? Side::sph : Side::asph;
            Output o;
            o.json["type"] = type;
            o.json["side"] = side;
            o.json["entries"] = ojson::array();
            for (const auto& x : targets(G, elts, max_len, true)) {
                const Terms& c = S->canonical(x, sd);
                o.text += "C(" + G.str(x) + ") = " + S->str(ModElt{sd, c}) + "\n";
                o.json["entries"].push_back({{"target", G.str(x)}, {"terms", terms_json(G, c)}});
            }
            return o;
        };
    });

    std::string basis = "regular", table_path;
    auto* pcan = app.add_subcommand("pcan", "export or query p-canonical tables");
    pcan->add_option("--type", type, "group tag");
    pcan->add_option("--p", p, "characteristic");
    pcan->add_option("--basis", basis, "regular, spherical or antispherical")
        ->check(CLI::IsMember({"regular", "spherical", "antispherical"}));
    pcan->add_option("--max-length", max_len, "export entries up to this length");
    pcan->add_option("--table", table_path, "table file to query");
    pcan->add_option("--elt", elts, "query these entries");
    pcan->callback([&] {
        job = [&] {
            Output o;
            if (table_path.empty()) {
                if (p != 0) throw DatumMismatch("only p = 0 tables are computed internally");
                BasisKind k = basis == "regular"     ? BasisKind::regular
                              : basis == "spherical" ? BasisKind::spherical
                                                     : BasisKind::antispherical;
                PCanTable t = make_p0_table(module_for(type), k, elts.empty() ? max_len : -1);
                if (elts.empty()) {
                    o.text = table_to_string(t);
                    o.raw = true;
                    return o;
                }
                for (const auto& s : elts) {
                    Wext w = t.group().parse(s);
                    const char* sym = k == BasisKind::regular ? "H" : k == BasisKind::spherical ? "M" : "N";
                    o.text += "C(" + s + ") = " + terms_str(t.group(), t.entry(w), sym) + "\n";
                    o.json[s] = terms_json(t.group(), t.entry(w));
                }
                return o;
            }
            PCanTable t = load_table(table_path);
            const char* sym = t.basis == BasisKind::regular ? "H" : t.basis == BasisKind::spherical ? "M" : "N";
            o.json["type"] = t.type;
            o.json["p"] = t.p;
            o.json["basis"] = basis_name(t.basis);
            o.json["entries"] = static_cast<int>(t.entries.size());
            o.text = "table " + t.type + " p=" + std::to_string(t.p) + " basis=" + basis_name(t.basis) + " entries=" +
                     std::to_string(t.entries.size()) + (t.graded ? "" : " (v=1)") + "\n";
            for (const auto& s : elts) {
                Wext w = t.group().parse(s);
                o.text += "C(" + s + ") = " + terms_str(t.group(), t.entry(w), sym) + "\n";
                o.json[s] = terms_json(t.group(), t.entry(w));
            }
            return o;
        };
    });

    auto* verify = app.add_subcommand("verify", "check identities between p-canonical elements");
    verify->require_subcommand(1);
    std::string lambda = "1", x_arg = "t_sigma", w_arg = "e", sigma_arg;
    int lambda_max = 20;
    for (const char* name : {"donkin", "steinberg"}) {
        auto* sc = verify->add_subcommand(name, std::string(name) + " tensor identity");
        sc->add_option("--type", type, "group tag");
        sc->add_option("--p", p, "characteristic");
        sc->add_option("--table", table_path, "table file (needed for p > 0)");
        sc->add_option("--lambda", lambda, "dominant weight");
        sc->add_option("--x", x_arg, "element of the minimal coset representatives");
        bool donkin = std::string(name) == "donkin";
        sc->callback([&, donkin] {
            job = [&, donkin] {
                PCanTable t = table_for(type, table_path, p);
                const WextGroup& G = t.group();
                Weight l = parse_weight(lambda, G.dim());
                WeightMultiset ch = tilting_input(G.datum(), l, p);
                Wext x = G.parse(x_arg);
                return report_output(donkin ? verify_donkin(t, l, x, ch) : verify_steinberg(t, l, x, ch));
            };
        });
    }
    auto* vphi = verify->add_subcommand("phi", "phi sends spherical to antispherical p-canonical elements");
    vphi->add_option("--type", type, "group tag");
    vphi->add_option("--p", p, "characteristic");
    vphi->add_option("--table", table_path, "table file");
    vphi->add_option("--w", w_arg, "minimal coset representative");
    vphi->add_option("--sigma", sigma_arg, "weight used for phi (default sigma)");
    vphi->callback([&] {
        job = [&] {
            PCanTable t = table_for(type, table_path, p);
            const WextGroup& G = t.group();
            Weight s = sigma_arg.empty() ? G.datum().sigma() : parse_weight(sigma_arg, G.dim());
            return report_output(verify_phi(t, s, G.parse(w_arg)));
        };
    });
    auto* vchar = verify->add_subcommand("character", "tilting characters against the SL2 oracle at v = 1");
    vchar->add_option("--table", table_path, "antispherical A1 table")->required();
    vchar->add_option("--lambda-max", lambda_max, "largest highest weight");
    vchar->callback([&] {
        job = [&] {
            PCanTable t = load_table(table_path);
            return report_output(verify_character_sl2(t, t.p, lambda_max));
        };
    });
    auto* vpos = verify->add_subcommand("positivity", "nonnegativity of all coefficients");
    vpos->add_option("--type", type, "group tag");
    vpos->add_option("--table", table_path, "table file");
    vpos->add_option("--max-length", max_len, "internal p = 0 table up to this length");
    vpos->callback([&] {
        job = [&] {
            PCanTable t = table_path.empty() ? make_p0_table(module_for(type), BasisKind::regular, max_len)
                                             : load_table(table_path);
            return report_output(verify_positivity(t));
        };
    });

    int oracle_lambda = 0;
    auto* oracle = app.add_subcommand("oracle", "SL2 tilting characters");
    oracle->add_option("--lambda", oracle_lambda, "highest weight")->required()->check(CLI::NonNegativeNumber);
    oracle->add_option("--p", p, "characteristic")->required()->check(CLI::Range(2, 1000));
    oracle->callback([&] {
        job = [&] {
            Output o;
            auto m = tilting_multiplicities(oracle_lambda, p);
            std::string s;
            ojson mj = ojson::object();
            for (auto it = m.rbegin(); it != m.rend(); ++it) {
                s += (s.empty() ? "" : " + ") + (it->second == 1 ? "" : std::to_string(it->second)) + "chi(" +
                     std::to_string(it->first) + ")";
                mj[std::to_string(it->first)] = it->second;
            }
            o.text = "T(" + std::to_string(oracle_lambda) + ") = " + s + "\n";
            o.text += "ch = " + char_str(sl2_tilting_char(oracle_lambda, p)) + "\n";
            o.json["lambda"] = oracle_lambda;
            o.json["p"] = p;
            o.json["weyl_multiplicities"] = mj;
            return o;
        };
    });

    std::string q_preset, q_file, q_order, q_dag, q_vertex;
    std::vector<std::string> q_modules;
    int q_field = 0, q_bound = 4, q_degree_bound = -1;
    bool q_koszul = false;
    auto* quiver = app.add_subcommand("quiver", "graded quiver algebras with relations");
    quiver->require_subcommand(1);
    auto algebra = [&] {
        if (q_preset.empty() == q_file.empty()) throw ParseError("give exactly one of --preset and --file");
        int db = q_degree_bound >= 0 ? q_degree_bound : std::max(8, q_bound + 2);
        Field F = parse_field(q_field);
        return q_file.empty() ? GradedAlgebra::preset(q_preset, F, db) : load_algebra(q_file, F, db);
    };
    auto order_of = [&](const GradedAlgebra& A) {
        if (!q_order.empty()) return parse_order(A, q_order);
        std::vector<int> o(A.num_vertices());
        for (int i = 0; i < A.num_vertices(); ++i) o[i] = i;
        return o;
    };
    auto qsub = [&](const char* name, const char* help) {
        auto* sc = quiver->add_subcommand(name, help);
        sc->add_option("--preset", q_preset, "named algebra")->check(CLI::IsMember(GradedAlgebra::preset_names()));
        sc->add_option("--file", q_file, "JSON quiver with relations");
        sc->add_option("--field", q_field, "0 for Q or a prime p");
        sc->add_option("--bound", q_bound, "homological bound")->check(CLI::Range(0, 40));
        sc->add_option("--degree-bound", q_degree_bound, "truncation degree for infinite algebras")
            ->check(CLI::Range(1, 60));
        return sc;
    };

    qsub("build", "graded dimensions of the algebra")->callback([&] {
        job = [&] {
            auto A = algebra();
            Output o;
            o.text = A.summary();
            std::vector<int> dims;
            for (int d = 0; d <= A.computed_degree(); ++d) dims.push_back(A.dim(d));
            o.json["vertices"] = A.vertices();
            o.json["dims"] = dims;
            o.json["finite"] = A.finite();
            if (A.finite()) o.json["total_dim"] = A.total_dim();
            o.json["relations"] = A.relation_strings(2);
            return o;
        };
    });

    qsub("ext", "minimal resolutions of the simples and Ext between them")->callback([&] {
        job = [&] {
            auto A = algebra();
            Output o;
            o.json["resolutions"] = ojson::object();
            for (int i = 0; i < A.num_vertices(); ++i) {
                std::string name = "L" + A.vertices()[i];
                auto R = minimal_resolution(A, simple(A, i), q_bound);
                o.text += R.str(A, name) + "\n";
                o.json["resolutions"][name] = R.str(A, name);
            }
            o.json["ext"] = ojson::array();
            for (const auto& [key, d] : ext_table(A, q_bound)) {
                auto [i, j, k, n] = key;
                o.text += "dim Ext^" + std::to_string(k) + "(L" + A.vertices()[i] + ", L" + A.vertices()[j] + "<" +
                          std::to_string(n) + ">) = " + std::to_string(d) + "\n";
                o.json["ext"].push_back(
                    {{"i", A.vertices()[i]}, {"j", A.vertices()[j]}, {"k", k}, {"n", n}, {"dim", d}});
            }
            return o;
        };
    });

    qsub("koszul", "Koszulity up to the homological bound")->callback([&] {
        job = [&] {
            auto A = algebra();
            auto c = koszul_check(A, q_bound);
            Output o;
            o.text = c.str();
            o.json = cert_json(c);
            o.status = c.pass ? 0 : 1;
            return o;
        };
    });

    qsub("dual", "quadratic dual")->callback([&] {
        job = [&] {
            auto D = quadratic_dual(algebra());
            Output o;
            o.text = D.summary();
            o.json["vertices"] = D.vertices();
            ojson arrows = ojson::array();
            for (const auto& a : D.arrows())
                arrows.push_back({{"name", a.name}, {"from", D.vertices()[a.from]}, {"to", D.vertices()[a.to]}});
            o.json["arrows"] = arrows;
            o.json["relations"] = D.relation_strings(2);
            return o;
        };
    });

    qsub("extalg", "Ext algebra of a Koszul algebra")->callback([&] {
        job = [&] {
            auto E = ext_algebra(algebra(), q_bound);
            Output o;
            for (const auto& l : E.lines) o.text += l + "\n";
            o.json["dims"] = E.dims;
            o.json["matches_quadratic_dual"] = E.dual_match.found;
            o.json["lines"] = E.lines;
            return o;
        };
    });

    auto* qh = qsub("qh", "quasi-hereditary structure for a vertex order");
    qh->add_option("--order", q_order, "vertex order, lowest first (e.g. 1<2)");
    qh->add_flag("--koszul", q_koszul, "also check standard Koszulity");
    qh->callback([&] {
        job = [&] {
            auto A = algebra();
            auto Q = qh_structure(A, order_of(A));
            Output o;
            o.text = Q.str(A);
            o.json["pass"] = Q.pass;
            o.json["failed_axiom"] = Q.failed_axiom;
            o.json["standard"] = ojson::array();
            o.json["costandard"] = ojson::array();
            for (int i = 0; i < A.num_vertices(); ++i) {
                o.json["standard"].push_back(dims_json(A, Q.standard[i]));
                o.json["costandard"].push_back(dims_json(A, Q.costandard[i]));
            }
            o.json["axioms"] = ojson::array();
            for (const auto& c : Q.axioms) o.json["axioms"].push_back(cert_json(c));
            o.status = Q.pass ? 0 : 1;
            if (q_koszul) {
                auto c = qh_koszul_check(A, Q, q_bound);
                o.text += c.str();
                o.json["qh_koszul"] = cert_json(c);
                if (!c.pass) o.status = 1;
            }
            return o;
        };
    });

    auto* tilt = qsub("tilting", "indecomposable tilting modules");
    tilt->add_option("--order", q_order, "vertex order, lowest first");
    tilt->add_option("--vertex", q_vertex, "only this vertex");
    tilt->callback([&] {
        job = [&] {
            auto A = algebra();
            auto Q = qh_structure(A, order_of(A));
            if (!Q.pass) throw ShapeError("the order is not quasi-hereditary");
            Output o;
            o.json["tiltings"] = ojson::array();
            for (int i = 0; i < A.num_vertices(); ++i) {
                if (!q_vertex.empty() && i != vertex_of(A, q_vertex)) continue;
                auto t = tilting_module(A, Q, i);
                o.text += t.cert.str();
                ojson j = cert_json(t.cert);
                j["vertex"] = A.vertices()[i];
                j["dims"] = dims_json(A, t.T);
                o.json["tiltings"].push_back(j);
                if (!t.cert.pass) o.status = 1;
            }
            return o;
        };
    });

    auto* ringel = qsub("ringel", "Ringel dual");
    ringel->add_option("--order", q_order, "vertex order, lowest first");
    ringel->callback([&] {
        job = [&] {
            auto A = algebra();
            auto Q = qh_structure(A, order_of(A));
            if (!Q.pass) throw ShapeError("the order is not quasi-hereditary");
            auto R = ringel_dual(A, Q);
            Output o;
            for (const auto& l : R.lines) o.text += l + "\n";
            o.json["presented"] = R.presented;
            o.json["lines"] = R.lines;
            if (R.algebra) {
                auto iso = find_isomorphism(A, *R.algebra);
                o.text += std::string("isomorphic to A: ") + (iso.found ? "yes" : "no") + "\n";
                for (const auto& l : iso.lines) o.text += "  " + l + "\n";
                o.json["isomorphic_to_A"] = iso.found;
                o.json["isomorphism"] = iso.lines;
                o.json["qh_opposite_order"] = R.qh && R.qh->pass;
                if (!R.qh || !R.qh->pass) o.status = 1;
            } else {
                o.status = 1;
            }
            return o;
        };
    });

    auto* parity = qsub("parity", "parity of modules along <<1>> = <-1>[1]");
    parity->add_option("--order", q_order, "vertex order, lowest first");
    parity->add_option("--dag", q_dag, "dag values per vertex (e.g. 0,1); default from the tilting modules");
    parity->add_option("--module", q_modules, "summands such as T2, L1, D1, N2, P1, J1, optionally with [shift]");
    parity->callback([&] {
        job = [&] {
            auto A = algebra();
            auto Q = qh_structure(A, order_of(A));
            if (!Q.pass) throw ShapeError("the order is not quasi-hereditary");
            std::vector<Tilting> T;
            for (int i = 0; i < A.num_vertices(); ++i) T.push_back(tilting_module(A, Q, i));
            std::vector<int> dag;
            if (q_dag.empty()) {
                auto d = dag_from_tiltings(A, Q, T);
                if (!d) throw ShapeError("the tilting modules do not determine a dag");
                dag = *d;
            } else {
                std::stringstream ss(q_dag);
                std::string item;
                while (std::getline(ss, item, ',')) {
                    if (item != "0" && item != "1") throw ParseError("bad dag '" + q_dag + "'");
                    dag.push_back(item[0] - '0');
                }
            }
            std::vector<std::string> names = q_modules;
            if (names.empty())
                for (const auto& v : A.vertices()) names.push_back("T" + v);
            std::vector<ParitySummand> X;
            for (const auto& name : names) {
                std::string base = name;
                int sh = 0;
                if (auto b = name.find('['); b != std::string::npos) {
                    if (name.back() != ']') throw ParseError("bad module '" + name + "'");
                    try {
                        sh = std::stoi(name.substr(b + 1, name.size() - b - 2));
                    } catch (...) {
                        throw ParseError("bad module '" + name + "'");
                    }
                    base = name.substr(0, b);
                }
                if (base.size() < 2) throw ParseError("bad module '" + name + "'");
                int v = vertex_of(A, base.substr(1));
                GradedModule M;
                switch (base[0]) {
                    case 'T': M = T[v].T; break;
                    case 'L': M = simple(A, v); break;
                    case 'D': M = Q.standard[v]; break;
                    case 'N': M = Q.costandard[v]; break;
                    case 'P': M = projective(A, v); break;
                    case 'J': M = injective(A, v); break;
                    default: throw ParseError("bad module '" + name + "'");
                }
                X.push_back({name, M, sh});
            }
            auto r = parity_check(A, Q, X, dag, q_bound);
            Output o;
            std::string ds;
            for (size_t i = 0; i < dag.size(); ++i) ds += (i ? "," : "") + std::to_string(dag[i]);
            o.text = "dag: " + ds + "\n";
            for (const auto& l : r.lines) o.text += l + "\n";
            o.text += "verdict: " + parity_name(r.verdict) + "\n";
            o.json["dag"] = dag;
            ojson sj = ojson::array();
            for (size_t k = 0; k < X.size(); ++k) sj.push_back({{"module", X[k].name}, {"parity", parity_name(r.summands[k])}});
            o.json["summands"] = sj;
            o.json["verdict"] = parity_name(r.verdict);
            return o;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    Output o;
    try {
        o = job();
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    std::string text = o.raw || format == "text" ? o.text : o.json.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::fprintf(stderr, "error: cannot write %s\n", out_path.c_str());
            return 2;
        }
        out << text;
    }
    return o.status;
}
