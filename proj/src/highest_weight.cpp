#include "pcanlab/highest_weight.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "pcanlab/errors.hpp"

namespace pcanlab {

namespace {

std::string vname(const GradedAlgebra& A, int v) { return A.vertices()[v]; }

std::string shift_str(int n) { return n == 0 ? "" : "<" + std::to_string(n) + ">"; }

int vertex_index(const GradedAlgebra& A, const std::string& name) {
    const auto& vs = A.vertices();
    auto it = std::find(vs.begin(), vs.end(), name);
    if (it == vs.end()) throw ParseError("unknown vertex '" + name + "'");
    return static_cast<int>(it - vs.begin());
}

// Resolution deep enough for Ext^k, k <= kmax.
Resolution resolve(const GradedAlgebra& A, const GradedModule& M, int kmax) {
    return minimal_resolution(A, M, kmax + 1);
}

}  // namespace

std::vector<int> parse_order(const GradedAlgebra& A, const std::string& text) {
    std::vector<int> order;
    std::string cur;
    for (char c : text + ",") {
        if (c == '<' || c == ',') {
            size_t a = cur.find_first_not_of(' '), b = cur.find_last_not_of(' ');
            if (a == std::string::npos) throw ParseError("bad order '" + text + "'");
            order.push_back(vertex_index(A, cur.substr(a, b - a + 1)));
            cur.clear();
        } else {
            cur += c;
        }
    }
    return order;
}

std::string QHStructure::str(const GradedAlgebra& A) const {
    std::string s = "order:";
    for (size_t k = 0; k < order.size(); ++k) s += (k ? " < " : " ") + vname(A, order[k]);
    s += "\n";
    for (int i = 0; i < static_cast<int>(standard.size()); ++i) {
        s += "Delta" + vname(A, i) + ": " + standard[i].dims_str(A) + "\n";
        s += "nabla" + vname(A, i) + ": " + costandard[i].dims_str(A) + "\n";
    }
    for (const auto& c : axioms) s += c.str();
    s += std::string("quasi-hereditary: ") + (pass ? "PASS" : "FAIL") + "\n";
    return s;
}

QHStructure qh_structure(const GradedAlgebra& A, const std::vector<int>& order) {
    if (!A.finite()) throw NotFiniteDimensional("quasi-hereditary structures need a finite algebra");
    int n = A.num_vertices();
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(sorted.size()) != n || sorted[v] != v) throw ShapeError("order must list every vertex once");
    QHStructure Q;
    Q.order = order;
    Q.rank.assign(n, 0);
    for (int k = 0; k < n; ++k) Q.rank[order[k]] = k;
    for (int i = 0; i < n; ++i) {
        GradedModule P = projective(A, i);
        std::vector<Vec> above;
        for (int b = 0; b < P.dim(); ++b)
            if (Q.rank[P.vert[b]] > Q.rank[i]) {
                Vec v(P.dim());
                v[b] = 1;
                above.push_back(v);
            }
        Q.standard.push_back(quotient(P, submodule_generated(P, above)).mod);
        GradedModule J = injective(A, i);
        std::map<Block, Mat> W;
        for (const auto& [blk, idx] : J.blocks()) {
            if (Q.rank[blk.first] > Q.rank[i]) continue;
            Mat m(J.dim(), static_cast<int>(idx.size()));
            for (size_t c = 0; c < idx.size(); ++c) m(idx[c], static_cast<int>(c)) = 1;
            W[blk] = m;
        }
        Submodule S = largest_submodule_in(J, W);
        Q.costandard.push_back(S.mod);
    }
    // (1) End(L_i) = k
    Certificate a1{"axiom 1: End(L_i) = k", true, {}};
    for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(hom_space(simple(A, i), simple(A, i)).size());
        if (d != 1) {
            a1.pass = false;
            a1.lines.push_back("dim End(L" + vname(A, i) + ") = " + std::to_string(d));
        }
    }
    // (2) Delta_i covers L_i in the stratum <= i, nabla_i dually
    Certificate a2{"axiom 2: Delta_i and nabla_i are the cover and hull of L_i below i", true, {}};
    std::vector<Resolution> rd, rl;
    for (int i = 0; i < n; ++i) {
        rd.push_back(resolve(A, Q.standard[i], 2));
        rl.push_back(resolve(A, simple(A, i), 1));
    }
    for (int i = 0; i < n; ++i) {
        std::map<Block, int> one{{{i, 0}, 1}};
        if (top_dims(Q.standard[i]) != one) {
            a2.pass = false;
            a2.lines.push_back("top(Delta" + vname(A, i) + ") is not L" + vname(A, i));
        }
        if (socle_dims(Q.costandard[i]) != one) {
            a2.pass = false;
            a2.lines.push_back("soc(nabla" + vname(A, i) + ") is not L" + vname(A, i));
        }
        for (const auto& g : rd[i].gens(1))
            if (Q.rank[g.vertex] <= Q.rank[i]) {
                a2.pass = false;
                a2.lines.push_back("Ext^1(Delta" + vname(A, i) + ", L" + vname(A, g.vertex) + shift_str(-g.degree) +
                                   ") != 0");
            }
        for (int j = 0; j < n; ++j) {
            if (Q.rank[j] > Q.rank[i]) continue;
            for (const auto& [kn, d] : ext_dims(rl[j], Q.costandard[i], 1))
                if (kn.first == 1) {
                    a2.pass = false;
                    a2.lines.push_back("Ext^1(L" + vname(A, j) + ", nabla" + vname(A, i) + shift_str(kn.second) +
                                       ") != 0");
                }
        }
    }
    // (3) L_i occurs once in Delta_i and nabla_i, in degree 0
    Certificate a3{"axiom 3: [Delta_i : L_i<n>] = [nabla_i : L_i<n>] = delta_{n,0}", true, {}};
    for (int i = 0; i < n; ++i)
        for (const auto* M : {&Q.standard[i], &Q.costandard[i]})
            for (const auto& [blk, idx] : M->blocks())
                if (blk.first == i && (blk.second != 0 || idx.size() != 1)) {
                    a3.pass = false;
                    a3.lines.push_back(std::string(M == &Q.standard[i] ? "Delta" : "nabla") + vname(A, i) + " has L" +
                                       vname(A, i) + shift_str(-blk.second) + " with multiplicity " +
                                       std::to_string(idx.size()));
                }
    // (4) Ext^2(Delta_i, nabla_j<n>) = 0
    Certificate a4{"axiom 4: Ext^2(Delta_i, nabla_j<n>) = 0", true, {}};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [kn, d] : ext_dims(rd[i], Q.costandard[j], 2))
                if (kn.first == 2) {
                    a4.pass = false;
                    a4.lines.push_back("Ext^2(Delta" + vname(A, i) + ", nabla" + vname(A, j) + shift_str(kn.second) +
                                       ") has dimension " + std::to_string(d));
                }
    Q.axioms = {a1, a2, a3, a4};
    Q.pass = true;
    for (int k = 0; k < 4; ++k)
        if (!Q.axioms[k].pass && Q.pass) {
            Q.pass = false;
            Q.failed_axiom = k + 1;
        }
    return Q;
}

Certificate qh_koszul_check(const GradedAlgebra& A, const QHStructure& Q, int K) {
    Certificate c{"qh-koszul", true, {}};
    if (!Q.pass) {
        c.pass = false;
        c.lines.push_back("the order does not give a quasi-hereditary structure");
        return c;
    }
    int n = A.num_vertices();
    for (int i = 0; i < n; ++i) {
        Resolution R = minimal_resolution(A, Q.standard[i], K);
        for (int k = 0; k <= std::min(K, R.length()); ++k)
            for (const auto& g : R.gens(k))
                if (g.degree != k) {
                    c.pass = false;
                    c.lines.push_back("Ext^" + std::to_string(k) + "(Delta" + vname(A, i) + ", L" + vname(A, g.vertex) +
                                      shift_str(-g.degree) + ") != 0");
                }
    }
    for (int i = 0; i < n; ++i) {
        Resolution R = resolve(A, simple(A, i), K);
        for (int j = 0; j < n; ++j)
            for (const auto& [kn, d] : ext_dims(R, Q.costandard[j], K))
                if (kn.second != -kn.first) {
                    c.pass = false;
                    c.lines.push_back("Ext^" + std::to_string(kn.first) + "(L" + vname(A, i) + ", nabla" + vname(A, j) +
                                      shift_str(kn.second) + ") != 0");
                }
    }
    c.lines.push_back("checked to homological degree " + std::to_string(K));
    return c;
}

namespace {

// T extended by every class of Ext^1(Delta<-m>, T) at once.
GradedModule universal_extension(const Resolution& R, const GradedModule& T,
                                 const std::vector<std::vector<Vec>>& classes, int m) {
    const auto& P0 = R.steps[0].P;
    const auto& P1 = R.steps[1].P;
    const Mat& d1 = R.steps[1].d;
    GradedModule E = T;
    GradedModule P0s = shift(P0.mod, -m);
    for (size_t r = 0; r < classes.size(); ++r) E = direct_sum(E, P0s);
    std::vector<Vec> rel;
    for (size_t r = 0; r < classes.size(); ++r) {
        Mat Xi = map_from_generators(P1, T, classes[r]);
        for (int x = 0; x < P1.mod.dim(); ++x) {
            Vec v(E.dim());
            for (int t = 0; t < T.dim(); ++t) v[t] = Xi(t, x);
            int off = T.dim() + static_cast<int>(r) * P0.mod.dim();
            for (int b = 0; b < P0.mod.dim(); ++b) {
                v[off + b] = -d1(b, x);
                T.F.norm(v[off + b]);
            }
            rel.push_back(v);
        }
    }
    return quotient(E, submodule_generated(E, rel)).mod;
}

}  // namespace

Tilting tilting_module(const GradedAlgebra& A, const QHStructure& Q, int i) {
    if (!Q.pass) throw ShapeError("tilting modules need a quasi-hereditary order");
    int n = A.num_vertices();
    std::vector<Resolution> rd;
    for (int j = 0; j < n; ++j) rd.push_back(resolve(A, Q.standard[j], 1));
    Tilting out;
    out.vertex = i;
    GradedModule T = Q.standard[i];
    std::vector<int> below;
    for (int k = Q.rank[i] - 1; k >= 0; --k) below.push_back(Q.order[k]);
    for (int round = 0; round < 4 * n + 4; ++round) {
        bool changed = false;
        for (int j : below)
            for (const auto& [kn, d] : ext_dims(rd[j], T, 1)) {
                if (kn.first != 1) continue;
                auto cls = ext_classes(rd[j], T, 1, kn.second);
                T = universal_extension(rd[j], T, cls, kn.second);
                changed = true;
                break;
            }
        if (!changed) break;
    }
    out.T = T;
    Certificate& c = out.cert;
    c.name = "tilting T" + vname(A, i);
    Resolution rt = resolve(A, T, 1);
    for (int j = 0; j < n; ++j) {
        for (const auto& [kn, d] : ext_dims(rd[j], T, 1)) {
            if (kn.first == 0) out.nabla_mult[{j, -kn.second}] = d;
            else {
                c.pass = false;
                c.lines.push_back("Ext^1(Delta" + vname(A, j) + shift_str(-kn.second) + ", T) != 0");
            }
        }
        for (const auto& [kn, d] : ext_dims(rt, Q.costandard[j], 1)) {
            if (kn.first == 0) out.delta_mult[{j, kn.second}] = d;
            else {
                c.pass = false;
                c.lines.push_back("Ext^1(T, nabla" + vname(A, j) + shift_str(kn.second) + ") != 0");
            }
        }
    }
    for (const auto& [blk, idx] : T.blocks())
        if (blk.first == i && (blk.second != 0 || idx.size() != 1)) {
            c.pass = false;
            c.lines.push_back("[T : L" + vname(A, i) + shift_str(-blk.second) + "] = " + std::to_string(idx.size()));
        }
    if (T.dim_at(i, 0) != 1) c.pass = false;
    int ss = end_semisimple_rank(T);
    if (ss != 1) {
        c.pass = false;
        c.lines.push_back("End_0(T) is not local (semisimple rank " + std::to_string(ss) + ")");
    }
    int fdim = 0;
    std::string dm, nm;
    for (const auto& [jn, m] : out.delta_mult) {
        fdim += m * Q.standard[jn.first].dim();
        dm += (dm.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) : "") + "Delta" + vname(A, jn.first) +
              shift_str(jn.second);
    }
    for (const auto& [jn, m] : out.nabla_mult)
        nm += (nm.empty() ? "" : " + ") + (m > 1 ? std::to_string(m) : "") + "nabla" + vname(A, jn.first) +
              shift_str(jn.second);
    if (fdim != T.dim()) {
        c.pass = false;
        c.lines.push_back("Delta-multiplicities do not add up to dim T");
    }
    c.lines.insert(c.lines.begin(), {"graded dims: " + T.dims_str(A), "Delta-flag: " + dm, "nabla-flag: " + nm});
    return out;
}

RingelDual ringel_dual(const GradedAlgebra& A, const QHStructure& Q) {
    RingelDual R;
    int n = A.num_vertices();
    for (int i = 0; i < n; ++i) R.tiltings.push_back(tilting_module(A, Q, i));
    std::map<std::tuple<int, int, int>, std::vector<Mat>> hom;
    int top = 0;
    bool positive = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const GradedModule& Ti = R.tiltings[i].T;
            const GradedModule& Tj = R.tiltings[j].T;
            for (int s = Tj.min_degree() - Ti.max_degree(); s <= Tj.max_degree() - Ti.min_degree(); ++s) {
                auto H = hom_space(Ti, shift(Tj, s));
                if (H.empty()) continue;
                R.hom_dims[{i, j, s}] = static_cast<int>(H.size());
                if (s < 0 || (s == 0 && (i != j || H.size() != 1))) positive = false;
                top = std::max(top, s);
                hom[{i, j, s}] = std::move(H);
            }
        }
    for (const auto& [ijs, d] : R.hom_dims)
        R.lines.push_back("dim Hom(T" + vname(A, std::get<0>(ijs)) + ", T" + vname(A, std::get<1>(ijs)) +
                          shift_str(std::get<2>(ijs)) + ") = " + std::to_string(d));
    if (!positive) {
        R.lines.push_back("A# is not positively graded with semisimple degree 0; no quiver presentation");
        return R;
    }
    // arrows from degree one
    std::vector<Arrow> arrows;
    std::vector<Mat> amat;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = hom.find({i, j, 1});
            if (it == hom.end()) continue;
            for (size_t r = 0; r < it->second.size(); ++r) {
                std::string name = "t" + vname(A, j) + vname(A, i);
                if (it->second.size() > 1) name += "_" + std::to_string(r);
                arrows.push_back({name, j, i});
                amat.push_back(it->second[r]);
            }
        }
    GradedAlgebra freeq(A.vertices(), arrows, {}, A.field(), top + 1);
    std::vector<PathComb> rels;
    bool generated = true;
    for (int d = 2; d <= std::min(top + 1, freeq.computed_degree()); ++d) {
        const auto& ps = freeq.paths(d);
        // coordinates of each path in the Hom bases, stacked over (src, tgt)
        std::map<std::pair<int, int>, int> off;
        int rows = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto it = hom.find({i, j, d});
                off[{i, j}] = rows;
                if (it != hom.end()) rows += static_cast<int>(it->second.size());
            }
        Mat C(rows, static_cast<int>(ps.size()));
        for (size_t c = 0; c < ps.size(); ++c) {
            const Path& p = ps[c];
            Mat m = amat[p.arrows[0]];
            for (size_t k = 1; k < p.arrows.size(); ++k) m = mat_mul(A.field(), m, amat[p.arrows[k]]);
            // the path from j1 to i_d is a map T_{tgt} -> T_{src}<d>
            int ti = p.tgt, tj = p.src;
            auto it = hom.find({ti, tj, d});
            if (m.is_zero()) continue;
            if (it == hom.end()) throw std::logic_error("composite outside the Hom space");
            std::vector<Vec> basis;
            for (const auto& h : it->second) basis.push_back(h.a);
            Mat B = from_cols(static_cast<int>(m.a.size()), basis);
            auto coords = solve(A.field(), B, m.a);
            if (!coords) throw std::logic_error("composite outside the Hom space");
            for (size_t r = 0; r < coords->size(); ++r) C(off[{ti, tj}] + static_cast<int>(r), static_cast<int>(c)) = (*coords)[r];
        }
        if (rank(A.field(), C) != rows) generated = false;
        Mat ker = nullspace(A.field(), C);
        for (int c = 0; c < ker.cols; ++c) {
            PathComb comb;
            for (size_t j = 0; j < ps.size(); ++j)
                if (ker(static_cast<int>(j), c) != 0) comb.push_back({ker(static_cast<int>(j), c), ps[j]});
            // skip consequences of the relations found so far
            if (!rels.empty() && GradedAlgebra(A.vertices(), arrows, rels, A.field(), d).is_zero(comb)) continue;
            rels.push_back(comb);
        }
    }
    if (!generated) {
        R.lines.push_back("A# is not generated in degree one; no quiver presentation");
        return R;
    }
    R.presented = true;
    R.algebra.emplace(A.vertices(), arrows, rels, A.field(), top + 2);
    R.lines.push_back(R.algebra->summary());
    R.opposite_order.assign(Q.order.rbegin(), Q.order.rend());
    R.qh = qh_structure(*R.algebra, R.opposite_order);
    R.lines.push_back(std::string("A# quasi-hereditary for the opposite order: ") + (R.qh->pass ? "PASS" : "FAIL"));
    return R;
}

std::string parity_name(Parity p) {
    switch (p) {
        case Parity::even: return "even";
        case Parity::odd: return "odd";
        case Parity::parity: return "parity";
        default: return "neither";
    }
}

ParityResult parity_check(const GradedAlgebra& A, const QHStructure& Q, const std::vector<ParitySummand>& X,
                          const std::vector<int>& dag, int K) {
    if (!Q.pass) throw ShapeError("parity needs a quasi-hereditary order");
    int n = A.num_vertices();
    if (static_cast<int>(dag.size()) != n) throw ShapeError("dag needs one value per vertex");
    ParityResult out;
    std::vector<Resolution> rd;
    for (int i = 0; i < n; ++i) rd.push_back(resolve(A, Q.standard[i], K));
    bool all_even = true, all_odd = true, each = true;
    for (const auto& S : X) {
        bool even = true, odd = true;
        bool* side_even = nullptr;
        bool* side_odd = nullptr;
        bool ce = true, co = true;
        auto record = [&](const std::string& what, int i, int k, int a) {
            // Hom(Delta_i, X<a>[k - shift]) or Hom(X, nabla_i<a>[k + shift])
            int cls = ((a + k - S.shift) % 2 + 2) % 2;
            bool e = cls == dag[i] % 2;
            even = even && e;
            odd = odd && !e;
            if (side_even) {
                *side_even = *side_even && e;
                *side_odd = *side_odd && !e;
            }
            out.lines.push_back(S.name + ": " + what + " class " + std::to_string(cls) + " (dag " +
                                std::to_string(dag[i] % 2) + ")");
        };
        for (int i = 0; i < n; ++i)
            for (const auto& [kn, d] : ext_dims(rd[i], S.M, K))
                record("Ext^" + std::to_string(kn.first) + "(Delta" + vname(A, i) + ", M" + shift_str(kn.second) + ")", i,
                       kn.first, kn.second);
        Resolution rm = resolve(A, S.M, K);
        side_even = &ce;
        side_odd = &co;
        for (int i = 0; i < n; ++i)
            for (const auto& [kn, d] : ext_dims(rm, Q.costandard[i], K))
                record("Ext^" + std::to_string(kn.first) + "(M, nabla" + vname(A, i) + shift_str(kn.second) + ")", i,
                       kn.first, kn.second);
        Parity p = even ? Parity::even : odd ? Parity::odd : Parity::neither;
        out.summands.push_back(p);
        out.costandard_side.push_back(ce ? Parity::even : co ? Parity::odd : Parity::neither);
        out.lines.push_back(S.name + " is " + parity_name(p));
        all_even = all_even && even;
        all_odd = all_odd && odd;
        each = each && (even || odd);
    }
    out.verdict = all_even ? Parity::even : all_odd ? Parity::odd : each ? Parity::parity : Parity::neither;
    return out;
}

std::optional<std::vector<int>> dag_from_tiltings(const GradedAlgebra& A, const QHStructure& Q,
                                                  const std::vector<Tilting>& T) {
    int n = A.num_vertices();
    // edges (i, j, parity of n)
    std::vector<std::vector<std::pair<int, int>>> adj(n);
    for (int i = 0; i < n; ++i) {
        Resolution r = resolve(A, Q.standard[i], 0);
        for (const auto& t : T)
            for (const auto& [kn, d] : ext_dims(r, t.T, 0)) {
                if (kn.first != 0) continue;
                int p = ((kn.second % 2) + 2) % 2;
                adj[i].push_back({t.vertex, p});
                adj[t.vertex].push_back({i, p});
            }
    }
    std::vector<int> dag(n, -1);
    for (int s = 0; s < n; ++s) {
        if (dag[s] >= 0) continue;
        dag[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (auto [v, p] : adj[u]) {
                int want = (dag[u] + p) % 2;
                if (dag[v] < 0) {
                    dag[v] = want;
                    q.push_back(v);
                } else if (dag[v] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return dag;
}

}  // namespace pcanlab
