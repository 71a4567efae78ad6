#include "pcanlab/homalg.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

#include "pcanlab/errors.hpp"

namespace pcanlab {

std::string Certificate::str() const {
    std::string s = name + ": " + (pass ? "PASS" : "FAIL") + "\n";
    for (const auto& l : lines) s += "  " + l + "\n";
    return s;
}

const std::vector<Gen>& Resolution::gens(int k) const {
    static const std::vector<Gen> none;
    if (k < 0 || k >= static_cast<int>(steps.size())) return none;
    return steps[k].P.gens;
}

namespace {

std::string shifted(const std::string& base, int degree) {
    return degree == 0 ? base : base + "<" + std::to_string(-degree) + ">";
}

using PathCache = std::map<Path, Mat>;

const Mat& cached_action(const GradedModule& N, const Path& p, PathCache& cache) {
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, N.act_path(p)).first;
    return it->second;
}

Mat extend_from_generators(const ProjectiveSum& P, const GradedModule& target, const std::vector<Vec>& image) {
    return map_from_generators(P, target, image);
}

std::string dual_arrow_name(const std::string& n) {
    if (!n.empty() && n.back() == '^') return n.substr(0, n.size() - 1);
    return n + "^";
}

}  // namespace

Mat map_from_generators(const ProjectiveSum& P, const GradedModule& target, const std::vector<Vec>& image) {
    Mat out(target.dim(), P.mod.dim());
    PathCache cache;
    for (int idx = 0; idx < P.mod.dim(); ++idx) {
        const Path& p = P.paths[idx];
        const Vec& v = image[P.gen_of[idx]];
        out.set_col(idx, p.arrows.empty() ? v : mat_vec(target.F, cached_action(target, p, cache), v));
    }
    return out;
}

std::string Resolution::str(const GradedAlgebra& A, const std::string& name) const {
    std::string s = complete ? "0" : "...";
    for (int k = length(); k >= 0; --k) {
        const auto& g = gens(k);
        if (g.empty()) continue;
        std::string term;
        for (size_t a = 0; a < g.size();) {
            size_t b = a;
            while (b < g.size() && g[b] == g[a]) ++b;
            if (!term.empty()) term += " + ";
            term += shifted("P" + A.vertices()[g[a].vertex], g[a].degree);
            if (b - a > 1) term += "^" + std::to_string(b - a);
            a = b;
        }
        s += " -> " + term;
    }
    return s + " -> " + name + " -> 0";
}

Resolution minimal_resolution(const GradedAlgebra& A, const GradedModule& M, int K) {
    Resolution R;
    R.M = M;
    if (A.finite()) {
        R.trunc = INT_MAX;
    } else {
        R.trunc = A.degree_bound() + (M.empty() ? 0 : M.min_degree());
        if (!M.empty() && M.max_degree() > R.trunc)
            throw BoundExceeded("module degrees exceed the truncation degree " + std::to_string(R.trunc));
    }
    GradedModule cur = M;  // module whose top is covered next
    Mat incl;              // cur -> previous term
    for (int k = 0; k <= K; ++k) {
        auto tops = top_generators(cur);
        if (tops.empty()) {
            R.complete = true;
            break;
        }
        std::vector<Gen> gens;
        std::vector<Vec> images;
        for (auto& [g, v] : tops) {
            gens.push_back(g);
            images.push_back(k == 0 ? v : mat_vec(A.field(), incl, v));
        }
        const GradedModule& target = k == 0 ? R.M : R.steps.back().P.mod;
        ResolutionStep st;
        st.P = projective_sum(A, gens, R.trunc);
        st.d = extend_from_generators(st.P, target, images);
        Submodule ker = kernel(st.P.mod, target, st.d);
        R.steps.push_back(std::move(st));
        cur = std::move(ker.mod);
        incl = std::move(ker.incl);
        if (cur.empty()) {
            R.complete = true;
            break;
        }
    }
    return R;
}

bool is_minimal(const Resolution& R) {
    for (int k = 1; k <= R.length(); ++k)
        for (int g : R.steps[k - 1].P.gen_index) {
            if (g < 0) continue;
            for (int c = 0; c < R.steps[k].d.cols; ++c)
                if (R.steps[k].d(g, c) != 0) return false;
        }
    return true;
}

namespace {

// Cochains Hom(P^k, N<n>): for each generator, the N basis of its block.
struct Layout {
    std::vector<std::vector<int>> idx;
    std::vector<int> off;
    int size = 0;
};

Layout layout(const Resolution& R, const GradedModule& N, int k, int n) {
    Layout L;
    for (const auto& g : R.gens(k)) {
        L.off.push_back(L.size);
        L.idx.push_back(N.indices(g.vertex, g.degree + n));
        L.size += static_cast<int>(L.idx.back().size());
    }
    return L;
}

// delta^k : Hom(P^k, N<n>) -> Hom(P^{k+1}, N<n>)
Mat coboundary(const Resolution& R, const GradedModule& N, int k, int n, PathCache& cache) {
    Layout from = layout(R, N, k, n), to = layout(R, N, k + 1, n);
    Mat D(to.size, from.size);
    if (k < 0 || k + 1 > R.length() || from.size == 0 || to.size == 0) return D;
    const auto& Pk = R.steps[k].P;
    const auto& step = R.steps[k + 1];
    for (size_t gp = 0; gp < step.P.gens.size(); ++gp) {
        if (to.idx[gp].empty()) continue;
        int col = step.P.gen_index[gp];
        if (col < 0) continue;
        for (int b = 0; b < Pk.mod.dim(); ++b) {
            const Scalar& c = step.d(b, col);
            if (c == 0) continue;
            int g = Pk.gen_of[b];
            if (from.idx[g].empty()) continue;
            const Mat& act = cached_action(N, Pk.paths[b], cache);
            for (size_t r = 0; r < to.idx[gp].size(); ++r)
                for (size_t s = 0; s < from.idx[g].size(); ++s) {
                    const Scalar& x = act(to.idx[gp][r], from.idx[g][s]);
                    if (x == 0) continue;
                    Scalar& e = D(to.off[gp] + static_cast<int>(r), from.off[g] + static_cast<int>(s));
                    e += c * x;
                    N.F.norm(e);
                }
        }
    }
    return D;
}

void need_steps(const Resolution& R, int k) {
    if (!R.complete && R.length() < k)
        throw BoundExceeded("resolution computed only to step " + std::to_string(R.length()));
}

std::set<int> candidate_shifts(const Resolution& R, const GradedModule& N, int k) {
    std::set<int> ns;
    auto nb = N.blocks();
    for (const auto& g : R.gens(k))
        for (const auto& [blk, idx] : nb)
            if (blk.first == g.vertex) ns.insert(blk.second - g.degree);
    return ns;
}

}  // namespace

std::map<std::pair<int, int>, int> ext_dims(const Resolution& R, const GradedModule& N, int kmax) {
    need_steps(R, kmax + 1);
    std::map<std::pair<int, int>, int> out;
    PathCache cache;
    for (int k = 0; k <= std::min(kmax, R.length()); ++k)
        for (int n : candidate_shifts(R, N, k)) {
            int c = layout(R, N, k, n).size;
            int r_out = rank(N.F, coboundary(R, N, k, n, cache));
            int r_in = k > 0 ? rank(N.F, coboundary(R, N, k - 1, n, cache)) : 0;
            int d = c - r_out - r_in;
            if (d > 0) out[{k, n}] = d;
        }
    return out;
}

std::vector<std::vector<Vec>> ext_classes(const Resolution& R, const GradedModule& N, int k, int n) {
    need_steps(R, k + 1);
    PathCache cache;
    Layout L = layout(R, N, k, n);
    if (L.size == 0) return {};
    Mat Z = nullspace(N.F, coboundary(R, N, k, n, cache));
    Mat B = k > 0 ? coboundary(R, N, k - 1, n, cache) : Mat(L.size, 0);
    Mat cur = B.cols ? column_basis(N.F, B) : Mat(L.size, 0);
    int r = cur.cols;
    std::vector<std::vector<Vec>> out;
    for (int c = 0; c < Z.cols; ++c) {
        Mat next = hcat(cur, from_cols(L.size, {Z.col(c)}));
        if (rank(N.F, next) == r) continue;
        cur = next;
        ++r;
        std::vector<Vec> cls;
        for (size_t g = 0; g < L.idx.size(); ++g) {
            Vec v(N.dim());
            for (size_t s = 0; s < L.idx[g].size(); ++s) v[L.idx[g][s]] = Z(L.off[g] + static_cast<int>(s), c);
            cls.push_back(v);
        }
        out.push_back(cls);
    }
    return out;
}

ExtTable ext_table(const GradedAlgebra& A, int K) {
    ExtTable t;
    for (int i = 0; i < A.num_vertices(); ++i) {
        Resolution R = minimal_resolution(A, simple(A, i), K);
        for (int k = 0; k <= std::min(K, R.length()); ++k)
            for (const auto& g : R.gens(k)) ++t[{i, g.vertex, k, -g.degree}];
    }
    return t;
}

bool ExtClass::is_zero() const {
    for (const auto& c : coeffs)
        if (c != 0) return false;
    return true;
}

std::vector<int> ext_generators(const Resolution& R, int k, int tgt, int n) {
    std::vector<int> out;
    const auto& g = R.gens(k);
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
        if (g[i].vertex == tgt && g[i].degree == -n) out.push_back(i);
    return out;
}

ExtClass ext_identity(const GradedAlgebra& A, int i) {
    if (i < 0 || i >= A.num_vertices()) throw ShapeError("no vertex " + std::to_string(i));
    return ExtClass{i, i, 0, 0, {Scalar(1)}};
}

ExtClass ext_class_of_arrow(const GradedAlgebra& A, const std::string& arrow) {
    int a = A.arrow_index(arrow);
    int i = A.arrows()[a].from, j = A.arrows()[a].to;
    Resolution R = minimal_resolution(A, simple(A, i), 1);
    auto gens = ext_generators(R, 1, j, -1);
    // d(g_r) = sum_s M_{s r} a_s over the arrows i -> j
    std::vector<int> arrows;
    for (int b = 0; b < static_cast<int>(A.arrows().size()); ++b)
        if (A.arrows()[b].from == i && A.arrows()[b].to == j) arrows.push_back(b);
    const auto& P0 = R.steps[0].P;
    Mat Mx(static_cast<int>(arrows.size()), static_cast<int>(gens.size()));
    for (size_t r = 0; r < gens.size(); ++r) {
        int col = R.steps[1].P.gen_index[gens[r]];
        for (int b = 0; b < P0.mod.dim(); ++b) {
            if (P0.len_of[b] != 1 || R.steps[1].d(b, col) == 0) continue;
            int arr = P0.paths[b].arrows[0];
            auto pos = std::find(arrows.begin(), arrows.end(), arr) - arrows.begin();
            Mx(static_cast<int>(pos), static_cast<int>(r)) = R.steps[1].d(b, col);
        }
    }
    // the class is a_s^* composed with d: phi(g_r) = M_{s r}
    int s = static_cast<int>(std::find(arrows.begin(), arrows.end(), a) - arrows.begin());
    ExtClass c{i, j, 1, -1, Vec(gens.size())};
    for (size_t r = 0; r < gens.size(); ++r) c.coeffs[r] = Mx(s, static_cast<int>(r));
    return c;
}

namespace {

// Restricts an element of a projective sum to the columns of one block.
std::vector<int> block_of(const GradedModule& M, int v, int d) { return M.indices(v, d); }

ExtClass yoneda_with(const Resolution& Ri, const Resolution& Rj, const ExtClass& eta, const ExtClass& xi) {
    const Field& F = Ri.M.F;
    int k = xi.k, l = eta.k, top = k + l;
    ExtClass out{xi.src, eta.tgt, top, xi.n + eta.n, {}};
    auto target_gens = ext_generators(Ri, top, eta.tgt, out.n);
    out.coeffs.assign(target_gens.size(), Scalar(0));
    if (target_gens.empty() || Ri.length() < top) return out;
    if (Rj.length() < l) return out;
    auto xi_gens = ext_generators(Ri, k, xi.tgt, xi.n);
    auto eta_gens = ext_generators(Rj, l, eta.tgt, eta.n);
    if (xi_gens.size() != xi.coeffs.size() || eta_gens.size() != eta.coeffs.size())
        throw ShapeError("Ext class does not match the resolution");
    // F_0 : P^k(L_i) -> P^0(L_j), shifting degrees by xi.n
    const auto& Pj0 = Rj.steps[0].P;
    std::vector<Vec> images(Ri.gens(k).size(), Vec(Pj0.mod.dim()));
    for (size_t r = 0; r < xi_gens.size(); ++r) images[xi_gens[r]][Pj0.gen_index[0]] = xi.coeffs[r];
    Mat Fm = extend_from_generators(Ri.steps[k].P, Pj0.mod, images);
    for (int t = 1; t <= l; ++t) {
        const auto& src = Ri.steps[k + t];
        const auto& dst = Rj.steps[t];
        std::vector<Vec> img;
        for (size_t g = 0; g < src.P.gens.size(); ++g) {
            Vec z = mat_vec(F, Fm, src.d.col(src.P.gen_index[g]));
            int v = src.P.gens[g].vertex, d = src.P.gens[g].degree + xi.n;
            auto cols = block_of(dst.P.mod, v, d);
            auto rows = block_of(Rj.steps[t - 1].P.mod, v, d);
            Mat sub(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
            Vec rhs(rows.size());
            for (size_t r = 0; r < rows.size(); ++r) {
                rhs[r] = z[rows[r]];
                for (size_t c = 0; c < cols.size(); ++c) sub(static_cast<int>(r), static_cast<int>(c)) = dst.d(rows[r], cols[c]);
            }
            auto y = solve(F, sub, rhs);
            if (!y) throw std::logic_error("chain map does not lift");
            Vec full(dst.P.mod.dim());
            for (size_t c = 0; c < cols.size(); ++c) full[cols[c]] = (*y)[c];
            img.push_back(full);
        }
        Fm = extend_from_generators(src.P, dst.P.mod, img);
    }
    const auto& Pl = Rj.steps[l].P;
    const auto& Ptop = Ri.steps[top].P;
    for (size_t r = 0; r < target_gens.size(); ++r) {
        int col = Ptop.gen_index[target_gens[r]];
        Scalar v = 0;
        for (size_t e = 0; e < eta_gens.size(); ++e) v += eta.coeffs[e] * Fm(Pl.gen_index[eta_gens[e]], col);
        F.norm(v);
        out.coeffs[r] = v;
    }
    return out;
}

}  // namespace

ExtClass yoneda_product(const GradedAlgebra& A, const ExtClass& eta, const ExtClass& xi) {
    if (xi.tgt != eta.src)
        throw NotComposable("Ext^" + std::to_string(xi.k) + " class ends at " + A.vertices()[xi.tgt] +
                            " but the next one starts at " + A.vertices()[eta.src]);
    Resolution Ri = minimal_resolution(A, simple(A, xi.src), xi.k + eta.k);
    Resolution Rj = minimal_resolution(A, simple(A, xi.tgt), eta.k);
    return yoneda_with(Ri, Rj, eta, xi);
}

Certificate koszul_check(const GradedAlgebra& A, int K) {
    Certificate c;
    c.name = "koszul";
    if (!A.finite() && A.degree_bound() < K)
        throw BoundExceeded("degree bound " + std::to_string(A.degree_bound()) + " is below K = " + std::to_string(K));
    for (int i = 0; i < A.num_vertices(); ++i) {
        Resolution R = minimal_resolution(A, simple(A, i), K);
        c.lines.push_back(R.str(A, "L" + A.vertices()[i]));
        for (int k = 0; k <= std::min(K, R.length()); ++k)
            for (const auto& g : R.gens(k))
                if (g.degree != k) {
                    c.pass = false;
                    c.lines.push_back("Ext^" + std::to_string(k) + "(L" + A.vertices()[i] + ", L" + A.vertices()[g.vertex] +
                                      "<" + std::to_string(-g.degree) + ">) != 0 off the diagonal");
                }
    }
    if (A.finite()) c.lines.push_back("checked to homological degree " + std::to_string(K));
    else c.lines.push_back("checked to homological degree " + std::to_string(K) + " and internal degree " +
                           std::to_string(A.degree_bound()));
    return c;
}

ExtAlgebra ext_algebra(const GradedAlgebra& A, int K) {
    Certificate kc = koszul_check(A, K);
    if (!kc.pass) {
        std::string why;
        for (const auto& l : kc.lines)
            if (l.find("off the diagonal") != std::string::npos) {
                why = l;
                break;
            }
        throw NotKoszulInRange(why);
    }
    ExtAlgebra E;
    E.dims.assign(K + 1, 0);
    std::vector<Resolution> R;
    for (int i = 0; i < A.num_vertices(); ++i) {
        R.push_back(minimal_resolution(A, simple(A, i), K));
        for (int k = 0; k <= std::min(K, R.back().length()); ++k) E.dims[k] += static_cast<int>(R.back().gens(k).size());
    }
    // degree-one classes become arrows j -> i of A^!
    struct Cls {
        ExtClass c;
        int arrow;
    };
    std::vector<Arrow> arrows;
    std::vector<Cls> classes;
    std::set<std::string> used;
    for (int i = 0; i < A.num_vertices(); ++i) {
        if (R[i].length() < 1) continue;
        const auto& st = R[i].steps[1];
        const auto& P0 = R[i].steps[0].P;
        for (int j = 0; j < A.num_vertices(); ++j) {
            auto gens = ext_generators(R[i], 1, j, -1);
            for (size_t r = 0; r < gens.size(); ++r) {
                int col = st.P.gen_index[gens[r]];
                std::string name;
                int nz = 0, arr = -1;
                for (int b = 0; b < P0.mod.dim(); ++b)
                    if (st.d(b, col) != 0) {
                        ++nz;
                        if (st.d(b, col) == 1 && P0.len_of[b] == 1) arr = P0.paths[b].arrows[0];
                    }
                if (nz == 1 && arr >= 0) name = dual_arrow_name(A.arrows()[arr].name);
                if (name.empty() || used.count(name))
                    name = "x" + A.vertices()[j] + A.vertices()[i] + "_" + std::to_string(r);
                used.insert(name);
                ExtClass c{i, j, 1, -1, Vec(gens.size())};
                c.coeffs[r] = 1;
                classes.push_back({c, static_cast<int>(arrows.size())});
                arrows.push_back({name, j, i});
            }
        }
    }
    // degree-two relations: kernel of the Yoneda product on paths of length two
    GradedAlgebra free(A.vertices(), arrows, {}, A.field(), 2);
    std::vector<Path> p2 = free.computed_degree() >= 2 ? free.paths(2) : std::vector<Path>{};
    std::map<std::pair<int, int>, int> off;  // (i, gen) -> row
    int rows = 0;
    for (int i = 0; i < A.num_vertices(); ++i)
        for (size_t g = 0; g < R[i].gens(2).size(); ++g) off[{i, static_cast<int>(g)}] = rows++;
    Mat prod(rows, static_cast<int>(p2.size()));
    for (size_t c = 0; c < p2.size(); ++c) {
        // traversal [y, x]: x after y, i.e. eta o xi with xi = x, eta = y
        const ExtClass& eta = classes[p2[c].arrows[0]].c;
        const ExtClass& xi = classes[p2[c].arrows[1]].c;
        ExtClass pr = yoneda_with(R[xi.src], R[xi.tgt], eta, xi);
        auto tg = ext_generators(R[xi.src], 2, pr.tgt, pr.n);
        for (size_t r = 0; r < tg.size(); ++r) prod(off.at({xi.src, tg[r]}), static_cast<int>(c)) = pr.coeffs[r];
    }
    Mat ker = nullspace(A.field(), prod);
    std::vector<PathComb> rels;
    for (int c = 0; c < ker.cols; ++c) {
        PathComb comb;
        for (size_t j = 0; j < p2.size(); ++j)
            if (ker(static_cast<int>(j), c) != 0) comb.push_back({ker(static_cast<int>(j), c), p2[j]});
        rels.push_back(comb);
    }
    E.presentation.emplace(A.vertices(), arrows, rels, A.field(), K);
    const GradedAlgebra& P = *E.presentation;
    std::string d1, d2;
    for (int k = 0; k <= K; ++k) {
        d1 += (k ? "," : "") + std::to_string(E.dims[k]);
        d2 += (k ? "," : "") + std::to_string(P.dim(k));
    }
    E.lines.push_back("Ext diagonal dims: " + d1);
    E.lines.push_back("presentation dims: " + d2);
    E.lines.push_back("relations: " + std::to_string(rels.size()));
    for (const auto& r : P.relation_strings(std::min(2, P.computed_degree()))) E.lines.push_back("  " + r);
    bool quadratic = true;
    for (const auto& r : A.relations()) quadratic = quadratic && r.front().second.length() == 2;
    if (quadratic) {
        GradedAlgebra Q = quadratic_dual(A);
        E.dual_match = find_isomorphism(Q, P, std::min({K, Q.computed_degree(), P.computed_degree()}));
        E.lines.push_back(std::string("matches the quadratic dual: ") + (E.dual_match.found ? "yes" : "no"));
    }
    return E;
}

}  // namespace pcanlab
