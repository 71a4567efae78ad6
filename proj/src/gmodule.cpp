#include "pcanlab/gmodule.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

#include "pcanlab/errors.hpp"

namespace pcanlab {

namespace {

GradedModule empty_like(const Field& F, int nv, int na) {
    GradedModule M;
    M.F = F;
    M.nv = nv;
    M.act.assign(na, Mat());
    return M;
}

void size_actions(GradedModule& M) {
    for (auto& a : M.act) a = Mat(M.dim(), M.dim());
}

Vec restrict(const Vec& x, const std::vector<int>& idx) {
    Vec r(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) r[i] = x[idx[i]];
    return r;
}

Mat inverse(const Field& F, const Mat& m) {
    Echelon e = rref(F, hcat(m, Mat::identity(m.rows)));
    if (static_cast<int>(e.pivots.size()) < m.rows || (m.rows && e.pivots.back() >= m.cols))
        throw std::logic_error("matrix is not invertible");
    Mat r(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) r(i, j) = e.r(i, m.cols + j);
    return r;
}

bool vec_zero(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

int GradedModule::dim_at(int v, int d) const { return static_cast<int>(indices(v, d).size()); }

std::vector<int> GradedModule::indices(int v, int d) const {
    std::vector<int> r;
    for (int b = 0; b < dim(); ++b)
        if (vert[b] == v && deg[b] == d) r.push_back(b);
    return r;
}

std::map<Block, std::vector<int>> GradedModule::blocks() const {
    std::map<Block, std::vector<int>> r;
    for (int b = 0; b < dim(); ++b) r[{vert[b], deg[b]}].push_back(b);
    return r;
}

int GradedModule::min_degree() const { return empty() ? 0 : *std::min_element(deg.begin(), deg.end()); }
int GradedModule::max_degree() const { return empty() ? 0 : *std::max_element(deg.begin(), deg.end()); }

Mat GradedModule::act_path(const Path& p) const {
    if (p.arrows.empty()) {
        Mat e(dim(), dim());
        for (int b = 0; b < dim(); ++b)
            if (vert[b] == p.src) e(b, b) = 1;
        return e;
    }
    Mat r = act[p.arrows[0]];
    for (size_t k = 1; k < p.arrows.size(); ++k) r = mat_mul(F, act[p.arrows[k]], r);
    return r;
}

std::string GradedModule::dims_str(const GradedAlgebra& A) const {
    // sort by degree, then vertex
    std::map<std::pair<int, int>, int> byd;
    for (int b = 0; b < dim(); ++b) ++byd[{deg[b], vert[b]}];
    std::string s;
    for (const auto& [k, n] : byd) {
        if (!s.empty()) s += " ";
        s += A.vertices()[k.second] + "@" + std::to_string(k.first) + ":" + std::to_string(n);
    }
    return s.empty() ? "0" : s;
}

GradedModule zero_module(const GradedAlgebra& A) {
    return empty_like(A.field(), A.num_vertices(), static_cast<int>(A.arrows().size()));
}

GradedModule simple(const GradedAlgebra& A, int i, int n) {
    if (i < 0 || i >= A.num_vertices()) throw ShapeError("no vertex " + std::to_string(i));
    GradedModule M = zero_module(A);
    M.vert = {i};
    M.deg = {-n};
    M.label = {"L" + A.vertices()[i]};
    size_actions(M);
    return M;
}

ProjectiveSum projective_sum(const GradedAlgebra& A, const std::vector<Gen>& gens, int trunc) {
    ProjectiveSum P;
    P.gens = gens;
    P.mod = zero_module(A);
    std::map<std::tuple<int, int, int>, int> pos;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        if (gens[g].vertex < 0 || gens[g].vertex >= A.num_vertices()) throw ShapeError("bad generator vertex");
        long room = static_cast<long>(trunc) - gens[g].degree;
        if (room < 0) {
            P.gen_index.push_back(-1);
            continue;
        }
        int maxlen = A.finite() ? A.top_degree() : A.degree_bound();
        if (!A.finite() && room > A.degree_bound())
            throw BoundExceeded("projective needs paths longer than the degree bound " +
                                std::to_string(A.degree_bound()));
        maxlen = static_cast<int>(std::min<long>(maxlen, room));
        for (int l = 0; l <= maxlen; ++l) {
            const auto& bas = A.basis(l);
            for (int b = 0; b < static_cast<int>(bas.size()); ++b) {
                if (bas[b].src != gens[g].vertex) continue;
                pos[{g, l, b}] = P.mod.dim();
                if (l == 0) P.gen_index.push_back(P.mod.dim());
                P.mod.vert.push_back(bas[b].tgt);
                P.mod.deg.push_back(gens[g].degree + l);
                std::string lab = A.path_str(bas[b]);
                P.mod.label.push_back(gens.size() > 1 ? "g" + std::to_string(g) + ":" + lab : lab);
                P.gen_of.push_back(g);
                P.len_of.push_back(l);
                P.path_of.push_back(b);
                P.paths.push_back(bas[b]);
            }
        }
    }
    size_actions(P.mod);
    for (int idx = 0; idx < P.mod.dim(); ++idx) {
        int g = P.gen_of[idx], l = P.len_of[idx];
        const Path& p = A.basis(l)[P.path_of[idx]];
        for (int a = 0; a < static_cast<int>(A.arrows().size()); ++a) {
            if (A.arrows()[a].from != p.tgt) continue;
            if (static_cast<long>(gens[g].degree) + l + 1 > trunc) continue;
            Path q = p;
            q.arrows.push_back(a);
            q.tgt = A.arrows()[a].to;
            if (A.finite() && l + 1 > A.top_degree()) continue;
            Vec c = A.reduce(q);
            for (int b = 0; b < static_cast<int>(c.size()); ++b)
                if (c[b] != 0) P.mod.act[a](pos.at({g, l + 1, b}), idx) = c[b];
        }
    }
    return P;
}

GradedModule projective(const GradedAlgebra& A, int i, int n, int trunc) {
    return projective_sum(A, {{i, -n}}, trunc).mod;
}

GradedModule injective(const GradedAlgebra& A, int i, int n) {
    if (!A.finite()) throw NotFiniteDimensional("injective modules need a finite algebra");
    GradedModule M = zero_module(A);
    std::map<std::pair<int, int>, int> pos;  // (length, basis index) -> module index
    for (int l = 0; l <= A.top_degree(); ++l) {
        const auto& bas = A.basis(l);
        for (int b = 0; b < static_cast<int>(bas.size()); ++b) {
            if (bas[b].tgt != i) continue;
            pos[{l, b}] = M.dim();
            M.vert.push_back(bas[b].src);
            M.deg.push_back(-l);
            M.label.push_back(A.path_str(bas[b]) + "^*");
        }
    }
    size_actions(M);
    for (const auto& [key, idx] : pos) {
        auto [l, b] = key;
        if (l == 0) continue;
        // a.f (q) = f(q o a) for q of length l-1 from a.to to i
        for (int a = 0; a < static_cast<int>(A.arrows().size()); ++a) {
            const Arrow& ar = A.arrows()[a];
            const auto& lower = A.basis(l - 1);
            for (int q = 0; q < static_cast<int>(lower.size()); ++q) {
                if (lower[q].src != ar.to || lower[q].tgt != i) continue;
                Path comp;
                comp.arrows = {a};
                comp.arrows.insert(comp.arrows.end(), lower[q].arrows.begin(), lower[q].arrows.end());
                comp.src = ar.from;
                comp.tgt = i;
                Vec c = A.reduce(comp);
                if (c[b] != 0) M.act[a](pos.at({l - 1, q}), idx) = c[b];
            }
        }
    }
    return shift(M, n);
}

GradedModule shift(const GradedModule& M, int n) {
    GradedModule r = M;
    for (auto& d : r.deg) d -= n;
    return r;
}

GradedModule direct_sum(const GradedModule& M, const GradedModule& N) {
    GradedModule r = M;
    r.vert.insert(r.vert.end(), N.vert.begin(), N.vert.end());
    r.deg.insert(r.deg.end(), N.deg.begin(), N.deg.end());
    r.label.insert(r.label.end(), N.label.begin(), N.label.end());
    for (size_t a = 0; a < r.act.size(); ++a) {
        Mat m(r.dim(), r.dim());
        for (int i = 0; i < M.dim(); ++i)
            for (int j = 0; j < M.dim(); ++j) m(i, j) = M.act[a](i, j);
        for (int i = 0; i < N.dim(); ++i)
            for (int j = 0; j < N.dim(); ++j) m(M.dim() + i, M.dim() + j) = N.act[a](i, j);
        r.act[a] = std::move(m);
    }
    return r;
}

bool is_module(const GradedAlgebra& A, const GradedModule& M, std::string* why) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (M.act.size() != A.arrows().size()) return fail("wrong number of arrow maps");
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Arrow& ar = A.arrows()[a];
        for (int i = 0; i < M.dim(); ++i)
            for (int j = 0; j < M.dim(); ++j)
                if (M.act[a](i, j) != 0 &&
                    (M.vert[j] != ar.from || M.vert[i] != ar.to || M.deg[i] != M.deg[j] + 1))
                    return fail("arrow " + ar.name + " is not homogeneous");
    }
    for (const auto& r : A.relations()) {
        Mat s(M.dim(), M.dim());
        for (const auto& [c, p] : r) s = mat_add(M.F, s, M.act_path(p), c);
        if (!s.is_zero()) return fail("relation " + A.comb_str(r) + " acts nontrivially");
    }
    return true;
}

Submodule submodule_from_blocks(const GradedModule& M, const std::map<Block, Mat>& basis) {
    Submodule S;
    S.mod = empty_like(M.F, M.nv, static_cast<int>(M.act.size()));
    std::vector<Vec> cols;
    std::map<Block, std::vector<int>> where;
    for (const auto& [blk, m] : basis)
        for (int c = 0; c < m.cols; ++c) {
            where[blk].push_back(static_cast<int>(cols.size()));
            S.mod.vert.push_back(blk.first);
            S.mod.deg.push_back(blk.second);
            S.mod.label.push_back("s" + std::to_string(cols.size()));
            cols.push_back(m.col(c));
        }
    S.incl = from_cols(M.dim(), cols);
    size_actions(S.mod);
    for (size_t a = 0; a < M.act.size(); ++a)
        for (int s = 0; s < S.mod.dim(); ++s) {
            Vec y = mat_vec(M.F, M.act[a], cols[s]);
            if (vec_zero(y)) continue;
            int v = -1;
            for (int b = 0; b < M.dim(); ++b)
                if (y[b] != 0) v = M.vert[b];
            Block tgt{v, S.mod.deg[s] + 1};
            auto it = basis.find(tgt);
            if (it == basis.end()) throw std::logic_error("subspace is not a submodule");
            auto c = solve(M.F, it->second, y);
            if (!c) throw std::logic_error("subspace is not a submodule");
            const auto& idx = where.at(tgt);
            for (size_t k = 0; k < idx.size(); ++k) S.mod.act[a](idx[k], s) = (*c)[k];
        }
    return S;
}

Submodule submodule_generated(const GradedModule& M, const std::vector<Vec>& vectors) {
    auto blocks = M.blocks();
    std::map<Block, std::vector<Vec>> span;
    std::deque<std::pair<Block, Vec>> todo;
    auto add = [&](const Block& blk, const Vec& v) {
        auto& cur = span[blk];
        Mat before = from_cols(M.dim(), cur);
        std::vector<Vec> next = cur;
        next.push_back(v);
        if (rank(M.F, from_cols(M.dim(), next)) > rank(M.F, before)) {
            cur.push_back(v);
            todo.push_back({blk, v});
        }
    };
    for (const auto& v : vectors)
        for (const auto& [blk, idx] : blocks) {
            Vec part(M.dim());
            bool any = false;
            for (int b : idx)
                if (v[b] != 0) {
                    part[b] = v[b];
                    any = true;
                }
            if (any) add(blk, part);
        }
    while (!todo.empty()) {
        auto [blk, v] = todo.front();
        todo.pop_front();
        for (const auto& a : M.act) {
            Vec w = mat_vec(M.F, a, v);
            if (vec_zero(w)) continue;
            int tv = -1;
            for (int b = 0; b < M.dim(); ++b)
                if (w[b] != 0) tv = M.vert[b];
            add({tv, blk.second + 1}, w);
        }
    }
    std::map<Block, Mat> basis;
    for (const auto& [blk, vs] : span)
        if (!vs.empty()) basis[blk] = from_cols(M.dim(), vs);
    return submodule_from_blocks(M, basis);
}

Submodule largest_submodule_in(const GradedModule& M, const std::map<Block, Mat>& W0) {
    std::map<Block, Mat> W;
    for (const auto& [blk, m] : W0)
        if (m.cols > 0) W[blk] = column_basis(M.F, m);
    auto blocks = M.blocks();
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [blk, X] : W) {
            if (X.cols == 0) continue;
            for (size_t a = 0; a < M.act.size(); ++a) {
                Mat Y = mat_mul(M.F, M.act[a], X);
                if (Y.is_zero()) continue;
                // condition: Y c lies in W at the target block
                Block tgt{-1, blk.second + 1};
                for (int b = 0; b < M.dim(); ++b)
                    for (int c = 0; c < Y.cols; ++c)
                        if (Y(b, c) != 0) tgt.first = M.vert[b];
                auto it = W.find(tgt);
                Mat WT = (it == W.end()) ? Mat(M.dim(), 0) : it->second;
                Mat sys = hcat(Y, WT);
                Mat ns = nullspace(M.F, sys);
                std::vector<Vec> keep;
                for (int c = 0; c < ns.cols; ++c) {
                    Vec coeff(X.cols);
                    for (int k = 0; k < X.cols; ++k) coeff[k] = ns(k, c);
                    if (!vec_zero(coeff)) keep.push_back(mat_vec(M.F, X, coeff));
                }
                Mat nx = keep.empty() ? Mat(M.dim(), 0) : column_basis(M.F, from_cols(M.dim(), keep));
                if (nx.cols < X.cols) {
                    X = nx;
                    changed = true;
                }
                if (X.cols == 0) break;
            }
        }
    }
    std::map<Block, Mat> out;
    for (const auto& [blk, m] : W)
        if (m.cols > 0) out[blk] = m;
    return submodule_from_blocks(M, out);
}

Submodule kernel(const GradedModule& M, const GradedModule& N, const Mat& f) {
    auto mb = M.blocks();
    auto nb = N.blocks();
    std::map<Block, Mat> basis;
    for (const auto& [blk, cols] : mb) {
        auto it = nb.find(blk);
        Mat sub(it == nb.end() ? 0 : static_cast<int>(it->second.size()), static_cast<int>(cols.size()));
        if (it != nb.end())
            for (size_t i = 0; i < it->second.size(); ++i)
                for (size_t j = 0; j < cols.size(); ++j) sub(static_cast<int>(i), static_cast<int>(j)) = f(it->second[i], cols[j]);
        Mat ns = nullspace(M.F, sub);
        if (ns.cols == 0) continue;
        Mat emb(M.dim(), ns.cols);
        for (size_t j = 0; j < cols.size(); ++j)
            for (int c = 0; c < ns.cols; ++c) emb(cols[j], c) = ns(static_cast<int>(j), c);
        basis[blk] = emb;
    }
    return submodule_from_blocks(M, basis);
}

Quotient quotient(const GradedModule& M, const Submodule& S) {
    Quotient Q;
    Q.mod = empty_like(M.F, M.nv, static_cast<int>(M.act.size()));
    auto mb = M.blocks();
    auto sb = S.mod.blocks();
    std::vector<int> kept;
    std::vector<Vec> prow;
    for (const auto& [blk, idx] : mb) {
        int n = static_cast<int>(idx.size());
        std::vector<Vec> scols;
        if (auto it = sb.find(blk); it != sb.end())
            for (int s : it->second) scols.push_back(restrict(S.incl.col(s), idx));
        Mat SB = from_cols(n, scols);
        if (scols.empty()) SB = Mat(n, 0);
        std::vector<int> comp = complement_units(M.F, SB, n);
        if (comp.empty()) continue;
        Mat full = SB;
        for (int c : comp) {
            Mat u(n, 1);
            u(c, 0) = 1;
            full = hcat(full, u);
        }
        Mat inv = inverse(M.F, full);
        for (size_t k = 0; k < comp.size(); ++k) {
            Vec r(M.dim());
            for (int j = 0; j < n; ++j) r[idx[j]] = inv(SB.cols + static_cast<int>(k), j);
            prow.push_back(r);
            kept.push_back(idx[comp[k]]);
            Q.mod.vert.push_back(blk.first);
            Q.mod.deg.push_back(blk.second);
            Q.mod.label.push_back(M.label.empty() ? "" : M.label[idx[comp[k]]]);
        }
    }
    Q.proj = Mat(static_cast<int>(kept.size()), M.dim());
    for (size_t i = 0; i < kept.size(); ++i)
        for (int j = 0; j < M.dim(); ++j) Q.proj(static_cast<int>(i), j) = prow[i][j];
    Mat lift(M.dim(), static_cast<int>(kept.size()));
    for (size_t i = 0; i < kept.size(); ++i) lift(kept[i], static_cast<int>(i)) = 1;
    for (size_t a = 0; a < M.act.size(); ++a) Q.mod.act[a] = mat_mul(M.F, Q.proj, mat_mul(M.F, M.act[a], lift));
    return Q;
}

namespace {

// Columns spanning rad M restricted to the block rows.
Mat radical_block(const GradedModule& M, const Block& blk, const std::vector<int>& idx) {
    std::vector<Vec> cols;
    for (const auto& a : M.act)
        for (int j = 0; j < M.dim(); ++j) {
            if (M.deg[j] != blk.second - 1) continue;
            Vec c(idx.size());
            bool any = false;
            for (size_t i = 0; i < idx.size(); ++i)
                if (a(idx[i], j) != 0) {
                    c[i] = a(idx[i], j);
                    any = true;
                }
            if (any) cols.push_back(c);
        }
    return cols.empty() ? Mat(static_cast<int>(idx.size()), 0) : from_cols(static_cast<int>(idx.size()), cols);
}

}  // namespace

std::vector<std::pair<Gen, Vec>> top_generators(const GradedModule& M) {
    std::vector<std::pair<Gen, Vec>> out;
    for (const auto& [blk, idx] : M.blocks()) {
        Mat rad = radical_block(M, blk, idx);
        for (int c : complement_units(M.F, rad, static_cast<int>(idx.size()))) {
            Vec v(M.dim());
            v[idx[c]] = 1;
            out.push_back({Gen{blk.first, blk.second}, v});
        }
    }
    return out;
}

std::map<Block, int> top_dims(const GradedModule& M) {
    std::map<Block, int> out;
    for (const auto& [g, v] : top_generators(M)) ++out[{g.vertex, g.degree}];
    return out;
}

std::map<Block, int> socle_dims(const GradedModule& M) {
    std::map<Block, int> out;
    for (const auto& [blk, idx] : M.blocks()) {
        Mat stacked(0, static_cast<int>(idx.size()));
        for (const auto& a : M.act) {
            Mat part(M.dim(), static_cast<int>(idx.size()));
            for (int i = 0; i < M.dim(); ++i)
                for (size_t j = 0; j < idx.size(); ++j) part(i, static_cast<int>(j)) = a(i, idx[j]);
            stacked = vcat(stacked, part);
        }
        int s = nullspace(M.F, stacked).cols;
        if (s) out[blk] = s;
    }
    return out;
}

std::vector<Mat> hom_space(const GradedModule& M, const GradedModule& N) {
    auto mb = M.blocks();
    auto nb = N.blocks();
    std::map<std::pair<int, int>, int> var;
    for (const auto& [blk, ms] : mb) {
        auto it = nb.find(blk);
        if (it == nb.end()) continue;
        for (int m : ms)
            for (int n : it->second) var[{m, n}] = static_cast<int>(var.size());
    }
    if (var.empty()) return {};
    int nvar = static_cast<int>(var.size());
    std::vector<Vec> eqs;
    for (size_t a = 0; a < M.act.size(); ++a) {
        const Mat& Ma = M.act[a];
        const Mat& Na = N.act[a];
        for (int m = 0; m < M.dim(); ++m) {
            auto src = nb.find({M.vert[m], M.deg[m]});
            // targets: N basis vectors one degree up at any vertex
            std::map<int, Vec> row;  // n' -> equation
            for (int np = 0; np < N.dim(); ++np) {
                if (N.deg[np] != M.deg[m] + 1) continue;
                Vec e(nvar);
                bool any = false;
                if (src != nb.end())
                    for (int n : src->second)
                        if (Na(np, n) != 0) {
                            e[var.at({m, n})] += Na(np, n);
                            any = true;
                        }
                for (int mp = 0; mp < M.dim(); ++mp)
                    if (Ma(mp, m) != 0) {
                        auto it = var.find({mp, np});
                        if (it != var.end()) {
                            e[it->second] -= Ma(mp, m);
                            any = true;
                        }
                    }
                if (any) eqs.push_back(e);
            }
        }
    }
    Mat sys(static_cast<int>(eqs.size()), nvar);
    for (size_t i = 0; i < eqs.size(); ++i)
        for (int j = 0; j < nvar; ++j) {
            sys(static_cast<int>(i), j) = eqs[i][j];
            M.F.norm(sys(static_cast<int>(i), j));
        }
    Mat ns = nullspace(M.F, sys);
    std::vector<Mat> out;
    for (int c = 0; c < ns.cols; ++c) {
        Mat f(N.dim(), M.dim());
        for (const auto& [mn, k] : var) f(mn.second, mn.first) = ns(k, c);
        out.push_back(f);
    }
    return out;
}

int hom_dim(const GradedModule& M, const GradedModule& N, int n) {
    return static_cast<int>(hom_space(M, shift(N, n)).size());
}

bool is_isomorphic(const GradedModule& M, const GradedModule& N) {
    auto mb = M.blocks();
    auto nb = N.blocks();
    if (mb.size() != nb.size()) return false;
    for (const auto& [blk, idx] : mb) {
        auto it = nb.find(blk);
        if (it == nb.end() || it->second.size() != idx.size()) return false;
    }
    if (M.dim() == 0) return true;
    auto H = hom_space(M, N);
    if (H.empty()) return false;
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> coeff(-7, 7);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Mat f(N.dim(), M.dim());
        for (const auto& h : H) f = mat_add(M.F, f, h, M.F.make(coeff(rng)));
        if (rank(M.F, f) == M.dim()) return true;
    }
    return false;
}

int end_semisimple_rank(const GradedModule& M) {
    auto E = hom_space(M, M);
    int n = static_cast<int>(E.size());
    Mat G(n, n);
    for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
            Mat p = mat_mul(M.F, E[r], E[s]);
            Scalar t = 0;
            for (int i = 0; i < p.rows; ++i) t += p(i, i);
            M.F.norm(t);
            G(r, s) = t;
        }
    return rank(M.F, G);
}

}  // namespace pcanlab
