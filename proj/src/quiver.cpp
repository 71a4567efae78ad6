#include "pcanlab/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

#include "pcanlab/errors.hpp"

namespace pcanlab {

Path concat(const Path& first, const Path& then) {
    if (first.tgt != then.src) throw NotComposable("paths do not compose");
    Path r = first;
    r.arrows.insert(r.arrows.end(), then.arrows.begin(), then.arrows.end());
    r.tgt = then.tgt;
    return r;
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t"), b = s.find_last_not_of(" \t");
    return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

bool parse_number(const std::string& s, Scalar& out) {
    if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s[0])))) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/') return false;
    try {
        out = Scalar(s);
        out.canonicalize();
    } catch (...) {
        return false;
    }
    return true;
}

std::string dual_name(const std::string& n) {
    if (!n.empty() && n.back() == '^') return n.substr(0, n.size() - 1);
    return n + "^";
}

}  // namespace

PathComb parse_comb(const std::string& text, const std::vector<Arrow>& arrows) {
    PathComb out;
    std::vector<std::pair<int, std::string>> terms;
    std::string cur;
    int sign = 1;
    for (char c : text) {
        if (c == '+' || c == '-') {
            if (!trim(cur).empty()) terms.push_back({sign, trim(cur)});
            else if (!cur.empty() && !trim(cur).empty()) throw ParseError("bad relation '" + text + "'");
            cur.clear();
            sign = c == '-' ? -1 : 1;
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) terms.push_back({sign, trim(cur)});
    if (terms.empty()) throw ParseError("empty relation");
    for (const auto& [sg, term] : terms) {
        Scalar coeff = sg;
        std::vector<std::string> names;
        std::string f;
        for (char c : term + "*") {
            if (c == '*') {
                f = trim(f);
                if (f.empty()) throw ParseError("bad term '" + term + "'");
                Scalar num;
                if (names.empty() && parse_number(f, num)) coeff *= num;
                else names.push_back(f);
                f.clear();
            } else {
                f += c;
            }
        }
        if (names.empty()) throw ParseError("relation term '" + term + "' has no arrows");
        Path p;
        for (auto it = names.rbegin(); it != names.rend(); ++it) {
            auto a = std::find_if(arrows.begin(), arrows.end(), [&](const Arrow& x) { return x.name == *it; });
            if (a == arrows.end()) throw ParseError("unknown arrow '" + *it + "'");
            int ai = static_cast<int>(a - arrows.begin());
            if (p.arrows.empty()) p.src = a->from;
            else if (p.tgt != a->from) throw ParseError("arrows in '" + term + "' do not compose");
            p.arrows.push_back(ai);
            p.tgt = a->to;
        }
        out.push_back({coeff, p});
    }
    return out;
}

GradedAlgebra::GradedAlgebra(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                             std::vector<PathComb> relations, Field F, int degree_bound)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)), F_(F), bound_(degree_bound) {
    if (vertices_.empty()) throw ShapeError("quiver needs at least one vertex");
    int n = num_vertices();
    for (const auto& a : arrows_)
        if (a.from < 0 || a.from >= n || a.to < 0 || a.to >= n) throw ShapeError("arrow " + a.name + " has a bad endpoint");
    // split each relation into its e_j r e_i components
    for (auto& r : relations) {
        if (r.empty()) continue;
        int len = r.front().second.length();
        for (const auto& [c, p] : r)
            if (p.length() != len) throw InhomogeneousRelation("relation mixes path lengths");
        if (len < 2) throw InhomogeneousRelation("relations must have degree at least 2");
        std::map<std::pair<int, int>, PathComb> parts;
        for (auto& [c, p] : r) {
            Scalar x = c;
            F_.norm(x);
            if (x != 0) parts[{p.src, p.tgt}].push_back({x, p});
        }
        for (auto& [k, comb] : parts) relations_.push_back(comb);
    }
    compute();
}

void GradedAlgebra::compute() {
    int n = num_vertices();
    paths_.clear();
    index_.clear();
    ideal_.clear();
    basis_.clear();
    basis_pos_.clear();
    between_.clear();
    top_ = -1;
    for (int d = 0; d <= bound_; ++d) {
        std::vector<Path> ps;
        if (d == 0) {
            for (int v = 0; v < n; ++v) ps.push_back(Path{{}, v, v});
        } else {
            for (const auto& p : paths_[d - 1])
                for (int a = 0; a < static_cast<int>(arrows_.size()); ++a)
                    if (arrows_[a].from == p.tgt) {
                        Path q = p;
                        if (q.arrows.empty()) q.src = arrows_[a].from;
                        q.arrows.push_back(a);
                        q.tgt = arrows_[a].to;
                        ps.push_back(q);
                    }
        }
        std::map<Path, int> idx;
        for (int i = 0; i < static_cast<int>(ps.size()); ++i) idx[ps[i]] = i;
        int np = static_cast<int>(ps.size());
        std::vector<Vec> gens;
        auto add_comb = [&](const PathComb& c) {
            Vec v(np);
            for (const auto& [x, p] : c) {
                v[idx.at(p)] += x;
                F_.norm(v[idx.at(p)]);
            }
            gens.push_back(v);
        };
        for (const auto& r : relations_)
            if (r.front().second.length() == d) add_comb(r);
        if (d >= 1) {
            const Echelon& prev = ideal_[d - 1];
            const auto& pp = paths_[d - 1];
            for (int row = 0; row < prev.r.rows; ++row)
                for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
                    PathComb left, right;
                    for (int j = 0; j < prev.r.cols; ++j) {
                        const Scalar& x = prev.r(row, j);
                        if (x == 0) continue;
                        const Path& p = pp[j];
                        if (arrows_[a].from == p.tgt) {
                            Path q = p;
                            q.arrows.push_back(a);
                            q.tgt = arrows_[a].to;
                            left.push_back({x, q});
                        }
                        if (arrows_[a].to == p.src) {
                            Path q = p;
                            q.arrows.insert(q.arrows.begin(), a);
                            q.src = arrows_[a].from;
                            right.push_back({x, q});
                        }
                    }
                    if (!left.empty()) add_comb(left);
                    if (!right.empty()) add_comb(right);
                }
        }
        Mat g(static_cast<int>(gens.size()), np);
        for (int i = 0; i < g.rows; ++i)
            for (int j = 0; j < np; ++j) g(i, j) = gens[i][j];
        Echelon e = rref(F_, g);
        if (e.r.rows == 0) e.r = Mat(0, np);
        std::vector<int> pos(np, -1);
        std::vector<Path> bas;
        std::map<std::pair<int, int>, std::vector<int>> btw;
        std::vector<bool> piv(np, false);
        for (int c : e.pivots) piv[c] = true;
        for (int j = 0; j < np; ++j)
            if (!piv[j]) {
                pos[j] = static_cast<int>(bas.size());
                btw[{ps[j].src, ps[j].tgt}].push_back(static_cast<int>(bas.size()));
                bas.push_back(ps[j]);
            }
        paths_.push_back(std::move(ps));
        index_.push_back(std::move(idx));
        ideal_.push_back(std::move(e));
        basis_pos_.push_back(std::move(pos));
        between_.push_back(std::move(btw));
        bool empty = bas.empty();
        basis_.push_back(std::move(bas));
        if (empty) {
            top_ = d - 1;
            break;
        }
    }
}

GradedAlgebra GradedAlgebra::parse(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                                   const std::vector<std::string>& relations, Field F, int degree_bound) {
    std::vector<PathComb> rels;
    for (const auto& r : relations) rels.push_back(parse_comb(r, arrows));
    return GradedAlgebra(std::move(vertices), std::move(arrows), std::move(rels), F, degree_bound);
}

std::vector<std::string> GradedAlgebra::preset_names() {
    return {"R",    "Rstar", "R_ab", "Rstar_ab", "R_ab_ba",     "Rstar_ab_ba",
            "ext2", "sym2",  "kx3",  "A4_cubic", "semisimple2", "R_ab_pair"};
}

GradedAlgebra GradedAlgebra::preset(const std::string& name, Field F, int degree_bound) {
    std::vector<std::string> two{"1", "2"};
    std::vector<Arrow> r{{"a", 0, 1}, {"b", 1, 0}}, rs{{"a^", 1, 0}, {"b^", 0, 1}};
    std::vector<Arrow> loops{{"x", 0, 0}, {"y", 0, 0}};
    if (name == "R") return parse(two, r, {}, F, degree_bound);
    if (name == "Rstar") return parse(two, rs, {}, F, degree_bound);
    if (name == "R_ab") return parse(two, r, {"a*b"}, F, degree_bound);
    if (name == "Rstar_ab") return parse(two, rs, {"a^*b^"}, F, degree_bound);
    if (name == "R_ab_ba") return parse(two, r, {"a*b", "b*a"}, F, degree_bound);
    if (name == "Rstar_ab_ba") return parse(two, rs, {"a^*b^", "b^*a^"}, F, degree_bound);
    if (name == "ext2") return parse({"1"}, loops, {"x*x", "y*y", "x*y + y*x"}, F, degree_bound);
    if (name == "sym2") return parse({"1"}, loops, {"x*y - y*x"}, F, degree_bound);
    if (name == "kx3") return parse({"1"}, {{"x", 0, 0}}, {"x*x*x"}, F, degree_bound);
    if (name == "A4_cubic")
        return parse({"1", "2", "3", "4"}, {{"a1", 0, 1}, {"a2", 1, 2}, {"a3", 2, 3}}, {"a3*a2*a1"}, F, degree_bound);
    if (name == "semisimple2") return parse(two, {}, {}, F, degree_bound);
    if (name == "R_ab_pair")
        return parse({"1", "2", "3", "4"}, {{"a", 0, 1}, {"b", 1, 0}, {"c", 2, 3}, {"d", 3, 2}}, {"a*b", "c*d"}, F,
                     degree_bound);
    throw ParseError("unknown preset '" + name + "'");
}

int GradedAlgebra::arrow_index(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(arrows_.size()); ++i)
        if (arrows_[i].name == name) return i;
    throw ParseError("unknown arrow '" + name + "'");
}

const std::vector<Path>& GradedAlgebra::basis(int d) const {
    static const std::vector<Path> none;
    if (d < 0) return none;
    if (d > computed_degree()) {
        if (finite()) return none;
        throw BoundExceeded("degree " + std::to_string(d) + " exceeds the degree bound " + std::to_string(bound_));
    }
    return basis_[d];
}

int GradedAlgebra::dim(int d) const { return static_cast<int>(basis(d).size()); }

int GradedAlgebra::dim(int d, int src, int tgt) const { return static_cast<int>(basis_between(d, src, tgt).size()); }

int GradedAlgebra::total_dim() const {
    if (!finite()) throw NotFiniteDimensional("algebra is infinite-dimensional up to the degree bound");
    int s = 0;
    for (int d = 0; d <= top_; ++d) s += dim(d);
    return s;
}

const std::vector<int>& GradedAlgebra::basis_between(int d, int src, int tgt) const {
    static const std::vector<int> none;
    if (d < 0) return none;
    if (d > computed_degree()) {
        if (finite()) return none;
        throw BoundExceeded("degree " + std::to_string(d) + " exceeds the degree bound " + std::to_string(bound_));
    }
    auto it = between_[d].find({src, tgt});
    return it == between_[d].end() ? none : it->second;
}

Vec GradedAlgebra::reduce(const Path& p) const {
    int d = p.length();
    int n = dim(d);
    Vec v(n);
    if (n == 0) return v;
    int j = index_[d].at(p);
    int pos = basis_pos_[d][j];
    if (pos >= 0) {
        v[pos] = 1;
        return v;
    }
    const Echelon& e = ideal_[d];
    for (size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] == j) {
            for (int c = 0; c < e.r.cols; ++c)
                if (basis_pos_[d][c] >= 0 && e.r(static_cast<int>(r), c) != 0) {
                    v[basis_pos_[d][c]] = -e.r(static_cast<int>(r), c);
                    F_.norm(v[basis_pos_[d][c]]);
                }
            break;
        }
    return v;
}

Vec GradedAlgebra::reduce(const PathComb& c) const {
    if (c.empty()) return {};
    int d = c.front().second.length();
    Vec v(dim(d));
    for (const auto& [x, p] : c) {
        Vec w = reduce(p);
        for (size_t i = 0; i < v.size(); ++i) {
            v[i] += x * w[i];
            F_.norm(v[i]);
        }
    }
    return v;
}

std::string GradedAlgebra::path_str(const Path& p) const {
    if (p.arrows.empty()) return "e" + vertices_[p.src];
    std::string s;
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
        if (!s.empty()) s += "*";
        s += arrows_[*it].name;
    }
    return s;
}

std::string GradedAlgebra::comb_str(const PathComb& c) const {
    std::string s;
    for (const auto& [x, p] : c) {
        if (x == 0) continue;
        Scalar a = x;
        bool neg = F_.p == 0 && a < 0;
        if (neg) a = -a;
        if (s.empty()) s = neg ? "-" : "";
        else s += neg ? " - " : " + ";
        if (a != 1) s += scalar_str(a) + "*";
        s += path_str(p);
    }
    return s.empty() ? "0" : s;
}

std::vector<std::string> GradedAlgebra::relation_strings(int d) const {
    std::vector<std::string> out;
    if (d > computed_degree()) return out;
    const Echelon& e = ideal_[d];
    for (int r = 0; r < e.r.rows; ++r) {
        PathComb c;
        for (int j = 0; j < e.r.cols; ++j)
            if (e.r(r, j) != 0) c.push_back({e.r(r, j), paths_[d][j]});
        out.push_back(comb_str(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string GradedAlgebra::summary() const {
    std::string s = "vertices:";
    for (const auto& v : vertices_) s += " " + v;
    s += "\narrows:";
    for (const auto& a : arrows_) s += " " + a.name + ":" + vertices_[a.from] + "->" + vertices_[a.to];
    s += "\nrelations:";
    std::vector<std::string> rels;
    for (const auto& r : relations_) rels.push_back(comb_str(r));
    for (const auto& r : rels) s += " [" + r + "]";
    s += "\nfield: " + F_.name() + "\ndims:";
    for (int d = 0; d <= computed_degree(); ++d) s += " " + std::to_string(dim(d));
    if (finite()) s += "\nfinite, total dimension " + std::to_string(total_dim()) + "\n";
    else s += "\ninfinite up to degree " + std::to_string(bound_) + "\n";
    return s;
}

GradedAlgebra quadratic_dual(const GradedAlgebra& A) {
    for (const auto& r : A.relations())
        if (r.front().second.length() != 2) throw NotQuadratic("relation of degree " + std::to_string(r.front().second.length()));
    std::vector<Arrow> dual;
    for (const auto& a : A.arrows()) dual.push_back({dual_name(a.name), a.to, a.from});
    // dual paths of length 2 in traversal order [w^, u^] for the path [u, w]
    if (A.computed_degree() < 2 && !A.finite()) throw BoundExceeded("need the algebra up to degree 2");
    // A_1 = 0 here means there are no arrows at all
    bool has2 = A.computed_degree() >= 2;
    std::vector<Path> p2 = has2 ? A.paths(2) : std::vector<Path>{};
    int np = static_cast<int>(p2.size());
    Mat m(0, np);
    if (has2) {
        const Echelon& rel = A.ideal(2);
        m = Mat(rel.r.rows, np);
        for (int r = 0; r < rel.r.rows; ++r)
            for (int j = 0; j < np; ++j) m(r, j) = rel.r(r, j);
    }
    Mat perp = nullspace(A.field(), m);
    std::vector<PathComb> rels;
    for (int c = 0; c < perp.cols; ++c) {
        PathComb comb;
        for (int j = 0; j < np; ++j) {
            if (perp(j, c) == 0) continue;
            const Path& p = p2[j];
            Path q;
            q.arrows = {p.arrows[1], p.arrows[0]};
            q.src = dual[p.arrows[1]].from;
            q.tgt = dual[p.arrows[0]].to;
            comb.push_back({perp(j, c), q});
        }
        rels.push_back(comb);
    }
    return GradedAlgebra(A.vertices(), dual, rels, A.field(), A.degree_bound());
}

AlgebraIso find_isomorphism(const GradedAlgebra& A, const GradedAlgebra& B, int max_degree) {
    AlgebraIso out;
    int n = A.num_vertices();
    int na = static_cast<int>(A.arrows().size());
    if (n != B.num_vertices() || na != static_cast<int>(B.arrows().size())) {
        out.lines.push_back("vertex or arrow counts differ");
        return out;
    }
    int D = std::min(A.computed_degree(), B.computed_degree());
    if (max_degree >= 0) D = std::min(D, max_degree);
    for (int d = 0; d <= D; ++d)
        if (A.dim(d) != B.dim(d)) {
            out.lines.push_back("graded dimensions differ in degree " + std::to_string(d));
            return out;
        }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        // arrows of A from i to j must match arrows of B from perm[i] to perm[j]
        std::vector<std::vector<int>> choices(na);
        bool ok = true;
        for (int a = 0; a < na && ok; ++a) {
            for (int b = 0; b < na; ++b)
                if (B.arrows()[b].from == perm[A.arrows()[a].from] && B.arrows()[b].to == perm[A.arrows()[a].to])
                    choices[a].push_back(b);
            ok = !choices[a].empty();
        }
        if (!ok) continue;
        std::vector<int> amap(na, -1);
        std::vector<bool> used(na, false);
        std::function<bool(int)> assign = [&](int a) -> bool {
            if (a == na) {
                for (int mask = 0; mask < (1 << na); ++mask) {
                    std::vector<int> sign(na);
                    for (int k = 0; k < na; ++k) sign[k] = (mask >> k) & 1 ? -1 : 1;
                    bool match = true;
                    for (int d = 2; d <= D && match; ++d) {
                        const Echelon& ea = A.ideal(d);
                        const Echelon& eb = B.ideal(d);
                        if (ea.r.rows != eb.r.rows) {
                            match = false;
                            break;
                        }
                        const auto& pa = A.paths(d);
                        std::map<Path, int> ib;
                        for (int j = 0; j < static_cast<int>(B.paths(d).size()); ++j) ib[B.paths(d)[j]] = j;
                        Mat img(ea.r.rows, static_cast<int>(B.paths(d).size()));
                        for (int r = 0; r < ea.r.rows; ++r)
                            for (int j = 0; j < ea.r.cols; ++j) {
                                if (ea.r(r, j) == 0) continue;
                                Path q;
                                Scalar s = ea.r(r, j);
                                for (int x : pa[j].arrows) {
                                    q.arrows.push_back(amap[x]);
                                    s *= sign[x];
                                }
                                q.src = perm[pa[j].src];
                                q.tgt = perm[pa[j].tgt];
                                B.field().norm(s);
                                img(r, ib.at(q)) = s;
                            }
                        Mat both = vcat(eb.r.rows ? eb.r : Mat(0, img.cols), img);
                        if (rank(B.field(), both) != eb.r.rows) match = false;
                    }
                    if (match) {
                        out.found = true;
                        out.vertex_map = perm;
                        out.arrow_map = amap;
                        out.arrow_sign = sign;
                        return true;
                    }
                }
                return false;
            }
            for (int b : choices[a]) {
                if (used[b]) continue;
                used[b] = true;
                amap[a] = b;
                if (assign(a + 1)) return true;
                used[b] = false;
            }
            return false;
        };
        if (assign(0)) break;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!out.found) {
        out.lines.push_back("no isomorphism found");
        return out;
    }
    for (int i = 0; i < n; ++i) out.lines.push_back("vertex " + A.vertices()[i] + " -> " + B.vertices()[out.vertex_map[i]]);
    for (int a = 0; a < na; ++a)
        out.lines.push_back("arrow " + A.arrows()[a].name + " -> " + (out.arrow_sign[a] < 0 ? "-" : "") +
                            B.arrows()[out.arrow_map[a]].name);
    return out;
}

}  // namespace pcanlab
