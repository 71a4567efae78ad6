#include "pcanlab/rootdata.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>

#include "pcanlab/errors.hpp"

namespace pcanlab {

Weight add(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Weight sub(const Weight& a, const Weight& b) {
    Weight r(a);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Weight scale(const Weight& a, int k) {
    Weight r(a);
    for (auto& x : r) x *= k;
    return r;
}

std::string weight_str(const Weight& w) {
    std::string s = "(";
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w[i]);
    }
    return s + ")";
}

namespace {

void check_cartan(const IntMat& c) {
    int n = static_cast<int>(c.size());
    for (const auto& row : c)
        if (static_cast<int>(row.size()) != n) throw ShapeError("Cartan matrix is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && c[i][j] != 2) throw NotFiniteType("diagonal entry is not 2");
            if (i != j && c[i][j] > 0) throw NotFiniteType("positive off-diagonal entry");
            if (i != j && (c[i][j] == 0) != (c[j][i] == 0)) throw NotFiniteType("zero pattern not symmetric");
        }
    // symmetrize: d_i c_ij = d_j c_ji
    std::vector<mpq_class> d(n, 0);
    for (int s = 0; s < n; ++s) {
        if (d[s] != 0) continue;
        d[s] = 1;
        std::deque<int> q{s};
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < n; ++j) {
                if (j == i || c[i][j] == 0) continue;
                mpq_class dj = d[i] * c[i][j] / c[j][i];
                if (d[j] == 0) {
                    d[j] = dj;
                    q.push_back(j);
                } else if (d[j] != dj) {
                    throw NotFiniteType("Cartan matrix is not symmetrizable");
                }
            }
        }
    }
    std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b[i][j] = d[i] * c[i][j];
    // leading principal minors positive iff every Gaussian pivot is positive
    for (int k = 0; k < n; ++k) {
        if (b[k][k] <= 0) throw NotFiniteType("symmetrized Cartan matrix is not positive definite");
        for (int i = k + 1; i < n; ++i) {
            mpq_class f = b[i][k] / b[k][k];
            for (int j = k; j < n; ++j) b[i][j] -= f * b[k][j];
        }
    }
}

int count_components(const IntMat& c) {
    int n = static_cast<int>(c.size()), comps = 0;
    std::vector<bool> seen(n, false);
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        ++comps;
        std::deque<int> q{s};
        seen[s] = true;
        while (!q.empty()) {
            int i = q.front();
            q.pop_front();
            for (int j = 0; j < n; ++j)
                if (!seen[j] && c[i][j] != 0) {
                    seen[j] = true;
                    q.push_back(j);
                }
        }
    }
    return comps;
}

}  // namespace

RootDatum RootDatum::build(const IntMat& cartan, LatticeKind kind) {
    check_cartan(cartan);
    RootDatum r;
    r.cartan_ = cartan;
    r.kind_ = kind;
    int n = r.rank();
    r.dim_ = n;
    if (kind == LatticeKind::custom) throw ShapeError("custom lattices need explicit roots and coroots");
    for (int i = 0; i < n; ++i) {
        Weight a(n, 0), ac(n, 0);
        for (int j = 0; j < n; ++j) {
            if (kind == LatticeKind::weight) {
                a[j] = cartan[i][j];
                ac[j] = (i == j);
            } else {
                a[j] = (i == j);
                ac[j] = cartan[j][i];
            }
        }
        r.simple_roots_.push_back(a);
        r.simple_coroots_.push_back(ac);
    }
    r.finish();
    return r;
}

RootDatum RootDatum::custom(const IntMat& cartan, const IntMat& roots, const IntMat& coroots) {
    check_cartan(cartan);
    int n = static_cast<int>(cartan.size());
    if (static_cast<int>(roots.size()) != n || static_cast<int>(coroots.size()) != n)
        throw ShapeError("need one root and one coroot per simple index");
    int d = n ? static_cast<int>(roots[0].size()) : 0;
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(roots[i].size()) != d || static_cast<int>(coroots[i].size()) != d)
            throw ShapeError("inconsistent lattice dimension");
    RootDatum r;
    r.cartan_ = cartan;
    r.kind_ = LatticeKind::custom;
    r.dim_ = d;
    r.simple_roots_ = roots;
    r.simple_coroots_ = coroots;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (r.pair(roots[i], coroots[j]) != cartan[i][j])
                throw ShapeError("roots and coroots do not realize the Cartan matrix");
    r.finish();
    return r;
}

void RootDatum::finish() {
    int n = rank();
    num_components_ = count_components(cartan_);
    // orbit of simple (root, coroot) pairs in simple bases
    using Pair = std::pair<Weight, Weight>;
    std::set<Pair> seen;
    std::deque<Pair> q;
    for (int i = 0; i < n; ++i) {
        Weight a(n, 0), c(n, 0);
        a[i] = c[i] = 1;
        seen.insert({a, c});
        q.push_back({a, c});
    }
    while (!q.empty()) {
        auto [a, c] = q.front();
        q.pop_front();
        for (int i = 0; i < n; ++i) {
            int pa = 0, pc = 0;
            for (int j = 0; j < n; ++j) {
                pa += a[j] * cartan_[j][i];
                pc += c[j] * cartan_[i][j];
            }
            Weight a2 = a, c2 = c;
            a2[i] -= pa;
            c2[i] -= pc;
            if (seen.insert({a2, c2}).second) q.push_back({a2, c2});
            if (seen.size() > 100000) throw NotFiniteType("root system too large");
        }
    }
    std::vector<Pair> pos;
    for (const auto& pr : seen)
        if (std::all_of(pr.first.begin(), pr.first.end(), [](int x) { return x >= 0; })) pos.push_back(pr);
    std::sort(pos.begin(), pos.end(), [](const Pair& x, const Pair& y) {
        int hx = 0, hy = 0;
        for (int v : x.first) hx += v;
        for (int v : y.first) hy += v;
        if (hx != hy) return hx < hy;
        return x.first > y.first;
    });
    pos_roots_.clear();
    pos_coroots_.clear();
    pos_root_coeffs_.clear();
    two_rho_ = Weight(dim_, 0);
    for (const auto& [a, c] : pos) {
        Weight x(dim_, 0), xc(dim_, 0);
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < dim_; ++k) {
                x[k] += a[i] * simple_roots_[i][k];
                xc[k] += c[i] * simple_coroots_[i][k];
            }
        pos_root_coeffs_.push_back(a);
        pos_roots_.push_back(x);
        pos_coroots_.push_back(xc);
        two_rho_ = add(two_rho_, x);
    }
    if (std::all_of(two_rho_.begin(), two_rho_.end(), [](int x) { return x % 2 == 0; })) {
        Weight r(two_rho_);
        for (auto& x : r) x /= 2;
        rho_ = r;
    }
}

int RootDatum::pair(const Weight& l, const Weight& coroot) const {
    int s = 0;
    for (int k = 0; k < dim_; ++k) s += l[k] * coroot[k];
    return s;
}

Weight RootDatum::reflect(const Weight& l, int i) const {
    int c = pair_simple(l, i);
    Weight r(l);
    for (int k = 0; k < dim_; ++k) r[k] -= c * simple_roots_[i][k];
    return r;
}

bool RootDatum::is_dominant(const Weight& l) const {
    for (int i = 0; i < rank(); ++i)
        if (pair_simple(l, i) < 0) return false;
    return true;
}

std::pair<std::vector<int>, Weight> RootDatum::finite_weyl_min_rep(const Weight& l) const {
    std::vector<int> word;
    Weight cur = l;
    for (;;) {
        int i = 0;
        while (i < rank() && pair_simple(cur, i) >= 0) ++i;
        if (i == rank()) break;
        cur = reflect(cur, i);
        word.insert(word.begin(), i);
    }
    return {word, cur};
}

Weight RootDatum::sigma() const {
    if (kind_ == LatticeKind::weight) return Weight(dim_, 1);
    if (rho_) return *rho_;
    throw BadSigma("no weight pairs to 1 with every simple coroot");
}

RootDatum RootDatum::dual() const {
    RootDatum r = *this;
    IntMat t(rank(), std::vector<int>(rank()));
    for (int i = 0; i < rank(); ++i)
        for (int j = 0; j < rank(); ++j) t[i][j] = cartan_[j][i];
    r.cartan_ = t;
    std::swap(r.simple_roots_, r.simple_coroots_);
    if (kind_ == LatticeKind::weight) r.kind_ = LatticeKind::root;
    else if (kind_ == LatticeKind::root) r.kind_ = LatticeKind::weight;
    r.finish();
    return r;
}

IntMat RootDatum::cartan_of_type(const std::string& name) {
    // products separated by 'x'
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x' || ch == '*') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    IntMat total;
    for (const auto& p : parts) {
        if (p.size() < 2) throw ParseError("bad Cartan type '" + name + "'");
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(p[0])));
        int n = 0;
        try {
            n = std::stoi(p.substr(1));
        } catch (...) {
            throw ParseError("bad Cartan type '" + name + "'");
        }
        if (n < 1) throw ParseError("bad rank in '" + name + "'");
        IntMat c(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) {
            c[i][i] = 2;
            if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
        }
        switch (t) {
        case 'A': break;
        case 'B':
            if (n < 2) throw ParseError("B needs rank >= 2");
            c[n - 2][n - 1] = -2;  // alpha_{n-1} long, alpha_n short
            break;
        case 'C':
            if (n < 2) throw ParseError("C needs rank >= 2");
            c[n - 1][n - 2] = -2;
            break;
        case 'D':
            if (n < 3) throw ParseError("D needs rank >= 3");
            c[n - 2][n - 1] = c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = c[n - 1][n - 3] = -1;
            break;
        case 'G':
            if (n != 2) throw ParseError("G only in rank 2");
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        case 'F':
            if (n != 4) throw ParseError("F only in rank 4");
            c[1][2] = -2;
            break;
        default: throw ParseError("unknown Cartan type '" + name + "'");
        }
        int off = static_cast<int>(total.size());
        for (auto& row : total) row.resize(off + n, 0);
        for (int i = 0; i < n; ++i) {
            std::vector<int> row(off + n, 0);
            for (int j = 0; j < n; ++j) row[off + j] = c[i][j];
            total.push_back(row);
        }
    }
    return total;
}

RootDatum RootDatum::from_type(const std::string& name, LatticeKind kind) {
    return build(cartan_of_type(name), kind);
}

}  // namespace pcanlab
