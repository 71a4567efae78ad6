#include "pcanlab/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pcanlab/errors.hpp"

namespace pcanlab {

namespace {

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    size_t n = a.size();
    IntMat c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (a[i][k] == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

IntMat reflection_matrix(const Weight& root, const Weight& coroot) {
    size_t n = root.size();
    IntMat m(n, std::vector<int>(n, 0));
    for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < n; ++l) m[k][l] = (k == l) - root[k] * coroot[l];
    return m;
}

constexpr int kTableLimit = 1200;

}  // namespace

FiniteWeyl::FiniteWeyl(const RootDatum& rd) : rank_(rd.rank()), dim_(rd.dim()) {
    IntMat id(dim_, std::vector<int>(dim_, 0));
    for (int k = 0; k < dim_; ++k) id[k][k] = 1;
    std::vector<IntMat> gm;
    for (int i = 0; i < rank_; ++i) gm.push_back(reflection_matrix(rd.simple_roots()[i], rd.simple_coroots()[i]));

    mats_.push_back(id);
    index_[id] = 0;
    words_.push_back({});
    len_.push_back(0);
    for (size_t a = 0; a < mats_.size(); ++a) {
        for (int i = 0; i < rank_; ++i) {
            IntMat b = mat_mul(mats_[a], gm[i]);
            if (index_.count(b)) continue;
            if (mats_.size() > 200000) throw NotFiniteType("Weyl group too large");
            index_[b] = static_cast<int>(mats_.size());
            mats_.push_back(b);
            auto w = words_[a];
            w.push_back(i);
            words_.push_back(w);
            len_.push_back(len_[a] + 1);
        }
    }
    for (int i = 0; i < rank_; ++i) gens_.push_back(index_.at(gm[i]));
    w0_ = static_cast<int>(std::max_element(len_.begin(), len_.end()) - len_.begin());

    if (size() <= kTableLimit) {
        table_.assign(size(), std::vector<int>(size()));
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b) table_[a][b] = index_.at(mat_mul(mats_[a], mats_[b]));
    }
    inv_.resize(size());
    for (int a = 0; a < size(); ++a) {
        auto w = words_[a];
        std::reverse(w.begin(), w.end());
        inv_[a] = from_word(w);
    }

    std::map<Weight, int> roots;
    const auto& pr = rd.pos_roots();
    for (size_t r = 0; r < pr.size(); ++r) {
        if (!roots.emplace(pr[r], static_cast<int>(r)).second) throw ShapeError("roots collide in X");
        if (!roots.emplace(scale(pr[r], -1), -static_cast<int>(r) - 1).second) throw ShapeError("roots collide in X");
    }
    root_image_.assign(size(), std::vector<int>(pr.size()));
    for (int a = 0; a < size(); ++a)
        for (size_t r = 0; r < pr.size(); ++r) root_image_[a][r] = roots.at(act(a, pr[r]));
}

int FiniteWeyl::mul(int a, int b) const {
    if (!table_.empty()) return table_[a][b];
    return index_.at(mat_mul(mats_[a], mats_[b]));
}

int FiniteWeyl::from_word(const std::vector<int>& w) const {
    int a = 0;
    for (int i : w) a = mul(a, gens_.at(i));
    return a;
}

Weight FiniteWeyl::act(int a, const Weight& l) const {
    Weight r(dim_, 0);
    const auto& m = mats_[a];
    for (int k = 0; k < dim_; ++k)
        for (int j = 0; j < dim_; ++j) r[k] += m[k][j] * l[j];
    return r;
}

namespace {

RootDatum side_datum(RootDatum rd, PairingSide side) {
    if (rd.dim() > kMaxRank) throw ShapeError("lattice rank exceeds " + std::to_string(kMaxRank));
    return side == PairingSide::coroots ? rd : rd.dual();
}

}  // namespace

WextGroup::WextGroup(RootDatum rd, PairingSide side)
    : rd_(side_datum(std::move(rd), side)), side_(side), fin_(rd_) {
    find_generators();
    find_omegas();
}

std::shared_ptr<WextGroup> WextGroup::from_tag(const std::string& tag) {
    auto dash = tag.find('-');
    std::string type = tag.substr(0, dash);
    std::string rest = dash == std::string::npos ? "" : tag.substr(dash + 1);
    LatticeKind kind;
    if (rest == "affine-ext" || rest == "finite" || rest.empty()) kind = LatticeKind::weight;
    else if (rest == "affine") kind = LatticeKind::root;
    else throw ParseError("unknown group tag '" + tag + "'");
    auto g = std::make_shared<WextGroup>(RootDatum::from_type(type, kind));
    g->set_tag(tag);
    return g;
}

Wext WextGroup::make(int w, const Weight& t) const {
    if (static_cast<int>(t.size()) != dim()) throw DatumMismatch("weight has wrong rank");
    Wext x;
    x.w = w;
    for (int k = 0; k < dim(); ++k) x.t[k] = t[k];
    return x;
}

Weight WextGroup::trans(const Wext& x) const { return Weight(x.t.begin(), x.t.begin() + dim()); }

Wext WextGroup::mul(const Wext& x, const Wext& y) const {
    Weight l = fin_.act(fin_.inv(y.w), trans(x));
    Wext r;
    r.w = fin_.mul(x.w, y.w);
    for (int k = 0; k < dim(); ++k) r.t[k] = l[k] + y.t[k];
    return r;
}

Wext WextGroup::inv(const Wext& x) const {
    Weight l = fin_.act(x.w, trans(x));
    Wext r;
    r.w = fin_.inv(x.w);
    for (int k = 0; k < dim(); ++k) r.t[k] = -l[k];
    return r;
}

int WextGroup::length(const Wext& x) const {
    const auto& pc = rd_.pos_coroots();
    int total = 0;
    for (size_t r = 0; r < pc.size(); ++r) {
        int c = 0;
        for (int k = 0; k < dim(); ++k) c += x.t[k] * pc[r][k];
        total += fin_.sends_positive(x.w, static_cast<int>(r)) ? std::abs(c) : std::abs(1 + c);
    }
    return total;
}

void WextGroup::find_generators() {
    gens_.clear();
    std::vector<Wext> affine;
    const auto& pr = rd_.pos_roots();
    std::set<Wext> seen;
    for (size_t r = 0; r < pr.size(); ++r) {
        IntMat m = reflection_matrix(pr[r], rd_.pos_coroots()[r]);
        // locate s_beta by its action on a generic weight
        Weight probe(dim());
        for (int k = 0; k < dim(); ++k) probe[k] = 1 + 7 * k * k + 3 * k;
        Weight img(dim(), 0);
        for (int k = 0; k < dim(); ++k)
            for (int j = 0; j < dim(); ++j) img[k] += m[k][j] * probe[j];
        int sb = -1;
        for (int a = 0; a < fin_.size() && sb < 0; ++a)
            if (fin_.length(a) % 2 == 1 && fin_.act(a, probe) == img) sb = a;
        if (sb < 0) throw std::logic_error("reflection not found in W");
        for (int mult : {-1, 1, -2, 2}) {
            Wext x = make(sb, scale(pr[r], mult));
            if (length(x) == 1 && seen.insert(x).second) affine.push_back(x);
        }
    }
    if (static_cast<int>(affine.size()) != rd_.num_components())
        throw std::logic_error("unexpected number of affine simple reflections");
    gens_.push_back(affine[0]);
    for (int i = 0; i < rd_.rank(); ++i) gens_.push_back(finite(fin_.gen(i)));
    for (size_t k = 1; k < affine.size(); ++k) gens_.push_back(affine[k]);
}

OmegaDecomposition WextGroup::omega_split(const Wext& x) const {
    OmegaDecomposition d;
    Wext y = x;
    int l = length(y);
    while (l > 0) {
        bool found = false;
        for (int g = 0; g < num_gens(); ++g) {
            Wext z = mul(y, gens_[g]);
            if (length(z) < l) {
                y = z;
                --l;
                d.word.push_back(g);
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("no descent for element of positive length");
    }
    std::reverse(d.word.begin(), d.word.end());
    d.omega = y;
    return d;
}

Wext WextGroup::from_word(const Wext& omega, const std::vector<int>& word) const {
    Wext x = omega;
    for (int g : word) {
        if (g < 0 || g >= num_gens()) throw ParseError("generator index out of range");
        x = mul(x, gens_[g]);
    }
    return x;
}

void WextGroup::find_omegas() {
    std::vector<Wext> seeds;
    for (int k = 0; k < dim(); ++k) {
        Weight t(dim(), 0);
        t[k] = 1;
        Wext o = omega_split(translation(t)).omega;
        seeds.push_back(o);
        seeds.push_back(inv(o));
    }
    omegas_ = {e()};
    std::set<Wext> seen{e()};
    for (size_t i = 0; i < omegas_.size(); ++i)
        for (const auto& s : seeds) {
            Wext z = mul(omegas_[i], s);
            if (seen.insert(z).second) {
                if (omegas_.size() > 10000) throw ShapeError("length-zero subgroup is not finite");
                omegas_.push_back(z);
            }
        }
}

int WextGroup::omega_index(const Wext& omega) const {
    for (size_t i = 0; i < omegas_.size(); ++i)
        if (omegas_[i] == omega) return static_cast<int>(i);
    throw ParseError("element is not of length zero");
}

bool WextGroup::bruhat_leq(const Wext& x0, const Wext& y0) const {
    Wext x = x0, y = y0;
    for (;;) {
        int lx = length(x), ly = length(y);
        if (lx > ly) return false;
        if (ly == 0) return x == y;
        int g = 0;
        while (!right_descent(y, g)) ++g;
        Wext xs = mul(x, gens_[g]);
        if (length(xs) < lx) x = xs;
        y = mul(y, gens_[g]);
    }
}

bool WextGroup::coset_min(const Wext& x) const {
    int l = length(x);
    for (int i = 0; i < rd_.rank(); ++i)
        if (length(mul(gens_[finite_gen(i)], x)) < l) return false;
    return true;
}

Wext WextGroup::min_coset_rep(const Wext& x0, int* ul) const {
    Wext x = x0;
    int l = length(x), count = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rd_.rank(); ++i) {
            Wext z = mul(gens_[finite_gen(i)], x);
            if (length(z) < l) {
                x = z;
                --l;
                ++count;
                changed = true;
                break;
            }
        }
    }
    if (ul) *ul = count;
    return x;
}

Wext WextGroup::w_lambda(const Weight& l) const {
    Wext best = make(0, l);
    int bl = length(best);
    for (int u = 1; u < fin_.size(); ++u) {
        Wext x = make(u, l);
        int xl = length(x);
        if (xl < bl) {
            best = x;
            bl = xl;
        }
    }
    return best;
}

Wext WextGroup::x_mu(const Weight& mu) const {
    if (!rd_.is_dominant(mu)) throw NotDominant("x_mu needs a dominant weight, got " + weight_str(mu));
    std::set<Weight> orbit;
    for (int a = 0; a < fin_.size(); ++a) orbit.insert(fin_.act(a, mu));
    Wext best;
    int bl = -1, ties = 0;
    for (const auto& nu : orbit)
        for (int u = 0; u < fin_.size(); ++u) {
            Wext x = make(u, nu);
            int xl = length(x);
            if (xl > bl) {
                best = x;
                bl = xl;
                ties = 0;
            } else if (xl == bl) {
                ++ties;
            }
        }
    if (ties) throw std::logic_error("longest double coset element is not unique");
    return best;
}

Weight WextGroup::dot_p(const Wext& x, const Weight& mu, int p) const {
    const Weight& tr = rd_.two_rho();
    Weight l = trans(x);
    Weight a(dim());
    for (int k = 0; k < dim(); ++k) a[k] = 2 * mu[k] + 2 * p * l[k] + tr[k];
    Weight b = fin_.act(x.w, a);
    for (int k = 0; k < dim(); ++k) b[k] = (b[k] - tr[k]) / 2;
    return b;
}

bool WextGroup::is_restricted(const Wext& x, int p) const {
    if (!coset_min(x)) throw NotMinimal(str(x) + " is not a minimal coset representative");
    Weight nu = dot_p(x, rd_.zero(), p);
    for (int i = 0; i < rd_.rank(); ++i) {
        int c = rd_.pair_simple(nu, i);
        if (c < 0 || c >= p) return false;
    }
    return true;
}

std::vector<Wext> WextGroup::elements_up_to(int L) const {
    std::vector<Wext> level{e()}, all{e()};
    for (int l = 1; l <= L; ++l) {
        std::set<Wext> next;
        for (const auto& y : level)
            for (int g = 0; g < num_gens(); ++g) {
                Wext z = mul(y, gens_[g]);
                if (length(z) == l) next.insert(z);
            }
        level.assign(next.begin(), next.end());
        all.insert(all.end(), level.begin(), level.end());
    }
    std::vector<Wext> out;
    for (const auto& o : omegas_)
        for (const auto& y : all) out.push_back(mul(o, y));
    std::sort(out.begin(), out.end(), [this](const Wext& a, const Wext& b) { return canonical_less(a, b); });
    return out;
}

bool WextGroup::canonical_less(const Wext& a, const Wext& b) const {
    int la = length(a), lb = length(b);
    if (la != lb) return la < lb;
    auto da = omega_split(a), db = omega_split(b);
    int oa = omega_index(da.omega), ob = omega_index(db.omega);
    if (oa != ob) return oa < ob;
    return da.word < db.word;
}

std::string WextGroup::str(const Wext& x) const {
    auto d = omega_split(x);
    std::string s;
    int oi = omega_index(d.omega);
    if (oi != 0) s = "o" + std::to_string(oi);
    for (int g : d.word) {
        if (!s.empty()) s += ".";
        s += "s" + std::to_string(g);
    }
    return s.empty() ? "e" : s;
}

Wext WextGroup::parse(const std::string& text) const {
    std::vector<std::string> factors;
    std::string cur;
    int depth = 0;
    for (char c : text) {
        if (c == ' ') continue;
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '*' || c == '.')) {
            factors.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    factors.push_back(cur);
    auto args = [&](const std::string& f, size_t open) {
        if (f.back() != ')') throw ParseError("missing ')' in '" + f + "'");
        Weight w;
        std::stringstream ss(f.substr(open + 1, f.size() - open - 2));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                size_t pos = 0;
                w.push_back(std::stoi(item, &pos));
                if (pos != item.size()) throw 0;
            } catch (...) {
                throw ParseError("bad integer '" + item + "'");
            }
        }
        if (static_cast<int>(w.size()) != dim()) throw ParseError("weight '" + f + "' has the wrong rank");
        return w;
    };
    auto index = [&](const std::string& f) {
        try {
            size_t pos = 0;
            int i = std::stoi(f.substr(1), &pos);
            if (pos + 1 != f.size()) throw 0;
            return i;
        } catch (...) {
            throw ParseError("bad factor '" + f + "'");
        }
    };
    Wext x = e();
    for (const auto& f : factors) {
        if (f.empty()) throw ParseError("empty factor in '" + text + "'");
        Wext y;
        if (f == "e") y = e();
        else if (f == "w0") y = w0();
        else if (f == "t_sigma") y = t_sigma();
        else if (f.rfind("w_lambda(", 0) == 0) y = w_lambda(args(f, 8));
        else if (f.rfind("x_mu(", 0) == 0) y = x_mu(args(f, 4));
        else if (f.rfind("t(", 0) == 0) y = translation(args(f, 1));
        else if (f[0] == 'o') {
            int i = index(f);
            if (i < 0 || i >= static_cast<int>(omegas_.size())) throw ParseError("no Omega element " + f);
            y = omegas_[i];
        } else if (f[0] == 's') {
            int i = index(f);
            if (i < 0 || i >= num_gens()) throw ParseError("no generator " + f);
            y = gens_[i];
        } else {
            throw ParseError("bad factor '" + f + "'");
        }
        x = mul(x, y);
    }
    return x;
}

}  // namespace pcanlab
