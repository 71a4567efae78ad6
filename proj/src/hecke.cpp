#include "pcanlab/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

#include "pcanlab/errors.hpp"

namespace pcanlab {

void add_to(Terms& t, const Wext& key, const LaurentInt& c) {
    if (c.is_zero()) return;
    auto it = t.find(key);
    if (it == t.end()) {
        t.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

void add_to(Terms& t, const Terms& o, const LaurentInt& c) {
    if (c == LaurentInt(1)) {
        for (const auto& [k, x] : o) add_to(t, k, x);
    } else {
        for (const auto& [k, x] : o) add_to(t, k, x * c);
    }
}

Terms scaled(const Terms& t, const LaurentInt& c) {
    Terms r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : t) r.emplace(k, x * c);
    return r;
}

Terms terms_sub(const Terms& a, const Terms& b) {
    Terms r = a;
    add_to(r, b, LaurentInt(-1));
    return r;
}

Terms terms_iota(const Terms& t) {
    Terms r;
    for (const auto& [k, x] : t) r.emplace(k, lp_iota(x));
    return r;
}

Terms terms_bar_coeffs(const Terms& t) {
    Terms r;
    for (const auto& [k, x] : t) r.emplace(k, lp_bar(x));
    return r;
}

std::vector<std::pair<Wext, LaurentInt>> sorted_terms(const WextGroup& G, const Terms& t) {
    std::vector<std::pair<Wext, LaurentInt>> v(t.begin(), t.end());
    std::sort(v.begin(), v.end(), [&G](const auto& a, const auto& b) { return G.canonical_less(a.first, b.first); });
    return v;
}

std::string terms_str(const WextGroup& G, const Terms& t, const std::string& sym) {
    if (t.empty()) return "0";
    std::string s;
    auto v = sorted_terms(G, t);
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        if (!s.empty()) s += " + ";
        const auto& c = it->second;
        if (c != LaurentInt(1)) {
            if (c.terms().size() == 1) s += c.str() + "*";
            else s += "(" + c.str() + ")*";
        }
        s += sym + "[" + G.str(it->first) + "]";
    }
    return s;
}

void reduce_to_canonical(Terms& p, const Wext& top, const WextGroup& G,
                         const std::function<const Terms&(const Wext&)>& basis) {
    // worklist ordered by decreasing length; basis(z) only touches z and shorter keys
    std::set<std::pair<int, Wext>> work;
    for (const auto& [k, c] : p)
        if (k != top) work.insert({-G.length(k), k});
    while (!work.empty()) {
        Wext z = work.begin()->second;
        work.erase(work.begin());
        auto it = p.find(z);
        if (it == p.end()) continue;
        const LaurentInt& c = it->second;
        if (c.min_exp() > 0) continue;
        LaurentInt neg = lp_truncate(c, c.min_exp(), -1);
        LaurentInt q = lp_truncate(c, 0, 0) + neg + lp_bar(neg);
        const Terms& b = basis(z);
        for (const auto& [k, x] : b) {
            add_to(p, k, -(x * q));
            if (k != z) work.insert({-G.length(k), k});
        }
    }
}

Hecke::Hecke(std::shared_ptr<const WextGroup> G) : G_(std::move(G)) {}

Terms Hecke::right_gen(const Terms& a, int g) const {
    const Wext& s = G_->gens()[g];
    static const LaurentInt kq = LaurentInt::v(-1) - LaurentInt::v(1);
    Terms r;
    for (const auto& [z, c] : a) {
        Wext zs = G_->mul(z, s);
        add_to(r, zs, c);
        if (G_->length(zs) < G_->length(z)) add_to(r, z, c * kq);
    }
    return r;
}

Terms Hecke::left_gen(int g, const Terms& a) const {
    const Wext& s = G_->gens()[g];
    static const LaurentInt kq = LaurentInt::v(-1) - LaurentInt::v(1);
    Terms r;
    for (const auto& [z, c] : a) {
        Wext sz = G_->mul(s, z);
        add_to(r, sz, c);
        if (G_->length(sz) < G_->length(z)) add_to(r, z, c * kq);
    }
    return r;
}

Terms Hecke::right_omega(const Terms& a, const Wext& om) const {
    Terms r;
    for (const auto& [z, c] : a) r.emplace(G_->mul(z, om), c);
    return r;
}

Terms Hecke::left_omega(const Wext& om, const Terms& a) const {
    Terms r;
    for (const auto& [z, c] : a) r.emplace(G_->mul(om, z), c);
    return r;
}

Terms Hecke::right_std(const Terms& a, const Wext& y) const {
    auto d = G_->omega_split(y);
    Terms r = d.omega == G_->e() ? a : right_omega(a, d.omega);
    for (int g : d.word) r = right_gen(r, g);
    return r;
}

Terms Hecke::left_std(const Wext& x, const Terms& a) const {
    auto d = G_->omega_split(x);
    Terms r = a;
    for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) r = left_gen(*it, r);
    return d.omega == G_->e() ? r : left_omega(d.omega, r);
}

Terms Hecke::mul(const Terms& a, const Terms& b) const {
    long cost_right = 0, cost_left = 0;
    for (const auto& kv : b) cost_right += G_->length(kv.first);
    for (const auto& kv : a) cost_left += G_->length(kv.first);
    cost_right *= static_cast<long>(a.size());
    cost_left *= static_cast<long>(b.size());
    Terms r;
    if (cost_right <= cost_left) {
        for (const auto& [y, c] : b) add_to(r, right_std(a, y), c);
    } else {
        for (const auto& [x, c] : a) add_to(r, left_std(x, b), c);
    }
    return r;
}

const Terms& Hecke::bar_std(const Wext& w) const {
    {
        std::shared_lock lock(mu_);
        auto it = bar_cache_.find(w);
        if (it != bar_cache_.end()) return it->second;
    }
    auto d = G_->omega_split(w);
    static const LaurentInt kd = LaurentInt::v(1) - LaurentInt::v(-1);
    Terms r = std(d.omega);
    for (int g : d.word) {
        Terms x = right_gen(r, g);
        add_to(x, r, kd);
        r = std::move(x);
    }
    std::unique_lock lock(mu_);
    return bar_cache_.emplace(w, std::move(r)).first->second;
}

Terms Hecke::bar(const Terms& a) const {
    Terms r;
    for (const auto& [y, c] : a) add_to(r, bar_std(y), lp_bar(c));
    return r;
}

Terms Hecke::std_inverse(const Wext& w) const {
    auto d = G_->omega_split(w);
    static const LaurentInt kd = LaurentInt::v(1) - LaurentInt::v(-1);
    Terms r = unit();
    for (auto it = d.word.rbegin(); it != d.word.rend(); ++it) {
        Terms x = right_gen(r, *it);
        add_to(x, r, kd);
        r = std::move(x);
    }
    return right_omega(r, G_->inv(d.omega));
}

const Terms& Hecke::kl(const Wext& w) const {
    {
        std::shared_lock lock(mu_);
        auto it = kl_cache_.find(w);
        if (it != kl_cache_.end()) return it->second;
    }
    Terms r = compute_kl(w);
    std::unique_lock lock(mu_);
    return kl_cache_.emplace(w, std::move(r)).first->second;
}

Terms Hecke::compute_kl(const Wext& w) const {
    auto d = G_->omega_split(w);
    if (d.word.empty()) return std(w);
    if (d.omega != G_->e()) return left_omega(d.omega, kl(G_->from_word(G_->e(), d.word)));
    int g = d.word.back();
    Wext y = G_->mul(w, G_->gens()[g]);
    const Terms& cy = kl(y);
    Terms p = right_gen(cy, g);
    add_to(p, cy, LaurentInt::v(1));
    reduce_to_canonical(p, w, *G_, [this](const Wext& z) -> const Terms& { return kl(z); });
    return p;
}

LaurentInt Hecke::kl_coeff(const Wext& x, const Wext& w) const {
    const Terms& c = kl(w);
    auto it = c.find(x);
    return it == c.end() ? LaurentInt() : it->second;
}

Terms Hecke::bernstein_from(const Weight& mu, const Weight& nu) const {
    return mul(std(G_->translation(mu)), std_inverse(G_->translation(nu)));
}

Terms Hecke::bernstein(const Weight& l) const {
    {
        std::shared_lock lock(mu_);
        auto it = theta_cache_.find(l);
        if (it != theta_cache_.end()) return it->second;
    }
    const RootDatum& rd = G_->datum();
    Weight mu(l.size()), nu(l.size());
    if (rd.kind() == LatticeKind::weight) {
        for (size_t k = 0; k < l.size(); ++k) {
            mu[k] = std::max(l[k], 0);
            nu[k] = std::max(-l[k], 0);
        }
    } else {
        nu = rd.zero();
        mu = l;
        while (!rd.is_dominant(mu)) {
            nu = add(nu, rd.two_rho());
            mu = add(mu, rd.two_rho());
        }
    }
    Terms r = bernstein_from(mu, nu);
    const Weight& shift = rd.rho() ? *rd.rho() : rd.two_rho();
    if (bernstein_from(add(mu, shift), add(nu, shift)) != r)
        throw std::logic_error("Bernstein element depends on the decomposition of " + weight_str(l));
    std::unique_lock lock(mu_);
    theta_cache_.emplace(l, r);
    return r;
}

Terms Hecke::theta_char(const std::vector<std::pair<Weight, long>>& weights) const {
    Terms r;
    for (const auto& [l, m] : weights) add_to(r, bernstein(l), LaurentInt(m));
    return r;
}

bool Hecke::is_central(const Terms& h) const {
    for (int g = 0; g < G_->num_gens(); ++g)
        if (right_gen(h, g) != left_gen(g, h)) return false;
    for (const auto& om : G_->omegas())
        if (right_omega(h, om) != left_omega(om, h)) return false;
    return true;
}

}  // namespace pcanlab
