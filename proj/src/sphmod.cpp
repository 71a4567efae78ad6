#include "pcanlab/sphmod.hpp"

#include <mutex>

#include "pcanlab/errors.hpp"

namespace pcanlab {

const char* side_symbol(Side s) { return s == Side::sph ? "M" : "N"; }

namespace {

// Scalar by which a finite simple reflection acts on the induced line.
LaurentInt fold_scalar(Side side, int ul) {
    if (side == Side::sph) return LaurentInt::v(-ul);
    return LaurentInt::monomial(ul, ul % 2 ? -1 : 1);
}

}  // namespace

SphMod::SphMod(std::shared_ptr<const Hecke> H) : H_(std::move(H)) {}

ModElt SphMod::basis(Side side, const Wext& x) const {
    if (!group().coset_min(x)) throw NotMinimal(group().str(x) + " is not a minimal coset representative");
    return ModElt{side, Terms{{x, LaurentInt(1)}}};
}

ModElt SphMod::project(const Terms& h, Side side) const {
    ModElt m{side, {}};
    for (const auto& [z, c] : h) {
        int ul = 0;
        Wext x = group().min_coset_rep(z, &ul);
        add_to(m.terms, x, c * fold_scalar(side, ul));
    }
    return m;
}

ModElt SphMod::act_gen(const ModElt& m, int g) const {
    const WextGroup& G = group();
    const Wext& s = G.gens()[g];
    static const LaurentInt kq = LaurentInt::v(-1) - LaurentInt::v(1);
    const LaurentInt fold = fold_scalar(m.side, 1);
    ModElt r{m.side, {}};
    for (const auto& [x, c] : m.terms) {
        Wext xs = G.mul(x, s);
        int lx = G.length(x), lxs = G.length(xs);
        if (lxs < lx) {
            add_to(r.terms, xs, c);
            add_to(r.terms, x, c * kq);
        } else if (G.coset_min(xs)) {
            add_to(r.terms, xs, c);
        } else {
            add_to(r.terms, x, c * fold);
        }
    }
    return r;
}

ModElt SphMod::act_omega(const ModElt& m, const Wext& om) const {
    ModElt r{m.side, {}};
    for (const auto& [x, c] : m.terms) r.terms.emplace(group().mul(x, om), c);
    return r;
}

ModElt SphMod::act_std(const ModElt& m, const Wext& y) const {
    auto d = group().omega_split(y);
    ModElt r = d.omega == group().e() ? m : act_omega(m, d.omega);
    for (int g : d.word) r = act_gen(r, g);
    return r;
}

ModElt SphMod::act(const ModElt& m, const Terms& h) const {
    ModElt r{m.side, {}};
    for (const auto& [y, c] : h) add_to(r.terms, act_std(m, y).terms, c);
    return r;
}

ModElt SphMod::bar(const ModElt& m) const {
    ModElt r{m.side, {}};
    for (const auto& [x, c] : m.terms) add_to(r.terms, project(H_->bar_std(x), m.side).terms, lp_bar(c));
    return r;
}

const Terms& SphMod::canonical(const Wext& x, Side side) const {
    auto& cache = cache_[side == Side::sph ? 0 : 1];
    {
        std::shared_lock lock(mu_);
        auto it = cache.find(x);
        if (it != cache.end()) return it->second;
    }
    Terms r = compute_canonical(x, side);
    std::unique_lock lock(mu_);
    return cache.emplace(x, std::move(r)).first->second;
}

Terms SphMod::compute_canonical(const Wext& x, Side side) const {
    const WextGroup& G = group();
    if (!G.coset_min(x)) throw NotMinimal(G.str(x) + " is not a minimal coset representative");
    auto d = G.omega_split(x);
    if (d.word.empty()) return Terms{{x, LaurentInt(1)}};
    int g = d.word.back();
    Wext y = G.mul(x, G.gens()[g]);
    ModElt cy{side, canonical(y, side)};
    ModElt p = act_gen(cy, g);
    add_to(p.terms, cy.terms, LaurentInt::v(1));
    reduce_to_canonical(p.terms, x, G, [this, side](const Wext& z) -> const Terms& { return canonical(z, side); });
    return p.terms;
}

Terms SphMod::eta(const ModElt& m) const {
    if (m.side != Side::sph) throw DatumMismatch("eta is defined on the spherical module");
    return H_->mul(H_->kl(group().w0()), m.terms);
}

ModElt SphMod::phi(const ModElt& m) const { return phi(m, group().datum().sigma()); }

ModElt SphMod::phi(const ModElt& m, const Weight& sigma) const {
    const RootDatum& rd = group().datum();
    if (static_cast<int>(sigma.size()) != rd.dim()) throw BadSigma("wrong rank");
    for (int i = 0; i < rd.rank(); ++i)
        if (rd.pair_simple(sigma, i) != 1) throw BadSigma(weight_str(sigma) + " does not pair to 1 with every simple coroot");
    if (m.side != Side::sph) throw DatumMismatch("phi is defined on the spherical module");
    return act(canonical_elt(group().translation(sigma), Side::asph), m.terms);
}

ModElt SphMod::iota(const ModElt& m) const {
    return ModElt{m.side == Side::sph ? Side::asph : Side::sph, terms_iota(m.terms)};
}

}  // namespace pcanlab
