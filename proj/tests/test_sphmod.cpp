#include "doctest.h"

#include <random>

#include "pcanlab/errors.hpp"
#include "pcanlab/sphmod.hpp"

using namespace pcanlab;

namespace {

LaurentInt V(int e) { return LaurentInt::v(e); }

struct Fixture {
    std::shared_ptr<WextGroup> G;
    std::shared_ptr<Hecke> H;
    SphMod S;
    explicit Fixture(const char* tag)
        : G(WextGroup::from_tag(tag)), H(std::make_shared<Hecke>(G)), S(H) {}
    std::vector<Wext> minimal(int L) const {
        std::vector<Wext> r;
        for (const auto& x : G->elements_up_to(L))
            if (G->coset_min(x)) r.push_back(x);
        return r;
    }
};

}  // namespace

TEST_CASE("projection") {
    Fixture f("A1-affine-ext");
    Wext s = f.G->gens()[1], tw = f.G->translation({1});
    CHECK(f.S.project(f.H->unit(), Side::sph) == f.S.basis(Side::sph, f.G->e()));
    CHECK(f.S.project(f.H->std(s), Side::sph).terms == Terms{{f.G->e(), V(-1)}});
    CHECK(f.S.project(f.H->std(s), Side::asph).terms == Terms{{f.G->e(), -V(1)}});
    CHECK(f.S.project(f.H->std(f.G->mul(s, tw)), Side::sph).terms == Terms{{tw, V(-1)}});
    CHECK_THROWS_AS(f.S.basis(Side::sph, s), NotMinimal);
}

TEST_CASE("module action") {
    Fixture f("A1-affine-ext");
    int gs = 1;
    CHECK(f.S.act(f.S.basis(Side::asph, f.G->e()), f.H->kl(f.G->gens()[gs])).terms.empty());
    CHECK(f.S.act(f.S.basis(Side::sph, f.G->e()), f.H->kl(f.G->gens()[gs])).terms ==
          Terms{{f.G->e(), V(1) + V(-1)}});
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
        Fixture g(tag);
        auto all = g.G->elements_up_to(tag[1] == '1' ? 6 : 4);
        for (Side side : {Side::sph, Side::asph})
            for (const auto& x : g.minimal(tag[1] == '1' ? 6 : 3))
                for (const auto& y : all) {
                    ModElt lhs = g.S.act_std(g.S.basis(side, x), y);
                    ModElt rhs = g.S.project(g.H->mul(g.H->std(x), g.H->std(y)), side);
                    CHECK(lhs == rhs);
                }
    }
}

TEST_CASE("canonical bases") {
    Fixture f("A1-affine-ext");
    Wext s0 = f.G->gens()[0], s1 = f.G->gens()[1];
    Wext s01 = f.G->mul(s0, s1), tw = f.G->translation({1}), om = f.G->omegas()[1];
    CHECK(f.S.canonical(f.G->e(), Side::asph) == Terms{{f.G->e(), LaurentInt(1)}});
    CHECK(f.S.canonical(s01, Side::asph) == Terms{{s01, LaurentInt(1)}, {s0, V(1)}});
    CHECK(f.S.canonical(tw, Side::sph) == Terms{{tw, LaurentInt(1)}, {om, V(1)}});
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
        Fixture g(tag);
        for (Side side : {Side::sph, Side::asph})
            for (const auto& x : g.minimal(tag[1] == '1' ? 8 : 5)) {
                ModElt c = g.S.canonical_elt(x, side);
                CHECK(g.S.bar(c) == c);
                CHECK(c.terms.at(x) == LaurentInt(1));
                for (const auto& [y, h] : c.terms) {
                    if (y == x) continue;
                    CHECK(h.min_exp() > 0);
                    CHECK(g.G->bruhat_leq(y, x));
                }
            }
    }
}

TEST_CASE("xi, eta and the p=0 cross-checks") {
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
        Fixture g(tag);
        int L = tag[1] == '1' ? 8 : 5;
        for (const auto& w : g.G->elements_up_to(L)) {
            ModElt xi = g.S.project(g.H->kl(w), Side::asph);
            if (g.G->coset_min(w)) {
                CHECK(xi == g.S.canonical_elt(w, Side::asph));
                CHECK(g.S.eta(g.S.canonical_elt(w, Side::sph)) == g.H->kl(g.G->mul(g.G->w0(), w)));
            } else {
                CHECK(xi.terms.empty());
            }
        }
    }
}

TEST_CASE("eta and phi on small inputs") {
    Fixture f("A1-affine-ext");
    Wext s = f.G->gens()[1];
    ModElt me = f.S.basis(Side::sph, f.G->e());
    CHECK(f.S.eta(me) == f.H->kl(f.G->w0()));
    CHECK(f.S.eta(f.S.act_std(me, s)) == scaled(f.H->kl(f.G->w0()), V(-1)));
    CHECK(f.S.phi(me) == f.S.canonical_elt(f.G->t_sigma(), Side::asph));
    CHECK_THROWS_AS(f.S.phi(me, {2}), BadSigma);
    for (const auto& w : f.minimal(4))
        CHECK(f.S.phi(f.S.canonical_elt(w, Side::sph)) ==
              f.S.canonical_elt(f.G->mul(f.G->t_sigma(), w), Side::asph));
}

TEST_CASE("property: iota intertwines the two modules") {
    Fixture f("A1-affine-ext");
    std::mt19937 rng(5);
    auto mins = f.minimal(6);
    auto all = f.G->elements_up_to(5);
    std::uniform_int_distribution<size_t> pm(0, mins.size() - 1), pa(0, all.size() - 1);
    std::uniform_int_distribution<int> e(-2, 2), c(-2, 2);
    for (int it = 0; it < 200; ++it) {
        ModElt m{Side::sph, {}};
        Terms h;
        for (int k = 0; k < 2; ++k) {
            add_to(m.terms, mins[pm(rng)], LaurentInt::monomial(e(rng), c(rng)));
            add_to(h, all[pa(rng)], LaurentInt::monomial(e(rng), c(rng)));
        }
        CHECK(f.S.iota(f.S.act(m, h)) == f.S.act(f.S.iota(m), f.H->iota(h)));
        CHECK(f.S.phi(f.S.act(m, h)) == f.S.act(f.S.phi(m), h));
    }
    CHECK(f.S.iota(f.S.basis(Side::sph, f.G->e())) == f.S.basis(Side::asph, f.G->e()));
    Wext tw = f.G->translation({1});
    CHECK(f.S.iota(ModElt{Side::sph, {{tw, V(1)}}}) == ModElt{Side::asph, {{tw, -V(-1)}}});
}

TEST_CASE("spherical convolution identity") {
    Fixture f("A1-affine-ext");
    ModElt me = f.S.basis(Side::sph, f.G->e());
    for (int mu = 0; mu <= 4; ++mu) {
        std::vector<std::pair<Weight, long>> ch;
        for (int k = -mu; k <= mu; k += 2) ch.push_back({{k}, 1});
        ModElt lhs = f.S.act(me, f.H->theta_char(ch));
        Wext top = f.G->mul(f.G->w0(), f.G->x_mu({mu}));
        CHECK(lhs == f.S.canonical_elt(top, Side::sph));
    }
    CHECK(f.S.act(me, f.H->theta_char({{{1}, 1}, {{-1}, 1}})).terms ==
          Terms{{f.G->translation({1}), LaurentInt(1)}, {f.G->omegas()[1], V(1)}});
}
