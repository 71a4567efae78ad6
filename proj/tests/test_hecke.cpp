#include "doctest.h"

#include <random>

#include "pcanlab/hecke.hpp"
#include "support/kl_oracle.hpp"

using namespace pcanlab;

namespace {

LaurentInt V(int e) { return LaurentInt::v(e); }

Terms random_elt(const Hecke& H, const std::vector<Wext>& pool, std::mt19937& rng) {
    std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> e(-2, 2), c(-3, 3), n(1, 3);
    Terms t;
    for (int k = n(rng); k > 0; --k) add_to(t, pool[pick(rng)], LaurentInt::monomial(e(rng), c(rng)));
    (void)H;
    return t;
}

}  // namespace

TEST_CASE("quadratic relation and Omega") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Hecke H(G);
    Wext s = G->gens()[1];
    Terms hs = H.std(s);
    Terms expect{{s, V(-1) - V(1)}, {G->e(), LaurentInt(1)}};
    CHECK(H.mul(hs, hs) == expect);
    Wext x = G->mul(G->gens()[0], s);
    CHECK(H.mul(H.std(x), H.unit()) == H.std(x));
    Wext om = G->omegas()[1];
    CHECK(H.mul(H.std(om), H.std(x)) == H.std(G->mul(om, x)));
}

TEST_CASE("bar involution and inverses") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Hecke H(G);
    Wext s = G->gens()[1], om = G->omegas()[1];
    CHECK(H.bar(H.unit()) == H.unit());
    Terms bs{{s, LaurentInt(1)}, {G->e(), V(1) - V(-1)}};
    CHECK(H.bar(H.std(s)) == bs);
    CHECK(H.std_inverse(s) == bs);
    CHECK(H.std_inverse(G->e()) == H.unit());
    CHECK(H.std_inverse(om) == H.std(G->inv(om)));
    for (const auto& w : G->elements_up_to(5)) {
        CHECK(H.mul(H.std(w), H.std_inverse(w)) == H.unit());
        CHECK(H.std_inverse(w) == H.bar(H.std(G->inv(w))));
    }
}

TEST_CASE("KL basis in affine A1") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Hecke H(G);
    Wext s0 = G->gens()[0], s1 = G->gens()[1];
    CHECK(H.kl(G->e()) == H.unit());
    Terms cs{{s1, LaurentInt(1)}, {G->e(), V(1)}};
    CHECK(H.kl(s1) == cs);
    Wext s01 = G->mul(s0, s1);
    Terms c01{{s01, LaurentInt(1)}, {s0, V(1)}, {s1, V(1)}, {G->e(), V(2)}};
    CHECK(H.kl(s01) == c01);
    auto pool = G->elements_up_to(7);
    for (const auto& w : pool) {
        const Terms& c = H.kl(w);
        CHECK(H.bar(c) == c);
        CHECK(c.at(w) == LaurentInt(1));
        for (const auto& [x, h] : c)
            if (x != w) CHECK(h.min_exp() > 0);
        auto d = G->omega_split(w);
        CHECK(c == H.left_omega(d.omega, H.kl(G->from_word(G->e(), d.word))));
        if (G->length(w) <= 6) CHECK(c == oracle::kl_by_bar_solve(H, w, pool));
    }
}

TEST_CASE("KL basis in finite A2 and A3") {
    auto G = WextGroup::from_tag("A2-finite");
    Hecke H(G);
    std::vector<Wext> W;
    for (int a = 0; a < G->fin().size(); ++a) W.push_back(G->finite(a));
    for (const auto& y : W)
        for (const auto& x : W)
            if (G->bruhat_leq(x, y)) CHECK(H.kl_coeff(x, y) == V(G->length(y) - G->length(x)));
    auto G3 = WextGroup::from_tag("A3-finite");
    Hecke H3(G3);
    int nontrivial = 0;
    std::vector<Wext> W3;
    for (int a = 0; a < G3->fin().size(); ++a) W3.push_back(G3->finite(a));
    for (const auto& y : W3) {
        CHECK(H3.kl(y) == oracle::kl_by_bar_solve(H3, y, W3));
        for (const auto& [x, h] : H3.kl(y)) nontrivial += h.terms().size() > 1;
    }
    CHECK(nontrivial > 0);
}

TEST_CASE("iota") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Hecke H(G);
    Wext s = G->gens()[1];
    CHECK(H.iota(Terms{{s, V(1)}}) == Terms{{s, -V(-1)}});
    CHECK(H.iota(H.std(s)) == H.std(s));
    CHECK(H.iota(H.kl(s)) == Terms{{s, LaurentInt(1)}, {G->e(), -V(-1)}});
}

TEST_CASE("property: involutions are ring maps on affine A1 and A2") {
    std::mt19937 rng(4242);
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
        auto G = WextGroup::from_tag(tag);
        Hecke H(G);
        auto pool = G->elements_up_to(tag[1] == '1' ? 8 : 4);
        for (int it = 0; it < 25; ++it) {
            Terms a = random_elt(H, pool, rng), b = random_elt(H, pool, rng);
            Terms ab = H.mul(a, b);
            CHECK(H.iota(ab) == H.mul(H.iota(a), H.iota(b)));
            CHECK(H.iota(H.iota(a)) == a);
            CHECK(H.bar(ab) == H.mul(H.bar(a), H.bar(b)));
            CHECK(H.bar(H.bar(a)) == a);
        }
    }
}

TEST_CASE("Bernstein elements") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Hecke H(G);
    CHECK(H.bernstein({0}) == H.unit());
    CHECK(H.bernstein({1}) == H.std(G->translation({1})));
    CHECK(H.bernstein({-1}) == H.std_inverse(G->translation({1})));
    Terms nat = H.theta_char({{{1}, 1}, {{-1}, 1}});
    Terms expect = H.std(G->translation({1}));
    add_to(expect, H.std_inverse(G->translation({1})));
    CHECK(nat == expect);
    CHECK(H.is_central(nat));
    CHECK_FALSE(H.is_central(H.bernstein({1})));
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) CHECK(H.mul(H.bernstein({a}), H.bernstein({b})) == H.bernstein({a + b}));
}
