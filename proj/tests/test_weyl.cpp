#include "doctest.h"

#include <random>
#include <set>

#include "pcanlab/errors.hpp"
#include "pcanlab/weyl.hpp"

using namespace pcanlab;

namespace {

// Shortest word length in the affine generators, by breadth-first search
// from the element down to a length-zero element.  Independent of the
// closed length formula: only uses multiplication and the Omega list.
int word_length_bfs(const WextGroup& G, const Wext& x, int cap) {
    std::set<Wext> omegas(G.omegas().begin(), G.omegas().end());
    std::set<Wext> frontier{x}, seen{x};
    for (int d = 0; d <= cap; ++d) {
        for (const auto& y : frontier)
            if (omegas.count(y)) return d;
        std::set<Wext> next;
        for (const auto& y : frontier)
            for (const auto& g : G.gens()) {
                Wext z = G.mul(y, g);
                if (seen.insert(z).second) next.insert(z);
            }
        frontier.swap(next);
    }
    return -1;
}

}  // namespace

TEST_CASE("finite Weyl groups") {
    CHECK(FiniteWeyl(RootDatum::from_type("A2")).size() == 6);
    CHECK(FiniteWeyl(RootDatum::from_type("A3")).size() == 24);
    CHECK(FiniteWeyl(RootDatum::from_type("B3")).size() == 48);
    CHECK(FiniteWeyl(RootDatum::from_type("G2")).size() == 12);
    FiniteWeyl W(RootDatum::from_type("A3"));
    CHECK(W.length(W.longest()) == 6);
}

TEST_CASE("A1 extended affine Weyl group") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Wext s = G->finite(1), tw = G->translation({1});
    CHECK(G->mul(s, s) == G->e());
    CHECK(G->mul(G->translation({2}), G->translation({3})) == G->translation({5}));
    Wext stw = G->mul(s, tw);
    CHECK(G->mul(stw, stw) == G->e());
    CHECK(G->length(tw) == 1);
    CHECK(G->length(G->make(1, {-1})) == 0);
    CHECK(G->length(G->translation({2})) == 2);
    CHECK(G->length(stw) == 2);
    CHECK(G->omegas().size() == 2);
    CHECK(G->gens().size() == 2);
    CHECK(G->gens()[0] == G->make(1, {-2}));

    auto d = G->omega_split(G->make(1, {-1}));
    CHECK(d.word.empty());
    CHECK(d.omega == G->make(1, {-1}));
    auto dt = G->omega_split(tw);
    CHECK(dt.omega == G->make(1, {-1}));
    CHECK(dt.word.size() == 1);
    CHECK(G->from_word(dt.omega, dt.word) == tw);
    Wext s0 = G->gens()[0], s1 = G->gens()[1];
    CHECK(G->mul(s0, s1) == G->translation({2}));
}

TEST_CASE("Bruhat order") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    Wext s0 = G->gens()[0], s1 = G->gens()[1];
    Wext s010 = G->mul(G->mul(s0, s1), s0);
    CHECK(G->bruhat_leq(G->e(), s010));
    CHECK(G->bruhat_leq(s0, s010));
    CHECK(G->bruhat_leq(s1, s010));
    CHECK_FALSE(G->bruhat_leq(s010, s0));
    CHECK_FALSE(G->bruhat_leq(G->omegas()[1], s010));
    CHECK_FALSE(G->bruhat_leq(G->e(), G->omegas()[1]));
    auto H = WextGroup::from_tag("A2-affine");
    auto els = H->elements_up_to(4);
    // subword property against brute force on words
    for (const auto& y : els) {
        auto wy = H->reduced_word(y);
        std::set<Wext> below;
        for (unsigned mask = 0; mask < (1u << wy.size()); ++mask) {
            Wext z = H->e();
            for (size_t k = 0; k < wy.size(); ++k)
                if (mask & (1u << k)) z = H->mul(z, H->gens()[wy[k]]);
            below.insert(z);
        }
        for (const auto& x : els) CHECK(H->bruhat_leq(x, y) == (below.count(x) > 0));
    }
}

TEST_CASE("coset representatives and w_lambda") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    CHECK(G->coset_min(G->e()));
    CHECK_FALSE(G->coset_min(G->finite(1)));
    CHECK(G->coset_min(G->translation({1})));
    CHECK(G->w_lambda({1}) == G->translation({1}));
    CHECK(G->length(G->w_lambda({1})) == 1);
    CHECK(G->w_lambda({-1}) == G->make(1, {-1}));
    CHECK(G->w_lambda({0}) == G->e());
    CHECK(G->x_mu({0}) == G->w0());
    CHECK(G->x_mu({1}) == G->make(1, {1}));
    CHECK(G->length(G->x_mu({2})) == 3);
    CHECK_THROWS_AS(G->x_mu({-1}), NotDominant);
}

TEST_CASE("dot action and restrictedness") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    CHECK(G->dot_p(G->e(), {3}, 5) == Weight{3});
    CHECK(G->dot_p(G->translation({1}), {0}, 5) == Weight{5});
    CHECK(G->dot_p(G->finite(1), {0}, 5) == Weight{-2});
    CHECK(G->is_restricted(G->e(), 5));
    int restricted = 0;
    for (const auto& x : G->elements_up_to(6)) {
        if (!G->coset_min(x)) continue;
        int n = G->dot_p(x, {0}, 5)[0];
        CHECK(G->is_restricted(x, 5) == (n >= 0 && n < 5));
        if (n == 3) CHECK(G->is_restricted(x, 5));
        if (n == 5) CHECK_FALSE(G->is_restricted(x, 5));
        restricted += (n >= 0 && n < 5);
    }
    CHECK(restricted == 2);
    CHECK_THROWS_AS(G->is_restricted(G->finite(1), 5), NotMinimal);
}

TEST_CASE("property: length formula against words") {
    std::mt19937 rng(99);
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext", "B2-affine-ext", "G2-affine", "A1xA1-affine-ext"}) {
        auto G = WextGroup::from_tag(tag);
        int r = G->dim();
        std::uniform_int_distribution<int> c(-2, 2), w(0, G->fin().size() - 1);
        for (int it = 0; it < 40; ++it) {
            Weight t(r), u(r);
            for (int k = 0; k < r; ++k) {
                t[k] = c(rng);
                u[k] = c(rng);
            }
            Wext x = G->make(w(rng), t), y = G->make(w(rng), u);
            int lx = G->length(x), ly = G->length(y);
            CHECK(G->length(G->inv(x)) == lx);
            CHECK(G->length(G->mul(x, y)) <= lx + ly);
            CHECK(G->mul(x, G->inv(x)) == G->e());
            if (lx <= 8) CHECK(word_length_bfs(*G, x, 10) == lx);
            auto d = G->omega_split(x);
            CHECK(static_cast<int>(d.word.size()) == lx);
            CHECK(G->from_word(d.omega, d.word) == x);
            Wext wl = G->w_lambda(t);
            CHECK(G->coset_min(wl));
            CHECK(G->trans(wl) == t);
        }
    }
}

TEST_CASE("Omega permutes the affine generators") {
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext", "A3-affine-ext"}) {
        auto G = WextGroup::from_tag(tag);
        std::set<Wext> om(G->omegas().begin(), G->omegas().end());
        std::set<Wext> gens(G->gens().begin(), G->gens().end());
        CHECK(static_cast<int>(om.size()) == G->dim() + 1);
        for (const auto& a : G->omegas()) {
            CHECK(G->length(a) == 0);
            for (const auto& b : G->omegas()) CHECK(om.count(G->mul(a, b)));
            for (const auto& g : G->gens()) CHECK(gens.count(G->mul(G->mul(a, g), G->inv(a))));
        }
    }
}
