#include "doctest.h"

#include <random>

#include "pcanlab/laurent.hpp"

using namespace pcanlab;

namespace {

LaurentInt lp(std::initializer_list<std::pair<int, long>> ts) {
    LaurentInt r;
    for (auto [e, c] : ts) r += LaurentInt::monomial(e, c);
    return r;
}

LaurentInt random_lp(std::mt19937& rng) {
    std::uniform_int_distribution<int> n(0, 4), e(-5, 5), c(-9, 9);
    LaurentInt r;
    for (int k = n(rng); k > 0; --k) r += LaurentInt::monomial(e(rng), c(rng));
    return r;
}

}  // namespace

TEST_CASE("laurent arithmetic") {
    CHECK(lp_mul(lp({{1, 1}, {-1, 1}}), LaurentInt::v()) == lp({{2, 1}, {0, 1}}));
    auto a = lp({{0, 1}, {2, 1}});
    CHECK(a * LaurentInt(1) == a);
    CHECK(a * a == lp({{0, 1}, {2, 2}, {4, 1}}));
    CHECK((a - a).is_zero());
    CHECK(lp({{0, 3}, {1, 0}}).terms().size() == 1);
}

TEST_CASE("laurent involutions") {
    CHECK(lp_bar(LaurentInt::v(2)) == LaurentInt::v(-2));
    CHECK(lp_bar(LaurentInt(3)) == LaurentInt(3));
    CHECK(lp_bar(lp({{0, 1}, {1, 1}})) == lp({{0, 1}, {-1, 1}}));
    CHECK(lp_iota(LaurentInt::v()) == -LaurentInt::v(-1));
    CHECK(lp_iota(LaurentInt::v(2)) == LaurentInt::v(-2));
    CHECK(lp_iota(LaurentInt(1)) == LaurentInt(1));
}

TEST_CASE("laurent evaluation") {
    CHECK(lp_eval_one(lp({{0, 1}, {2, 1}})) == 2);
    CHECK(lp_eval_one(lp({{-1, 1}, {0, 1}, {1, 1}})) == 3);
    CHECK(lp_eval_one(LaurentInt()) == 0);
}

TEST_CASE("laurent property: involutions are ring homomorphisms") {
    std::mt19937 rng(20240611);
    for (int it = 0; it < 500; ++it) {
        auto a = random_lp(rng), b = random_lp(rng);
        CHECK(lp_bar(lp_bar(a)) == a);
        CHECK(lp_iota(lp_iota(a)) == a);
        CHECK(lp_bar(a * b) == lp_bar(a) * lp_bar(b));
        CHECK(lp_iota(a * b) == lp_iota(a) * lp_iota(b));
        CHECK(lp_iota(a + b) == lp_iota(a) + lp_iota(b));
        CHECK(lp_eval_one(a * b) == lp_eval_one(a) * lp_eval_one(b));
        CHECK((a + b) - b == a);
    }
}

TEST_CASE("laurent printing") {
    CHECK(LaurentInt().str() == "0");
    CHECK(lp({{-1, 1}, {0, -2}, {3, 1}}).str() == "v^-1 - 2 + v^3");
}
