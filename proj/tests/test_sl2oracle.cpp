#include "doctest.h"

#include "pcanlab/errors.hpp"
#include "pcanlab/sl2oracle.hpp"
#include "pcanlab/weyl.hpp"

using namespace pcanlab;

TEST_CASE("Weyl characters") {
    CHECK(weyl_char(0) == CharZ{{0, 1}});
    CHECK(weyl_char(1) == CharZ{{1, 1}, {-1, 1}});
    CHECK(weyl_char(2) == CharZ{{2, 1}, {0, 1}, {-2, 1}});
}

TEST_CASE("tilting seeds and tensor recursion") {
    CHECK(sl2_tilting_char(4, 5) == weyl_char(4));
    CHECK(tilting_multiplicities(5, 5) == std::map<int, long long>{{5, 1}, {3, 1}});
    CHECK(tilting_multiplicities(13, 5) == std::map<int, long long>{{13, 1}, {5, 1}});
    CHECK(tilting_multiplicities(8, 5) == std::map<int, long long>{{8, 1}, {0, 1}});
    CHECK(tilting_multiplicities(4, 5) == std::map<int, long long>{{4, 1}});
    // p = 2: T(2) = chi(2) + chi(0)
    CHECK(tilting_multiplicities(2, 2) == std::map<int, long long>{{2, 1}, {0, 1}});
}

TEST_CASE("Weyl decomposition") {
    CHECK(weyl_decompose(weyl_char(3)) == std::map<int, long long>{{3, 1}});
    CHECK(weyl_decompose(CharZ{{5, 1}, {-5, 1}}) == std::map<int, long long>{{5, 1}, {3, -1}});
    CHECK_THROWS_AS(weyl_decompose(CharZ{{1, 1}}), NotSymmetric);
}

TEST_CASE("property: tilting multiplicities") {
    auto G = WextGroup::from_tag("A1-affine-ext");
    std::vector<Wext> affine;
    for (const auto& x : G->elements_up_to(44))
        if (G->in_affine(x)) affine.push_back(x);
    for (int p : {3, 5, 7}) {
        for (int l = 0; l <= 60; ++l) {
            auto m = tilting_multiplicities(l, p);
            CHECK(recompose(m) == sl2_tilting_char(l, p));
            CHECK(m.at(l) == 1);
            for (const auto& [mu, k] : m) {
                CHECK(k > 0);
                CHECK(mu <= l);
                bool linked = false;
                for (const auto& x : affine)
                    if (G->dot_p(x, {l}, p)[0] == mu) linked = true;
                CHECK(linked);
            }
        }
    }
}
