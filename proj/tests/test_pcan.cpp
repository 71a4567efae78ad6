#include "doctest.h"

#include <fstream>
#include <sstream>

#include "pcanlab/errors.hpp"
#include "pcanlab/pcan.hpp"
#include "pcanlab/sl2oracle.hpp"

using namespace pcanlab;

namespace {

LaurentInt V(int e) { return LaurentInt::v(e); }

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char* kHeader =
    R"({"schema":"pcan/1","type":"A1-affine-ext","p":0,"basis":"regular","graded":true,"provenance":"hand","entries":[)";

// Weyl dimension formula in type A2: (a+1)(b+1)(a+b+2)/2.
long a2_dim(int a, int b) { return static_cast<long>(a + 1) * (b + 1) * (a + b + 2) / 2; }

}  // namespace

TEST_CASE("p = 0 provider") {
    auto S = module_for("A1-affine-ext");
    const Hecke& H = S->hecke();
    const WextGroup& G = S->group();
    Wext s = G.gens()[1], om = G.omegas()[1], y = G.mul(G.gens()[0], s);
    CHECK(pcan_p0(H, G.e()) == H.unit());
    CHECK(pcan_p0(H, s) == Terms{{s, LaurentInt(1)}, {G.e(), V(1)}});
    CHECK(pcan_p0(H, G.mul(om, y)) == H.left_omega(om, pcan_p0(H, y)));
}

TEST_CASE("bundled tables") {
    auto S = module_for("A1-affine-ext");
    PCanTable file = load_table(bundled_table_path("A1-affine-ext_p0_regular.json"));
    CHECK(file.provenance == Provenance::file);
    CHECK(file.entries.size() == 34);
    for (const auto& [w, terms] : file.entries) CHECK(terms == S->hecke().kl(w));
    PCanTable internal = make_p0_table(S, BasisKind::regular, 8);
    CHECK(internal.entries == file.entries);
    for (const char* name :
         {"A1-affine-ext_p0_regular.json", "A2-affine-ext_p0_regular.json", "A1-affine-ext_p5_asph_v1.json"}) {
        std::string text = slurp(bundled_table_path(name));
        PCanTable t = parse_table(text);
        CHECK(table_to_string(t) == text);
        CHECK(verify_positivity(t).pass);
        CHECK(verify_omega(t).pass);
    }
    PCanTable p5 = load_table(bundled_table_path("A1-affine-ext_p5_asph_v1.json"));
    CHECK(p5.p == 5);
    CHECK_FALSE(p5.graded);
    CHECK_THROWS_AS(p5.entry(p5.group().translation({40})), MissingEntry);
}

TEST_CASE("table validation") {
    std::string e = R"({"omega":0,"word":[]})", s1 = R"({"omega":0,"word":[1]})";
    auto entry = [&](const std::string& target, const std::string& coeffs) {
        return std::string(kHeader) + "\n{\"target\":" + target + ",\"coeffs\":[" + coeffs + "]}\n]}\n";
    };
    std::string good = entry(s1, "{\"elt\":" + e + ",\"poly\":{\"1\":1}},{\"elt\":" + s1 + ",\"poly\":{\"0\":1}}");
    CHECK(table_to_string(parse_table(good)) == good);
    CHECK_THROWS_AS(parse_table(entry(s1, "{\"elt\":" + e + ",\"poly\":{\"1\":-1}},{\"elt\":" + s1 +
                                              ",\"poly\":{\"0\":1}}")),
                    PositivityViolation);
    CHECK_THROWS_AS(parse_table(entry(s1, "{\"elt\":" + e + ",\"poly\":{\"1\":1}}")), TriangularityViolation);
    CHECK_THROWS_AS(parse_table(entry(e, "{\"elt\":" + e + ",\"poly\":{\"0\":1}},{\"elt\":" + s1 +
                                             ",\"poly\":{\"0\":1}}")),
                    TriangularityViolation);
    CHECK_THROWS_AS(parse_table(entry(R"({"omega":0,"word":[1,1]})", "")), SchemaError);
    CHECK_THROWS_AS(parse_table("{\"schema\":\"pcan/2\"}"), SchemaError);
    CHECK_THROWS_AS(parse_table("not json"), SchemaError);
    // an Omega-translate that disagrees with the extension rule
    std::string o1 = R"({"omega":1,"word":[1]})", o0 = R"({"omega":1,"word":[]})";
    std::string bad = std::string(kHeader) + "\n{\"target\":" + s1 + ",\"coeffs\":[{\"elt\":" + e +
                      ",\"poly\":{\"1\":1}},{\"elt\":" + s1 + ",\"poly\":{\"0\":1}}]},\n{\"target\":" + o1 +
                      ",\"coeffs\":[{\"elt\":" + o0 + ",\"poly\":{\"1\":2}},{\"elt\":" + o1 +
                      ",\"poly\":{\"0\":1}}]}\n]}\n";
    CHECK_THROWS_AS(parse_table(bad), SchemaError);
}

TEST_CASE("three providers agree at p = 0") {
    for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
        auto S = module_for(tag);
        const WextGroup& G = S->group();
        PCanTable reg = make_p0_table(S);
        PCanTable asph = make_p0_table(S, BasisKind::antispherical);
        PCanTable sph = make_p0_table(S, BasisKind::spherical);
        int L = tag[1] == '1' ? 8 : 5;
        for (const auto& w : G.elements_up_to(L)) {
            ModElt xi = pcan_asph(reg, w);
            if (!G.coset_min(w)) {
                CHECK(xi.terms.empty());
                CHECK(pcan_asph(asph, w).terms.empty());
                continue;
            }
            CHECK(xi == S->canonical_elt(w, Side::asph));
            CHECK(pcan_asph(asph, w) == xi);
            CHECK(pcan_sph(reg, w) == pcan_sph(sph, w));
        }
    }
    auto S = module_for("A1-affine-ext");
    PCanTable reg = make_p0_table(S);
    CHECK(pcan_sph(reg, S->group().e()) == S->basis(Side::sph, S->group().e()));
    CHECK_THROWS_AS(pcan_sph(reg, S->group().gens()[1]), NotMinimal);
}

TEST_CASE("Donkin and Steinberg at p = 0") {
    auto S = module_for("A1-affine-ext");
    const WextGroup& G = S->group();
    const RootDatum& rd = G.datum();
    PCanTable t = make_p0_table(S);
    Wext ts = G.t_sigma(), w2 = G.w_lambda({2});
    for (const auto& x : {ts, w2, G.e()}) {
        Report r = verify_donkin(t, {0}, x, weyl_character(rd, {0}));
        CHECK(r.pass);
    }
    for (int l : {1, 2, 3}) {
        Report r = verify_donkin(t, {l}, ts, weyl_character(rd, {l}));
        CHECK(r.pass);
        CHECK(r.hypothesis_ok);
        Report s = verify_steinberg(t, {l}, G.e(), weyl_character(rd, {l}));
        CHECK(s.pass);
        CHECK(s.hypothesis_ok);
    }
    // outside the hypotheses the identities are reported, not assumed
    Report d = verify_donkin(t, {1}, w2, weyl_character(rd, {1}));
    CHECK_FALSE(d.hypothesis_ok);
    CHECK_FALSE(d.pass);
    Report st = verify_steinberg(t, {1}, ts, weyl_character(rd, {1}));
    CHECK_FALSE(st.hypothesis_ok);
    CHECK(st.sides.size() == 1);
    CHECK_THROWS_AS(verify_donkin(t, {-1}, ts, {}), NotDominant);
    CHECK_THROWS_AS(verify_donkin(t, {1}, G.gens()[1], {}), NotMinimal);
    // Steinberg at x = e against the spherical decomposition
    for (int l = 0; l <= 3; ++l) {
        Report r = verify_spherical_decomposition(t, l, {{l, 1}});
        CHECK(r.pass);
    }
}

TEST_CASE("Donkin at p = 5 from the v = 1 table") {
    PCanTable t = load_table(bundled_table_path("A1-affine-ext_p5_asph_v1.json"));
    const WextGroup& G = t.group();
    for (const auto& x : {G.t_sigma(), G.mul(G.t_sigma(), G.omegas()[1])})
        for (int l = 0; l <= 4; ++l) {
            Report r = verify_donkin(t, {l}, x, sl2_tilting_weights(l, 5));
            CHECK(r.hypothesis_ok);
            CHECK(r.pass);
        }
}

TEST_CASE("phi compatibility") {
    auto S = module_for("A1-affine-ext");
    const WextGroup& G = S->group();
    PCanTable t = make_p0_table(S);
    for (const auto& w : G.elements_up_to(4))
        if (G.coset_min(w)) CHECK(verify_phi(t, G.datum().sigma(), w).pass);
    PCanTable file = load_table(bundled_table_path("A1-affine-ext_p0_regular.json"));
    CHECK_THROWS_AS(verify_phi(file, G.datum().sigma(), G.translation({8})), MissingEntry);
}

TEST_CASE("character formula at v = 1") {
    PCanTable t = load_table(bundled_table_path("A1-affine-ext_p5_asph_v1.json"));
    Report r = verify_character_sl2(t, 5, 20);
    CHECK(r.pass);
    bool seen = false;
    for (const auto& l : r.lines)
        if (l.rfind("lambda = 13:", 0) == 0) {
            seen = true;
            CHECK(l.find("table {13:1,5:1}") != std::string::npos);
        }
    CHECK(seen);
    CHECK_THROWS_AS(verify_character_sl2(make_p0_table(module_for("A2-affine-ext")), 5, 4), DatumMismatch);
}

TEST_CASE("positivity scan") {
    auto S = module_for("A1-affine-ext");
    PCanTable empty = make_p0_table(S, BasisKind::regular, -1);
    CHECK(verify_positivity(empty).pass);
    CHECK(verify_positivity(make_p0_table(S, BasisKind::regular, 8)).pass);
    PCanTable bad = make_p0_table(S, BasisKind::regular, 1);
    Wext s = S->group().gens()[1];
    bad.entries[s][S->group().e()] = LaurentInt::monomial(1, -1);
    Report r = verify_positivity(bad);
    CHECK_FALSE(r.pass);
    CHECK(r.lines.front() == "negative coefficient at (s1, e, 1)");
}

TEST_CASE("Weyl characters") {
    auto rd = RootDatum::from_type("A1");
    for (int a = 0; a <= 6; ++a) {
        WeightMultiset expect;
        for (const auto& [k, m] : weyl_char(a)) expect.push_back({Weight{k}, static_cast<long>(m)});
        CHECK(weyl_character(rd, {a}) == expect);
    }
    auto a2 = RootDatum::from_type("A2");
    FiniteWeyl W(a2);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b) {
            auto ch = weyl_character(a2, {a, b});
            long dim = 0;
            std::map<Weight, long> m;
            for (const auto& [mu, k] : ch) {
                dim += k;
                m[mu] = k;
            }
            CHECK(dim == a2_dim(a, b));
            for (const auto& [mu, k] : m)
                for (int i = 0; i < 2; ++i) {
                    auto it = m.find(a2.reflect(mu, i));
                    CHECK((it != m.end() && it->second == k));
                }
        }
    CHECK_THROWS_AS(weyl_character(rd, {-1}), NotDominant);
}
