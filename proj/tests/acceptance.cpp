// Acceptance run: one PASS/FAIL line per criterion.  All comparisons are exact
// (integers, Laurent polynomials, rationals); the only tolerance is wall time
// where a criterion states one.  Known failures are listed and do not change
// the exit status; any other failure does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pcanlab/errors.hpp"
#include "pcanlab/pcan.hpp"
#include "pcanlab/quiverlab.hpp"
#include "pcanlab/sl2oracle.hpp"
#include "support/kl_oracle.hpp"

using namespace pcanlab;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// criteria that cannot pass as stated
const std::set<int> kKnownFailures{11};

int g_unexpected = 0;

void criterion(int id, const std::string& title, const std::string& tol, const std::function<Outcome()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool known = !o.pass && kKnownFailures.count(id);
    if (!o.pass && !known) ++g_unexpected;
    std::printf("%s C%02d %s [tol: %s] (%.2f s)%s%s%s\n", o.pass ? "PASS" : "FAIL", id, title.c_str(), tol.c_str(),
                secs, o.detail.empty() ? "" : ": ", o.detail.c_str(), known ? " [known, see notes]" : "");
    std::fflush(stdout);
}

void need(Outcome& o, bool ok, const std::string& what) {
    if (ok) return;
    o.pass = false;
    o.detail += (o.detail.empty() ? "" : "; ") + what;
}

LaurentInt V(int e) { return LaurentInt::v(e); }

}  // namespace

int main() {
    criterion(1, "quadratic duals reproduce the Koszul dual table", "exact, runtime < 10 s", [] {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        std::vector<std::pair<std::string, std::string>> rows{
            {"R_ab", "Rstar_ab"}, {"R", "Rstar_ab_ba"}, {"R_ab_ba", "Rstar"}};
        for (const auto& [a, b] : rows) {
            auto D = quadratic_dual(GradedAlgebra::preset(a, {}, 6));
            need(o, find_isomorphism(D, GradedAlgebra::preset(b, {}, 6), 5).found, a + " -> " + b);
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        need(o, secs < 10.0, "too slow");
        if (o.pass) o.detail = "3/3 rows";
        return o;
    });

    criterion(2, "minimal resolutions of L1 and L2 over R/(ab)", "exact", [] {
        Outcome o;
        auto A = GradedAlgebra::preset("R_ab");
        auto r1 = minimal_resolution(A, simple(A, 0), 6).str(A, "L1");
        auto r2 = minimal_resolution(A, simple(A, 1), 6).str(A, "L2");
        need(o, r1 == "0 -> P2<-1> -> P1 -> L1 -> 0", r1);
        need(o, r2 == "0 -> P2<-2> -> P1<-1> -> P2 -> L2 -> 0", r2);
        if (o.pass) o.detail = r1 + " | " + r2;
        return o;
    });

    criterion(3, "Yoneda product b* a* in Ext^2(L1, L1<-2>)", "exact", [] {
        Outcome o;
        auto A = GradedAlgebra::preset("R_ab");
        auto x = yoneda_product(A, ext_class_of_arrow(A, "b"), ext_class_of_arrow(A, "a"));
        need(o, x.k == 2 && x.n == -2 && x.src == 0 && x.tgt == 0, "wrong Ext group");
        need(o, x.is_zero(), "nonzero for R/(ab)");
        auto B = GradedAlgebra::preset("R_ab_ba");
        auto y = yoneda_product(B, ext_class_of_arrow(B, "b"), ext_class_of_arrow(B, "a"));
        need(o, !y.is_zero(), "zero for R/(ab, ba)");
        // the dual of R/(ab, ba) has no relations, so the path b^ after a^ survives
        auto D = quadratic_dual(B);
        Path p{{D.arrow_index("a^"), D.arrow_index("b^")}, 1, 1};
        need(o, !D.is_zero({{Scalar(1), p}}), "dual cross-check");
        if (o.pass) o.detail = "zero for R/(ab), nonzero for R/(ab, ba)";
        return o;
    });

    criterion(4, "quasi-hereditary detection", "exact", [] {
        Outcome o;
        auto A = GradedAlgebra::preset("R_ab");
        auto Q = qh_structure(A, parse_order(A, "1<2"));
        need(o, Q.pass, "R/(ab) 1<2 fails");
        need(o, is_isomorphic(Q.standard[1], projective(A, 1)), "Delta2 != P2");
        need(o, is_isomorphic(Q.costandard[1], injective(A, 1)), "nabla2 != J2");
        need(o, is_isomorphic(Q.standard[0], simple(A, 0)), "Delta1 != L1");
        auto B = GradedAlgebra::preset("R_ab_ba");
        for (auto ord : {"1<2", "2<1"}) {
            auto q = qh_structure(B, parse_order(B, ord));
            need(o, !q.pass, std::string("R/(ab, ba) passes for ") + ord);
            if (!q.pass) o.detail += std::string(o.detail.empty() ? "" : ", ") + "R/(ab,ba) " + ord +
                                      " fails axiom " + std::to_string(q.failed_axiom);
        }
        return o;
    });

    criterion(5, "tilting T2 = P1<1> and Ringel self-duality", "exact", [] {
        Outcome o;
        auto A = GradedAlgebra::preset("R_ab");
        auto Q = qh_structure(A, {0, 1});
        auto t2 = tilting_module(A, Q, 1);
        need(o, t2.cert.pass, "T2 certificate");
        need(o, is_isomorphic(t2.T, shift(projective(A, 0), 1)), "T2 != P1<1>");
        need(o, is_isomorphic(t2.T, shift(injective(A, 0), -1)), "T2 != J1<-1>");
        need(o, t2.T.dims_str(A) == "1@-1:1 2@0:1 1@1:1", t2.T.dims_str(A));
        need(o, is_isomorphic(tilting_module(A, Q, 0).T, simple(A, 0)), "T1 != L1");
        auto R = ringel_dual(A, Q);
        need(o, R.presented && R.qh && R.qh->pass, "Ringel dual not qh for the opposite order");
        if (R.algebra) {
            auto iso = find_isomorphism(A, *R.algebra);
            need(o, iso.found, "no isomorphism A -> A#");
            if (o.pass) {
                o.detail = "T2 dims " + t2.T.dims_str(A) + "; iso";
                for (const auto& l : iso.lines) o.detail += " [" + l + "]";
            }
        }
        return o;
    });

    criterion(6, "Koszul suite to K = 6 and Ext of the exterior algebra", "exact", [] {
        Outcome o;
        for (auto name : {"R", "R_ab", "R_ab_ba", "ext2"})
            need(o, koszul_check(GradedAlgebra::preset(name, {}, 8), 6).pass, std::string(name) + " not Koszul");
        auto E = ext_algebra(GradedAlgebra::preset("ext2", {}, 8), 6);
        need(o, E.dims == std::vector<int>{1, 2, 3, 4, 5, 6, 7}, "Ext dims");
        need(o, E.dual_match.found, "presentation differs from the quadratic dual");
        need(o, !koszul_check(GradedAlgebra::preset("kx3", {}, 8), 4).pass, "k[x]/(x^3) passes");
        if (o.pass) o.detail = "4/4 Koszul; Ext(ext2) dims 1,2,3,4,5,6,7";
        return o;
    });

    criterion(7, "KL polynomials in finite A2 and A3 against bar-invariance solving", "exact", [] {
        Outcome o;
        auto G = WextGroup::from_tag("A2-finite");
        Hecke H(G);
        std::vector<Wext> W;
        for (int a = 0; a < G->fin().size(); ++a) W.push_back(G->finite(a));
        for (const auto& y : W) {
            need(o, H.kl(y) == oracle::kl_by_bar_solve(H, y, W), "A2 oracle mismatch at " + G->str(y));
            for (const auto& x : W)
                if (G->bruhat_leq(x, y))
                    need(o, H.kl_coeff(x, y) == V(G->length(y) - G->length(x)), "A2 h_{x,y} not a monomial");
        }
        auto G3 = WextGroup::from_tag("A3-finite");
        Hecke H3(G3);
        std::vector<Wext> W3;
        for (int a = 0; a < G3->fin().size(); ++a) W3.push_back(G3->finite(a));
        int nontrivial = 0;
        for (const auto& y : W3) {
            need(o, H3.kl(y) == oracle::kl_by_bar_solve(H3, y, W3), "A3 oracle mismatch at " + G3->str(y));
            for (const auto& [x, h] : H3.kl(y)) nontrivial += h.terms().size() > 1;
        }
        need(o, nontrivial > 0, "no nontrivial polynomial in A3");
        if (o.pass) o.detail = std::to_string(nontrivial) + " nontrivial h_{x,y} in A3";
        return o;
    });

    criterion(8, "iota and bar are ring involutions; iota(x.h) = iota(x).iota(h)", "exact", [] {
        Outcome o;
        std::mt19937 rng(8);
        int products = 0;
        for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
            auto G = WextGroup::from_tag(tag);
            Hecke H(G);
            auto pool = G->elements_up_to(8);
            std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
            std::uniform_int_distribution<int> e(-2, 2), c(-3, 3);
            auto rnd = [&] {
                Terms t;
                for (int k = 0; k < 2; ++k) add_to(t, pool[pick(rng)], LaurentInt::monomial(e(rng), c(rng)));
                return t;
            };
            int trials = tag[1] == '1' ? 40 : 10;
            for (int it = 0; it < trials; ++it) {
                Terms a = rnd(), b = rnd(), ab = H.mul(a, b);
                need(o, H.iota(ab) == H.mul(H.iota(a), H.iota(b)), std::string("iota in ") + tag);
                need(o, H.bar(ab) == H.mul(H.bar(a), H.bar(b)), std::string("bar in ") + tag);
                need(o, H.iota(H.iota(a)) == a && H.bar(H.bar(a)) == a, std::string("not involutive in ") + tag);
                ++products;
            }
        }
        auto S = module_for("A1-affine-ext");
        const WextGroup& G = S->group();
        std::vector<Wext> mins, all = G.elements_up_to(5);
        for (const auto& x : G.elements_up_to(6))
            if (G.coset_min(x)) mins.push_back(x);
        std::uniform_int_distribution<size_t> pm(0, mins.size() - 1), pa(0, all.size() - 1);
        std::uniform_int_distribution<int> e(-2, 2), c(-2, 2);
        for (int it = 0; it < 1000; ++it) {
            ModElt m{Side::sph, {}};
            Terms h;
            for (int k = 0; k < 2; ++k) {
                add_to(m.terms, mins[pm(rng)], LaurentInt::monomial(e(rng), c(rng)));
                add_to(h, all[pa(rng)], LaurentInt::monomial(e(rng), c(rng)));
            }
            need(o, S->iota(S->act(m, h)) == S->act(S->iota(m), S->hecke().iota(h)), "module iota");
            if (!o.pass) break;
        }
        if (o.pass) o.detail = std::to_string(products) + " products (l <= 8), 1000 module pairs";
        return o;
    });

    criterion(9, "Bernstein elements: well defined, additive, central for W-invariant data", "exact", [] {
        Outcome o;
        auto G = WextGroup::from_tag("A1-affine-ext");
        Hecke H(G);
        for (int a = -3; a <= 3; ++a) {
            for (int b = -3; b <= 3; ++b)
                if (std::abs(a + b) <= 3)
                    need(o, H.mul(H.bernstein({a}), H.bernstein({b})) == H.bernstein({a + b}), "A1 additivity");
            // theta = H_{t_mu} H_{t_nu}^{-1} for every dominant mu - nu = lambda
            for (int nu = std::max(0, -a); nu <= 3; ++nu)
                need(o, H.mul(H.std(G->translation({a + nu})), H.std_inverse(G->translation({nu}))) == H.bernstein({a}),
                     "A1 decomposition");
        }
        auto rd1 = G->datum();
        for (int l = 0; l <= 3; ++l) need(o, H.is_central(H.theta_char(weyl_character(rd1, {l}))), "A1 centrality");
        auto G2 = WextGroup::from_tag("A2-affine-ext");
        Hecke H2(G2);
        std::vector<Weight> fund{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}, {-1, 1}};
        for (const auto& x : fund) {
            for (const auto& y : fund)
                need(o, H2.mul(H2.bernstein(x), H2.bernstein(y)) == H2.bernstein({x[0] + y[0], x[1] + y[1]}),
                     "A2 additivity");
            Weight nu{std::max(0, -x[0]), std::max(0, -x[1])};
            Weight mu{x[0] + nu[0], x[1] + nu[1]};
            Weight nu2{nu[0] + 1, nu[1] + 1}, mu2{mu[0] + 1, mu[1] + 1};
            Terms t1 = H2.mul(H2.std(G2->translation(mu)), H2.std_inverse(G2->translation(nu)));
            Terms t2 = H2.mul(H2.std(G2->translation(mu2)), H2.std_inverse(G2->translation(nu2)));
            need(o, t1 == H2.bernstein(x) && t2 == t1, "A2 decomposition");
        }
        for (const Weight& w : {Weight{1, 0}, Weight{0, 1}})
            need(o, H2.is_central(H2.theta_char(weyl_character(G2->datum(), w))), "A2 centrality");
        need(o, !H.is_central(H.bernstein({1})), "theta_1 central in A1");
        return o;
    });

    criterion(10, "parabolic identities at p = 0 (xi, eta, spherical convolution)", "exact", [] {
        Outcome o;
        int checked = 0;
        for (const char* tag : {"A1-affine-ext", "A2-affine-ext"}) {
            auto S = module_for(tag);
            const WextGroup& G = S->group();
            const Hecke& H = S->hecke();
            int L = tag[1] == '1' ? 8 : 5;
            for (const auto& w : G.elements_up_to(L)) {
                ModElt xi = S->project(H.kl(w), Side::asph);
                if (G.coset_min(w)) {
                    need(o, xi == S->canonical_elt(w, Side::asph), std::string("xi in ") + tag);
                    need(o, S->eta(S->canonical_elt(w, Side::sph)) == H.kl(G.mul(G.w0(), w)),
                         std::string("eta in ") + tag);
                } else {
                    need(o, xi.terms.empty(), std::string("xi nonzero off 0W in ") + tag);
                }
                ++checked;
            }
            ModElt me = S->basis(Side::sph, G.e());
            std::vector<Weight> mus;
            if (tag[1] == '1')
                for (int m = 0; m <= 4; ++m) mus.push_back({m});
            else
                mus = {{0, 0}, {1, 0}, {0, 1}, {1, 1}};
            for (const auto& mu : mus) {
                ModElt lhs = S->act(me, H.theta_char(weyl_character(G.datum(), mu)));
                need(o, lhs == S->canonical_elt(G.mul(G.w0(), G.x_mu(mu)), Side::sph),
                     std::string("convolution in ") + tag);
            }
        }
        if (o.pass) o.detail = std::to_string(checked) + " elements";
        return o;
    });

    criterion(11, "Donkin and Steinberg at p = 0, lambda in {1, 2}, x in {t_sigma, w_2}", "exact", [] {
        Outcome o;
        auto S = module_for("A1-affine-ext");
        const WextGroup& G = S->group();
        PCanTable t = make_p0_table(S);
        int in_ok = 0, in_all = 0;
        std::string outside;
        for (int l : {1, 2})
            for (const auto& [xn, x] : {std::pair{"t_sigma", G.t_sigma()}, std::pair{"w_2", G.w_lambda({2})}})
                for (bool donkin : {true, false}) {
                    auto ch = weyl_character(G.datum(), {l});
                    Report r = donkin ? verify_donkin(t, {l}, x, ch) : verify_steinberg(t, {l}, x, ch);
                    std::string name = std::string(donkin ? "Donkin" : "Steinberg") + "(" + std::to_string(l) + ", " +
                                       xn + ")";
                    if (r.hypothesis_ok) {
                        ++in_all;
                        in_ok += r.pass;
                        need(o, r.pass, name + " fails inside its hypotheses");
                    } else if (!r.pass) {
                        need(o, false, name + " outside its hypotheses");
                        outside += " " + name;
                    }
                }
        o.detail = std::to_string(in_ok) + "/" + std::to_string(in_all) + " in-hypothesis cases pass" +
                   (o.pass ? "" : "; false as stated:" + outside);
        return o;
    });

    criterion(12, "phi(M_w) = N_{t_sigma w} for l(w) <= 4", "exact", [] {
        Outcome o;
        auto S = module_for("A1-affine-ext");
        const WextGroup& G = S->group();
        PCanTable t = make_p0_table(S);
        int n = 0;
        for (const auto& w : G.elements_up_to(4))
            if (G.coset_min(w)) {
                need(o, verify_phi(t, G.datum().sigma(), w).pass, "phi at " + G.str(w));
                ++n;
            }
        if (o.pass) o.detail = std::to_string(n) + " elements";
        return o;
    });

    criterion(13, "tilting characters at v = 1 from the p = 5 table, lambda <= 20", "exact integers", [] {
        Outcome o;
        PCanTable t = load_table(bundled_table_path("A1-affine-ext_p5_asph_v1.json"));
        Report r = verify_character_sl2(t, 5, 20);
        need(o, r.pass, "mismatch against the oracle");
        bool seen = false;
        for (const auto& l : r.lines)
            if (l.rfind("lambda = 13:", 0) == 0) seen = l.find("table {13:1,5:1}") != std::string::npos;
        need(o, seen, "ch T(13) != chi(13) + chi(5)");
        auto m = tilting_multiplicities(13, 5);
        need(o, m.size() == 2 && m.at(13) == 1 && m.at(5) == 1, "oracle T(13)");
        if (o.pass) o.detail = "ch T(13) = chi(13) + chi(5)";
        return o;
    });

    criterion(14, "positivity and Omega-extension on the bundled tables", "exact", [] {
        Outcome o;
        for (const char* name :
             {"A1-affine-ext_p0_regular.json", "A2-affine-ext_p0_regular.json", "A1-affine-ext_p5_asph_v1.json"}) {
            PCanTable t = load_table(bundled_table_path(name));
            need(o, verify_positivity(t).pass, std::string("positivity ") + name);
            need(o, verify_omega(t).pass, std::string("Omega ") + name);
        }
        if (o.pass) o.detail = "3 tables";
        return o;
    });

    criterion(15, "parity: T1 + T2 of R/(ab) is parity for dag (0, 1), L2 is not", "exact", [] {
        Outcome o;
        auto A = GradedAlgebra::preset("R_ab");
        auto Q = qh_structure(A, {0, 1});
        std::vector<Tilting> T{tilting_module(A, Q, 0), tilting_module(A, Q, 1)};
        auto dag = dag_from_tiltings(A, Q, T);
        need(o, dag && *dag == std::vector<int>{0, 1}, "dag from the tilting modules");
        std::vector<int> d{0, 1};
        auto p = parity_check(A, Q, {{"T1", T[0].T, 0}, {"T2", T[1].T, 0}}, d);
        need(o, p.verdict == Parity::parity, "T1 + T2 is " + parity_name(p.verdict));
        auto l = parity_check(A, Q, {{"L2", simple(A, 1), 0}}, d);
        need(o, l.verdict == Parity::neither, "L2 is " + parity_name(l.verdict));
        if (o.pass) o.detail = "T1 even, T2 odd, L2 neither";
        return o;
    });

    std::printf("unexpected failures: %d\n", g_unexpected);
    return g_unexpected == 0 ? 0 : 1;
}
