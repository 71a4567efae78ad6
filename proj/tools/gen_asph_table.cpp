// Builds the affine A1 antispherical table at v = 1 from the signed p-adic
// digit description of SL2 tilting characters.
#include <cstdio>
#include <iostream>
#include <map>
#include <set>
#include <vector>

#include "CLI11.hpp"
#include "pcanlab/errors.hpp"
#include "pcanlab/pcan.hpp"

using namespace pcanlab;

namespace {

// Weyl factors of T(l): l + 1 = a_k p^k + ... + a_0 gives the highest weights
// a_k p^k +- a_{k-1} p^{k-1} +- ... +- a_0 - 1, one sign per nonzero lower digit.
std::set<int> weyl_factors(int l, int p) {
    if (l < p) return {l};
    std::vector<int> digits;
    for (int n = l + 1; n > 0; n /= p) digits.push_back(n % p);
    std::set<int> sums{0};
    int place = 1;
    for (size_t i = 0; i + 1 < digits.size(); ++i, place *= p) {
        if (digits[i] == 0) continue;
        std::set<int> next;
        for (int s : sums) {
            next.insert(s + digits[i] * place);
            next.insert(s - digits[i] * place);
        }
        sums.swap(next);
    }
    std::set<int> out;
    for (int s : sums) out.insert(digits.back() * place + s - 1);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generate the affine A1 antispherical table at v = 1"};
    int p = 5, max_len = 10;
    std::string out_path;
    app.add_option("--p", p, "prime")->check(CLI::Range(3, 1000));
    app.add_option("--max-len", max_len, "largest element length")->check(CLI::Range(0, 60));
    app.add_option("--out", out_path, "output file (stdout if omitted)");
    CLI11_PARSE(app, argc, argv);

    try {
        auto mod = module_for("A1-affine-ext");
        const WextGroup& G = mod->group();
        std::vector<Wext> mins;
        for (const auto& w : G.elements_up_to(max_len))
            if (G.coset_min(w)) mins.push_back(w);
        std::map<int, Wext> by_weight;
        for (const auto& y : mins) by_weight.emplace(G.dot_p(y, {0}, p)[0], y);

        PCanTable t;
        t.type = G.tag();
        t.p = p;
        t.basis = BasisKind::antispherical;
        t.provenance = Provenance::file;
        t.graded = false;
        t.note = "signed p-adic digits";
        t.mod = mod;
        for (const auto& w : mins) {
            int l = G.dot_p(w, {0}, p)[0];
            Terms terms;
            for (int mu : weyl_factors(l, p)) {
                auto it = by_weight.find(mu);
                if (it == by_weight.end()) throw MissingEntry("no element with dot image " + std::to_string(mu));
                add_to(terms, it->second, LaurentInt(1));
            }
            t.entries.emplace(w, terms);
        }

        // the v = 1 entries must be nonnegative sums of KL elements at v = 1
        for (const auto& [w, terms] : t.entries) {
            std::map<Wext, long long> rest;
            for (const auto& [y, c] : terms) rest[y] = lp_eval_one(c).get_si();
            while (!rest.empty()) {
                auto top = rest.begin()->first;
                for (const auto& kv : rest)
                    if (G.length(kv.first) > G.length(top)) top = kv.first;
                long long k = rest[top];
                if (k < 0) throw PositivityViolation("negative KL multiplicity in entry " + G.str(w));
                for (const auto& [y, c] : mod->canonical(top, Side::asph)) {
                    rest[y] -= k * lp_eval_one(c).get_si();
                    if (rest[y] == 0) rest.erase(y);
                }
            }
        }

        std::string text = table_to_string(t);
        parse_table(text, mod);
        if (out_path.empty()) std::cout << text;
        else save_table(t, out_path);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
