#pragma once

// Brute-force canonical basis: solve bar-invariance over the Bruhat interval
// below w, using only the bar involution on standard basis elements.

#include <algorithm>
#include <vector>

#include "pcanlab/hecke.hpp"

namespace oracle {

using namespace pcanlab;

inline Terms kl_by_bar_solve(const Hecke& H, const Wext& w, const std::vector<Wext>& candidates) {
    const WextGroup& G = H.group();
    std::vector<Wext> below;
    for (const auto& x : candidates)
        if (G.bruhat_leq(x, w)) below.push_back(x);
    std::sort(below.begin(), below.end(), [&G](const Wext& a, const Wext& b) { return G.length(a) > G.length(b); });
    Terms h{{w, LaurentInt(1)}};
    for (const auto& x : below) {
        if (x == w) continue;
        // h_x - bar(h_x) = sum_{y > x} bar(h_y) r_{x,y}
        LaurentInt a;
        for (const auto& [y, hy] : h) {
            const Terms& by = H.bar_std(y);
            auto it = by.find(x);
            if (it != by.end()) a += lp_bar(hy) * it->second;
        }
        LaurentInt hx;
        for (const auto& [e, c] : a.terms())
            if (e > 0) hx += LaurentInt::monomial(e, c);
        if (!hx.is_zero()) h.emplace(x, hx);
    }
    return h;
}

}  // namespace oracle
