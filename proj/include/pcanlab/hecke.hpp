#pragma once

#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pcanlab/laurent.hpp"
#include "pcanlab/weyl.hpp"

namespace pcanlab {

// Finitely supported combination of basis symbols indexed by group elements.
using Terms = std::map<Wext, LaurentInt>;

void add_to(Terms& t, const Wext& key, const LaurentInt& c);
void add_to(Terms& t, const Terms& o, const LaurentInt& c = LaurentInt(1));
Terms scaled(const Terms& t, const LaurentInt& c);
Terms terms_sub(const Terms& a, const Terms& b);
Terms terms_iota(const Terms& t);
Terms terms_bar_coeffs(const Terms& t);
// Entries sorted by the group's canonical order.
std::vector<std::pair<Wext, LaurentInt>> sorted_terms(const WextGroup& G, const Terms& t);
std::string terms_str(const WextGroup& G, const Terms& t, const std::string& sym = "H");

// Subtracts bar-invariant multiples of basis(z), z != top, until every
// coefficient off top lies in vZ[v].
void reduce_to_canonical(Terms& p, const Wext& top, const WextGroup& G,
                         const std::function<const Terms&(const Wext&)>& basis);

// Hecke algebra of W_ext in the standard basis, H_s^2 = (v^-1 - v) H_s + 1.
class Hecke {
public:
    explicit Hecke(std::shared_ptr<const WextGroup> G);

    const WextGroup& group() const { return *G_; }
    std::shared_ptr<const WextGroup> group_ptr() const { return G_; }

    Terms unit() const { return Terms{{G_->e(), LaurentInt(1)}}; }
    Terms std(const Wext& w) const { return Terms{{w, LaurentInt(1)}}; }

    Terms right_gen(const Terms& a, int g) const;
    Terms left_gen(int g, const Terms& a) const;
    Terms right_omega(const Terms& a, const Wext& om) const;
    Terms left_omega(const Wext& om, const Terms& a) const;
    Terms right_std(const Terms& a, const Wext& y) const;
    Terms left_std(const Wext& x, const Terms& a) const;
    Terms mul(const Terms& a, const Terms& b) const;

    Terms bar(const Terms& a) const;
    const Terms& bar_std(const Wext& w) const;
    Terms std_inverse(const Wext& w) const;
    Terms iota(const Terms& a) const { return terms_iota(a); }

    // Kazhdan-Lusztig basis element underline H_w.
    const Terms& kl(const Wext& w) const;
    // Coefficient h_{x,w} of H_x in underline H_w.
    LaurentInt kl_coeff(const Wext& x, const Wext& w) const;

    Terms bernstein(const Weight& l) const;
    Terms theta_char(const std::vector<std::pair<Weight, long>>& weights) const;
    bool is_central(const Terms& h) const;

    std::string str(const Terms& t) const { return terms_str(*G_, t, "H"); }

private:
    std::shared_ptr<const WextGroup> G_;

    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Wext, Terms, WextHash> kl_cache_, bar_cache_;
    mutable std::map<Weight, Terms> theta_cache_;

    Terms compute_kl(const Wext& w) const;
    Terms bernstein_from(const Weight& mu, const Weight& nu) const;
};

}  // namespace pcanlab
