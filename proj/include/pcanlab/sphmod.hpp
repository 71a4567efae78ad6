#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "pcanlab/hecke.hpp"

namespace pcanlab {

enum class Side { sph, asph };

// Element of the spherical (M) or antispherical (N) module; keys are
// minimal coset representatives.
struct ModElt {
    Side side = Side::sph;
    Terms terms;

    friend bool operator==(const ModElt& a, const ModElt& b) { return a.side == b.side && a.terms == b.terms; }
    friend bool operator!=(const ModElt& a, const ModElt& b) { return !(a == b); }
};

const char* side_symbol(Side s);

class SphMod {
public:
    explicit SphMod(std::shared_ptr<const Hecke> H);

    const Hecke& hecke() const { return *H_; }
    const WextGroup& group() const { return H_->group(); }

    ModElt basis(Side side, const Wext& x) const;
    ModElt zero(Side side) const { return ModElt{side, {}}; }
    // H_{ux} -> v^{-l(u)} M_x or (-v)^{l(u)} N_x.
    ModElt project(const Terms& h, Side side) const;
    Terms lift(const ModElt& m) const { return m.terms; }

    ModElt act_gen(const ModElt& m, int g) const;
    ModElt act_omega(const ModElt& m, const Wext& om) const;
    ModElt act_std(const ModElt& m, const Wext& y) const;
    ModElt act(const ModElt& m, const Terms& h) const;

    ModElt bar(const ModElt& m) const;
    const Terms& canonical(const Wext& x, Side side) const;
    ModElt canonical_elt(const Wext& x, Side side) const { return ModElt{side, canonical(x, side)}; }

    Terms eta(const ModElt& m) const;
    ModElt phi(const ModElt& m) const;
    ModElt phi(const ModElt& m, const Weight& sigma) const;
    ModElt iota(const ModElt& m) const;

    std::string str(const ModElt& m) const { return terms_str(group(), m.terms, side_symbol(m.side)); }

private:
    std::shared_ptr<const Hecke> H_;
    mutable std::shared_mutex mu_;
    mutable std::unordered_map<Wext, Terms, WextHash> cache_[2];

    Terms compute_canonical(const Wext& x, Side side) const;
};

}  // namespace pcanlab
