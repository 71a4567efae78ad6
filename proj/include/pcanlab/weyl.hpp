#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "pcanlab/rootdata.hpp"

namespace pcanlab {

// Finite Weyl group of a root datum, realized by its action on X.
class FiniteWeyl {
public:
    explicit FiniteWeyl(const RootDatum& rd);

    int size() const { return static_cast<int>(mats_.size()); }
    int rank() const { return rank_; }
    int gen(int i) const { return gens_[i]; }
    int mul(int a, int b) const;
    int inv(int a) const { return inv_[a]; }
    int length(int a) const { return len_[a]; }
    int longest() const { return w0_; }
    const std::vector<int>& word(int a) const { return words_[a]; }
    int from_word(const std::vector<int>& w) const;
    Weight act(int a, const Weight& l) const;
    // Index of w(alpha_r) among positive roots, negated minus one if negative.
    int root_image(int a, int r) const { return root_image_[a][r]; }
    bool sends_positive(int a, int r) const { return root_image_[a][r] >= 0; }

private:
    int rank_ = 0, dim_ = 0, w0_ = 0;
    std::vector<IntMat> mats_;
    std::map<IntMat, int> index_;
    std::vector<int> gens_, inv_, len_;
    std::vector<std::vector<int>> words_, table_, root_image_;
};

constexpr int kMaxRank = 8;

// w * t_lambda with w an index into the finite Weyl group.
struct Wext {
    int w = 0;
    std::array<int32_t, kMaxRank> t{};

    friend bool operator==(const Wext& a, const Wext& b) { return a.w == b.w && a.t == b.t; }
    friend bool operator!=(const Wext& a, const Wext& b) { return !(a == b); }
    friend bool operator<(const Wext& a, const Wext& b) {
        if (a.w != b.w) return a.w < b.w;
        return a.t < b.t;
    }
};

struct WextHash {
    size_t operator()(const Wext& x) const {
        uint64_t h = 1469598103934665603ull ^ static_cast<uint64_t>(x.w);
        for (int32_t c : x.t) h = (h ^ static_cast<uint32_t>(c)) * 1099511628211ull;
        return static_cast<size_t>(h);
    }
};

// Which side of the datum the translation lattice lives on.
enum class PairingSide { coroots, roots };

struct OmegaDecomposition {
    Wext omega;
    std::vector<int> word;  // indices into WextGroup::gens()
};

// Extended affine Weyl group W |x X with the closed length formula.
class WextGroup {
public:
    WextGroup(RootDatum rd, PairingSide side = PairingSide::coroots);
    // "A1-affine-ext", "A2-affine", "A3-finite" and similar tags.
    static std::shared_ptr<WextGroup> from_tag(const std::string& tag);

    const RootDatum& datum() const { return rd_; }
    const FiniteWeyl& fin() const { return fin_; }
    int dim() const { return rd_.dim(); }
    const std::string& tag() const { return tag_; }
    void set_tag(std::string t) { tag_ = std::move(t); }

    Wext e() const { return Wext{}; }
    Wext make(int w, const Weight& t) const;
    Wext translation(const Weight& t) const { return make(0, t); }
    Wext finite(int w) const { return make(w, rd_.zero()); }
    Weight trans(const Wext& x) const;

    Wext mul(const Wext& x, const Wext& y) const;
    Wext inv(const Wext& x) const;
    int length(const Wext& x) const;

    // gens()[0] is an affine reflection, gens()[1..r] are the finite s_i.
    const std::vector<Wext>& gens() const { return gens_; }
    int num_gens() const { return static_cast<int>(gens_.size()); }
    int finite_gen(int i) const { return i + 1; }
    bool is_finite_gen(int g) const { return g >= 1 && g <= rd_.rank(); }

    OmegaDecomposition omega_split(const Wext& x) const;
    std::vector<int> reduced_word(const Wext& x) const { return omega_split(x).word; }
    Wext from_word(const Wext& omega, const std::vector<int>& word) const;
    const std::vector<Wext>& omegas() const { return omegas_; }
    int omega_index(const Wext& omega) const;
    bool in_affine(const Wext& x) const { return omega_split(x).omega == e(); }

    bool bruhat_leq(const Wext& x, const Wext& y) const;
    bool coset_min(const Wext& x) const;
    bool right_descent(const Wext& x, int g) const { return length(mul(x, gens_[g])) < length(x); }
    bool left_descent(const Wext& x, int g) const { return length(mul(gens_[g], x)) < length(x); }
    // Left-reduce by finite simple reflections: x = u * result, returns l(u).
    Wext min_coset_rep(const Wext& x, int* ul = nullptr) const;

    Wext w_lambda(const Weight& l) const;
    Wext x_mu(const Weight& mu) const;
    Wext w0() const { return finite(fin_.longest()); }
    Wext t_sigma() const { return translation(rd_.sigma()); }

    Weight dot_p(const Wext& x, const Weight& mu, int p) const;
    bool is_restricted(const Wext& x, int p) const;

    // All elements of length <= L, ordered by (length, omega index, word).
    std::vector<Wext> elements_up_to(int L) const;

    std::string str(const Wext& x) const;
    // Inverse of str(), extended by '*'-products of e, w0, t_sigma, oK, sI,
    // t(a,b,..), w_lambda(..) and x_mu(..).  Throws ParseError.
    Wext parse(const std::string& s) const;
    // Total order used for deterministic output.
    bool canonical_less(const Wext& a, const Wext& b) const;

private:
    RootDatum rd_;
    PairingSide side_;
    FiniteWeyl fin_;
    std::vector<Wext> gens_, omegas_;
    std::string tag_;

    void find_generators();
    void find_omegas();
};

}  // namespace pcanlab
