#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcanlab {

using IntMat = std::vector<std::vector<int>>;
using Weight = std::vector<int>;

enum class LatticeKind { weight, root, custom };

// Finite-type root datum.  cartan[i][j] = <alpha_i, alpha_j^vee>.
// Weights are coordinate vectors in a fixed basis of X; coroots live in the
// dual basis so that pairing is the dot product.
class RootDatum {
public:
    static RootDatum build(const IntMat& cartan, LatticeKind kind);
    static RootDatum custom(const IntMat& cartan, const IntMat& roots, const IntMat& coroots);
    // "A2", "B3", "G2", products like "A1xA1".
    static RootDatum from_type(const std::string& name, LatticeKind kind = LatticeKind::weight);
    static IntMat cartan_of_type(const std::string& name);

    int rank() const { return static_cast<int>(cartan_.size()); }
    int dim() const { return dim_; }
    LatticeKind kind() const { return kind_; }
    const IntMat& cartan() const { return cartan_; }
    const std::vector<Weight>& simple_roots() const { return simple_roots_; }
    const std::vector<Weight>& simple_coroots() const { return simple_coroots_; }
    const std::vector<Weight>& pos_roots() const { return pos_roots_; }
    const std::vector<Weight>& pos_coroots() const { return pos_coroots_; }
    // Coordinates of each positive root in the simple-root basis.
    const std::vector<Weight>& pos_root_coeffs() const { return pos_root_coeffs_; }
    int num_components() const { return num_components_; }

    int pair(const Weight& l, const Weight& coroot) const;
    int pair_simple(const Weight& l, int i) const { return pair(l, simple_coroots_[i]); }
    Weight reflect(const Weight& l, int i) const;
    bool is_dominant(const Weight& l) const;
    // Word [i_k, ..., i_1] with v = s_{i_k}...s_{i_1} minimal and v(l) dominant.
    std::pair<std::vector<int>, Weight> finite_weyl_min_rep(const Weight& l) const;

    const Weight& two_rho() const { return two_rho_; }
    const std::optional<Weight>& rho() const { return rho_; }
    // Weight pairing to 1 with every simple coroot; throws BadSigma if none.
    Weight sigma() const;
    Weight zero() const { return Weight(dim_, 0); }

    // Roots and coroots exchanged.
    RootDatum dual() const;

private:
    IntMat cartan_;
    int dim_ = 0;
    LatticeKind kind_ = LatticeKind::weight;
    int num_components_ = 0;
    std::vector<Weight> simple_roots_, simple_coroots_;
    std::vector<Weight> pos_roots_, pos_coroots_, pos_root_coeffs_;
    Weight two_rho_;
    std::optional<Weight> rho_;

    void finish();
};

Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight scale(const Weight& a, int k);
std::string weight_str(const Weight& w);

}  // namespace pcanlab
