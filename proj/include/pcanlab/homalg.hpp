#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pcanlab/gmodule.hpp"

namespace pcanlab {

// Pass/fail verdict with human-readable evidence.
struct Certificate {
    std::string name;
    bool pass = true;
    std::vector<std::string> lines;
    std::string str() const;
};

// P^k -> P^{k-1}; step 0 maps onto the resolved module.
struct ResolutionStep {
    ProjectiveSum P;
    Mat d;
};

// Minimal graded projective resolution.  Generators of degree <= trunc are
// exact; trunc is INT_MAX for finite algebras.
struct Resolution {
    GradedModule M;
    std::vector<ResolutionStep> steps;
    int trunc = 0;
    bool complete = false;  // the last kernel vanished

    const std::vector<Gen>& gens(int k) const;
    int length() const { return static_cast<int>(steps.size()) - 1; }
    // "0 -> P2<-2> -> P1<-1> -> P2 -> M -> 0" (terms listed from the highest step)
    std::string str(const GradedAlgebra& A, const std::string& name) const;
};

// Module map P -> target sending generator g to image[g].
Mat map_from_generators(const ProjectiveSum& P, const GradedModule& target, const std::vector<Vec>& image);

Resolution minimal_resolution(const GradedAlgebra& A, const GradedModule& M, int K);
// No differential has a component on a generator (entries in the radical).
bool is_minimal(const Resolution& R);

// (k, n) -> dim Ext^k(M, N<n>) for k <= kmax, via Hom(P^., N<n>).
std::map<std::pair<int, int>, int> ext_dims(const Resolution& R, const GradedModule& N, int kmax);
// Cocycle representatives of a basis of Ext^k(M, N<n>): one vector of N per
// generator of P^k (zero outside the matching block).
std::vector<std::vector<Vec>> ext_classes(const Resolution& R, const GradedModule& N, int k, int n);

// (i, j, k, n) -> dim Ext^k(L_i, L_j<n>), read off minimal resolutions.
using ExtTable = std::map<std::tuple<int, int, int, int>, int>;
ExtTable ext_table(const GradedAlgebra& A, int K);

// A class of Ext^k(L_src, L_tgt<n>), as coefficients on the generators of
// P^k(L_src) at (tgt, -n).
struct ExtClass {
    int src = 0, tgt = 0, k = 0, n = 0;
    Vec coeffs;
    bool is_zero() const;
};
// Generators of P^k(L_src) at (tgt, -n), in resolution order.
std::vector<int> ext_generators(const Resolution& R, int k, int tgt, int n);
// Identity of Ext^0(L_i, L_i).
ExtClass ext_identity(const GradedAlgebra& A, int i);
// The degree-1 class dual to an arrow a: i -> j, in Ext^1(L_i, L_j<-1>).
ExtClass ext_class_of_arrow(const GradedAlgebra& A, const std::string& arrow);
// eta o xi, lifted through the minimal resolutions.  Throws NotComposable.
ExtClass yoneda_product(const GradedAlgebra& A, const ExtClass& eta, const ExtClass& xi);

// Generators of the k-th step of every simple have degree exactly k.
Certificate koszul_check(const GradedAlgebra& A, int K);

struct ExtAlgebra {
    std::vector<int> dims;  // dim of the diagonal E^k_{-k}, k = 0..K
    std::optional<GradedAlgebra> presentation;
    AlgebraIso dual_match;  // against quadratic_dual(A) when A is quadratic
    std::vector<std::string> lines;
};
// A^! = E^op read from degrees 0, 1, 2.  Throws NotKoszulInRange.
ExtAlgebra ext_algebra(const GradedAlgebra& A, int K);

}  // namespace pcanlab
