#pragma once

#include <climits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pcanlab/linalg.hpp"
#include "pcanlab/quiver.hpp"

namespace pcanlab {

// Finite-dimensional graded representation.  Basis vector b lives at vertex
// vert[b] in degree deg[b]; act[a] is the (dim x dim) matrix of arrow a, which
// raises the degree by one.  Shifts follow (M<n>)_m = M_{n+m}.
struct GradedModule {
    Field F;
    int nv = 0;
    std::vector<int> vert, deg;
    std::vector<std::string> label;
    std::vector<Mat> act;

    int dim() const { return static_cast<int>(vert.size()); }
    bool empty() const { return vert.empty(); }
    int dim_at(int v, int d) const;
    std::vector<int> indices(int v, int d) const;
    // (vertex, degree) -> basis indices, sorted by key.
    std::map<std::pair<int, int>, std::vector<int>> blocks() const;
    int min_degree() const;
    int max_degree() const;
    Mat act_path(const Path& p) const;
    // "vertex@degree:dim" entries in block order, e.g. "1@-1:1 2@0:1 1@1:1".
    std::string dims_str(const GradedAlgebra& A) const;
};

using Block = std::pair<int, int>;

GradedModule zero_module(const GradedAlgebra& A);
GradedModule simple(const GradedAlgebra& A, int i, int n = 0);
// P_i<n>; degrees above trunc are dropped (needed for infinite algebras).
GradedModule projective(const GradedAlgebra& A, int i, int n = 0, int trunc = INT_MAX);
// J_i<n>, the graded dual of e_i A.  Requires a finite algebra.
GradedModule injective(const GradedAlgebra& A, int i, int n = 0);
GradedModule shift(const GradedModule& M, int n);
GradedModule direct_sum(const GradedModule& M, const GradedModule& N);
// Checks degrees and that every relation acts by zero.
bool is_module(const GradedAlgebra& A, const GradedModule& M, std::string* why = nullptr);

// Sum of projectives P_{v}<-d>, one per generator (vertex v, degree d).
struct Gen {
    int vertex = 0, degree = 0;
    friend bool operator==(const Gen& x, const Gen& y) { return x.vertex == y.vertex && x.degree == y.degree; }
};
struct ProjectiveSum {
    std::vector<Gen> gens;
    GradedModule mod;
    // per basis vector: generator, path length, index into A.basis(length)
    std::vector<int> gen_of, len_of, path_of;
    std::vector<Path> paths;
    std::vector<int> gen_index;  // basis index of each generator itself
};
ProjectiveSum projective_sum(const GradedAlgebra& A, const std::vector<Gen>& gens, int trunc = INT_MAX);

// Submodule with its inclusion (columns are the basis in ambient coordinates).
struct Submodule {
    GradedModule mod;
    Mat incl;
};
// Submodule spanned block by block by the given bases, which must be closed.
Submodule submodule_from_blocks(const GradedModule& M, const std::map<Block, Mat>& basis);
// Smallest submodule containing the homogeneous vectors.
Submodule submodule_generated(const GradedModule& M, const std::vector<Vec>& vectors);
// Largest submodule contained in the blockwise subspace W.
Submodule largest_submodule_in(const GradedModule& M, const std::map<Block, Mat>& W);
Submodule kernel(const GradedModule& M, const GradedModule& N, const Mat& f);

struct Quotient {
    GradedModule mod;
    Mat proj;  // mod.dim x M.dim
};
Quotient quotient(const GradedModule& M, const Submodule& S);

// Top generators: one homogeneous vector per basis element of M / rad M.
std::vector<std::pair<Gen, Vec>> top_generators(const GradedModule& M);
// Radical and socle dimensions per block.
std::map<Block, int> top_dims(const GradedModule& M);
std::map<Block, int> socle_dims(const GradedModule& M);

// Basis of degree-zero homomorphisms M -> N, each an (N.dim x M.dim) matrix.
std::vector<Mat> hom_space(const GradedModule& M, const GradedModule& N);
int hom_dim(const GradedModule& M, const GradedModule& N, int n = 0);
// Graded isomorphism via a generic combination of a Hom basis (fixed-seed RNG).
bool is_isomorphic(const GradedModule& M, const GradedModule& N);
// dim of the trace-form quotient of End_0(M); 1 means End_0(M) is local (char 0).
int end_semisimple_rank(const GradedModule& M);

}  // namespace pcanlab
