#pragma once

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "pcanlab/linalg.hpp"

namespace pcanlab {

struct Arrow {
    std::string name;
    int from = 0, to = 0;
};

// A path stored in traversal order; arrows.empty() means the idempotent of
// vertex src.  Printed with the composition convention: "a*b" is b then a.
struct Path {
    std::vector<int> arrows;
    int src = 0, tgt = 0;
    int length() const { return static_cast<int>(arrows.size()); }
    friend bool operator<(const Path& x, const Path& y) {
        return std::tie(x.arrows, x.src) < std::tie(y.arrows, y.src);
    }
    friend bool operator==(const Path& x, const Path& y) { return x.arrows == y.arrows && x.src == y.src; }
};

// Linear combination of paths of one length.
using PathComb = std::vector<std::pair<Scalar, Path>>;

// Path algebra of a finite quiver modulo homogeneous relations (paths have
// degree 1 per arrow), presented degree by degree up to a bound.
class GradedAlgebra {
public:
    GradedAlgebra(std::vector<std::string> vertices, std::vector<Arrow> arrows, std::vector<PathComb> relations,
                  Field F = {}, int degree_bound = 8);

    // Relations in the text form "a*b - 2*b*a".
    static GradedAlgebra parse(std::vector<std::string> vertices, std::vector<Arrow> arrows,
                               const std::vector<std::string>& relations, Field F = {}, int degree_bound = 8);
    // R, Rstar, R_ab, Rstar_ab, R_ab_ba, Rstar_ab_ba, ext2, sym2, kx3, A4_cubic,
    // semisimple2, R_ab_pair.
    static GradedAlgebra preset(const std::string& name, Field F = {}, int degree_bound = 8);
    static std::vector<std::string> preset_names();

    const Field& field() const { return F_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_index(const std::string& name) const;
    const std::vector<PathComb>& relations() const { return relations_; }
    int degree_bound() const { return bound_; }
    // Largest nonzero degree, or -1 when A_d != 0 for every computed d.
    int top_degree() const { return top_; }
    bool finite() const { return top_ >= 0; }
    // Degrees with a computed basis: 0..computed_degree().
    int computed_degree() const { return static_cast<int>(basis_.size()) - 1; }

    // All paths of length d and the quotient basis (a subset of them).
    const std::vector<Path>& paths(int d) const { return paths_.at(d); }
    const std::vector<Path>& basis(int d) const;
    int dim(int d) const;
    int dim(int d, int src, int tgt) const;
    int total_dim() const;
    // Indices into basis(d) of the elements from src to tgt.
    const std::vector<int>& basis_between(int d, int src, int tgt) const;

    // Coordinates in basis(d) of a path of length d.
    Vec reduce(const Path& p) const;
    Vec reduce(const PathComb& c) const;
    // Is the combination zero in A?
    bool is_zero(const PathComb& c) const { return c.empty() ? true : reduce(c) == Vec(dim(c.front().second.length())); }
    // Subspace of relations in degree d, as echelon rows over paths(d).
    const Echelon& ideal(int d) const { return ideal_.at(d); }

    std::string path_str(const Path& p) const;
    std::string comb_str(const PathComb& c) const;
    // Echelon basis of the ideal in degree 2 (or d), printed.
    std::vector<std::string> relation_strings(int d) const;
    std::string summary() const;

private:
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<PathComb> relations_;
    Field F_;
    int bound_ = 8;
    int top_ = -1;
    std::vector<std::vector<Path>> paths_;
    std::vector<std::map<Path, int>> index_;
    std::vector<Echelon> ideal_;
    std::vector<std::vector<Path>> basis_;
    std::vector<std::vector<int>> basis_pos_;  // path index -> basis index or -1
    std::vector<std::map<std::pair<int, int>, std::vector<int>>> between_;

    void compute();
};

Path concat(const Path& first, const Path& then);
PathComb parse_comb(const std::string& text, const std::vector<Arrow>& arrows);

// T(V*)/(R^perp) on the opposite quiver.  The arrow a: i -> j becomes a^: j -> i
// (a trailing ^ is removed instead of doubled) and the pairing matches the
// path x1*x2 with x2^*x1^.  Throws NotQuadratic.
GradedAlgebra quadratic_dual(const GradedAlgebra& A);

// Same vertex count, arrows matched under a vertex permutation, equal relation
// spaces up to rescaling arrows by +-1.  Empty when none is found; otherwise
// lines describing the isomorphism.
struct AlgebraIso {
    bool found = false;
    std::vector<int> vertex_map;
    std::vector<int> arrow_map;
    std::vector<int> arrow_sign;
    std::vector<std::string> lines;
};
AlgebraIso find_isomorphism(const GradedAlgebra& A, const GradedAlgebra& B, int max_degree = -1);

}  // namespace pcanlab
