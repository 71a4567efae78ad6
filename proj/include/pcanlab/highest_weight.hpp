#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "pcanlab/homalg.hpp"

namespace pcanlab {

// Total order on the vertices, lowest first.  Accepts "1<2<3" or "1,2,3".
std::vector<int> parse_order(const GradedAlgebra& A, const std::string& text);

struct QHStructure {
    std::vector<int> order;  // lowest first
    std::vector<int> rank;   // position of each vertex in the order
    std::vector<GradedModule> standard, costandard;
    std::vector<Certificate> axioms;  // (1)..(4)
    bool pass = false;
    int failed_axiom = 0;  // first failing axiom, 0 when all pass

    bool below(int j, int i) const { return rank[j] < rank[i]; }
    std::string str(const GradedAlgebra& A) const;
};

// Delta_i: largest quotient of P_i with composition factors <= i;
// nabla_i: largest submodule of J_i with composition factors <= i.
// Requires a finite algebra.  Failure is reported, not thrown.
QHStructure qh_structure(const GradedAlgebra& A, const std::vector<int>& order);

// Ext^k(Delta_i, L_j<n>) and Ext^k(L_i, nabla_j<n>) vanish unless n = -k.
Certificate qh_koszul_check(const GradedAlgebra& A, const QHStructure& Q, int K);

struct Tilting {
    int vertex = 0;
    GradedModule T;
    // (j, n) -> (T : Delta_j<n>) and (T : nabla_j<n>)
    std::map<std::pair<int, int>, int> delta_mult, nabla_mult;
    Certificate cert;
};
// Universal extensions of Delta_i by the Delta_j<n>, j < i.
Tilting tilting_module(const GradedAlgebra& A, const QHStructure& Q, int i);

struct RingelDual {
    std::vector<Tilting> tiltings;
    // (i, j, n) -> dim Hom(T_i, T_j<n>)
    std::map<std::tuple<int, int, int>, int> hom_dims;
    bool presented = false;
    std::optional<GradedAlgebra> algebra;
    std::vector<int> opposite_order;
    std::optional<QHStructure> qh;
    std::vector<std::string> lines;
};
// End(+T_i)^op with A#_n = + Hom(T_i, T_j<n>); a map T_i -> T_j<1> is an
// arrow j -> i.  Presented by a quiver when A#_0 is semisimple, A#_n = 0 for
// n < 0, and A# is generated in degree one.
RingelDual ringel_dual(const GradedAlgebra& A, const QHStructure& Q);

enum class Parity { even, odd, parity, neither };
std::string parity_name(Parity p);

// One summand M[shift] of a complex concentrated in a single module.
struct ParitySummand {
    std::string name;
    GradedModule M;
    int shift = 0;
};
struct ParityResult {
    Parity verdict = Parity::neither;
    std::vector<Parity> summands;
    // verdict from the Hom(X, nabla_i<a>[k]) family alone
    std::vector<Parity> costandard_side;
    std::vector<std::string> lines;
};
// Parity for <<1>> = <-1>[1]: every nonzero Hom(Delta_i, X<a>[k]) and
// Hom(X, nabla_i<a>[k]) has a + k = dag(i) mod 2 (even) or dag(i) + 1 (odd).
ParityResult parity_check(const GradedAlgebra& A, const QHStructure& Q, const std::vector<ParitySummand>& X,
                          const std::vector<int>& dag, int K = 4);
// dag with Hom(Delta_i, T_j<n>) != 0 => n = dag(i) + dag(j), normalized to 0 on
// the first vertex of each component; empty when inconsistent.
std::optional<std::vector<int>> dag_from_tiltings(const GradedAlgebra& A, const QHStructure& Q,
                                                  const std::vector<Tilting>& T);

}  // namespace pcanlab
