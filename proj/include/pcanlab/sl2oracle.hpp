#pragma once

#include <map>
#include <string>

namespace pcanlab {

// Formal character of an SL2-module: weight (multiple of varpi) -> multiplicity.
using CharZ = std::map<int, long long>;

CharZ weyl_char(int a);
CharZ sl2_tilting_char(int lambda, int p);
// Coordinates in the Weyl-character basis; throws NotSymmetric.
std::map<int, long long> weyl_decompose(const CharZ& c);
CharZ recompose(const std::map<int, long long>& coords);

CharZ char_mul(const CharZ& a, const CharZ& b);
// Frobenius twist: x^k -> x^{pk}.
CharZ char_twist(const CharZ& c, int p);
std::string char_str(const CharZ& c);

// (T(lambda) : N(mu)) for all mu.
std::map<int, long long> tilting_multiplicities(int lambda, int p);

}  // namespace pcanlab
