#include "pcanlab/sl2oracle.hpp"

#include <stdexcept>

#include "pcanlab/errors.hpp"

namespace pcanlab {

namespace {

void bump(CharZ& c, int k, long long m) {
    if (m == 0) return;
    auto& x = c[k];
    x += m;
    if (x == 0) c.erase(k);
}

}  // namespace

CharZ weyl_char(int a) {
    if (a < 0) throw std::invalid_argument("weyl_char needs a >= 0");
    CharZ c;
    for (int k = -a; k <= a; k += 2) c[k] = 1;
    return c;
}

CharZ char_mul(const CharZ& a, const CharZ& b) {
    CharZ r;
    for (const auto& [ka, ma] : a)
        for (const auto& [kb, mb] : b) bump(r, ka + kb, ma * mb);
    return r;
}

CharZ char_twist(const CharZ& c, int p) {
    CharZ r;
    for (const auto& [k, m] : c) r[k * p] = m;
    return r;
}

CharZ sl2_tilting_char(int lambda, int p) {
    if (p < 2) throw std::invalid_argument("p must be at least 2");
    if (lambda < 0) throw std::invalid_argument("lambda must be nonnegative");
    if (lambda <= p - 1) return weyl_char(lambda);
    if (lambda <= 2 * p - 2) {
        CharZ c = weyl_char(lambda);
        int other = 2 * p - 2 - lambda;
        if (other != lambda)
            for (const auto& [k, m] : weyl_char(other)) bump(c, k, m);
        return c;
    }
    int l0 = (lambda - (p - 1)) % p + (p - 1);
    int l1 = (lambda - l0) / p;
    return char_mul(sl2_tilting_char(l0, p), char_twist(sl2_tilting_char(l1, p), p));
}

std::map<int, long long> weyl_decompose(const CharZ& c0) {
    for (const auto& [k, m] : c0) {
        auto it = c0.find(-k);
        if (it == c0.end() || it->second != m) throw NotSymmetric("character is not W-invariant");
    }
    CharZ c = c0;
    std::map<int, long long> out;
    while (!c.empty()) {
        auto [top, m] = *c.rbegin();
        if (top < 0) throw NotSymmetric("negative leading weight");
        out[top] = m;
        for (const auto& [k, x] : weyl_char(top)) bump(c, k, -m * x);
    }
    return out;
}

CharZ recompose(const std::map<int, long long>& coords) {
    CharZ c;
    for (const auto& [a, m] : coords)
        for (const auto& [k, x] : weyl_char(a)) bump(c, k, m * x);
    return c;
}

std::map<int, long long> tilting_multiplicities(int lambda, int p) {
    return weyl_decompose(sl2_tilting_char(lambda, p));
}

std::string char_str(const CharZ& c) {
    std::string s = "{";
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (!first) s += ", ";
        first = false;
        s += std::to_string(it->first) + ":" + std::to_string(it->second);
    }
    return s + "}";
}

}  // namespace pcanlab
