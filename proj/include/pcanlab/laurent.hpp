#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace pcanlab {

// Laurent polynomial in v with arbitrary-precision integer coefficients.
// Terms are kept sorted by exponent with no zero coefficients.
class LaurentInt {
public:
    using Term = std::pair<int, mpz_class>;

    LaurentInt() = default;
    LaurentInt(long c);
    LaurentInt(const mpz_class& c);

    static LaurentInt monomial(int exp, const mpz_class& c = 1);
    static LaurentInt v(int exp = 1) { return monomial(exp); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coeff(int exp) const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;

    LaurentInt& operator+=(const LaurentInt& o);
    LaurentInt& operator-=(const LaurentInt& o);
    LaurentInt& operator*=(const LaurentInt& o);
    LaurentInt operator-() const;

    friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
    friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
    friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
    friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentInt& a, const LaurentInt& b) { return !(a == b); }

    // v^k * this
    LaurentInt shifted(int k) const;

    std::string str() const;

private:
    std::vector<Term> terms_;
    void add_term(int exp, const mpz_class& c);
    friend LaurentInt combine(const LaurentInt&, const LaurentInt&, int);
};

LaurentInt lp_mul(const LaurentInt& a, const LaurentInt& b);
LaurentInt lp_bar(const LaurentInt& a);
LaurentInt lp_iota(const LaurentInt& a);
mpz_class lp_eval_one(const LaurentInt& a);

// Parts with exponent <= 0, < 0 and so on, used by canonical-basis reductions.
LaurentInt lp_truncate(const LaurentInt& a, int lo, int hi);

}  // namespace pcanlab
