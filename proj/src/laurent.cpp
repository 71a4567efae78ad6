#include "pcanlab/laurent.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pcanlab {

LaurentInt::LaurentInt(long c) {
    if (c != 0) terms_.emplace_back(0, mpz_class(c));
}

LaurentInt::LaurentInt(const mpz_class& c) {
    if (c != 0) terms_.emplace_back(0, c);
}

LaurentInt LaurentInt::monomial(int exp, const mpz_class& c) {
    LaurentInt r;
    if (c != 0) r.terms_.emplace_back(exp, c);
    return r;
}

mpz_class LaurentInt::coeff(int exp) const {
    for (const auto& [e, c] : terms_)
        if (e == exp) return c;
    return 0;
}

int LaurentInt::min_exp() const {
    if (terms_.empty()) throw std::logic_error("min_exp of zero polynomial");
    return terms_.front().first;
}

int LaurentInt::max_exp() const {
    if (terms_.empty()) throw std::logic_error("max_exp of zero polynomial");
    return terms_.back().first;
}

void LaurentInt::add_term(int exp, const mpz_class& c) {
    if (c == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, int e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{exp, c});
    }
}

// Merge of two sorted term lists; sign is +1 or -1.
LaurentInt combine(const LaurentInt& a, const LaurentInt& b, int sign) {
    LaurentInt r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            r.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            r.terms_.emplace_back(j->first, sign > 0 ? j->second : mpz_class(-j->second));
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(i->second + j->second) : mpz_class(i->second - j->second);
            if (c != 0) r.terms_.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
    if (o.terms_.size() == 1) {
        add_term(o.terms_[0].first, o.terms_[0].second);
        return *this;
    }
    *this = combine(*this, o, 1);
    return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
    *this = combine(*this, o, -1);
    return *this;
}

LaurentInt LaurentInt::operator-() const {
    LaurentInt r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1 && b.terms_[0].second == 1) return a.shifted(b.terms_[0].first);
    if (a.terms_.size() == 1 && a.terms_[0].second == 1) return b.shifted(a.terms_[0].first);
    std::map<int, mpz_class> acc;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
    LaurentInt r;
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& o) {
    *this = *this * o;
    return *this;
}

LaurentInt LaurentInt::shifted(int k) const {
    LaurentInt r = *this;
    for (auto& t : r.terms_) t.first += k;
    return r;
}

std::string LaurentInt::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        mpz_class a = abs(c);
        if (first) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        first = false;
        bool unit = (a == 1);
        if (!unit || e == 0) s += a.get_str();
        if (e != 0) {
            if (!unit) s += "*";
            s += "v";
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

LaurentInt lp_mul(const LaurentInt& a, const LaurentInt& b) { return a * b; }

LaurentInt lp_bar(const LaurentInt& a) {
    LaurentInt r;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) r += LaurentInt::monomial(-it->first, it->second);
    return r;
}

LaurentInt lp_iota(const LaurentInt& a) {
    LaurentInt r;
    for (auto it = a.terms().rbegin(); it != a.terms().rend(); ++it) {
        mpz_class c = (it->first % 2 == 0) ? it->second : mpz_class(-it->second);
        r += LaurentInt::monomial(-it->first, c);
    }
    return r;
}

mpz_class lp_eval_one(const LaurentInt& a) {
    mpz_class s = 0;
    for (const auto& t : a.terms()) s += t.second;
    return s;
}

LaurentInt lp_truncate(const LaurentInt& a, int lo, int hi) {
    LaurentInt r;
    for (const auto& [e, c] : a.terms())
        if (e >= lo && e <= hi) r += LaurentInt::monomial(e, c);
    return r;
}

}  // namespace pcanlab
