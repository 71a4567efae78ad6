#include "pcanlab/linalg.hpp"

#include <stdexcept>

namespace pcanlab {

void Field::norm(Scalar& x) const {
    x.canonicalize();
    if (p == 0) return;
    mpz_class m(p), num = x.get_num() % m, den = x.get_den() % m;
    if (num < 0) num += m;
    if (den < 0) den += m;
    if (den == 0) throw std::domain_error("denominator divisible by p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
    x = Scalar((num * inv) % m);
}

Scalar Field::make(long n) const {
    Scalar x(n);
    norm(x);
    return x;
}

Scalar Field::inv(const Scalar& x) const {
    if (x == 0) throw std::domain_error("division by zero");
    Scalar r = 1 / x;
    norm(r);
    return r;
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

Vec Mat::col(int j) const {
    Vec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_col(int j, const Vec& v) {
    for (int i = 0; i < rows; ++i) (*this)(i, j) = v[i];
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not match");
    Mat r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& c = x(i, k);
            if (c == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) r(i, j) += c * y(k, j);
        }
    for (auto& e : r.a) F.norm(e);
    return r;
}

Vec mat_vec(const Field& F, const Mat& x, const Vec& v) {
    if (x.cols != static_cast<int>(v.size())) throw std::invalid_argument("matrix and vector do not match");
    Vec r(x.rows);
    for (int i = 0; i < x.rows; ++i) {
        for (int k = 0; k < x.cols; ++k)
            if (v[k] != 0 && x(i, k) != 0) r[i] += x(i, k) * v[k];
        F.norm(r[i]);
    }
    return r;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y, const Scalar& c) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shapes do not match");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) {
        r.a[i] += c * y.a[i];
        F.norm(r.a[i]);
    }
    return r;
}

Mat hcat(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) throw std::invalid_argument("hcat: row counts differ");
    Mat r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
}

Mat vcat(const Mat& x, const Mat& y) {
    if (x.cols != y.cols) throw std::invalid_argument("vcat: column counts differ");
    Mat r(x.rows + y.rows, x.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int i = 0; i < y.rows; ++i)
        for (int j = 0; j < y.cols; ++j) r(x.rows + i, j) = y(i, j);
    return r;
}

Mat from_cols(int rows, const std::vector<Vec>& cols) {
    Mat m(rows, static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j) m.set_col(static_cast<int>(j), cols[j]);
    return m;
}

Echelon rref(const Field& F, Mat m) {
    Echelon e;
    int row = 0;
    for (int c = 0; c < m.cols && row < m.rows; ++c) {
        int piv = -1;
        for (int i = row; i < m.rows; ++i)
            if (m(i, c) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(row, j));
        Scalar inv = F.inv(m(row, c));
        for (int j = c; j < m.cols; ++j) {
            m(row, j) *= inv;
            F.norm(m(row, j));
        }
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m(i, c) == 0) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols; ++j) {
                if (m(row, j) == 0) continue;
                m(i, j) -= f * m(row, j);
                F.norm(m(i, j));
            }
        }
        e.pivots.push_back(c);
        ++row;
    }
    Mat r(row, m.cols);
    for (int i = 0; i < row; ++i)
        for (int j = 0; j < m.cols; ++j) r(i, j) = m(i, j);
    e.r = std::move(r);
    return e;
}

int rank(const Field& F, const Mat& m) { return static_cast<int>(rref(F, m).pivots.size()); }

Mat nullspace(const Field& F, const Mat& m) {
    Echelon e = rref(F, m);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : e.pivots) is_piv[c] = true;
    std::vector<Vec> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_piv[f]) continue;
        Vec v(m.cols);
        v[f] = 1;
        for (size_t r = 0; r < e.pivots.size(); ++r) {
            v[e.pivots[r]] = -e.r(static_cast<int>(r), f);
            F.norm(v[e.pivots[r]]);
        }
        basis.push_back(v);
    }
    return from_cols(m.cols, basis);
}

std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b) {
    Mat aug(m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug(i, j) = m(i, j);
        aug(i, m.cols) = b[i];
    }
    Echelon e = rref(F, aug);
    Vec x(m.cols);
    for (size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols) return std::nullopt;
        x[e.pivots[r]] = e.r(static_cast<int>(r), m.cols);
    }
    return x;
}

Mat column_basis(const Field& F, const Mat& m) {
    Echelon e = rref(F, m);
    std::vector<Vec> cols;
    for (int c : e.pivots) cols.push_back(m.col(c));
    return from_cols(m.rows, cols);
}

std::vector<int> complement_units(const Field& F, const Mat& basis, int n) {
    Mat cur = basis;
    if (cur.rows == 0 && cur.cols == 0) cur = Mat(n, 0);
    int r = rank(F, cur);
    std::vector<int> added;
    for (int k = 0; k < n && r < n; ++k) {
        Mat u(n, 1);
        u(k, 0) = 1;
        Mat next = hcat(cur, u);
        int r2 = rank(F, next);
        if (r2 > r) {
            cur = next;
            r = r2;
            added.push_back(k);
        }
    }
    return added;
}

std::string scalar_str(const Scalar& x) { return x.get_str(); }

}  // namespace pcanlab
