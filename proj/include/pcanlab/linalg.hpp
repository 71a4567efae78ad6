#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace pcanlab {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// The rationals (p = 0) or the prime field F_p.  Elements of F_p are kept as
// integers in [0, p).
struct Field {
    int p = 0;

    void norm(Scalar& x) const;
    Scalar make(long n) const;
    Scalar inv(const Scalar& x) const;
    std::string name() const { return p == 0 ? "Q" : "F_" + std::to_string(p); }
};

// Dense row-major matrix.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
    static Mat identity(int n);

    Scalar& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Scalar& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
    bool is_zero() const;
    Vec col(int j) const;
    void set_col(int j, const Vec& v);
    friend bool operator==(const Mat& x, const Mat& y) { return x.rows == y.rows && x.cols == y.cols && x.a == y.a; }
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Vec mat_vec(const Field& F, const Mat& x, const Vec& v);
Mat mat_add(const Field& F, const Mat& x, const Mat& y, const Scalar& c = 1);
Mat hcat(const Mat& x, const Mat& y);
Mat vcat(const Mat& x, const Mat& y);
Mat from_cols(int rows, const std::vector<Vec>& cols);

// Reduced row echelon form; pivots[r] is the pivot column of row r.
struct Echelon {
    Mat r;
    std::vector<int> pivots;
};
Echelon rref(const Field& F, Mat m);
int rank(const Field& F, const Mat& m);
// Columns span the kernel.
Mat nullspace(const Field& F, const Mat& m);
// Some x with m x = b.
std::optional<Vec> solve(const Field& F, const Mat& m, const Vec& b);
// Columns of a basis of the column space, chosen among the given columns.
Mat column_basis(const Field& F, const Mat& m);
// Extends the independent columns of `basis` by unit vectors to a basis of
// F^n and returns only the added unit vector indices.
std::vector<int> complement_units(const Field& F, const Mat& basis, int n);
std::string scalar_str(const Scalar& x);

}  // namespace pcanlab
