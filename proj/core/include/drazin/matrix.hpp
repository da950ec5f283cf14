#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "drazin/scalar.hpp"

namespace drazin {

/// Dense matrix over Q(i), row-major.  Algebra elements are square;
/// rectangular matrices appear only inside full-rank factorization,
/// basis bookkeeping and kernel output.  Zero-dimensional matrices are
/// legal (they carry the empty restriction of a trivial subspace).
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    Gaussian& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Gaussian& operator()(std::size_t i, std::size_t j) const {
        return data_[i * cols_ + j];
    }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;

    /// Scalar multiple.
    Matrix scaled(const Gaussian& s) const;

    /// A^e with A^0 = identity; requires a square matrix.
    Matrix pow(std::size_t e) const;

    Matrix transpose() const;

    Matrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
    void set_block(std::size_t i0, std::size_t j0, const Matrix& m);

    /// Columns at the given indices, in order.
    Matrix columns(const std::vector<std::size_t>& idx) const;

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    void swap_rows(std::size_t r1, std::size_t r2);

private:
    std::size_t rows_, cols_;
    std::vector<Gaussian> data_;
};

Matrix operator*(const Gaussian& s, const Matrix& m);

/// Build a matrix from row literals, e.g. matrix_of({{0, 1}, {0, 0}}).
Matrix matrix_of(std::initializer_list<std::initializer_list<Gaussian>> rows);

/// [a | b] side by side.
Matrix hcat(const Matrix& a, const Matrix& b);

/// Block diagonal a (+) b.
Matrix direct_sum(const Matrix& a, const Matrix& b);

/// "RxC" for error messages.
std::string shape_string(const Matrix& m);

/// Reduced row echelon data.  The RREF is unique; pivoting takes the
/// first nonzero entry in column order, so the whole record is
/// deterministic.  kernel columns v satisfy a*v = 0 and are linearly
/// independent; rank + kernel.cols() == a.cols().
struct RrefResult {
    std::size_t rank = 0;
    Matrix rref;
    std::vector<std::size_t> pivot_columns;
    Matrix kernel; // a.cols() x (a.cols() - rank)
};

RrefResult rref_decompose(const Matrix& a);

std::size_t rank_of(const Matrix& a);

/// Determinant of a square matrix (1 for the 0x0 matrix).
Gaussian determinant(const Matrix& a);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> try_inverse(const Matrix& a);

/// a = basis * coords with basis of full column rank and coords of full
/// row rank, both of rank(a).  nullopt is the zero verdict (a == 0).
struct FullRankFactors {
    Matrix basis;  // n x r, the pivot columns of a
    Matrix coords; // r x n, the nonzero rows of rref(a)
};

std::optional<FullRankFactors> full_rank_factorize(const Matrix& a);

/// Nilpotency verdict; when nilpotent, exponent is the least m with
/// a^m = 0.  Powers are formed by repeated squaring and the least
/// exponent located by bisection over the stored squares.
struct Nilpotency {
    bool nilpotent = false;
    std::size_t exponent = 0;
};

Nilpotency nilpotency(const Matrix& a);

inline bool is_nilpotent(const Matrix& a) { return nilpotency(a).nilpotent; }

bool commutes(const Matrix& a, const Matrix& b);

/// Solve a * x = rhs exactly (free variables set to zero);
/// nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs);

/// Coefficients c_0..c_d with sum c_i a^i = b, found at the least
/// degree; nullopt when b is outside the unital algebra generated by a.
/// The search stops once the span of powers stabilizes (it can never
/// grow again) or the degree exceeds n^2.
std::optional<std::vector<Gaussian>> express_as_polynomial(const Matrix& a,
                                                           const Matrix& b);

/// sum c_i a^i.
Matrix eval_polynomial(const Matrix& a, const std::vector<Gaussian>& coeffs);

namespace detail {
void require_square(const Matrix& a, const char* op);
void require_same_shape(const Matrix& a, const Matrix& b, const char* op);
void require_square_pair(const Matrix& a, const Matrix& b, const char* op);
} // namespace detail

} // namespace drazin
