#include "drazin/matrix.hpp"

#include <algorithm>
#include <utility>

namespace drazin {

namespace detail {

void require_square(const Matrix& a, const char* op) {
    if (!a.is_square()) {
        throw ShapeError(std::string(op) + ": matrix must be square, got " +
                         shape_string(a));
    }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError(std::string(op) + ": shape mismatch " + shape_string(a) +
                         " vs " + shape_string(b));
    }
}

void require_square_pair(const Matrix& a, const Matrix& b, const char* op) {
    require_square(a, op);
    require_square(b, op);
    require_same_shape(a, b, op);
}

} // namespace detail

std::string shape_string(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Gaussian(1);
    }
    return m;
}

bool Matrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Gaussian& z) { return z.is_zero(); });
}

bool Matrix::is_identity() const {
    if (!is_square()) {
        return false;
    }
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if ((*this)(i, j) != (i == j ? Gaussian(1) : Gaussian(0))) {
                return false;
            }
        }
    }
    return true;
}

Matrix Matrix::operator+(const Matrix& o) const {
    detail::require_same_shape(*this, o, "add");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] + o.data_[k];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    detail::require_same_shape(*this, o, "subtract");
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] - o.data_[k];
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = -data_[k];
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) {
        throw ShapeError("multiply: shape mismatch " + shape_string(*this) + " vs " +
                         shape_string(o));
    }
    Matrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Gaussian& x = (*this)(i, k);
            if (x.is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < o.cols_; ++j) {
                out(i, j) += x * o(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::scaled(const Gaussian& s) const {
    Matrix out(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) {
        out.data_[k] = data_[k] * s;
    }
    return out;
}

Matrix operator*(const Gaussian& s, const Matrix& m) {
    return m.scaled(s);
}

Matrix Matrix::pow(std::size_t e) const {
    detail::require_square(*this, "pow");
    Matrix result = identity(rows_);
    Matrix base = *this;
    while (e > 0) {
        if (e & 1U) {
            result = result * base;
        }
        e >>= 1U;
        if (e > 0) {
            base = base * base;
        }
    }
    return result;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            out(j, i) = (*this)(i, j);
        }
    }
    return out;
}

Matrix Matrix::block(std::size_t i0, std::size_t j0, std::size_t r,
                     std::size_t c) const {
    if (i0 + r > rows_ || j0 + c > cols_) {
        throw ShapeError("block: " + std::to_string(r) + "x" + std::to_string(c) +
                         " at (" + std::to_string(i0) + "," + std::to_string(j0) +
                         ") exceeds " + shape_string(*this));
    }
    Matrix out(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            out(i, j) = (*this)(i0 + i, j0 + j);
        }
    }
    return out;
}

void Matrix::set_block(std::size_t i0, std::size_t j0, const Matrix& m) {
    if (i0 + m.rows() > rows_ || j0 + m.cols() > cols_) {
        throw ShapeError("set_block: " + shape_string(m) + " at (" +
                         std::to_string(i0) + "," + std::to_string(j0) +
                         ") exceeds " + shape_string(*this));
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            (*this)(i0 + i, j0 + j) = m(i, j);
        }
    }
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix out(rows_, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
        for (std::size_t i = 0; i < rows_; ++i) {
            out(i, j) = (*this)(i, idx[j]);
        }
    }
    return out;
}

void Matrix::swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) {
        return;
    }
    for (std::size_t j = 0; j < cols_; ++j) {
        std::swap((*this)(r1, j), (*this)(r2, j));
    }
}

Matrix matrix_of(std::initializer_list<std::initializer_list<Gaussian>> rows) {
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix out(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw ShapeError("matrix_of: ragged rows");
        }
        std::size_t j = 0;
        for (const auto& z : row) {
            out(i, j++) = z;
        }
        ++i;
    }
    return out;
}

Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) {
        throw ShapeError("hcat: shape mismatch " + shape_string(a) + " vs " +
                         shape_string(b));
    }
    Matrix out(a.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(0, a.cols(), b);
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    out.set_block(0, 0, a);
    out.set_block(a.rows(), a.cols(), b);
    return out;
}

namespace {

// In-place Gauss-Jordan over the first pivot_limit columns; pivot is the
// first nonzero entry in column order.  Returns pivot column indices.
std::vector<std::size_t> gauss_jordan(Matrix& m, std::size_t pivot_limit) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) {
            ++sel;
        }
        if (sel == m.rows()) {
            continue;
        }
        m.swap_rows(row, sel);
        Gaussian inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) {
            m(row, j) *= inv;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) {
                continue;
            }
            Gaussian factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                m(i, j) -= factor * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

RrefResult rref_decompose(const Matrix& a) {
    RrefResult out;
    out.rref = a;
    out.pivot_columns = gauss_jordan(out.rref, a.cols());
    out.rank = out.pivot_columns.size();

    // One kernel vector per free column: 1 there, -rref entries at pivots.
    std::vector<std::size_t> free_cols;
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t p : out.pivot_columns) {
        is_pivot[p] = true;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (!is_pivot[j]) {
            free_cols.push_back(j);
        }
    }
    out.kernel = Matrix(a.cols(), free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        std::size_t f = free_cols[k];
        out.kernel(f, k) = Gaussian(1);
        for (std::size_t p = 0; p < out.pivot_columns.size(); ++p) {
            out.kernel(out.pivot_columns[p], k) = -out.rref(p, f);
        }
    }
    return out;
}

std::size_t rank_of(const Matrix& a) {
    Matrix work = a;
    return gauss_jordan(work, a.cols()).size();
}

Gaussian determinant(const Matrix& a) {
    detail::require_square(a, "determinant");
    std::size_t n = a.rows();
    Matrix m = a;
    Gaussian det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) {
            ++sel;
        }
        if (sel == n) {
            return Gaussian(0);
        }
        if (sel != col) {
            m.swap_rows(col, sel);
            det = -det;
        }
        det *= m(col, col);
        Gaussian inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) {
                continue;
            }
            Gaussian factor = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                m(i, j) -= factor * m(col, j);
            }
        }
    }
    return det;
}

std::optional<Matrix> try_inverse(const Matrix& a) {
    detail::require_square(a, "inverse");
    std::size_t n = a.rows();
    Matrix aug = hcat(a, Matrix::identity(n));
    std::vector<std::size_t> pivots = gauss_jordan(aug, n);
    if (pivots.size() < n) {
        return std::nullopt;
    }
    return aug.block(0, n, n, n);
}

std::optional<FullRankFactors> full_rank_factorize(const Matrix& a) {
    detail::require_square(a, "full_rank_factorize");
    RrefResult r = rref_decompose(a);
    if (r.rank == 0) {
        return std::nullopt; // zero verdict
    }
    FullRankFactors f;
    f.basis = a.columns(r.pivot_columns);
    f.coords = r.rref.block(0, 0, r.rank, a.cols());
    return f;
}

namespace {

// a^m from the stored squares a^(2^j).
Matrix power_from_squares(const std::vector<Matrix>& squares, std::size_t m) {
    Matrix result = Matrix::identity(squares.front().rows());
    for (std::size_t j = 0; j < squares.size() && m != 0; ++j, m >>= 1U) {
        if (m & 1U) {
            result = result * squares[j];
        }
    }
    return result;
}

} // namespace

Nilpotency nilpotency(const Matrix& a) {
    detail::require_square(a, "nilpotency");
    std::size_t n = a.rows();
    if (n == 0) {
        return {true, 0};
    }
    std::vector<Matrix> squares{a}; // squares[j] = a^(2^j)
    std::size_t top = 1;
    while (top < n) {
        squares.push_back(squares.back() * squares.back());
        top <<= 1U;
    }
    if (!squares.back().is_zero()) {
        return {false, 0};
    }
    // Least m in [1, top] with a^m = 0.
    std::size_t lo = 1;
    std::size_t hi = top;
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (power_from_squares(squares, mid).is_zero()) {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    return {true, lo};
}

bool commutes(const Matrix& a, const Matrix& b) {
    detail::require_square_pair(a, b, "commutes");
    return a * b == b * a;
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& rhs) {
    if (a.rows() != rhs.rows()) {
        throw ShapeError("solve: shape mismatch " + shape_string(a) + " vs " +
                         shape_string(rhs));
    }
    Matrix aug = hcat(a, rhs);
    std::vector<std::size_t> pivots = gauss_jordan(aug, a.cols());
    // Inconsistent iff some row is zero on the a-part but not on the rhs.
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
        for (std::size_t j = a.cols(); j < aug.cols(); ++j) {
            if (!aug(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    }
    Matrix x(a.cols(), rhs.cols());
    for (std::size_t p = 0; p < pivots.size(); ++p) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            x(pivots[p], j) = aug(p, a.cols() + j);
        }
    }
    return x;
}

namespace {

Matrix vectorize(const Matrix& m) {
    Matrix v(m.rows() * m.cols(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            v(i * m.cols() + j, 0) = m(i, j);
        }
    }
    return v;
}

} // namespace

std::optional<std::vector<Gaussian>> express_as_polynomial(const Matrix& a,
                                                           const Matrix& b) {
    detail::require_square_pair(a, b, "express_as_polynomial");
    std::size_t n = a.rows();
    if (n == 0) {
        return std::vector<Gaussian>{};
    }
    Matrix rhs = vectorize(b);
    Matrix power = Matrix::identity(n);
    Matrix system(n * n, 0);
    std::size_t prev_rank = 0;
    for (std::size_t d = 0; d <= n * n; ++d) {
        system = hcat(system, vectorize(power));
        std::optional<Matrix> c = solve(system, rhs);
        if (c) {
            std::vector<Gaussian> coeffs(d + 1);
            for (std::size_t i = 0; i <= d; ++i) {
                coeffs[i] = (*c)(i, 0);
            }
            return coeffs;
        }
        std::size_t r = rank_of(system);
        if (r == prev_rank) {
            return std::nullopt; // span of powers has stabilized
        }
        prev_rank = r;
        power = power * a;
    }
    return std::nullopt;
}

Matrix eval_polynomial(const Matrix& a, const std::vector<Gaussian>& coeffs) {
    detail::require_square(a, "eval_polynomial");
    Matrix out(a.rows(), a.rows());
    Matrix power = Matrix::identity(a.rows());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (!coeffs[i].is_zero()) {
            out = out + power.scaled(coeffs[i]);
        }
        if (i + 1 < coeffs.size()) {
            power = power * a;
        }
    }
    return out;
}

} // namespace drazin
