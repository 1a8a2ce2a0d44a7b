#pragma once

/**
 * @file field.hpp
 * @brief Exact dense linear algebra over a prime field F_p.
 *
 * Every vector space in the library (vertex spaces of representations, Hom
 * spaces, corners e_i Λ e_j) is handled through the Matrix type below. The
 * modulus travels with each matrix so that free functions need no context.
 * Subspaces are represented by a matrix whose columns form a basis.
 */

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tilt/errors.hpp"

namespace tilt {

using Scalar = std::uint32_t;

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline Scalar reduce_mod(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<Scalar>(r);
}

inline Scalar add_mod(Scalar a, Scalar b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Scalar>(s >= p ? s - p : s);
}

inline Scalar sub_mod(Scalar a, Scalar b, std::uint32_t p) {
    return a >= b ? a - b : static_cast<Scalar>(std::uint64_t{a} + p - b);
}

inline Scalar mul_mod(Scalar a, Scalar b, std::uint32_t p) {
    return static_cast<Scalar>((std::uint64_t{a} * b) % p);
}

inline Scalar neg_mod(Scalar a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline Scalar inv_mod(Scalar a, std::uint32_t p) {
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Scalar>(result);
}

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
        : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

    static Matrix identity(std::size_t n, std::uint32_t p) {
        Matrix m(n, n, p);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    /// Column vector from coordinates.
    static Matrix column_vector(const std::vector<Scalar>& v, std::uint32_t p) {
        Matrix m(v.size(), 1, p);
        for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i] % p;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t modulus() const { return p_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Scalar x) { return x == 0; });
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_, p_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::logic_error("matrix product: shape mismatch");
        Matrix out(rows_, o.cols_, p_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t k = 0; k < cols_; ++k) {
                Scalar a = (*this)(r, k);
                if (!a) continue;
                for (std::size_t c = 0; c < o.cols_; ++c) {
                    Scalar b = o(k, c);
                    if (b) out(r, c) = add_mod(out(r, c), mul_mod(a, b, p_), p_);
                }
            }
        return out;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = add_mod(data_[i], o.data_[i], p_);
        return out;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix out(*this);
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = sub_mod(data_[i], o.data_[i], p_);
        return out;
    }

    Matrix scaled(Scalar s) const {
        Matrix out(*this);
        for (auto& x : out.data_) x = mul_mod(x, s % p_, p_);
        return out;
    }

    Matrix column(std::size_t c) const { return columns(c, 1); }

    Matrix columns(std::size_t first, std::size_t count) const {
        Matrix out(rows_, count, p_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
        return out;
    }

    Matrix rows_range(std::size_t first, std::size_t count) const {
        Matrix out(count, cols_, p_);
        for (std::size_t r = 0; r < count; ++r)
            for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(first + r, c);
        return out;
    }

    /// Entries in row-major order.
    const std::vector<Scalar>& data() const { return data_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend bool operator<(const Matrix& a, const Matrix& b) {
        return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            os << '[';
            for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
            os << "]\n";
        }
        return os.str();
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw std::logic_error("matrix sum: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Scalar> data_;
};

inline Matrix hstack(const std::vector<Matrix>& blocks, std::size_t rows, std::uint32_t p) {
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows) throw std::logic_error("hstack: row mismatch");
        cols += b.cols();
    }
    Matrix out(rows, cols, p);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(r, offset + c) = b(r, c);
        offset += b.cols();
    }
    return out;
}

inline Matrix vstack(const std::vector<Matrix>& blocks, std::size_t cols, std::uint32_t p) {
    std::size_t rows = 0;
    for (const auto& b : blocks) {
        if (b.cols() != cols) throw std::logic_error("vstack: column mismatch");
        rows += b.rows();
    }
    Matrix out(rows, cols, p);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < cols; ++c) out(offset + r, c) = b(r, c);
        offset += b.rows();
    }
    return out;
}

inline Matrix block_diagonal(const std::vector<Matrix>& blocks, std::uint32_t p) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols, p);
    std::size_t ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c) out(ro + r, co + c) = b(r, c);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

struct RowEchelon {
    Matrix reduced;                    ///< reduced row echelon form
    std::vector<std::size_t> pivots;   ///< pivot column of each nonzero row
};

inline RowEchelon row_reduce(Matrix m) {
    const std::uint32_t p = m.modulus();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col) == 0) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
        Scalar inv = inv_mod(m(row, col), p);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = mul_mod(m(row, c), inv, p);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Scalar f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) = sub_mod(m(r, c), mul_mod(f, m(row, c), p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) {
    if (m.empty()) return 0;
    return row_reduce(m).pivots.size();
}

/// Basis (as columns) of the null space {x : m x = 0}.
inline Matrix kernel(const Matrix& m) {
    const std::uint32_t p = m.modulus();
    if (m.rows() == 0) return Matrix::identity(m.cols(), p);
    auto [r, pivots] = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free.push_back(c);
    Matrix basis(m.cols(), free.size(), p);
    for (std::size_t k = 0; k < free.size(); ++k) {
        basis(free[k], k) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = neg_mod(r(i, free[k]), p);
    }
    return basis;
}

/// Linearly independent subset of the columns of m spanning its column space.
inline Matrix column_space(const Matrix& m) {
    if (m.empty()) return Matrix(m.rows(), 0, m.modulus());
    auto pivots = row_reduce(m).pivots;
    Matrix out(m.rows(), pivots.size(), m.modulus());
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, pivots[k]);
    return out;
}

/// Some solution x of a x = b, or nullopt when the system is inconsistent.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    const std::uint32_t p = a.modulus();
    if (a.rows() != b.rows()) throw std::logic_error("solve: row mismatch");
    Matrix aug = hstack({a, b}, a.rows(), p);
    auto [r, pivots] = row_reduce(aug);
    Matrix x(a.cols(), b.cols(), p);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] >= a.cols()) return std::nullopt;
        for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = r(i, a.cols() + c);
    }
    return x;
}

inline bool in_column_space(const Matrix& basis, const Matrix& v) {
    if (basis.cols() == 0) return v.is_zero();
    return solve(basis, v).has_value();
}

inline bool is_invertible(const Matrix& m) {
    return m.rows() == m.cols() && rank(m) == m.rows();
}

inline std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    auto x = solve(m, Matrix::identity(m.rows(), m.modulus()));
    if (!x || !((m * *x) == Matrix::identity(m.rows(), m.modulus()))) return std::nullopt;
    return x;
}

inline Matrix power(const Matrix& m, std::size_t e) {
    Matrix result = Matrix::identity(m.rows(), m.modulus());
    Matrix base = m;
    while (e) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

/// Columns extending the column space of `sub` to all of F_p^n (standard vectors).
inline Matrix complement_basis(const Matrix& sub, std::size_t n, std::uint32_t p) {
    Matrix current = sub.cols() ? column_space(sub) : Matrix(n, 0, p);
    std::vector<Matrix> extra;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix e(n, 1, p);
        e(i, 0) = 1;
        Matrix trial = hstack({current, e}, n, p);
        if (rank(trial) > current.cols()) {
            current = trial;
            extra.push_back(e);
        }
    }
    return hstack(extra, n, p);
}

/// Canonical form of the column span: rows of the reduced echelon form of the transpose.
inline Matrix canonical_span(const Matrix& columns) {
    if (columns.cols() == 0) return Matrix(0, columns.rows(), columns.modulus());
    auto [r, pivots] = row_reduce(columns.transpose());
    return r.rows_range(0, pivots.size());
}

inline Matrix span_sum(const Matrix& a, const Matrix& b) {
    return column_space(hstack({a, b}, a.rows(), a.modulus()));
}

}  // namespace tilt
