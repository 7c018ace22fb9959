#pragma once

#include "toruslift/numeric.hpp"

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

namespace toruslift {

/// Dense row-major matrix over an exact scalar type.
template <typename T>
class Mat {
public:
    Mat() = default;

    Mat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    Mat(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = rows.size();
        for (const auto& row : rows) {
            if (cols_ == 0) cols_ = row.size();
            if (row.size() != cols_)
                throw DimensionMismatch("ragged initializer");
            for (const auto& v : row) data_.push_back(v);
        }
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const Mat& other) const = default;

    Mat operator+(const Mat& other) const {
        check_same_shape(other);
        Mat out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] + other.data_[k];
        return out;
    }

    Mat operator-(const Mat& other) const {
        check_same_shape(other);
        Mat out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] - other.data_[k];
        return out;
    }

    Mat operator-() const {
        Mat out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = -data_[k];
        return out;
    }

    Mat operator*(const Mat& other) const {
        if (cols_ != other.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Mat out(rows_, other.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < other.cols_; ++j)
                    out(i, j) += a * other(k, j);
            }
        return out;
    }

    Mat operator*(const T& scalar) const {
        Mat out(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] = data_[k] * scalar;
        return out;
    }

    std::vector<T> operator*(const std::vector<T>& v) const {
        if (cols_ != v.size())
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out[i] += (*this)(i, j) * v[j];
        return out;
    }

    Mat transposed() const {
        Mat out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                out(j, i) = (*this)(i, j);
        return out;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_zero() const {
        for (const auto& v : data_) if (v != 0) return false;
        return true;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_alternating() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, i) != 0) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
        return true;
    }

    Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Mat out(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j)
                out(i, j) = (*this)(r0 + i, c0 + j);
        return out;
    }

    void set_block(std::size_t r0, std::size_t c0, const Mat& b) {
        for (std::size_t i = 0; i < b.rows_; ++i)
            for (std::size_t j = 0; j < b.cols_; ++j)
                (*this)(r0 + i, c0 + j) = b(i, j);
    }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    void swap_cols(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
    }

    // row i += c * row j
    void add_row(std::size_t i, std::size_t j, const T& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) += c * (*this)(j, k);
    }

    // col i += c * col j
    void add_col(std::size_t i, std::size_t j, const T& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) += c * (*this)(k, j);
    }

    void scale_row(std::size_t i, const T& c) {
        for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) *= c;
    }

    void scale_col(std::size_t i, const T& c) {
        for (std::size_t k = 0; k < rows_; ++k) (*this)(k, i) *= c;
    }

    std::vector<T> col(std::size_t j) const {
        std::vector<T> out(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
        return out;
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> out(cols_);
        for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j)
                os << (j ? "," : "") << (*this)(i, j);
            os << "]";
        }
        os << "]";
        return os.str();
    }

private:
    void check_same_shape(const Mat& other) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

inline RatMat to_rational(const IntMat& m) {
    RatMat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = Rat(m(i, j));
    return out;
}

/// Exact determinant by fraction-free elimination on a rational copy.
inline Rat determinant(const RatMat& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    RatMat a = m;
    const std::size_t n = a.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a(pivot, c) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != c) {
            a.swap_rows(pivot, c);
            det = -det;
        }
        det *= a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c) == 0) continue;
            Rat f = a(r, c) / a(c, c);
            for (std::size_t k = c; k < n; ++k) a(r, k) -= f * a(c, k);
        }
    }
    return det;
}

inline Rat determinant(const IntMat& m) { return determinant(to_rational(m)); }

/// Reduced row echelon form in place; returns the rank.
inline std::size_t rref(RatMat& a) {
    const std::size_t nr = a.rows(), nc = a.cols();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
        std::size_t pivot = rank;
        while (pivot < nr && a(pivot, c) == 0) ++pivot;
        if (pivot == nr) continue;
        if (pivot != rank) a.swap_rows(pivot, rank);
        Rat inv = Rat(1) / a(rank, c);
        a.scale_row(rank, inv);
        for (std::size_t r = 0; r < nr; ++r) {
            if (r == rank || a(r, c) == 0) continue;
            a.add_row(r, rank, -a(r, c));
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank(const RatMat& m) {
    RatMat a = m;
    return rref(a);
}

inline std::size_t rank(const IntMat& m) { return rank(to_rational(m)); }

/// Basis of the right nullspace, returned as columns of a matrix
/// (cols == nullity; empty matrix when the kernel is trivial).
inline RatMat nullspace(const RatMat& m) {
    RatMat a = m;
    const std::size_t nr = a.rows(), nc = a.cols();
    rref(a);
    std::vector<std::size_t> pivot_col;
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t r = 0; r < nr; ++r) {
        for (std::size_t c = 0; c < nc; ++c) {
            if (a(r, c) != 0) {
                pivot_col.push_back(c);
                is_pivot[c] = true;
                break;
            }
        }
    }
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < nc; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    RatMat basis(nc, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        basis(free_cols[k], k) = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            basis(pivot_col[r], k) = -a(r, free_cols[k]);
    }
    return basis;
}

inline RatMat inverse(const RatMat& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMat aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, RatMat::identity(n));
    if (rref(aug) != n) throw Error("matrix is singular");
    return aug.block(0, n, n, n);
}

} // namespace toruslift
