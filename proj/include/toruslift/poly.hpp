#pragma once

#include "toruslift/matrix.hpp"

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace toruslift {

/// Univariate polynomial over the rationals, dense coefficients,
/// coeffs[k] is the coefficient of x^k. Always trimmed.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& c) { if (c != 0) coeffs_.push_back(c); }        // NOLINT
    Poly(int c) : Poly(Rat(c)) {}                                   // NOLINT
    explicit Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly x() { return Poly(std::vector<Rat>{0, 1}); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rat constant_term() const { return coeffs_.empty() ? Rat(0) : coeffs_[0]; }

    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool operator==(const Poly&) const = default;

    Poly operator+(const Poly& o) const {
        std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
        return Poly(std::move(c));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }

    Poly operator-() const {
        std::vector<Rat> c(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
        return Poly(std::move(c));
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1);
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] += coeffs_[i] * o.coeffs_[j];
        return Poly(std::move(c));
    }

    Poly operator/(const Rat& c) const {
        std::vector<Rat> out(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = coeffs_[i] / c;
        return Poly(std::move(out));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rat& c = coeffs_[k];
            if (c == 0) continue;
            if (!first) os << (c > 0 ? "+" : "");
            if (k == 0) {
                os << c;
            } else {
                if (c == -1) os << "-";
                else if (c != 1) os << c << "*";
                os << "x";
                if (k > 1) os << "^" << k;
            }
            first = false;
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rat> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

using PolyMat = Mat<Poly>;

inline bool is_alternating(const PolyMat& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!m(i, i).is_zero()) return false;
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    }
    return true;
}

/// Determinant by cofactor expansion; fine at the sizes that occur here.
inline Poly determinant(const PolyMat& m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Poly(1);
    if (n == 1) return m(0, 0);
    Poly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (m(0, j).is_zero()) continue;
        PolyMat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r - 1, cc++) = m(r, c);
            }
        }
        Poly term = m(0, j) * determinant(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

/// Inverse of a polynomial matrix with nonzero constant determinant
/// (adjugate over the constant determinant).
inline PolyMat poly_mat_inverse(const PolyMat& m) {
    if (!m.is_square()) throw DimensionMismatch("inverse of non-square matrix");
    Poly det = determinant(m);
    if (det.is_zero() || !det.is_constant()) throw NonUnitDeterminant();
    const Rat d = det.constant_term();
    const std::size_t n = m.rows();
    PolyMat adj(n, n);
    if (n == 1) {
        adj(0, 0) = Poly(1);
    } else {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                PolyMat minor(n - 1, n - 1);
                std::size_t rr = 0;
                for (std::size_t r = 0; r < n; ++r) {
                    if (r == i) continue;
                    std::size_t cc = 0;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (c == j) continue;
                        minor(rr, cc++) = m(r, c);
                    }
                    ++rr;
                }
                Poly cof = determinant(minor);
                adj(j, i) = ((i + j) % 2 == 0) ? cof : -cof;
            }
    }
    PolyMat out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = adj(i, j) / d;
    return out;
}

} // namespace toruslift
