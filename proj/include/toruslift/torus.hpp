#pragma once

#include "toruslift/normal_forms.hpp"

#include <cstddef>
#include <vector>

namespace toruslift {

/// Complex torus of dimension g with lattice Z^{2g} and rational
/// complex-structure matrix J (J^2 = -I).
struct ComplexTorus {
    std::size_t g = 0;
    RatMat j;
    bool operator==(const ComplexTorus&) const = default;
};

inline ComplexTorus make_torus(std::size_t g, const RatMat& j) {
    if (j.rows() != 2 * g || j.cols() != 2 * g)
        throw DimensionMismatch("J must be 2g x 2g");
    if (j * j != -RatMat::identity(2 * g)) throw NotComplexStructure();
    return ComplexTorus{g, j};
}

/// Rational point of the torus, coordinates canonically in [0, 1).
struct TorusPoint {
    std::vector<Rat> coords;

    explicit TorusPoint(std::vector<Rat> c) : coords(std::move(c)) { normalize(); }
    TorusPoint() = default;

    void normalize() {
        for (auto& x : coords) x = mod1(x);
    }

    bool operator==(const TorusPoint&) const = default;

    TorusPoint operator+(const TorusPoint& o) const {
        if (coords.size() != o.coords.size()) throw DimensionMismatch("point dimensions differ");
        std::vector<Rat> c(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) c[i] = coords[i] + o.coords[i];
        return TorusPoint(std::move(c));
    }

    TorusPoint operator-() const {
        std::vector<Rat> c(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) c[i] = -coords[i];
        return TorusPoint(std::move(c));
    }

    bool is_zero() const {
        for (const auto& x : coords) if (x != 0) return false;
        return true;
    }
};

/// Point of the dual torus, coordinates in the basis dual to the lattice.
using DualTorusPoint = TorusPoint;

inline Int hodge_rank_structure_sheaf(const ComplexTorus& x, std::size_t q) {
    if (q > x.g) throw Error("q out of range");
    return binomial(static_cast<long>(x.g), static_cast<long>(q));
}

/// A two-form E is of type (1,1) with respect to J iff E(Jv, Jw) = E(v, w).
inline bool is_one_one(const IntMat& e, const ComplexTorus& x) {
    if (e.rows() != 2 * x.g || e.cols() != 2 * x.g)
        throw DimensionMismatch("E must be 2g x 2g");
    RatMat m = to_rational(e);
    return x.j.transposed() * m * x.j == m;
}

struct HermitianData {
    RatMat s;       // symmetrization of M_E * J, the real quadratic form of H
    std::size_t r;  // positive eigenvalue count of H
    std::size_t s_neg; // negative eigenvalue count of H
};

/// Real quadratic form of the Hermitian form H with Im H = E,
/// under the convention H(v, w) = E(v, Jw) + i E(v, w).
inline HermitianData hermitian_form(const IntMat& e, const ComplexTorus& x) {
    if (!is_one_one(e, x)) throw NotOneOne();
    RatMat ej = to_rational(e) * x.j;
    RatMat s = (ej + ej.transposed()) * Rat(1, 2);
    Signature sig = signature(s);
    // complex eigenvalues double up in the real form
    return HermitianData{s, sig.pos / 2, sig.neg / 2};
}

} // namespace toruslift
