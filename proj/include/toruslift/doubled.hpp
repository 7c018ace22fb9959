#pragma once

#include "toruslift/bundles.hpp"

#include <cstddef>
#include <vector>

namespace toruslift {

/// The doubling torus X x X^, lattice Z^{4g}, in (x, x^) block coordinates.
struct DoubledTorus {
    ComplexTorus base;
    IntMat sigma;   // [[0, I], [-I, 0]], the first Chern form of the Poincare bundle
    IntMat neutral; // [[0, I], [I, 0]], the canonical neutral metric F sigma
    bool operator==(const DoubledTorus&) const = default;
};

inline DoubledTorus make_doubled(const ComplexTorus& x) {
    const std::size_t n = 2 * x.g;
    IntMat sigma(2 * n, 2 * n), neutral(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        sigma(i, n + i) = 1;
        sigma(n + i, i) = -1;
        neutral(i, n + i) = 1;
        neutral(n + i, i) = 1;
    }
    return DoubledTorus{x, sigma, neutral};
}

/// Affine-linear Lagrangian subtorus {(x, A x + b)} of the doubled torus.
struct Lift {
    ComplexTorus base;
    IntMat a;         // linear part, the matrix of c_1 of the generating bundle
    DualTorusPoint b; // offset, the point [L (x) S_{-E}]
    bool operator==(const Lift&) const = default;
};

/// Lift of a holomorphic line bundle: the graph of
/// x -> [S_{-E} (x) t_{-x}^* L], with linear part M_E and offset the dual
/// point of L (x) S_{-E} (canonical xi, so S_{-E} has trivial basis values).
inline Lift lift_bundle(const LineBundle& l) {
    LineBundle s_minus = symmetric_flat_bundle(l.torus, -l.e);
    LineBundle shifted = tensor(l, s_minus);
    std::vector<Rat> b(shifted.chi.c.size());
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Int> basis(n, 0);
        basis[i] = 1;
        b[i] = semichar_eval(shifted.chi, basis);
    }
    return Lift{l.torus, l.e, DualTorusPoint(std::move(b))};
}

/// Linear subspace of Q^n spanned by the given basis vectors.
struct Subspace {
    std::vector<std::vector<Rat>> basis;

    std::size_t ambient_dim() const { return basis.empty() ? 0 : basis[0].size(); }

    RatMat as_columns() const {
        RatMat m(ambient_dim(), basis.size());
        for (std::size_t j = 0; j < basis.size(); ++j)
            for (std::size_t i = 0; i < basis[j].size(); ++i)
                m(i, j) = basis[j][i];
        return m;
    }
};

inline bool spans_equal(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) return false;
    RatMat ma = a.as_columns(), mb = b.as_columns();
    RatMat joint(ma.rows(), ma.cols() + mb.cols());
    joint.set_block(0, 0, ma);
    joint.set_block(0, ma.cols(), mb);
    std::size_t ra = rank(ma);
    return ra == rank(mb) && ra == rank(joint);
}

/// Tangent space of the lift: span of (e_i, A e_i). Under the canonical
/// identification this is the generalized tangent bundle of (X, E).
inline Subspace lift_tangent(const Lift& lift) {
    const std::size_t n = 2 * lift.base.g;
    Subspace t;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rat> v(2 * n);
        v[i] = 1;
        for (std::size_t k = 0; k < n; ++k) v[n + k] = Rat(lift.a(k, i));
        t.basis.push_back(std::move(v));
    }
    return t;
}

inline bool is_isotropic(const Subspace& sub, const RatMat& form) {
    for (const auto& v : sub.basis)
        for (const auto& w : sub.basis) {
            Rat pairing = 0;
            for (std::size_t i = 0; i < v.size(); ++i)
                for (std::size_t j = 0; j < w.size(); ++j)
                    pairing += v[i] * form(i, j) * w[j];
            if (pairing != 0) return false;
        }
    return true;
}

/// Lift of the complex structure: block-diag(J, -J^T).
inline RatMat lift_gcs_complex(const ComplexTorus& x) {
    const std::size_t n = 2 * x.g;
    RatMat m(2 * n, 2 * n);
    m.set_block(0, 0, x.j);
    m.set_block(n, n, -x.j.transposed());
    return m;
}

/// Lift of a symplectic structure: [[0, -omega^{-1}], [omega, 0]].
inline RatMat lift_gcs_symplectic(const RatMat& omega) {
    if (!omega.is_alternating()) throw NotAlternating();
    if (determinant(omega) == 0) throw SingularOmega();
    const std::size_t n = omega.rows();
    RatMat m(2 * n, 2 * n);
    m.set_block(0, n, -inverse(omega));
    m.set_block(n, 0, omega);
    return m;
}

/// Almost generalized complex structure test: M^2 = -I and neutral-orthogonal.
inline bool is_almost_gcs(const RatMat& m, const DoubledTorus& dbl) {
    if (!m.is_square() || m.rows() != dbl.neutral.rows()) return false;
    const std::size_t n = m.rows();
    if (m * m != -RatMat::identity(n)) return false;
    RatMat l = to_rational(dbl.neutral);
    return m.transposed() * l * m == l;
}

/// B-shifted generalized metric [[-g^{-1}B, g^{-1}], [g - B g^{-1} B, B g^{-1}]].
inline RatMat generalized_metric(const RatMat& g_mat, const RatMat& b) {
    if (!g_mat.is_symmetric()) throw NotSymmetric();
    Signature sig = signature(g_mat);
    if (sig.neg != 0 || sig.null != 0) throw NotPositiveDefinite();
    if (!b.is_alternating()) throw NotAlternating();
    const std::size_t n = g_mat.rows();
    if (b.rows() != n) throw DimensionMismatch("g and B sizes differ");
    RatMat ginv = inverse(g_mat);
    RatMat m(2 * n, 2 * n);
    m.set_block(0, 0, -(ginv * b));
    m.set_block(0, n, ginv);
    m.set_block(n, 0, g_mat - b * ginv * b);
    m.set_block(n, n, b * ginv);
    return m;
}

/// The two-form J^sharp = <J -, ->, i.e. J^T * neutral. Alternating and
/// nondegenerate for any almost GCS.
inline RatMat j_sharp(const RatMat& jmat, const DoubledTorus& dbl) {
    if (!is_almost_gcs(jmat, dbl)) throw NotGCS();
    return jmat.transposed() * to_rational(dbl.neutral);
}

/// True iff M maps span(sub) into itself.
inline bool is_stable_under(const Subspace& sub, const RatMat& m) {
    RatMat b = sub.as_columns();
    RatMat mb = m * b;
    RatMat joint(b.rows(), b.cols() + mb.cols());
    joint.set_block(0, 0, b);
    joint.set_block(0, b.cols(), mb);
    return rank(joint) == rank(b);
}

} // namespace toruslift
