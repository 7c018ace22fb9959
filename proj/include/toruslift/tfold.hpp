#pragma once

#include "toruslift/normal_forms.hpp"
#include "toruslift/poly.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace toruslift {

/// Zero-oscillator circle mass spectrum M^2 = n^2/R^2 + w^2 R^2 / alpha'^2.
inline Rat mass_squared(const Int& n_mom, const Int& w, const Rat& radius, const Rat& alpha_p) {
    if (radius <= 0 || alpha_p <= 0) throw Error("R and alpha' must be positive");
    return Rat(n_mom * n_mom) / (radius * radius) +
           Rat(w * w) * radius * radius / (alpha_p * alpha_p);
}

struct CircleParams {
    Int n_mom;
    Int w;
    Rat radius;
    bool operator==(const CircleParams&) const = default;
};

/// T-duality on a circle: swap momentum and winding, R -> alpha'/R.
inline CircleParams t_dual_params(const Int& n_mom, const Int& w, const Rat& radius,
                                  const Rat& alpha_p) {
    if (radius <= 0 || alpha_p <= 0) throw Error("R and alpha' must be positive");
    return CircleParams{w, n_mom, alpha_p / radius};
}

/// Lie-algebra element N = [[f, Q], [K, -f^T]] of o(n, n).
struct TwistData {
    IntMat f, k, q;

    IntMat assemble() const {
        const std::size_t n = f.rows();
        IntMat m(2 * n, 2 * n);
        m.set_block(0, 0, f);
        m.set_block(0, n, q);
        m.set_block(n, 0, k);
        m.set_block(n, n, -f.transposed());
        return m;
    }
};

inline IntMat neutral_pairing(std::size_t n) {
    IntMat l(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        l(i, n + i) = 1;
        l(n + i, i) = 1;
    }
    return l;
}

struct OnnElement {
    IntMat n;      // the Lie-algebra element
    RatMat m;      // exp(n), exact
    bool integral = false;
    bool preserves_pairing = false;
};

/// Monodromy element exp(N) for a nilpotent twist.
inline OnnElement onn_element(const TwistData& t) {
    const std::size_t n = t.f.rows();
    if (t.k.rows() != n || t.q.rows() != n)
        throw DimensionMismatch("twist blocks must share a size");
    if (!t.k.is_alternating() || !t.q.is_alternating()) throw NotAlternating();
    IntMat nm = t.assemble();
    RatMat l = to_rational(neutral_pairing(n));
    RatMat nr = to_rational(nm);
    if (!(nr.transposed() * l + l * nr).is_zero())
        throw Error("twist does not lie in o(n,n)");

    OnnElement out;
    out.n = nm;
    out.m = nilpotent_exp(nr);
    out.integral = true;
    for (std::size_t i = 0; i < out.m.rows() && out.integral; ++i)
        for (std::size_t j = 0; j < out.m.cols(); ++j)
            if (denominator(out.m(i, j)) != 1) { out.integral = false; break; }
    out.preserves_pairing = (out.m.transposed() * l * out.m == l);
    return out;
}

/// Doubled-fiber monodromy of the nilfold in (y, z, y~, z~) coordinates.
inline IntMat nilfold_doubled(const Int& m) {
    IntMat out = IntMat::identity(4);
    out(0, 1) = m;
    out(3, 2) = -m;
    return out;
}

/// Fiber directions quotiented out by a polarization.
struct Polarization {
    std::vector<std::vector<Int>> kernel_basis;

    RatMat as_columns() const {
        if (kernel_basis.empty()) return RatMat(0, 0);
        RatMat m(kernel_basis[0].size(), kernel_basis.size());
        for (std::size_t j = 0; j < kernel_basis.size(); ++j)
            for (std::size_t i = 0; i < kernel_basis[j].size(); ++i)
                m(i, j) = Rat(kernel_basis[j][i]);
        return m;
    }
};

/// A polarization descends to the full bundle iff the monodromy maps the
/// quotiented fiber directions into themselves.
inline bool polarization_well_defined(const Polarization& p, const IntMat& mon) {
    RatMat b = p.as_columns();
    if (b.rows() != mon.rows()) throw DimensionMismatch("polarization/monodromy size mismatch");
    RatMat mb = to_rational(mon) * b;
    RatMat joint(b.rows(), b.cols() + mb.cols());
    joint.set_block(0, 0, b);
    joint.set_block(0, b.cols(), mb);
    return rank(joint) == rank(b);
}

/// Standard polarizations of the doubled nilfold, by name.
inline Polarization nilfold_polarization(char name) {
    // coordinates (y, z, y~, z~); the kernel is the quotiented pair
    switch (name) {
        case 'G': return Polarization{{{0, 0, 1, 0}, {0, 0, 0, 1}}}; // keep (y, z)
        case 'H': return Polarization{{{1, 0, 0, 0}, {0, 0, 0, 1}}}; // keep (y~, z)
        case 'T': return Polarization{{{0, 1, 0, 0}, {0, 0, 1, 0}}}; // keep (y, z~)
        default: throw Error("unknown polarization (expected G, H or T)");
    }
}

/// Block decomposition of a generalized-metric fiber matrix
/// H = [[g - B g^{-1} B, B g^{-1}], [-g^{-1} B, g^{-1}]]
/// into the metric g and B-field B.
inline std::pair<PolyMat, PolyMat> gen_metric_decompose(const PolyMat& h, std::size_t n) {
    if (h.rows() != 2 * n || h.cols() != 2 * n)
        throw DimensionMismatch("H must be 2n x 2n");
    for (std::size_t i = 0; i < 2 * n; ++i)
        for (std::size_t j = i + 1; j < 2 * n; ++j)
            if (h(i, j) != h(j, i)) throw NotSymmetric();

    PolyMat ginv = h.block(n, n, n, n);
    PolyMat g = poly_mat_inverse(ginv); // throws NonUnitDeterminant
    PolyMat b = h.block(0, n, n, n) * g;
    if (!is_alternating(b)) throw InconsistentBlocks();
    if (h.block(0, 0, n, n) != g - b * ginv * b) throw InconsistentBlocks();
    return {g, b};
}

} // namespace toruslift
