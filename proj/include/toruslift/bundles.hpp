#pragma once

#include "toruslift/torus.hpp"

#include <cstddef>
#include <vector>

namespace toruslift {

/// Semi-character for an integral alternating form E, stored by its basis
/// values c_i in Q/Z together with the fixed quadratic extension rule
///   a(lam) = lam . c + (1/2) sum_{i<j} lam_i lam_j E_ij  (mod 1),
/// so that chi(lam) = exp(2 pi i a(lam)).
struct SemiCharacter {
    IntMat e;
    std::vector<Rat> c;
    bool operator==(const SemiCharacter&) const = default;
};

inline Rat semichar_eval(const SemiCharacter& chi, const std::vector<Int>& lam) {
    const std::size_t n = chi.c.size();
    if (lam.size() != n || chi.e.rows() != n)
        throw DimensionMismatch("semi-character dimension mismatch");
    Rat a = 0;
    for (std::size_t i = 0; i < n; ++i) a += Rat(lam[i]) * chi.c[i];
    Int quad = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            quad += lam[i] * lam[j] * chi.e(i, j);
    a += Rat(quad, 2);
    return mod1(a);
}

/// Holomorphic line bundle as Appel-Humbert data.
struct LineBundle {
    ComplexTorus torus;
    IntMat e;          // matrix of c_1, integral alternating, type (1,1)
    SemiCharacter chi; // chi.e == e
    bool operator==(const LineBundle&) const = default;
};

inline LineBundle make_bundle(const ComplexTorus& x, const IntMat& e, std::vector<Rat> c) {
    if (!e.is_alternating()) throw NotAlternating();
    if (!is_one_one(e, x)) throw NotOneOne();
    if (c.size() != 2 * x.g) throw DimensionMismatch("chi must have 2g basis values");
    for (auto& v : c) v = mod1(v);
    return LineBundle{x, e, SemiCharacter{e, std::move(c)}};
}

inline LineBundle trivial_bundle(const ComplexTorus& x) {
    return make_bundle(x, IntMat::zero(2 * x.g, 2 * x.g), std::vector<Rat>(2 * x.g));
}

inline LineBundle tensor(const LineBundle& l1, const LineBundle& l2) {
    if (l1.torus != l2.torus) throw TorusMismatch();
    std::vector<Rat> c(l1.chi.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = l1.chi.c[i] + l2.chi.c[i];
    return make_bundle(l1.torus, l1.e + l2.e, std::move(c));
}

inline LineBundle inverse(const LineBundle& l) {
    std::vector<Rat> c(l.chi.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -l.chi.c[i];
    return make_bundle(l.torus, -l.e, std::move(c));
}

/// Pullback along translation by x: same E, basis values shifted by E(v, e_i)
/// for any rational lift v of x.
inline LineBundle translate(const LineBundle& l, const TorusPoint& x) {
    if (x.coords.size() != 2 * l.torus.g) throw DimensionMismatch("point dimension mismatch");
    std::vector<Rat> c(l.chi.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        Rat shift = 0;
        for (std::size_t k = 0; k < c.size(); ++k)
            shift += x.coords[k] * Rat(l.e(k, i)); // E(v, e_i) = v^T M_E e_i
        c[i] = l.chi.c[i] + shift;
    }
    return make_bundle(l.torus, l.e, std::move(c));
}

/// Integer matrix of phi_L: x -> t_x^* L (x) L^{-1}, in dual coordinates.
/// Applied to a rational lift v it gives the basis-value shift of translate,
/// so phi = M_E^T. Depends only on E and is additive in L.
inline IntMat phi_map(const LineBundle& l) { return l.e.transposed(); }

/// Finite abelian group plus free rank, as invariant factors d_1 | d_2 | ...
struct FiniteAbelianGroup {
    std::vector<Int> invariant_factors; // positive, divisibility chain
    std::size_t free_rank = 0;

    Int order() const {
        Int o = 1;
        for (const Int& d : invariant_factors) o *= d;
        return o;
    }
    bool operator==(const FiniteAbelianGroup&) const = default;
};

/// K(L) = {v : M_E v integral} / Z^{2g}, via the Smith normal form of M_E.
inline FiniteAbelianGroup kernel_group(const LineBundle& l) {
    SNFResult snf = smith_normal_form(l.e);
    FiniteAbelianGroup k;
    for (const Int& d : snf.divisors()) {
        if (d == 0) ++k.free_rank;
        else k.invariant_factors.push_back(d);
    }
    return k;
}

/// Symmetric semi-character: Z_2-valued with defect E mod 2.
struct SymSemiChar {
    IntMat e;
    std::vector<int> xi; // basis values in {0, 1}
    bool operator==(const SymSemiChar&) const = default;
};

inline SymSemiChar make_xi(const IntMat& e, const std::vector<int>& basis_bits) {
    if (!e.is_alternating()) throw NotAlternating();
    if (basis_bits.size() != e.rows()) throw DimensionMismatch("xi needs one bit per basis vector");
    std::vector<int> bits(basis_bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = basis_bits[i] & 1;
    return SymSemiChar{e, std::move(bits)};
}

inline int xi_eval(const SymSemiChar& xi, const std::vector<Int>& lam) {
    const std::size_t n = xi.xi.size();
    if (lam.size() != n) throw DimensionMismatch("xi dimension mismatch");
    Int v = 0;
    for (std::size_t i = 0; i < n; ++i) v += lam[i] * xi.xi[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            v += lam[i] * lam[j] * xi.e(i, j);
    return static_cast<int>(((v % 2) + 2) % 2);
}

/// The symmetric E-flat bundle S_E selected by xi: basis holonomies
/// (-1)^{xi(e_i)}, i.e. c_i = xi_i / 2. Canonical choice is xi = 0,
/// which picks O_X for E = 0.
inline LineBundle symmetric_flat_bundle(const ComplexTorus& x, const IntMat& e,
                                        const std::vector<int>& basis_bits) {
    SymSemiChar xi = make_xi(e, basis_bits);
    std::vector<Rat> c(xi.xi.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rat(xi.xi[i], 2);
    return make_bundle(x, e, std::move(c));
}

inline LineBundle symmetric_flat_bundle(const ComplexTorus& x, const IntMat& e) {
    return symmetric_flat_bundle(x, e, std::vector<int>(e.rows(), 0));
}

/// The unique bundle with first Chern form E and prescribed semi-character
/// values on the lattice basis.
inline LineBundle character_from_holonomy(const ComplexTorus& x, const IntMat& e,
                                          std::vector<Rat> values) {
    return make_bundle(x, e, std::move(values));
}

} // namespace toruslift
