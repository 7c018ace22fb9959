#pragma once

#include "toruslift/matrix.hpp"

#include <cstddef>
#include <tuple>
#include <utility>
#include <vector>

namespace toruslift {

struct SNFResult {
    IntMat u;       // unimodular, rows() == m.rows()
    IntMat v;       // unimodular, rows() == m.cols()
    IntMat d;       // u * m * v, diagonal with d_i >= 0 and d_i | d_{i+1}
    std::vector<Int> divisors() const {
        std::vector<Int> out;
        std::size_t n = std::min(d.rows(), d.cols());
        for (std::size_t i = 0; i < n; ++i) out.push_back(d(i, i));
        return out;
    }
};

/// Smith normal form by gcd-pivot row/column reduction.
inline SNFResult smith_normal_form(const IntMat& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    SNFResult res{IntMat::identity(nr), IntMat::identity(nc), m};
    IntMat& a = res.d;
    const std::size_t n = std::min(nr, nc);

    for (std::size_t t = 0; t < n; ++t) {
        // find the minimal-magnitude nonzero entry in the trailing block
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j) {
                Int v = abs(a(i, j));
                if (v != 0 && (best == 0 || v < best)) {
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;

        while (true) {
            if (pi != t) { a.swap_rows(t, pi); res.u.swap_rows(t, pi); }
            if (pj != t) { a.swap_cols(t, pj); res.v.swap_cols(t, pj); }

            // reduce column t below the pivot
            bool again = false;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                a.add_row(i, t, -q);
                res.u.add_row(i, t, -q);
                if (a(i, t) != 0) { pi = i; pj = t; again = true; break; }
            }
            if (again) continue;
            // reduce row t to the right of the pivot
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                a.add_col(j, t, -q);
                res.v.add_col(j, t, -q);
                if (a(t, j) != 0) { pi = t; pj = j; again = true; break; }
            }
            if (again) continue;

            // pivot must divide the whole trailing block
            bool fixed = true;
            for (std::size_t i = t + 1; i < nr && fixed; ++i)
                for (std::size_t j = t + 1; j < nc && fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        a.add_row(t, i, 1);
                        res.u.add_row(t, i, 1);
                        pi = t;
                        pj = t;
                        fixed = false;
                    }
            if (fixed) break;
        }

        if (a(t, t) < 0) {
            a.scale_row(t, -1);
            res.u.scale_row(t, -1);
        }
    }
    return res;
}

struct SymplecticNF {
    IntMat u;                  // unimodular; u^T * m * u is canonical
    std::vector<Int> divisors; // d_1 | d_2 | ..., all positive
    std::size_t rank = 0;      // 2 * divisors.size()
    IntMat canonical_form(std::size_t n) const {
        IntMat c(n, n);
        std::size_t k = divisors.size();
        for (std::size_t i = 0; i < k; ++i) {
            c(i, k + i) = divisors[i];
            c(k + i, i) = -divisors[i];
        }
        return c;
    }
};

/// Integral symplectic (Frobenius) normal form of an alternating matrix:
/// u^T m u = [[0, D], [-D, 0]] padded by zeros, D = diag(d_1..d_k) with
/// d_i | d_{i+1}. Congruence by the classical pairing-reduction algorithm.
inline SymplecticNF symplectic_normal_form(const IntMat& m) {
    if (!m.is_alternating()) throw NotAlternating();
    const std::size_t n = m.rows();
    IntMat a = m;
    IntMat u = IntMat::identity(n);

    auto cswap = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j); a.swap_cols(i, j); u.swap_cols(i, j);
    };
    auto cadd = [&](std::size_t i, std::size_t j, const Int& c) {
        // basis change e_i <- e_i + c e_j on columns; congruent on rows
        a.add_col(i, j, c); a.add_row(i, j, c); u.add_col(i, j, c);
    };
    auto cneg = [&](std::size_t i) {
        a.scale_row(i, -1); a.scale_col(i, -1); u.scale_col(i, -1);
    };

    std::vector<Int> divisors;
    std::size_t t = 0; // rows/cols < t are finished hyperbolic pairs
    while (t + 1 < n) {
        // minimal nonzero pairing in the trailing block
        std::size_t pi = 0, pj = 0;
        Int best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                Int v = abs(a(i, j));
                if (v != 0 && (best == 0 || v < best)) { best = v; pi = i; pj = j; }
            }
        if (best == 0) break;
        if (pi != t) cswap(pi, t);
        if (pj != t + 1) cswap(pj, t + 1);
        if (a(t, t + 1) < 0) cneg(t + 1);

        bool restart = false;
        // clear the rest of rows t and t+1
        for (std::size_t k = t + 2; k < n && !restart; ++k) {
            const Int d = a(t, t + 1);
            if (a(t, k) != 0) {
                Int q = a(t, k) / d;
                cadd(k, t + 1, -q);
                if (a(t, k) != 0) restart = true; // smaller remainder appeared
            }
            if (!restart && a(t + 1, k) != 0) {
                Int q = a(t + 1, k) / d;
                cadd(k, t, q); // a(t+1, k) += q * a(t+1, t) = -q*d
                if (a(t + 1, k) != 0) restart = true;
            }
        }
        if (restart) continue;

        // divisibility: the pivot must divide the remaining block
        const Int d = a(t, t + 1);
        bool divides = true;
        for (std::size_t i = t + 2; i < n && divides; ++i)
            for (std::size_t j = i + 1; j < n && divides; ++j)
                if (a(i, j) % d != 0) {
                    cadd(t, i, 1); // pulls a(i, j) into row t
                    divides = false;
                }
        if (!divides) continue;

        divisors.push_back(d);
        t += 2;
    }

    // permute pairs (p_1, q_1, p_2, q_2, ...) into (p_1..p_k, q_1..q_k, rest)
    std::size_t k = divisors.size();
    std::vector<std::size_t> perm; // perm[new] = old
    for (std::size_t i = 0; i < k; ++i) perm.push_back(2 * i);
    for (std::size_t i = 0; i < k; ++i) perm.push_back(2 * i + 1);
    for (std::size_t i = 2 * k; i < n; ++i) perm.push_back(i);
    IntMat up(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            up(i, j) = u(i, perm[j]);

    SymplecticNF res;
    res.u = up;
    res.divisors = std::move(divisors);
    res.rank = 2 * k;
    return res;
}

/// Pfaffian and reduced Pfaffian of an integral alternating form:
/// pf = det(D) of the padded diagonal block (0 when degenerate),
/// pfr = product of the nonzero divisors (1 when the form is zero).
inline std::pair<Int, Int> pfaffians(const IntMat& m) {
    SymplecticNF nf = symplectic_normal_form(m);
    Int pfr = 1;
    for (const Int& d : nf.divisors) pfr *= d;
    Int pf = (nf.rank == m.rows()) ? pfr : Int(0);
    return {pf, pfr};
}

struct Signature {
    std::size_t pos = 0, neg = 0, null = 0;
    bool operator==(const Signature&) const = default;
};

/// Sylvester signature of a symmetric rational form by exact congruence
/// diagonalization, with the hyperbolic 2x2 step for zero diagonals.
inline Signature signature(const RatMat& s) {
    if (!s.is_symmetric()) throw NotSymmetric();
    RatMat a = s;
    const std::size_t n = a.rows();
    Signature sig;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        // prefer a nonzero diagonal pivot
        std::size_t p = n;
        for (std::size_t i = 0; i < n; ++i)
            if (!done[i] && a(i, i) != 0) { p = i; break; }
        if (p == n) {
            // all remaining diagonal entries vanish; create one from an
            // off-diagonal pairing (hyperbolic step)
            std::size_t bi = n, bj = n;
            for (std::size_t i = 0; i < n && bi == n; ++i) {
                if (done[i]) continue;
                for (std::size_t j = 0; j < n; ++j)
                    if (!done[j] && j != i && a(i, j) != 0) { bi = i; bj = j; break; }
            }
            if (bi == n) {
                for (std::size_t i = 0; i < n; ++i)
                    if (!done[i]) { done[i] = true; ++sig.null; }
                break;
            }
            a.add_row(bi, bj, 1);
            a.add_col(bi, bj, 1); // a(bi, bi) = 2 a(bi, bj) != 0
            p = bi;
        }
        const Rat piv = a(p, p);
        if (piv > 0) ++sig.pos; else ++sig.neg;
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i] || i == p || a(i, p) == 0) continue;
            Rat f = -a(i, p) / piv;
            a.add_row(i, p, f);
            a.add_col(i, p, f);
        }
        done[p] = true;
    }
    return sig;
}

/// Exact exp(N) for nilpotent rational N.
inline RatMat nilpotent_exp(const RatMat& n) {
    if (!n.is_square()) throw DimensionMismatch("exp of non-square matrix");
    const std::size_t sz = n.rows();
    RatMat result = RatMat::identity(sz);
    RatMat power = RatMat::identity(sz);
    Rat factorial = 1;
    for (std::size_t i = 1; i <= sz; ++i) {
        power = power * n;
        if (power.is_zero()) return result;
        factorial *= Rat(i);
        result = result + power * (Rat(1) / factorial);
    }
    throw NotNilpotent();
}

} // namespace toruslift
