#include "toruslift/toruslift.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

using namespace toruslift;

namespace {

ComplexTorus standard_torus(std::size_t g) {
    RatMat j(2 * g, 2 * g);
    for (std::size_t i = 0; i < g; ++i) {
        j(2 * i, 2 * i + 1) = -1;
        j(2 * i + 1, 2 * i) = 1;
    }
    return make_torus(g, j);
}

long pick(std::mt19937& eng, long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
}

Rat rand_rat(std::mt19937& eng, long max_den) {
    long den = pick(eng, 1, max_den);
    return Rat(pick(eng, 0, den - 1), den);
}

/// Pairs (v, v^) with iota_{v^} sigma = iota_v E, solved directly from the
/// matrices of sigma and E. Independent of lift_tangent.
Subspace generalized_tangent(const DoubledTorus& dbl, const IntMat& e) {
    const std::size_t n = 2 * dbl.base.g;
    RatMat cons(n, 2 * n);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < n; ++j) cons(k, j) = -Rat(e(j, k));
        for (std::size_t i = 0; i < n; ++i) cons(k, n + i) = Rat(dbl.sigma(n + i, k));
    }
    RatMat ns = nullspace(cons);
    Subspace sub;
    for (std::size_t c = 0; c < ns.cols(); ++c) {
        std::vector<Rat> v(2 * n);
        for (std::size_t r = 0; r < 2 * n; ++r) v[r] = ns(r, c);
        sub.basis.push_back(std::move(v));
    }
    return sub;
}

} // namespace

TEST_CASE("doubled torus canonical forms") {
    DoubledTorus dbl = make_doubled(standard_torus(1));
    IntMat sigma(4, 4);
    sigma(0, 2) = 1; sigma(1, 3) = 1;
    sigma(2, 0) = -1; sigma(3, 1) = -1;
    CHECK(dbl.sigma == sigma);
    CHECK(dbl.neutral * dbl.neutral == IntMat::identity(4));
    Rat det = determinant(dbl.sigma);
    CHECK((det == 1 || det == -1));
}

TEST_CASE("lift of a bundle") {
    ComplexTorus x = standard_torus(1);

    Lift lo = lift_bundle(trivial_bundle(x));
    CHECK(lo.a == IntMat::zero(2, 2));
    CHECK(lo.b.is_zero());

    LineBundle flat = make_bundle(x, IntMat::zero(2, 2), {Rat(1, 3), Rat(2, 5)});
    Lift lf = lift_bundle(flat);
    CHECK(lf.a == IntMat::zero(2, 2));
    CHECK(lf.b.coords == std::vector<Rat>{Rat(1, 3), Rat(2, 5)});

    LineBundle deg2 = make_bundle(x, IntMat{{0, 2}, {-2, 0}}, {Rat(0), Rat(0)});
    Lift l2 = lift_bundle(deg2);
    CHECK(l2.a == IntMat{{0, 2}, {-2, 0}});
    LineBundle shifted = tensor(deg2, symmetric_flat_bundle(x, -deg2.e));
    CHECK(l2.b.coords[0] == semichar_eval(shifted.chi, {1, 0}));
    CHECK(l2.b.coords[1] == semichar_eval(shifted.chi, {0, 1}));
}

TEST_CASE("lift tangent space") {
    ComplexTorus x = standard_torus(1);
    Lift lo = lift_bundle(trivial_bundle(x));
    Subspace t0 = lift_tangent(lo);
    REQUIRE(t0.basis.size() == 2);
    CHECK(t0.basis[0] == std::vector<Rat>{1, 0, 0, 0});
    CHECK(t0.basis[1] == std::vector<Rat>{0, 1, 0, 0});

    LineBundle deg2 = make_bundle(x, IntMat{{0, 2}, {-2, 0}}, {Rat(0), Rat(0)});
    Subspace t2 = lift_tangent(lift_bundle(deg2));
    CHECK(t2.basis[0] == std::vector<Rat>{1, 0, 0, -2});
    CHECK(t2.basis[1] == std::vector<Rat>{0, 1, 2, 0});
}

TEST_CASE("isotropy checks") {
    ComplexTorus x = standard_torus(1);
    DoubledTorus dbl = make_doubled(x);
    LineBundle deg2 = make_bundle(x, IntMat{{0, 2}, {-2, 0}}, {Rat(0), Rat(0)});
    Subspace t = lift_tangent(lift_bundle(deg2));
    CHECK(is_isotropic(t, to_rational(dbl.neutral)));

    Subspace t0 = lift_tangent(lift_bundle(trivial_bundle(x)));
    CHECK(is_isotropic(t0, to_rational(dbl.sigma)));

    Subspace mixed;
    mixed.basis = {{1, 0, 0, 0}, {0, 0, 1, 0}};
    CHECK_FALSE(is_isotropic(mixed, to_rational(dbl.neutral)));
}

TEST_CASE("lifted generalized complex structures") {
    ComplexTorus x = standard_torus(1);
    DoubledTorus dbl = make_doubled(x);

    RatMat jj = lift_gcs_complex(x);
    CHECK(jj * jj == -RatMat::identity(4));
    CHECK(is_almost_gcs(jj, dbl));

    RatMat omega{{0, 1}, {-1, 0}};
    RatMat jw = lift_gcs_symplectic(omega);
    RatMat expected(4, 4);
    expected(0, 3) = 1; expected(1, 2) = -1;
    expected(2, 1) = 1; expected(3, 0) = -1;
    CHECK(jw == expected);
    CHECK(is_almost_gcs(jw, dbl));

    CHECK_THROWS_AS(lift_gcs_symplectic(RatMat::zero(2, 2)), SingularOmega);

    CHECK_FALSE(is_almost_gcs(RatMat::identity(4), dbl));
    RatMat wrong(4, 4);
    wrong.set_block(0, 0, x.j);
    wrong.set_block(2, 2, x.j.transposed());
    CHECK_FALSE(is_almost_gcs(wrong, dbl));
}

TEST_CASE("generalized metric") {
    RatMat g = RatMat::identity(2);
    RatMat b0 = RatMat::zero(2, 2);
    RatMat gm = generalized_metric(g, b0);
    RatMat expected(4, 4);
    expected.set_block(0, 2, inverse(g));
    expected.set_block(2, 0, g);
    CHECK(gm == expected);
    CHECK(gm * gm == RatMat::identity(4));

    RatMat b{{0, 1}, {-1, 0}};
    RatMat gb = generalized_metric(g, b);
    CHECK(gb * gb == RatMat::identity(4));

    CHECK_THROWS_AS(generalized_metric(RatMat{{-1, 0}, {0, 1}}, b0), NotPositiveDefinite);
    CHECK_THROWS_AS(generalized_metric(g, RatMat::identity(2)), NotAlternating);
}

TEST_CASE("j sharp") {
    ComplexTorus x = standard_torus(1);
    DoubledTorus dbl = make_doubled(x);
    RatMat jj = lift_gcs_complex(x);
    RatMat sharp = j_sharp(jj, dbl);
    CHECK(sharp.is_alternating());
    Rat det = determinant(sharp);
    CHECK((det == 1 || det == -1));

    // j_sharp of the symplectic lift recovers -omega (+) omega^{-1}
    RatMat omega{{0, 2}, {-2, 0}};
    RatMat jw = lift_gcs_symplectic(omega);
    RatMat sharp_w = j_sharp(jw, dbl);
    RatMat block(4, 4);
    block.set_block(0, 0, -omega);
    block.set_block(2, 2, inverse(omega));
    CHECK(sharp_w == block);

    CHECK_THROWS_AS(j_sharp(RatMat::identity(4), dbl), NotGCS);
}

TEST_CASE("stability under endomorphisms") {
    ComplexTorus x = standard_torus(1);
    LineBundle deg2 = make_bundle(x, IntMat{{0, 2}, {-2, 0}}, {Rat(0), Rat(0)});
    Subspace t = lift_tangent(lift_bundle(deg2));
    CHECK(is_stable_under(t, lift_gcs_complex(x)));

    ComplexTorus x2 = standard_torus(2);
    IntMat bad(4, 4);
    bad(0, 2) = 1;
    bad(2, 0) = -1;
    REQUIRE_FALSE(is_one_one(bad, x2));
    Lift graph{x2, bad, TorusPoint(std::vector<Rat>(4))};
    CHECK_FALSE(is_stable_under(lift_tangent(graph), lift_gcs_complex(x2)));

    Subspace full;
    for (std::size_t i = 0; i < 4; ++i) {
        std::vector<Rat> v(4);
        v[i] = 1;
        full.basis.push_back(v);
    }
    CHECK(is_stable_under(full, lift_gcs_complex(x)));
}

TEST_CASE("random lifts are maximal isotropic holomorphic Lagrangians") {
    std::mt19937 eng(401);
    for (int it = 0; it < 50; ++it) {
        std::size_t g = static_cast<std::size_t>(pick(eng, 1, 2));
        ComplexTorus x = standard_torus(g);
        DoubledTorus dbl = make_doubled(x);

        IntMat e(2 * g, 2 * g);
        if (g == 1) {
            long d = pick(eng, -3, 3);
            e(0, 1) = d;
            e(1, 0) = -d;
        } else {
            long a = pick(eng, -2, 2), b = pick(eng, -2, 2), c = pick(eng, -2, 2),
                 d = pick(eng, -2, 2);
            e(0, 1) = a; e(1, 0) = -a;
            e(2, 3) = b; e(3, 2) = -b;
            e(0, 2) = c; e(2, 0) = -c;
            e(1, 3) = c; e(3, 1) = -c;
            e(0, 3) = d; e(3, 0) = -d;
            e(1, 2) = -d; e(2, 1) = d;
        }
        std::vector<Rat> c(2 * g);
        for (auto& v : c) v = rand_rat(eng, 12);
        LineBundle l = make_bundle(x, e, c);
        Subspace t = lift_tangent(lift_bundle(l));

        CHECK(t.basis.size() == 2 * g);
        CHECK(spans_equal(t, generalized_tangent(dbl, e)));
        CHECK(is_isotropic(t, to_rational(dbl.neutral)));
        RatMat jj = lift_gcs_complex(x);
        CHECK(is_stable_under(t, jj));
        CHECK(is_isotropic(t, j_sharp(jj, dbl)));
    }
}
