#include "toruslift/toruslift.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace toruslift;

namespace {

long pick(std::mt19937& eng, long lo, long hi) {
    return lo + static_cast<long>(eng() % static_cast<unsigned long>(hi - lo + 1));
}

Rat rand_pos_rat(std::mt19937& eng, long cap) {
    return Rat(pick(eng, 1, cap), pick(eng, 1, cap));
}

PolyMat assemble_h(const PolyMat& g, const PolyMat& ginv, const PolyMat& b) {
    const std::size_t n = g.rows();
    PolyMat h(2 * n, 2 * n);
    h.set_block(0, 0, g - b * ginv * b);
    h.set_block(0, n, b * ginv);
    h.set_block(n, 0, (b * ginv).transposed());
    h.set_block(n, n, ginv);
    return h;
}

} // namespace

TEST_CASE("circle mass spectrum") {
    CHECK(mass_squared(1, 0, Rat(2), Rat(1)) == Rat(1, 4));
    CHECK(mass_squared(0, 0, Rat(7, 3), Rat(5)) == 0);
    CHECK(mass_squared(1, 1, Rat(1), Rat(1)) == 2);
    CHECK_THROWS_AS(mass_squared(1, 1, Rat(0), Rat(1)), Error);
}

TEST_CASE("T-duality") {
    CircleParams d = t_dual_params(1, 0, Rat(2), Rat(1));
    CHECK(d == CircleParams{0, 1, Rat(1, 2)});
    CHECK(mass_squared(d.n_mom, d.w, d.radius, Rat(1)) == Rat(1, 4));

    // self-dual radius
    CHECK(t_dual_params(3, 5, Rat(1), Rat(1)) == CircleParams{5, 3, Rat(1)});

    std::mt19937 eng(601);
    for (int it = 0; it < 100; ++it) {
        Int n = pick(eng, -20, 20), w = pick(eng, -20, 20);
        Rat radius = rand_pos_rat(eng, 30), alpha = rand_pos_rat(eng, 30);
        CircleParams dd = t_dual_params(n, w, radius, alpha);
        CHECK(mass_squared(n, w, radius, alpha) ==
              mass_squared(dd.n_mom, dd.w, dd.radius, alpha));
        CHECK(t_dual_params(dd.n_mom, dd.w, dd.radius, alpha) == CircleParams{n, w, radius});
    }
}

TEST_CASE("O(n,n) twists") {
    IntMat zero2 = IntMat::zero(2, 2);

    SECTION("geometric f-twist") {
        IntMat f(2, 2);
        f(1, 0) = -1;
        OnnElement el = onn_element(TwistData{f, zero2, zero2});
        CHECK(el.integral);
        CHECK(el.preserves_pairing);
        RatMat expected = RatMat::identity(4);
        expected(1, 0) = -1;
        expected(2, 3) = 1; // -f^T block
        CHECK(el.m == expected);
    }
    SECTION("B-field K-twist") {
        IntMat k{{0, 1}, {-1, 0}};
        OnnElement el = onn_element(TwistData{zero2, k, zero2});
        RatMat expected = RatMat::identity(4);
        expected.set_block(2, 0, to_rational(k));
        CHECK(el.m == expected);
        CHECK(el.integral);
        CHECK(el.preserves_pairing);
    }
    SECTION("T-fold Q-twist") {
        IntMat q{{0, 1}, {-1, 0}};
        OnnElement el = onn_element(TwistData{zero2, zero2, q});
        RatMat expected = RatMat::identity(4);
        expected.set_block(0, 2, to_rational(q));
        CHECK(el.m == expected);
        CHECK(el.integral);
        CHECK(el.preserves_pairing);
    }
    SECTION("rejects non-alternating flux") {
        CHECK_THROWS_AS(onn_element(TwistData{zero2, IntMat::identity(2), zero2}),
                        NotAlternating);
    }
    SECTION("outputs land in O(n,n)") {
        std::mt19937 eng(602);
        RatMat l = to_rational(neutral_pairing(2));
        for (int it = 0; it < 20; ++it) {
            IntMat f(2, 2);
            f(1, 0) = pick(eng, -3, 3); // strictly triangular: nilpotent
            IntMat k(2, 2), q(2, 2);
            k(0, 1) = pick(eng, -3, 3);
            k(1, 0) = -k(0, 1);
            q(0, 1) = pick(eng, -3, 3);
            q(1, 0) = -q(0, 1);
            // pure twists of each kind (mixed f/Q/K sums need not be nilpotent)
            for (const TwistData& t :
                 {TwistData{f, IntMat::zero(2, 2), IntMat::zero(2, 2)},
                  TwistData{IntMat::zero(2, 2), k, IntMat::zero(2, 2)},
                  TwistData{IntMat::zero(2, 2), IntMat::zero(2, 2), q}}) {
                OnnElement el = onn_element(t);
                CHECK(el.m.transposed() * l * el.m == l);
                CHECK(el.preserves_pairing);
            }
        }
    }
}

TEST_CASE("nilfold doubled monodromy") {
    IntMat m1 = nilfold_doubled(1);
    IntMat expected = IntMat::identity(4);
    expected(0, 1) = 1;
    expected(3, 2) = -1;
    CHECK(m1 == expected);
    CHECK(nilfold_doubled(0) == IntMat::identity(4));

    IntMat l = neutral_pairing(2);
    for (long m = -5; m <= 5; ++m) {
        IntMat mon = nilfold_doubled(m);
        CHECK(mon.transposed() * l * mon == l);

        // base block matches the fiber-coordinate Dehn twist
        RatMat f(2, 2);
        f(0, 1) = m;
        RatMat base = to_rational(mon.block(0, 0, 2, 2));
        CHECK(base == nilpotent_exp(f));
    }
}

TEST_CASE("polarization verdicts") {
    IntMat mon = nilfold_doubled(1);
    CHECK(polarization_well_defined(nilfold_polarization('G'), mon));
    CHECK(polarization_well_defined(nilfold_polarization('H'), mon));
    CHECK_FALSE(polarization_well_defined(nilfold_polarization('T'), mon));
    CHECK(polarization_well_defined(nilfold_polarization('T'), nilfold_doubled(0)));
    CHECK_THROWS_AS(nilfold_polarization('X'), Error);
}

TEST_CASE("polarization verdict is basis-independent") {
    IntMat mon = nilfold_doubled(2);
    for (char name : {'G', 'H', 'T'}) {
        Polarization p = nilfold_polarization(name);
        bool verdict = polarization_well_defined(p, mon);
        // unimodular re-spanning of the kernel
        Polarization q;
        const auto& b0 = p.kernel_basis[0];
        const auto& b1 = p.kernel_basis[1];
        std::vector<Int> r0(4), r1(4);
        for (int i = 0; i < 4; ++i) {
            r0[i] = b0[i] + 2 * b1[i];
            r1[i] = b0[i] + 3 * b1[i];
        }
        q.kernel_basis = {r0, r1};
        CHECK(polarization_well_defined(q, mon) == verdict);
    }
}

TEST_CASE("generalized metric decomposition") {
    Poly x = Poly::x();
    PolyMat eye(2, 2);
    eye(0, 0) = Poly(1);
    eye(1, 1) = Poly(1);

    SECTION("block-diagonal nilfold metric") {
        for (long m : {1L, 2L}) {
            Poly mx = Poly(Rat(m)) * x;
            PolyMat g0(2, 2);
            g0(0, 0) = Poly(1);
            g0(0, 1) = -mx;
            g0(1, 0) = -mx;
            g0(1, 1) = Poly(1) + mx * mx;
            PolyMat h(4, 4);
            h.set_block(0, 0, g0);
            h.set_block(2, 2, poly_mat_inverse(g0));
            auto [g, b] = gen_metric_decompose(h, 2);
            CHECK(g == g0);
            CHECK(b == PolyMat(2, 2));
        }
    }
    SECTION("swapped-coordinate T-fold metric") {
        Poly mx = x;
        PolyMat b_exp(2, 2);
        b_exp(0, 1) = mx;
        b_exp(1, 0) = -mx;
        PolyMat h = assemble_h(eye, eye, b_exp);
        auto [g, b] = gen_metric_decompose(h, 2);
        CHECK(g == eye);
        CHECK(b == b_exp);
    }
    SECTION("identity") {
        PolyMat h(2, 2);
        h(0, 0) = Poly(1);
        h(1, 1) = Poly(1);
        auto [g, b] = gen_metric_decompose(h, 1);
        PolyMat one(1, 1);
        one(0, 0) = Poly(1);
        CHECK(g == one);
        CHECK(b == PolyMat(1, 1));
    }
    SECTION("round trip on random unit-determinant pairs") {
        std::mt19937 eng(603);
        for (int it = 0; it < 20; ++it) {
            // g = U^T U for unit upper-triangular polynomial U: symmetric,
            // det 1, positive-definite at every real x
            PolyMat u(2, 2);
            u(0, 0) = Poly(1);
            u(1, 1) = Poly(1);
            u(0, 1) = Poly(Rat(pick(eng, -2, 2))) * x + Poly(Rat(pick(eng, -2, 2)));
            PolyMat g0 = u.transposed() * u;
            PolyMat b0(2, 2);
            b0(0, 1) = Poly(Rat(pick(eng, -2, 2))) * x + Poly(Rat(pick(eng, -2, 2)));
            b0(1, 0) = -b0(0, 1);
            PolyMat h = assemble_h(g0, poly_mat_inverse(g0), b0);
            auto [g, b] = gen_metric_decompose(h, 2);
            CHECK(g == g0);
            CHECK(b == b0);
        }
    }
    SECTION("rejections") {
        PolyMat bad(2, 2);
        bad(0, 1) = Poly(1); // not symmetric
        CHECK_THROWS_AS(gen_metric_decompose(bad, 1), NotSymmetric);

        PolyMat nonunit(2, 2);
        nonunit(0, 0) = Poly(1);
        nonunit(1, 1) = x; // bottom-right block determinant is x
        CHECK_THROWS_AS(gen_metric_decompose(nonunit, 1), NonUnitDeterminant);

        PolyMat inconsistent(4, 4);
        for (int i = 0; i < 4; ++i) inconsistent(i, i) = Poly(1);
        inconsistent(0, 2) = Poly(1);
        inconsistent(2, 0) = Poly(1); // symmetric but B = g^{-1}-contraction not alternating
        CHECK_THROWS_AS(gen_metric_decompose(inconsistent, 2), InconsistentBlocks);
    }
}
