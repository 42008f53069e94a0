#include "doctest.h"

#include <cmath>

#include "framekit/frames.hpp"
#include "framekit/rng.hpp"
#include "oracles.hpp"

using namespace framekit;

namespace {

const Tolerances kTol{};

VectorFrame frame_of(std::initializer_list<std::initializer_list<Complex>> cols_rowwise) {
    Mat m(cols_rowwise, Field::Complex);
    return VectorFrame(m.rows(), m);
}

// columns e1, e1, e2 in R^2
VectorFrame e1e1e2() {
    return VectorFrame(2, Mat({{1.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}, Field::Real));
}

VectorFrame random_frame(Rng& rng, std::size_t d, std::size_t m, Field field) {
    return VectorFrame(d, random_mat(rng, d, m, field));
}

} // namespace

TEST_CASE("frame_operator pinned cases") {
    CHECK(approx_eq(frame_operator(frame_of({{1.0, 0.0}, {0.0, 1.0}})),
                    Mat::identity(2, Field::Complex), 1e-14));
    CHECK(approx_eq(frame_operator(e1e1e2()), from_diag({2.0, 1.0}), 1e-14));
    CHECK(approx_eq(frame_operator(VectorFrame(2, Mat({{1.0}, {0.0}}, Field::Real))),
                    from_diag({1.0, 0.0}), 1e-14));
}

TEST_CASE("frame_bounds pinned cases") {
    const BoundsReport onb = frame_bounds(frame_of({{1.0, 0.0}, {0.0, 1.0}}));
    CHECK(onb.lower_ok);
    CHECK(onb.a_opt == doctest::Approx(1.0));
    CHECK(onb.b_opt == doctest::Approx(1.0));
    CHECK(onb.tight);
    CHECK(onb.parseval);

    const BoundsReport two = frame_bounds(e1e1e2());
    CHECK(two.a_opt == doctest::Approx(1.0));
    CHECK(two.b_opt == doctest::Approx(2.0));
    CHECK_FALSE(two.tight);

    const BoundsReport deficient = frame_bounds(VectorFrame(2, Mat({{1.0}, {0.0}}, Field::Real)));
    CHECK_FALSE(deficient.lower_ok);
}

TEST_CASE("frame_bounds witnesses achieve the extremes") {
    Rng rng(51);
    for (int trial = 0; trial < 20; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(6);
        const VectorFrame f = random_frame(rng, d, d + rng.below(5), field);
        const BoundsReport rep = frame_bounds(f);
        const Mat s = frame_operator(f);

        CHECK(norm(rep.witness_low) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(norm(rep.witness_high) == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(inner(s * rep.witness_low, rep.witness_low).real() ==
              doctest::Approx(rep.a_opt).epsilon(1e-8));
        CHECK(inner(s * rep.witness_high, rep.witness_high).real() ==
              doctest::Approx(rep.b_opt).epsilon(1e-8));
    }
}

TEST_CASE("frame_bounds brackets the Rayleigh sweep oracle at small dims") {
    Rng rng(52);
    for (int trial = 0; trial < 6; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5); // dims <= 6
        const VectorFrame f = random_frame(rng, d, d + 2, field);
        const BoundsReport rep = frame_bounds(f);
        const testing::RayleighRange sweep =
            testing::rayleigh_sweep(frame_operator(f), 10000, rng);
        CHECK(rep.a_opt <= sweep.lo + 1e-9);
        CHECK(rep.b_opt >= sweep.hi - 1e-9);
        // the sweep approaches the optimum from the inside
        CHECK(sweep.lo - rep.a_opt <= 0.35 * (rep.b_opt - rep.a_opt) + 1e-9);
        CHECK(rep.b_opt - sweep.hi <= 0.35 * (rep.b_opt - rep.a_opt) + 1e-9);
    }
}

TEST_CASE("reconstruct pinned cases") {
    Rng rng(53);
    const VectorFrame onb = frame_of({{1.0, 0.0}, {0.0, 1.0}});
    const Mat f = random_mat(rng, 2, 1, Field::Complex);
    CHECK(approx_eq(reconstruct(onb, f), f, 1e-12));

    // S = diag(2,1), S^{-1} = diag(0.5, 1)
    const Mat ones = Mat::col_vec({1.0, 1.0}, Field::Real);
    CHECK(approx_eq(reconstruct(e1e1e2(), ones), ones, 1e-10));

    CHECK_THROWS_AS(reconstruct(VectorFrame(2, Mat({{1.0}, {0.0}}, Field::Real)),
                                Mat::col_vec({0.0, 1.0}, Field::Real)),
                    NotAFrame);
}

TEST_CASE("reconstruction and its dual order agree on random frames") {
    Rng rng(54);
    for (int trial = 0; trial < 40; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(7);
        const VectorFrame fr = random_frame(rng, d, d + 1 + rng.below(4), field);
        if (!frame_bounds(fr).lower_ok)
            continue;
        const Mat f = random_mat(rng, d, 1, field);
        const Mat rec = reconstruct(fr, f);
        CHECK(norm(rec - f) <= kTol.eq_tol * std::max(1.0, norm(f)));

        // dual order: sum <f, f_i> S^{-1} f_i
        const Mat s = frame_operator(fr);
        const Mat dual = solve_hpd(s, fr.vectors() * (fr.vectors().adjoint() * f));
        CHECK(norm(rec - dual) <= kTol.eq_tol * std::max(1.0, norm(f)));
    }
}

TEST_CASE("kframe_bounds pinned cases") {
    // K = identity reduces to the plain frame bounds
    Rng rng(55);
    const VectorFrame fr = random_frame(rng, 4, 6, Field::Complex);
    const BoundsReport plain = frame_bounds(fr);
    const BoundsReport viaK = kframe_bounds(fr, Mat::identity(4, Field::Complex));
    CHECK(viaK.lower_ok == plain.lower_ok);
    CHECK(viaK.a_opt == doctest::Approx(plain.a_opt).epsilon(1e-9));
    CHECK(viaK.b_opt == doctest::Approx(plain.b_opt).epsilon(1e-12));

    // a K-frame that is not a frame
    const VectorFrame single(2, Mat({{1.0}, {0.0}}, Field::Real));
    const BoundsReport k1 = kframe_bounds(single, from_diag({1.0, 0.0}));
    CHECK(k1.lower_ok);
    CHECK(k1.a_opt == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(k1.tight);

    const BoundsReport k2 = kframe_bounds(single, Mat::identity(2, Field::Real));
    CHECK_FALSE(k2.lower_ok);
    CHECK(k2.a_opt == 0.0);
    // the failure witness is annihilated by S but not by K*
    const Mat s = frame_operator(single);
    CHECK(norm(s * k2.witness_low) <= 1e-10);
    CHECK(norm(k2.witness_low) == doctest::Approx(1.0));

    // zero lower operator: vacuous inequality
    const BoundsReport k0 = kframe_bounds(single, Mat::zeros(2, 2, Field::Real));
    CHECK(k0.lower_ok);
    CHECK(std::isinf(k0.a_opt));
}

TEST_CASE("kframe defining inequality holds with optimal constants") {
    Rng rng(56);
    for (int trial = 0; trial < 50; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const VectorFrame fr = random_frame(rng, d, 1 + rng.below(2 * d), field);
        Mat k = random_mat(rng, d, d, field);
        if (trial % 3 == 0) {
            // rank-deficient K inside the span of the frame operator's range
            k = frame_operator(fr) * random_mat(rng, d, d, field);
        }
        const BoundsReport rep = kframe_bounds(fr, k);
        if (!rep.lower_ok || std::isinf(rep.a_opt))
            continue;
        // with the lower operator's gain factored out, lower <= upper
        CHECK(rep.a_opt * op_norm(k) * op_norm(k) <= rep.b_opt + 1e-9);
        const Mat s = frame_operator(fr);
        for (int probe = 0; probe < 100; ++probe) {
            const Mat f = random_unit_vec(rng, d, field);
            const double mid = inner(s * f, f).real();
            CHECK(rep.a_opt * norm_sq(k.adjoint() * f) <= mid + 1e-9);
            CHECK(mid <= rep.b_opt + 1e-9);
        }
        // optimality of the lower constant at the witness
        const double lhs = rep.a_opt * norm_sq(k.adjoint() * rep.witness_low);
        const double rhs = inner(s * rep.witness_low, rep.witness_low).real();
        CHECK(std::abs(lhs - rhs) <= 1e-6 * std::max(1.0, rhs));
    }
}

TEST_CASE("every frame is a K-frame with the norm-scaled constant") {
    Rng rng(57);
    for (int trial = 0; trial < 30; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const VectorFrame fr = random_frame(rng, d, d + 1 + rng.below(4), field);
        const BoundsReport plain = frame_bounds(fr);
        if (!plain.lower_ok)
            continue;
        const Mat k = random_mat(rng, d, d, field);
        const BoundsReport withK = kframe_bounds(fr, k);
        REQUIRE(withK.lower_ok);
        const double knorm = op_norm(k);
        CHECK(withK.a_opt >= plain.a_opt / (knorm * knorm) - 1e-9);
    }
}

TEST_CASE("exactness probe") {
    // an orthonormal basis is exact; adding any vector breaks exactness
    const VectorFrame basis = frame_of({{1.0, 0.0}, {0.0, 1.0}});
    CHECK(is_exact(basis));
    CHECK_FALSE(is_exact(e1e1e2()));

    Rng rng(58);
    for (int trial = 0; trial < 10; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const Mat square = random_mat(rng, d, d, field);
        if (rank_of(square) < d)
            continue;
        CHECK(is_exact(VectorFrame(d, square))); // independent spanning set
        const Mat redundant = hcat({square, square.col(0)});
        CHECK_FALSE(is_exact(VectorFrame(d, redundant)));
    }
}
