#include "doctest.h"

#include <cmath>

#include "framekit/optools.hpp"
#include "framekit/rng.hpp"

using namespace framekit;

namespace {
const Tolerances kTol{};
}

TEST_CASE("douglas_check pinned cases") {
    const Mat id = Mat::identity(2, Field::Real);

    const DouglasReport same = douglas_check(id, id);
    CHECK(same.holds());
    CHECK(same.consistent);
    REQUIRE(same.alpha_min.has_value());
    CHECK(*same.alpha_min == doctest::Approx(1.0));
    CHECK(approx_eq(*same.factor_l, id, 1e-10));

    const DouglasReport disjoint = douglas_check(from_diag({0.0, 1.0}), from_diag({1.0, 0.0}));
    CHECK_FALSE(disjoint.holds());
    CHECK(disjoint.consistent);
    CHECK_FALSE(disjoint.alpha_min.has_value());
    CHECK_FALSE(disjoint.factor_l.has_value());

    // s built from a known factor: alpha is the squared factor gain
    const Mat t = from_diag({1.0, 0.0});
    const Mat s = t * Mat({{0.5, 0.0}, {0.0, 0.0}}, Field::Real);
    const DouglasReport planted = douglas_check(s, t);
    CHECK(planted.holds());
    REQUIRE(planted.alpha_min.has_value());
    CHECK(*planted.alpha_min == doctest::Approx(0.25).epsilon(1e-9));
    CHECK((t * *planted.factor_l - s).frobenius() <= 1e-9);
}

TEST_CASE("douglas three-way equivalence on planted factors") {
    Rng rng(41);
    for (int trial = 0; trial < 200; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const std::size_t k1 = 1 + rng.below(d);
        const std::size_t rank = 1 + rng.below(k1);
        const Mat t = random_mat(rng, d, rank, field) * random_mat(rng, rank, k1, field);
        const Mat l = random_mat(rng, k1, 1 + rng.below(4), field);
        const Mat s = t * l;

        const DouglasReport rep = douglas_check(s, t);
        CHECK(rep.range_inclusion);
        CHECK(rep.majorized);
        CHECK(rep.factorizable);
        CHECK(rep.consistent);
        REQUIRE(rep.factor_l.has_value());
        CHECK((t * *rep.factor_l - s).frobenius() <= 1e-9 * std::max(1.0, s.frobenius()));

        // alpha_min certifies the majorization: alpha t t* - s s* is PSD
        REQUIRE(rep.alpha_min.has_value());
        Mat slack = *rep.alpha_min * (t * t.adjoint()) - s * s.adjoint();
        slack = 0.5 * (slack + slack.adjoint());
        const double scale = std::max(1.0, (s * s.adjoint()).frobenius());
        CHECK(psd_min_eig(slack) >= -kTol.psd_tol * scale);
    }
}

TEST_CASE("douglas alpha_min is tight") {
    Rng rng(42);
    for (int trial = 0; trial < 40; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const Mat t = random_mat(rng, d, d, field);
        const Mat s = t * random_mat(rng, d, d, field);
        const DouglasReport rep = douglas_check(s, t);
        REQUIRE(rep.alpha_min.has_value());

        // a slightly smaller alpha must fail the PSD test
        Mat slack = (*rep.alpha_min * (1.0 - 1e-6)) * (t * t.adjoint()) - s * s.adjoint();
        slack = 0.5 * (slack + slack.adjoint());
        CHECK(psd_min_eig(slack) < 0.0);
    }
}

TEST_CASE("douglas three-way failure on disjoint ranges") {
    Rng rng(43);
    for (int trial = 0; trial < 200; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 4 + rng.below(4);
        const std::size_t k1 = 1 + rng.below(d / 2);
        const std::size_t k2 = 1 + rng.below(d - k1);
        const Mat q = range_basis(random_mat(rng, d, d, field));
        Mat qt(d, k1, field), qs(d, k2, field);
        for (std::size_t c = 0; c < k1; ++c)
            qt.set_col(c, q.col(c));
        for (std::size_t c = 0; c < k2; ++c)
            qs.set_col(c, q.col(k1 + c));
        const Mat t = qt * random_mat(rng, k1, d, field);
        const Mat s = qs * random_mat(rng, k2, d, field);

        const DouglasReport rep = douglas_check(s, t);
        CHECK_FALSE(rep.range_inclusion);
        CHECK_FALSE(rep.majorized);
        CHECK_FALSE(rep.factorizable);
        CHECK(rep.consistent);
    }
}

TEST_CASE("quotient pinned cases") {
    Rng rng(44);
    const Mat b = random_mat(rng, 3, 3, Field::Complex);

    const QuotientOp same = quotient(b, b);
    CHECK(same.op_norm == doctest::Approx(1.0).epsilon(1e-10));
    // identity action: images equal the domain basis itself
    CHECK(approx_eq(same.matrix, same.domain_basis, 1e-9));

    const QuotientOp twice = quotient(2.0 * b, b);
    CHECK(twice.op_norm == doctest::Approx(2.0).epsilon(1e-10));

    const QuotientOp diag = quotient(Mat::identity(2, Field::Real), from_diag({2.0, 1.0}));
    CHECK(diag.op_norm == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("quotient maps domain coordinates to images") {
    Rng rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(5);
        const std::size_t rank = 1 + rng.below(d);
        const Mat b = random_mat(rng, d, rank, field) * random_mat(rng, rank, d, field);
        const Mat c = random_mat(rng, d, d, field);
        const Mat a = c * b; // guarantees N(b) ⊆ N(a)

        const QuotientOp q = quotient(a, b);
        for (int probe = 0; probe < 5; ++probe) {
            const Mat x = random_mat(rng, d, 1, field);
            const Mat coords = q.domain_basis.adjoint() * (b * x);
            CHECK(norm(q.matrix * coords - a * x) <=
                  kTol.eq_tol * std::max(1.0, norm(a * x)));
        }

        // op_norm bounds ||a x|| by ||b x|| and is achieved somewhere
        double achieved = 0.0;
        for (int probe = 0; probe < 50; ++probe) {
            const Mat x = random_mat(rng, d, 1, field);
            const double bx = norm(b * x);
            if (bx > 1e-12)
                achieved = std::max(achieved, norm(a * x) / bx);
        }
        CHECK(achieved <= q.op_norm * (1.0 + 1e-9));
    }
}

TEST_CASE("quotient rejects ill-defined pairs") {
    // b kills e2 but a does not
    const Mat b = from_diag({1.0, 0.0});
    const Mat a = Mat::identity(2, Field::Real);
    CHECK_THROWS_AS(quotient(a, b), NullSpaceViolation);
}
