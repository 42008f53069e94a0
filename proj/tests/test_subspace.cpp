#include "doctest.h"

#include <cmath>

#include "framekit/rng.hpp"
#include "framekit/subspace.hpp"

using namespace framekit;

namespace {

const Tolerances kTol{};

Subspace coord_span(std::size_t dim, std::initializer_list<std::size_t> axes) {
    Mat b(dim, axes.size(), Field::Real);
    std::size_t c = 0;
    for (std::size_t a : axes)
        b.at(a, c++) = 1.0;
    return Subspace(dim, b);
}

Subspace random_subspace(Rng& rng, std::size_t d, std::size_t k, Field field) {
    if (k == 0)
        return Subspace::zero(d, field);
    return Subspace::span(random_mat(rng, d, k, field));
}

// dim(U ∩ V) equals the nullity of [basis_U | -basis_V].
std::size_t brute_intersection_dim(const Subspace& u, const Subspace& v) {
    if (u.is_zero() || v.is_zero())
        return 0;
    const Mat stacked = hcat({u.basis(), -1.0 * v.basis()});
    return u.dim() + v.dim() - rank_of(stacked, Tolerances{1e-8, 1e-10, 1e-9});
}

} // namespace

TEST_CASE("projection of pinned subspaces") {
    CHECK(approx_eq(coord_span(2, {0}).project().matrix, from_diag({1.0, 0.0}), 1e-12));
    CHECK(approx_eq(Subspace::zero(2, Field::Real).project().matrix, Mat::zeros(2, 2, Field::Real),
                    1e-15));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Subspace diag = Subspace(2, Mat::col_vec({inv_sqrt2, inv_sqrt2}, Field::Real));
    CHECK(approx_eq(diag.project().matrix, Mat({{0.5, 0.5}, {0.5, 0.5}}, Field::Real), 1e-12));
}

TEST_CASE("projections are Hermitian idempotents of the right rank") {
    Rng rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(7);
        const std::size_t k = rng.below(d + 1);
        const Subspace w = random_subspace(rng, d, k, field);
        const Mat p = w.project().matrix;
        CHECK(p.hermitian_error() <= kTol.eq_tol);
        CHECK((p * p - p).frobenius() <= kTol.eq_tol);
        CHECK(rank_of(p) == w.dim());
    }
}

TEST_CASE("commute detects commuting and non-commuting pairs") {
    CHECK(commute(coord_span(2, {0}), coord_span(2, {1})));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Subspace diag = Subspace(2, Mat::col_vec({inv_sqrt2, inv_sqrt2}, Field::Real));
    CHECK_FALSE(commute(coord_span(2, {0}), diag));
    // the commutator entries are +-0.5 for this pair
    const Mat pu = coord_span(2, {0}).project().matrix;
    const Mat pv = diag.project().matrix;
    CHECK((pu * pv - pv * pu).max_abs() == doctest::Approx(0.5));

    // nested subspaces commute
    const Subspace big = coord_span(3, {0, 1});
    const Subspace small = coord_span(3, {1});
    CHECK(commute(big, small));
    CHECK_THROWS_AS(commute(big, coord_span(2, {0})), DimensionMismatch);
}

TEST_CASE("intersect pinned cases") {
    Rng rng(32);
    const Subspace u = random_subspace(rng, 4, 2, Field::Complex);
    CHECK(same_subspace(intersect(u, u), u));

    CHECK(intersect(coord_span(2, {0}), coord_span(2, {1})).is_zero());

    const Subspace a = coord_span(3, {0, 1});
    const Subspace b = coord_span(3, {1, 2});
    CHECK(same_subspace(intersect(a, b), coord_span(3, {1})));
}

TEST_CASE("intersection of commuting subspaces multiplies projections") {
    Rng rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 3 + rng.below(5);
        // subsets of one unitary frame commute by construction
        const Mat frame = range_basis(random_mat(rng, d, d, field));
        REQUIRE(frame.cols() == d);
        std::vector<Mat> cols_u, cols_v;
        for (std::size_t c = 0; c < d; ++c) {
            if (rng.below(2))
                cols_u.push_back(frame.col(c));
            if (rng.below(2))
                cols_v.push_back(frame.col(c));
        }
        const Subspace u =
            cols_u.empty() ? Subspace::zero(d, field) : Subspace(d, hcat(cols_u));
        const Subspace v =
            cols_v.empty() ? Subspace::zero(d, field) : Subspace(d, hcat(cols_v));
        REQUIRE(commute(u, v));

        const Subspace w = intersect(u, v);
        const Mat expected = u.project().matrix * v.project().matrix;
        CHECK((w.project().matrix - expected).frobenius() <= kTol.eq_tol);
    }
}

TEST_CASE("intersection dimension matches the stacked null-space oracle") {
    Rng rng(34);
    for (int trial = 0; trial < 60; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const std::size_t d = 2 + rng.below(7);
        Subspace u = random_subspace(rng, d, rng.below(d + 1), field);
        Subspace v = random_subspace(rng, d, rng.below(d + 1), field);
        if (trial % 3 == 0 && !u.is_zero()) {
            // force a genuine overlap: build v over part of u plus noise
            std::vector<Mat> cols;
            for (std::size_t c = 0; c < u.dim(); c += 2)
                cols.push_back(u.basis().col(c));
            cols.push_back(random_mat(rng, d, 1, field));
            v = Subspace::span(hcat(cols));
        }
        const Subspace w = intersect(u, v);
        CHECK(w.dim() == brute_intersection_dim(u, v));

        // containment in both parents
        if (!w.is_zero()) {
            CHECK(range_contains(u.basis(), w.basis()));
            CHECK(range_contains(v.basis(), w.basis()));
        }
    }
}

TEST_CASE("direct_sum embeds blocks") {
    const Subspace e1_r2 = coord_span(2, {0});
    const DirectSum ds = direct_sum({e1_r2, e1_r2});
    CHECK(ds.sum.ambient_dim() == 4);
    CHECK(ds.sum.dim() == 2);
    CHECK(same_subspace(ds.sum, coord_span(4, {0, 2})));

    // zero ⊕ W is W shifted into the larger space
    const DirectSum z = direct_sum({Subspace::zero(2, Field::Real), coord_span(2, {1})});
    CHECK(z.sum.dim() == 1);
    CHECK(same_subspace(z.sum, coord_span(4, {3})));

    // full ⊕ full is full
    const DirectSum f = direct_sum({Subspace::full(2, Field::Real), Subspace::full(3, Field::Real)});
    CHECK(f.sum.dim() == 5);

    CHECK_THROWS_AS(direct_sum({}), EmptyInput);
}

TEST_CASE("direct sums of projections are block diagonal") {
    Rng rng(35);
    for (int trial = 0; trial < 10; ++trial) {
        const Field field = trial % 2 ? Field::Real : Field::Complex;
        const Subspace a = random_subspace(rng, 2 + rng.below(4), 1 + rng.below(2), field);
        const Subspace b = random_subspace(rng, 2 + rng.below(4), 1 + rng.below(2), field);
        const DirectSum ds = direct_sum({a, b});
        const Mat block = block_diag({a.project().matrix, b.project().matrix});
        CHECK((ds.sum.project().matrix - block).frobenius() <= kTol.eq_tol);

        // embeddings are isometries landing inside the sum space
        for (const Mat& e : ds.embeddings)
            CHECK(approx_eq(e.adjoint() * e, Mat::identity(e.cols(), field), 1e-12));
    }
}
