#pragma once

// Test-only reference computations. These stay independent of the library's
// factorization routines so they can serve as oracles for them.

#include <cmath>
#include <cstddef>

#include "framekit/errors.hpp"
#include "framekit/mat.hpp"
#include "framekit/rng.hpp"

namespace framekit::testing {

/// Inverse via Gauss-Jordan elimination with partial pivoting.
inline Mat lu_inverse(const Mat& m) {
    if (!m.is_square())
        throw DimensionMismatch("lu_inverse: square input required");
    const std::size_t n = m.rows();
    Mat a = m;
    Mat inv = Mat::identity(n, m.field());
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > std::abs(a(piv, col)))
                piv = r;
        if (std::abs(a(piv, col)) == 0.0)
            throw InvalidInput("lu_inverse: singular matrix");
        if (piv != col)
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a.at(piv, c), a.at(col, c));
                std::swap(inv.at(piv, c), inv.at(col, c));
            }
        const Complex d = a(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            a.at(col, c) /= d;
            inv.at(col, c) /= d;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const Complex f = a(r, col);
            if (f == 0.0)
                continue;
            for (std::size_t c = 0; c < n; ++c) {
                a.at(r, c) -= f * a(col, c);
                inv.at(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

/// Least-squares residual ||t x - s|| per column of s, computed by CGLS
/// (conjugate gradient on the normal equations). Factorization-free, so it
/// shares nothing with the library's rank-revealing routes.
inline double cgls_residual(const Mat& t, const Mat& s) {
    double worst = 0.0;
    const std::size_t iters = 6 * (t.cols() + 10);
    for (std::size_t col = 0; col < s.cols(); ++col) {
        const Mat b = s.col(col);
        Mat d = b;                // residual s - t x
        Mat r = t.adjoint() * d;  // gradient
        Mat p = r;
        double gamma = norm_sq(r);
        for (std::size_t it = 0; it < iters && gamma > 1e-32; ++it) {
            const Mat q = t * p;
            const double qq = norm_sq(q);
            if (qq == 0.0)
                break;
            const double alpha = gamma / qq;
            d = d - alpha * q;
            r = t.adjoint() * d;
            const double gamma_new = norm_sq(r);
            p = r + (gamma_new / gamma) * p;
            gamma = gamma_new;
        }
        worst = std::max(worst, norm(d));
    }
    return worst;
}

struct RayleighRange {
    double lo;
    double hi;
};

/// Extremes of <S f, f> over random unit vectors; brackets the spectrum
/// from the inside.
inline RayleighRange rayleigh_sweep(const Mat& s, int samples, Rng& rng) {
    RayleighRange range{1e308, -1e308};
    for (int i = 0; i < samples; ++i) {
        const Mat f = random_unit_vec(rng, s.rows(), s.field());
        const double q = inner(s * f, f).real();
        range.lo = std::min(range.lo, q);
        range.hi = std::max(range.hi, q);
    }
    return range;
}

} // namespace framekit::testing
