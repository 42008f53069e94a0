#pragma once

#include <optional>

#include "framekit/linalg.hpp"

namespace framekit {

/// Verdicts for the three equivalent range-inclusion statements about a
/// pair (s, t) of operators into the same space:
///   (1) R(s) ⊆ R(t)              — projector residual test
///   (2) s s* ≤ α t t* for some α — null-space comparison N(t*) ⊆ N(s*)
///   (3) s = t l for some l       — minimal-norm candidate l = t† s
/// The three are checked by separate numerical routes; `consistent` records
/// whether they agreed. When they hold, alpha_min is the smallest feasible
/// α and factor_l the minimal-norm factor.
struct DouglasReport {
    bool range_inclusion = false;
    bool majorized = false;
    bool factorizable = false;
    std::optional<double> alpha_min;
    std::optional<Mat> factor_l;
    bool consistent = false;

    bool holds() const { return range_inclusion && majorized && factorizable; }
};

DouglasReport douglas_check(const Mat& s, const Mat& t, const Tolerances& tol = {});

/// The map R(b) -> R(a) sending b x to a x, defined when N(b) ⊆ N(a).
/// domain_basis spans R(b); column k of `matrix` is the image (in ambient
/// coordinates) of domain_basis column k, so matrix * (domain coords of
/// b x) = a x. op_norm is the largest singular value of the restriction.
struct QuotientOp {
    Mat domain_basis;
    Mat matrix;
    double op_norm = 0.0;
};

/// Throws NullSpaceViolation when N(b) ⊄ N(a) within tolerance.
QuotientOp quotient(const Mat& a, const Mat& b, const Tolerances& tol = {});

} // namespace framekit
