#pragma once

#include "framekit/errors.hpp"

namespace framekit {

/// Numerical slack used throughout the toolkit.
///
///   rank_tol : relative singular-value cutoff for numerical rank decisions
///   psd_tol  : how far below zero an eigenvalue may sit and still count as
///              nonnegative (roundoff slack on PSD checks)
///   eq_tol   : matrix/vector equality slack, relative to the operand scale
struct Tolerances {
    double rank_tol = 1e-10;
    double psd_tol = 1e-10;
    double eq_tol = 1e-9;

    void validate() const {
        if (!(rank_tol > 0.0) || !(psd_tol > 0.0) || !(eq_tol > 0.0))
            throw InvalidInput("tolerances must be strictly positive");
        if (!(rank_tol < 1.0))
            throw InvalidInput("rank_tol must be below 1");
    }
};

} // namespace framekit
