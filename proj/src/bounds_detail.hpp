#pragma once

// Shared machinery for optimal lower bounds of the form
//   largest a with  a ||x xi||^2 <= <s xi, xi>,
// where s is a PSD operator on a coordinate space and x maps coordinates
// out (x = k* recovers the K-frame / K-fusion lower inequality). Used by
// vector K-frames, K-fusion systems, and the restricted intersection
// bounds.

#include "framekit/frames.hpp"
#include "framekit/rng.hpp"

namespace framekit::detail {

struct LowerVerdict {
    bool lower_ok = false;
    double a_opt = 0.0; // +inf when x vanishes (vacuous inequality)
    Mat witness;        // achiever when ok, violation certificate otherwise
};

LowerVerdict lower_pair(const Mat& x, const Mat& s, const Tolerances& tol);

/// Full report for the operator pair (s_op, k): upper constant from the top
/// of the spectrum of s_op, lower constant from lower_pair(k*, s_op).
BoundsReport k_lower_bounds(const Mat& s_op, const Mat& k, const Tolerances& tol);

/// Unit-vector sweep deciding the tight flag: a_opt ||k* f||^2 must match
/// <s_op f, f> for every probe.
bool tight_by_sweep(const Mat& s_op, const Mat& k, double a_opt, double b_opt,
                    const Tolerances& tol);

} // namespace framekit::detail
