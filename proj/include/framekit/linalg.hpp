#pragma once

#include <cstddef>
#include <vector>

#include "framekit/mat.hpp"
#include "framekit/tolerances.hpp"

namespace framekit {

/// Hermitian eigendecomposition. Eigenvalues ascending, eigenvector columns
/// orthonormal, input = eigenvectors * diag(eigenvalues) * eigenvectors^*.
struct EigDecomp {
    std::vector<double> eigenvalues;
    Mat eigenvectors;
};

/// Thin SVD: m = u * diag(s) * v^*, s descending and nonnegative,
/// u and v with orthonormal columns (min(rows,cols) of them).
struct SvdDecomp {
    Mat u;
    std::vector<double> s;
    Mat v;
};

/// Cyclic Jacobi for Hermitian matrices. Throws NotHermitian when the input
/// is not Hermitian within eq_tol relative to its norm, NonFinite on NaN/Inf.
EigDecomp sym_eig(const Mat& m, const Tolerances& tol = {});

/// One-sided Jacobi (Hestenes). Works for any shape, including zero columns.
SvdDecomp svd(const Mat& m);

/// Moore-Penrose pseudo-inverse with relative singular-value cutoff
/// rank_tol * s_max.
Mat pinv(const Mat& m, const Tolerances& tol = {});

/// Smallest eigenvalue of a Hermitian matrix. Interpreting
/// min_eig >= -psd_tol as "positive semidefinite" is the caller's job.
double psd_min_eig(const Mat& m, const Tolerances& tol = {});

/// True iff every column of s lies in the column span of t:
/// ||(I - P_R(t)) s|| <= rank_tol * max(1, ||s||).
bool range_contains(const Mat& t, const Mat& s, const Tolerances& tol = {});

/// Orthonormal basis of the column space (rows x rank).
Mat range_basis(const Mat& m, const Tolerances& tol = {});

/// Orthonormal basis of the null space (cols x nullity).
Mat null_basis(const Mat& m, const Tolerances& tol = {});

/// Orthonormal complement of a matrix with orthonormal columns.
Mat complete_basis(const Mat& q);

/// Hermitian PSD square root; eigenvalues in [-psd_tol*max(1,scale), 0)
/// are clamped to zero, anything lower raises NotPositiveSemidefinite.
/// Eigenvalues below rank_tol * lambda_max count as zero, matching the
/// rank convention of pinv and range_basis.
Mat psd_sqrt(const Mat& m, const Tolerances& tol = {});

/// Pseudo-inverse of the PSD square root (eigenvalue cutoff rank_tol * max).
Mat pinv_sqrt(const Mat& m, const Tolerances& tol = {});

/// Largest singular value (0 for empty matrices).
double op_norm(const Mat& m);

std::size_t rank_of(const Mat& m, const Tolerances& tol = {});

/// Solve s x = b for Hermitian PSD s via the pseudo-inverse plus one step
/// of residual refinement.
Mat solve_hpd(const Mat& s, const Mat& b, const Tolerances& tol = {});

/// diag(d) as a square matrix.
Mat from_diag(const std::vector<double>& d, Field field = Field::Real);

} // namespace framekit
