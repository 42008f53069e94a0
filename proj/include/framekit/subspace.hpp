#pragma once

#include <vector>

#include "framekit/linalg.hpp"

namespace framekit {

/// Orthogonal projection matrix: Hermitian and idempotent within eq_tol.
struct Projection {
    Mat matrix;
};

/// Closed subspace of C^d (or R^d), stored as an orthonormal column basis.
/// Zero columns encode the zero subspace, a first-class value here.
class Subspace {
public:
    /// Wraps an already-orthonormal basis (validated).
    Subspace(std::size_t ambient_dim, Mat basis, const Tolerances& tol = {});

    /// Span of arbitrary columns; the basis is extracted by a rank-revealing
    /// factorization, so dependent or zero columns are fine.
    static Subspace span(const Mat& vectors, const Tolerances& tol = {});
    static Subspace zero(std::size_t ambient_dim, Field field = Field::Complex);
    static Subspace full(std::size_t ambient_dim, Field field = Field::Complex);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.cols(); }
    bool is_zero() const { return dim() == 0; }
    const Mat& basis() const { return basis_; }
    Field field() const { return basis_.field(); }

    /// P = basis * basis^*.
    Projection project() const;

    /// True iff v lies in the subspace within eq_tol (relative to |v|).
    bool contains(const Mat& v, const Tolerances& tol = {}) const;

private:
    std::size_t ambient_dim_;
    Mat basis_;
};

/// ||P_u P_v - P_v P_u|| <= eq_tol.
bool commute(const Subspace& u, const Subspace& v, const Tolerances& tol = {});

/// Intersection by principal angles: singular vectors of P_u P_v whose
/// singular value is within rank_tol of 1.
Subspace intersect(const Subspace& u, const Subspace& v, const Tolerances& tol = {});

/// Mutual range containment (bases are not unique, so equality cannot be
/// basis comparison).
bool same_subspace(const Subspace& u, const Subspace& v, const Tolerances& tol = {});

/// External direct sum: parts live in their own ambient spaces; the result
/// lives in the product space of dimension sum(d_j). embeddings[j] is the
/// isometry mapping part j's ambient space into the sum space.
struct DirectSum {
    Subspace sum;
    std::vector<Mat> embeddings;
};

DirectSum direct_sum(const std::vector<Subspace>& parts);

} // namespace framekit
