#pragma once

#include <optional>
#include <vector>

#include "framekit/frames.hpp"
#include "framekit/optools.hpp"
#include "framekit/subspace.hpp"

namespace framekit {

struct WeightedSubspace {
    Subspace subspace;
    double weight;
};

/// Weighted family {(W_i, v_i)} of closed subspaces of a shared ambient
/// space. Weights are strictly positive; zero subspaces are allowed as
/// members (they contribute nothing but keep their index).
class FusionSystem {
public:
    FusionSystem(std::size_t ambient_dim, std::vector<WeightedSubspace> members);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return members_.size(); }
    const WeightedSubspace& member(std::size_t i) const { return members_[i]; }
    const std::vector<WeightedSubspace>& members() const { return members_; }
    Field field() const;

    /// Dimension of the block coordinate space: sum of member dimensions.
    std::size_t coord_dim() const;

private:
    std::size_t ambient_dim_;
    std::vector<WeightedSubspace> members_;
};

/// Element of the direct-sum sequence space: one block per member, block i
/// lying in W_i (enforced where tuples are consumed).
struct EllTwoTuple {
    std::vector<Mat> blocks;
};

double tuple_norm_sq(const EllTwoTuple& t);
Complex tuple_inner(const EllTwoTuple& a, const EllTwoTuple& b);

/// S_W = sum_i v_i^2 P_{W_i}.
Mat fusion_frame_operator(const FusionSystem& w);

/// Optimal bounds of the system: extremal eigenvalues of S_W, plus the
/// tight / Parseval / orthonormal / v-uniform flags.
BoundsReport fusion_bounds(const FusionSystem& w, const Tolerances& tol = {});

/// Measurement blocks {v_i P_{W_i} f}.
EllTwoTuple analysis(const FusionSystem& w, const Mat& f, const Tolerances& tol = {});

/// sum_i v_i t_i. Throws BlockNotInSubspace if a block leaves its member.
Mat synthesis(const FusionSystem& w, const EllTwoTuple& t, const Tolerances& tol = {});

/// f = sum_i v_i S_W^{-1}(v_i P_{W_i} f), from the measurement blocks.
Mat fusion_reconstruct(const FusionSystem& w, const EllTwoTuple& measurements,
                       const Tolerances& tol = {});

/// Optimal constants for a ||k* f||^2 <= sum v_i^2 ||P_{W_i} f||^2 <= b ||f||^2.
/// The lower constant comes from the quotient of k* by S_W^{1/2}; +infinity
/// sentinel for k = 0.
BoundsReport kfusion_bounds(const FusionSystem& w, const Mat& k, const Tolerances& tol = {});

/// Independent route to the same lower constant: smallest eigenvalue of
/// pinv_sqrt(k k*) S_W pinv_sqrt(k k*) compressed onto R(k). Used as a
/// cross-check oracle; coincides with kfusion_bounds whenever k has full
/// rank (the compression onto R(k) discards nothing in that case).
double kfusion_lower_psd(const FusionSystem& w, const Mat& k, const Tolerances& tol = {});

/// The canonical construction: members (span{k e_n}, ||k e_n||) over an
/// orthonormal basis {e_n}, zero images dropped. The result satisfies
/// sum v_n^2 ||P_{W_n} f||^2 = ||k* f||^2 exactly.
FusionSystem construct_atomic(const Mat& k, const Mat& basis, const Tolerances& tol = {});

/// Blocks {f_i} with k f = sum_i v_i f_i and ||{f_i}|| <= C ||f||, via the
/// minimal-norm factor of k through the synthesis map.
EllTwoTuple atomic_decompose(const FusionSystem& w, const Mat& k, const Mat& f,
                             const Tolerances& tol = {});

struct AtomicReport {
    bool is_atomic = false;
    double bessel_b = 0.0;
    double lower_a = 0.0;
    double decomposition_c = 0.0;
    std::optional<Mat> factor_l;
};

/// Decides atomicity of w with respect to k; the verdict is the lower-bound
/// verdict of kfusion_bounds, and the factor fields carry the decomposition
/// certificate.
AtomicReport verify_atomic(const FusionSystem& w, const Mat& k, const Tolerances& tol = {});

struct QuotientVerdict {
    bool bounded = false;
    std::optional<double> norm;
};

/// Whether the quotient [k* / S_W^{1/2}] is well-defined (hence bounded,
/// in finite dimension), and its norm. bounded <=> kfusion lower verdict,
/// and a_opt * norm^2 = 1.
QuotientVerdict kfusion_via_quotient(const FusionSystem& w, const Mat& k,
                                     const Tolerances& tol = {});

/// Matrix of the synthesis operator on the canonical basis of the block
/// coordinate space (member bases concatenated in order): the column for
/// basis vector n of member i is v_i b_{i,n}. Satisfies L L* = S_W.
Mat synthesis_map(const FusionSystem& w);

/// A theorem-certified bound pair next to the true optimum.
struct CertifiedBounds {
    double lower = 0.0;
    double upper = 0.0;
    BoundsReport actual;
};

struct PartitionResult {
    FusionSystem system;
    CertifiedBounds bounds;
};

/// Fusion system spanned by a partition of a K-frame's vectors. Weights
/// default to 1. Certified bounds: (a/b) v_min^2 below, cells * v_max^2
/// above, with a, b the optimal K-frame bounds of the input.
PartitionResult partition_kframe(const VectorFrame& f, const Mat& k,
                                 const std::vector<std::vector<std::size_t>>& partition,
                                 const std::optional<std::vector<double>>& weights,
                                 const Tolerances& tol = {});

struct DirectSumResult {
    FusionSystem system;
    Mat k_sum;
    CertifiedBounds bounds;
};

/// Member-wise external direct sum of systems sharing their weight list;
/// the result pairs with blockdiag(ks). Certified: min a_j below,
/// max b_j above.
DirectSumResult direct_sum_kfusion(const std::vector<FusionSystem>& systems,
                                   const std::vector<Mat>& ks,
                                   const std::vector<double>& shared_weights,
                                   const Tolerances& tol = {});

struct CombinedOperatorReport {
    double common_lower = 0.0;
    Mat k_sum;
    double sum_certified = 0.0;
    BoundsReport sum_actual;
    Mat k_product;
    double product_certified = 0.0;
    BoundsReport product_actual;
};

/// One system, several lower operators: certified constants for the
/// coefficient combination sum_j a_j k_j and the composition k_1 ... k_n,
/// next to their true optima.
CombinedOperatorReport combined_operator_bounds(const FusionSystem& w, const std::vector<Mat>& ks,
                                                const std::vector<Complex>& coeffs,
                                                const Tolerances& tol = {});

struct IntersectionReport {
    double bessel_in = 0.0;
    double bessel_out = 0.0;
    bool lower_ok = false;        // the surviving lower inequality holds
    double certified_lower = 0.0; // theorem floor for that inequality
    double actual_lower = 0.0;    // optimal constant (restricted to R(P_V) when k given)
    double max_violation = 0.0;   // worst slack over the probe sweep
    bool sweep_ok = true;
};

struct IntersectionResult {
    FusionSystem system;
    IntersectionReport report;
};

/// Member-wise intersection with a fixed subspace v. Every member must
/// commute with v (hard error otherwise); with k given, pinv(P_v) must
/// commute with k*. Zero intersections stay in the system. The report
/// certifies the Bessel bound and the surviving lower inequality:
/// against P_v when k is absent, against k restricted to R(P_v) otherwise.
IntersectionResult intersect_system(const FusionSystem& w, const Subspace& v,
                                    const std::optional<Mat>& k, const Tolerances& tol = {});

} // namespace framekit
