#include "bounds_detail.hpp"

#include <cmath>
#include <limits>

namespace framekit::detail {

namespace {
constexpr std::uint64_t kSweepSeed = 0x66726b31;
constexpr int kSweepProbes = 50;
} // namespace

bool tight_by_sweep(const Mat& s_op, const Mat& k, double a_opt, double b_opt,
                    const Tolerances& tol) {
    if (!std::isfinite(a_opt))
        return false; // vacuous lower inequality, nothing to certify
    Rng rng(kSweepSeed);
    const double slack = tol.eq_tol * std::max(1.0, b_opt);
    for (int i = 0; i < kSweepProbes; ++i) {
        const Mat f = random_unit_vec(rng, s_op.rows(), s_op.field());
        const double lhs = a_opt * norm_sq(k.adjoint() * f);
        const double rhs = inner(s_op * f, f).real();
        if (std::abs(lhs - rhs) > slack)
            return false;
    }
    return true;
}

LowerVerdict lower_pair(const Mat& x, const Mat& s, const Tolerances& tol) {
    if (!s.is_square() || x.cols() != s.rows())
        throw DimensionMismatch("lower_pair: shapes do not match");
    const std::size_t n = s.rows();
    LowerVerdict out;
    if (n == 0) { // empty coordinate space: nothing to bound
        out.lower_ok = true;
        out.a_opt = std::numeric_limits<double>::infinity();
        out.witness = Mat(0, 1, s.field());
        return out;
    }

    const EigDecomp eig = sym_eig(s, tol);
    const double lam_max = std::max(eig.eigenvalues.back(), 0.0);

    if (x.frobenius() == 0.0) {
        out.lower_ok = true;
        out.a_opt = std::numeric_limits<double>::infinity();
        out.witness = eig.eigenvectors.col(0);
        return out;
    }

    // null coordinates of s must be killed by x for any positive constant
    const double cut = tol.rank_tol * lam_max;
    double worst = 0.0;
    Mat worst_dir;
    for (std::size_t i = 0; i < n && eig.eigenvalues[i] <= cut; ++i) {
        const Mat v = eig.eigenvectors.col(i);
        const double leak = norm(x * v);
        if (leak > worst || worst_dir.empty()) {
            worst = leak;
            worst_dir = v;
        }
    }
    if (!worst_dir.empty() && worst > tol.eq_tol * x.frobenius()) {
        out.lower_ok = false;
        out.a_opt = 0.0;
        out.witness = worst_dir;
        return out;
    }

    out.lower_ok = true;
    const Mat root_pinv = pinv_sqrt(s, tol);
    const SvdDecomp dec = svd(x * root_pinv);
    const double top = dec.s.empty() ? 0.0 : dec.s[0];
    if (top == 0.0) {
        out.a_opt = std::numeric_limits<double>::infinity();
        out.witness = eig.eigenvectors.col(0);
        return out;
    }
    out.a_opt = 1.0 / (top * top);
    Mat w = root_pinv * dec.v.col(0);
    const double wn = norm(w);
    out.witness = wn > 0.0 ? (1.0 / wn) * w : eig.eigenvectors.col(0);
    return out;
}

BoundsReport k_lower_bounds(const Mat& s_op, const Mat& k, const Tolerances& tol) {
    if (!s_op.is_square() || k.rows() != s_op.rows() || !k.is_square())
        throw DimensionMismatch("k_lower_bounds: operator shapes do not match");
    if (s_op.rows() == 0)
        throw DimensionMismatch("k_lower_bounds: empty ambient space");

    BoundsReport rep;
    rep.tol = tol;
    const EigDecomp eig = sym_eig(s_op, tol);
    rep.b_opt = std::max(eig.eigenvalues.back(), 0.0);
    rep.witness_high = eig.eigenvectors.col(s_op.rows() - 1);

    const LowerVerdict low = lower_pair(k.adjoint(), s_op, tol);
    rep.lower_ok = low.lower_ok;
    rep.a_opt = low.a_opt;
    rep.witness_low = low.witness;
    if (rep.lower_ok) {
        rep.tight = tight_by_sweep(s_op, k, rep.a_opt, rep.b_opt, tol);
        rep.parseval = rep.tight && std::abs(rep.a_opt - 1.0) <= tol.eq_tol;
    }
    return rep;
}

} // namespace framekit::detail
