#include "framekit/frames.hpp"

#include <cmath>

#include "bounds_detail.hpp"

namespace framekit {

VectorFrame::VectorFrame(std::size_t ambient_dim, Mat vectors)
    : ambient_dim_(ambient_dim), vectors_(std::move(vectors)) {
    if (ambient_dim_ == 0)
        throw InvalidInput("vector frame needs a positive ambient dimension");
    if (vectors_.rows() != ambient_dim_)
        throw DimensionMismatch("frame vectors have the wrong ambient dimension");
    if (vectors_.cols() == 0)
        throw EmptyInput("a frame needs at least one vector");
    if (!vectors_.is_finite())
        throw NonFinite("frame vectors must be finite");
}

Mat frame_operator(const VectorFrame& f) {
    Mat s = f.vectors() * f.vectors().adjoint();
    s.set_field(f.field());
    return s;
}

BoundsReport frame_bounds(const VectorFrame& f, const Tolerances& tol) {
    const Mat s = frame_operator(f);
    const EigDecomp eig = sym_eig(s, tol);
    const std::size_t n = f.ambient_dim();

    BoundsReport rep;
    rep.tol = tol;
    rep.a_opt = eig.eigenvalues.front();
    rep.b_opt = eig.eigenvalues.back();
    rep.witness_low = eig.eigenvectors.col(0);
    rep.witness_high = eig.eigenvectors.col(n - 1);
    rep.lower_ok = rep.a_opt > tol.psd_tol;
    rep.tight = std::abs(rep.a_opt - rep.b_opt) <= tol.eq_tol * rep.b_opt;
    rep.parseval = rep.tight && std::abs(rep.a_opt - 1.0) <= tol.eq_tol;
    return rep;
}

Mat reconstruct(const VectorFrame& fr, const Mat& f, const Tolerances& tol) {
    if (f.rows() != fr.ambient_dim() || f.cols() != 1)
        throw DimensionMismatch("reconstruct: signal has the wrong shape");
    const Mat s = frame_operator(fr);
    if (psd_min_eig(s, tol) <= tol.psd_tol)
        throw NotAFrame("reconstruct: lower frame bound fails");
    const Mat& v = fr.vectors();
    // primary order: sum_i <f, S^{-1} f_i> f_i = F F* S^{-1} f
    const Mat out = v * (v.adjoint() * solve_hpd(s, f, tol));
    // dual order: sum_i <f, f_i> S^{-1} f_i; both must agree or the lower
    // bound was too weak to reconstruct at this precision
    const Mat dual = solve_hpd(s, v * (v.adjoint() * f), tol);
    if (norm(out - dual) > tol.eq_tol * std::max(1.0, norm(f)))
        throw NotAFrame("reconstruct: dual-order validation failed");
    return out;
}

BoundsReport kframe_bounds(const VectorFrame& f, const Mat& k, const Tolerances& tol) {
    if (k.rows() != f.ambient_dim() || !k.is_square())
        throw DimensionMismatch("kframe_bounds: operator must be square on the ambient space");
    if (!k.is_finite())
        throw NonFinite("kframe_bounds: operator has non-finite entries");
    return detail::k_lower_bounds(frame_operator(f), k, tol);
}

bool is_exact(const VectorFrame& f, const Tolerances& tol) {
    const Mat s = frame_operator(f);
    for (std::size_t i = 0; i < f.count(); ++i) {
        const Mat fi = f.vectors().col(i);
        Mat reduced = s - fi * fi.adjoint();
        reduced = 0.5 * (reduced + reduced.adjoint());
        if (psd_min_eig(reduced, tol) > tol.psd_tol)
            return false; // still a frame without vector i
    }
    return true;
}

} // namespace framekit
