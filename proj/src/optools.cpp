#include "framekit/optools.hpp"

#include <cmath>

namespace framekit {

DouglasReport douglas_check(const Mat& s, const Mat& t, const Tolerances& tol) {
    if (s.rows() != t.rows())
        throw DimensionMismatch("douglas_check: codomain dimensions differ");
    if (!s.is_finite() || !t.is_finite())
        throw NonFinite("douglas_check: non-finite entries");

    DouglasReport report;

    // (1) projector residual on R(t)
    report.range_inclusion = range_contains(t, s, tol);

    // (2) N(t*) ⊆ N(s*): every left-null direction of t must kill s*
    const Mat left_null = null_basis(t.adjoint(), tol);
    report.majorized = (s.adjoint() * left_null).frobenius() <=
                       tol.eq_tol * std::max(1.0, s.frobenius());

    // (3) the minimal-norm factor candidate actually factors s
    const Mat l = pinv(t, tol) * s;
    report.factorizable =
        (t * l - s).frobenius() <= tol.eq_tol * std::max(1.0, s.frobenius());

    report.consistent = (report.range_inclusion == report.majorized) &&
                        (report.majorized == report.factorizable);

    if (report.holds()) {
        report.factor_l = l;
        // smallest α with s s* ≤ α t t* is ||(t t*)^{-1/2} s||^2 on R(t)
        Mat gram_t = t * t.adjoint();
        gram_t.set_field(t.field());
        report.alpha_min = std::pow(op_norm(pinv_sqrt(gram_t, tol) * s), 2);
    }
    return report;
}

QuotientOp quotient(const Mat& a, const Mat& b, const Tolerances& tol) {
    if (a.cols() != b.cols())
        throw DimensionMismatch("quotient: operators must share a domain");
    if (!a.is_finite() || !b.is_finite())
        throw NonFinite("quotient: non-finite entries");

    const Mat nb = null_basis(b, tol);
    if ((a * nb).frobenius() > tol.eq_tol * std::max(1.0, a.frobenius()))
        throw NullSpaceViolation("quotient: N(b) is not contained in N(a)");

    QuotientOp q;
    q.domain_basis = range_basis(b, tol);
    q.matrix = a * (pinv(b, tol) * q.domain_basis);
    q.op_norm = op_norm(q.matrix);
    return q;
}

} // namespace framekit
