#include "framekit/subspace.hpp"

#include <cmath>

namespace framekit {

Subspace::Subspace(std::size_t ambient_dim, Mat basis, const Tolerances& tol)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (basis_.rows() != ambient_dim_)
        throw DimensionMismatch("subspace basis has the wrong ambient dimension");
    if (basis_.cols() > ambient_dim_)
        throw DimensionMismatch("subspace basis has more columns than the ambient dimension");
    if (!basis_.is_finite())
        throw NonFinite("subspace basis has non-finite entries");
    const Mat gram = basis_.adjoint() * basis_;
    if ((gram - Mat::identity(basis_.cols(), basis_.field())).frobenius() > tol.eq_tol)
        throw InvalidInput("subspace basis columns are not orthonormal");
}

Subspace Subspace::span(const Mat& vectors, const Tolerances& tol) {
    return Subspace(vectors.rows(), range_basis(vectors, tol), tol);
}

Subspace Subspace::zero(std::size_t ambient_dim, Field field) {
    return Subspace(ambient_dim, Mat(ambient_dim, 0, field));
}

Subspace Subspace::full(std::size_t ambient_dim, Field field) {
    return Subspace(ambient_dim, Mat::identity(ambient_dim, field));
}

Projection Subspace::project() const { return {basis_ * basis_.adjoint()}; }

bool Subspace::contains(const Mat& v, const Tolerances& tol) const {
    if (v.rows() != ambient_dim_ || v.cols() != 1)
        throw DimensionMismatch("contains: vector has the wrong shape");
    const Mat resid = v - basis_ * (basis_.adjoint() * v);
    return norm(resid) <= tol.eq_tol * std::max(1.0, norm(v));
}

bool commute(const Subspace& u, const Subspace& v, const Tolerances& tol) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("commute: ambient dimensions differ");
    const Mat pu = u.project().matrix;
    const Mat pv = v.project().matrix;
    return (pu * pv - pv * pu).frobenius() <= tol.eq_tol;
}

Subspace intersect(const Subspace& u, const Subspace& v, const Tolerances& tol) {
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("intersect: ambient dimensions differ");
    const std::size_t d = u.ambient_dim();
    const Field field = combine(u.field(), v.field());
    if (u.is_zero() || v.is_zero())
        return Subspace::zero(d, field);

    const Mat prod = u.project().matrix * v.project().matrix;
    const SvdDecomp dec = svd(prod);
    std::vector<Mat> keep;
    for (std::size_t k = 0; k < dec.s.size(); ++k)
        if (dec.s[k] >= 1.0 - tol.rank_tol)
            keep.push_back(dec.u.col(k));
    if (keep.empty())
        return Subspace::zero(d, field);
    return Subspace(d, hcat(keep), tol);
}

bool same_subspace(const Subspace& u, const Subspace& v, const Tolerances& tol) {
    if (u.ambient_dim() != v.ambient_dim())
        return false;
    return range_contains(u.basis(), v.basis(), tol) && range_contains(v.basis(), u.basis(), tol);
}

DirectSum direct_sum(const std::vector<Subspace>& parts) {
    if (parts.empty())
        throw EmptyInput("direct_sum of no subspaces");
    std::size_t total = 0;
    Field field = Field::Real;
    for (const Subspace& p : parts) {
        total += p.ambient_dim();
        field = combine(field, p.field());
    }

    DirectSum out{Subspace::zero(total, field), {}};
    std::vector<Mat> blocks;
    std::size_t offset = 0;
    for (const Subspace& p : parts) {
        Mat embed(total, p.ambient_dim(), field);
        for (std::size_t c = 0; c < p.ambient_dim(); ++c)
            embed.at(offset + c, c) = 1.0;
        out.embeddings.push_back(embed);
        blocks.push_back(p.basis());
        offset += p.ambient_dim();
    }
    Mat basis = block_diag(blocks);
    basis.set_field(field);
    out.sum = Subspace(total, std::move(basis));
    return out;
}

} // namespace framekit
