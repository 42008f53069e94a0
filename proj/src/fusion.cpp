#include "framekit/fusion.hpp"

#include <cmath>
#include <limits>

#include "bounds_detail.hpp"

namespace framekit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_operator(const Mat& k, std::size_t dim, const char* what) {
    if (!k.is_square() || k.rows() != dim)
        throw DimensionMismatch(std::string(what) + ": operator must be square on the ambient space");
    if (!k.is_finite())
        throw NonFinite(std::string(what) + ": operator has non-finite entries");
}

} // namespace

FusionSystem::FusionSystem(std::size_t ambient_dim, std::vector<WeightedSubspace> members)
    : ambient_dim_(ambient_dim), members_(std::move(members)) {
    if (ambient_dim_ == 0)
        throw InvalidInput("fusion system needs a positive ambient dimension");
    if (members_.empty())
        throw EmptyInput("fusion system needs at least one member");
    for (const WeightedSubspace& m : members_) {
        if (m.subspace.ambient_dim() != ambient_dim_)
            throw DimensionMismatch("fusion member lives in the wrong ambient space");
        if (!(m.weight > 0.0) || !std::isfinite(m.weight))
            throw InvalidInput("fusion weights must be positive and finite");
    }
}

Field FusionSystem::field() const {
    Field f = Field::Real;
    for (const WeightedSubspace& m : members_)
        f = combine(f, m.subspace.field());
    return f;
}

std::size_t FusionSystem::coord_dim() const {
    std::size_t total = 0;
    for (const WeightedSubspace& m : members_)
        total += m.subspace.dim();
    return total;
}

double tuple_norm_sq(const EllTwoTuple& t) {
    double acc = 0.0;
    for (const Mat& b : t.blocks)
        acc += norm_sq(b);
    return acc;
}

Complex tuple_inner(const EllTwoTuple& a, const EllTwoTuple& b) {
    if (a.blocks.size() != b.blocks.size())
        throw DimensionMismatch("tuple_inner: block counts differ");
    Complex acc = 0.0;
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        acc += inner(a.blocks[i], b.blocks[i]);
    return acc;
}

Mat fusion_frame_operator(const FusionSystem& w) {
    Mat s = Mat::zeros(w.ambient_dim(), w.ambient_dim(), w.field());
    for (const WeightedSubspace& m : w.members()) {
        const Mat& b = m.subspace.basis();
        if (b.cols() > 0)
            s = s + (m.weight * m.weight) * (b * b.adjoint());
    }
    s.set_field(w.field());
    return s;
}

BoundsReport fusion_bounds(const FusionSystem& w, const Tolerances& tol) {
    const Mat s = fusion_frame_operator(w);
    const EigDecomp eig = sym_eig(s, tol);
    const std::size_t n = w.ambient_dim();

    BoundsReport rep;
    rep.tol = tol;
    rep.a_opt = eig.eigenvalues.front();
    rep.b_opt = eig.eigenvalues.back();
    rep.witness_low = eig.eigenvectors.col(0);
    rep.witness_high = eig.eigenvectors.col(n - 1);
    rep.lower_ok = rep.a_opt > tol.psd_tol;
    rep.tight = std::abs(rep.a_opt - rep.b_opt) <= tol.eq_tol * rep.b_opt;
    rep.parseval = rep.tight && std::abs(rep.a_opt - 1.0) <= tol.eq_tol;

    std::size_t dim_sum = 0;
    for (const WeightedSubspace& m : w.members())
        dim_sum += m.subspace.dim();
    rep.orthonormal = dim_sum == n &&
                      (s - Mat::identity(n, s.field())).frobenius() <=
                          tol.eq_tol * std::max(1.0, s.frobenius());

    rep.v_uniform = true;
    for (const WeightedSubspace& m : w.members())
        if (std::abs(m.weight - w.member(0).weight) > tol.eq_tol * w.member(0).weight)
            rep.v_uniform = false;
    return rep;
}

EllTwoTuple analysis(const FusionSystem& w, const Mat& f, const Tolerances&) {
    if (f.rows() != w.ambient_dim() || f.cols() != 1)
        throw DimensionMismatch("analysis: signal has the wrong shape");
    EllTwoTuple t;
    t.blocks.reserve(w.size());
    for (const WeightedSubspace& m : w.members()) {
        const Mat& b = m.subspace.basis();
        t.blocks.push_back(m.weight * (b * (b.adjoint() * f)));
    }
    return t;
}

Mat synthesis(const FusionSystem& w, const EllTwoTuple& t, const Tolerances& tol) {
    if (t.blocks.size() != w.size())
        throw DimensionMismatch("synthesis: tuple has the wrong block count");
    Mat out = Mat::zeros(w.ambient_dim(), 1, w.field());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Mat& b = t.blocks[i];
        if (b.rows() != w.ambient_dim() || b.cols() != 1)
            throw DimensionMismatch("synthesis: block has the wrong shape");
        const Mat& basis = w.member(i).subspace.basis();
        const Mat resid = b - basis * (basis.adjoint() * b);
        if (norm(resid) > tol.eq_tol * std::max(1.0, norm(b)))
            throw BlockNotInSubspace("synthesis: block leaves its member subspace");
        out = out + w.member(i).weight * b;
    }
    return out;
}

Mat fusion_reconstruct(const FusionSystem& w, const EllTwoTuple& measurements,
                       const Tolerances& tol) {
    const Mat s = fusion_frame_operator(w);
    if (psd_min_eig(s, tol) <= tol.psd_tol)
        throw NotAFusionFrame("fusion_reconstruct: fusion frame operator is singular");
    return solve_hpd(s, synthesis(w, measurements, tol), tol);
}

BoundsReport kfusion_bounds(const FusionSystem& w, const Mat& k, const Tolerances& tol) {
    check_operator(k, w.ambient_dim(), "kfusion_bounds");
    BoundsReport rep = detail::k_lower_bounds(fusion_frame_operator(w), k, tol);
    const BoundsReport plain = fusion_bounds(w, tol);
    rep.orthonormal = plain.orthonormal;
    rep.v_uniform = plain.v_uniform;
    return rep;
}

double kfusion_lower_psd(const FusionSystem& w, const Mat& k, const Tolerances& tol) {
    check_operator(k, w.ambient_dim(), "kfusion_lower_psd");
    if (k.frobenius() == 0.0)
        return kInf;
    Mat gram = k * k.adjoint();
    gram.set_field(k.field());
    const Mat gi = pinv_sqrt(gram, tol);
    const Mat q = range_basis(k, tol);
    const Mat s = fusion_frame_operator(w);
    Mat pencil = q.adjoint() * (gi * s * gi) * q;
    pencil = 0.5 * (pencil + pencil.adjoint());
    return psd_min_eig(pencil, tol);
}

FusionSystem construct_atomic(const Mat& k, const Mat& basis, const Tolerances& tol) {
    if (!k.is_square())
        throw DimensionMismatch("construct_atomic: operator must be square");
    const std::size_t d = k.rows();
    check_operator(k, d, "construct_atomic");
    if (basis.rows() != d || basis.cols() != d)
        throw DimensionMismatch("construct_atomic: basis must be square on the ambient space");
    if ((basis.adjoint() * basis - Mat::identity(d, basis.field())).frobenius() > tol.eq_tol)
        throw InvalidInput("construct_atomic: basis columns are not orthonormal");
    const double knorm = op_norm(k);
    if (knorm == 0.0)
        throw ZeroOperator("construct_atomic: zero operator has no atomic system");

    std::vector<WeightedSubspace> members;
    for (std::size_t n = 0; n < d; ++n) {
        Mat img = k * basis.col(n);
        const double weight = norm(img);
        if (weight <= tol.rank_tol * knorm)
            continue; // zero image, dropped (weights must stay positive)
        img = (1.0 / weight) * img;
        members.push_back({Subspace(d, img, tol), weight});
    }
    return FusionSystem(d, std::move(members));
}

EllTwoTuple atomic_decompose(const FusionSystem& w, const Mat& k, const Mat& f,
                             const Tolerances& tol) {
    check_operator(k, w.ambient_dim(), "atomic_decompose");
    if (f.rows() != w.ambient_dim() || f.cols() != 1)
        throw DimensionMismatch("atomic_decompose: signal has the wrong shape");
    if (!kfusion_bounds(w, k, tol).lower_ok)
        throw NotKFusion("atomic_decompose: lower bound fails, no stable decomposition");

    const Mat t = synthesis_map(w);
    const Mat coords = pinv(t, tol) * (k * f);

    EllTwoTuple out;
    out.blocks.reserve(w.size());
    std::size_t offset = 0;
    for (const WeightedSubspace& m : w.members()) {
        const Mat& basis = m.subspace.basis();
        const std::size_t dim = basis.cols();
        Mat seg(dim, 1, coords.field());
        for (std::size_t r = 0; r < dim; ++r)
            seg.at(r, 0) = coords(offset + r, 0);
        out.blocks.push_back(basis * seg);
        offset += dim;
    }
    return out;
}

AtomicReport verify_atomic(const FusionSystem& w, const Mat& k, const Tolerances& tol) {
    const BoundsReport rep = kfusion_bounds(w, k, tol);
    AtomicReport out;
    out.bessel_b = rep.b_opt;
    out.lower_a = rep.a_opt;
    out.is_atomic = rep.lower_ok && (std::isinf(rep.a_opt) || rep.a_opt > tol.psd_tol);
    if (out.is_atomic) {
        const Mat l = pinv(synthesis_map(w), tol) * k;
        out.decomposition_c = op_norm(l);
        out.factor_l = l;
    }
    return out;
}

QuotientVerdict kfusion_via_quotient(const FusionSystem& w, const Mat& k,
                                     const Tolerances& tol) {
    check_operator(k, w.ambient_dim(), "kfusion_via_quotient");
    const Mat root = psd_sqrt(fusion_frame_operator(w), tol);
    QuotientVerdict verdict;
    try {
        const QuotientOp q = quotient(k.adjoint(), root, tol);
        verdict.bounded = true;
        verdict.norm = q.op_norm;
    } catch (const NullSpaceViolation&) {
        verdict.bounded = false;
    }
    return verdict;
}

Mat synthesis_map(const FusionSystem& w) {
    Mat l(w.ambient_dim(), w.coord_dim(), w.field());
    std::size_t offset = 0;
    for (const WeightedSubspace& m : w.members()) {
        const Mat& basis = m.subspace.basis();
        for (std::size_t c = 0; c < basis.cols(); ++c)
            for (std::size_t r = 0; r < w.ambient_dim(); ++r)
                l.at(r, offset + c) = m.weight * basis(r, c);
        offset += basis.cols();
    }
    return l;
}

PartitionResult partition_kframe(const VectorFrame& f, const Mat& k,
                                 const std::vector<std::vector<std::size_t>>& partition,
                                 const std::optional<std::vector<double>>& weights,
                                 const Tolerances& tol) {
    check_operator(k, f.ambient_dim(), "partition_kframe");
    if (partition.empty())
        throw BadPartition("partition_kframe: no cells");
    std::vector<bool> seen(f.count(), false);
    std::size_t covered = 0;
    for (const auto& cell : partition) {
        if (cell.empty())
            throw BadPartition("partition_kframe: empty cell");
        for (std::size_t idx : cell) {
            if (idx >= f.count())
                throw BadPartition("partition_kframe: index out of range");
            if (seen[idx])
                throw BadPartition("partition_kframe: index used twice");
            seen[idx] = true;
            ++covered;
        }
    }
    if (covered != f.count())
        throw BadPartition("partition_kframe: cells do not cover every vector");
    if (weights) {
        if (weights->size() != partition.size())
            throw InvalidInput("partition_kframe: one weight per cell required");
        for (double v : *weights)
            if (!(v > 0.0) || !std::isfinite(v))
                throw InvalidInput("partition_kframe: weights must be positive");
    }

    const BoundsReport in = kframe_bounds(f, k, tol);
    if (!in.lower_ok)
        throw NotAKFrame("partition_kframe: the input family is not a K-frame");

    std::vector<WeightedSubspace> members;
    double v_min = kInf, v_max = 0.0;
    for (std::size_t i = 0; i < partition.size(); ++i) {
        std::vector<Mat> cols;
        for (std::size_t idx : partition[i])
            cols.push_back(f.vectors().col(idx));
        const double v = weights ? (*weights)[i] : 1.0;
        v_min = std::min(v_min, v);
        v_max = std::max(v_max, v);
        members.push_back({Subspace::span(hcat(cols), tol), v});
    }
    FusionSystem system(f.ambient_dim(), std::move(members));

    CertifiedBounds bounds;
    bounds.lower = (in.a_opt / in.b_opt) * v_min * v_min;
    bounds.upper = static_cast<double>(partition.size()) * v_max * v_max;
    bounds.actual = kfusion_bounds(system, k, tol);
    return {std::move(system), std::move(bounds)};
}

DirectSumResult direct_sum_kfusion(const std::vector<FusionSystem>& systems,
                                   const std::vector<Mat>& ks,
                                   const std::vector<double>& shared_weights,
                                   const Tolerances& tol) {
    if (systems.empty())
        throw EmptyInput("direct_sum_kfusion: no systems");
    if (ks.size() != systems.size())
        throw DimensionMismatch("direct_sum_kfusion: one operator per system required");
    const std::size_t count = systems.front().size();
    if (shared_weights.size() != count)
        throw MemberCountMismatch("direct_sum_kfusion: weight list length != member count");
    for (const FusionSystem& sys : systems)
        if (sys.size() != count)
            throw MemberCountMismatch("direct_sum_kfusion: systems have different member counts");
    for (std::size_t j = 0; j < systems.size(); ++j)
        for (std::size_t i = 0; i < count; ++i)
            if (std::abs(systems[j].member(i).weight - shared_weights[i]) >
                1e-12 * std::max(1.0, shared_weights[i]))
                throw WeightHypothesisFailed(
                    "direct_sum_kfusion: member weights must match the shared list");

    double a_min = kInf, b_max = 0.0;
    for (std::size_t j = 0; j < systems.size(); ++j) {
        check_operator(ks[j], systems[j].ambient_dim(), "direct_sum_kfusion");
        const BoundsReport rep = kfusion_bounds(systems[j], ks[j], tol);
        if (!rep.lower_ok)
            throw NotKFusion("direct_sum_kfusion: an input system fails its lower bound");
        a_min = std::min(a_min, rep.a_opt);
        b_max = std::max(b_max, rep.b_opt);
    }

    std::vector<WeightedSubspace> members;
    std::size_t total_dim = 0;
    for (const FusionSystem& sys : systems)
        total_dim += sys.ambient_dim();
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<Subspace> parts;
        for (const FusionSystem& sys : systems)
            parts.push_back(sys.member(i).subspace);
        members.push_back({direct_sum(parts).sum, shared_weights[i]});
    }
    FusionSystem system(total_dim, std::move(members));

    std::vector<Mat> blocks;
    for (const Mat& k : ks)
        blocks.push_back(k);
    Mat k_sum = block_diag(blocks);

    CertifiedBounds bounds;
    bounds.lower = a_min;
    bounds.upper = b_max;
    bounds.actual = kfusion_bounds(system, k_sum, tol);
    return {std::move(system), std::move(k_sum), std::move(bounds)};
}

CombinedOperatorReport combined_operator_bounds(const FusionSystem& w,
                                                const std::vector<Mat>& ks,
                                                const std::vector<Complex>& coeffs,
                                                const Tolerances& tol) {
    if (ks.empty())
        throw EmptyInput("combined_operator_bounds: no operators");
    if (coeffs.size() != ks.size())
        throw DimensionMismatch("combined_operator_bounds: one coefficient per operator");

    double common = kInf;
    for (const Mat& k : ks) {
        check_operator(k, w.ambient_dim(), "combined_operator_bounds");
        if (k.frobenius() == 0.0)
            throw ZeroOperatorInProduct("combined_operator_bounds: zero operator not allowed");
        const BoundsReport rep = kfusion_bounds(w, k, tol);
        if (!rep.lower_ok)
            throw NotKFusion("combined_operator_bounds: system fails a lower bound");
        common = std::min(common, rep.a_opt);
    }

    CombinedOperatorReport out;
    out.common_lower = common;

    Mat sum = Mat::zeros(w.ambient_dim(), w.ambient_dim(), w.field());
    double coeff_mass = 0.0;
    for (std::size_t j = 0; j < ks.size(); ++j) {
        sum = sum + coeffs[j] * ks[j];
        coeff_mass += std::abs(coeffs[j]);
    }
    out.k_sum = sum;
    out.sum_certified = coeff_mass > 0.0 ? common / (coeff_mass * coeff_mass) : kInf;
    out.sum_actual = kfusion_bounds(w, sum, tol);

    Mat prod = ks.front();
    double tail_norms = 1.0;
    for (std::size_t j = 1; j < ks.size(); ++j) {
        prod = prod * ks[j];
        const double nj = op_norm(ks[j]);
        tail_norms *= nj * nj;
    }
    out.k_product = prod;
    out.product_certified = common / tail_norms;
    out.product_actual = kfusion_bounds(w, prod, tol);
    return out;
}

IntersectionResult intersect_system(const FusionSystem& w, const Subspace& v,
                                    const std::optional<Mat>& k, const Tolerances& tol) {
    if (v.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch("intersect_system: subspace lives in the wrong space");
    for (const WeightedSubspace& m : w.members())
        if (!commute(m.subspace, v, tol))
            throw NonCommutingProjections(
                "intersect_system: a member projection does not commute with the subspace");

    const Mat pv = v.project().matrix;
    const Mat pv_dag = pinv(pv, tol);
    if (k) {
        check_operator(*k, w.ambient_dim(), "intersect_system");
        const Mat k_adj = k->adjoint();
        if ((pv_dag * k_adj - k_adj * pv_dag).frobenius() >
            tol.eq_tol * std::max(1.0, k->frobenius()))
            throw CommutationHypothesisFailed(
                "intersect_system: pinv(P_V) does not commute with the adjoint operator");
    }

    std::vector<WeightedSubspace> members;
    for (const WeightedSubspace& m : w.members())
        members.push_back({intersect(m.subspace, v, tol), m.weight});
    FusionSystem out_system(w.ambient_dim(), std::move(members));

    IntersectionReport rep;
    const Mat s_in = fusion_frame_operator(w);
    const Mat s_out = fusion_frame_operator(out_system);
    rep.bessel_in = std::max(sym_eig(s_in, tol).eigenvalues.back(), 0.0);
    rep.bessel_out = std::max(sym_eig(s_out, tol).eigenvalues.back(), 0.0);

    Rng rng(0x696e7473);
    const double slack = 1e-9 * std::max(1.0, rep.bessel_in);

    if (!k) {
        const BoundsReport in = fusion_bounds(w, tol);
        const BoundsReport actual = kfusion_bounds(out_system, pv, tol);
        rep.lower_ok = actual.lower_ok;
        rep.actual_lower = actual.a_opt;
        rep.certified_lower = in.lower_ok ? in.a_opt : 0.0;
        if (in.lower_ok) {
            for (int probe = 0; probe < 100; ++probe) {
                const Mat f = random_unit_vec(rng, w.ambient_dim(), w.field());
                const double lhs = rep.certified_lower * norm_sq(pv * f);
                const double rhs = inner(s_out * f, f).real();
                rep.max_violation = std::max(rep.max_violation, lhs - rhs);
            }
            rep.sweep_ok = rep.max_violation <= slack;
        }
        return {std::move(out_system), rep};
    }

    const BoundsReport in = kfusion_bounds(w, *k, tol);
    const double pv_dag_norm = op_norm(pv_dag);
    rep.certified_lower =
        (in.lower_ok && pv_dag_norm > 0.0 && std::isfinite(in.a_opt))
            ? in.a_opt / (pv_dag_norm * pv_dag_norm)
            : (std::isinf(in.a_opt) ? kInf : 0.0);

    // optimal constant restricted to R(P_V): compress both sides onto V
    const Mat q = v.basis();
    if (q.cols() == 0) {
        rep.lower_ok = true; // nothing to test on the zero subspace
        rep.actual_lower = kInf;
        return {std::move(out_system), rep};
    }
    Mat s_c = q.adjoint() * s_out * q;
    s_c = 0.5 * (s_c + s_c.adjoint());
    const detail::LowerVerdict restricted = detail::lower_pair(k->adjoint() * q, s_c, tol);
    rep.lower_ok = restricted.lower_ok;
    rep.actual_lower = restricted.a_opt;

    if (in.lower_ok && std::isfinite(rep.certified_lower)) {
        for (int probe = 0; probe < 100; ++probe) {
            Mat f = pv * random_unit_vec(rng, w.ambient_dim(), w.field());
            const double fn = norm(f);
            if (fn <= 1e-12)
                continue;
            f = (1.0 / fn) * f;
            const double lhs = rep.certified_lower * norm_sq(k->adjoint() * f);
            const double rhs = inner(s_out * f, f).real();
            rep.max_violation = std::max(rep.max_violation, lhs - rhs);
        }
        rep.sweep_ok = rep.max_violation <= slack;
    }
    return {std::move(out_system), rep};
}

} // namespace framekit
