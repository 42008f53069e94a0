#include "framekit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace framekit {

namespace {

const kernels::Backend& kx() { return kernels::active_backend(); }

constexpr double kTinyScale = 1e-300;
constexpr int kMaxSweeps = 64;

// Jacobi rotation diagonalizing the Hermitian 2x2 [[app, g], [conj(g), aqq]]
// with app, aqq real. Returns {c, s} for the unitary [[c, s], [-conj(s), c]].
struct Rotation {
    double c;
    Complex s;
};

Rotation make_rotation(double app, double aqq, Complex g) {
    const double mag = std::abs(g);
    const Complex phase = g / mag;
    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, (t * c) * phase};
}

void check_finite(const Mat& m, const char* what) {
    if (!m.is_finite())
        throw NonFinite(std::string(what) + ": non-finite entries");
}

void check_hermitian(const Mat& m, const Tolerances& tol, const char* what) {
    if (!m.is_square())
        throw NotHermitian(std::string(what) + ": matrix is not square");
    const double scale = std::max(m.frobenius(), kTinyScale);
    if (m.hermitian_error() > tol.eq_tol * scale)
        throw NotHermitian(std::string(what) + ": matrix is not Hermitian within tolerance");
}

double offdiag_norm(const Mat& a) {
    double acc = 0.0;
    for (std::size_t c = 0; c < a.cols(); ++c)
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != c)
                acc += std::norm(a(r, c));
    return std::sqrt(acc);
}

} // namespace

EigDecomp sym_eig(const Mat& m, const Tolerances& tol) {
    check_finite(m, "sym_eig");
    check_hermitian(m, tol, "sym_eig");
    const std::size_t n = m.rows();

    // Work on the Hermitian average so roundoff asymmetry cannot drift.
    Mat a = 0.5 * (m + m.adjoint());
    a.set_field(m.field());
    Mat v = Mat::identity(n, m.field());

    const double scale = std::max(a.frobenius(), kTinyScale);
    const double conv = 1e-15 * scale;
    const double skip = conv / (4.0 * static_cast<double>(std::max<std::size_t>(n, 1)));

    for (int sweep = 0; sweep < kMaxSweeps && offdiag_norm(a) > conv; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex g = a(p, q);
                if (std::abs(g) <= skip)
                    continue;
                const Rotation rot = make_rotation(a(p, p).real(), a(q, q).real(), g);
                // A <- J* A J: column pair, then row pair.
                kx().rot(n, a.col_ptr(p), a.col_ptr(q), rot.c, rot.s);
                const Complex sc = std::conj(rot.s);
                for (std::size_t i = 0; i < n; ++i) {
                    const Complex rp = a(p, i);
                    const Complex rq = a(q, i);
                    a.at(p, i) = rot.c * rp - rot.s * rq;
                    a.at(q, i) = sc * rp + rot.c * rq;
                }
                kx().rot(n, v.col_ptr(p), v.col_ptr(q), rot.c, rot.s);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

    EigDecomp out;
    out.eigenvalues.resize(n);
    out.eigenvectors = Mat(n, n, m.field());
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r)
            out.eigenvectors.at(r, k) = v(r, order[k]);
    }
    return out;
}

SvdDecomp svd(const Mat& m) {
    check_finite(m, "svd");
    if (m.rows() < m.cols()) {
        SvdDecomp t = svd(m.adjoint());
        return {std::move(t.v), std::move(t.s), std::move(t.u)};
    }

    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Mat b = m;
    Mat v = Mat::identity(cols, m.field());

    if (cols > 0) {
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            double max_sq = 0.0;
            std::vector<double> colsq(cols);
            for (std::size_t j = 0; j < cols; ++j) {
                colsq[j] = kx().nrm2sq(rows, b.col_ptr(j));
                max_sq = std::max(max_sq, colsq[j]);
            }
            const double dead = 1e-30 * max_sq; // columns this small are numerically zero
            bool rotated = false;
            for (std::size_t p = 0; p + 1 < cols; ++p) {
                for (std::size_t q = p + 1; q < cols; ++q) {
                    if (colsq[p] <= dead || colsq[q] <= dead)
                        continue;
                    const Complex g = kx().dotc(rows, b.col_ptr(p), b.col_ptr(q));
                    if (std::abs(g) <= 1e-15 * std::sqrt(colsq[p] * colsq[q]))
                        continue;
                    rotated = true;
                    const Rotation rot = make_rotation(colsq[p], colsq[q], g);
                    kx().rot(rows, b.col_ptr(p), b.col_ptr(q), rot.c, rot.s);
                    kx().rot(cols, v.col_ptr(p), v.col_ptr(q), rot.c, rot.s);
                    colsq[p] = kx().nrm2sq(rows, b.col_ptr(p));
                    colsq[q] = kx().nrm2sq(rows, b.col_ptr(q));
                }
            }
            if (!rotated)
                break;
        }
    }

    std::vector<double> s(cols);
    for (std::size_t j = 0; j < cols; ++j)
        s[j] = std::sqrt(kx().nrm2sq(rows, b.col_ptr(j)));

    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return s[i] > s[j]; });

    SvdDecomp out;
    out.s.resize(cols);
    out.u = Mat(rows, cols, m.field());
    out.v = Mat(cols, cols, m.field());
    const double s_max = cols ? s[order[0]] : 0.0;
    const double drop = std::max(s_max, kTinyScale) * 1e-13 * static_cast<double>(std::max(rows, cols));

    std::vector<std::size_t> missing;
    for (std::size_t k = 0; k < cols; ++k) {
        const std::size_t j = order[k];
        out.s[k] = s[j];
        for (std::size_t r = 0; r < cols; ++r)
            out.v.at(r, k) = v(r, j);
        if (s[j] > drop) {
            const double inv = 1.0 / s[j];
            for (std::size_t r = 0; r < rows; ++r)
                out.u.at(r, k) = inv * b(r, j);
        } else {
            missing.push_back(k);
        }
    }

    // Left vectors for (numerically) zero singular values: fill with unit
    // vectors orthogonal to everything placed so far, chosen greedily from
    // the standard basis by largest residual. Unfilled slots are all-zero
    // columns, so projecting against every column is safe.
    for (const std::size_t k : missing) {
        Mat best_res(rows, 1, m.field());
        double best_sq = -1.0;
        for (std::size_t cand = 0; cand < rows; ++cand) {
            Mat w(rows, 1, m.field());
            w.at(cand, 0) = 1.0;
            for (int pass = 0; pass < 2; ++pass)
                for (std::size_t c = 0; c < cols; ++c) {
                    const Complex proj = kx().dotc(rows, out.u.col_ptr(c), w.data());
                    kx().axpy(rows, -proj, out.u.col_ptr(c), w.data());
                }
            const double sq = kx().nrm2sq(rows, w.data());
            if (sq > best_sq) {
                best_sq = sq;
                best_res = w;
            }
        }
        const double nm = std::sqrt(best_sq);
        for (std::size_t r = 0; r < rows; ++r)
            out.u.at(r, k) = best_res(r, 0) / nm;
    }
    return out;
}

Mat pinv(const Mat& m, const Tolerances& tol) {
    if (m.rows() == 0 || m.cols() == 0)
        return Mat(m.cols(), m.rows(), m.field());
    const SvdDecomp d = svd(m);
    const double cut = d.s.empty() ? 0.0 : tol.rank_tol * d.s[0];
    Mat out(m.cols(), m.rows(), m.field());
    // sum over kept singular triples: (1/s_k) v_k u_k^*
    for (std::size_t k = 0; k < d.s.size(); ++k) {
        if (d.s[k] <= cut || d.s[k] == 0.0)
            continue;
        const double inv = 1.0 / d.s[k];
        for (std::size_t c = 0; c < m.rows(); ++c) {
            const Complex w = inv * std::conj(d.u(c, k));
            if (w != 0.0)
                kx().axpy(m.cols(), w, d.v.col_ptr(k), out.col_ptr(c));
        }
    }
    return out;
}

double psd_min_eig(const Mat& m, const Tolerances& tol) {
    const EigDecomp d = sym_eig(m, tol);
    return d.eigenvalues.empty() ? 0.0 : d.eigenvalues.front();
}

Mat range_basis(const Mat& m, const Tolerances& tol) {
    if (m.rows() == 0 || m.cols() == 0)
        return Mat(m.rows(), 0, m.field());
    const SvdDecomp d = svd(m);
    const double cut = d.s.empty() ? 0.0 : tol.rank_tol * d.s[0];
    std::size_t rank = 0;
    while (rank < d.s.size() && d.s[rank] > cut && d.s[rank] > 0.0)
        ++rank;
    Mat q(m.rows(), rank, m.field());
    for (std::size_t k = 0; k < rank; ++k)
        for (std::size_t r = 0; r < m.rows(); ++r)
            q.at(r, k) = d.u(r, k);
    return q;
}

Mat complete_basis(const Mat& q) {
    const std::size_t d = q.rows();
    const std::size_t k = q.cols();
    Mat out(d, d - k, q.field());
    Mat placed = q;
    for (std::size_t add = 0; add < d - k; ++add) {
        Mat best(d, 1, q.field());
        double best_sq = -1.0;
        for (std::size_t cand = 0; cand < d; ++cand) {
            Mat w(d, 1, q.field());
            w.at(cand, 0) = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t c = 0; c < placed.cols(); ++c) {
                    const Complex proj = kx().dotc(d, placed.col_ptr(c), w.data());
                    kx().axpy(d, -proj, placed.col_ptr(c), w.data());
                }
                for (std::size_t c = 0; c < add; ++c) {
                    const Complex proj = kx().dotc(d, out.col_ptr(c), w.data());
                    kx().axpy(d, -proj, out.col_ptr(c), w.data());
                }
            }
            const double sq = kx().nrm2sq(d, w.data());
            if (sq > best_sq) {
                best_sq = sq;
                best = w;
            }
        }
        const double nm = std::sqrt(best_sq);
        for (std::size_t r = 0; r < d; ++r)
            out.at(r, add) = best(r, 0) / nm;
    }
    return out;
}

Mat null_basis(const Mat& m, const Tolerances& tol) {
    return complete_basis(range_basis(m.adjoint(), tol));
}

bool range_contains(const Mat& t, const Mat& s, const Tolerances& tol) {
    if (t.rows() != s.rows())
        throw DimensionMismatch("range_contains: row counts differ");
    check_finite(t, "range_contains");
    check_finite(s, "range_contains");
    const Mat q = range_basis(t, tol);
    const Mat resid = s - q * (q.adjoint() * s);
    return resid.frobenius() <= tol.rank_tol * std::max(1.0, s.frobenius());
}

namespace {

Mat eig_rebuild(const EigDecomp& d, const std::vector<double>& lam, Field field) {
    const std::size_t n = d.eigenvalues.size();
    Mat out(n, n, field);
    for (std::size_t k = 0; k < n; ++k) {
        if (lam[k] == 0.0)
            continue;
        for (std::size_t c = 0; c < n; ++c) {
            const Complex w = lam[k] * std::conj(d.eigenvectors(c, k));
            if (w != 0.0)
                kx().axpy(n, w, d.eigenvectors.col_ptr(k), out.col_ptr(c));
        }
    }
    return out;
}

std::vector<double> psd_clamped_eigs(const EigDecomp& d, const Tolerances& tol,
                                     const char* what) {
    const double top = d.eigenvalues.empty() ? 0.0 : std::abs(d.eigenvalues.back());
    const double floor_ok = -tol.psd_tol * std::max(1.0, top);
    std::vector<double> lam = d.eigenvalues;
    for (double& x : lam) {
        if (x < floor_ok)
            throw NotPositiveSemidefinite(std::string(what) +
                                          ": eigenvalue below the PSD slack");
        x = std::max(x, 0.0);
    }
    return lam;
}

} // namespace

Mat psd_sqrt(const Mat& m, const Tolerances& tol) {
    const EigDecomp d = sym_eig(m, tol);
    std::vector<double> lam = psd_clamped_eigs(d, tol, "psd_sqrt");
    // eigenvalues under the rank cutoff are numerical zeros; zeroing them
    // here keeps the root's null space aligned with the rank convention
    // used everywhere else (sqrt would otherwise inflate 1e-16 junk to 1e-8)
    const double top = lam.empty() ? 0.0 : *std::max_element(lam.begin(), lam.end());
    const double cut = tol.rank_tol * top;
    for (double& x : lam)
        x = x > cut ? std::sqrt(x) : 0.0;
    return eig_rebuild(d, lam, m.field());
}

Mat pinv_sqrt(const Mat& m, const Tolerances& tol) {
    const EigDecomp d = sym_eig(m, tol);
    std::vector<double> lam = psd_clamped_eigs(d, tol, "pinv_sqrt");
    const double top = lam.empty() ? 0.0 : *std::max_element(lam.begin(), lam.end());
    const double cut = tol.rank_tol * top;
    for (double& x : lam)
        x = (x > cut && x > 0.0) ? 1.0 / std::sqrt(x) : 0.0;
    return eig_rebuild(d, lam, m.field());
}

double op_norm(const Mat& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return 0.0;
    const SvdDecomp d = svd(m);
    return d.s.empty() ? 0.0 : d.s[0];
}

std::size_t rank_of(const Mat& m, const Tolerances& tol) {
    return range_basis(m, tol).cols();
}

Mat solve_hpd(const Mat& s, const Mat& b, const Tolerances& tol) {
    const Mat p = pinv(s, tol);
    Mat x = p * b;
    x = x + p * (b - s * x);
    return x;
}

Mat from_diag(const std::vector<double>& d, Field field) {
    Mat m(d.size(), d.size(), field);
    for (std::size_t i = 0; i < d.size(); ++i)
        m.at(i, i) = d[i];
    return m;
}

} // namespace framekit
