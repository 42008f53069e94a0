#include "framekit/mat.hpp"

#include <cmath>
#include <cstddef>

namespace framekit {

namespace {
const kernels::Backend& kx() { return kernels::active_backend(); }
} // namespace

Mat::Mat(std::size_t rows, std::size_t cols, std::vector<Complex> entries, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count does not match rows*cols");
    if (field_ == Field::Real)
        for (const Complex& z : data_)
            if (z.imag() != 0.0)
                throw InvalidInput("real-tagged matrix has a nonzero imaginary part");
}

Mat::Mat(std::initializer_list<std::initializer_list<Complex>> rows, Field field)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0), field_(field),
      data_(rows_ * cols_) {
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ragged initializer");
        std::size_t c = 0;
        for (const Complex& z : row) {
            if (field_ == Field::Real && z.imag() != 0.0)
                throw InvalidInput("real-tagged matrix has a nonzero imaginary part");
            at(r, c++) = z;
        }
        ++r;
    }
}

Mat Mat::identity(std::size_t n, Field field) {
    Mat m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1.0;
    return m;
}

Mat Mat::zeros(std::size_t rows, std::size_t cols, Field field) { return Mat(rows, cols, field); }

Mat Mat::col_vec(std::vector<Complex> entries, Field field) {
    const std::size_t n = entries.size();
    return Mat(n, 1, std::move(entries), field);
}

Mat Mat::col(std::size_t c) const {
    Mat v(rows_, 1, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        v.at(r, 0) = (*this)(r, c);
    return v;
}

void Mat::set_col(std::size_t c, const Mat& v) {
    if (v.rows() != rows_ || v.cols() != 1)
        throw DimensionMismatch("set_col: wrong vector shape");
    for (std::size_t r = 0; r < rows_; ++r)
        at(r, c) = v(r, 0);
    field_ = combine(field_, v.field());
}

Mat Mat::adjoint() const {
    Mat m(cols_, rows_, field_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            m.at(c, r) = std::conj((*this)(r, c));
    return m;
}

Mat Mat::transpose() const {
    Mat m(cols_, rows_, field_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            m.at(c, r) = (*this)(r, c);
    return m;
}

Mat Mat::conjugate() const {
    Mat m(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = std::conj(data_[i]);
    return m;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix addition shape mismatch");
    Mat m(rows_, cols_, combine(field_, o.field_));
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] + o.data_[i];
    return m;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("matrix subtraction shape mismatch");
    Mat m(rows_, cols_, combine(field_, o.field_));
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = data_[i] - o.data_[i];
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_, field_);
    for (std::size_t i = 0; i < data_.size(); ++i)
        m.data_[i] = -data_[i];
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_)
        throw DimensionMismatch("matrix product shape mismatch");
    Mat m(rows_, o.cols_, combine(field_, o.field_));
    // C(:,j) += B(l,j) * A(:,l); the axpy is the vectorized inner loop.
    for (std::size_t j = 0; j < o.cols_; ++j) {
        Complex* cj = m.col_ptr(j);
        for (std::size_t l = 0; l < cols_; ++l) {
            const Complex b = o(l, j);
            if (b != 0.0)
                kx().axpy(rows_, b, col_ptr(l), cj);
        }
    }
    return m;
}

Mat operator*(Complex s, const Mat& m) {
    Mat r = m;
    r.field_ = combine(m.field_, s.imag() == 0.0 ? Field::Real : Field::Complex);
    if (!r.data_.empty())
        kx().scal(r.data_.size(), s, r.data_.data());
    return r;
}

Mat operator*(double s, const Mat& m) { return Complex(s, 0.0) * m; }

double Mat::frobenius() const {
    if (data_.empty())
        return 0.0;
    return std::sqrt(kx().nrm2sq(data_.size(), data_.data()));
}

double Mat::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_)
        m = std::max(m, std::abs(z));
    return m;
}

Complex Mat::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i)
        t += (*this)(i, i);
    return t;
}

bool Mat::is_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

double Mat::hermitian_error() const {
    if (!is_square())
        return frobenius() + 1.0;
    double acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r) {
            const Complex d = (*this)(r, c) - std::conj((*this)(c, r));
            acc += d.real() * d.real() + d.imag() * d.imag();
        }
    return std::sqrt(acc);
}

Complex inner(const Mat& x, const Mat& y) {
    if (x.rows() != y.rows() || x.cols() != 1 || y.cols() != 1)
        throw DimensionMismatch("inner product needs equal-length column vectors");
    // kernels::dotc conjugates its first argument; <x,y> conjugates y.
    return kx().dotc(x.rows(), y.data(), x.data());
}

double norm_sq(const Mat& v) {
    if (v.empty())
        return 0.0;
    return kx().nrm2sq(v.rows() * v.cols(), v.data());
}

double norm(const Mat& v) { return std::sqrt(norm_sq(v)); }

bool approx_eq(const Mat& a, const Mat& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        return false;
    return (a - b).frobenius() <= tol;
}

Mat hcat(const std::vector<Mat>& blocks) {
    if (blocks.empty())
        throw EmptyInput("hcat of no blocks");
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    Field f = Field::Real;
    for (const Mat& b : blocks) {
        if (b.rows() != rows)
            throw DimensionMismatch("hcat row mismatch");
        cols += b.cols();
        f = combine(f, b.field());
    }
    Mat m(rows, cols, f);
    std::size_t off = 0;
    for (const Mat& b : blocks) {
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t r = 0; r < rows; ++r)
                m.at(r, off + c) = b(r, c);
        off += b.cols();
    }
    return m;
}

Mat vcat(const std::vector<Mat>& blocks) {
    if (blocks.empty())
        throw EmptyInput("vcat of no blocks");
    const std::size_t cols = blocks.front().cols();
    std::size_t rows = 0;
    Field f = Field::Real;
    for (const Mat& b : blocks) {
        if (b.cols() != cols)
            throw DimensionMismatch("vcat column mismatch");
        rows += b.rows();
        f = combine(f, b.field());
    }
    Mat m(rows, cols, f);
    std::size_t off = 0;
    for (const Mat& b : blocks) {
        for (std::size_t c = 0; c < cols; ++c)
            for (std::size_t r = 0; r < b.rows(); ++r)
                m.at(off + r, c) = b(r, c);
        off += b.rows();
    }
    return m;
}

Mat block_diag(const std::vector<Mat>& blocks) {
    if (blocks.empty())
        throw EmptyInput("block_diag of no blocks");
    std::size_t rows = 0, cols = 0;
    Field f = Field::Real;
    for (const Mat& b : blocks) {
        rows += b.rows();
        cols += b.cols();
        f = combine(f, b.field());
    }
    Mat m(rows, cols, f);
    std::size_t ro = 0, co = 0;
    for (const Mat& b : blocks) {
        for (std::size_t c = 0; c < b.cols(); ++c)
            for (std::size_t r = 0; r < b.rows(); ++r)
                m.at(ro + r, co + c) = b(r, c);
        ro += b.rows();
        co += b.cols();
    }
    return m;
}

} // namespace framekit
