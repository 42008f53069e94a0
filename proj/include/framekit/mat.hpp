#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framekit/errors.hpp"
#include "framekit/kernels.hpp"

namespace framekit {

/// Scalar field of a matrix. Storage is always complex<double>; a Real tag
/// asserts that every entry has zero imaginary part, which the arithmetic
/// preserves exactly (products and sums of reals stay real in IEEE terms).
enum class Field { Real, Complex };

inline Field combine(Field a, Field b) {
    return (a == Field::Real && b == Field::Real) ? Field::Real : Field::Complex;
}

/// Dense matrix, column-major. Doubles as the vector type (n x 1).
/// Zero-column matrices are legal; they carry bases of the zero subspace.
class Mat {
public:
    Mat() : rows_(0), cols_(0), field_(Field::Real) {}
    Mat(std::size_t rows, std::size_t cols, Field field = Field::Complex)
        : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<Complex> entries, Field field);

    /// Row-major initializer for small literals: Mat({{1,0},{0,1}}, Field::Real).
    Mat(std::initializer_list<std::initializer_list<Complex>> rows, Field field = Field::Complex);

    static Mat identity(std::size_t n, Field field = Field::Complex);
    static Mat zeros(std::size_t rows, std::size_t cols, Field field = Field::Complex);
    /// Column vector from entries.
    static Mat col_vec(std::vector<Complex> entries, Field field = Field::Complex);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Field field() const { return field_; }
    bool empty() const { return data_.empty(); }

    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
    Complex& at(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }

    const Complex* data() const { return data_.data(); }
    Complex* data() { return data_.data(); }
    const Complex* col_ptr(std::size_t c) const { return data_.data() + c * rows_; }
    Complex* col_ptr(std::size_t c) { return data_.data() + c * rows_; }

    void set_field(Field f) { field_ = f; }

    Mat col(std::size_t c) const;
    void set_col(std::size_t c, const Mat& v);

    Mat adjoint() const;
    Mat transpose() const;
    Mat conjugate() const;

    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat operator-() const;
    Mat operator*(const Mat& o) const;
    friend Mat operator*(Complex s, const Mat& m);
    friend Mat operator*(double s, const Mat& m);

    double frobenius() const;
    double max_abs() const;
    Complex trace() const;
    bool is_finite() const;
    /// Frobenius norm of M - M*.
    double hermitian_error() const;
    bool is_square() const { return rows_ == cols_; }

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Complex> data_;
};

/// sum_i x_i * conj(y_i) — linear in the first argument.
Complex inner(const Mat& x, const Mat& y);
double norm(const Mat& v);
double norm_sq(const Mat& v);

bool approx_eq(const Mat& a, const Mat& b, double tol);

/// Horizontal concatenation; all blocks share a row count. An empty list
/// is rejected. Zero-column blocks are allowed and contribute nothing.
Mat hcat(const std::vector<Mat>& blocks);
/// Stack vectors/matrices vertically.
Mat vcat(const std::vector<Mat>& blocks);
/// Block-diagonal embedding.
Mat block_diag(const std::vector<Mat>& blocks);

} // namespace framekit
