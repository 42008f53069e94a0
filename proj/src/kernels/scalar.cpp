#include "framekit/kernels.hpp"

namespace framekit::kernels {
namespace {

void axpy_scalar(std::size_t n, Complex a, const Complex* x, Complex* y) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void scal_scalar(std::size_t n, Complex a, Complex* x) {
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= a;
}

Complex dotc_scalar(std::size_t n, const Complex* x, const Complex* y) {
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        acc += std::conj(x[i]) * y[i];
    return acc;
}

double nrm2sq_scalar(std::size_t n, const Complex* x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return acc;
}

void rot_scalar(std::size_t n, Complex* x, Complex* y, double c, Complex s) {
    const Complex sc = std::conj(s);
    for (std::size_t i = 0; i < n; ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = c * xi - sc * yi;
        y[i] = s * xi + c * yi;
    }
}

} // namespace

const Backend& scalar_backend() {
    static const Backend backend{
        "scalar", axpy_scalar, scal_scalar, dotc_scalar, nrm2sq_scalar, rot_scalar,
    };
    return backend;
}

} // namespace framekit::kernels
