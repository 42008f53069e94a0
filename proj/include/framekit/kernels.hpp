#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace framekit {

using Complex = std::complex<double>;

namespace kernels {

// Contiguous complex-double vector kernels. Everything above this layer
// (matrix products, factorizations, projections) funnels its inner loops
// through these five operations, so one backend table is enough to switch
// the whole library between the scalar reference path and a SIMD path.
//
// Semantics (n elements, interleaved re/im layout):
//   axpy    y[i] += a * x[i]
//   scal    x[i] *= a
//   dotc    returns sum_i conj(x[i]) * y[i]
//   nrm2sq  returns sum_i |x[i]|^2
//   rot     right-multiplies the column pair [x y] by the unitary
//           [[c, s], [-conj(s), c]] with c real:
//             x[i] <- c*x[i] - conj(s)*y[i]
//             y[i] <- s*x[i] + c*y[i]   (using the old x[i])
struct Backend {
    const char* name;
    void (*axpy)(std::size_t n, Complex a, const Complex* x, Complex* y);
    void (*scal)(std::size_t n, Complex a, Complex* x);
    Complex (*dotc)(std::size_t n, const Complex* x, const Complex* y);
    double (*nrm2sq)(std::size_t n, const Complex* x);
    void (*rot)(std::size_t n, Complex* x, Complex* y, double c, Complex s);
};

/// Portable reference backend, always present.
const Backend& scalar_backend();

/// Every backend compiled into this build (scalar first).
const std::vector<const Backend*>& available_backends();

/// The backend selected at startup: the widest SIMD variant the CPU
/// supports, unless the FRAMEKIT_KERNELS environment variable names a
/// specific one ("scalar", "avx2").
const Backend& active_backend();

/// Force a backend by name (tests use this). Returns false if unknown
/// or not compiled in.
bool set_active_backend(const std::string& name);

} // namespace kernels
} // namespace framekit
