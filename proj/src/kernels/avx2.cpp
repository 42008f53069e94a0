// AVX2/FMA variants of the complex vector kernels. Two complex doubles per
// 256-bit register, interleaved re/im lanes. This translation unit is built
// with -mavx2 -mfma on x86; the dispatcher only hands these pointers out
// after checking CPU support at runtime.

#include "backends.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace framekit::kernels {
namespace {

// Lane bookkeeping for one packed pair z = (re0, im0, re1, im1):
//   movedup(z)      -> (re0, re0, re1, re1)
//   permute(z, 0xF) -> (im0, im0, im1, im1)
//   permute(z, 0x5) -> (im0, re0, im1, re1)
// fmaddsub subtracts on even lanes / adds on odd lanes, fmsubadd the reverse,
// which is exactly the sign pattern of complex and conjugated products.

inline __m256d cmul(__m256d a, __m256d b) {
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bs));
}

inline __m256d cmul_conj(__m256d a, __m256d b) { // conj(a) * b
    const __m256d ar = _mm256_movedup_pd(a);
    const __m256d ai = _mm256_permute_pd(a, 0xF);
    const __m256d bs = _mm256_permute_pd(b, 0x5);
    return _mm256_fmsubadd_pd(ar, b, _mm256_mul_pd(ai, bs));
}

void axpy_avx2(std::size_t n, Complex a, const Complex* x, Complex* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d av = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        _mm256_storeu_pd(yp + 2 * i, _mm256_add_pd(yv, cmul(av, xv)));
    }
    for (; i < n; ++i)
        y[i] += a * x[i];
}

void scal_avx2(std::size_t n, Complex a, Complex* x) {
    double* xp = reinterpret_cast<double*>(x);
    const __m256d av = _mm256_setr_pd(a.real(), a.imag(), a.real(), a.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        _mm256_storeu_pd(xp + 2 * i, cmul(av, xv));
    }
    for (; i < n; ++i)
        x[i] *= a;
}

Complex dotc_avx2(std::size_t n, const Complex* x, const Complex* y) {
    const double* xp = reinterpret_cast<const double*>(x);
    const double* yp = reinterpret_cast<const double*>(y);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        acc = _mm256_add_pd(acc, cmul_conj(xv, yv));
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    alignas(16) double out[2];
    _mm_store_pd(out, pair);
    Complex acc_s(out[0], out[1]);
    for (; i < n; ++i)
        acc_s += std::conj(x[i]) * y[i];
    return acc_s;
}

double nrm2sq_avx2(std::size_t n, const Complex* x) {
    const double* xp = reinterpret_cast<const double*>(x);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        acc = _mm256_fmadd_pd(xv, xv, acc);
    }
    const __m128d lo = _mm256_castpd256_pd128(acc);
    const __m128d hi = _mm256_extractf128_pd(acc, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    double total = _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
    for (; i < n; ++i)
        total += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
    return total;
}

void rot_avx2(std::size_t n, Complex* x, Complex* y, double c, Complex s) {
    double* xp = reinterpret_cast<double*>(x);
    double* yp = reinterpret_cast<double*>(y);
    const __m256d cv = _mm256_set1_pd(c);
    const __m256d sv = _mm256_setr_pd(s.real(), s.imag(), s.real(), s.imag());
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xp + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yp + 2 * i);
        const __m256d xn = _mm256_fmsub_pd(cv, xv, cmul_conj(sv, yv));
        const __m256d yn = _mm256_fmadd_pd(cv, yv, cmul(sv, xv));
        _mm256_storeu_pd(xp + 2 * i, xn);
        _mm256_storeu_pd(yp + 2 * i, yn);
    }
    const Complex sc = std::conj(s);
    for (; i < n; ++i) {
        const Complex xi = x[i];
        const Complex yi = y[i];
        x[i] = c * xi - sc * yi;
        y[i] = s * xi + c * yi;
    }
}

constexpr Backend kAvx2Backend{
    "avx2", axpy_avx2, scal_avx2, dotc_avx2, nrm2sq_avx2, rot_avx2,
};

} // namespace

const Backend* avx2_backend_or_null() { return &kAvx2Backend; }

} // namespace framekit::kernels

#else

namespace framekit::kernels {
const Backend* avx2_backend_or_null() { return nullptr; }
} // namespace framekit::kernels

#endif
