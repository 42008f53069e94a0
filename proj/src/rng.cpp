#include "framekit/rng.hpp"

#include <cmath>

namespace framekit {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

constexpr double kTwoPi = 6.283185307179586476925286766559;

} // namespace

Rng::Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_)
        w = splitmix64(x);
}

std::uint64_t Rng::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double Rng::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

double Rng::uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = 1.0 - uniform(); // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    cached_ = r * std::sin(kTwoPi * u2);
    has_cached_ = true;
    return r * std::cos(kTwoPi * u2);
}

std::uint64_t Rng::below(std::uint64_t n) { return next_u64() % n; }

Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols, Field field) {
    Mat m(rows, cols, field);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r) {
            const double re = rng.normal();
            const double im = field == Field::Complex ? rng.normal() : 0.0;
            m.at(r, c) = Complex(re, im);
        }
    return m;
}

Mat random_unit_vec(Rng& rng, std::size_t dim, Field field) {
    Mat v = random_mat(rng, dim, 1, field);
    double n = norm(v);
    while (n == 0.0) { // astronomically unlikely, but stay total
        v = random_mat(rng, dim, 1, field);
        n = norm(v);
    }
    return (1.0 / n) * v;
}

Mat random_hermitian(Rng& rng, std::size_t n, Field field) {
    const Mat a = random_mat(rng, n, n, field);
    Mat h = 0.5 * (a + a.adjoint());
    h.set_field(field);
    return h;
}

Mat random_psd(Rng& rng, std::size_t n, std::size_t rank, Field field) {
    const Mat g = random_mat(rng, n, rank, field);
    Mat p = g * g.adjoint();
    p.set_field(field);
    return p;
}

} // namespace framekit
