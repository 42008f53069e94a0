#pragma once

#include <cstdint>

#include "framekit/mat.hpp"

namespace framekit {

/// Deterministic, implementation-independent random source.
///
/// Engine: xoshiro256++ with the four state words expanded from the seed by
/// splitmix64. Uniform doubles take the top 53 bits; normals come from the
/// Box-Muller transform. No standard-library distributions are involved, so
/// a given seed yields the same stream on every platform and toolchain.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform_in(double lo, double hi);
    /// Standard normal.
    double normal();
    /// Uniform integer in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_[4];
    bool has_cached_ = false;
    double cached_ = 0.0;
};

/// Matrix with independent standard-normal entries (real and imaginary
/// parts separately for the complex field).
Mat random_mat(Rng& rng, std::size_t rows, std::size_t cols, Field field);

Mat random_unit_vec(Rng& rng, std::size_t dim, Field field);

Mat random_hermitian(Rng& rng, std::size_t n, Field field);

/// Gram matrix of a random Gaussian factor; PSD by construction, singular
/// when rank < n.
Mat random_psd(Rng& rng, std::size_t n, std::size_t rank, Field field);

} // namespace framekit
