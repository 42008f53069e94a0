#pragma once

#include "framekit/linalg.hpp"

namespace framekit {

/// Finite family {f_i} stored as matrix columns.
class VectorFrame {
public:
    VectorFrame(std::size_t ambient_dim, Mat vectors);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t count() const { return vectors_.cols(); }
    const Mat& vectors() const { return vectors_; }
    Field field() const { return vectors_.field(); }

private:
    std::size_t ambient_dim_;
    Mat vectors_;
};

/// Optimal bound certificate for a (K-)frame or fusion system.
///
/// a_opt is the best lower constant (+infinity when the lower inequality is
/// vacuous, i.e. k = 0; zero when no positive constant exists), b_opt the
/// best upper constant. The witnesses are unit vectors achieving the
/// extremal Rayleigh quotients; when the lower verdict fails, witness_low
/// is instead a unit vector certifying the failure (it is annihilated by
/// the system but not by k*). orthonormal / v_uniform are only meaningful
/// for fusion systems.
struct BoundsReport {
    bool is_bessel = true;
    bool lower_ok = false;
    double a_opt = 0.0;
    double b_opt = 0.0;
    Mat witness_low;
    Mat witness_high;
    bool tight = false;
    bool parseval = false;
    bool orthonormal = false;
    bool v_uniform = false;
    Tolerances tol;
};

/// S = sum_i f_i f_i^* = vectors * vectors^*.
Mat frame_operator(const VectorFrame& f);

/// Optimal frame bounds: extremal eigenvalues of the frame operator.
BoundsReport frame_bounds(const VectorFrame& f, const Tolerances& tol = {});

/// f = sum_i <f, S^{-1} f_i> f_i. Throws NotAFrame when the lower frame
/// bound fails.
Mat reconstruct(const VectorFrame& fr, const Mat& f, const Tolerances& tol = {});

/// Optimal constants for  a ||k* f||^2 <= sum |<f, f_i>|^2 <= b ||f||^2.
/// The lower constant comes from the quotient of k* by the square root of
/// the frame operator.
BoundsReport kframe_bounds(const VectorFrame& f, const Mat& k, const Tolerances& tol = {});

/// Finite exactness probe: true when removing any single vector destroys
/// the lower frame bound.
bool is_exact(const VectorFrame& f, const Tolerances& tol = {});

} // namespace framekit
