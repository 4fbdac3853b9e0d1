#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dnls/potential.hpp"
#include "dnls/spectral_point.hpp"

// Reference computation of s11(lambda), s21(lambda): adaptive integration of
// the x-part of the Lax pair in renormalized variables.  With
// m1 = psi1 e^{+i lambda^2 x} and n2 = psi2 e^{+i lambda^2 x} the system reads
//
//   m1' = lambda q(x) n2
//   n2' = 2 i lambda^2 n2 - lambda q*(x) m1,        (m1, n2)(x_min) = (1, 0)
//
// which keeps both components bounded throughout Im(lambda^2) >= 0 (the
// conventional m2 = psi2 e^{-i lambda^2 x} grows like e^{2 Im(lambda^2) x} and
// overflows deep in the upper region).  Then s11 = m1(x_max) and
// s21 = n2(x_max) e^{-2 i lambda^2 x_max}.
//
// Sign convention: the matrix U = -i sigma3 (lambda^2 + i lambda Q) gives
// psi1' = -i lambda^2 psi1 + lambda q psi2, psi2' = -lambda q* psi1
// + i lambda^2 psi2; this is the variant whose Picard iteration reproduces the
// iterated-integral expansion of s11 term by term.
namespace dnls::scattering {

using Complex = std::complex<double>;
using pot::GridPotential;

struct SolveOptions {
    double ode_tol = 1e-10;  // local error per step (abs and rel)
};

struct JostTrajectory {
    SpectralPoint point;
    std::vector<double> x;    // accepted step positions, x_min .. x_max
    std::vector<Complex> m1;  // psi1 e^{+i lambda^2 x}
    std::vector<Complex> n2;  // psi2 e^{+i lambda^2 x}
    double est_error = 0.0;   // accumulated local error estimates

    // m2 = psi2 e^{-i lambda^2 x} = n2 e^{-2 i lambda^2 x}, evaluated in log
    // space so that only genuinely unrepresentable values overflow.
    Complex m2(std::size_t i) const;
};

struct ScatteringDatum {
    enum class Method { ode, series, fourier };

    SpectralPoint point;
    Complex s11;
    Complex s21;
    Method method = Method::ode;
    double est_error = 0.0;

    // | |s11|^2 +/- |s21|^2 - 1 | on the real/imaginary lambda axes; NaN off
    // the axes where no unitarity relation holds.
    double unitarity_defect() const;
};

JostTrajectory jost_solve(const GridPotential& q, const SpectralPoint& point,
                          const SolveOptions& opts = {});

ScatteringDatum scattering_coefficients(const GridPotential& q, const SpectralPoint& point,
                                        const SolveOptions& opts = {});

struct SymmetryReport {
    double s11_deviation;  // |s11(lambda) - s11(-lambda)|
    double s21_deviation;  // |s21(lambda) + s21(-lambda)|
};

SymmetryReport symmetry_check(const GridPotential& q, const SpectralPoint& point,
                              const SolveOptions& opts = {});

// One sweep entry: either a datum or the per-point error message.
struct SweepEntry {
    std::optional<ScatteringDatum> datum;
    std::string error;
};

// Independent per-point evaluation, order preserving; failures are collected,
// not fail-fast.  Runs on up to `threads` threads (0 = DNLS_THREADS env var
// or 1); results are identical to sequential evaluation.
std::vector<SweepEntry> lambda_sweep(const GridPotential& q,
                                     const std::vector<SpectralPoint>& points,
                                     const SolveOptions& opts = {}, unsigned threads = 0);

// Thread count resolution used by sweep-style operations.
unsigned resolve_thread_count(unsigned requested);

}  // namespace dnls::scattering
