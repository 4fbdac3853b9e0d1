#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dnls/direct_scattering.hpp"
#include "dnls/potential.hpp"
#include "dnls/spectral_point.hpp"

// Pseudospectral integrator for i q_t + q_xx + i (|q|^2 q)_x = 0 on a periodic
// box: exact integrating factor e^{-i xi^2 t} for the linear part, classical
// RK4 for the nonlinear remainder -(|q|^2 q)_x, 2/3-rule dealiasing on the
// cubic term.  Used to verify the time-invariance of s11, the s21 phase law
// and conservation of H0..H2.
namespace dnls::evolution {

using Complex = std::complex<double>;
using pot::GridPotential;

struct EvolutionState {
    GridPotential potential;
    double t = 0.0;
    double dt = 0.0;
    std::size_t step_count = 0;
    double h0_initial = 0.0;
    double max_abs_initial = 0.0;
};

EvolutionState make_state(const GridPotential& q0, double dt);

// One step of size min(dt, remaining); throws InstabilityError on the blow-up
// guard max|q| > 10 max|q0|.
EvolutionState step(const EvolutionState& state);

// Repeated stepping to time T (final partial step allowed).  Checks the mass
// drift |H0(T)/H0(0) - 1| <= 1e-8 as an integrator health gate.
EvolutionState evolve(const GridPotential& q0, double T, double dt);

struct IsospectralityRow {
    SpectralPoint point;
    double s11_defect;        // |s11(T) - s11(0)|
    double s21_phase_defect;  // |s21(T) - e^{4 i lambda^4 T} s21(0)|
};

// Scattering data drift under the flow.  The s21 comparison uses the phase
// law d s21/dt = +4 i lambda^4 s21 that follows from the V matrix asymptotics
// V -> -2 i lambda^4 sigma3.  Fails with BoundaryError if the evolved field
// is no longer decayed at the box edge.
std::vector<IsospectralityRow> isospectrality_report(
    const GridPotential& q0, double T, double dt, const std::vector<SpectralPoint>& points,
    const scattering::SolveOptions& opts = {});

// Decay threshold for the evolved field at the box edge; looser than the
// sampling tolerance to sit above the spectral method's roundoff floor.
inline constexpr double kEdgeContaminationTol = 1e-10;

}  // namespace dnls::evolution
