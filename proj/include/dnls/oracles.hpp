#pragma once

#include <complex>
#include <cstddef>

#include "dnls/potential.hpp"
#include "dnls/sequence_norms.hpp"
#include "dnls/spectral_point.hpp"

// Independent reference evaluations used by the verification suite.  These
// deliberately share no numerical machinery with the production paths they
// check: plain composite Simpson / midpoint product rules instead of the
// kernel-rebalanced Volterra recursion, and a dynamic program instead of
// subset enumeration.
namespace dnls::oracles {

using Complex = std::complex<double>;

// The XY integral lambda^2 int_{x<y} q*(x) e^{-2 i lambda^2 x} q(y)
// e^{2 i lambda^2 y} dx dy by nested composite Simpson over the triangle
// (odd prefixes finished with a one-cell cubic rule).
Complex xy_integral_simpson(const pot::GridPotential& q, const SpectralPoint& point);

// The XXYY integral lambda^4 int_{x1<x2<y1<y2} q*(x1) q*(x2) q(y1) q(y2)
// e^{2 i lambda^2 (y1+y2-x1-x2)} by a brute-force midpoint product rule on m
// ordered cells (ties weighted 1/r!), Richardson-extrapolated from m and 2m.
Complex xxyy_integral_bruteforce(const pot::AnalyticPotential& q, double x_min,
                                 double x_max, std::size_t m, const SpectralPoint& point);

// V^p supremum by the longest-path dynamic program over the attainable value
// sequence; exact, and independent of the exhaustive enumeration.
double vp_norm_dp(const vnorm::StepFunction& f, double p);

}  // namespace dnls::oracles
