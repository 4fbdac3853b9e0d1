#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dnls/direct_scattering.hpp"
#include "dnls/potential.hpp"
#include "dnls/spectral_point.hpp"

// Fourier-side formulas and asymptotics: the multiplier integral for s2, the
// shifted coefficient c2 with its moment expansion, the trilinear Fourier
// form of b4 and its expansion coefficients H_{j4}, the conserved quantities
// H0..H2, and the D1/D2 asymptotic-coefficient fits along the ray.
namespace dnls::spectral {

using Complex = std::complex<double>;
using pot::GridPotential;

// s2(lambda) = -i int lambda^2 / (2 lambda^2 + xi) |q^(xi)|^2 dxi
Complex s2_fourier(const GridPotential& q, const SpectralPoint& point);

// c2(lambda) = s2(lambda) + (i/2) ||q||^2_{L2}
Complex c2(const GridPotential& q, const SpectralPoint& point);

// Right side of the bound |Re c2| <= int |xi| Im(lambda^2) /
// ((2 Re lambda^2 + xi)^2 + (2 Im lambda^2)^2) |q^|^2 dxi  on Im(lambda^2)>0.
double re_c2_bound(const GridPotential& q, const SpectralPoint& point);

struct MomentTable {
    std::vector<double> M;  // M_{k,2} = int (-1)^k xi^{k+1} |q^|^2 dxi, k = 0..K
};

MomentTable moments(const GridPotential& q, std::size_t K);

// |Re( c2(lambda/sqrt(2)) - (i/2) sum_{k<N} M_{k,2} lambda^{-2k-2} )| and its
// tail bound (|lambda|^{-2N}/2) int |xi|^{N+1} (Im lambda^2 + |Re lambda^2 + xi|)
// / ((Re lambda^2 + xi)^2 + (Im lambda^2)^2) |q^|^2 dxi.
double c2_tail_lhs(const GridPotential& q, const SpectralPoint& point, std::size_t N);
double c2_tail_bound(const GridPotential& q, const SpectralPoint& point, std::size_t N);

// b4(lambda) = (i/2pi) int_{xi1+xi2=eta1+eta2} lambda^4 / ((2l^2+xi1)(2l^2+eta1)
// (2l^2+eta2)) Re(q^(eta1) q^(eta2) q^*(xi1) q^*(xi2)), triple quadrature on a
// reduced uniform frequency grid (the constraint leaves xi2 on the grid).
Complex b4_fourier(const GridPotential& q, const SpectralPoint& point,
                   std::size_t reduced_points = 129);

// Expansion coefficients of b4 ~ i sum_{j>=2} H_{j4} lambda^{2-2j} / 2^{j+1}:
// H_{j4} = -Re( i^j sum_{a1+a2+a3=j-2} (-1)^{a1} int q^{(a2)} q^{(a3)}
// conj(q^{(a1)} q) dx ), returned for j = 2..j_max (j_max <= 3).
std::vector<Complex> h_coefficients_b4(const GridPotential& q, std::size_t j_max);

struct ConservedQuantities {
    double H0;  // int |q|^2
    double H1;  // Im int q* q_x + (1/2) int |q|^4
    double H2;  // int |q_x|^2 - (3/2) Im(|q|^2 q q_x*) + (1/2) |q|^6
};

ConservedQuantities conserved(const GridPotential& q);

struct AsymptoticFit {
    std::vector<double> zeta;
    std::vector<Complex> log_s11bar;  // ln s11(lambda(zeta)) + (i/2)||q||^2
    Complex D1, D2;
    double residual;   // RMS of the fit residual
    double d1_defect;  // |D1 - (i/4) H1| / |(i/4) H1|
    double d2_defect;  // |D2 + (i/8) H2| / |(i/8) H2|
};

// Fits ln s11bar = D1 u^{-1} + D2 u^{-2} + D3 u^{-3} (u = lambda^2 = i zeta/2,
// the third power absorbs higher-order contamination) over the ray samples,
// with s11 from the ODE route.
AsymptoticFit asymptotic_fit(const GridPotential& q, const std::vector<double>& zetas,
                             const scattering::SolveOptions& opts = {});

struct LimitTable {
    std::vector<double> zeta;
    std::vector<double> defect;  // |ln s11(lambda(zeta)) + (i/2)||q||^2|
    double slope;                // log-log slope, expected near -1
};

LimitTable limit_check(const GridPotential& q, const std::vector<double>& zetas,
                       const scattering::SolveOptions& opts = {});

}  // namespace dnls::spectral
