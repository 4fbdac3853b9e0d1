#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "dnls/potential.hpp"
#include "dnls/spectral_point.hpp"
#include "dnls/word_algebra.hpp"

// Numerical evaluation of the iterated ordered integrals over
// t_1 < ... < t_{2j}: each X slot carries lambda q*(t) e^{-2 i lambda^2 t},
// each Y slot lambda q(t) e^{+2 i lambda^2 t}.  The value includes the
// lambda^{2j} prefactor and excludes the sign (-1)^j.
//
// Cumulative Volterra recursion, one pass per letter, in rebalanced
// variables: with d_k the X-surplus of the length-k prefix,
//   G_k(t) = int^t e^{2 i lambda^2 d_k (t-s)} c_k(s) G_{k-1}(s) ds,
// c_k = lambda q* (X) or lambda q (Y).  The kernel magnitude is <= 1 on
// Im(lambda^2) >= 0, so nothing overflows deep in the upper region, and
// G_{2j}(x_max) equals the raw integral because d_{2j} = 0.  Each cell update
// integrates the degree-5 interpolant of the non-kernel factor against the
// grid weights (O(n) per letter).
namespace dnls::simplex {

using Complex = std::complex<double>;
using pot::GridPotential;

// Grid guard: 2|lambda^2| dx is the integrand's phase advance per cell.
inline constexpr double kPhaseGuard = 0.3;  // |lambda^2| dx <= 0.3

struct WordIntegralValue {
    words::Word word;
    SpectralPoint lambda;
    Complex value;
    double quad_error;  // stride-2 Richardson estimate
};

WordIntegralValue word_integral(const words::Word& word, const GridPotential& q,
                                const SpectralPoint& point);

struct ExpansionTerms {
    SpectralPoint lambda;
    std::vector<Complex> s_terms;       // s_{2j}, j = 1..J
    std::vector<Complex> b_terms;       // b_{2j}, j = 1..J (empty for picard_terms)
    std::vector<Complex> partial_sums;  // 1 + sum_{k<=j} s_{2k}
    // |b_{2j}(word combination) - b_{2j}(scalar log of the s-terms)|, filled
    // by b_terms(); the j=1 entry is exactly zero.
    std::vector<double> identity_defects;
};

// s_{2j} = (-1)^j * word_integral((XY)^(j)).
ExpansionTerms picard_terms(const GridPotential& q, const SpectralPoint& point,
                            std::size_t J);

// b_{2j} = -sum_w coeff(w) word_integral(w), coefficients from
// words::log_series degree j; cross-checked against the scalar identities
// b_2 = s_2, b_4 = s_4 - s_2^2/2, ...
ExpansionTerms b_terms(const GridPotential& q, const SpectralPoint& point, std::size_t J);

// Scalar log expansion: given s_{2j} values, the b_{2j} of ln(1 + sum s).
std::vector<Complex> log_expansion(const std::vector<Complex>& s_terms);

struct DecayProfile {
    std::vector<double> zeta;                   // ray samples
    std::vector<std::size_t> j;                 // term indices (b_{2j}), j >= 2
    std::vector<std::vector<double>> abs_b;     // abs_b[row][col]: |b_{2j[col]}| at zeta[row]
    std::vector<double> slope;                  // fitted log-log slope per j
};

// |b_{2j}| along lambda(zeta) = e^{i pi/4} sqrt(zeta/2) with fitted slopes
// (expected -2j+2).  Empty profile for q == 0.
DecayProfile decay_profile(const GridPotential& q, const std::vector<double>& zetas,
                           std::size_t J);

}  // namespace dnls::simplex
