#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "dnls/errors.hpp"

// Representations of the potential q(x): analytic test families, uniform-grid
// samples, the unitary Fourier transform q^(xi) = (2 pi)^{-1/2} int q e^{-i x xi},
// and the L^2 / H^s norms.
namespace dnls::pot {

using Complex = std::complex<double>;

inline constexpr double kDefaultBoundaryDecayTol = 1e-12;

struct AnalyticPotential {
    enum class Family { gaussian, sech };
    Family family = Family::gaussian;
    Complex amplitude{0.0, 0.0};
    double width = 1.0;
    double chirp = 0.0;

    // gaussian: A exp(-x^2/w^2) exp(i c x);  sech: A sech(x/w) exp(i c x)
    Complex operator()(double x) const;
};

AnalyticPotential::Family family_from_string(const std::string& name);

// Complex samples on the uniform grid x_i = x_min + i*dx, dx = (x_max-x_min)/n.
// Construction enforces |q| <= boundary_decay_tol at both boundary nodes,
// n >= 16 and n a power of two.
class GridPotential {
  public:
    GridPotential(double x_min, double x_max, std::vector<Complex> values,
                  double boundary_decay_tol = kDefaultBoundaryDecayTol);

    double x_min() const { return x_min_; }
    double x_max() const { return x_max_; }
    double dx() const { return dx_; }
    std::size_t n() const { return values_.size(); }
    double x(std::size_t i) const { return x_min_ + static_cast<double>(i) * dx_; }
    const std::vector<Complex>& values() const { return values_; }
    double boundary_decay_tol() const { return tol_; }

  private:
    double x_min_, x_max_, dx_, tol_;
    std::vector<Complex> values_;
};

GridPotential sample(const AnalyticPotential& analytic, double x_min, double x_max,
                     std::size_t n, double boundary_decay_tol = kDefaultBoundaryDecayTol);

// Samples of the unitary transform on the centered frequency grid
// xi_k = 2 pi k / (n dx), k = -n/2 .. n/2-1.  Keeps enough of the originating
// grid to invert.
struct SpectrumSamples {
    std::vector<double> xi;
    std::vector<Complex> qhat;
    double dxi = 0.0;
    double x_min = 0.0;
    double dx = 0.0;
};

SpectrumSamples fourier(const GridPotential& q);

// Inverse of fourier() back onto the originating grid (unit-tested round trip;
// boundary tolerance re-checked on the result).
GridPotential inverse_fourier(const SpectrumSamples& spectrum,
                              double boundary_decay_tol = kDefaultBoundaryDecayTol);

// Trapezoid quadrature of |q|^2.
double l2_norm_sq(const GridPotential& q);

// ( int (1+xi^2)^s |q^|^2 dxi )^{1/2}
double hs_norm(const GridPotential& q, double s);

// Samples of d^order/dx^order q via the spectrum.
std::vector<Complex> spectral_derivative(const GridPotential& q, int order);

// z^{1/2} q(z x) resampled on the same grid.  Fails if the widened support
// (z < 1) no longer decays at the boundary.
GridPotential rescale(const GridPotential& q, double z);

// Degree-6 Lagrange interpolation on the uniform grid; zero outside the
// domain (the boundary-decay invariant makes the jump negligible).
Complex interpolate(const GridPotential& q, double x);

}  // namespace dnls::pot
