#pragma once

#include <complex>

// The spectral parameter lambda with its derived square and region
// classification by the sign of Im(lambda^2): the first-column Jost solution
// is bounded on the closed upper region Im(lambda^2) >= 0.
namespace dnls {

using Complex = std::complex<double>;

struct SpectralPoint {
    enum class Region { upper, boundary, lower };

    Complex lambda;
    Complex lambda_sq;
    Region region;

    explicit SpectralPoint(Complex lam) : lambda(lam), lambda_sq(lam * lam) {
        double im = lambda_sq.imag();
        region = im > 0.0 ? Region::upper : (im < 0.0 ? Region::lower : Region::boundary);
    }

    bool admissible() const { return region != Region::lower; }
    bool on_real_axis() const { return lambda.imag() == 0.0; }
    bool on_imag_axis() const { return lambda.real() == 0.0; }

    // Canonical asymptotic path lambda = e^{i pi/4} sqrt(zeta/2), so that
    // lambda^2 = i zeta / 2.
    static SpectralPoint from_ray(double zeta) {
        double r = std::sqrt(zeta / 2.0);
        static const Complex e_i_pi4 = std::polar(1.0, std::acos(-1.0) / 4.0);
        return SpectralPoint(r * e_i_pi4);
    }
};

}  // namespace dnls
