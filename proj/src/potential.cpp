#include "dnls/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dnls/fft.hpp"

namespace dnls::pot {

namespace {

constexpr double kSqrt2Pi = 2.5066282746310005024;

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

Complex AnalyticPotential::operator()(double x) const {
    double envelope;
    switch (family) {
        case Family::gaussian:
            envelope = std::exp(-x * x / (width * width));
            break;
        case Family::sech:
            envelope = 1.0 / std::cosh(x / width);
            break;
        default:
            envelope = 0.0;
    }
    return amplitude * envelope * std::exp(Complex(0.0, chirp * x));
}

AnalyticPotential::Family family_from_string(const std::string& name) {
    if (name == "gaussian") return AnalyticPotential::Family::gaussian;
    if (name == "sech") return AnalyticPotential::Family::sech;
    throw DomainError("unknown potential family: " + name);
}

GridPotential::GridPotential(double x_min, double x_max, std::vector<Complex> values,
                             double boundary_decay_tol)
    : x_min_(x_min), x_max_(x_max), tol_(boundary_decay_tol), values_(std::move(values)) {
    if (!(x_max_ > x_min_)) throw DomainError("grid requires x_max > x_min");
    const std::size_t n = values_.size();
    if (n < 16 || !power_of_two(n))
        throw DomainError("grid size must be a power of two >= 16");
    dx_ = (x_max_ - x_min_) / static_cast<double>(n);
    for (std::size_t i : {std::size_t{0}, n - 1}) {
        double mag = std::abs(values_[i]);
        if (mag > tol_) {
            std::ostringstream os;
            os << "potential not decayed at grid boundary x=" << x(i) << ": |q|=" << mag
               << " exceeds tolerance " << tol_ << " (widen the domain)";
            throw DomainError(os.str());
        }
    }
}

GridPotential sample(const AnalyticPotential& analytic, double x_min, double x_max,
                     std::size_t n, double boundary_decay_tol) {
    std::vector<Complex> values(n);
    const double dx = (x_max - x_min) / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i)
        values[i] = analytic(x_min + static_cast<double>(i) * dx);
    return GridPotential(x_min, x_max, std::move(values), boundary_decay_tol);
}

SpectrumSamples fourier(const GridPotential& q) {
    const std::size_t n = q.n();
    std::vector<Complex> data = q.values();
    fft::forward(data);

    SpectrumSamples s;
    s.dxi = 2.0 * std::numbers::pi / (static_cast<double>(n) * q.dx());
    s.x_min = q.x_min();
    s.dx = q.dx();
    s.xi.resize(n);
    s.qhat.resize(n);
    const double scale = q.dx() / kSqrt2Pi;
    const auto half = static_cast<long>(n / 2);
    for (long k = -half; k < half; ++k) {
        std::size_t out = static_cast<std::size_t>(k + half);
        std::size_t in = static_cast<std::size_t>(k >= 0 ? k : k + static_cast<long>(n));
        double xi = static_cast<double>(k) * s.dxi;
        s.xi[out] = xi;
        // absorb the grid offset: sum_m q_m e^{-i x_m xi} = e^{-i x_min xi} DFT_k
        s.qhat[out] = scale * std::exp(Complex(0.0, -q.x_min() * xi)) * data[in];
    }
    return s;
}

GridPotential inverse_fourier(const SpectrumSamples& spectrum, double boundary_decay_tol) {
    const std::size_t n = spectrum.qhat.size();
    const auto half = static_cast<long>(n / 2);
    std::vector<Complex> data(n);
    const double scale = spectrum.dxi / kSqrt2Pi;
    for (long k = -half; k < half; ++k) {
        std::size_t in = static_cast<std::size_t>(k + half);
        std::size_t out = static_cast<std::size_t>(k >= 0 ? k : k + static_cast<long>(n));
        data[out] = scale * std::exp(Complex(0.0, spectrum.x_min * spectrum.xi[in])) *
                    spectrum.qhat[in];
    }
    fft::backward(data);
    double x_max = spectrum.x_min + spectrum.dx * static_cast<double>(n);
    return GridPotential(spectrum.x_min, x_max, std::move(data), boundary_decay_tol);
}

double l2_norm_sq(const GridPotential& q) {
    const auto& v = q.values();
    double sum = 0.0;
    for (const auto& z : v) sum += std::norm(z);
    sum -= 0.5 * (std::norm(v.front()) + std::norm(v.back()));
    return sum * q.dx();
}

double hs_norm(const GridPotential& q, double s) {
    if (s < 0.0) throw DomainError("hs_norm requires s >= 0");
    SpectrumSamples spec = fourier(q);
    double sum = 0.0;
    for (std::size_t k = 0; k < spec.xi.size(); ++k)
        sum += std::pow(1.0 + spec.xi[k] * spec.xi[k], s) * std::norm(spec.qhat[k]);
    return std::sqrt(sum * spec.dxi);
}

std::vector<Complex> spectral_derivative(const GridPotential& q, int order) {
    const std::size_t n = q.n();
    std::vector<Complex> data = q.values();
    fft::forward(data);
    const double dxi = 2.0 * std::numbers::pi / (static_cast<double>(n) * q.dx());
    const auto half = static_cast<long>(n / 2);
    for (long k = -half; k < half; ++k) {
        std::size_t idx = static_cast<std::size_t>(k >= 0 ? k : k + static_cast<long>(n));
        Complex factor = std::pow(Complex(0.0, static_cast<double>(k) * dxi), order);
        data[idx] *= factor / static_cast<double>(n);
    }
    fft::backward(data);
    return data;
}

GridPotential rescale(const GridPotential& q, double z) {
    if (!(z > 0.0)) throw DomainError("rescale requires z > 0");
    const double rz = std::sqrt(z);
    std::vector<Complex> values(q.n());
    for (std::size_t i = 0; i < q.n(); ++i) values[i] = rz * interpolate(q, z * q.x(i));
    try {
        return GridPotential(q.x_min(), q.x_max(), std::move(values), q.boundary_decay_tol());
    } catch (const DomainError&) {
        std::ostringstream os;
        os << "rescaled support (z=" << z << ") does not fit the grid";
        throw DomainError(os.str());
    }
}

Complex interpolate(const GridPotential& q, double x) {
    const std::size_t n = q.n();
    const double u = (x - q.x_min()) / q.dx();
    if (u < 0.0 || u > static_cast<double>(n - 1)) return Complex(0.0, 0.0);

    // 7-point stencil centered on the enclosing cell, clamped at the edges.
    long i0 = static_cast<long>(std::floor(u)) - 3;
    i0 = std::clamp<long>(i0, 0, static_cast<long>(n) - 7);
    Complex acc(0.0, 0.0);
    for (long k = 0; k < 7; ++k) {
        double lk = 1.0;
        for (long m = 0; m < 7; ++m) {
            if (m == k) continue;
            lk *= (u - static_cast<double>(i0 + m)) / static_cast<double>(k - m);
        }
        acc += lk * q.values()[static_cast<std::size_t>(i0 + k)];
    }
    return acc;
}

}  // namespace dnls::pot
