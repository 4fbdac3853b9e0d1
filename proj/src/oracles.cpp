#include "dnls/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dnls/errors.hpp"

namespace dnls::oracles {

namespace {

// cumulative integral at every node: composite Simpson on the even prefix,
// one 4-point Adams-Moulton cell to finish odd prefixes
std::vector<Complex> prefix_simpson(const std::vector<Complex>& f, double h) {
    const std::size_t n = f.size();
    std::vector<Complex> cum(n, Complex(0.0, 0.0));
    for (std::size_t j = 2; j < n; j += 2)
        cum[j] = cum[j - 2] + (h / 3.0) * (f[j - 2] + 4.0 * f[j - 1] + f[j]);
    for (std::size_t j = 1; j < n; j += 2) {
        if (j >= 3)
            cum[j] = cum[j - 1] + (h / 24.0) * (f[j - 3] - 5.0 * f[j - 2] +
                                                19.0 * f[j - 1] + 9.0 * f[j]);
        else  // first cell: cubic through the leading nodes
            cum[j] = cum[j - 1] + (h / 24.0) * (9.0 * f[0] + 19.0 * f[1] - 5.0 * f[2] +
                                                f[3]);
    }
    return cum;
}

Complex simpson(const std::vector<Complex>& f, double h) {
    std::vector<Complex> cum = prefix_simpson(f, h);
    return cum.back();
}

}  // namespace

Complex xy_integral_simpson(const pot::GridPotential& q, const SpectralPoint& point) {
    const std::size_t n = q.n();
    const Complex lam = point.lambda;
    const Complex two_i_lsq = Complex(0.0, 2.0) * point.lambda_sq;
    std::vector<Complex> fx(n), fy(n);
    for (std::size_t i = 0; i < n; ++i) {
        double x = q.x(i);
        fx[i] = lam * std::conj(q.values()[i]) * std::exp(-two_i_lsq * x);
        fy[i] = lam * q.values()[i] * std::exp(two_i_lsq * x);
    }
    std::vector<Complex> inner = prefix_simpson(fx, q.dx());
    std::vector<Complex> outer(n);
    for (std::size_t i = 0; i < n; ++i) outer[i] = fy[i] * inner[i];
    return simpson(outer, q.dx());
}

namespace {

Complex xxyy_midpoint(const pot::AnalyticPotential& q, double x_min, double x_max,
                      std::size_t m, const SpectralPoint& point) {
    const double h = (x_max - x_min) / static_cast<double>(m);
    const Complex lam = point.lambda;
    const Complex two_i_lsq = Complex(0.0, 2.0) * point.lambda_sq;
    std::vector<Complex> fx(m), fy(m);
    for (std::size_t i = 0; i < m; ++i) {
        double c = x_min + (static_cast<double>(i) + 0.5) * h;
        fx[i] = lam * std::conj(q(c)) * std::exp(-two_i_lsq * c);
        fy[i] = lam * q(c) * std::exp(two_i_lsq * c);
    }
    // cells with tied indices lie only partly inside the ordered region:
    // weight 1/prod(r!) over runs of equal indices
    auto tie_weight = [](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
        double w = 1.0;
        std::size_t run = 1;
        std::size_t idx[4] = {a, b, c, d};
        for (int k = 1; k < 4; ++k) {
            if (idx[k] == idx[k - 1]) {
                ++run;
                w /= static_cast<double>(run);
            } else {
                run = 1;
            }
        }
        return w;
    };
    Complex acc(0.0, 0.0);
    for (std::size_t i1 = 0; i1 < m; ++i1) {
        Complex p1 = fx[i1];
        for (std::size_t i2 = i1; i2 < m; ++i2) {
            Complex p2 = p1 * fx[i2];
            for (std::size_t i3 = i2; i3 < m; ++i3) {
                Complex p3 = p2 * fy[i3];
                for (std::size_t i4 = i3; i4 < m; ++i4)
                    acc += tie_weight(i1, i2, i3, i4) * p3 * fy[i4];
            }
        }
    }
    return acc * (h * h * h * h);
}

}  // namespace

Complex xxyy_integral_bruteforce(const pot::AnalyticPotential& q, double x_min,
                                 double x_max, std::size_t m, const SpectralPoint& point) {
    Complex coarse = xxyy_midpoint(q, x_min, x_max, m, point);
    Complex fine = xxyy_midpoint(q, x_min, x_max, 2 * m, point);
    return fine + (fine - coarse) / 3.0;  // O(h^2) -> O(h^4)
}

double vp_norm_dp(const vnorm::StepFunction& f, double p) {
    vnorm::validate(f);
    std::vector<Complex> v;
    v.push_back(Complex(0.0, 0.0));
    v.insert(v.end(), f.values.begin(), f.values.end());
    v.push_back(Complex(0.0, 0.0));

    // best[i]: largest sum of |increment|^p over sample paths ending at i
    // (a path may start at any index, contributing 0 there)
    std::vector<double> best(v.size(), 0.0);
    for (std::size_t i = 1; i < v.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            best[i] = std::max(best[i], best[j] + std::pow(std::abs(v[i] - v[j]), p));
    return std::pow(best.back(), 1.0 / p);
}

}  // namespace dnls::oracles
