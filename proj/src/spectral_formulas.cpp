#include "dnls/spectral_formulas.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "dnls/errors.hpp"

namespace dnls::spectral {

namespace {

// trapezoid weight: 1/2 at the first and last sample
template <typename F>
double trapz(std::size_t n, double h, F f) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += f(i);
    sum -= 0.5 * (f(0) + f(n - 1));
    return sum * h;
}

void check_multiplier(const pot::SpectrumSamples& spec, Complex lambda_sq) {
    const Complex two_lsq = 2.0 * lambda_sq;
    double min_abs = std::numeric_limits<double>::infinity();
    for (double xi : spec.xi) min_abs = std::min(min_abs, std::abs(two_lsq + xi));
    if (min_abs < spec.dxi) {
        std::ostringstream os;
        os << "multiplier denominator 2 lambda^2 + xi within one grid spacing of zero "
              "(|2l^2+xi|_min="
           << min_abs << ", dxi=" << spec.dxi << ")";
        throw SingularityError(os.str());
    }
}

void check_aliasing(const pot::SpectrumSamples& spec, std::size_t power) {
    double total = 0.0, edge = 0.0;
    for (std::size_t k = 0; k < spec.xi.size(); ++k) {
        double v = std::pow(std::abs(spec.xi[k]), static_cast<double>(power)) *
                   std::norm(spec.qhat[k]);
        total += v;
        if (k == 0 || k + 1 == spec.xi.size()) edge = std::max(edge, v);
    }
    if (total > 0.0 && edge > 1e-10 * total)
        throw AliasingError("spectral tail not decayed at the frequency-grid edge; "
                            "refine the spatial grid");
}

struct LogLogFit {
    double slope;
    bool defined;
};

LogLogFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    for (double v : y)
        if (!(v > 0.0)) return {std::numeric_limits<double>::quiet_NaN(), false};
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const auto m = static_cast<double>(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return {(m * sxy - sx * sy) / (m * sxx - sx * sx), true};
}

}  // namespace

Complex s2_fourier(const GridPotential& q, const SpectralPoint& point) {
    if (point.region == SpectralPoint::Region::lower)
        throw RegionError("s2_fourier requires Im(lambda^2) >= 0");
    pot::SpectrumSamples spec = pot::fourier(q);
    check_multiplier(spec, point.lambda_sq);
    const Complex lsq = point.lambda_sq;
    Complex acc(0.0, 0.0);
    for (std::size_t k = 0; k < spec.xi.size(); ++k)
        acc += lsq / (2.0 * lsq + spec.xi[k]) * std::norm(spec.qhat[k]);
    return Complex(0.0, -1.0) * acc * spec.dxi;
}

Complex c2(const GridPotential& q, const SpectralPoint& point) {
    return s2_fourier(q, point) + Complex(0.0, 0.5) * pot::l2_norm_sq(q);
}

double re_c2_bound(const GridPotential& q, const SpectralPoint& point) {
    if (point.region != SpectralPoint::Region::upper)
        throw RegionError("re_c2_bound is stated for Im(lambda^2) > 0");
    pot::SpectrumSamples spec = pot::fourier(q);
    const double mu = point.lambda_sq.real(), nu = point.lambda_sq.imag();
    return trapz(spec.xi.size(), spec.dxi, [&](std::size_t k) {
        double xi = spec.xi[k];
        double denom = (2.0 * mu + xi) * (2.0 * mu + xi) + 4.0 * nu * nu;
        return std::abs(xi) * nu / denom * std::norm(spec.qhat[k]);
    });
}

MomentTable moments(const GridPotential& q, std::size_t K) {
    if (K > 6) throw SizeError("moments requires K <= 6 (spectral decay guard)");
    pot::SpectrumSamples spec = pot::fourier(q);
    check_aliasing(spec, K + 1);
    MomentTable table;
    for (std::size_t k = 0; k <= K; ++k) {
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        table.M.push_back(trapz(spec.xi.size(), spec.dxi, [&](std::size_t i) {
            return sign * std::pow(spec.xi[i], static_cast<double>(k + 1)) *
                   std::norm(spec.qhat[i]);
        }));
    }
    return table;
}

double c2_tail_lhs(const GridPotential& q, const SpectralPoint& point, std::size_t N) {
    MomentTable table = moments(q, N == 0 ? 0 : N - 1);
    Complex c2_half = c2(q, SpectralPoint(point.lambda / std::sqrt(2.0)));
    Complex series(0.0, 0.0);
    Complex lsq_inv = 1.0 / point.lambda_sq;
    Complex p = lsq_inv;  // lambda^{-2k-2} at k=0
    for (std::size_t k = 0; k < N; ++k) {
        series += Complex(0.0, 0.5) * table.M[k] * p;
        p *= lsq_inv;
    }
    return std::abs((c2_half - series).real());
}

double c2_tail_bound(const GridPotential& q, const SpectralPoint& point, std::size_t N) {
    pot::SpectrumSamples spec = pot::fourier(q);
    const double mu = point.lambda_sq.real(), nu = point.lambda_sq.imag();
    double integral = trapz(spec.xi.size(), spec.dxi, [&](std::size_t k) {
        double xi = spec.xi[k];
        double denom = (mu + xi) * (mu + xi) + nu * nu;
        return std::pow(std::abs(xi), static_cast<double>(N + 1)) *
               (nu + std::abs(mu + xi)) / denom * std::norm(spec.qhat[k]);
    });
    return 0.5 * std::pow(std::abs(point.lambda), -2.0 * static_cast<double>(N)) * integral;
}

Complex b4_fourier(const GridPotential& q, const SpectralPoint& point,
                   std::size_t reduced_points) {
    if (point.region != SpectralPoint::Region::upper)
        throw RegionError("b4_fourier requires Im(lambda^2) > 0");
    pot::SpectrumSamples spec = pot::fourier(q);

    // energetic support of |q^|^2
    double peak = 0.0;
    for (const auto& z : spec.qhat) peak = std::max(peak, std::norm(z));
    std::size_t n = spec.xi.size(), center = n / 2;
    std::size_t k_cut = 0;
    for (std::size_t k = 0; k < n; ++k)
        if (std::norm(spec.qhat[k]) >= 1e-14 * peak)
            k_cut = std::max<std::size_t>(
                k_cut, static_cast<std::size_t>(
                           std::abs(static_cast<long>(k) - static_cast<long>(center))));

    // symmetric odd-count subgrid with stride, closed under xi2 = eta1+eta2-xi1
    std::size_t half = std::max<std::size_t>(1, (reduced_points - 1) / 2);
    std::size_t stride = (k_cut + half - 1) / half;
    stride = std::max<std::size_t>(stride, 1);
    long M = static_cast<long>(std::min(half, k_cut / stride + 1));
    const double dxi = spec.dxi * static_cast<double>(stride);

    auto at = [&](long m) -> const Complex& {
        return spec.qhat[center + static_cast<std::size_t>(m * static_cast<long>(stride))];
    };
    auto xi_of = [&](long m) { return dxi * static_cast<double>(m); };
    auto simpson_w = [&](long m) {
        if (m == -M || m == M) return 1.0 / 3.0;
        return ((m + M) % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
    };

    const Complex two_lsq = 2.0 * point.lambda_sq;
    double min_abs = std::numeric_limits<double>::infinity();
    for (long m = -M; m <= M; ++m) min_abs = std::min(min_abs, std::abs(two_lsq + xi_of(m)));
    if (min_abs < dxi)
        throw SingularityError("b4_fourier multiplier denominator near zero on the "
                               "reduced grid");

    const Complex l4 = point.lambda_sq * point.lambda_sq;
    Complex acc(0.0, 0.0);
    for (long m1 = -M; m1 <= M; ++m1) {  // xi1
        const Complex f1 = std::conj(at(m1)) / (two_lsq + xi_of(m1));
        const double w1 = simpson_w(m1);
        for (long m2 = -M; m2 <= M; ++m2) {  // eta1
            const Complex f2 = at(m2) / (two_lsq + xi_of(m2));
            const double w12 = w1 * simpson_w(m2);
            for (long m3 = -M; m3 <= M; ++m3) {  // eta2
                long m4 = m2 + m3 - m1;          // xi2 on the same grid
                if (m4 < -M || m4 > M) continue;
                Complex quartic = f2 * at(m3) * f1 * std::conj(at(m4));
                acc += w12 * simpson_w(m3) * quartic.real() / (two_lsq + xi_of(m3));
            }
        }
    }
    const double cell = dxi * dxi * dxi;
    return Complex(0.0, 1.0 / (2.0 * std::numbers::pi)) * l4 * acc * cell;
}

std::vector<Complex> h_coefficients_b4(const GridPotential& q, std::size_t j_max) {
    if (j_max < 2 || j_max > 3) throw SizeError("h_coefficients_b4 supports j_max in {2,3}");
    check_aliasing(pot::fourier(q), 2);

    const std::size_t max_order = j_max - 2;
    std::vector<std::vector<Complex>> deriv(max_order + 1);
    deriv[0] = q.values();
    for (std::size_t o = 1; o <= max_order; ++o)
        deriv[o] = pot::spectral_derivative(q, static_cast<int>(o));

    std::vector<Complex> H;
    for (std::size_t j = 2; j <= j_max; ++j) {
        Complex sum(0.0, 0.0);
        const auto l = static_cast<long>(j) - 2;
        for (long a1 = 0; a1 <= l; ++a1)
            for (long a2 = 0; a2 + a1 <= l; ++a2) {
                long a3 = l - a1 - a2;
                double sign = (a1 % 2 == 0) ? 1.0 : -1.0;
                Complex integral(0.0, 0.0);
                const auto& d1 = deriv[static_cast<std::size_t>(a1)];
                const auto& d2 = deriv[static_cast<std::size_t>(a2)];
                const auto& d3 = deriv[static_cast<std::size_t>(a3)];
                for (std::size_t i = 0; i < q.n(); ++i) {
                    Complex v = d2[i] * d3[i] * std::conj(d1[i] * q.values()[i]);
                    integral += (i == 0 || i + 1 == q.n()) ? 0.5 * v : v;
                }
                sum += sign * integral * q.dx();
            }
        Complex i_pow = std::pow(Complex(0.0, 1.0), static_cast<double>(j));
        H.push_back(-(i_pow * sum).real());
    }
    return H;
}

ConservedQuantities conserved(const GridPotential& q) {
    std::vector<Complex> qx = pot::spectral_derivative(q, 1);
    const auto& v = q.values();
    const std::size_t n = q.n();

    double h0 = trapz(n, q.dx(), [&](std::size_t i) { return std::norm(v[i]); });
    double h1 = trapz(n, q.dx(), [&](std::size_t i) {
        return (std::conj(v[i]) * qx[i]).imag() + 0.5 * std::norm(v[i]) * std::norm(v[i]);
    });
    double h2 = trapz(n, q.dx(), [&](std::size_t i) {
        double a2 = std::norm(v[i]);
        return std::norm(qx[i]) - 1.5 * (a2 * v[i] * std::conj(qx[i])).imag() +
               0.5 * a2 * a2 * a2;
    });
    return {h0, h1, h2};
}

namespace {

// least squares for y ~ sum_k c_k u^{-k}, k = 1..3, complex coefficients
std::array<Complex, 3> solve_inverse_power_fit(const std::vector<Complex>& u,
                                               const std::vector<Complex>& y) {
    const std::size_t m = u.size();
    if (m < 3) throw FitError("asymptotic fit needs at least 3 ray samples");
    std::array<std::vector<Complex>, 3> cols;
    for (int k = 0; k < 3; ++k) {
        cols[k].resize(m);
        for (std::size_t i = 0; i < m; ++i)
            cols[k][i] = std::pow(u[i], -static_cast<double>(k + 1));
    }
    // normalize columns, then solve the 3x3 normal equations
    std::array<double, 3> scale{};
    for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (const auto& z : cols[k]) s += std::norm(z);
        scale[k] = std::sqrt(s);
        for (auto& z : cols[k]) z /= scale[k];
    }
    std::array<std::array<Complex, 4>, 3> aug{};
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            Complex g(0.0, 0.0);
            for (std::size_t i = 0; i < m; ++i) g += std::conj(cols[r][i]) * cols[c][i];
            aug[r][c] = g;
        }
        Complex rhs(0.0, 0.0);
        for (std::size_t i = 0; i < m; ++i) rhs += std::conj(cols[r][i]) * y[i];
        aug[r][3] = rhs;
    }
    // Gaussian elimination with partial pivoting on the 3x3 system
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::abs(aug[r][col]) > std::abs(aug[piv][col])) piv = r;
        std::swap(aug[col], aug[piv]);
        if (std::abs(aug[col][col]) < 1e-12) {
            std::ostringstream os;
            os << "ill-conditioned asymptotic fit: pivot " << std::abs(aug[col][col])
               << " at column " << col;
            throw FitError(os.str());
        }
        for (int r = 0; r < 3; ++r) {
            if (r == col) continue;
            Complex f = aug[r][col] / aug[col][col];
            for (int c = col; c < 4; ++c) aug[r][c] -= f * aug[col][c];
        }
    }
    std::array<Complex, 3> coeff;
    for (int k = 0; k < 3; ++k) coeff[k] = aug[k][3] / aug[k][k] / scale[k];
    return coeff;
}

}  // namespace

AsymptoticFit asymptotic_fit(const GridPotential& q, const std::vector<double>& zetas,
                             const scattering::SolveOptions& opts) {
    AsymptoticFit fit;
    fit.zeta = zetas;
    const double l2 = pot::l2_norm_sq(q);

    std::vector<Complex> u, y;
    for (double zeta : zetas) {
        SpectralPoint point = SpectralPoint::from_ray(zeta);
        Complex s11 = scattering::scattering_coefficients(q, point, opts).s11;
        Complex value = std::log(s11) + Complex(0.0, 0.5) * l2;
        fit.log_s11bar.push_back(value);
        u.push_back(point.lambda_sq);
        y.push_back(value);
    }

    if (l2 == 0.0) {  // zero potential: nothing to fit
        fit.D1 = fit.D2 = Complex(0.0, 0.0);
        fit.residual = fit.d1_defect = fit.d2_defect = 0.0;
        return fit;
    }

    auto coeff = solve_inverse_power_fit(u, y);
    fit.D1 = coeff[0];
    fit.D2 = coeff[1];

    double rss = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        Complex model = coeff[0] / u[i] + coeff[1] / (u[i] * u[i]) +
                        coeff[2] / (u[i] * u[i] * u[i]);
        rss += std::norm(y[i] - model);
    }
    fit.residual = std::sqrt(rss / static_cast<double>(u.size()));

    ConservedQuantities H = conserved(q);
    Complex d1_target = Complex(0.0, 0.25) * H.H1;
    Complex d2_target = Complex(0.0, -0.125) * H.H2;
    fit.d1_defect = std::abs(fit.D1 - d1_target) / std::max(std::abs(d1_target), 1e-300);
    fit.d2_defect = std::abs(fit.D2 - d2_target) / std::max(std::abs(d2_target), 1e-300);
    return fit;
}

LimitTable limit_check(const GridPotential& q, const std::vector<double>& zetas,
                       const scattering::SolveOptions& opts) {
    LimitTable table;
    table.zeta = zetas;
    const double l2 = pot::l2_norm_sq(q);
    for (double zeta : zetas) {
        SpectralPoint point = SpectralPoint::from_ray(zeta);
        Complex s11 = scattering::scattering_coefficients(q, point, opts).s11;
        table.defect.push_back(std::abs(std::log(s11) + Complex(0.0, 0.5) * l2));
    }
    table.slope = fit_loglog(table.zeta, table.defect).slope;
    return table;
}

}  // namespace dnls::spectral
