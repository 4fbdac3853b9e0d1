#include "dnls/simplex_integrals.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "dnls/errors.hpp"

namespace dnls::simplex {

namespace {

// Integrals of the degree-5 interpolant over one unit cell.  Central row is
// for nodes {i-2..i+3} integrating [i, i+1]; the one-sided rows are for the
// stencil {0..5} (first two cells) and {n-6..n-1} (last two).
constexpr std::array<double, 6> kWFirst = {95.0 / 288,  1427.0 / 1440, -133.0 / 240,
                                           241.0 / 720, -173.0 / 1440, 3.0 / 160};
constexpr std::array<double, 6> kWSecond = {-3.0 / 160,  637.0 / 1440, 511.0 / 720,
                                            -43.0 / 240, 77.0 / 1440,  -11.0 / 1440};
constexpr std::array<double, 6> kWCentral = {11.0 / 1440, -31.0 / 480, 401.0 / 720,
                                             401.0 / 720, -31.0 / 480, 11.0 / 1440};
constexpr std::array<double, 6> kWPenult = {-11.0 / 1440, 77.0 / 1440,  -43.0 / 240,
                                            511.0 / 720,  637.0 / 1440, -3.0 / 160};
constexpr std::array<double, 6> kWLast = {3.0 / 160,    -173.0 / 1440, 241.0 / 720,
                                          -133.0 / 240, 1427.0 / 1440, 95.0 / 288};

// One cumulative pass G(t) = int^t e^{kappa (t-s)} g(s) ds on a uniform grid,
// kappa = 2 i lambda^2 d.  Re(kappa) <= 0 on the admissible region, so the
// update factor never grows.
std::vector<Complex> kernel_cumulative(const std::vector<Complex>& g, Complex kappa,
                                       double h) {
    const std::size_t n = g.size();
    const Complex E = std::exp(kappa * h);
    // E^p for p in [-4, 5]; negative powers appear only across a stencil.
    std::array<Complex, 10> Ep;
    Ep[4] = 1.0;
    for (int p = 1; p <= 5; ++p) Ep[4 + p] = Ep[3 + p] * E;
    const Complex Einv = 1.0 / E;
    for (int p = 1; p <= 4; ++p) Ep[4 - p] = Ep[5 - p] * Einv;

    auto coeffs = [&](const std::array<double, 6>& w, const std::array<int, 6>& expo) {
        std::array<Complex, 6> c;
        for (int m = 0; m < 6; ++m) c[m] = h * w[m] * Ep[expo[m] + 4];
        return c;
    };
    const auto cFirst = coeffs(kWFirst, {1, 0, -1, -2, -3, -4});
    const auto cSecond = coeffs(kWSecond, {2, 1, 0, -1, -2, -3});
    const auto cCentral = coeffs(kWCentral, {3, 2, 1, 0, -1, -2});
    const auto cPenult = coeffs(kWPenult, {4, 3, 2, 1, 0, -1});
    const auto cLast = coeffs(kWLast, {5, 4, 3, 2, 1, 0});

    std::vector<Complex> G(n, Complex(0.0, 0.0));
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Complex* base;
        const std::array<Complex, 6>* c;
        if (i == 0) {
            base = g.data();
            c = &cFirst;
        } else if (i == 1) {
            base = g.data();
            c = &cSecond;
        } else if (i == n - 3) {
            base = g.data() + (n - 6);
            c = &cPenult;
        } else if (i == n - 2) {
            base = g.data() + (n - 6);
            c = &cLast;
        } else {
            base = g.data() + (i - 2);
            c = &cCentral;
        }
        Complex delta(0.0, 0.0);
        for (int m = 0; m < 6; ++m) delta += (*c)[m] * base[m];
        G[i + 1] = E * G[i] + delta;
    }
    return G;
}

Complex word_integral_on(const std::string& letters, const std::vector<Complex>& q,
                         double h, Complex lambda, Complex lambda_sq) {
    const Complex two_i_lsq = Complex(0.0, 2.0) * lambda_sq;
    std::vector<Complex> prev(q.size(), Complex(1.0, 0.0));
    int surplus = 0;
    for (char letter : letters) {
        surplus += letter == words::kX ? 1 : -1;
        std::vector<Complex> g(q.size());
        if (letter == words::kX)
            for (std::size_t i = 0; i < q.size(); ++i)
                g[i] = lambda * std::conj(q[i]) * prev[i];
        else
            for (std::size_t i = 0; i < q.size(); ++i) g[i] = lambda * q[i] * prev[i];
        prev = kernel_cumulative(g, two_i_lsq * static_cast<double>(surplus), h);
    }
    return prev.back();
}

}  // namespace

WordIntegralValue word_integral(const words::Word& word, const GridPotential& q,
                                const SpectralPoint& point) {
    if (point.region == SpectralPoint::Region::lower)
        throw RegionError("word_integral requires Im(lambda^2) >= 0");
    if (std::abs(point.lambda_sq) * q.dx() > kPhaseGuard) {
        std::ostringstream os;
        os << "grid too coarse for |lambda^2|=" << std::abs(point.lambda_sq)
           << ": need |lambda^2| dx <= " << kPhaseGuard << ", have "
           << std::abs(point.lambda_sq) * q.dx();
        throw ResolutionError(os.str());
    }

    Complex value = word_integral_on(word.letters(), q.values(), q.dx(), point.lambda,
                                     point.lambda_sq);

    // stride-2 Richardson estimate for the order-6 rule
    double quad_error = 0.0;
    if (q.n() / 2 >= 8) {
        std::vector<Complex> coarse(q.n() / 2);
        for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = q.values()[2 * i];
        Complex v2 = word_integral_on(word.letters(), coarse, 2.0 * q.dx(), point.lambda,
                                      point.lambda_sq);
        quad_error = std::abs(value - v2) / 63.0;
    }
    return {word, point, value, quad_error};
}

std::vector<Complex> log_expansion(const std::vector<Complex>& s_terms) {
    std::vector<Complex> b(s_terms.size());
    for (std::size_t k = 1; k <= s_terms.size(); ++k) {
        Complex acc = s_terms[k - 1];
        for (std::size_t m = 1; m < k; ++m)
            acc -= (static_cast<double>(m) / static_cast<double>(k)) * b[m - 1] *
                   s_terms[k - m - 1];
        b[k - 1] = acc;
    }
    return b;
}

ExpansionTerms picard_terms(const GridPotential& q, const SpectralPoint& point,
                            std::size_t J) {
    if (J < 1 || J > 6) throw SizeError("picard_terms requires 1 <= J <= 6");
    ExpansionTerms out{point, {}, {}, {}, {}};
    Complex sum(1.0, 0.0);
    for (std::size_t j = 1; j <= J; ++j) {
        WordIntegralValue w = word_integral(words::xy_power(j), q, point);
        Complex s = (j % 2 == 0 ? 1.0 : -1.0) * w.value;
        out.s_terms.push_back(s);
        sum += s;
        out.partial_sums.push_back(sum);
    }
    return out;
}

ExpansionTerms b_terms(const GridPotential& q, const SpectralPoint& point, std::size_t J) {
    if (J < 1 || J > 5) throw SizeError("b_terms requires 1 <= J <= 5");
    ExpansionTerms out = picard_terms(q, point, J);
    const auto coeffs = words::log_series(J);
    for (std::size_t j = 1; j <= J; ++j) {
        if (j == 1) {
            out.b_terms.push_back(out.s_terms[0]);  // b_2 = s_2 exactly
            continue;
        }
        Complex acc(0.0, 0.0);
        for (const auto& [w, c] : coeffs[j - 1].terms())
            acc += c.convert_to<double>() * word_integral(w, q, point).value;
        out.b_terms.push_back(-acc);
    }
    std::vector<Complex> scalar = log_expansion(out.s_terms);
    for (std::size_t j = 0; j < J; ++j)
        out.identity_defects.push_back(std::abs(out.b_terms[j] - scalar[j]));
    return out;
}

DecayProfile decay_profile(const GridPotential& q, const std::vector<double>& zetas,
                           std::size_t J) {
    DecayProfile profile;
    if (pot::l2_norm_sq(q) == 0.0) return profile;
    if (J < 2) throw SizeError("decay_profile requires J >= 2");

    profile.zeta = zetas;
    for (std::size_t j = 2; j <= J; ++j) profile.j.push_back(j);
    const auto coeffs = words::log_series(J);
    for (double zeta : zetas) {
        SpectralPoint point = SpectralPoint::from_ray(zeta);
        std::vector<double> row;
        for (std::size_t j = 2; j <= J; ++j) {
            Complex acc(0.0, 0.0);
            for (const auto& [w, c] : coeffs[j - 1].terms())
                acc += c.convert_to<double>() * word_integral(w, q, point).value;
            row.push_back(std::abs(acc));
        }
        profile.abs_b.push_back(std::move(row));
    }

    // least-squares slope of ln|b| against ln(zeta), one fit per j
    for (std::size_t col = 0; col < profile.j.size(); ++col) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        std::size_t m = zetas.size();
        for (std::size_t r = 0; r < m; ++r) {
            double lx = std::log(zetas[r]);
            double ly = std::log(profile.abs_b[r][col]);
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
        }
        double denom = static_cast<double>(m) * sxx - sx * sx;
        profile.slope.push_back((static_cast<double>(m) * sxy - sx * sy) / denom);
    }
    return profile;
}

}  // namespace dnls::simplex
