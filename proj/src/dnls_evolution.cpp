#include "dnls/dnls_evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dnls/errors.hpp"
#include "dnls/fft.hpp"

namespace dnls::evolution {

namespace {

struct SpectralWorkspace {
    std::size_t n;
    double dx;
    std::vector<double> xi;      // FFT-ordered frequencies
    std::vector<double> mask;    // 2/3-rule dealiasing
    std::vector<Complex> scratch;

    explicit SpectralWorkspace(const GridPotential& q) : n(q.n()), dx(q.dx()) {
        xi.resize(n);
        mask.resize(n);
        const double dxi = 2.0 * std::numbers::pi / (static_cast<double>(n) * dx);
        const auto half = static_cast<long>(n / 2);
        const auto cut = static_cast<long>(n / 3);
        for (std::size_t i = 0; i < n; ++i) {
            long k = static_cast<long>(i) <= half - 1 ? static_cast<long>(i)
                                                      : static_cast<long>(i) - static_cast<long>(n);
            xi[i] = static_cast<double>(k) * dxi;
            mask[i] = std::abs(k) <= cut ? 1.0 : 0.0;
        }
    }

    // N(q^) = -F[(|q|^2 q)_x] with dealiasing, in place of `vhat`
    void nonlinear(const std::vector<Complex>& qhat, std::vector<Complex>& vhat) {
        const double inv_n = 1.0 / static_cast<double>(n);
        scratch = qhat;
        fft::backward(scratch);
        for (auto& z : scratch) {
            z *= inv_n;
            z = std::norm(z) * z;
        }
        fft::forward(scratch);
        vhat.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            vhat[i] = Complex(0.0, -xi[i]) * mask[i] * scratch[i];
    }
};

}  // namespace

EvolutionState make_state(const GridPotential& q0, double dt) {
    if (!(dt > 0.0)) throw DomainError("evolution requires dt > 0");
    double max_abs = 0.0;
    for (const auto& z : q0.values()) max_abs = std::max(max_abs, std::abs(z));
    return {q0, 0.0, dt, 0, pot::l2_norm_sq(q0), max_abs};
}

namespace {

EvolutionState step_by(const EvolutionState& state, double h) {
    const GridPotential& q = state.potential;
    SpectralWorkspace ws(q);
    const std::size_t n = q.n();

    std::vector<Complex> qhat = q.values();
    fft::forward(qhat);

    // RK4 in the integrating-factor variable w(tau) = e^{i xi^2 tau} q^(tau):
    // w' = G(tau, w) = e^{i xi^2 tau} N(e^{-i xi^2 tau} w)
    std::vector<Complex> Eh(n), Eh2(n);
    for (std::size_t i = 0; i < n; ++i) {
        Eh2[i] = std::exp(Complex(0.0, -ws.xi[i] * ws.xi[i] * h / 2.0));
        Eh[i] = Eh2[i] * Eh2[i];
    }

    std::vector<Complex> g1, g2, g3, g4, tmp(n);
    ws.nonlinear(qhat, g1);  // tau = 0

    for (std::size_t i = 0; i < n; ++i) tmp[i] = Eh2[i] * (qhat[i] + 0.5 * h * g1[i]);
    ws.nonlinear(tmp, g2);  // tau = h/2, g2 holds N in q^ space
    for (std::size_t i = 0; i < n; ++i) g2[i] /= Eh2[i];

    for (std::size_t i = 0; i < n; ++i) tmp[i] = Eh2[i] * (qhat[i] + 0.5 * h * g2[i]);
    ws.nonlinear(tmp, g3);
    for (std::size_t i = 0; i < n; ++i) g3[i] /= Eh2[i];

    for (std::size_t i = 0; i < n; ++i) tmp[i] = Eh[i] * (qhat[i] + h * g3[i]);
    ws.nonlinear(tmp, g4);
    for (std::size_t i = 0; i < n; ++i) g4[i] /= Eh[i];

    const double inv_n = 1.0 / static_cast<double>(n);
    std::vector<Complex> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Complex w = qhat[i] + (h / 6.0) * (g1[i] + 2.0 * g2[i] + 2.0 * g3[i] + g4[i]);
        out[i] = Eh[i] * w * inv_n;
    }
    fft::backward(out);

    double max_abs = 0.0;
    for (const auto& z : out) max_abs = std::max(max_abs, std::abs(z));
    if (max_abs > 10.0 * state.max_abs_initial && state.max_abs_initial > 0.0) {
        std::ostringstream os;
        os << "evolution unstable at t=" << state.t + h << ": max|q|=" << max_abs
           << " exceeds 10x initial " << state.max_abs_initial;
        throw InstabilityError(os.str());
    }

    EvolutionState next{GridPotential(q.x_min(), q.x_max(), std::move(out),
                                      /*boundary tolerance re-checked later*/ 1.0),
                        state.t + h,
                        state.dt,
                        state.step_count + 1,
                        state.h0_initial,
                        state.max_abs_initial};
    return next;
}

}  // namespace

EvolutionState step(const EvolutionState& state) { return step_by(state, state.dt); }

EvolutionState evolve(const GridPotential& q0, double T, double dt) {
    if (T < 0.0) throw DomainError("evolution requires T >= 0");
    EvolutionState state = make_state(q0, dt);
    while (state.t < T) {
        double h = std::min(dt, T - state.t);
        state = step_by(state, h);
    }
    if (state.h0_initial > 0.0) {
        double drift =
            std::abs(pot::l2_norm_sq(state.potential) / state.h0_initial - 1.0);
        if (drift > 1e-8) {
            std::ostringstream os;
            os << "mass conservation violated: relative H0 drift " << drift
               << " after " << state.step_count << " steps (reduce dt)";
            throw InstabilityError(os.str());
        }
    }
    return state;
}

std::vector<IsospectralityRow> isospectrality_report(
    const GridPotential& q0, double T, double dt, const std::vector<SpectralPoint>& points,
    const scattering::SolveOptions& opts) {
    EvolutionState final_state = evolve(q0, T, dt);

    const auto& evolved = final_state.potential.values();
    double edge = std::max(std::abs(evolved.front()), std::abs(evolved.back()));
    if (edge > kEdgeContaminationTol) {
        std::ostringstream os;
        os << "radiation reached the box edge by t=" << T << " (|q|=" << edge
           << "); enlarge the box or shorten T";
        throw BoundaryError(os.str());
    }
    GridPotential qT(final_state.potential.x_min(), final_state.potential.x_max(),
                     final_state.potential.values(), kEdgeContaminationTol);

    std::vector<IsospectralityRow> rows;
    for (const SpectralPoint& point : points) {
        auto before = scattering::scattering_coefficients(q0, point, opts);
        auto after = scattering::scattering_coefficients(qT, point, opts);
        Complex l4 = point.lambda_sq * point.lambda_sq;
        Complex phase = std::exp(Complex(0.0, 4.0) * l4 * T);
        rows.push_back({point, std::abs(after.s11 - before.s11),
                        std::abs(after.s21 - phase * before.s21)});
    }
    return rows;
}

}  // namespace dnls::evolution
