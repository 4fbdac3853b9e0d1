#pragma once

#include <complex>
#include <cstddef>
#include <vector>

// Exact V^p variation norms of step functions at desk scale, plus a
// numerical spot check of the convolution inequality
// ||g * v||_{V^p} <= ||g||_{L^1} ||v||_{V^p}.
namespace dnls::vnorm {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxBreakpoints = 14;

// Piecewise-constant function: value values[j] on [breakpoints[j],
// breakpoints[j+1]), zero outside [breakpoints.front(), breakpoints.back()).
// The V^p convention fixes the value at t_N = +infinity to 0.
struct StepFunction {
    std::vector<double> breakpoints;  // strictly increasing, size N
    std::vector<Complex> values;      // size N-1
};

void validate(const StepFunction& f);

// sup over all finite sample sequences ending at +infinity of
// (sum |v(t_{j+1}) - v(t_j)|^p)^{1/p}, computed by exhaustive subset
// enumeration of the attainable value sequence (N <= 14).
double vp_norm(const StepFunction& f, double p);

// vp_norm(f, q) <= vp_norm(f, p) for q > p (l^p monotonicity).
bool vp_monotonicity_check(const StepFunction& f, double p, double q);

// Discrete convolution kernel: point masses weights[i] at offsets[i],
// ||g||_{L^1} = sum weights (weights nonnegative).
struct ConvolutionKernel {
    std::vector<double> offsets;
    std::vector<double> weights;
};

struct ConvolutionReport {
    double lhs;  // ||g * v||_{V^p} on the refined breakpoint set
    double rhs;  // ||g||_{L^1} ||v||_{V^p}
    bool violated;
};

// Convolution of a step function with a discrete kernel is again a step
// function on the refined breakpoint set {t_j + o_i}; the refined set must
// stay within the N <= 14 guard.  Violation flagged beyond the given
// discretization tolerance.
ConvolutionReport convolution_bound_check(const ConvolutionKernel& g, const StepFunction& f,
                                          double p, double tolerance = 0.05);

}  // namespace dnls::vnorm
