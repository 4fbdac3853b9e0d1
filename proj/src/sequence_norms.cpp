#include "dnls/sequence_norms.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "dnls/errors.hpp"

namespace dnls::vnorm {

void validate(const StepFunction& f) {
    if (f.breakpoints.size() < 2)
        throw SizeError("step function needs at least 2 breakpoints");
    if (f.values.size() + 1 != f.breakpoints.size())
        throw SizeError("step function needs exactly N-1 values for N breakpoints");
    for (std::size_t i = 0; i + 1 < f.breakpoints.size(); ++i)
        if (!(f.breakpoints[i] < f.breakpoints[i + 1]))
            throw SizeError("breakpoints must be strictly increasing");
}

double vp_norm(const StepFunction& f, double p) {
    validate(f);
    if (!(p > 1.0)) throw SizeError("vp_norm requires p > 1");
    const std::size_t N = f.breakpoints.size();
    if (N > kMaxBreakpoints) {
        std::ostringstream os;
        os << "exact V^p enumeration limited to " << kMaxBreakpoints
           << " breakpoints, got " << N << "; use a sampled lower bound instead";
        throw SizeError(os.str());
    }

    // Attainable sample values in position order: 0 before t_1, the piece
    // values, and the mandatory terminal 0 at t_N = +infinity.
    std::vector<Complex> v;
    v.reserve(N + 1);
    v.push_back(Complex(0.0, 0.0));
    v.insert(v.end(), f.values.begin(), f.values.end());
    v.push_back(Complex(0.0, 0.0));

    const std::size_t m = v.size() - 1;  // optional indices 0..m-1, index m forced
    double best = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        double sum = 0.0;
        bool have_prev = false;
        Complex prev;
        for (std::size_t i = 0; i <= m; ++i) {
            if (i < m && !(mask & (std::size_t{1} << i))) continue;
            if (have_prev) sum += std::pow(std::abs(v[i] - prev), p);
            prev = v[i];
            have_prev = true;
        }
        best = std::max(best, sum);
    }
    return std::pow(best, 1.0 / p);
}

bool vp_monotonicity_check(const StepFunction& f, double p, double q) {
    if (!(q > p)) throw SizeError("monotonicity check requires q > p");
    return vp_norm(f, q) <= vp_norm(f, p) + 1e-12;
}

ConvolutionReport convolution_bound_check(const ConvolutionKernel& g, const StepFunction& f,
                                          double p, double tolerance) {
    validate(f);
    if (g.offsets.size() != g.weights.size() || g.offsets.empty())
        throw SizeError("kernel needs matching nonempty offsets and weights");
    double l1 = 0.0;
    for (double w : g.weights) {
        if (w < 0.0) throw SizeError("kernel weights must be nonnegative");
        l1 += w;
    }

    // (g*v)(x) = sum_i w_i v(x - o_i): a step function on the shifted
    // breakpoint union.
    std::vector<double> refined;
    for (double t : f.breakpoints)
        for (double o : g.offsets) refined.push_back(t + o);
    std::sort(refined.begin(), refined.end());
    refined.erase(std::unique(refined.begin(), refined.end(),
                              [](double a, double b) { return std::abs(a - b) < 1e-12; }),
                  refined.end());
    if (refined.size() > kMaxBreakpoints) {
        std::ostringstream os;
        os << "refined breakpoint set has " << refined.size() << " points, above the "
           << kMaxBreakpoints << " guard";
        throw SizeError(os.str());
    }

    auto value_at = [&](double x) {
        // f is left-closed right-open on each piece
        if (x < f.breakpoints.front() || x >= f.breakpoints.back())
            return Complex(0.0, 0.0);
        auto it = std::upper_bound(f.breakpoints.begin(), f.breakpoints.end(), x);
        std::size_t piece = static_cast<std::size_t>(it - f.breakpoints.begin()) - 1;
        return f.values[std::min(piece, f.values.size() - 1)];
    };

    StepFunction conv;
    conv.breakpoints = refined;
    for (std::size_t j = 0; j + 1 < refined.size(); ++j) {
        double mid = 0.5 * (refined[j] + refined[j + 1]);
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < g.offsets.size(); ++i)
            acc += g.weights[i] * value_at(mid - g.offsets[i]);
        conv.values.push_back(acc);
    }

    ConvolutionReport report;
    report.lhs = vp_norm(conv, p);
    report.rhs = l1 * vp_norm(f, p);
    report.violated = report.lhs > report.rhs * (1.0 + tolerance) + 1e-12;
    return report;
}

}  // namespace dnls::vnorm
