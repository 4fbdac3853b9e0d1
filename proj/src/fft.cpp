#include "dnls/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <unordered_map>

namespace dnls::fft {

namespace {

struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

// FFTW plan creation is not thread-safe and costs more than small
// transforms; plans (in-place, ESTIMATE) are cached per size and reused.
// FFTW_ESTIMATE plans do not touch the array contents at creation.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}

std::unordered_map<std::size_t, PlanPair>& plan_cache() {
    static std::unordered_map<std::size_t, PlanPair> cache;
    return cache;
}

PlanPair plans_for(std::size_t n, fftw_complex* buf) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    PlanPair p;
    int ni = static_cast<int>(n);
    p.fwd = fftw_plan_dft_1d(ni, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.bwd = fftw_plan_dft_1d(ni, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(n, p);
    return p;
}

void run(std::vector<Complex>& data, bool fwd) {
    if (data.empty()) return;
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    PlanPair p = plans_for(data.size(), buf);
    fftw_execute_dft(fwd ? p.fwd : p.bwd, buf, buf);
}

}  // namespace

void forward(std::vector<Complex>& data) { run(data, true); }
void backward(std::vector<Complex>& data) { run(data, false); }

}  // namespace dnls::fft
