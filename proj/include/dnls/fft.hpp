#pragma once

#include <complex>
#include <vector>

// Thin wrapper over FFTW double-precision 1-D transforms with a per-size
// plan cache.  Unnormalized, matching FFTW's convention: callers apply the
// physical scale factors.
namespace dnls::fft {

using Complex = std::complex<double>;

// data[k] <- sum_m data[m] exp(-2*pi*i*m*k/n)
void forward(std::vector<Complex>& data);

// data[m] <- sum_k data[k] exp(+2*pi*i*m*k/n)   (no 1/n)
void backward(std::vector<Complex>& data);

}  // namespace dnls::fft
