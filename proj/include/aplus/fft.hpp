#pragma once

#include <complex>
#include <span>
#include <vector>

namespace aplus::fft {

/// Unnormalized forward transform X_k = sum_j x_j exp(-2 pi i jk / n).
std::vector<std::complex<double>> forward(std::span<const std::complex<double>> x);

/// Linear convolution truncated to out_len terms, via zero-padded transforms.
std::vector<std::complex<double>> convolve(std::span<const std::complex<double>> a,
                                           std::span<const std::complex<double>> b,
                                           std::size_t out_len);

}  // namespace aplus::fft
