#ifndef STRIPCLASS_SRC_FFT_HPP
#define STRIPCLASS_SRC_FFT_HPP

#include <complex>
#include <span>
#include <vector>

namespace stripclass::detail {

// out_k = sum_j in_j exp(-2 pi i j k / n)
std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in);

// out_j = sum_k in_k exp(+2 pi i j k / n)
std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> in);

} // namespace stripclass::detail

#endif
