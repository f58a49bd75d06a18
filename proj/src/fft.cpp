#include "fft.hpp"

#include <mutex>

#include <fftw3.h>

namespace stripclass::detail {

namespace {

// The FFTW planner is not reentrant; execution of a finished plan is.
std::mutex planner_mutex;

std::vector<std::complex<double>> run(std::span<const std::complex<double>> in, int sign) {
    const int n = static_cast<int>(in.size());
    std::vector<std::complex<double>> src(in.begin(), in.end());
    std::vector<std::complex<double>> out(in.size());
    if (n == 0) {
        return out;
    }
    auto* src_ptr = reinterpret_cast<fftw_complex*>(src.data());
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());

    fftw_plan plan;
    {
        std::lock_guard lock(planner_mutex);
        plan = fftw_plan_dft_1d(n, src_ptr, out_ptr, sign, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(planner_mutex);
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> dft_forward(std::span<const std::complex<double>> in) {
    return run(in, FFTW_FORWARD);
}

std::vector<std::complex<double>> dft_backward(std::span<const std::complex<double>> in) {
    return run(in, FFTW_BACKWARD);
}

} // namespace stripclass::detail
