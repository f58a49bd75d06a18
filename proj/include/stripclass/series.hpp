#ifndef STRIPCLASS_SERIES_HPP
#define STRIPCLASS_SERIES_HPP

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace stripclass {

using cplx = std::complex<double>;

/// Order used when callers do not ask for a specific truncation.
inline constexpr std::size_t default_order = 256;

/// Power series c_0 + c_1 z + ... + c_N z^N with complex coefficients,
/// truncated at order N. Binary operations produce a result whose order is
/// the smaller of the two operand orders.
class TruncatedSeries {
public:
    TruncatedSeries() : c_(1) {}
    explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
    explicit TruncatedSeries(std::vector<cplx> coeffs);

    static TruncatedSeries constant(cplx value, std::size_t order);
    static TruncatedSeries identity(std::size_t order);

    std::size_t order() const noexcept { return c_.size() - 1; }

    cplx operator[](std::size_t k) const { return c_[k]; }
    cplx& operator[](std::size_t k) { return c_[k]; }

    std::span<const cplx> coeffs() const noexcept { return c_; }
    std::span<cplx> coeffs() noexcept { return c_; }

    /// Copy with order lowered to `order` (must not exceed the current order).
    TruncatedSeries truncated(std::size_t order) const;

    /// f(0) = 0 and f'(0) = 1, up to `tol`.
    bool is_normalized(double tol = 1e-12) const;

private:
    std::vector<cplx> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, cplx factor);

/// Cauchy product truncated at min(order(a), order(b)).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

/// Throws std::invalid_argument for order-0 input.
TruncatedSeries derivative(const TruncatedSeries& a);

/// Series of \int_0^z g(t)/t dt. Requires g_0 = 0.
TruncatedSeries integrate_over_t(const TruncatedSeries& g);

/// exp(a) for a_0 = 0, via k E_k = sum_{j=1..k} j a_j E_{k-j}.
TruncatedSeries series_exp(const TruncatedSeries& a);

/// log(a) for a_0 = 1, via k L_k = k a_k - sum_{m=1..k-1} a_m (k-m) L_{k-m}.
/// Runs in O(N * degree) where degree is the last nonzero index of `a`, so
/// logarithms of polynomials padded to high order stay cheap.
TruncatedSeries series_log(const TruncatedSeries& a);

/// log(f(z)/z) for normalized f. The result has order order(f) - 1 and a
/// zero constant term.
TruncatedSeries log_normalized(const TruncatedSeries& f);

/// Coefficients of h(w(z)) by Horner's scheme. Requires w_0 = 0.
TruncatedSeries compose_schwarz(const TruncatedSeries& h, const TruncatedSeries& w);

cplx evaluate(const TruncatedSeries& a, cplx z);

/// Values of the truncated polynomial at radius * exp(2 pi i j / angles),
/// j = 0..angles-1, computed with one inverse FFT.
std::vector<cplx> evaluate_on_circle(const TruncatedSeries& a, double radius, std::size_t angles);

using PointwiseMap = std::function<cplx(cplx)>;

/// Taylor coefficients c_0..c_N of `eval` estimated by a discrete Fourier
/// transform on the circle |z| = r. `samples` = 0 selects the smallest power
/// of two that is at least 4N.
TruncatedSeries coeffs_by_circle_sampling(const PointwiseMap& eval, std::size_t order, double r,
                                          std::size_t samples = 0);

/// Sampled Schwarz test: w_0 = 0 and |w| < 1 on `angles` points of the
/// circle of radius `radius`.
bool is_schwarz(const TruncatedSeries& w, double radius = 0.999, std::size_t angles = 256);

} // namespace stripclass

#endif
