#pragma once

// Empirical convolution / cross-correlation estimators and their predicted
// spectra. Empirical sides are finite-scale means of products of evaluable
// functions; predicted sides are the coefficient products
// sum_q a_q b_q c_q(.) and sum_q a_q conj(b_q) c_q(.).

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rf/apf.hpp"

namespace rf {

// A function view usable by the estimators: either backed by an RFSeries
// (evaluable on the whole real line via truncated summation) or by a
// SampledSequence (integer domain 1..N only).
class EvaluableFunction {
  public:
    static EvaluableFunction from_series(RFSeries series);
    static EvaluableFunction from_samples(SampledSequence samples);

    bool real_line() const noexcept;
    // Throws std::domain_error for a sample-backed view outside 1..N.
    std::complex<double> at_integer(std::int64_t n) const;
    // Throws std::domain_error for sample-backed views.
    std::complex<double> at_real(double x) const;

    // Null for sample-backed views.
    const RFSeries* series() const noexcept;

  private:
    struct Impl;
    explicit EvaluableFunction(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

struct CorrelationReport {
    double lag = 0;  // integer lag m, or real offset for continuous modes
    std::complex<double> empirical;
    std::complex<double> predicted;
    double abs_error = 0;
    double scale = 0;  // N (discrete) or T (continuous)
    std::uint32_t q_truncation = 0;
};

// (1/N) sum_{n=1..N} a(n+m) conj(b(n))
std::complex<double> empirical_cross_correlation(const EvaluableFunction& a,
                                                 const EvaluableFunction& b, std::int64_t m,
                                                 std::uint64_t N);

// (1/N) sum_{n=1..N} a(n) b(m-n); b is evaluated at negative arguments, so
// sample-backed b is usable only when 1 <= m-n <= N_b throughout.
std::complex<double> empirical_convolution(const EvaluableFunction& a, const EvaluableFunction& b,
                                           std::int64_t m, std::uint64_t N);

// Trapezoid estimate of (1/2T) integral a(t+x) conj(b(t)) dt over [-T, T].
std::complex<double> continuous_cross_correlation(const EvaluableFunction& a,
                                                  const EvaluableFunction& b, double x, double T,
                                                  double step);

// Trapezoid estimate of (1/2T) integral a(tau) b(t-tau) dtau over [-T, T].
std::complex<double> continuous_convolution(const EvaluableFunction& a, const EvaluableFunction& b,
                                            double t, double T, double step);

// Coefficient-wise product: a_q * b_q, or a_q * conj(b_q) when conjugate_b.
// q_max is the smaller of the inputs'.
RFSeries predicted_spectrum_product(const RFSeries& a, const RFSeries& b, bool conjugate_b);

// sum_q over the product series of coeff_q * c_q(lag); exact integer c_q.
std::complex<double> predicted_value_at(const RFSeries& product, std::int64_t lag);
// Real-offset variant using c_q on the real line.
std::complex<double> predicted_value_at(const RFSeries& product, double offset);

// One report per lag: empirical cross-correlation of the truncated
// evaluations against sum_q a_q conj(b_q) c_q(m). b omitted means
// autocorrelation (b = a).
std::vector<CorrelationReport> wk_verify(const RFSeries& a, const std::optional<RFSeries>& b,
                                         std::span<const std::int64_t> lags, std::uint64_t N);

// One report per N in ascending N_list, fixed lag m.
std::vector<CorrelationReport> convergence_sweep(const RFSeries& a, const RFSeries& b,
                                                 std::int64_t m,
                                                 std::span<const std::uint64_t> N_list);

// CSV header: m,empirical_re,empirical_im,predicted_re,predicted_im,abs_err,N,Q
// A non-empty experiment tag prepends an "experiment" column.
std::string reports_to_csv(std::span<const CorrelationReport> reports,
                           std::string_view experiment_tag = {});
std::string reports_to_json(std::span<const CorrelationReport> reports,
                            std::string_view experiment_tag = {});

}  // namespace rf
