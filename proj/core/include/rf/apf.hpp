#pragma once

// Almost-periodic machinery over sampled arithmetic sequences: finite-scale
// mean values, Fourier / Ramanujan-Fourier coefficient extraction, and the
// Bochner-Fejer weighted evaluation of a series. All mean values here are
// finite-N (or finite-T) estimators; sweeping N or T is the caller's way of
// observing the limit.

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "rf/ramanujan.hpp"
#include "rf/sieve.hpp"
#include "rf/summation.hpp"

namespace rf {

// Complex samples f(1..N), 1-based.
class SampledSequence {
  public:
    explicit SampledSequence(std::vector<std::complex<double>> values);

    std::uint64_t size() const noexcept { return values_.size(); }
    std::complex<double> value(std::uint64_t n) const;  // 1-based, checked
    const std::vector<std::complex<double>>& values() const noexcept { return values_; }

  private:
    std::vector<std::complex<double>> values_;
};

// Exact fraction for the Bochner-Fejer weights.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // > 0, reduced

    double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

// Weights p(j,q,m) for every reduced j/q with q <= m at stage m.
struct BochnerFejerWeights {
    std::uint32_t stage = 1;
    std::map<ReducedRational, Rational> weights;
};

// (1/N) sum of the samples, fixed-cascade summation (bit-identical for a
// given input regardless of worker count).
std::complex<double> discrete_mean(const SampledSequence& samples);

// Trapezoid estimate of (1/2T) * integral of f over [-T, T]. The grid is
// uniform with approximately the requested step (2T is divided into
// round(2T/step) intervals). Throws std::runtime_error on a non-finite
// sample, std::invalid_argument for step <= 0 or step > T.
std::complex<double> continuous_mean(const std::function<std::complex<double>(double)>& f,
                                     double T, double step);

// Fourier constant at exponent lambda: M{ f(n) e^{-2 pi i lambda n} }.
std::complex<double> fourier_constant(const SampledSequence& samples, ReducedRational lambda);

// Carmichael-style estimator of the coefficient a_q:
// (1/phi(q)) * M{ f(n) c_q(n) }. Exact for finite series sampled over a
// common period.
std::complex<double> extract_rf_coefficient(const SampledSequence& samples, std::uint32_t q,
                                            const SieveTable& table);

// Decomposition j/q = sum_i residue_i / prime_power_i (mod 1), residues in
// the symmetric range (-pp/2, pp/2]. Empty for q = 1.
struct PrimePowerResidue {
    std::uint64_t prime_power = 1;
    std::int64_t residue = 0;
};
std::vector<PrimePowerResidue> crt_residues(std::uint32_t j, std::uint32_t q);

// CRT-Fejer weight p(j,q,m) = prod_i (1 - |residue_i| / (m * prime_power_i)).
// Rational, in (0, 1], equal to 1 for q = 1, non-decreasing in m with
// limit 1. Requires reduced j/q and q <= m.
Rational bochner_fejer_weight(std::uint32_t j, std::uint32_t q, std::uint32_t m);

// Full weight table for stage m.
BochnerFejerWeights bochner_fejer_weights(std::uint32_t m);

enum class SummationMode { truncated, bochner_fejer };

// truncated:      sum over stored q of a_q c_q(x)
// bochner_fejer:  sigma_m(x) = sum over q <= min(m, q_max), reduced j/q, of
//                 p(j,q,m) a_q e^{2 pi i (j/q) x}; requires m >= q_max.
std::complex<double> evaluate_rf_series(const RFSeries& series, double x,
                                        SummationMode mode = SummationMode::truncated,
                                        std::uint32_t m = 0);

}  // namespace rf
