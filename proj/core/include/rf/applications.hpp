#pragma once

// Built-in arithmetic functions and desk-scale prime-pair correlation
// experiments: the twin / even-gap autocorrelation of the weighted von
// Mangoldt function against its singular-series prediction, and the
// Sophie Germain affine correlation (empirical only).

#include <complex>
#include <cstdint>
#include <functional>
#include <string>

#include "rf/correlation.hpp"

namespace rf {

// (phi(n)/n) * Lambda(n)
double weighted_mangoldt(std::uint64_t n, const SieveTable& table);

// Known coefficients of the weighted von Mangoldt function: a_q = mu(q)/phi(q)
// for q <= Q (zeros omitted). Validated empirically by coefficient
// extraction rather than trusted; see tests.
RFSeries weighted_mangoldt_rf(std::uint32_t Q, const SieveTable& table);

// Partial singular series sum_{q<=Q} (mu(q)/phi(q))^2 c_q(h), ascending q
// with pairwise accumulation. At even h this approaches the Hardy-Littlewood
// constant for gap h (2*C2 at h = 2); at odd h it approaches 0.
double singular_series(std::int64_t h, std::uint32_t Q, const SieveTable& table);

// Empirical (1/N) sum_{n<=N} wm(n+h) wm(n) against singular_series(h, Q).
// Requires N + h <= table.n_max().
CorrelationReport twin_experiment(std::uint64_t h, std::uint64_t N, std::uint32_t Q,
                                  const SieveTable& table);

// Empirical (1/N) sum_{n<=N} wm(n) wm(2n+1); no spectral prediction is
// emitted. Requires 2N + 1 <= table.n_max().
double sophie_experiment(std::uint64_t N, const SieveTable& table);

// Registry entry for the CLI and the extraction tools: an integer-domain
// evaluator plus, when known, the closed-form coefficient series.
struct BuiltinFunction {
    std::string name;
    std::function<std::complex<double>(std::uint64_t)> eval;
    std::function<RFSeries(std::uint32_t)> known_series;  // may be empty
};

// Accepted specs: "weighted_mangoldt" (alias "wm"), "cq:<q>", "constant:<c>".
// The table backs weighted_mangoldt and must cover every n later evaluated.
BuiltinFunction make_builtin(const std::string& spec, const SieveTable& table);

}  // namespace rf
