#include "rf/apf.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rf {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// e^{2 pi i (j/q) x} with the phase reduced mod 1 in exact arithmetic for
// the integer part of x.
std::complex<double> cis_rational_multiple(std::uint64_t j, std::uint64_t q, double x) {
    const double fl = std::floor(x);
    const double frac = x - fl;
    const std::int64_t xi = static_cast<std::int64_t>(fl);
    std::int64_t xm = xi % static_cast<std::int64_t>(q);
    if (xm < 0) xm += static_cast<std::int64_t>(q);
    const double phase =
        two_pi * (static_cast<double>(j * static_cast<std::uint64_t>(xm) % q) / static_cast<double>(q) +
                  frac * static_cast<double>(j) / static_cast<double>(q));
    return {std::cos(phase), std::sin(phase)};
}

// p^e decomposition of q by trial division.
std::vector<std::pair<std::uint64_t, std::uint64_t>> prime_power_factors(std::uint64_t q) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::uint64_t p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        std::uint64_t pe = 1;
        while (q % p == 0) {
            q /= p;
            pe *= p;
        }
        out.emplace_back(p, pe);
    }
    if (q > 1) out.emplace_back(q, q);
    return out;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    // extended Euclid; gcd(a, m) == 1 guaranteed by the caller
    std::int64_t old_r = a % m, r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        std::int64_t tmp = old_r - quot * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quot * s;
        old_s = s;
        s = tmp;
    }
    std::int64_t inv = old_s % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

SampledSequence::SampledSequence(std::vector<std::complex<double>> values)
    : values_(std::move(values)) {
    if (values_.empty())
        throw std::invalid_argument("SampledSequence: needs at least one sample");
    for (const std::complex<double>& v : values_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("SampledSequence: non-finite sample");
}

std::complex<double> SampledSequence::value(std::uint64_t n) const {
    if (n < 1 || n > values_.size())
        throw std::out_of_range("SampledSequence: index " + std::to_string(n) +
                                " outside [1, " + std::to_string(values_.size()) + "]");
    return values_[static_cast<std::size_t>(n - 1)];
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(num < 0 ? -num : num), static_cast<std::uint64_t>(den)));
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

std::complex<double> discrete_mean(const SampledSequence& samples) {
    const std::uint64_t n = samples.size();
    const std::vector<std::complex<double>>& v = samples.values();
    const std::complex<double> total = chunked_sum<std::complex<double>>(
        n, [&](std::uint64_t i) { return v[static_cast<std::size_t>(i)]; });
    return total / static_cast<double>(n);
}

std::complex<double> continuous_mean(const std::function<std::complex<double>(double)>& f,
                                     double T, double step) {
    if (!(T > 0) || !(step > 0) || step > T)
        throw std::invalid_argument("continuous_mean: need 0 < step <= T");
    const std::uint64_t intervals =
        std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::llround(2.0 * T / step)));
    const double h = 2.0 * T / static_cast<double>(intervals);
    std::atomic<bool> nonfinite{false};
    const std::complex<double> total = chunked_sum<std::complex<double>>(
        intervals + 1, [&](std::uint64_t i) {
            const double x = -T + h * static_cast<double>(i);
            std::complex<double> v = f(x);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                nonfinite.store(true, std::memory_order_relaxed);
                return std::complex<double>{};
            }
            if (i == 0 || i == intervals) v *= 0.5;  // trapezoid endpoints
            return v;
        });
    if (nonfinite.load(std::memory_order_relaxed))
        throw std::runtime_error("continuous_mean: integrand returned a non-finite value");
    // (1/2T) * h * sum == sum / intervals
    return total / static_cast<double>(intervals);
}

std::complex<double> fourier_constant(const SampledSequence& samples, ReducedRational lambda) {
    const std::uint64_t q = lambda.q;
    // e^{-2 pi i lambda n} is periodic in n mod q; tabulate one period.
    std::vector<std::complex<double>> twiddle(static_cast<std::size_t>(q));
    for (std::uint64_t r = 0; r < q; ++r) {
        const double phase = -two_pi * static_cast<double>(lambda.j * r % q) / static_cast<double>(q);
        twiddle[static_cast<std::size_t>(r)] = {std::cos(phase), std::sin(phase)};
    }
    const std::vector<std::complex<double>>& v = samples.values();
    const std::uint64_t n = samples.size();
    const std::complex<double> total =
        chunked_sum<std::complex<double>>(n, [&](std::uint64_t i) {
            return v[static_cast<std::size_t>(i)] * twiddle[static_cast<std::size_t>((i + 1) % q)];
        });
    return total / static_cast<double>(n);
}

std::complex<double> extract_rf_coefficient(const SampledSequence& samples, std::uint32_t q,
                                            const SieveTable& table) {
    if (q < 1) throw std::invalid_argument("extract_rf_coefficient: q must be >= 1");
    std::vector<double> cq(static_cast<std::size_t>(q));
    for (std::uint64_t r = 0; r < q; ++r)
        cq[static_cast<std::size_t>(r)] =
            static_cast<double>(ramanujan_sum(q, static_cast<std::int64_t>(r), table));
    const std::vector<std::complex<double>>& v = samples.values();
    const std::uint64_t n = samples.size();
    const std::complex<double> total =
        chunked_sum<std::complex<double>>(n, [&](std::uint64_t i) {
            return v[static_cast<std::size_t>(i)] * cq[static_cast<std::size_t>((i + 1) % q)];
        });
    return total / (static_cast<double>(n) * static_cast<double>(table.totient(q)));
}

std::vector<PrimePowerResidue> crt_residues(std::uint32_t j, std::uint32_t q) {
    if (j < 1 || q < 1 || j > q || std::gcd(j, q) != 1)
        throw std::invalid_argument("crt_residues: " + std::to_string(j) + "/" +
                                    std::to_string(q) + " is not reduced in (0,1]");
    std::vector<PrimePowerResidue> out;
    for (const auto& [p, pe] : prime_power_factors(q)) {
        (void)p;
        const std::int64_t P = static_cast<std::int64_t>(pe);
        const std::int64_t cofactor = static_cast<std::int64_t>(q / pe);
        std::int64_t c = (static_cast<std::int64_t>(j % pe) *
                          mod_inverse(cofactor % P, P)) % P;
        if (2 * c > P) c -= P;  // symmetric residue in (-P/2, P/2]
        out.push_back({pe, c});
    }
    return out;
}

Rational bochner_fejer_weight(std::uint32_t j, std::uint32_t q, std::uint32_t m) {
    if (q > m)
        throw std::invalid_argument("bochner_fejer_weight: q " + std::to_string(q) +
                                    " exceeds stage m " + std::to_string(m));
    unsigned __int128 num = 1, den = 1;
    for (const PrimePowerResidue& r : crt_residues(j, q)) {
        const std::uint64_t d = static_cast<std::uint64_t>(m) * r.prime_power;
        const std::uint64_t n =
            d - static_cast<std::uint64_t>(r.residue < 0 ? -r.residue : r.residue);
        const std::uint64_t g = std::gcd(n, d);
        num *= n / g;
        den *= d / g;
    }
    if (num > static_cast<unsigned __int128>(INT64_MAX) ||
        den > static_cast<unsigned __int128>(INT64_MAX))
        throw std::overflow_error("bochner_fejer_weight: rational overflow");
    return make_rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

BochnerFejerWeights bochner_fejer_weights(std::uint32_t m) {
    if (m < 1) throw std::invalid_argument("bochner_fejer_weights: m must be >= 1");
    BochnerFejerWeights w;
    w.stage = m;
    for (const ReducedRational& e : enumerate_exponents(m))
        w.weights.emplace(e, bochner_fejer_weight(e.j, e.q, m));
    return w;
}

std::complex<double> evaluate_rf_series(const RFSeries& series, double x, SummationMode mode,
                                        std::uint32_t m) {
    std::complex<double> acc{};
    if (mode == SummationMode::truncated) {
        for (const auto& [q, a] : series.coefficients()) acc += a * ramanujan_sum_real(q, x);
        return acc;
    }
    if (m < series.q_max())
        throw std::invalid_argument("evaluate_rf_series: bochner_fejer stage m " +
                                    std::to_string(m) + " below q_max " +
                                    std::to_string(series.q_max()));
    for (const auto& [q, a] : series.coefficients()) {
        for (std::uint32_t j = 1; j <= q; ++j) {
            if (std::gcd(j, q) != 1) continue;
            const double p = bochner_fejer_weight(j, q, m).to_double();
            acc += p * a * cis_rational_multiple(j, q, x);
        }
    }
    return acc;
}

}  // namespace rf
