#include "rf/correlation.hpp"

#include <cmath>
#include <stdexcept>

#include "rf/format.hpp"

namespace rf {

struct EvaluableFunction::Impl {
    // RF-backed: coefficients plus one period of exact c_q values per
    // stored modulus, so integer evaluation is a table walk.
    std::optional<RFSeries> series;
    std::vector<std::uint32_t> moduli;
    std::vector<std::complex<double>> coeffs;
    std::vector<std::vector<double>> residue_rows;

    std::optional<SampledSequence> samples;
};

EvaluableFunction EvaluableFunction::from_series(RFSeries series) {
    auto impl = std::make_shared<Impl>();
    if (!series.coefficients().empty()) {
        const SieveTable table = build_sieve(series.q_max());
        for (const auto& [q, a] : series.coefficients()) {
            impl->moduli.push_back(q);
            impl->coeffs.push_back(a);
            std::vector<double> row(q);
            for (std::uint32_t r = 0; r < q; ++r)
                row[r] = static_cast<double>(ramanujan_sum(q, r, table));
            impl->residue_rows.push_back(std::move(row));
        }
    }
    impl->series = std::move(series);
    return EvaluableFunction(std::move(impl));
}

EvaluableFunction EvaluableFunction::from_samples(SampledSequence samples) {
    auto impl = std::make_shared<Impl>();
    impl->samples = std::move(samples);
    return EvaluableFunction(std::move(impl));
}

bool EvaluableFunction::real_line() const noexcept { return impl_->series.has_value(); }

const RFSeries* EvaluableFunction::series() const noexcept {
    return impl_->series ? &*impl_->series : nullptr;
}

std::complex<double> EvaluableFunction::at_integer(std::int64_t n) const {
    const Impl& im = *impl_;
    if (im.samples) {
        if (n < 1 || static_cast<std::uint64_t>(n) > im.samples->size())
            throw std::domain_error("sample-backed function evaluated at " + std::to_string(n) +
                                    ", valid range is 1.." + std::to_string(im.samples->size()));
        return im.samples->values()[static_cast<std::size_t>(n - 1)];
    }
    std::complex<double> acc{};
    for (std::size_t i = 0; i < im.moduli.size(); ++i) {
        const std::int64_t q = im.moduli[i];
        std::int64_t r = n % q;
        if (r < 0) r += q;
        acc += im.coeffs[i] * im.residue_rows[i][static_cast<std::size_t>(r)];
    }
    return acc;
}

std::complex<double> EvaluableFunction::at_real(double x) const {
    const Impl& im = *impl_;
    if (im.samples)
        throw std::domain_error("sample-backed function is defined on integers only");
    return evaluate_rf_series(*im.series, x, SummationMode::truncated);
}

namespace {

// Sample-backed operands must cover the requested index window before the
// (possibly parallel) summation starts.
void require_integer_range(const EvaluableFunction& f, std::int64_t lo, std::int64_t hi,
                           const char* role) {
    if (f.real_line()) return;
    f.at_integer(lo);  // throws std::domain_error with the offending index
    f.at_integer(hi);
    (void)role;
}

}  // namespace

std::complex<double> empirical_cross_correlation(const EvaluableFunction& a,
                                                 const EvaluableFunction& b, std::int64_t m,
                                                 std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("empirical_cross_correlation: N must be >= 1");
    require_integer_range(a, 1 + m, static_cast<std::int64_t>(N) + m, "a");
    require_integer_range(b, 1, static_cast<std::int64_t>(N), "b");
    const std::complex<double> total =
        chunked_sum<std::complex<double>>(N, [&](std::uint64_t i) {
            const std::int64_t n = static_cast<std::int64_t>(i) + 1;
            return a.at_integer(n + m) * std::conj(b.at_integer(n));
        });
    return total / static_cast<double>(N);
}

std::complex<double> empirical_convolution(const EvaluableFunction& a, const EvaluableFunction& b,
                                           std::int64_t m, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("empirical_convolution: N must be >= 1");
    require_integer_range(a, 1, static_cast<std::int64_t>(N), "a");
    require_integer_range(b, m - static_cast<std::int64_t>(N), m - 1, "b");
    const std::complex<double> total =
        chunked_sum<std::complex<double>>(N, [&](std::uint64_t i) {
            const std::int64_t n = static_cast<std::int64_t>(i) + 1;
            return a.at_integer(n) * b.at_integer(m - n);
        });
    return total / static_cast<double>(N);
}

std::complex<double> continuous_cross_correlation(const EvaluableFunction& a,
                                                  const EvaluableFunction& b, double x, double T,
                                                  double step) {
    if (!a.real_line() || !b.real_line())
        throw std::domain_error("continuous_cross_correlation: both operands must be real-line evaluable");
    return continuous_mean(
        [&](double t) { return a.at_real(t + x) * std::conj(b.at_real(t)); }, T, step);
}

std::complex<double> continuous_convolution(const EvaluableFunction& a, const EvaluableFunction& b,
                                            double t, double T, double step) {
    if (!a.real_line() || !b.real_line())
        throw std::domain_error("continuous_convolution: both operands must be real-line evaluable");
    return continuous_mean(
        [&](double tau) { return a.at_real(tau) * b.at_real(t - tau); }, T, step);
}

RFSeries predicted_spectrum_product(const RFSeries& a, const RFSeries& b, bool conjugate_b) {
    RFSeries product(std::min(a.q_max(), b.q_max()));
    for (const auto& [q, aq] : a.coefficients()) {
        const std::complex<double> bq = b.coefficient(q);
        if (bq == std::complex<double>{}) continue;
        product.set(q, aq * (conjugate_b ? std::conj(bq) : bq));
    }
    return product;
}

std::complex<double> predicted_value_at(const RFSeries& product, std::int64_t lag) {
    if (product.coefficients().empty()) return {};
    const SieveTable table = build_sieve(product.q_max());
    std::complex<double> acc{};
    for (const auto& [q, c] : product.coefficients())
        acc += c * static_cast<double>(ramanujan_sum(q, lag, table));
    return acc;
}

std::complex<double> predicted_value_at(const RFSeries& product, double offset) {
    std::complex<double> acc{};
    for (const auto& [q, c] : product.coefficients()) acc += c * ramanujan_sum_real(q, offset);
    return acc;
}

std::vector<CorrelationReport> wk_verify(const RFSeries& a, const std::optional<RFSeries>& b,
                                         std::span<const std::int64_t> lags, std::uint64_t N) {
    if (N < 1) throw std::invalid_argument("wk_verify: N must be >= 1");
    const RFSeries& bs = b ? *b : a;
    const EvaluableFunction fa = EvaluableFunction::from_series(a);
    const EvaluableFunction fb = b ? EvaluableFunction::from_series(bs) : fa;
    const RFSeries product = predicted_spectrum_product(a, bs, /*conjugate_b=*/true);

    std::vector<CorrelationReport> reports(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) {
        const std::int64_t m = lags[i];
        CorrelationReport& r = reports[i];
        r.lag = static_cast<double>(m);
        r.empirical = empirical_cross_correlation(fa, fb, m, N);
        r.predicted = predicted_value_at(product, m);
        r.abs_error = std::abs(r.empirical - r.predicted);
        r.scale = static_cast<double>(N);
        r.q_truncation = product.q_max();
    }
    return reports;
}

std::vector<CorrelationReport> convergence_sweep(const RFSeries& a, const RFSeries& b,
                                                 std::int64_t m,
                                                 std::span<const std::uint64_t> N_list) {
    if (N_list.empty()) throw std::invalid_argument("convergence_sweep: empty N list");
    const EvaluableFunction fa = EvaluableFunction::from_series(a);
    const EvaluableFunction fb = EvaluableFunction::from_series(b);
    const RFSeries product = predicted_spectrum_product(a, b, /*conjugate_b=*/true);
    const std::complex<double> predicted = predicted_value_at(product, m);

    std::vector<CorrelationReport> reports(N_list.size());
    for (std::size_t i = 0; i < N_list.size(); ++i) {
        CorrelationReport& r = reports[i];
        r.lag = static_cast<double>(m);
        r.empirical = empirical_cross_correlation(fa, fb, m, N_list[i]);
        r.predicted = predicted;
        r.abs_error = std::abs(r.empirical - r.predicted);
        r.scale = static_cast<double>(N_list[i]);
        r.q_truncation = product.q_max();
    }
    return reports;
}

namespace {

void append_report_fields(std::string& out, const CorrelationReport& r, char sep) {
    out += num17(r.lag);
    out += sep;
    out += num17(r.empirical.real());
    out += sep;
    out += num17(r.empirical.imag());
    out += sep;
    out += num17(r.predicted.real());
    out += sep;
    out += num17(r.predicted.imag());
    out += sep;
    out += num17(r.abs_error);
    out += sep;
    out += num17(r.scale);
    out += sep;
    out += std::to_string(r.q_truncation);
}

}  // namespace

std::string reports_to_csv(std::span<const CorrelationReport> reports,
                           std::string_view experiment_tag) {
    std::string out;
    if (!experiment_tag.empty()) out += "experiment,";
    out += "m,empirical_re,empirical_im,predicted_re,predicted_im,abs_err,N,Q\n";
    for (const CorrelationReport& r : reports) {
        if (!experiment_tag.empty()) {
            out += experiment_tag;
            out += ',';
        }
        append_report_fields(out, r, ',');
        out += '\n';
    }
    return out;
}

std::string reports_to_json(std::span<const CorrelationReport> reports,
                            std::string_view experiment_tag) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CorrelationReport& r = reports[i];
        out += "{";
        if (!experiment_tag.empty()) {
            out += "\"experiment\":\"";
            out += experiment_tag;
            out += "\",";
        }
        out += "\"m\":" + num17(r.lag);
        out += ",\"empirical_re\":" + num17(r.empirical.real());
        out += ",\"empirical_im\":" + num17(r.empirical.imag());
        out += ",\"predicted_re\":" + num17(r.predicted.real());
        out += ",\"predicted_im\":" + num17(r.predicted.imag());
        out += ",\"abs_err\":" + num17(r.abs_error);
        out += ",\"N\":" + num17(r.scale);
        out += ",\"Q\":" + std::to_string(r.q_truncation);
        out += i + 1 < reports.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

}  // namespace rf
