// rf: command-line front end for Ramanujan sum / Ramanujan-Fourier series
// computations. Every subcommand writes deterministic text (CSV or JSON) to
// stdout or --out; identical argv yields byte-identical output regardless
// of the thread cap.

#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rf/applications.hpp"
#include "rf/apf.hpp"
#include "rf/correlation.hpp"
#include "rf/format.hpp"
#include "rf/ramanujan.hpp"
#include "rf/sieve.hpp"
#include "rf/summation.hpp"

namespace {

struct CommonOpts {
    std::string out;
    std::string format = "csv";
    unsigned threads = 0;
};

void attach_common(CLI::App* sub, CommonOpts& common) {
    sub->add_option("--out", common.out, "Write output to this path instead of stdout");
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", common.threads,
                    "Worker cap for parallel reductions (overrides RF_THREADS)");
}

void emit(const CommonOpts& common, const std::string& text) {
    if (common.out.empty()) {
        std::fwrite(text.data(), 1, text.size(), stdout);
        return;
    }
    std::ofstream f(common.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + common.out + " for writing");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!f) throw std::runtime_error("write to " + common.out + " failed");
}

// Flat table with per-column string/number tagging so the JSON mirror can
// keep numbers unquoted.
struct Table {
    std::vector<std::string> columns;
    std::vector<bool> is_string;
    std::vector<std::vector<std::string>> rows;
};

std::string table_to_csv(const Table& t) {
    std::string out;
    for (std::size_t c = 0; c < t.columns.size(); ++c) {
        if (c) out += ',';
        out += t.columns[c];
    }
    out += '\n';
    for (const auto& row : t.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out += ',';
            out += row[c];
        }
        out += '\n';
    }
    return out;
}

std::string table_to_json(const Table& t) {
    std::string out = "[\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        out += "{";
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            if (c) out += ",";
            out += "\"" + t.columns[c] + "\":";
            if (t.is_string[c])
                out += "\"" + t.rows[r][c] + "\"";
            else
                out += t.rows[r][c];
        }
        out += r + 1 < t.rows.size() ? "},\n" : "}\n";
    }
    out += "]\n";
    return out;
}

std::string render_table(const Table& t, const CommonOpts& common) {
    return common.format == "json" ? table_to_json(t) : table_to_csv(t);
}

std::string render_reports(std::span<const rf::CorrelationReport> reports,
                           const CommonOpts& common, std::string_view tag = {}) {
    return common.format == "json" ? rf::reports_to_json(reports, tag)
                                   : rf::reports_to_csv(reports, tag);
}

// "a..b" inclusive, or comma-separated mix of single values and ranges.
std::vector<std::int64_t> parse_lag_list(const std::string& text) {
    std::vector<std::int64_t> lags;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        if (token.empty()) continue;
        const std::size_t dots = token.find("..");
        if (dots == std::string::npos) {
            lags.push_back(std::stoll(token));
            continue;
        }
        const std::int64_t a = std::stoll(token.substr(0, dots));
        const std::int64_t b = std::stoll(token.substr(dots + 2));
        if (b < a) throw std::invalid_argument("descending lag range " + token);
        for (std::int64_t m = a; m <= b; ++m) lags.push_back(m);
    }
    if (lags.empty()) throw std::invalid_argument("empty lag list");
    return lags;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(std::stoull(token));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        if (!token.empty()) out.push_back(std::stod(token));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

// Sample files: one complex per line as "re im", index implicit from 1.
std::vector<std::complex<double>> read_samples(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    std::vector<std::complex<double>> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        double re = 0, im = 0;
        if (!(row >> re >> im))
            throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                     ": expected \"re im\"");
        values.emplace_back(re, im);
    }
    if (values.empty()) throw std::runtime_error(path + ": no samples");
    return values;
}

rf::RFSeries load_series(const std::string& path) {
    return rf::rf_series_from_csv(read_file(path));
}

// Operand specs for the correlation commands:
//   cq:<q>        RF series {a_q = 1}
//   constant:<c>  RF series {a_1 = c}
//   series:<path> RF series from CSV
//   samples:<path> sample-backed (integer domain)
//   wm            weighted von Mangoldt samples over 1..limit
struct Operand {
    rf::EvaluableFunction fn;
    std::optional<rf::RFSeries> series;  // set when RF-backed
};

Operand make_operand(const std::string& spec, std::uint64_t sample_limit) {
    if (spec.rfind("cq:", 0) == 0) {
        const unsigned long q = std::stoul(spec.substr(3));
        if (q < 1) throw std::invalid_argument("cq modulus must be >= 1");
        rf::RFSeries s(static_cast<std::uint32_t>(q));
        s.set(static_cast<std::uint32_t>(q), 1.0);
        return {rf::EvaluableFunction::from_series(s), s};
    }
    if (spec.rfind("constant:", 0) == 0) {
        rf::RFSeries s(1);
        s.set(1, std::stod(spec.substr(9)));
        return {rf::EvaluableFunction::from_series(s), s};
    }
    if (spec.rfind("series:", 0) == 0) {
        rf::RFSeries s = load_series(spec.substr(7));
        return {rf::EvaluableFunction::from_series(s), s};
    }
    if (spec.rfind("samples:", 0) == 0) {
        return {rf::EvaluableFunction::from_samples(
                    rf::SampledSequence(read_samples(spec.substr(8)))),
                std::nullopt};
    }
    if (spec == "wm" || spec == "weighted_mangoldt") {
        if (sample_limit == 0)
            throw std::invalid_argument("wm operand needs a sample range (--N)");
        const rf::SieveTable table = rf::build_sieve(sample_limit);
        std::vector<std::complex<double>> values(sample_limit);
        for (std::uint64_t n = 1; n <= sample_limit; ++n)
            values[n - 1] = rf::weighted_mangoldt(n, table);
        return {rf::EvaluableFunction::from_samples(rf::SampledSequence(std::move(values))),
                std::nullopt};
    }
    throw std::invalid_argument("unknown operand spec \"" + spec +
                                "\" (expected cq:, constant:, series:, samples:, or wm)");
}

// Every subcommand's options live in one config; only the selected
// subcommand reads them.
struct Config {
    CommonOpts common;

    // sieve
    std::uint64_t n_max = 0;
    std::uint64_t ceiling = rf::SieveTable::default_memory_ceiling;
    std::string dump_path, load_path, kind = "mobius";
    std::uint64_t query_n = 0;

    // rsum
    std::uint64_t q = 1;
    std::int64_t n = 0;
    bool definitional = false;
    std::optional<double> x;

    // exponents / spectrum / eval
    std::uint64_t Q = 1;
    std::string func, samples_path, series_path;
    std::uint64_t N = 0;
    bool expand = false;
    std::string points, integers;
    std::string mode = "truncated";
    std::uint64_t stage_m = 0;

    // correlate / ccorrelate / wk-verify / sweep
    std::string a_spec, b_spec, kind_corr = "xcorr";
    std::string lags, n_list;
    double T = 1.0, step = 1e-3;
    std::string offsets = "0";
    std::int64_t lag_m = 0;

    // twin / sophie / singular
    std::uint64_t h = 2;
    std::string h_list = "2";
};

void run_sieve(const Config& cfg) {
    rf::SieveTable table = cfg.load_path.empty()
                               ? rf::build_sieve(cfg.n_max, cfg.ceiling)
                               : rf::load_sieve(cfg.load_path);
    if (!cfg.dump_path.empty()) rf::dump_sieve(table, cfg.dump_path);
    if (cfg.query_n != 0) {
        std::string value;
        if (cfg.kind == "mobius")
            value = std::to_string(table.mobius(cfg.query_n));
        else if (cfg.kind == "totient")
            value = std::to_string(table.totient(cfg.query_n));
        else
            value = rf::num17(table.mangoldt(cfg.query_n));
        emit(cfg.common, value + "\n");
    }
}

void run_rsum(const Config& cfg) {
    const std::uint32_t q = static_cast<std::uint32_t>(cfg.q);
    if (cfg.x) {
        const std::complex<double> v = rf::ramanujan_sum_real(q, *cfg.x);
        emit(cfg.common, rf::num17(v.real()) + " " + rf::num17(v.imag()) + "\n");
        return;
    }
    if (cfg.definitional) {
        emit(cfg.common, rf::num17(rf::ramanujan_sum_definitional(q, cfg.n)) + "\n");
        return;
    }
    const rf::SieveTable table = rf::build_sieve(cfg.q);
    emit(cfg.common, std::to_string(rf::ramanujan_sum(q, cfg.n, table)) + "\n");
}

void run_exponents(const Config& cfg) {
    std::string out;
    for (const rf::ReducedRational& e :
         rf::enumerate_exponents(static_cast<std::uint32_t>(cfg.Q))) {
        if (!out.empty()) out += ' ';
        out += rf::to_string(e);
    }
    emit(cfg.common, out + "\n");
}

void run_spectrum(const Config& cfg) {
    const std::uint32_t Q = static_cast<std::uint32_t>(cfg.Q);
    std::vector<std::complex<double>> values;
    std::uint64_t table_bound = Q;
    if (!cfg.samples_path.empty()) {
        values = read_samples(cfg.samples_path);
    } else if (!cfg.func.empty()) {
        if (cfg.N == 0) throw std::invalid_argument("spectrum: --func needs --N samples");
        table_bound = std::max<std::uint64_t>(table_bound, cfg.N);
        const rf::SieveTable table = rf::build_sieve(table_bound);
        const rf::BuiltinFunction f = rf::make_builtin(cfg.func, table);
        values.resize(cfg.N);
        for (std::uint64_t n = 1; n <= cfg.N; ++n) values[n - 1] = f.eval(n);
    } else {
        throw std::invalid_argument("spectrum: need --func or --samples");
    }
    const rf::SieveTable table = rf::build_sieve(table_bound);
    const rf::SampledSequence samples(std::move(values));
    rf::RFSeries extracted(Q);
    for (std::uint32_t qq = 1; qq <= Q; ++qq)
        extracted.set(qq, rf::extract_rf_coefficient(samples, qq, table));
    emit(cfg.common,
         cfg.expand ? rf::spectrum_to_csv(rf::expand_rf_to_spectrum(extracted))
                    : rf::rf_series_to_csv(extracted));
}

void run_eval(const Config& cfg) {
    const rf::RFSeries series = load_series(cfg.series_path);
    const rf::SummationMode mode = cfg.mode == "bochner_fejer"
                                       ? rf::SummationMode::bochner_fejer
                                       : rf::SummationMode::truncated;
    std::uint32_t m = static_cast<std::uint32_t>(cfg.stage_m);
    if (mode == rf::SummationMode::bochner_fejer && m == 0) m = series.q_max();

    std::vector<double> xs;
    if (!cfg.integers.empty())
        for (std::int64_t i : parse_lag_list(cfg.integers)) xs.push_back(static_cast<double>(i));
    if (!cfg.points.empty())
        for (double p : parse_double_list(cfg.points)) xs.push_back(p);
    if (xs.empty()) throw std::invalid_argument("eval: need --points or --integers");

    Table t;
    t.columns = {"x", "re", "im"};
    t.is_string = {false, false, false};
    for (double xv : xs) {
        const std::complex<double> v = rf::evaluate_rf_series(series, xv, mode, m);
        t.rows.push_back({rf::num17(xv), rf::num17(v.real()), rf::num17(v.imag())});
    }
    emit(cfg.common, render_table(t, cfg.common));
}

void run_correlate(const Config& cfg) {
    const std::vector<std::int64_t> lags = parse_lag_list(cfg.lags);
    if (cfg.N == 0) throw std::invalid_argument("correlate: need --N >= 1");
    std::int64_t max_lag = 0;
    for (std::int64_t m : lags) max_lag = std::max(max_lag, m);
    const std::uint64_t limit =
        cfg.N + static_cast<std::uint64_t>(std::max<std::int64_t>(0, max_lag));
    const Operand a = make_operand(cfg.a_spec, limit);
    const Operand b = make_operand(cfg.b_spec, limit);
    const bool conv = cfg.kind_corr == "conv";

    std::optional<rf::RFSeries> product;
    if (a.series && b.series)
        product = rf::predicted_spectrum_product(*a.series, *b.series, !conv);

    std::vector<rf::CorrelationReport> reports(lags.size());
    for (std::size_t i = 0; i < lags.size(); ++i) {
        rf::CorrelationReport& r = reports[i];
        r.lag = static_cast<double>(lags[i]);
        r.empirical = conv ? rf::empirical_convolution(a.fn, b.fn, lags[i], cfg.N)
                           : rf::empirical_cross_correlation(a.fn, b.fn, lags[i], cfg.N);
        r.predicted = product ? rf::predicted_value_at(*product, lags[i])
                              : std::complex<double>{};
        r.abs_error = std::abs(r.empirical - r.predicted);
        r.scale = static_cast<double>(cfg.N);
        r.q_truncation = product ? product->q_max() : 0;
    }
    emit(cfg.common, render_reports(reports, cfg.common));
}

void run_ccorrelate(const Config& cfg) {
    const Operand a = make_operand(cfg.a_spec, 0);
    const Operand b = make_operand(cfg.b_spec, 0);
    const bool conv = cfg.kind_corr == "conv";

    std::optional<rf::RFSeries> product;
    if (a.series && b.series)
        product = rf::predicted_spectrum_product(*a.series, *b.series, !conv);

    const std::vector<double> offsets = parse_double_list(cfg.offsets);
    std::vector<rf::CorrelationReport> reports(offsets.size());
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        rf::CorrelationReport& r = reports[i];
        r.lag = offsets[i];
        r.empirical = conv
                          ? rf::continuous_convolution(a.fn, b.fn, offsets[i], cfg.T, cfg.step)
                          : rf::continuous_cross_correlation(a.fn, b.fn, offsets[i], cfg.T,
                                                             cfg.step);
        r.predicted = product ? rf::predicted_value_at(*product, offsets[i])
                              : std::complex<double>{};
        r.abs_error = std::abs(r.empirical - r.predicted);
        r.scale = cfg.T;
        r.q_truncation = product ? product->q_max() : 0;
    }
    emit(cfg.common, render_reports(reports, cfg.common));
}

void run_wk_verify(const Config& cfg) {
    const Operand a = make_operand(cfg.a_spec, 0);
    if (!a.series) throw std::invalid_argument("wk-verify: --a must be RF-backed");
    std::optional<rf::RFSeries> b;
    if (!cfg.b_spec.empty()) {
        const Operand ob = make_operand(cfg.b_spec, 0);
        if (!ob.series) throw std::invalid_argument("wk-verify: --b must be RF-backed");
        b = ob.series;
    }
    const std::vector<std::int64_t> lags = parse_lag_list(cfg.lags);
    if (cfg.N == 0) throw std::invalid_argument("wk-verify: need --N >= 1");
    const auto reports = rf::wk_verify(*a.series, b, lags, cfg.N);
    emit(cfg.common, render_reports(reports, cfg.common));
}

void run_sweep(const Config& cfg) {
    const Operand a = make_operand(cfg.a_spec, 0);
    const Operand b = make_operand(cfg.b_spec.empty() ? cfg.a_spec : cfg.b_spec, 0);
    if (!a.series || !b.series)
        throw std::invalid_argument("sweep: operands must be RF-backed");
    const std::vector<std::uint64_t> Ns = parse_u64_list(cfg.n_list);
    const auto reports = rf::convergence_sweep(*a.series, *b.series, cfg.lag_m, Ns);
    emit(cfg.common, render_reports(reports, cfg.common));
}

void run_twin(const Config& cfg) {
    const std::uint64_t n_max =
        cfg.n_max != 0 ? cfg.n_max : std::max<std::uint64_t>(cfg.N + cfg.h, cfg.Q);
    const rf::SieveTable table = rf::build_sieve(n_max, cfg.ceiling);
    const rf::CorrelationReport r =
        rf::twin_experiment(cfg.h, cfg.N, static_cast<std::uint32_t>(cfg.Q), table);
    emit(cfg.common, render_reports({&r, 1}, cfg.common, "twin"));
}

void run_sophie(const Config& cfg) {
    const std::uint64_t n_max = cfg.n_max != 0 ? cfg.n_max : 2 * cfg.N + 1;
    const rf::SieveTable table = rf::build_sieve(n_max, cfg.ceiling);
    rf::CorrelationReport r;
    r.lag = 0;
    r.empirical = rf::sophie_experiment(cfg.N, table);
    r.predicted = 0;  // no spectral prediction for the affine pair
    r.abs_error = std::abs(r.empirical);
    r.scale = static_cast<double>(cfg.N);
    r.q_truncation = 0;
    emit(cfg.common, render_reports({&r, 1}, cfg.common, "sophie"));
}

void run_singular(const Config& cfg) {
    const rf::SieveTable table = rf::build_sieve(cfg.Q);
    Table t;
    t.columns = {"h", "value"};
    t.is_string = {false, false};
    for (std::int64_t hv : parse_lag_list(cfg.h_list)) {
        if (hv == 0) throw std::invalid_argument("singular: h must be nonzero");
        t.rows.push_back({std::to_string(hv),
                          rf::num17(rf::singular_series(hv, static_cast<std::uint32_t>(cfg.Q),
                                                        table))});
    }
    emit(cfg.common, render_table(t, cfg.common));
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Ramanujan sums, Ramanujan-Fourier series, and Wiener-Khinchin "
                 "correlation experiments"};
    app.require_subcommand(1);

    CLI::App* sieve = app.add_subcommand("sieve", "Build, dump, load, or query a sieve table");
    sieve->add_option("--n-max", cfg.n_max, "Sieve bound (ignored with --load)");
    sieve->add_option("--ceiling", cfg.ceiling, "Memory ceiling in entries");
    sieve->add_option("--dump", cfg.dump_path, "Write the binary RFSV1 dump here");
    sieve->add_option("--load", cfg.load_path, "Load a binary RFSV1 dump instead of sieving");
    sieve->add_option("--query", cfg.query_n, "Print one value at this index");
    sieve->add_option("--kind", cfg.kind, "Value kind for --query")
        ->check(CLI::IsMember({"mobius", "totient", "mangoldt"}));
    attach_common(sieve, cfg.common);

    CLI::App* rsum = app.add_subcommand("rsum", "Ramanujan sum c_q(n), or c_q(x) with --x");
    rsum->add_option("--q", cfg.q, "Modulus q")->required()->check(CLI::PositiveNumber);
    rsum->add_option("--n", cfg.n, "Integer argument n");
    rsum->add_flag("--definitional", cfg.definitional,
                   "Use the exponential-sum definition instead of the closed form");
    rsum->add_option("--x", cfg.x, "Evaluate on the real line at x (prints re im)");
    attach_common(rsum, cfg.common);

    CLI::App* exps = app.add_subcommand("exponents", "Reduced Fourier exponents j/q, q <= Q");
    exps->add_option("--Q", cfg.Q, "Largest denominator")->required()->check(CLI::PositiveNumber);
    attach_common(exps, cfg.common);

    CLI::App* spec = app.add_subcommand(
        "spectrum", "Extract RF coefficients of a builtin function or a sample file");
    spec->add_option("--func", cfg.func, "Builtin: weighted_mangoldt | cq:<q> | constant:<c>");
    spec->add_option("--samples", cfg.samples_path, "Sample file, one \"re im\" per line");
    spec->add_option("--Q", cfg.Q, "Extract coefficients for q = 1..Q")
        ->required()
        ->check(CLI::PositiveNumber);
    spec->add_option("--N", cfg.N, "Number of builtin samples (n = 1..N)");
    spec->add_flag("--expand", cfg.expand, "Emit the expanded spectrum (q,j,coeff) instead");
    attach_common(spec, cfg.common);

    CLI::App* eval = app.add_subcommand("eval", "Evaluate an RF series from CSV at points");
    eval->add_option("--series", cfg.series_path, "RF series CSV (q,a_re,a_im)")->required();
    eval->add_option("--points", cfg.points, "Comma-separated real points");
    eval->add_option("--integers", cfg.integers, "Integer points, e.g. 1..840");
    eval->add_option("--mode", cfg.mode, "Summation mode")
        ->check(CLI::IsMember({"truncated", "bochner_fejer"}));
    eval->add_option("--m", cfg.stage_m, "Bochner-Fejer stage (default: q_max)");
    attach_common(eval, cfg.common);

    CLI::App* corr = app.add_subcommand("correlate", "Discrete correlation/convolution sweep");
    corr->add_option("--a", cfg.a_spec, "Left operand spec")->required();
    corr->add_option("--b", cfg.b_spec, "Right operand spec")->required();
    corr->add_option("--lags", cfg.lags, "Lag list, e.g. 0..20 or -5..5,10")->required();
    corr->add_option("--N", cfg.N, "Sample count per lag")->required()->check(CLI::PositiveNumber);
    corr->add_option("--kind", cfg.kind_corr, "xcorr: a(n+m) conj(b(n));  conv: a(n) b(m-n)")
        ->check(CLI::IsMember({"xcorr", "conv"}));
    attach_common(corr, cfg.common);

    CLI::App* ccorr = app.add_subcommand("ccorrelate", "Continuous correlation/convolution");
    ccorr->add_option("--a", cfg.a_spec, "Left operand spec (RF-backed)")->required();
    ccorr->add_option("--b", cfg.b_spec, "Right operand spec (RF-backed)")->required();
    ccorr->add_option("--offsets", cfg.offsets, "Comma-separated offsets x (or times t)");
    ccorr->add_option("--T", cfg.T, "Half-width of the averaging window")->required();
    ccorr->add_option("--step", cfg.step, "Quadrature step")->required();
    ccorr->add_option("--kind", cfg.kind_corr, "xcorr or conv")
        ->check(CLI::IsMember({"xcorr", "conv"}));
    attach_common(ccorr, cfg.common);

    CLI::App* wk = app.add_subcommand(
        "wk-verify", "Wiener-Khinchin check: empirical autocorrelation vs sum |a_q|^2 c_q(m)");
    wk->add_option("--a", cfg.a_spec, "RF-backed operand spec")->required();
    wk->add_option("--b", cfg.b_spec, "Optional second operand (default: autocorrelation)");
    wk->add_option("--lags", cfg.lags, "Lag list")->required();
    wk->add_option("--N", cfg.N, "Sample count")->required()->check(CLI::PositiveNumber);
    attach_common(wk, cfg.common);

    CLI::App* sweep = app.add_subcommand("sweep", "Correlation error as N grows");
    sweep->add_option("--a", cfg.a_spec, "RF-backed operand spec")->required();
    sweep->add_option("--b", cfg.b_spec, "Second operand (default: same as --a)");
    sweep->add_option("--m", cfg.lag_m, "Lag");
    sweep->add_option("--N-list", cfg.n_list, "Ascending N values, e.g. 100,1000,10000")
        ->required();
    attach_common(sweep, cfg.common);

    CLI::App* twin = app.add_subcommand(
        "twin", "Even-gap prime correlation vs the singular-series prediction");
    twin->add_option("--h", cfg.h, "Even gap")->check(CLI::PositiveNumber);
    twin->add_option("--N", cfg.N, "Sample count")->check(CLI::PositiveNumber);
    twin->add_option("--Q", cfg.Q, "Singular-series truncation")->check(CLI::PositiveNumber);
    twin->add_option("--n-max", cfg.n_max, "Sieve bound (default: max(N + h, Q))");
    twin->add_option("--ceiling", cfg.ceiling, "Memory ceiling in entries");
    attach_common(twin, cfg.common);

    CLI::App* sophie = app.add_subcommand("sophie", "Sophie Germain affine correlation");
    sophie->add_option("--N", cfg.N, "Sample count")->check(CLI::PositiveNumber);
    sophie->add_option("--n-max", cfg.n_max, "Sieve bound (default: 2N + 1)");
    sophie->add_option("--ceiling", cfg.ceiling, "Memory ceiling in entries");
    attach_common(sophie, cfg.common);

    CLI::App* singular = app.add_subcommand("singular", "Partial singular series table");
    singular->add_option("--h", cfg.h_list, "Gap list, e.g. 1..8 or 2,4,6");
    singular->add_option("--Q", cfg.Q, "Truncation")->required()->check(CLI::PositiveNumber);
    attach_common(singular, cfg.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return 2;
    }

    if (cfg.common.threads != 0) rf::set_thread_cap(cfg.common.threads);

    try {
        if (sieve->parsed()) {
            if (cfg.load_path.empty() && cfg.n_max == 0) {
                std::cerr << "usage error: sieve needs --n-max or --load" << std::endl;
                return 2;
            }
            run_sieve(cfg);
        } else if (rsum->parsed()) {
            run_rsum(cfg);
        } else if (exps->parsed()) {
            run_exponents(cfg);
        } else if (spec->parsed()) {
            run_spectrum(cfg);
        } else if (eval->parsed()) {
            run_eval(cfg);
        } else if (corr->parsed()) {
            run_correlate(cfg);
        } else if (ccorr->parsed()) {
            run_ccorrelate(cfg);
        } else if (wk->parsed()) {
            run_wk_verify(cfg);
        } else if (sweep->parsed()) {
            run_sweep(cfg);
        } else if (twin->parsed()) {
            // desk-scale defaults, each well under a minute
            if (twin->count("--N") == 0) cfg.N = 1'000'000;
            if (twin->count("--Q") == 0) cfg.Q = 10'000;
            run_twin(cfg);
        } else if (sophie->parsed()) {
            if (sophie->count("--N") == 0) cfg.N = 1'000'000;
            run_sophie(cfg);
        } else if (singular->parsed()) {
            run_singular(cfg);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
