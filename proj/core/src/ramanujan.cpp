#include "rf/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "rf/format.hpp"

namespace rf {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// n reduced to [0, q) using evenness of c_q; c_q(-n) = c_q(n).
std::uint64_t reduce_lag(std::int64_t n, std::uint32_t q) {
    const std::uint64_t a = n >= 0 ? static_cast<std::uint64_t>(n)
                                   : static_cast<std::uint64_t>(-(n + 1)) + 1;
    return a % q;
}

void expect_header(std::istream& in, const std::string& expected, const char* what) {
    std::string line;
    if (!std::getline(in, line) || line != expected)
        throw std::runtime_error(std::string(what) + ": expected header \"" + expected + "\"");
}

}  // namespace

ReducedRational::ReducedRational(std::uint32_t j_, std::uint32_t q_) : j(j_), q(q_) {
    if (j < 1 || q < 1 || j > q || std::gcd(j, q) != 1)
        throw std::invalid_argument("ReducedRational: " + std::to_string(j_) + "/" +
                                    std::to_string(q_) + " is not reduced in (0,1]");
}

std::string to_string(const ReducedRational& r) {
    return std::to_string(r.j) + "/" + std::to_string(r.q);
}

void RFSeries::set(std::uint32_t q, std::complex<double> a) {
    if (q < 1) throw std::invalid_argument("RFSeries: modulus must be >= 1");
    if (q > q_max_) q_max_ = q;
    if (a == std::complex<double>{}) {
        coefficients_.erase(q);
    } else {
        coefficients_[q] = a;
    }
}

std::complex<double> RFSeries::coefficient(std::uint32_t q) const {
    const auto it = coefficients_.find(q);
    return it == coefficients_.end() ? std::complex<double>{} : it->second;
}

double ramanujan_sum_definitional(std::uint32_t q, std::int64_t n) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum_definitional: q must be >= 1");
    // e^{2 pi i n k / q} depends on nk mod q only; reducing in integers
    // keeps the phases exact.
    const std::uint64_t r = reduce_lag(n, q);
    double re = 0.0, im = 0.0;
    for (std::uint64_t k = 1; k <= q; ++k) {
        if (std::gcd(k, static_cast<std::uint64_t>(q)) != 1) continue;
        const double phase = two_pi * static_cast<double>(r * k % q) / q;
        re += std::cos(phase);
        im += std::sin(phase);
    }
    if (std::abs(im) > 1e-9)
        throw std::logic_error("ramanujan_sum_definitional: imaginary part " +
                               num17(im) + " did not cancel");
    return re;
}

std::int64_t ramanujan_sum(std::uint32_t q, std::int64_t n, const SieveTable& table) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (q > table.n_max())
        throw std::out_of_range("ramanujan_sum: q " + std::to_string(q) +
                                " exceeds sieve bound " + std::to_string(table.n_max()));
    const std::uint64_t d = std::gcd(reduce_lag(n, q), static_cast<std::uint64_t>(q));
    const std::uint64_t qd = q / d;
    const std::int64_t mu = table.mobius(qd);
    if (mu == 0) return 0;
    // phi(q/d) divides phi(q) whenever q/d divides q, so this is exact.
    return mu * static_cast<std::int64_t>(table.totient(q) / table.totient(qd));
}

std::complex<double> ramanujan_sum_real(std::uint32_t q, double x) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum_real: q must be >= 1");
    // Split x = xi + frac so the phase k*x/q can be reduced mod 1 without
    // losing precision at large |x|.
    const double fl = std::floor(x);
    const double frac = x - fl;
    const std::int64_t xi = static_cast<std::int64_t>(fl);
    const std::uint64_t xi_mod = reduce_lag(xi, q) % q;  // xi mod q, in [0, q)
    const std::uint64_t xr = (xi >= 0) ? xi_mod : (xi_mod == 0 ? 0 : q - xi_mod);
    std::complex<double> acc{};
    for (std::uint64_t k = 1; k <= q; ++k) {
        if (std::gcd(k, static_cast<std::uint64_t>(q)) != 1) continue;
        const double phase =
            two_pi * (static_cast<double>(k * xr % q) / q + frac * static_cast<double>(k) / q);
        acc += std::complex<double>(std::cos(phase), std::sin(phase));
    }
    return acc;
}

std::vector<ReducedRational> enumerate_exponents(std::uint32_t Q) {
    if (Q < 1) throw std::invalid_argument("enumerate_exponents: Q must be >= 1");
    std::vector<ReducedRational> out;
    for (std::uint32_t q = 1; q <= Q; ++q)
        for (std::uint32_t j = 1; j <= q; ++j)
            if (std::gcd(j, q) == 1) out.push_back(ReducedRational(j, q));
    return out;
}

Spectrum expand_rf_to_spectrum(const RFSeries& series) {
    Spectrum s;
    for (const auto& [q, a] : series.coefficients())
        for (std::uint32_t j = 1; j <= q; ++j)
            if (std::gcd(j, q) == 1) s.terms.push_back({ReducedRational(j, q), a});
    return s;
}

std::string rf_series_to_csv(const RFSeries& series) {
    std::string out = "q,a_re,a_im\n";
    for (const auto& [q, a] : series.coefficients()) {
        out += std::to_string(q);
        out += ',';
        out += num17(a.real());
        out += ',';
        out += num17(a.imag());
        out += '\n';
    }
    return out;
}

RFSeries rf_series_from_csv(const std::string& text) {
    std::istringstream in(text);
    expect_header(in, "q,a_re,a_im", "rf_series_from_csv");
    RFSeries series;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::uint64_t q = 0;
        double re = 0, im = 0;
        char c1 = 0, c2 = 0;
        if (!(row >> q >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
            throw std::runtime_error("rf_series_from_csv: bad row \"" + line + "\"");
        series.set(static_cast<std::uint32_t>(q), {re, im});
    }
    return series;
}

std::string spectrum_to_csv(const Spectrum& spectrum) {
    std::string out = "q,j,coeff_re,coeff_im\n";
    for (const SpectrumTerm& t : spectrum.terms) {
        out += std::to_string(t.exponent.q);
        out += ',';
        out += std::to_string(t.exponent.j);
        out += ',';
        out += num17(t.coefficient.real());
        out += ',';
        out += num17(t.coefficient.imag());
        out += '\n';
    }
    return out;
}

Spectrum spectrum_from_csv(const std::string& text) {
    std::istringstream in(text);
    expect_header(in, "q,j,coeff_re,coeff_im", "spectrum_from_csv");
    Spectrum s;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::uint64_t q = 0, j = 0;
        double re = 0, im = 0;
        char c1 = 0, c2 = 0, c3 = 0;
        if (!(row >> q >> c1 >> j >> c2 >> re >> c3 >> im) || c1 != ',' || c2 != ',' || c3 != ',')
            throw std::runtime_error("spectrum_from_csv: bad row \"" + line + "\"");
        s.terms.push_back({ReducedRational(static_cast<std::uint32_t>(j),
                                           static_cast<std::uint32_t>(q)),
                           {re, im}});
    }
    return s;
}

}  // namespace rf
