#pragma once

// Ramanujan sums c_q(n) over the integers (exact closed form plus the
// definitional exponential sum) and over the real line, enumeration of the
// rational Fourier exponents in (0, 1], and the expansion of a
// coefficient-per-modulus series into its flat spectrum.

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rf/sieve.hpp"

namespace rf {

// A Fourier exponent j/q in lowest terms with j/q in (0, 1]; 1 is 1/1.
struct ReducedRational {
    std::uint32_t j = 1;
    std::uint32_t q = 1;

    ReducedRational() = default;
    ReducedRational(std::uint32_t j_, std::uint32_t q_);  // throws std::invalid_argument

    double value() const noexcept { return static_cast<double>(j) / q; }

    friend bool operator==(const ReducedRational&, const ReducedRational&) = default;
    // Enumeration order: ascending q, then ascending j.
    friend std::strong_ordering operator<=>(const ReducedRational& a, const ReducedRational& b) {
        if (auto c = a.q <=> b.q; c != 0) return c;
        return a.j <=> b.j;
    }
};

std::string to_string(const ReducedRational& r);

// Coefficients a_q indexed by modulus q <= q_max; absent keys are zero.
class RFSeries {
  public:
    RFSeries() = default;
    explicit RFSeries(std::uint32_t q_max) : q_max_(q_max) {}

    std::uint32_t q_max() const noexcept { return q_max_; }

    // Raises q_max when q exceeds it; setting zero erases the key.
    void set(std::uint32_t q, std::complex<double> a);
    std::complex<double> coefficient(std::uint32_t q) const;

    const std::map<std::uint32_t, std::complex<double>>& coefficients() const noexcept {
        return coefficients_;
    }

    bool empty() const noexcept { return coefficients_.empty(); }

  private:
    std::map<std::uint32_t, std::complex<double>> coefficients_;
    std::uint32_t q_max_ = 0;
};

struct SpectrumTerm {
    ReducedRational exponent;
    std::complex<double> coefficient;
};

// Flat (exponent, coefficient) view of an RFSeries, in enumeration order.
struct Spectrum {
    std::vector<SpectrumTerm> terms;
};

// Real part of the literal exponential sum over k <= q coprime to q; the
// imaginary part must cancel to within 1e-9 and is checked, not returned.
double ramanujan_sum_definitional(std::uint32_t q, std::int64_t n);

// Exact integer c_q(n) by the Hoelder closed form
// c_q(n) = mu(q/d) * phi(q) / phi(q/d), d = gcd(n mod q, q), c_q(0) = phi(q).
// Throws std::out_of_range when q > table.n_max().
std::int64_t ramanujan_sum(std::uint32_t q, std::int64_t n, const SieveTable& table);

// c_q extended to the real line: sum of e^{2 pi i k x / q} over k coprime
// to q. Agrees with the integer value at integer x.
std::complex<double> ramanujan_sum_real(std::uint32_t q, double x);

// All reduced j/q with q <= Q, ascending q then ascending j:
// 1, 1/2, 1/3, 2/3, 1/4, 3/4, 1/5, ...
std::vector<ReducedRational> enumerate_exponents(std::uint32_t Q);

// Each modulus q contributes phi(q) terms, one per reduced j/q, all
// carrying the same coefficient a_q.
Spectrum expand_rf_to_spectrum(const RFSeries& series);

// CSV: header "q,a_re,a_im", one row per stored modulus, ascending q.
std::string rf_series_to_csv(const RFSeries& series);
RFSeries rf_series_from_csv(const std::string& text);

// CSV: header "q,j,coeff_re,coeff_im", rows in enumeration order.
std::string spectrum_to_csv(const Spectrum& spectrum);
Spectrum spectrum_from_csv(const std::string& text);

}  // namespace rf
