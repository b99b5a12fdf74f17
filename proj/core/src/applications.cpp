#include "rf/applications.hpp"

#include <cmath>
#include <stdexcept>

namespace rf {

double weighted_mangoldt(std::uint64_t n, const SieveTable& table) {
    const double lam = table.mangoldt(n);
    if (lam == 0.0) return 0.0;
    return static_cast<double>(table.totient(n)) / static_cast<double>(n) * lam;
}

RFSeries weighted_mangoldt_rf(std::uint32_t Q, const SieveTable& table) {
    if (Q < 1) throw std::invalid_argument("weighted_mangoldt_rf: Q must be >= 1");
    if (Q > table.n_max())
        throw std::out_of_range("weighted_mangoldt_rf: Q exceeds sieve bound");
    RFSeries series(Q);
    for (std::uint32_t q = 1; q <= Q; ++q) {
        const int mu = table.mobius(q);
        if (mu == 0) continue;
        series.set(q, std::complex<double>(
                          static_cast<double>(mu) / static_cast<double>(table.totient(q)), 0.0));
    }
    return series;
}

double singular_series(std::int64_t h, std::uint32_t Q, const SieveTable& table) {
    if (h == 0) throw std::invalid_argument("singular_series: h must be nonzero");
    if (Q < 1) throw std::invalid_argument("singular_series: Q must be >= 1");
    if (Q > table.n_max())
        throw std::out_of_range("singular_series: Q exceeds sieve bound");
    return chunked_sum<double>(Q, [&](std::uint64_t i) {
        const std::uint32_t q = static_cast<std::uint32_t>(i) + 1;
        const int mu = table.mobius(q);
        if (mu == 0) return 0.0;
        const double w = 1.0 / static_cast<double>(table.totient(q));
        return w * w * static_cast<double>(ramanujan_sum(q, h, table));
    });
}

CorrelationReport twin_experiment(std::uint64_t h, std::uint64_t N, std::uint32_t Q,
                                  const SieveTable& table) {
    if (h == 0 || h % 2 != 0) throw std::invalid_argument("twin_experiment: h must be a positive even gap");
    if (N < 1) throw std::invalid_argument("twin_experiment: N must be >= 1");
    if (N + h > table.n_max())
        throw std::out_of_range("twin_experiment: N + h exceeds sieve bound " +
                                std::to_string(table.n_max()));
    const double total = chunked_sum<double>(N, [&](std::uint64_t i) {
        const std::uint64_t n = i + 1;
        const double wn = weighted_mangoldt(n, table);
        if (wn == 0.0) return 0.0;
        return weighted_mangoldt(n + h, table) * wn;
    });
    CorrelationReport r;
    r.lag = static_cast<double>(h);
    r.empirical = total / static_cast<double>(N);
    r.predicted = singular_series(static_cast<std::int64_t>(h), Q, table);
    r.abs_error = std::abs(r.empirical - r.predicted);
    r.scale = static_cast<double>(N);
    r.q_truncation = Q;
    return r;
}

double sophie_experiment(std::uint64_t N, const SieveTable& table) {
    if (N < 1) throw std::invalid_argument("sophie_experiment: N must be >= 1");
    if (2 * N + 1 > table.n_max())
        throw std::out_of_range("sophie_experiment: 2N + 1 exceeds sieve bound " +
                                std::to_string(table.n_max()));
    const double total = chunked_sum<double>(N, [&](std::uint64_t i) {
        const std::uint64_t n = i + 1;
        const double wn = weighted_mangoldt(n, table);
        if (wn == 0.0) return 0.0;
        return wn * weighted_mangoldt(2 * n + 1, table);
    });
    return total / static_cast<double>(N);
}

BuiltinFunction make_builtin(const std::string& spec, const SieveTable& table) {
    if (spec == "weighted_mangoldt" || spec == "wm") {
        return BuiltinFunction{
            "weighted_mangoldt",
            [&table](std::uint64_t n) {
                return std::complex<double>(weighted_mangoldt(n, table), 0.0);
            },
            [&table](std::uint32_t Q) { return weighted_mangoldt_rf(Q, table); }};
    }
    if (spec.rfind("cq:", 0) == 0) {
        const unsigned long q = std::stoul(spec.substr(3));
        if (q < 1) throw std::invalid_argument("make_builtin: cq modulus must be >= 1");
        if (q > table.n_max())
            throw std::out_of_range("make_builtin: cq modulus exceeds sieve bound");
        const std::uint32_t qq = static_cast<std::uint32_t>(q);
        return BuiltinFunction{
            "cq:" + std::to_string(qq),
            [&table, qq](std::uint64_t n) {
                return std::complex<double>(
                    static_cast<double>(ramanujan_sum(qq, static_cast<std::int64_t>(n), table)),
                    0.0);
            },
            [qq](std::uint32_t Q) {
                RFSeries s(std::max(Q, qq));
                s.set(qq, 1.0);
                return s;
            }};
    }
    if (spec.rfind("constant:", 0) == 0) {
        const double c = std::stod(spec.substr(9));
        return BuiltinFunction{"constant:" + std::to_string(c),
                               [c](std::uint64_t) { return std::complex<double>(c, 0.0); },
                               [c](std::uint32_t Q) {
                                   RFSeries s(std::max<std::uint32_t>(Q, 1));
                                   s.set(1, c);
                                   return s;
                               }};
    }
    throw std::invalid_argument("make_builtin: unknown function spec \"" + spec +
                                "\" (expected weighted_mangoldt, cq:<q>, or constant:<c>)");
}

}  // namespace rf
