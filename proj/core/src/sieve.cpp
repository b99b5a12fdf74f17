#include "rf/sieve.hpp"

#include <array>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace rf {

namespace {

constexpr char magic[5] = {'R', 'F', 'S', 'V', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
    std::array<unsigned char, 8> b{};
    for (int i = 0; i < 8; ++i) b[static_cast<std::size_t>(i)] = static_cast<unsigned char>(v >> (8 * i));
    out.write(reinterpret_cast<const char*>(b.data()), 8);
}

std::uint64_t get_u64(std::istream& in) {
    std::array<unsigned char, 8> b{};
    in.read(reinterpret_cast<char*>(b.data()), 8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[static_cast<std::size_t>(i)]) << (8 * i);
    return v;
}

void put_f64(std::ostream& out, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, 8);
    put_u64(out, bits);
}

double get_f64(std::istream& in) {
    const std::uint64_t bits = get_u64(in);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
}

}  // namespace

void SieveTable::check(std::uint64_t n) const {
    if (n < 1 || n > n_max_)
        throw std::out_of_range("sieve index " + std::to_string(n) + " outside [1, " +
                                std::to_string(n_max_) + "]");
}

double SieveTable::query(std::uint64_t n, SieveKind kind) const {
    switch (kind) {
        case SieveKind::mobius: return mobius(n);
        case SieveKind::totient: return static_cast<double>(totient(n));
        case SieveKind::mangoldt: return mangoldt(n);
    }
    throw std::invalid_argument("unknown sieve kind");
}

SieveTable build_sieve(std::uint64_t n_max, std::uint64_t memory_ceiling) {
    if (n_max == 0) throw std::invalid_argument("build_sieve: n_max must be >= 1");
    if (n_max > memory_ceiling)
        throw std::length_error("build_sieve: n_max " + std::to_string(n_max) +
                                " exceeds memory ceiling " + std::to_string(memory_ceiling));

    SieveTable t;
    t.n_max_ = n_max;
    const std::size_t size = static_cast<std::size_t>(n_max) + 1;
    t.mobius_.assign(size, 0);
    t.totient_.assign(size, 0);
    t.mangoldt_.assign(size, 0.0);

    t.mobius_[1] = 1;
    t.totient_[1] = 1;

    // Linear sieve: every composite is crossed exactly once by its
    // smallest prime factor.
    std::vector<std::uint32_t> primes;
    for (std::uint64_t i = 2; i <= n_max; ++i) {
        if (t.totient_[static_cast<std::size_t>(i)] == 0) {
            primes.push_back(static_cast<std::uint32_t>(i));
            t.totient_[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i - 1);
            t.mobius_[static_cast<std::size_t>(i)] = -1;
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t ip = i * p;
            if (ip > n_max) break;
            if (i % p == 0) {
                t.totient_[static_cast<std::size_t>(ip)] =
                    t.totient_[static_cast<std::size_t>(i)] * p;
                t.mobius_[static_cast<std::size_t>(ip)] = 0;
                break;
            }
            t.totient_[static_cast<std::size_t>(ip)] =
                t.totient_[static_cast<std::size_t>(i)] * (p - 1);
            t.mobius_[static_cast<std::size_t>(ip)] =
                static_cast<std::int8_t>(-t.mobius_[static_cast<std::size_t>(i)]);
        }
    }

    // Lambda(p^k) = log p; zero elsewhere.
    for (std::uint32_t p : primes) {
        const double logp = std::log(static_cast<double>(p));
        for (std::uint64_t pk = p; pk <= n_max; pk *= p) {
            t.mangoldt_[static_cast<std::size_t>(pk)] = logp;
            if (pk > n_max / p) break;
        }
    }

    return t;
}

void SieveTable::dump(std::ostream& out) const {
    out.write(magic, sizeof(magic));
    put_u64(out, n_max_);
    for (std::uint64_t n = 1; n <= n_max_; ++n)
        out.put(static_cast<char>(mobius_[static_cast<std::size_t>(n)]));
    for (std::uint64_t n = 1; n <= n_max_; ++n)
        put_u64(out, totient_[static_cast<std::size_t>(n)]);
    for (std::uint64_t n = 1; n <= n_max_; ++n)
        put_f64(out, mangoldt_[static_cast<std::size_t>(n)]);
    if (!out) throw std::runtime_error("sieve dump: write failed");
}

SieveTable SieveTable::load(std::istream& in) {
    char head[5] = {};
    in.read(head, sizeof(head));
    if (!in || std::memcmp(head, magic, sizeof(magic)) != 0)
        throw std::runtime_error("sieve load: bad magic, expected RFSV1");
    SieveTable t;
    t.n_max_ = get_u64(in);
    if (t.n_max_ == 0) throw std::runtime_error("sieve load: zero n_max");
    const std::size_t size = static_cast<std::size_t>(t.n_max_) + 1;
    t.mobius_.assign(size, 0);
    t.totient_.assign(size, 0);
    t.mangoldt_.assign(size, 0.0);
    for (std::uint64_t n = 1; n <= t.n_max_; ++n) {
        const int c = in.get();
        t.mobius_[static_cast<std::size_t>(n)] = static_cast<std::int8_t>(static_cast<char>(c));
    }
    for (std::uint64_t n = 1; n <= t.n_max_; ++n) {
        const std::uint64_t v = get_u64(in);
        t.totient_[static_cast<std::size_t>(n)] = static_cast<std::uint32_t>(v);
    }
    for (std::uint64_t n = 1; n <= t.n_max_; ++n)
        t.mangoldt_[static_cast<std::size_t>(n)] = get_f64(in);
    if (!in) throw std::runtime_error("sieve load: truncated stream");
    return t;
}

void dump_sieve(const SieveTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    table.dump(out);
}

SieveTable load_sieve(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    return SieveTable::load(in);
}

}  // namespace rf
