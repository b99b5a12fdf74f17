#pragma once

// Exact integer number-theoretic kernels: a linear sieve producing the
// Moebius, totient and von Mangoldt values up to a fixed bound, plus the
// binary dump/load of the resulting table.

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>
#include <vector>

namespace rf {

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
    return std::gcd(a, b);
}

enum class SieveKind { mobius, totient, mangoldt };

// Immutable after construction; safe to share across concurrent readers.
class SieveTable {
  public:
    static constexpr std::uint64_t default_memory_ceiling = 100'000'000;

    std::uint64_t n_max() const noexcept { return n_max_; }

    // All accessors are 1-based and throw std::out_of_range for n outside
    // [1, n_max].
    int mobius(std::uint64_t n) const {
        check(n);
        return mobius_[static_cast<std::size_t>(n)];
    }
    std::uint64_t totient(std::uint64_t n) const {
        check(n);
        return totient_[static_cast<std::size_t>(n)];
    }
    // Natural-log units: log p when n is a power of the prime p, else 0.
    double mangoldt(std::uint64_t n) const {
        check(n);
        return mangoldt_[static_cast<std::size_t>(n)];
    }

    double query(std::uint64_t n, SieveKind kind) const;

    const std::vector<std::int8_t>& mobius_values() const noexcept { return mobius_; }
    const std::vector<std::uint32_t>& totient_values() const noexcept { return totient_; }
    const std::vector<double>& mangoldt_values() const noexcept { return mangoldt_; }

    void dump(std::ostream& out) const;
    static SieveTable load(std::istream& in);

  private:
    friend SieveTable build_sieve(std::uint64_t, std::uint64_t);

    void check(std::uint64_t n) const;

    std::uint64_t n_max_ = 0;
    std::vector<std::int8_t> mobius_;     // index 0 unused
    std::vector<std::uint32_t> totient_;  // phi(n) <= n_max fits 32 bits
    std::vector<double> mangoldt_;
};

// Linear (Euler) sieve, single-threaded and deterministic. Throws
// std::length_error when n_max exceeds the memory ceiling and
// std::invalid_argument for n_max == 0.
SieveTable build_sieve(std::uint64_t n_max,
                       std::uint64_t memory_ceiling = SieveTable::default_memory_ceiling);

void dump_sieve(const SieveTable& table, const std::string& path);
SieveTable load_sieve(const std::string& path);

}  // namespace rf
