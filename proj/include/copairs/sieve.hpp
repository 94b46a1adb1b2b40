#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace copairs {

// Immutable per-integer arithmetic tables for 1..limit, built by a single
// linear (smallest-prime-factor driven) sieve pass:
//
//   spf[n]    smallest prime factor (spf[1] = 1)
//   mobius[n] 0 if a square divides n, else (-1)^omega(n)
//   phi[n]    Euler totient
//   omega[n]  number of distinct prime factors
//   rad[n]    product of the distinct primes dividing n (rad[1] = 1)
//
// Construction is single-threaded and deterministic; afterwards the tables
// are read-only and safe to share across threads.
class SieveTables {
public:
    struct Options {
        // Memory guard: 14 bytes per entry, so the default caps table
        // memory near 1.4 GB. Raise it explicitly for bigger machines.
        std::uint64_t max_limit = 100'000'000;
    };

    explicit SieveTables(std::uint64_t limit) : SieveTables(limit, Options{}) {}

    SieveTables(std::uint64_t limit, Options options) : limit_(limit) {
        if (limit == 0)
            throw std::length_error("sieve limit must be positive");
        if (limit > kStorageLimit)
            throw std::length_error("sieve limit " + std::to_string(limit) +
                                    " exceeds 32-bit table storage (" +
                                    std::to_string(kStorageLimit) + ")");
        if (limit > options.max_limit)
            throw std::length_error("sieve limit " + std::to_string(limit) +
                                    " exceeds configured memory budget (max_limit " +
                                    std::to_string(options.max_limit) + ")");
        build();
    }

    std::uint64_t limit() const { return limit_; }

    std::uint32_t spf(std::uint64_t n) const { return spf_[checked(n)]; }
    int mobius(std::uint64_t n) const { return mobius_[checked(n)]; }
    std::uint64_t phi(std::uint64_t n) const { return phi_[checked(n)]; }
    unsigned omega(std::uint64_t n) const { return omega_[checked(n)]; }
    std::uint64_t rad(std::uint64_t n) const { return rad_[checked(n)]; }

    // Primes <= limit, ascending (byproduct of the linear sieve).
    const std::vector<std::uint32_t>& primes() const { return primes_; }

    // Raw tables, 1-indexed with slot 0 unused. For tight counting loops;
    // the checked accessors above are the normal interface.
    const std::vector<std::int8_t>& mobius_table() const { return mobius_; }
    const std::vector<std::uint32_t>& phi_table() const { return phi_; }
    const std::vector<std::uint8_t>& omega_table() const { return omega_; }
    const std::vector<std::uint32_t>& rad_table() const { return rad_; }

    // Distinct prime factors of n, ascending.
    std::vector<std::uint32_t> prime_factors(std::uint64_t n) const {
        checked(n);
        std::vector<std::uint32_t> ps;
        std::uint64_t m = n;
        while (m > 1) {
            const std::uint32_t p = spf_[m];
            ps.push_back(p);
            while (m % p == 0) m /= p;
        }
        std::sort(ps.begin(), ps.end());
        return ps;
    }

    // All divisors of rad(n), ascending: the squarefree divisors of n.
    // Exactly 2^omega(n) of them; mobius(d) is defined for each since
    // d <= n <= limit.
    std::vector<std::uint64_t> squarefree_divisors(std::uint64_t n) const {
        const auto ps = prime_factors(n);
        std::vector<std::uint64_t> divs{1};
        divs.reserve(std::size_t{1} << ps.size());
        for (const std::uint32_t p : ps) {
            const std::size_t count = divs.size();
            for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * p);
        }
        std::sort(divs.begin(), divs.end());
        return divs;
    }

private:
    static constexpr std::uint64_t kStorageLimit = 4'000'000'000;

    std::uint64_t checked(std::uint64_t n) const {
        if (n == 0 || n > limit_)
            throw std::range_error("n = " + std::to_string(n) +
                                   " outside sieve range [1, " + std::to_string(limit_) + "]");
        return n;
    }

    void build() {
        const std::uint64_t n = limit_;
        spf_.assign(n + 1, 0);
        mobius_.assign(n + 1, 0);
        phi_.assign(n + 1, 0);
        omega_.assign(n + 1, 0);
        rad_.assign(n + 1, 0);

        spf_[1] = 1;
        mobius_[1] = 1;
        phi_[1] = 1;
        omega_[1] = 0;
        rad_[1] = 1;

        for (std::uint64_t i = 2; i <= n; ++i) {
            if (spf_[i] == 0) {
                spf_[i] = static_cast<std::uint32_t>(i);
                mobius_[i] = -1;
                phi_[i] = static_cast<std::uint32_t>(i - 1);
                omega_[i] = 1;
                rad_[i] = static_cast<std::uint32_t>(i);
                primes_.push_back(static_cast<std::uint32_t>(i));
            }
            for (const std::uint32_t p : primes_) {
                if (p > spf_[i] || i * p > n) break;
                const std::uint64_t ip = i * p;
                spf_[ip] = p;
                if (i % p == 0) {
                    // p^2 | ip: radical and omega carry over unchanged.
                    mobius_[ip] = 0;
                    phi_[ip] = phi_[i] * p;
                    omega_[ip] = omega_[i];
                    rad_[ip] = rad_[i];
                } else {
                    mobius_[ip] = static_cast<std::int8_t>(-mobius_[i]);
                    phi_[ip] = phi_[i] * (p - 1);
                    omega_[ip] = static_cast<std::uint8_t>(omega_[i] + 1);
                    rad_[ip] = rad_[i] * p;
                }
            }
        }
    }

    std::uint64_t limit_;
    std::vector<std::uint32_t> spf_;
    std::vector<std::int8_t> mobius_;
    std::vector<std::uint32_t> phi_;
    std::vector<std::uint8_t> omega_;
    std::vector<std::uint32_t> rad_;
    std::vector<std::uint32_t> primes_;
};

}  // namespace copairs
