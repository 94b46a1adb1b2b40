#include "copairs/sieve.hpp"

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

namespace {

using copairs::SieveTables;

// Independent totient by trial division.
std::uint64_t phi_by_trial_division(std::uint64_t n) {
    std::uint64_t result = n;
    std::uint64_t m = n;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        result -= result / p;
        while (m % p == 0) m /= p;
    }
    if (m > 1) result -= result / m;
    return result;
}

TEST(Sieve, TextbookTotientsUpToTen) {
    const SieveTables tables(10);
    const std::uint64_t expected[] = {0, 1, 1, 2, 2, 4, 2, 6, 4, 6, 4};
    for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(tables.phi(n), expected[n]) << "n=" << n;
}

TEST(Sieve, MobiusValues) {
    const SieveTables tables(10);
    EXPECT_EQ(tables.mobius(1), 1);
    EXPECT_EQ(tables.mobius(6), 1);
    EXPECT_EQ(tables.mobius(4), 0);
    EXPECT_EQ(tables.mobius(7), -1);
}

TEST(Sieve, RadicalValues) {
    const SieveTables tables(10);
    EXPECT_EQ(tables.rad(1), 1u);
    EXPECT_EQ(tables.rad(8), 2u);
    EXPECT_EQ(tables.rad(9), 3u);
    EXPECT_THROW(tables.omega(12), std::range_error);
}

TEST(Sieve, RejectsZeroLimit) {
    EXPECT_THROW(SieveTables(0), std::length_error);
}

TEST(Sieve, RejectsLimitBeyondMemoryBudget) {
    SieveTables::Options options;
    options.max_limit = 1000;
    EXPECT_THROW(SieveTables(1001, options), std::length_error);
}

TEST(Sieve, OutOfRangeAccessThrows) {
    const SieveTables tables(100);
    EXPECT_THROW(tables.phi(0), std::range_error);
    EXPECT_THROW(tables.phi(101), std::range_error);
    EXPECT_THROW(tables.spf(101), std::range_error);
}

TEST(Sieve, SpfFactorizationReconstructsN) {
    const SieveTables tables(5000);
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        std::uint64_t m = n;
        std::uint64_t product = 1;
        while (m > 1) {
            const std::uint32_t p = tables.spf(m);
            ASSERT_GT(p, 1u);
            product *= p;
            m /= p;
        }
        EXPECT_EQ(product, n);
    }
}

// sum_{d|n} mu(d) = [n == 1], exhaustively.
TEST(Sieve, MobiusDivisorSumIdentity) {
    constexpr std::uint64_t kLimit = 10'000;
    const SieveTables tables(kLimit);
    std::vector<std::int64_t> divisor_sum(kLimit + 1, 0);
    for (std::uint64_t d = 1; d <= kLimit; ++d)
        for (std::uint64_t n = d; n <= kLimit; n += d) divisor_sum[n] += tables.mobius(d);
    EXPECT_EQ(divisor_sum[1], 1);
    for (std::uint64_t n = 2; n <= kLimit; ++n) EXPECT_EQ(divisor_sum[n], 0) << "n=" << n;
}

TEST(Sieve, MertensStaysWithinTrivialBound) {
    constexpr std::uint64_t kLimit = 10'000;
    const SieveTables tables(kLimit);
    std::int64_t mertens = 0;
    for (std::uint64_t n = 1; n <= kLimit; ++n) {
        mertens += tables.mobius(n);
        EXPECT_LE(static_cast<std::uint64_t>(std::abs(mertens)), n);
    }
}

TEST(Sieve, PhiMatchesTrialDivisionOnRandomValues) {
    constexpr std::uint64_t kLimit = 1'000'000;
    const SieveTables tables(kLimit);
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 1000; ++i) {
        const std::uint64_t n = 1 + rng() % kLimit;
        EXPECT_EQ(tables.phi(n), phi_by_trial_division(n)) << "n=" << n;
    }
}

TEST(Sieve, MobiusConsistentWithOmegaAndSquarefreeness) {
    const SieveTables tables(20'000);
    for (std::uint64_t n = 1; n <= 20'000; ++n) {
        const std::uint64_t r = tables.rad(n);
        EXPECT_EQ(n % r, 0u);
        if (r == n)  // squarefree
            EXPECT_EQ(tables.mobius(n), (tables.omega(n) % 2 == 0) ? 1 : -1);
        else
            EXPECT_EQ(tables.mobius(n), 0);
    }
}

TEST(Sieve, SquarefreeDivisorExamples) {
    const SieveTables tables(100);
    EXPECT_EQ(tables.squarefree_divisors(1), (std::vector<std::uint64_t>{1}));
    EXPECT_EQ(tables.squarefree_divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 6}));
    EXPECT_EQ(tables.squarefree_divisors(30),
              (std::vector<std::uint64_t>{1, 2, 3, 5, 6, 10, 15, 30}));
    EXPECT_THROW(tables.squarefree_divisors(101), std::range_error);
}

TEST(Sieve, SquarefreeDivisorCountIsTwoPowOmega) {
    const SieveTables tables(2000);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        const auto divs = tables.squarefree_divisors(n);
        EXPECT_EQ(divs.size(), std::size_t{1} << tables.omega(n));
        EXPECT_TRUE(std::is_sorted(divs.begin(), divs.end()));
        for (const std::uint64_t d : divs) EXPECT_EQ(tables.rad(n) % d, 0u);
    }
}

TEST(Sieve, PrimesListMatchesSpf) {
    const SieveTables tables(1000);
    std::vector<std::uint32_t> primes;
    for (std::uint32_t n = 2; n <= 1000; ++n)
        if (tables.spf(n) == n) primes.push_back(n);
    EXPECT_EQ(tables.primes(), primes);
    EXPECT_EQ(tables.primes().size(), 168u);
}

}  // namespace
