#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <numeric>
#include <random>

#include "frobpq/arith.hpp"

using namespace frobpq;

TEST_CASE("checked arithmetic traps overflow") {
    CHECK(checked_add(3, 4) == 7);
    CHECK(checked_mul(-5, 7) == -35);
    const std::int64_t big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big / 2, 3), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(std::numeric_limits<std::int64_t>::min(), 1),
                    std::overflow_error);
}

TEST_CASE("is_prime on the stated examples") {
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(91));  // 7 * 13
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("is_prime agrees with trial division up to one million") {
    const std::size_t limit = 1'000'000;
    std::vector<bool> sieve(limit + 1, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i * i <= limit; ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j <= limit; j += i) sieve[j] = false;
    for (std::size_t n = 0; n <= limit; ++n) {
        if (is_prime(n) != sieve[n]) {
            CAPTURE(n);
            REQUIRE(is_prime(n) == sieve[n]);
        }
    }
}

TEST_CASE("is_prime handles values past 32 bits") {
    CHECK(is_prime(2147483647ull));           // 2^31 - 1
    CHECK(is_prime(67280421310721ull));       // factor of 2^128 + 1
    CHECK_FALSE(is_prime(3215031751ull));     // strong pseudoprime to 2,3,5,7
    CHECK_FALSE(is_prime(614889782588491410ull));  // product of primes to 47
}

TEST_CASE("gcd_all examples") {
    const std::int64_t a[] = {15, 5, 6, 7};
    CHECK(gcd_all(a) == 1);
    const std::int64_t b[] = {6};
    CHECK(gcd_all(b) == 6);
    const std::int64_t c[] = {12, 18};
    CHECK(gcd_all(c) == 6);
    CHECK_THROWS_AS(gcd_all({}), std::invalid_argument);
    const std::int64_t bad[] = {4, 0};
    CHECK_THROWS_AS(gcd_all(bad), std::invalid_argument);
}

TEST_CASE("gcd_all is order-invariant and duplication-idempotent") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::int64_t> dist(1, 1'000'000);
    for (int iter = 0; iter < 200; ++iter) {
        std::vector<std::int64_t> values(1 + static_cast<std::size_t>(rng() % 6));
        for (auto& v : values) v = dist(rng);
        const std::int64_t g = gcd_all(values);

        std::shuffle(values.begin(), values.end(), rng);
        CHECK(gcd_all(values) == g);

        values.push_back(values[rng() % values.size()]);
        CHECK(gcd_all(values) == g);
    }
}

TEST_CASE("continued fraction examples") {
    CHECK(continued_fraction(17, 5).partial_quotients ==
          std::vector<std::int64_t>{3, 2, 2});
    CHECK(continued_fraction(7, 5).partial_quotients ==
          std::vector<std::int64_t>{1, 2, 2});
    CHECK(continued_fraction(5, 1).partial_quotients == std::vector<std::int64_t>{5});
    CHECK_THROWS_AS(continued_fraction(10, 4), std::invalid_argument);  // not coprime
    CHECK_THROWS_AS(continued_fraction(4, 7), std::invalid_argument);   // num <= den
    CHECK_THROWS_AS(continued_fraction(5, 0), std::invalid_argument);
}

TEST_CASE("continued fraction is canonical and folds back exactly") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::int64_t> dist(1, 100'000);
    int done = 0;
    while (done < 500) {
        std::int64_t num = dist(rng), den = dist(rng);
        if (num <= den || std::gcd(num, den) != 1) continue;
        ++done;
        const ContinuedFraction cf = continued_fraction(num, den);
        for (std::int64_t qk : cf.partial_quotients) CHECK(qk >= 1);
        if (cf.partial_quotients.size() > 1) CHECK(cf.partial_quotients.back() >= 2);
        const auto [fn, fd] = cf.fold();
        CHECK(fn == num);
        CHECK(fd == den);
    }
}
