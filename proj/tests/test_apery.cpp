#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "frobpq/apery.hpp"

using namespace frobpq;

namespace {

// Independent oracle: mark representables with a plain sieve up to `limit`.
std::vector<bool> representable_sieve(const std::vector<std::int64_t>& gens,
                                      std::int64_t limit) {
    std::vector<bool> rep(static_cast<std::size_t>(limit) + 1, false);
    rep[0] = true;
    for (std::int64_t v = 1; v <= limit; ++v)
        for (std::int64_t g : gens)
            if (v >= g && rep[static_cast<std::size_t>(v - g)]) {
                rep[static_cast<std::size_t>(v)] = true;
                break;
            }
    return rep;
}

}  // namespace

TEST_CASE("apery table examples") {
    const std::vector<std::int64_t> a{3, 5};
    CHECK(build_apery(a).least == std::vector<std::int64_t>{0, 10, 5});
    const std::vector<std::int64_t> b{7, 3};
    CHECK(build_apery(b).least == std::vector<std::int64_t>{0, 7, 14});
}

TEST_CASE("apery table agrees with the sieve for the (5,7) weight set") {
    const std::vector<std::int64_t> gens{35, 14, 15, 17};
    const AperyTable table = build_apery(gens);
    const auto sieve = representable_sieve(gens, 200);
    for (std::int64_t n = 0; n <= 200; ++n)
        REQUIRE(table.representable(n) == sieve[static_cast<std::size_t>(n)]);
    CHECK(table.least[13] == 69);  // residue 13 mod 14
}

TEST_CASE("frobenius number examples") {
    CHECK(frobenius_number(std::vector<std::int64_t>{3, 5}) == 7);
    CHECK(frobenius_number(std::vector<std::int64_t>{15, 5, 6, 7}) == 9);
    CHECK(frobenius_number(std::vector<std::int64_t>{35, 14, 15, 17}) == 55);
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{}), std::invalid_argument);
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{4, 6}), std::invalid_argument);
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{6}), std::invalid_argument);
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{5, 5}), std::invalid_argument);
    // Table cap: least generator above the cap is a resource error.
    CHECK_THROWS_AS(build_apery(std::vector<std::int64_t>{1'000'003, 1'000'033}, 1 << 16),
                    resource_error);
}

TEST_CASE("represent examples") {
    const std::vector<std::int64_t> gens{15, 5, 6, 7};
    CHECK_FALSE(represent(9, gens).has_value());
    CHECK(represent(13, gens) == std::vector<std::int64_t>{0, 0, 1, 1});
    CHECK(represent(0, gens) == std::vector<std::int64_t>{0, 0, 0, 0});
    CHECK_THROWS_AS(represent(-1, gens), std::invalid_argument);
}

TEST_CASE("represent is consistent with the table and re-evaluates") {
    std::mt19937_64 rng(41);
    const std::vector<std::int64_t> gens{35, 14, 15, 17};
    const AperyTable table = build_apery(gens);
    for (std::int64_t n = 0; n <= 400; ++n) {
        const auto witness = represent(table, n);
        REQUIRE(witness.has_value() == table.representable(n));
        if (witness) {
            std::int64_t total = 0;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                REQUIRE((*witness)[i] >= 0);
                total += (*witness)[i] * gens[i];
            }
            REQUIRE(total == n);
        }
    }
}

TEST_CASE("witnesses align with the caller's generator order, duplicates included") {
    const std::vector<std::int64_t> gens{6, 6, 35, 10};
    const AperyTable table = build_apery(gens);
    for (std::int64_t n : {12, 41, 45, 102}) {
        const auto witness = represent(table, n);
        REQUIRE(witness.has_value());
        REQUIRE(witness->size() == gens.size());
        CHECK((*witness)[1] == 0);  // duplicate slot stays empty
        std::int64_t total = 0;
        for (std::size_t i = 0; i < gens.size(); ++i) total += (*witness)[i] * gens[i];
        CHECK(total == n);
    }
}

TEST_CASE("gap count examples") {
    CHECK(gap_count(std::vector<std::int64_t>{3, 5}) == 4);  // 1, 2, 4, 7
    CHECK(gap_count(std::vector<std::int64_t>{2, 3}) == 1);
    CHECK(gap_count(std::vector<std::int64_t>{2, 5}) == 2);
}

TEST_CASE("two-generator instances match the closed form") {
    for (std::int64_t a = 2; a <= 200; ++a)
        for (std::int64_t b = a + 1; b <= 200; ++b) {
            if (std::gcd(a, b) != 1) continue;
            REQUIRE(frobenius_number(std::vector<std::int64_t>{a, b}) == a * b - a - b);
        }
}

TEST_CASE("random small instances match the sieve") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::int64_t> dist(2, 50);
    int done = 0;
    while (done < 100) {
        std::vector<std::int64_t> gens(2 + static_cast<std::size_t>(rng() % 3));
        for (auto& g : gens) g = dist(rng);
        std::vector<std::int64_t> uniq = gens;
        std::sort(uniq.begin(), uniq.end());
        uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
        if (uniq.size() < 2 || gcd_all(uniq) != 1) continue;
        ++done;

        std::sort(gens.begin(), gens.end());
        // Grow the sieve until a full window of the least generator is
        // representable; everything beyond is then representable too.
        std::int64_t limit = 2 * gens.front() * gens.back();
        for (;;) {
            const auto sieve = representable_sieve(gens, limit);
            bool window_clear = true;
            for (std::int64_t n = limit - gens.front() + 1; n <= limit; ++n)
                window_clear = window_clear && sieve[static_cast<std::size_t>(n)];
            if (!window_clear) {
                limit *= 2;
                continue;
            }
            std::int64_t expected = -1;
            for (std::int64_t n = limit; n >= 1; --n)
                if (!sieve[static_cast<std::size_t>(n)]) {
                    expected = n;
                    break;
                }
            REQUIRE(frobenius_number(gens) == expected);
            break;
        }
    }
}

TEST_CASE("window property certifies the frobenius number") {
    const std::vector<std::int64_t> gens{35, 14, 15, 17};
    const AperyTable table = build_apery(gens);
    const std::int64_t f = frobenius_number(table);
    const std::int64_t m = table.instance.modulus;
    CHECK_FALSE(table.representable(f));
    for (std::int64_t n = f + 1; n <= f + m; ++n) CHECK(table.representable(n));
}
