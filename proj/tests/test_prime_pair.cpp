#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "frobpq/prime_pair.hpp"
#include "frobpq/scan.hpp"

using namespace frobpq;

TEST_CASE("make_prime_pair fills the division identities") {
    const PrimePair a = make_prime_pair(5, 7);
    CHECK(a.kappa == 1);
    CHECK(a.lambda == 2);
    CHECK(a.kappa_half == 1);
    CHECK(a.lambda_half == 1);
    CHECK(a.twin());

    const PrimePair b = make_prime_pair(5, 17);
    CHECK(b.kappa == 3);
    CHECK(b.lambda == 2);
    CHECK(b.kappa_half == 4);
    CHECK(b.lambda_half == 0);
    CHECK(b.kappa_lambda_large());
}

TEST_CASE("make_prime_pair rejects bad input") {
    CHECK_THROWS_AS(make_prime_pair(7, 5), std::invalid_argument);   // p >= q
    CHECK_THROWS_AS(make_prime_pair(4, 7), std::invalid_argument);   // not prime
    CHECK_THROWS_AS(make_prime_pair(2, 7), std::invalid_argument);   // even prime
    CHECK_THROWS_AS(make_prime_pair(5, 15), std::invalid_argument);
    CHECK_THROWS_AS(make_prime_pair(5, 5), std::invalid_argument);
}

TEST_CASE("weights examples") {
    const Weights a = weights_of(make_prime_pair(5, 7));
    CHECK(a.d0 == 35);
    CHECK(a.d1 == 14);
    CHECK(a.d2 == 15);
    CHECK(a.d3 == 17);
    const Weights b = weights_of(make_prime_pair(3, 5));
    CHECK(b.d0 == 15);
    CHECK(b.d1 == 5);
    CHECK(b.d2 == 6);
    CHECK(b.d3 == 7);
    const Weights c = weights_of(make_prime_pair(11, 13));
    CHECK(c.d0 == 143);
    CHECK(c.d1 == 65);
    CHECK(c.d2 == 66);
    CHECK(c.d3 == 71);
}

TEST_CASE("linear form examples") {
    const Weights w = weights_of(make_prime_pair(5, 7));
    CHECK(linear_form(w, {0, 3, 2, 1}) == 89);
    CHECK(linear_form(w, {0, 0, 0, 0}) == 0);
    CHECK(linear_form(w, {1, 0, 0, -2}) == 1);
}

TEST_CASE("landmark examples") {
    const Landmarks a = landmarks_of(make_prime_pair(5, 17));
    CHECK(a.g_a == 299);
    CHECK(a.g_b == 215);
    CHECK(a.g_c == 215);
    const Landmarks b = landmarks_of(make_prime_pair(11, 13));
    CHECK(b.g_a == 1217);
    CHECK(b.g_b == 1075);
    CHECK(b.g_c == 649);
    const Landmarks c = landmarks_of(make_prime_pair(3, 5));
    CHECK(c.g_a == 9);
    CHECK(c.g_c == 9);  // p = 3 forces g_c = g_a
}

TEST_CASE("classification examples") {
    const Classification a = classify(make_prime_pair(5, 17));
    CHECK(a.cls == PairClass::KappaLambdaLarge);
    CHECK_FALSE(a.tau.has_value());

    const Classification b = classify(make_prime_pair(5, 7));
    CHECK(b.cls == PairClass::TypeTwoSmall);
    CHECK(b.tau == 0);

    const Classification c = classify(make_prime_pair(11, 17));
    CHECK(c.cls == PairClass::TypeOneLarge);
    CHECK(c.tau == 1);

    const Classification d = classify(make_prime_pair(7, 17));
    CHECK(d.cls == PairClass::TypeTwoLarge);
    CHECK(d.tau == 0);

    const Classification e = classify(make_prime_pair(11, 13));
    CHECK(e.cls == PairClass::TypeOneSmall);
    CHECK(e.tau == 0);
}

TEST_CASE("prediction examples") {
    const Prediction a = predict_frobenius(make_prime_pair(5, 17));
    CHECK(a.kind == Prediction::Kind::Exact);
    CHECK(a.exact_value() == 299);

    const Prediction b = predict_frobenius(make_prime_pair(5, 7));
    CHECK(b.kind == Prediction::Kind::Exact);
    CHECK(b.exact_value() == 55);

    const Prediction c = predict_frobenius(make_prime_pair(7, 17));
    CHECK(c.kind == Prediction::Kind::Interval);
    CHECK(c.lo == 420);
    CHECK(c.hi == 597);
    CHECK_FALSE(c.lo_inclusive);
    CHECK_FALSE(c.hi_inclusive);
    CHECK(c.contains(421));
    CHECK(c.contains(596));
    CHECK_FALSE(c.contains(420));
    CHECK_FALSE(c.contains(597));

    // Half-open bracket in the Type I small region.
    const Prediction d = predict_frobenius(make_prime_pair(13, 17));
    CHECK(d.kind == Prediction::Kind::Interval);
    CHECK(d.lo_inclusive);
    CHECK_FALSE(d.hi_inclusive);
}

TEST_CASE("nu formula examples") {
    CHECK(nu_formula(make_prime_pair(5, 17)) == 215);
    CHECK(nu_formula(make_prime_pair(5, 7)) == 37);
    CHECK_FALSE(nu_formula(make_prime_pair(7, 13)).has_value());  // q = 2p-1
    CHECK_FALSE(nu_formula(make_prime_pair(5, 13)).has_value());  // q = 3p-2
    CHECK_FALSE(nu_formula(make_prime_pair(3, 5)).has_value());   // p = 3
    CHECK(nu_formula(make_prime_pair(11, 13)) == 574);
}

TEST_CASE("nu bounds examples") {
    const NuBounds a = nu_bounds(make_prime_pair(5, 7), 55);
    CHECK(a.lo == 21);
    CHECK(a.hi == 55);
    const NuBounds b = nu_bounds(make_prime_pair(5, 17), 299);
    CHECK(b.lo == 215);
    CHECK(b.hi == 299);
    const NuBounds c = nu_bounds(make_prime_pair(3, 5), 9);
    CHECK(c.lo == -5);
    CHECK(c.hi == 9);
}

TEST_CASE("structural invariants over the whole grid") {
    // Every pair with 2 < p < q < 300.
    const auto primes = odd_primes_upto(299);
    for (std::int64_t p : primes) {
        for (std::int64_t q : primes) {
            if (q <= p) continue;
            CAPTURE(p);
            CAPTURE(q);
            const PrimePair pair = make_prime_pair(p, q);
            REQUIRE(pair.q == pair.kappa * pair.p + pair.lambda);
            REQUIRE(pair.lambda >= 1);
            REQUIRE(pair.lambda <= pair.p - 1);
            REQUIRE(pair.q_half == pair.kappa_half * pair.p_half + pair.lambda_half);
            REQUIRE((pair.kappa + pair.lambda) % 2 == 1);
            REQUIRE(pair.kappa_half >= pair.kappa);

            const Weights w = weights_of(pair);
            REQUIRE(w.d1 < w.d2);
            REQUIRE(w.d2 < w.d3);
            REQUIRE(w.d3 < w.d0);
            REQUIRE(w.d1 + pair.q_half == w.d3);
            REQUIRE(w.d2 + pair.p_half == w.d3);
            REQUIRE(2 * w.d3 + 1 == w.d0);

            const Landmarks m = landmarks_of(pair);
            REQUIRE(m.g_c <= m.g_a);
            REQUIRE(m.g_b <= m.g_a);
            if (pair.kappa + pair.lambda < pair.p) REQUIRE(m.g_c <= m.g_b);

            const Classification cl = classify(pair);
            REQUIRE(cl.tau.has_value() == (pair.kappa + pair.lambda < pair.p));
            if (cl.tau) {
                REQUIRE(*cl.tau >= 0);
                REQUIRE(*cl.tau < pair.lambda);
                // Defining inequalities of tau, cross-multiplied.
                REQUIRE((*cl.tau + 2) * pair.lambda < (*cl.tau + 1) * pair.p);
                if (*cl.tau > 0) REQUIRE(*cl.tau * pair.p < (*cl.tau + 1) * pair.lambda);
            }

            const Prediction pr = predict_frobenius(pair);
            if (pr.kind == Prediction::Kind::Interval) REQUIRE(pr.lo < pr.hi);
        }
    }
}
