#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "frobpq/arith.hpp"

namespace frobpq {

/// An odd prime pair 2 < p < q together with the derived quantities used
/// throughout: the halves p_half = (p-1)/2, q_half = (q-1)/2 and the two
/// division identities
///
///   q      = kappa * p + lambda,           1 <= lambda <= p - 1,
///   q_half = kappa_half * p_half + lambda_half,  0 <= lambda_half <= p_half - 1.
///
/// kappa and lambda always have opposite parity, kappa_half >= kappa, and
/// lambda_half = (kappa + lambda - 1)/2 - (kappa_half - kappa) * p_half.
struct PrimePair {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t p_half = 0;
    std::int64_t q_half = 0;
    std::int64_t kappa = 0;
    std::int64_t lambda = 0;
    std::int64_t kappa_half = 0;
    std::int64_t lambda_half = 0;

    bool twin() const { return q == p + 2; }
    bool kappa_lambda_large() const { return kappa + lambda >= p; }
};

/// Validates p, q and fills in every derived field.
/// Throws std::invalid_argument unless p, q are odd primes with p < q.
PrimePair make_prime_pair(std::int64_t p, std::int64_t q);

/// The four generators attached to a pair:
///   d0 = p*q,  d1 = p_half*q,  d2 = p*q_half,  d3 = (p*q - 1)/2.
/// They satisfy gcd = 1, d1 < d2 < d3 < d0, d1 + q_half = d2 + p_half = d3
/// and 2*d3 + 1 = d0.
struct Weights {
    std::int64_t d0 = 0, d1 = 0, d2 = 0, d3 = 0;
};

Weights weights_of(const PrimePair& pair);

/// Integer coefficient 4-tuple for the linear form. Intermediate tuples in
/// the constructive machinery are legitimately negative; nonnegativity is a
/// property of finished witnesses, not of the type.
struct Quadruple {
    std::int64_t x = 0, y = 0, z = 0, w = 0;

    bool nonnegative() const { return x >= 0 && y >= 0 && z >= 0 && w >= 0; }
    bool operator==(const Quadruple&) const = default;
};

Quadruple add(const Quadruple& a, const Quadruple& b);
Quadruple scale(std::int64_t k, const Quadruple& a);

/// x*d0 + y*d1 + z*d2 + w*d3, overflow-checked.
std::int64_t linear_form(const Weights& w, const Quadruple& q);

/// The three landmark values bracketing the Frobenius number:
///   g_a = linear_form(p_half-1, p-1, kappa, -1),
///   g_b = g_a - lambda * d3,
///   g_c = g_a - (p-3) * d3.
/// All three are computed unconditionally; outside the hypotheses of the
/// exact-value statements they are bounds only (g_b can even be negative).
struct Landmarks {
    std::int64_t g_a = 0, g_b = 0, g_c = 0;
};

Landmarks landmarks_of(const PrimePair& pair);

/// The five-way classification of pairs. For kappa + lambda < p the split
/// uses tau = floor(lambda / (p - lambda)) and compares p_half/lambda_half
/// against (tau+2)/(tau+1) exactly (integer cross-multiplication):
/// Type II when p_half/lambda_half <= (tau+2)/(tau+1), Type I otherwise.
/// "Small" means kappa + lambda <= p - lambda.
enum class PairClass {
    KappaLambdaLarge,  // kappa + lambda >= p
    TypeTwoSmall,
    TypeTwoLarge,
    TypeOneSmall,
    TypeOneLarge,  // the unresolved region (blank in the classification grid)
};

/// Stable token for a class ("KappaLambdaLarge", "TypeTwoSmall", ...).
std::string_view class_name(PairClass cls);

/// Token used in the CSV class column: as class_name, except TypeOneLarge
/// is written "white" (the blank cells of the classification grid).
std::string_view class_csv_label(PairClass cls);

struct Classification {
    PairClass cls;
    /// Defined only when kappa + lambda < p; absent otherwise so that Type
    /// tests cannot accidentally consume it.
    std::optional<std::int64_t> tau;
};

Classification classify(const PrimePair& pair);

/// What the exact-value and bracketing results say about the Frobenius
/// number of a pair: either an exact landmark value or an interval with
/// explicit end inclusivity. Endpoints are always landmark values of the
/// same pair.
struct Prediction {
    enum class Kind { Exact, Interval };
    Kind kind = Kind::Exact;
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    bool lo_inclusive = true;
    bool hi_inclusive = true;
    std::string_view source;  // which statement produced the prediction

    std::int64_t exact_value() const { return lo; }
    bool contains(std::int64_t g) const;
};

Prediction predict_frobenius(const PrimePair& pair);

/// Exact largest non-genus of the cyclic group of order p*q where a closed
/// form is known: g_a - p*q + 1 when p > 3, kappa + lambda >= p and
/// q is neither 2p-1 nor 3p-2; g_c + 1 + d2 - p*q + 1 for twin pairs with
/// p > 3. Absent otherwise.
std::optional<std::int64_t> nu_formula(const PrimePair& pair);

/// Universal bracket for the largest non-genus given the Frobenius number
/// g of the pair's weights: [g - p*q + 1, g].
struct NuBounds {
    std::int64_t lo = 0, hi = 0;
};

NuBounds nu_bounds(const PrimePair& pair, std::int64_t g);

}  // namespace frobpq
