#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobpq/prime_pair.hpp"

namespace frobpq {

/// Cap on tuple evaluations per largest-non-genus computation; exceeding it
/// raises resource_error rather than returning a wrong answer.
inline constexpr std::int64_t kDefaultTupleBudget = 100'000'000;

/// Divisor-weight system of a square-free odd n >= 3 with prime factors
/// p_1 < ... < p_s. Weights are indexed by bit masks: bit i-1 of a mask is
/// set iff p_i divides the associated divisor n_I, weight[0] = n and
/// weight[I] = n*(n_I - 1)/(2*n_I) otherwise. All weights are positive
/// integers with gcd 1.
struct CoveringInstance {
    std::int64_t n = 0;
    std::vector<std::int64_t> primes;   // ascending
    std::vector<std::int64_t> weights;  // size 2^s

    int factor_count() const { return static_cast<int>(primes.size()); }
};

/// Throws std::invalid_argument when n is even, < 3, or not square-free.
CoveringInstance make_covering(std::int64_t n);

/// Branching data: counts[I] for I != 0 is the number of branch points of
/// index n_I; counts[0] is the quotient genus. The covering genus is
/// sum_I counts[I]*weight[I] - n + 1.
using BranchingTuple = std::vector<std::int64_t>;

std::int64_t tuple_genus(const CoveringInstance& inst, std::span<const std::int64_t> counts);

/// The cyclic-action realizability conditions: for every prime index i,
/// the sum of counts over masks with bit i-1 set must differ from 1, and
/// counts[0] plus that sum must differ from 0.
bool admissible(const CoveringInstance& inst, std::span<const std::int64_t> counts);

/// Two-prime sharpening used when shifting the second coordinate: y+w > 1
/// together with z+w != 1, x+y+w != 0, x+z+w != 0. Coordinates must be
/// nonnegative.
bool strongly_admissible(const Quadruple& quad);

/// Frobenius number of the full weight set, shifted by -n+1: the largest
/// integer that is not the genus of any semi-regular n-fold covering.
/// Negative values mean every genus >= 0 is attained.
std::int64_t largest_nongenus_semiregular(const CoveringInstance& inst);

/// Searches for a nonnegative tuple realizing genus gamma that passes the
/// admissibility conditions, by bounded nested enumeration
/// (counts[I] <= target/weight[I]). budget, when given, is decremented per
/// evaluated tuple and exhausting it raises resource_error.
std::optional<BranchingTuple> find_admissible(const CoveringInstance& inst, std::int64_t gamma,
                                              std::int64_t* budget = nullptr);
bool genus_has_admissible(const CoveringInstance& inst, std::int64_t gamma,
                          std::int64_t* budget = nullptr);

struct NuOptions {
    std::int64_t budget = kDefaultTupleBudget;
    int jobs = 1;  // > 1 evaluates genus chunks with OpenMP
};

/// Result of the brute-force largest-non-genus search. When every genus in
/// [0, g_n] admits the cyclic action the search reports all_admissible and
/// the conventional value -1 (no non-genus exists; only possible for very
/// small n).
struct NuResult {
    std::int64_t value = -1;
    bool all_admissible = false;
};

/// Downward scan from g_n: the first genus with no admissible tuple is the
/// largest non-genus; every genus above it is certified admissible by the
/// scan itself.
NuResult nu_cyclic_bruteforce(const CoveringInstance& inst, const NuOptions& opts = {});

}  // namespace frobpq
