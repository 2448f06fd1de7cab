#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "frobpq/arith.hpp"

namespace frobpq {

/// Default cap on the Apery table modulus (the least generator); tables
/// larger than this raise resource_error instead of allocating.
inline constexpr std::int64_t kDefaultModulusCap = std::int64_t{1} << 26;

/// A numerical semigroup given by generators >= 2 with gcd 1. The original
/// generator order is kept so witness coefficient vectors line up with the
/// caller's list; duplicates are tolerated on input and ignored internally.
struct SemigroupInstance {
    std::vector<std::int64_t> generators;  // as given, validated
    std::vector<std::int64_t> sorted;      // distinct, ascending
    std::int64_t modulus = 0;              // least generator
};

/// Per-residue least representable values mod the least generator m:
/// least[r] is the smallest representable integer congruent to r, so
/// n >= 0 is representable iff least[n mod m] <= n. pred records, for each
/// nonzero residue, the index (into sorted) of a generator on a shortest
/// path, for witness reconstruction.
struct AperyTable {
    SemigroupInstance instance;
    std::vector<std::int64_t> least;
    std::vector<std::int32_t> pred;

    bool representable(std::int64_t n) const {
        if (n < 0) return false;
        return least[static_cast<std::size_t>(n % instance.modulus)] <= n;
    }
};

/// Single-source shortest paths over the m residue classes with arc weights
/// equal to the generators. Throws std::invalid_argument on bad generators
/// (values < 2, gcd != 1, fewer than two distinct) and resource_error when
/// the least generator exceeds modulus_cap.
AperyTable build_apery(std::span<const std::int64_t> generators,
                       std::int64_t modulus_cap = kDefaultModulusCap);

/// Largest non-representable integer: max over residues of least[r] - m.
std::int64_t frobenius_number(const AperyTable& table);
std::int64_t frobenius_number(std::span<const std::int64_t> generators,
                              std::int64_t modulus_cap = kDefaultModulusCap);

/// Nonnegative coefficient vector (aligned with the input generator list)
/// summing to n, or absent when n is not representable. Witnesses follow
/// stored predecessors; any valid witness is acceptable.
std::optional<std::vector<std::int64_t>> represent(const AperyTable& table, std::int64_t n);
std::optional<std::vector<std::int64_t>> represent(std::int64_t n,
                                                   std::span<const std::int64_t> generators,
                                                   std::int64_t modulus_cap = kDefaultModulusCap);

/// Number of non-representable positive integers.
std::int64_t gap_count(const AperyTable& table);
std::int64_t gap_count(std::span<const std::int64_t> generators,
                       std::int64_t modulus_cap = kDefaultModulusCap);

}  // namespace frobpq
