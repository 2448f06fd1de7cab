#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace frobpq {

/// Thrown when a computation would exceed a configured memory or search
/// budget (distinct from invalid input and from arithmetic overflow).
class resource_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// All arithmetic in this project is 64-bit signed with explicit overflow
// checks; overflow is a hard error, never silent wraparound.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Deterministic primality test over the full 64-bit range (fixed
/// Miller-Rabin witness sets, no probabilistic false positives).
bool is_prime(std::uint64_t n);

/// gcd of a nonempty list of positive integers.
std::int64_t gcd_all(std::span<const std::int64_t> values);

/// Simple continued fraction of num/den in canonical form: all partial
/// quotients >= 1 and the last >= 2 whenever there is more than one.
struct ContinuedFraction {
    std::int64_t numerator = 0;
    std::int64_t denominator = 0;
    std::vector<std::int64_t> partial_quotients;

    /// Folds the partial quotients back into a fraction; equals
    /// numerator/denominator exactly.
    std::pair<std::int64_t, std::int64_t> fold() const;
};

/// Requires num > den >= 1 and gcd(num, den) = 1.
ContinuedFraction continued_fraction(std::int64_t num, std::int64_t den);

}  // namespace frobpq
