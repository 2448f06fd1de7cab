#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frobpq/apery.hpp"
#include "frobpq/covering.hpp"
#include "frobpq/prime_pair.hpp"

namespace frobpq {

/// Everything the scan knows about one prime pair. Oracle-dependent fields
/// are filled only when requested; a per-pair resource failure is recorded
/// in note instead of aborting the scan.
struct PairRecord {
    PrimePair pair;
    Weights weights;
    Landmarks landmarks;
    Classification cls;
    Prediction prediction;
    std::optional<std::int64_t> g_oracle;
    std::optional<std::int64_t> nu_form;
    std::optional<std::int64_t> nu_brute;
    std::string note;

    // Filled when the oracle value is present.
    std::optional<bool> bounds_ok;      // g_c <= g <= g_a
    std::optional<bool> prediction_ok;  // prediction contains g
    std::optional<bool> nu_ok;          // formula == brute force, when both exist
};

struct ScanOptions {
    std::int64_t p_max = 150;
    std::int64_t q_max = 150;
    bool with_oracle = false;
    bool with_nu_brute = false;
    std::int64_t nu_pq_cap = 1500;  // brute-force non-genus only when p*q <= cap
    int jobs = 1;
    std::int64_t modulus_cap = kDefaultModulusCap;
    std::int64_t nu_budget = kDefaultTupleBudget;
};

/// One record per prime pair p < q with p <= p_max, q <= q_max, ordered by
/// (p, q). Output is a pure function of the options; any --jobs value
/// produces identical records.
std::vector<PairRecord> scan_pairs(const ScanOptions& opts);

/// Single-threaded reference implementation; scan_pairs with jobs > 1 must
/// match it record for record.
std::vector<PairRecord> scan_pairs_serial(const ScanOptions& opts);

/// CSV with the fixed header
/// p,q,kappa,lambda,kappa_p,lambda_p,tau,class,d0,d1,d2,d3,g_a,g_b,g_c,
/// g_oracle,pred_kind,pred_lo,pred_hi,nu_formula,nu_brute
/// Optional fields render as empty cells; everything else is a decimal
/// integer; rows are (p, q)-sorted, newline-terminated, ASCII.
std::string records_to_csv(std::span<const PairRecord> records);

/// Classification grid over 2 < p < q < limit in the scan CSV format
/// (no oracle columns filled).
std::string figure1_csv(std::int64_t limit);

struct CheckResult {
    std::string name;
    std::int64_t tested = 0;
    std::int64_t failure_count = 0;
    std::vector<std::string> failures;  // first few counterexamples
    std::string note;                   // extra context (counts, caps)
    double seconds = 0.0;
    bool informational = false;  // reported, but does not gate the suite

    bool passed() const { return failure_count == 0; }
};

struct SuiteReport {
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.informational && !c.passed()) return false;
        return true;
    }
    const CheckResult* find(std::string_view name) const;
};

struct SuiteOptions {
    std::int64_t p_max = 150;
    std::int64_t q_max = 150;
    std::int64_t witness_d1_cap = 2000;   // exhaustive t-sweep for d1 <= cap
    std::int64_t nu_pq_cap = 1500;        // brute-force non-genus for p*q <= cap
    std::int64_t prime_covering_max = 31; // single-prime coverings up to here
    std::vector<std::int64_t> covering_ns = {15, 21, 33, 35, 105, 143};
    int sylvester_samples = 100;
    std::int64_t sylvester_value_cap = 500;
    std::uint64_t seed = 20240607;
    int jobs = 1;
    std::int64_t modulus_cap = kDefaultModulusCap;
    std::int64_t nu_budget = kDefaultTupleBudget;
};

/// Runs every named consistency check against the oracle and returns one
/// CheckResult per check. Resource errors are recorded as failures of the
/// affected check, never thrown.
SuiteReport run_suite(const SuiteOptions& opts);

/// Odd primes in [3, limit], ascending.
std::vector<std::int64_t> odd_primes_upto(std::int64_t limit);

}  // namespace frobpq
