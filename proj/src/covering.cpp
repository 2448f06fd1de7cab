#include "frobpq/covering.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>

#include "frobpq/apery.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace frobpq {

CoveringInstance make_covering(std::int64_t n) {
    if (n < 3 || n % 2 == 0)
        throw std::invalid_argument("covering: n must be odd and >= 3, got " + std::to_string(n));
    CoveringInstance inst;
    inst.n = n;
    std::int64_t rest = n;
    for (std::int64_t f = 3; f * f <= rest; f += 2) {
        if (rest % f != 0) continue;
        rest /= f;
        if (rest % f == 0)
            throw std::invalid_argument("covering: n must be square-free, got " +
                                        std::to_string(n));
        inst.primes.push_back(f);
    }
    if (rest > 1) inst.primes.push_back(rest);

    const int s = inst.factor_count();
    inst.weights.assign(std::size_t{1} << s, 0);
    inst.weights[0] = n;
    for (std::size_t mask = 1; mask < inst.weights.size(); ++mask) {
        std::int64_t divisor = 1;
        for (int i = 0; i < s; ++i)
            if (mask & (std::size_t{1} << i)) divisor = checked_mul(divisor, inst.primes[i]);
        // n_I odd makes n*(n_I - 1)/(2*n_I) an integer.
        inst.weights[mask] = checked_mul(n / divisor, (divisor - 1) / 2);
    }
    return inst;
}

std::int64_t tuple_genus(const CoveringInstance& inst, std::span<const std::int64_t> counts) {
    if (counts.size() != inst.weights.size())
        throw std::invalid_argument("tuple_genus: tuple length mismatch");
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < counts.size(); ++i)
        acc = checked_add(acc, checked_mul(counts[i], inst.weights[i]));
    return checked_add(checked_sub(acc, inst.n), 1);
}

bool admissible(const CoveringInstance& inst, std::span<const std::int64_t> counts) {
    if (counts.size() != inst.weights.size())
        throw std::invalid_argument("admissible: tuple length mismatch");
    const int s = inst.factor_count();
    for (int i = 0; i < s; ++i) {
        std::int64_t sum = 0;
        for (std::size_t mask = 1; mask < counts.size(); ++mask)
            if (mask & (std::size_t{1} << i)) sum += counts[mask];
        if (sum == 1) return false;
        if (counts[0] + sum == 0) return false;
    }
    return true;
}

bool strongly_admissible(const Quadruple& q) {
    if (!q.nonnegative())
        throw std::invalid_argument("strongly_admissible: coordinates must be nonnegative");
    return q.y + q.w > 1 && q.z + q.w != 1 && q.x + q.y + q.w != 0 && q.x + q.z + q.w != 0;
}

namespace {

// Frobenius number of the full weight set. For n = 3 the weight set is
// {3, 1}; with 1 as a generator every nonnegative integer is representable
// and the conventional value is -1.
std::int64_t weight_frobenius(const CoveringInstance& inst) {
    if (inst.n == 3) return -1;
    return frobenius_number(inst.weights);
}

struct TupleSearch {
    const CoveringInstance& inst;
    std::int64_t* budget;
    std::vector<std::size_t> loop_masks;  // enumeration order
    std::size_t solve_mask = 1;           // smallest weight, solved by division
    std::vector<std::int64_t> counts;

    explicit TupleSearch(const CoveringInstance& instance, std::int64_t* b)
        : inst(instance), budget(b), counts(instance.weights.size(), 0) {
        const std::size_t full = inst.weights.size() - 1;
        for (std::size_t mask = 0; mask < inst.weights.size(); ++mask)
            if (mask != solve_mask && mask != full) loop_masks.push_back(mask);
        std::sort(loop_masks.begin(), loop_masks.end(), [&](std::size_t a, std::size_t b2) {
            return inst.weights[a] > inst.weights[b2];
        });
        // Any tuple with two or more branch points of full index is
        // automatically admissible, so trying large counts there first makes
        // the common case cheap.
        if (full != solve_mask) loop_masks.insert(loop_masks.begin(), full);
    }

    bool spend() {
        if (budget == nullptr) return true;
        if (*budget <= 0) throw resource_error("covering: tuple evaluation budget exhausted");
        --*budget;
        return true;
    }

    bool dfs(std::size_t depth, std::int64_t remaining) {
        if (depth == loop_masks.size()) {
            spend();
            const std::int64_t w = inst.weights[solve_mask];
            if (remaining % w != 0) return false;
            counts[solve_mask] = remaining / w;
            return admissible(inst, counts);
        }
        const std::size_t mask = loop_masks[depth];
        const std::int64_t w = inst.weights[mask];
        const std::int64_t top = remaining / w;
        if (mask == inst.weights.size() - 1) {
            for (std::int64_t v = top; v >= 0; --v) {
                counts[mask] = v;
                if (dfs(depth + 1, remaining - v * w)) return true;
            }
        } else {
            for (std::int64_t v = 0; v <= top; ++v) {
                counts[mask] = v;
                if (dfs(depth + 1, remaining - v * w)) return true;
            }
        }
        counts[mask] = 0;
        return false;
    }
};

}  // namespace

std::int64_t largest_nongenus_semiregular(const CoveringInstance& inst) {
    return checked_add(checked_sub(weight_frobenius(inst), inst.n), 1);
}

std::optional<BranchingTuple> find_admissible(const CoveringInstance& inst, std::int64_t gamma,
                                              std::int64_t* budget) {
    if (gamma < 0) throw std::invalid_argument("find_admissible: genus must be nonnegative");
    const std::int64_t target = checked_sub(checked_add(gamma, inst.n), 1);
    TupleSearch search(inst, budget);
    if (search.dfs(0, target)) return search.counts;
    return std::nullopt;
}

bool genus_has_admissible(const CoveringInstance& inst, std::int64_t gamma,
                          std::int64_t* budget) {
    return find_admissible(inst, gamma, budget).has_value();
}

NuResult nu_cyclic_bruteforce(const CoveringInstance& inst, const NuOptions& opts) {
    const std::int64_t g = weight_frobenius(inst);

#ifdef _OPENMP
    if (opts.jobs > 1 && g >= 0) {
        std::atomic<std::int64_t> remaining{opts.budget};
        std::atomic<bool> exhausted{false};
        const std::int64_t chunk = std::max<std::int64_t>(64, 16 * opts.jobs);
        std::vector<char> inadmissible(static_cast<std::size_t>(chunk));
        for (std::int64_t hi = g; hi >= 0; hi -= chunk) {
            const std::int64_t lo = std::max<std::int64_t>(0, hi - chunk + 1);
            const std::int64_t count = hi - lo + 1;
            std::fill(inadmissible.begin(), inadmissible.end(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
            for (std::int64_t idx = 0; idx < count; ++idx) {
                if (exhausted.load(std::memory_order_relaxed)) continue;
                std::int64_t local = remaining.load(std::memory_order_relaxed);
                if (local <= 0) {
                    exhausted.store(true, std::memory_order_relaxed);
                    continue;
                }
                std::int64_t before = local;
                try {
                    if (!genus_has_admissible(inst, hi - idx, &local))
                        inadmissible[static_cast<std::size_t>(idx)] = 1;
                } catch (const resource_error&) {
                    exhausted.store(true, std::memory_order_relaxed);
                }
                remaining.fetch_sub(before - local, std::memory_order_relaxed);
            }
            if (exhausted.load())
                throw resource_error("covering: tuple evaluation budget " +
                                     std::to_string(opts.budget) +
                                     " exhausted during the non-genus scan");
            for (std::int64_t idx = 0; idx < count; ++idx)
                if (inadmissible[static_cast<std::size_t>(idx)]) return {hi - idx, false};
        }
        return {-1, true};
    }
#endif

    std::int64_t budget = opts.budget;
    for (std::int64_t gamma = g; gamma >= 0; --gamma) {
        try {
            if (!genus_has_admissible(inst, gamma, &budget)) return {gamma, false};
        } catch (const resource_error&) {
            throw resource_error("covering: tuple evaluation budget " +
                                 std::to_string(opts.budget) +
                                 " exhausted during the non-genus scan at genus " +
                                 std::to_string(gamma));
        }
    }
    return {-1, true};
}

}  // namespace frobpq
