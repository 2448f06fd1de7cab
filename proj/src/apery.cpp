#include "frobpq/apery.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace frobpq {

namespace {

SemigroupInstance make_instance(std::span<const std::int64_t> generators,
                                std::int64_t modulus_cap) {
    if (generators.empty())
        throw std::invalid_argument("semigroup: generator list is empty");
    SemigroupInstance inst;
    inst.generators.assign(generators.begin(), generators.end());
    for (std::int64_t g : inst.generators)
        if (g < 2)
            throw std::invalid_argument("semigroup: generators must be >= 2, got " +
                                        std::to_string(g));
    inst.sorted = inst.generators;
    std::sort(inst.sorted.begin(), inst.sorted.end());
    inst.sorted.erase(std::unique(inst.sorted.begin(), inst.sorted.end()), inst.sorted.end());
    if (inst.sorted.size() < 2)
        throw std::invalid_argument("semigroup: need at least two distinct generators");
    if (gcd_all(inst.sorted) != 1)
        throw std::invalid_argument("semigroup: generators must have gcd 1");
    inst.modulus = inst.sorted.front();
    if (inst.modulus > modulus_cap)
        throw resource_error("semigroup: least generator " + std::to_string(inst.modulus) +
                             " exceeds the table cap " + std::to_string(modulus_cap));
    return inst;
}

}  // namespace

AperyTable build_apery(std::span<const std::int64_t> generators, std::int64_t modulus_cap) {
    AperyTable table;
    table.instance = make_instance(generators, modulus_cap);
    const std::int64_t m = table.instance.modulus;
    const auto& gens = table.instance.sorted;

    constexpr std::int64_t kUnset = -1;
    table.least.assign(static_cast<std::size_t>(m), kUnset);
    table.pred.assign(static_cast<std::size_t>(m), -1);

    // Label-setting shortest paths on residues mod m; the least values are
    // unique even though predecessors need not be.
    using Entry = std::pair<std::int64_t, std::int64_t>;  // (value, residue)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    table.least[0] = 0;
    heap.emplace(0, 0);
    while (!heap.empty()) {
        auto [val, r] = heap.top();
        heap.pop();
        if (val != table.least[static_cast<std::size_t>(r)]) continue;
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            const std::int64_t g = gens[gi];
            if (g == m) continue;  // self-loop
            const std::int64_t nv = checked_add(val, g);
            const std::int64_t nr = nv % m;
            auto& slot = table.least[static_cast<std::size_t>(nr)];
            if (slot == kUnset || nv < slot) {
                slot = nv;
                table.pred[static_cast<std::size_t>(nr)] = static_cast<std::int32_t>(gi);
                heap.emplace(nv, nr);
            }
        }
    }
    // gcd 1 guarantees every residue is reachable.
    for (std::int64_t v : table.least)
        if (v == kUnset) throw std::logic_error("apery: unreachable residue");
    return table;
}

std::int64_t frobenius_number(const AperyTable& table) {
    const std::int64_t top = *std::max_element(table.least.begin(), table.least.end());
    return top - table.instance.modulus;
}

std::int64_t frobenius_number(std::span<const std::int64_t> generators,
                              std::int64_t modulus_cap) {
    return frobenius_number(build_apery(generators, modulus_cap));
}

std::optional<std::vector<std::int64_t>> represent(const AperyTable& table, std::int64_t n) {
    if (n < 0) throw std::invalid_argument("represent: n must be nonnegative");
    if (!table.representable(n)) return std::nullopt;
    const std::int64_t m = table.instance.modulus;
    const auto& gens = table.instance.sorted;

    std::vector<std::int64_t> by_sorted(gens.size(), 0);
    std::int64_t r = n % m;
    std::int64_t remaining = table.least[static_cast<std::size_t>(r)];
    while (r != 0) {
        const std::int32_t gi = table.pred[static_cast<std::size_t>(r)];
        ++by_sorted[static_cast<std::size_t>(gi)];
        remaining -= gens[static_cast<std::size_t>(gi)];
        r = ((remaining % m) + m) % m;
    }
    // Whatever is left above the least value in this class is a multiple of m.
    by_sorted[0] += (n - table.least[static_cast<std::size_t>(n % m)]) / m;

    // Map back onto the caller's generator order (first occurrence wins).
    std::vector<std::int64_t> coeffs(table.instance.generators.size(), 0);
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        if (by_sorted[gi] == 0) continue;
        const auto it = std::find(table.instance.generators.begin(),
                                  table.instance.generators.end(), gens[gi]);
        coeffs[static_cast<std::size_t>(it - table.instance.generators.begin())] = by_sorted[gi];
    }
    return coeffs;
}

std::optional<std::vector<std::int64_t>> represent(std::int64_t n,
                                                   std::span<const std::int64_t> generators,
                                                   std::int64_t modulus_cap) {
    return represent(build_apery(generators, modulus_cap), n);
}

std::int64_t gap_count(const AperyTable& table) {
    const std::int64_t m = table.instance.modulus;
    std::int64_t gaps = 0;
    for (std::int64_t r = 1; r < m; ++r)
        gaps += (table.least[static_cast<std::size_t>(r)] - r) / m;
    return gaps;
}

std::int64_t gap_count(std::span<const std::int64_t> generators, std::int64_t modulus_cap) {
    return gap_count(build_apery(generators, modulus_cap));
}

}  // namespace frobpq
