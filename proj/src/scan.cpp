#include "frobpq/scan.hpp"

#include <algorithm>

namespace frobpq {

std::vector<std::int64_t> odd_primes_upto(std::int64_t limit) {
    std::vector<std::int64_t> primes;
    for (std::int64_t n = 3; n <= limit; n += 2)
        if (is_prime(static_cast<std::uint64_t>(n))) primes.push_back(n);
    return primes;
}

namespace {

PairRecord build_record(std::int64_t p, std::int64_t q, const ScanOptions& opts) {
    PairRecord rec;
    rec.pair = make_prime_pair(p, q);
    rec.weights = weights_of(rec.pair);
    rec.landmarks = landmarks_of(rec.pair);
    rec.cls = classify(rec.pair);
    rec.prediction = predict_frobenius(rec.pair);
    rec.nu_form = nu_formula(rec.pair);

    if (opts.with_oracle) {
        try {
            const std::int64_t gens[] = {rec.weights.d0, rec.weights.d1, rec.weights.d2,
                                         rec.weights.d3};
            rec.g_oracle = frobenius_number(gens, opts.modulus_cap);
        } catch (const resource_error& e) {
            rec.note = e.what();
        }
    }
    if (opts.with_nu_brute && rec.weights.d0 <= opts.nu_pq_cap) {
        try {
            const NuResult nu = nu_cyclic_bruteforce(make_covering(rec.weights.d0),
                                                     {opts.nu_budget, 1});
            if (!nu.all_admissible) rec.nu_brute = nu.value;
        } catch (const resource_error& e) {
            if (!rec.note.empty()) rec.note += "; ";
            rec.note += e.what();
        }
    }

    if (rec.g_oracle) {
        rec.bounds_ok = rec.landmarks.g_c <= *rec.g_oracle && *rec.g_oracle <= rec.landmarks.g_a;
        rec.prediction_ok = rec.prediction.contains(*rec.g_oracle);
    }
    if (rec.nu_form && rec.nu_brute) rec.nu_ok = *rec.nu_form == *rec.nu_brute;
    return rec;
}

std::vector<std::pair<std::int64_t, std::int64_t>> pair_grid(std::int64_t p_max,
                                                             std::int64_t q_max) {
    std::vector<std::pair<std::int64_t, std::int64_t>> grid;
    const auto primes = odd_primes_upto(q_max);
    for (std::int64_t p : primes) {
        if (p > p_max) break;
        for (std::int64_t q : primes)
            if (q > p) grid.emplace_back(p, q);
    }
    return grid;
}

}  // namespace

std::vector<PairRecord> scan_pairs_serial(const ScanOptions& opts) {
    const auto grid = pair_grid(opts.p_max, opts.q_max);
    std::vector<PairRecord> records(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
        records[i] = build_record(grid[i].first, grid[i].second, opts);
    return records;
}

std::vector<PairRecord> scan_pairs(const ScanOptions& opts) {
    if (opts.jobs <= 1) return scan_pairs_serial(opts);
#ifdef _OPENMP
    const auto grid = pair_grid(opts.p_max, opts.q_max);
    std::vector<PairRecord> records(grid.size());
    // Records are independent; index-addressed assembly keeps the output
    // identical to the serial scan for any thread count.
    const std::int64_t total = static_cast<std::int64_t>(grid.size());
#pragma omp parallel for schedule(dynamic) num_threads(opts.jobs)
    for (std::int64_t i = 0; i < total; ++i)
        records[static_cast<std::size_t>(i)] =
            build_record(grid[static_cast<std::size_t>(i)].first,
                         grid[static_cast<std::size_t>(i)].second, opts);
    return records;
#else
    return scan_pairs_serial(opts);
#endif
}

namespace {

void append_opt(std::string& out, const std::optional<std::int64_t>& v) {
    if (v) out += std::to_string(*v);
}

const char* pred_kind_token(const Prediction& p) {
    if (p.kind == Prediction::Kind::Exact) return "exact";
    return p.lo_inclusive ? "closed_open" : "open_open";
}

}  // namespace

std::string records_to_csv(std::span<const PairRecord> records) {
    std::string out =
        "p,q,kappa,lambda,kappa_p,lambda_p,tau,class,d0,d1,d2,d3,"
        "g_a,g_b,g_c,g_oracle,pred_kind,pred_lo,pred_hi,nu_formula,nu_brute\n";
    for (const PairRecord& r : records) {
        out += std::to_string(r.pair.p);
        out += ',';
        out += std::to_string(r.pair.q);
        out += ',';
        out += std::to_string(r.pair.kappa);
        out += ',';
        out += std::to_string(r.pair.lambda);
        out += ',';
        out += std::to_string(r.pair.kappa_half);
        out += ',';
        out += std::to_string(r.pair.lambda_half);
        out += ',';
        append_opt(out, r.cls.tau);
        out += ',';
        out += class_csv_label(r.cls.cls);
        out += ',';
        out += std::to_string(r.weights.d0);
        out += ',';
        out += std::to_string(r.weights.d1);
        out += ',';
        out += std::to_string(r.weights.d2);
        out += ',';
        out += std::to_string(r.weights.d3);
        out += ',';
        out += std::to_string(r.landmarks.g_a);
        out += ',';
        out += std::to_string(r.landmarks.g_b);
        out += ',';
        out += std::to_string(r.landmarks.g_c);
        out += ',';
        append_opt(out, r.g_oracle);
        out += ',';
        out += pred_kind_token(r.prediction);
        out += ',';
        out += std::to_string(r.prediction.lo);
        out += ',';
        out += std::to_string(r.prediction.hi);
        out += ',';
        append_opt(out, r.nu_form);
        out += ',';
        append_opt(out, r.nu_brute);
        out += '\n';
    }
    return out;
}

inline constexpr std::int64_t kMaxFigureLimit = 10'000;

std::string figure1_csv(std::int64_t limit) {
    if (limit < 0 || limit > kMaxFigureLimit)
        throw std::invalid_argument("figure1_csv: limit out of [0, " +
                                    std::to_string(kMaxFigureLimit) + "]");
    ScanOptions opts;
    opts.p_max = limit - 1;
    opts.q_max = limit - 1;
    return records_to_csv(scan_pairs_serial(opts));
}

const CheckResult* SuiteReport::find(std::string_view name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace frobpq
