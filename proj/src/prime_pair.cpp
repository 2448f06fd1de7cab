#include "frobpq/prime_pair.hpp"

#include <string>

namespace frobpq {

namespace {

[[noreturn]] void bad_pair(const std::string& why) {
    throw std::invalid_argument("prime pair: " + why);
}

void check_invariants(const PrimePair& r) {
    // Division identities and the structural facts the rest of the code
    // relies on. Violations here are construction bugs, not bad input.
    if (r.q != r.kappa * r.p + r.lambda || r.lambda < 1 || r.lambda > r.p - 1)
        throw std::logic_error("prime pair: division identity for q failed");
    if (r.q_half != r.kappa_half * r.p_half + r.lambda_half || r.lambda_half < 0 ||
        r.lambda_half > r.p_half - 1)
        throw std::logic_error("prime pair: division identity for q_half failed");
    if ((r.kappa + r.lambda) % 2 == 0)
        throw std::logic_error("prime pair: kappa and lambda must have opposite parity");
    if (r.kappa_half < r.kappa)
        throw std::logic_error("prime pair: kappa_half < kappa");
    if (2 * r.lambda_half != r.kappa + r.lambda - 1 - 2 * (r.kappa_half - r.kappa) * r.p_half)
        throw std::logic_error("prime pair: lambda_half identity failed");
    if (r.kappa + r.lambda < r.p) {
        if (r.kappa_half != r.kappa || r.lambda_half < 1)
            throw std::logic_error("prime pair: small-sum structure failed");
    }
    if (r.p == 3 && r.kappa + r.lambda < 3)
        throw std::logic_error("prime pair: p=3 must have kappa+lambda >= 3");
}

}  // namespace

PrimePair make_prime_pair(std::int64_t p, std::int64_t q) {
    if (p <= 2 || !is_prime(static_cast<std::uint64_t>(p)))
        bad_pair("p = " + std::to_string(p) + " is not an odd prime");
    if (q <= 2 || !is_prime(static_cast<std::uint64_t>(q)))
        bad_pair("q = " + std::to_string(q) + " is not an odd prime");
    if (p >= q) bad_pair("requires p < q");

    PrimePair r;
    r.p = p;
    r.q = q;
    r.p_half = (p - 1) / 2;
    r.q_half = (q - 1) / 2;
    r.kappa = q / p;
    r.lambda = q % p;  // q prime, p < q: never 0
    r.kappa_half = r.q_half / r.p_half;
    r.lambda_half = r.q_half % r.p_half;
    check_invariants(r);
    return r;
}

Weights weights_of(const PrimePair& pair) {
    Weights w;
    w.d0 = checked_mul(pair.p, pair.q);
    w.d1 = checked_mul(pair.p_half, pair.q);
    w.d2 = checked_mul(pair.p, pair.q_half);
    w.d3 = (w.d0 - 1) / 2;
    return w;
}

Quadruple add(const Quadruple& a, const Quadruple& b) {
    return {checked_add(a.x, b.x), checked_add(a.y, b.y), checked_add(a.z, b.z),
            checked_add(a.w, b.w)};
}

Quadruple scale(std::int64_t k, const Quadruple& a) {
    return {checked_mul(k, a.x), checked_mul(k, a.y), checked_mul(k, a.z), checked_mul(k, a.w)};
}

std::int64_t linear_form(const Weights& w, const Quadruple& q) {
    std::int64_t acc = checked_mul(q.x, w.d0);
    acc = checked_add(acc, checked_mul(q.y, w.d1));
    acc = checked_add(acc, checked_mul(q.z, w.d2));
    acc = checked_add(acc, checked_mul(q.w, w.d3));
    return acc;
}

Landmarks landmarks_of(const PrimePair& pair) {
    const Weights w = weights_of(pair);
    Landmarks m;
    m.g_a = linear_form(w, {pair.p_half - 1, pair.p - 1, pair.kappa, -1});
    m.g_b = checked_sub(m.g_a, checked_mul(pair.lambda, w.d3));
    m.g_c = checked_sub(m.g_a, checked_mul(pair.p - 3, w.d3));
    return m;
}

std::string_view class_name(PairClass cls) {
    switch (cls) {
        case PairClass::KappaLambdaLarge: return "KappaLambdaLarge";
        case PairClass::TypeTwoSmall: return "TypeTwoSmall";
        case PairClass::TypeTwoLarge: return "TypeTwoLarge";
        case PairClass::TypeOneSmall: return "TypeOneSmall";
        case PairClass::TypeOneLarge: return "TypeOneLarge";
    }
    return "?";
}

std::string_view class_csv_label(PairClass cls) {
    return cls == PairClass::TypeOneLarge ? std::string_view{"white"} : class_name(cls);
}

Classification classify(const PrimePair& pair) {
    const std::int64_t sum = pair.kappa + pair.lambda;
    if (sum >= pair.p) return {PairClass::KappaLambdaLarge, std::nullopt};

    // Here p > 3, lambda <= p-3, lambda_half >= 1 and kappa_half == kappa.
    const std::int64_t tau = pair.lambda / (pair.p - pair.lambda);
    if (tau < 0 || tau >= pair.lambda)
        throw std::logic_error("classify: tau out of range");
    // Type II iff p_half/lambda_half <= (tau+2)/(tau+1), compared exactly.
    const bool type_two =
        checked_mul(pair.p_half, tau + 1) <= checked_mul(pair.lambda_half, tau + 2);
    const bool small = sum <= pair.p - pair.lambda;
    PairClass cls;
    if (type_two)
        cls = small ? PairClass::TypeTwoSmall : PairClass::TypeTwoLarge;
    else
        cls = small ? PairClass::TypeOneSmall : PairClass::TypeOneLarge;
    return {cls, tau};
}

bool Prediction::contains(std::int64_t g) const {
    if (kind == Kind::Exact) return g == lo;
    const bool above = lo_inclusive ? g >= lo : g > lo;
    const bool below = hi_inclusive ? g <= hi : g < hi;
    return above && below;
}

Prediction predict_frobenius(const PrimePair& pair) {
    const Landmarks m = landmarks_of(pair);
    Prediction pr;
    // The twin / p=3 exact value is the strongest statement and wins over
    // everything else that may simultaneously apply; consistency of the
    // overlap is asserted by the verification suite.
    if (pair.twin() || pair.p == 3) {
        pr.kind = Prediction::Kind::Exact;
        pr.lo = pr.hi = m.g_c;
        pr.source = "twin-or-p3 exact lower landmark";
        return pr;
    }
    const Classification c = classify(pair);
    switch (c.cls) {
        case PairClass::KappaLambdaLarge:
            pr.kind = Prediction::Kind::Exact;
            pr.lo = pr.hi = m.g_a;
            pr.source = "kappa+lambda large exact upper landmark";
            break;
        case PairClass::TypeTwoSmall:
            pr.kind = Prediction::Kind::Exact;
            pr.lo = pr.hi = m.g_b;
            pr.source = "type II small exact middle landmark";
            break;
        case PairClass::TypeTwoLarge:
            pr.kind = Prediction::Kind::Interval;
            pr.lo = m.g_b;
            pr.hi = m.g_a;
            pr.lo_inclusive = false;
            pr.hi_inclusive = false;
            pr.source = "type II large open bracket";
            break;
        case PairClass::TypeOneSmall:
            pr.kind = Prediction::Kind::Interval;
            pr.lo = m.g_c;
            pr.hi = m.g_b;
            pr.lo_inclusive = true;
            pr.hi_inclusive = false;
            pr.source = "type I small half-open bracket";
            break;
        case PairClass::TypeOneLarge:
            pr.kind = Prediction::Kind::Interval;
            pr.lo = m.g_c;
            pr.hi = m.g_a;
            pr.lo_inclusive = true;
            pr.hi_inclusive = false;
            pr.source = "unresolved region universal bracket";
            break;
    }
    return pr;
}

std::optional<std::int64_t> nu_formula(const PrimePair& pair) {
    if (pair.p <= 3) return std::nullopt;
    const std::int64_t pq = checked_mul(pair.p, pair.q);
    if (pair.kappa_lambda_large() && pair.q != 2 * pair.p - 1 && pair.q != 3 * pair.p - 2) {
        return checked_add(checked_sub(landmarks_of(pair).g_a, pq), 1);
    }
    if (pair.twin()) {
        const std::int64_t f =
            linear_form(weights_of(pair), {0, pair.p - 1, 1, 0});
        return checked_add(checked_sub(f, pq), 1);
    }
    return std::nullopt;
}

NuBounds nu_bounds(const PrimePair& pair, std::int64_t g) {
    const std::int64_t pq = checked_mul(pair.p, pair.q);
    return {checked_add(checked_sub(g, pq), 1), g};
}

}  // namespace frobpq
