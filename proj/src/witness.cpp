#include "frobpq/witness.hpp"

#include <string>

namespace frobpq {

namespace {

std::string show(const Quadruple& q) {
    return "(" + std::to_string(q.x) + "," + std::to_string(q.y) + "," + std::to_string(q.z) +
           "," + std::to_string(q.w) + ")";
}

// Terminal check for every constructive branch: the result must be
// componentwise nonnegative and evaluate to the announced target.
Quadruple finish(const PrimePair& pair, const Quadruple& q, std::int64_t target,
                 const char* branch) {
    if (!q.nonnegative() || linear_form(weights_of(pair), q) != target)
        throw std::logic_error("witness construction failed in branch '" + std::string(branch) +
                               "' for p=" + std::to_string(pair.p) + " q=" + std::to_string(pair.q) +
                               ": got " + show(q) + ", target " + std::to_string(target));
    return q;
}

}  // namespace

KernelBasis kernel_basis(const PrimePair& pair) {
    return {
        {pair.p_half, -pair.p, 0, 0},
        {pair.p_half, 0, 1, -pair.p},
        {pair.q_half, 1, 0, -pair.q},
    };
}

Quadruple shift(const Quadruple& quad, const KernelBasis& basis, std::int64_t alpha,
                std::int64_t beta, std::int64_t gamma) {
    Quadruple r = add(quad, scale(alpha, basis.e0));
    r = add(r, scale(beta, basis.e1));
    return add(r, scale(gamma, basis.e2));
}

Quadruple correction(const KernelBasis& basis, std::int64_t u, std::int64_t v) {
    return add(scale(u - 1, basis.e2), scale(v + 1, basis.e1));
}

ParamTriple param_triple(const PrimePair& pair, std::int64_t t) {
    const std::int64_t d1 = checked_mul(pair.p_half, pair.q);
    if (t < 0 || t >= d1)
        throw std::invalid_argument("param_triple: t out of [0, d1-1]");
    ParamTriple r;
    r.a = t / pair.q_half;
    const std::int64_t rest = t % pair.q_half;
    r.b = rest / pair.p_half;
    r.c = rest % pair.p_half;

    // The decomposition bounds; failures would mean the division above does
    // not realize the maximal-a form.
    if (r.a > pair.p - 1 || (r.a == pair.p - 1 && r.b != 0) || r.b > pair.kappa_half ||
        (r.b == pair.kappa_half && r.c >= pair.lambda_half) ||
        (r.b >= pair.kappa && r.a > pair.p - 2))
        throw std::logic_error("param_triple: decomposition bounds violated for t=" +
                               std::to_string(t));
    return r;
}

Quadruple represent_above_ga(const PrimePair& pair, std::int64_t t) {
    const auto [a, b, c] = param_triple(pair, t);
    const std::int64_t target =
        checked_add(checked_add(landmarks_of(pair).g_a, 1), t);

    Quadruple q{c, pair.p - 1 - a, pair.kappa - 1 - b, pair.p - 3 - 2 * c + a + b};
    if (q.z >= 0) return finish(pair, q, target, "base");

    const KernelBasis basis = kernel_basis(pair);
    const std::int64_t s = b - pair.kappa;
    const std::int64_t gap = pair.kappa_half - pair.kappa;
    if (s < gap - 1)
        return finish(pair, add(q, correction(basis, 1, s)), target, "s small");
    if (s == gap - 1) {
        if (q.w >= (s + 1) * pair.p)
            return finish(pair, add(q, correction(basis, 1, s)), target, "s boundary, w large");
        return finish(pair, add(q, correction(basis, 0, pair.kappa_half - 1)), target,
                      "s boundary, w small");
    }
    // s == gap
    return finish(pair, add(q, correction(basis, 0, pair.kappa_half)), target, "s full");
}

std::optional<Quadruple> witness_ga(const PrimePair& pair) {
    if (pair.kappa_lambda_large()) return std::nullopt;
    Quadruple q{pair.p_half - 1 - pair.lambda_half, pair.p - 2, 2 * pair.kappa, pair.lambda - 1};
    return finish(pair, q, landmarks_of(pair).g_a, "ga witness");
}

Quadruple represent_above_gb(const PrimePair& pair, std::int64_t t) {
    if (pair.kappa + pair.lambda > pair.p - pair.lambda)
        throw std::invalid_argument("represent_above_gb: requires kappa+lambda <= p-lambda");
    if (pair.lambda > pair.p - 3)
        throw std::logic_error("represent_above_gb: lambda <= p-3 must hold here");
    const auto [a, b, c] = param_triple(pair, t);
    const std::int64_t target =
        checked_add(checked_add(landmarks_of(pair).g_b, 1), t);

    // kappa_half == kappa in this region, so the correction quadruple
    // e(0, kappa_half - 1) takes the closed form below.
    const Quadruple main_eq{-pair.lambda_half, -1, pair.kappa, pair.lambda};

    Quadruple q{c, pair.p - 1 - a, pair.kappa - 1 - b,
                pair.p - 3 - 2 * c + a + b - pair.lambda};
    if (q.z >= 0) {
        if (q.w >= 0) return finish(pair, q, target, "base");
        if (c < pair.lambda_half)
            throw std::logic_error("represent_above_gb: c < lambda_half with negative w");
        return finish(pair, add(q, main_eq), target, "w lift");
    }

    // z < 0 forces b == kappa and c < lambda_half.
    Quadruple r = add(q, correction(kernel_basis(pair), 0, pair.kappa_half));
    if (r.w >= 0) return finish(pair, r, target, "z lift");
    return finish(pair, add(r, main_eq), target, "double lift");
}

std::optional<Quadruple> gb_witness(const PrimePair& pair) {
    if (pair.kappa_lambda_large())
        throw std::invalid_argument("gb_witness: requires kappa + lambda < p");
    const Classification cl = classify(pair);
    if (cl.cls == PairClass::TypeTwoSmall || cl.cls == PairClass::TypeTwoLarge)
        return std::nullopt;
    const std::int64_t tau = *cl.tau;
    // General form with t = tau, l = tau + 2.
    Quadruple q{pair.p_half - 1 - (tau + 2) * pair.lambda_half + tau * pair.p_half,
                pair.p - tau - 3, (tau + 3) * pair.kappa + tau,
                -tau * pair.p + (tau + 1) * pair.lambda - 1};
    return finish(pair, q, landmarks_of(pair).g_b, "gb witness");
}

Quadruple represent_above_gc_twin(const PrimePair& pair, std::int64_t t) {
    if (!pair.twin())
        throw std::invalid_argument("represent_above_gc_twin: requires q = p + 2");
    const std::int64_t d1 = checked_mul(pair.p_half, pair.q);
    if (t < 0 || t >= d1)
        throw std::invalid_argument("represent_above_gc_twin: t out of [0, d1-1]");
    const std::int64_t target =
        checked_add(checked_add(landmarks_of(pair).g_c, 1), t);
    const std::int64_t ph = pair.p_half;

    // t = a*q_half + (b + c), a maximal, so b + c <= p_half (q_half = p_half+1).
    const std::int64_t a = t / pair.q_half;
    const std::int64_t m = t % pair.q_half;

    if (a <= ph) {
        // Put everything into b; then (0, p-1-a-b, b, a) is nonnegative.
        Quadruple q{0, pair.p - 1 - a - m, m, a};
        return finish(pair, q, target, "twin low");
    }
    // a = p_half + s with 1 <= s <= p_half. Writing b = p_half - i and
    // c = p_half - k, the coordinates are (p_half-k, i-s, p_half-i, s+2k-p_half)
    // and i + k = 2*p_half - m >= p_half is fixed; i = max(s, i+k-p_half)
    // makes every coordinate nonnegative.
    const std::int64_t s = a - ph;
    const std::int64_t sigma = 2 * ph - m;
    const std::int64_t i = std::max(s, sigma - ph);
    const std::int64_t k = sigma - i;
    Quadruple q{ph - k, i - s, ph - i, s + 2 * k - ph};
    return finish(pair, q, target, "twin high");
}

}  // namespace frobpq
