#pragma once

#include <optional>

#include "frobpq/prime_pair.hpp"

namespace frobpq {

/// Basis of the integer kernel of the linear form:
///   e0 = (p_half, -p, 0, 0),
///   e1 = (p_half, 0, 1, -p),
///   e2 = (q_half, 1, 0, -q).
/// Two integer quadruples evaluate equally under the linear form iff they
/// differ by an integer combination of these three.
struct KernelBasis {
    Quadruple e0, e1, e2;
};

KernelBasis kernel_basis(const PrimePair& pair);

/// quad + alpha*e0 + beta*e1 + gamma*e2; preserves the linear form.
Quadruple shift(const Quadruple& quad, const KernelBasis& basis, std::int64_t alpha,
                std::int64_t beta, std::int64_t gamma);

/// The correction quadruple e(u, v) = (u-1)*e2 + (v+1)*e1.
Quadruple correction(const KernelBasis& basis, std::int64_t u, std::int64_t v);

/// Decomposition t = a*q_half + b*p_half + c with a maximal, b >= 0 and
/// 0 <= c <= p_half - 1. Satisfies: a <= p-1; a = p-1 implies b = 0;
/// b <= kappa_half; b = kappa_half implies c < lambda_half;
/// b >= kappa implies a <= p-2.
struct ParamTriple {
    std::int64_t a = 0, b = 0, c = 0;
};

/// Requires 0 <= t <= d1 - 1.
ParamTriple param_triple(const PrimePair& pair, std::int64_t t);

/// Nonnegative quadruple evaluating to g_a + 1 + t, for any t in
/// [0, d1 - 1]. Starts from the base representation
/// (c, p-1-a, kappa-1-b, p-3-2c+a+b) and, when the third coordinate is
/// negative, applies the correction dictated by s = b - kappa relative to
/// kappa_half - kappa. Throws std::logic_error with the branch trace if the
/// construction ever fails to be nonnegative (it cannot, but the check is
/// the point).
Quadruple represent_above_ga(const PrimePair& pair, std::int64_t t);

/// Nonnegative quadruple evaluating to g_a itself when kappa + lambda < p
/// (namely (p_half-1-lambda_half, p-2, 2*kappa, lambda-1)); absent when
/// kappa + lambda >= p, where g_a is the Frobenius number.
std::optional<Quadruple> witness_ga(const PrimePair& pair);

/// Nonnegative quadruple evaluating to g_b + 1 + t. Only defined under
/// kappa + lambda <= p - lambda; the base fourth coordinate drops by lambda
/// and the quadruple (-lambda_half, -1, kappa, lambda) is added once or
/// twice as needed.
Quadruple represent_above_gb(const PrimePair& pair, std::int64_t t);

/// For kappa + lambda < p only: a nonnegative quadruple evaluating to g_b
/// when the pair is Type I (the general-form solution with t = tau,
/// l = tau + 2), absent when Type II (g_b is then not representable).
std::optional<Quadruple> gb_witness(const PrimePair& pair);

/// Twin pairs only (q = p + 2): a nonnegative quadruple evaluating to
/// g_c + 1 + t via the twin decomposition t = a*q_half + b + c with a
/// maximal and b + c <= p_half, rebalancing b against c when a > p_half.
Quadruple represent_above_gc_twin(const PrimePair& pair, std::int64_t t);

}  // namespace frobpq
