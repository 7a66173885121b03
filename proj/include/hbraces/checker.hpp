#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hbraces/braces.hpp"
#include "hbraces/combinatorics.hpp"
#include "hbraces/expr.hpp"

namespace hbraces {

struct FirstFailure {
    std::size_t arity = 0;
    ParityVector parities;
    /// Nonzero left-hand side, when the check is an identity of expressions.
    std::optional<Expr> residual;
    std::string description;
};

/// Outcome of a verification sweep. passed() iff there is no failure.
struct VerificationReport {
    std::string suite;
    std::vector<std::size_t> checked_arities;
    std::size_t parity_vectors_checked = 0;
    std::optional<FirstFailure> first_failure;

    bool passed() const { return !first_failure.has_value(); }
};

/// lambda(x_1, .., x_k) for homogeneous expression arguments, extended
/// multilinearly: the family is evaluated on placeholder generators of the
/// same degrees, which are then substituted.
Expr apply_brace(const BraceFamily& family, std::span<const Expr> args);

/// Summands eps(s) lambda_j(lambda_i(a_s(1..i)), a_s(i+1..n)) of the L-infinity
/// relation on gens, one per (i, unshuffle) pair.
std::vector<Expr> l_infinity_summands(const BraceFamily& family, std::span<const Generator> gens);
Expr l_infinity_residual(const BraceFamily& family, std::span<const Generator> gens);

/// Summands (-1)^{|a_1|+..+|a_{i-1}|} m_u(a_1..a_{i-1}, m_v(a_i..), ..) of the
/// A-infinity relation on gens.
std::vector<Expr> a_infinity_summands(const BraceFamily& family, std::span<const Generator> gens);
Expr a_infinity_residual(const BraceFamily& family, std::span<const Generator> gens);

/// Every arity 1..n_max and every parity vector in {0,1}^n. The family must
/// produce commutative (L-infinity) or noncommutative (A-infinity) output,
/// otherwise ContractViolation.
VerificationReport check_l_infinity(const BraceFamily& family, std::size_t n_max);
VerificationReport check_a_infinity(const BraceFamily& family, std::size_t n_max);

} // namespace hbraces
