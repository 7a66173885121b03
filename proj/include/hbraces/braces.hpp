#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hbraces/expr.hpp"
#include "hbraces/series.hpp"

namespace hbraces {

// Closed-form braces. Each *_terms function lists the formula's terms in
// display order before any merging; the Expr versions normalize them.

/// sum_{i=n..1} (-1)^{n-i} sum_{(i,n-i)-unshuffles s} eps(s)
///   nabla(a_s(1)..a_s(i)) a_s(i+1)..a_s(n)          (commutative)
std::vector<RawTerm> koszul_brace_terms(std::span<const Generator> gens);
Expr koszul_brace(std::span<const Generator> gens);

/// n = 1: nabla(a1); n = 2: three terms; n >= 3: the four terms
/// nabla(a1..an) - nabla(a1..a_{n-1}) an - (-1)^|a1| a1 nabla(a2..an)
///   + (-1)^|a1| a1 nabla(a2..a_{n-1}) an              (noncommutative)
std::vector<RawTerm> borjeson_brace_terms(std::span<const Generator> gens);
Expr borjeson_brace(std::span<const Generator> gens);

/// Pullback of nabla over the diffeomorphism with coefficients f, written in
/// closed form.
///
/// Commutative: sum_i sum_s c_{n-i} f_i eps(s) nabla(a_s(1)..a_s(i)) a_s(i+1)..a_s(n).
/// The nabla block of size i leaves r = n - i generators outside, and the
/// weight is c_r with c_0 = g_1 (not c_{n-i+1}).
///
/// Noncommutative: sum over segments [s, s+i) of
/// f_i d(s, n-s-i) (-1)^{|a_1|+..+|a_s|} a_1..a_s nabla(a_{s+1}..a_{s+i}) ...
std::vector<RawTerm> generalized_brace_terms(std::span<const Generator> gens, const TruncatedSeries& f,
                                             const CoefficientVector& c, Flavor flavor);
Expr generalized_brace(std::span<const Generator> gens, const TruncatedSeries& f, const CoefficientVector& c,
                       Flavor flavor);

enum class BraceKind { koszul, borjeson, generalized, trivial };

/// Deliberate corruption of one arity's term list, for sensitivity tests.
struct Mutation {
    enum class Action { flip_sign, drop };
    std::size_t arity = 2;
    std::size_t term = 0; // index into the *_terms list
    Action action = Action::flip_sign;
};

/// A sequence of operations lambda_1, lambda_2, ... of degree +1.
class BraceFamily {
public:
    static BraceFamily koszul();
    static BraceFamily borjeson();
    /// (nabla, 0, 0, ...) in the given flavor.
    static BraceFamily trivial(Flavor flavor);
    static BraceFamily generalized(TruncatedSeries f, CoefficientVector c, Flavor flavor);
    /// generalized() with c computed from f and its inverse.
    static BraceFamily pullback_of(const TruncatedSeries& f, Flavor flavor);

    BraceFamily with_mutation(Mutation m) const;

    BraceKind kind() const { return kind_; }
    Flavor flavor() const { return flavor_; }
    const std::optional<Mutation>& mutation() const { return mutation_; }

    /// Terms of the arity-n operation on gens (n = gens.size() >= 1), with
    /// the mutation applied.
    std::vector<RawTerm> terms(std::span<const Generator> gens) const;
    Expr evaluate(std::span<const Generator> gens) const;

private:
    BraceFamily(BraceKind kind, Flavor flavor) : kind_(kind), flavor_(flavor) {}

    BraceKind kind_;
    Flavor flavor_;
    std::optional<TruncatedSeries> f_;
    std::optional<CoefficientVector> c_;
    std::optional<Mutation> mutation_;
};

} // namespace hbraces
