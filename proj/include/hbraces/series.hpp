#pragma once

#include <cstddef>
#include <random>
#include <string_view>
#include <vector>

#include "hbraces/scalar.hpp"

namespace hbraces {

/// How the stored coefficients relate to the series.
/// factorial: f(a) = sum f_k a^k / k!   (commutative side)
/// plain:     f(a) = sum f_k a^k        (noncommutative side)
enum class Convention { factorial, plain };

/// One-variable formal power series without constant term, truncated after
/// a^N. Coefficients are indexed from 1.
class TruncatedSeries {
public:
    TruncatedSeries(std::vector<Scalar> coeffs, Convention convention);

    /// Builds a series from literal coefficients of a^1..a^N, storing them in
    /// the requested convention.
    static TruncatedSeries from_plain(const std::vector<Scalar>& plain, Convention convention);

    std::size_t order() const { return coeffs_.size(); }
    Convention convention() const { return convention_; }

    /// Stored coefficient f_k, 1 <= k <= order.
    const Scalar& operator[](std::size_t k) const;
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    /// Literal coefficients of a^1..a^N regardless of convention.
    std::vector<Scalar> plain_coefficients() const;
    TruncatedSeries with_convention(Convention convention) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

private:
    std::vector<Scalar> coeffs_;
    Convention convention_;
};

inline constexpr std::size_t default_order = 16;

enum class Preset { exp_minus_one, log_one_plus, geometric, alt_geometric, identity };

/// Accepts the enumerator names with '_' or '-'. Throws UsageError otherwise.
Preset parse_preset(std::string_view name);
std::string_view preset_name(Preset p);
Convention parse_convention(std::string_view name);

TruncatedSeries preset(Preset name, std::size_t order, Convention convention);

/// outer(inner(a)) truncated at the common order. Both series must share
/// order and convention.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse by order-by-order solving. Throws SingularSeries
/// when the linear coefficient vanishes.
TruncatedSeries invert(const TruncatedSeries& f);

/// Pullback coefficients for a pair (f, g = f^{-1}).
///
/// Factorial convention: c_r = r-th derivative at 0 of g'(f(a)), r = 0..R.
/// c_r weights the terms nabla(i generators) * (r remaining generators).
///
/// Plain convention: the ordered analogue needs two indices. d(p, q) is the
/// weight of a_1..a_p nabla(...) (q trailing generators), p + q <= R, and is
/// the a^p b^q coefficient of (a - b) / (f(a) - f(b)). d(0, 0) = g_1.
class CoefficientVector {
public:
    CoefficientVector(std::vector<Scalar> values);
    CoefficientVector(std::vector<std::vector<Scalar>> split);

    Convention convention() const { return convention_; }
    /// Largest total index R covered.
    std::size_t max_index() const;

    /// c_r (factorial convention only).
    const Scalar& operator[](std::size_t r) const;
    const std::vector<Scalar>& values() const;
    /// d(p, q); for the factorial convention this is c_{p+q}.
    const Scalar& split(std::size_t p, std::size_t q) const;

    friend bool operator==(const CoefficientVector&, const CoefficientVector&) = default;

private:
    Convention convention_;
    std::vector<Scalar> values_;
    std::vector<std::vector<Scalar>> split_;
};

/// Series route: differentiation and composition (factorial) or a bivariate
/// reciprocal (plain). Verifies g == invert(f); requires R < order.
CoefficientVector c_from_series(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t max_r);

/// Enumerative route for c_r over compositions of r (factorial convention):
/// sum_k sum_{i_2+..+i_k=r} g_k f_{i_2}..f_{i_k}/(k-1)! * r!/(i_2!..i_k!),
/// and g_1 for r = 0.
Scalar c_closed_form(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t r);

/// Enumerative route for d(p, q) (plain convention): sum over compositions
/// alpha of p and beta of q of g_{|alpha|+|beta|+1} prod f_alpha prod f_beta.
Scalar split_closed_form(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t p, std::size_t q);

/// sum_{k>=2} sum_{i_2+..+i_k=r} (-1)^{k-1} r!/(i_2!..i_k!), r >= 1.
Scalar alternating_multinomial_sum(std::size_t r);

/// Invertible series with small random rational coefficients.
TruncatedSeries random_invertible_series(std::size_t order, Convention convention, std::mt19937_64& rng);

} // namespace hbraces
