#include "hbraces/series.hpp"

#include <string>

#include "hbraces/combinatorics.hpp"
#include "hbraces/error.hpp"

namespace hbraces {

namespace {

// Dense truncated polynomials, index = power of a.
using Poly = std::vector<Scalar>;

Poly mul_trunc(const Poly& a, const Poly& b, std::size_t max_degree)
{
    Poly out(max_degree + 1);
    for (std::size_t i = 0; i < a.size() && i <= max_degree; ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j)
            if (!b[j].is_zero())
                out[i + j] += a[i] * b[j];
    }
    return out;
}

// outer(inner(a)) by Horner; outer may carry a constant term, inner must not.
Poly compose_poly(const Poly& outer, const Poly& inner, std::size_t max_degree)
{
    Poly r(max_degree + 1);
    for (std::size_t k = outer.size(); k-- > 0;) {
        r = mul_trunc(r, inner, max_degree);
        r[0] += outer[k];
    }
    return r;
}

Poly with_zero_constant(const std::vector<Scalar>& coeffs)
{
    Poly p(coeffs.size() + 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        p[k + 1] = coeffs[k];
    return p;
}

void require_same_shape(const TruncatedSeries& a, const TruncatedSeries& b, const char* what)
{
    if (a.order() != b.order())
        throw ContractViolation(std::string(what) + ": truncation orders differ");
    if (a.convention() != b.convention())
        throw ContractViolation(std::string(what) + ": coefficient conventions differ");
}

} // namespace

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs, Convention convention)
    : coeffs_(std::move(coeffs)), convention_(convention)
{
    if (coeffs_.empty())
        throw ContractViolation("series needs truncation order >= 1");
}

TruncatedSeries TruncatedSeries::from_plain(const std::vector<Scalar>& plain, Convention convention)
{
    std::vector<Scalar> stored = plain;
    if (convention == Convention::factorial)
        for (std::size_t k = 1; k <= stored.size(); ++k)
            stored[k - 1] *= Scalar::factorial(static_cast<unsigned>(k));
    return TruncatedSeries(std::move(stored), convention);
}

const Scalar& TruncatedSeries::operator[](std::size_t k) const
{
    if (k == 0 || k > coeffs_.size())
        throw InsufficientOrder("series coefficient " + std::to_string(k) + " is outside truncation order " +
                                std::to_string(coeffs_.size()));
    return coeffs_[k - 1];
}

std::vector<Scalar> TruncatedSeries::plain_coefficients() const
{
    std::vector<Scalar> plain = coeffs_;
    if (convention_ == Convention::factorial)
        for (std::size_t k = 1; k <= plain.size(); ++k)
            plain[k - 1] /= Scalar::factorial(static_cast<unsigned>(k));
    return plain;
}

TruncatedSeries TruncatedSeries::with_convention(Convention convention) const
{
    return from_plain(plain_coefficients(), convention);
}

Preset parse_preset(std::string_view name)
{
    std::string n(name);
    for (char& c : n)
        if (c == '-')
            c = '_';
    if (n == "exp_minus_one")
        return Preset::exp_minus_one;
    if (n == "log_one_plus")
        return Preset::log_one_plus;
    if (n == "geometric")
        return Preset::geometric;
    if (n == "alt_geometric")
        return Preset::alt_geometric;
    if (n == "identity")
        return Preset::identity;
    throw UsageError("unknown series preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset p)
{
    switch (p) {
    case Preset::exp_minus_one: return "exp_minus_one";
    case Preset::log_one_plus: return "log_one_plus";
    case Preset::geometric: return "geometric";
    case Preset::alt_geometric: return "alt_geometric";
    case Preset::identity: return "identity";
    }
    return "?";
}

Convention parse_convention(std::string_view name)
{
    if (name == "factorial")
        return Convention::factorial;
    if (name == "plain")
        return Convention::plain;
    throw UsageError("unknown coefficient convention '" + std::string(name) + "'");
}

TruncatedSeries preset(Preset name, std::size_t order, Convention convention)
{
    if (order == 0)
        throw UsageError("series order must be at least 1");
    std::vector<Scalar> plain(order);
    for (std::size_t k = 1; k <= order; ++k) {
        const long kk = static_cast<long>(k);
        switch (name) {
        case Preset::exp_minus_one:
            plain[k - 1] = Scalar(1) / Scalar::factorial(static_cast<unsigned>(k));
            break;
        case Preset::log_one_plus:
            plain[k - 1] = sign_power(kk + 1) * Scalar(1, kk);
            break;
        case Preset::geometric:
            plain[k - 1] = 1;
            break;
        case Preset::alt_geometric:
            plain[k - 1] = sign_power(kk + 1);
            break;
        case Preset::identity:
            plain[k - 1] = k == 1 ? 1 : 0;
            break;
        }
    }
    return TruncatedSeries::from_plain(plain, convention);
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner)
{
    require_same_shape(outer, inner, "compose");
    const std::size_t n = outer.order();
    Poly result = compose_poly(with_zero_constant(outer.plain_coefficients()),
                               with_zero_constant(inner.plain_coefficients()), n);
    return TruncatedSeries::from_plain(std::vector<Scalar>(result.begin() + 1, result.end()), outer.convention());
}

TruncatedSeries invert(const TruncatedSeries& f)
{
    if (f[1].is_zero())
        throw SingularSeries("series has zero linear coefficient and no compositional inverse");
    const std::size_t n = f.order();
    const Poly fp = with_zero_constant(f.plain_coefficients());
    Poly g(n + 1);
    g[1] = Scalar(1) / fp[1];
    for (std::size_t m = 2; m <= n; ++m) {
        // f(g) with g_m still zero; g_m enters the a^m coefficient only as f_1 g_m
        Poly fg = compose_poly(fp, g, m);
        g[m] = -fg[m] / fp[1];
    }
    return TruncatedSeries::from_plain(std::vector<Scalar>(g.begin() + 1, g.end()), f.convention());
}

CoefficientVector::CoefficientVector(std::vector<Scalar> values)
    : convention_(Convention::factorial), values_(std::move(values))
{
    if (values_.empty())
        throw ContractViolation("coefficient vector needs c_0");
}

CoefficientVector::CoefficientVector(std::vector<std::vector<Scalar>> split)
    : convention_(Convention::plain), split_(std::move(split))
{
    if (split_.empty())
        throw ContractViolation("coefficient table needs d(0,0)");
    for (std::size_t p = 0; p < split_.size(); ++p)
        if (split_[p].size() != split_.size() - p)
            throw ContractViolation("coefficient table must be triangular");
}

std::size_t CoefficientVector::max_index() const
{
    return convention_ == Convention::factorial ? values_.size() - 1 : split_.size() - 1;
}

const Scalar& CoefficientVector::operator[](std::size_t r) const
{
    if (convention_ != Convention::factorial)
        throw ContractViolation("c_r is only defined for the factorial convention; use split(p, q)");
    if (r >= values_.size())
        throw InsufficientOrder("c_" + std::to_string(r) + " was not computed");
    return values_[r];
}

const std::vector<Scalar>& CoefficientVector::values() const
{
    if (convention_ != Convention::factorial)
        throw ContractViolation("c_r is only defined for the factorial convention");
    return values_;
}

const Scalar& CoefficientVector::split(std::size_t p, std::size_t q) const
{
    if (convention_ == Convention::factorial)
        return (*this)[p + q];
    if (p + q >= split_.size())
        throw InsufficientOrder("d(" + std::to_string(p) + "," + std::to_string(q) + ") was not computed");
    return split_[p][q];
}

CoefficientVector c_from_series(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t max_r)
{
    require_same_shape(f, g, "c_from_series");
    if (max_r >= f.order())
        throw InsufficientOrder("c_r up to r = " + std::to_string(max_r) + " needs truncation order > " +
                                std::to_string(max_r));
    if (invert(f) != g)
        throw ContractViolation("c_from_series: g is not the compositional inverse of f");

    if (f.convention() == Convention::factorial) {
        // g'(x) = sum_k g_k x^{k-1} / (k-1)!
        Poly dg(g.order());
        for (std::size_t k = 1; k <= g.order(); ++k)
            dg[k - 1] = g[k] / Scalar::factorial(static_cast<unsigned>(k - 1));
        Poly composed = compose_poly(dg, with_zero_constant(f.plain_coefficients()), max_r);
        std::vector<Scalar> c(max_r + 1);
        for (std::size_t r = 0; r <= max_r; ++r)
            c[r] = composed[r] * Scalar::factorial(static_cast<unsigned>(r));
        return CoefficientVector(std::move(c));
    }

    // (f(a) - f(b)) / (a - b) = sum_i f_i h_{i-1}(a, b); invert it as a
    // bivariate series, total degree <= R.
    const std::size_t R = max_r;
    auto divided = [&](std::size_t p, std::size_t q) -> const Scalar& { return f[p + q + 1]; };
    std::vector<std::vector<Scalar>> d(R + 1);
    for (std::size_t p = 0; p <= R; ++p)
        d[p].resize(R + 1 - p);
    const Scalar lead = divided(0, 0);
    d[0][0] = Scalar(1) / lead;
    for (std::size_t total = 1; total <= R; ++total) {
        for (std::size_t p = 0; p <= total; ++p) {
            const std::size_t q = total - p;
            Scalar acc;
            for (std::size_t dp = 0; dp <= p; ++dp)
                for (std::size_t dq = 0; dq <= q; ++dq)
                    if (dp + dq > 0)
                        acc += divided(dp, dq) * d[p - dp][q - dq];
            d[p][q] = -acc / lead;
        }
    }
    return CoefficientVector(std::move(d));
}

Scalar c_closed_form(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t r)
{
    require_same_shape(f, g, "c_closed_form");
    if (f.convention() != Convention::factorial)
        throw ContractViolation("c_closed_form uses the factorial convention; see split_closed_form");
    if (r >= f.order())
        throw InsufficientOrder("c_" + std::to_string(r) + " needs truncation order > " + std::to_string(r));
    if (r == 0)
        return g[1];
    const Scalar r_fact = Scalar::factorial(static_cast<unsigned>(r));
    Scalar total;
    for (const auto& comp : compositions(r)) {
        const std::size_t k = comp.size() + 1;
        Scalar term = g[k] / Scalar::factorial(static_cast<unsigned>(k - 1)) * r_fact;
        for (std::size_t part : comp)
            term = term * f[part] / Scalar::factorial(static_cast<unsigned>(part));
        total += term;
    }
    return total;
}

Scalar split_closed_form(const TruncatedSeries& f, const TruncatedSeries& g, std::size_t p, std::size_t q)
{
    require_same_shape(f, g, "split_closed_form");
    if (f.convention() != Convention::plain)
        throw ContractViolation("split_closed_form uses the plain convention; see c_closed_form");
    if (p + q >= f.order())
        throw InsufficientOrder("d(p,q) with p + q = " + std::to_string(p + q) + " needs truncation order > " +
                                std::to_string(p + q));
    const auto left = compositions(p);
    const auto right = compositions(q);
    Scalar total;
    for (const auto& alpha : left) {
        Scalar fa = 1;
        for (std::size_t part : alpha)
            fa *= f[part];
        for (const auto& beta : right) {
            Scalar term = g[alpha.size() + beta.size() + 1] * fa;
            for (std::size_t part : beta)
                term *= f[part];
            total += term;
        }
    }
    return total;
}

Scalar alternating_multinomial_sum(std::size_t r)
{
    if (r == 0)
        throw ContractViolation("alternating_multinomial_sum is defined for r >= 1");
    const Scalar r_fact = Scalar::factorial(static_cast<unsigned>(r));
    Scalar total;
    for (const auto& comp : compositions(r)) {
        Scalar term = sign_power(static_cast<long>(comp.size())) * r_fact; // k - 1 = parts
        for (std::size_t part : comp)
            term /= Scalar::factorial(static_cast<unsigned>(part));
        total += term;
    }
    return total;
}

TruncatedSeries random_invertible_series(std::size_t order, Convention convention, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Scalar> coeffs(order);
    for (std::size_t k = 0; k < order; ++k) {
        long p = num(rng);
        while (k == 0 && p == 0)
            p = num(rng);
        coeffs[k] = Scalar(p, den(rng));
    }
    return TruncatedSeries(std::move(coeffs), convention);
}

} // namespace hbraces
