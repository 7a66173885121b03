#include "hbraces/verify.hpp"

#include <charconv>
#include <random>

#include "hbraces/coalgebra.hpp"
#include "hbraces/error.hpp"

namespace hbraces {

Suite parse_suite(std::string_view name)
{
    if (name == "pullback-koszul")
        return Suite::pullback_koszul;
    if (name == "pullback-borjeson")
        return Suite::pullback_borjeson;
    if (name == "pullback-general")
        return Suite::pullback_general;
    if (name == "linf")
        return Suite::linf;
    if (name == "ainf")
        return Suite::ainf;
    if (name == "c-identity")
        return Suite::c_identity;
    if (name == "series-inverse")
        return Suite::series_inverse;
    throw UsageError("unknown verification suite '" + std::string(name) + "'");
}

std::string_view suite_name(Suite s)
{
    switch (s) {
    case Suite::pullback_koszul: return "pullback-koszul";
    case Suite::pullback_borjeson: return "pullback-borjeson";
    case Suite::pullback_general: return "pullback-general";
    case Suite::linf: return "linf";
    case Suite::ainf: return "ainf";
    case Suite::c_identity: return "c-identity";
    case Suite::series_inverse: return "series-inverse";
    }
    return "?";
}

namespace {

std::size_t parse_index(std::string_view text, std::string_view spec)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw UsageError("malformed mutation '" + std::string(spec) + "'");
    return value;
}

} // namespace

Mutation parse_mutation(std::string_view spec)
{
    auto colon = spec.find(':');
    std::string_view head = spec.substr(0, colon);
    std::string_view tail = colon == std::string_view::npos ? std::string_view() : spec.substr(colon + 1);
    Mutation m;
    if (head == "phi2-sign" || head == "b2-sign") {
        m.arity = 2;
        m.term = tail.empty() ? 1 : parse_index(tail, spec);
        m.action = Mutation::Action::flip_sign;
        if (m.term > 2)
            throw UsageError("arity-2 braces have three terms (0..2)");
        return m;
    }
    if (head == "b3-drop-last" && tail.empty()) {
        m.arity = 3;
        m.term = 3;
        m.action = Mutation::Action::drop;
        return m;
    }
    if ((head == "flip" || head == "drop") && !tail.empty()) {
        auto second = tail.find(':');
        if (second == std::string_view::npos)
            throw UsageError("malformed mutation '" + std::string(spec) + "'");
        m.arity = parse_index(tail.substr(0, second), spec);
        m.term = parse_index(tail.substr(second + 1), spec);
        m.action = head == "flip" ? Mutation::Action::flip_sign : Mutation::Action::drop;
        return m;
    }
    throw UsageError("unknown mutation '" + std::string(spec) + "'");
}

namespace {

void require_bound(std::size_t bound, std::size_t order, const char* what)
{
    if (bound == 0)
        throw UsageError(std::string(what) + " must be at least 1");
    if (bound > order)
        throw UsageError(std::string(what) + " exceeds the series truncation order " + std::to_string(order));
}

VerificationReport pullback_sweep(const char* suite, std::size_t n_max, Flavor flavor, const TruncatedSeries& f,
                                  const auto& closed_form)
{
    VerificationReport report;
    report.suite = suite;
    for (std::size_t n = 1; n <= n_max; ++n) {
        report.checked_arities.push_back(n);
        for (const ParityVector& p : all_parity_vectors(n)) {
            ++report.parity_vectors_checked;
            const auto gens = make_generators(p);
            Expr diff = closed_form(gens) - pullback_brace(gens, f, flavor);
            if (!diff.is_zero()) {
                report.first_failure = FirstFailure{n, p, std::move(diff), "closed form minus pullback"};
                return report;
            }
        }
    }
    return report;
}

FirstFailure scalar_failure(std::size_t index, const std::string& description)
{
    FirstFailure f;
    f.arity = index;
    f.description = description;
    return f;
}

VerificationReport pullback_general(const SuiteOptions& o, std::size_t n_max, std::size_t r_max)
{
    VerificationReport report;
    report.suite = "pullback-general";
    std::mt19937_64 rng(o.seed);
    for (std::size_t n = 1; n <= n_max; ++n)
        report.checked_arities.push_back(n);
    for (std::size_t sample = 0; sample < o.samples; ++sample) {
        for (Flavor flavor : {Flavor::commutative, Flavor::noncommutative}) {
            const Convention conv = flavor == Flavor::commutative ? Convention::factorial : Convention::plain;
            const TruncatedSeries f = random_invertible_series(o.order, conv, rng);
            const TruncatedSeries g = invert(f);
            const CoefficientVector c = c_from_series(f, g, o.order - 1);

            // coefficient oracle: enumerative route against the series route
            for (std::size_t r = 0; r <= r_max; ++r) {
                for (std::size_t p = 0; p <= r; ++p) {
                    const bool ok = conv == Convention::factorial ? (p > 0 || c_closed_form(f, g, r) == c[r])
                                                                  : split_closed_form(f, g, p, r - p) == c.split(p, r - p);
                    if (!ok) {
                        report.first_failure = scalar_failure(
                            r, "sample " + std::to_string(sample) + ": enumerated coefficient differs from series at r=" +
                                   std::to_string(r));
                        return report;
                    }
                }
            }
            for (std::size_t n = 1; n <= n_max; ++n) {
                for (const ParityVector& p : all_parity_vectors(n)) {
                    ++report.parity_vectors_checked;
                    const auto gens = make_generators(p);
                    Expr diff = generalized_brace(gens, f, c, flavor) - pullback_brace(gens, f, flavor);
                    if (!diff.is_zero()) {
                        report.first_failure = FirstFailure{
                            n, p, std::move(diff),
                            "sample " + std::to_string(sample) + ": generalized closed form minus pullback"};
                        return report;
                    }
                }
            }
        }
    }
    return report;
}

VerificationReport c_identity(std::size_t r_max, std::size_t order)
{
    VerificationReport report;
    report.suite = "c-identity";
    if (r_max >= order)
        throw UsageError("r-max must be below the series truncation order " + std::to_string(order));
    const auto f = preset(Preset::exp_minus_one, order, Convention::factorial);
    const auto g = preset(Preset::log_one_plus, order, Convention::factorial);
    const CoefficientVector c = c_from_series(f, g, r_max);
    for (std::size_t r = 1; r <= r_max; ++r) {
        report.checked_arities.push_back(r);
        ++report.parity_vectors_checked;
        const Scalar expected = sign_power(static_cast<long>(r));
        const Scalar sum = alternating_multinomial_sum(r);
        if (sum != expected || c[r] != expected) {
            report.first_failure = scalar_failure(r, "r=" + std::to_string(r) + ": alternating multinomial sum " +
                                                         sum.to_string() + ", series c_r " + c[r].to_string() +
                                                         ", expected " + expected.to_string());
            return report;
        }
    }
    return report;
}

VerificationReport series_inverse(const SuiteOptions& o, std::size_t order)
{
    VerificationReport report;
    report.suite = "series-inverse";
    report.checked_arities.push_back(order);
    auto fail = [&](const std::string& what) {
        report.first_failure = scalar_failure(order, what);
        return report;
    };

    const auto identity_f = preset(Preset::identity, order, Convention::factorial);
    const auto exp1 = preset(Preset::exp_minus_one, order, Convention::factorial);
    const auto log1 = invert(exp1);
    ++report.parity_vectors_checked;
    for (std::size_t n = 1; n <= order; ++n) {
        const Scalar expected = sign_power(static_cast<long>(n) - 1) * Scalar::factorial(static_cast<unsigned>(n - 1));
        if (log1[n] != expected)
            return fail("invert(exp-1): g_" + std::to_string(n) + " = " + log1[n].to_string() + ", expected " +
                        expected.to_string());
    }
    if (compose(exp1, log1) != identity_f || compose(log1, exp1) != identity_f)
        return fail("exp-1 and its inverse do not compose to the identity");

    const auto identity_p = preset(Preset::identity, order, Convention::plain);
    const auto geo = preset(Preset::geometric, order, Convention::plain);
    const auto alt = invert(geo);
    ++report.parity_vectors_checked;
    if (alt != preset(Preset::alt_geometric, order, Convention::plain))
        return fail("invert(a/(1-a)) is not a/(1+a)");
    if (compose(geo, alt) != identity_p || compose(alt, geo) != identity_p)
        return fail("a/(1-a) and its inverse do not compose to the identity");

    std::mt19937_64 rng(o.seed);
    for (std::size_t sample = 0; sample < o.samples; ++sample) {
        ++report.parity_vectors_checked;
        const Convention conv = sample % 2 == 0 ? Convention::factorial : Convention::plain;
        const auto f = random_invertible_series(order, conv, rng);
        const auto g = invert(f);
        const auto id = preset(Preset::identity, order, conv);
        if (compose(f, g) != id || compose(g, f) != id || invert(g) != f)
            return fail("random sample " + std::to_string(sample) + " fails f o g = g o f = id");
    }
    return report;
}

} // namespace

VerificationReport run_suite(Suite suite, const SuiteOptions& o)
{
    if (o.order == 0)
        throw UsageError("order must be at least 1");
    if (o.mutation && suite != Suite::linf && suite != Suite::ainf)
        throw UsageError("--mutate applies to the linf and ainf suites only");
    if (!o.family.empty() && suite != Suite::linf && suite != Suite::ainf)
        throw UsageError("--family applies to the linf and ainf suites only");

    switch (suite) {
    case Suite::pullback_koszul: {
        const std::size_t n_max = o.n_max.value_or(6);
        require_bound(n_max, o.order, "n-max");
        const auto f = preset(Preset::exp_minus_one, o.order, Convention::factorial);
        return pullback_sweep("pullback-koszul", n_max, Flavor::commutative, f,
                              [](const std::vector<Generator>& g) { return koszul_brace(g); });
    }
    case Suite::pullback_borjeson: {
        const std::size_t n_max = o.n_max.value_or(7);
        require_bound(n_max, o.order, "n-max");
        const auto f = preset(Preset::geometric, o.order, Convention::plain);
        return pullback_sweep("pullback-borjeson", n_max, Flavor::noncommutative, f,
                              [](const std::vector<Generator>& g) { return borjeson_brace(g); });
    }
    case Suite::pullback_general: {
        const std::size_t n_max = o.n_max.value_or(5);
        require_bound(n_max, o.order, "n-max");
        const std::size_t r_max = o.r_max.value_or(n_max - 1);
        if (r_max >= o.order)
            throw UsageError("r-max must be below the series truncation order " + std::to_string(o.order));
        return pullback_general(o, n_max, r_max);
    }
    case Suite::linf:
    case Suite::ainf: {
        const bool lie = suite == Suite::linf;
        const std::size_t n_max = o.n_max.value_or(lie ? 5 : 6);
        if (n_max == 0)
            throw UsageError("n-max must be at least 1");
        const std::string family = o.family.empty() ? (lie ? "koszul" : "borjeson") : o.family;
        std::optional<BraceFamily> fam;
        if (family == "trivial")
            fam = BraceFamily::trivial(lie ? Flavor::commutative : Flavor::noncommutative);
        else if (lie && family == "koszul")
            fam = BraceFamily::koszul();
        else if (!lie && family == "borjeson")
            fam = BraceFamily::borjeson();
        else
            throw UsageError("family '" + family + "' is not available for " + std::string(suite_name(suite)));
        if (o.mutation)
            fam = fam->with_mutation(*o.mutation);
        return lie ? check_l_infinity(*fam, n_max) : check_a_infinity(*fam, n_max);
    }
    case Suite::c_identity:
        return c_identity(o.r_max.value_or(12), o.order);
    case Suite::series_inverse: {
        return series_inverse(o, o.order);
    }
    }
    throw UsageError("unknown suite");
}

} // namespace hbraces
