#include "hbraces/checker.hpp"

#include <map>

#include "hbraces/error.hpp"

namespace hbraces {

Expr apply_brace(const BraceFamily& family, std::span<const Expr> args)
{
    std::vector<Generator> placeholders;
    std::map<std::uint32_t, Expr> values;
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k].is_zero())
            return Expr(family.flavor());
        auto d = args[k].degree();
        if (!d)
            throw ContractViolation("brace argument is not homogeneous");
        const auto index = static_cast<std::uint32_t>(k + 1);
        placeholders.push_back(Generator{index, *d});
        values.emplace(index, args[k]);
    }
    return substitute(family.evaluate(placeholders), values);
}

std::vector<Expr> l_infinity_summands(const BraceFamily& family, std::span<const Generator> gens)
{
    const std::size_t n = gens.size();
    ParityVector parities;
    for (const Generator& g : gens)
        parities.push_back(g.parity());
    std::vector<Expr> out;
    for (std::size_t i = 1; i <= n; ++i) {
        for (const Permutation& sigma : unshuffles(i, n - i)) {
            std::vector<Generator> inner_args;
            for (std::size_t k = 0; k < i; ++k)
                inner_args.push_back(gens[sigma[k]]);
            std::vector<Expr> outer_args{family.evaluate(inner_args)};
            for (std::size_t k = i; k < n; ++k)
                outer_args.push_back(Expr::generator(gens[sigma[k]], family.flavor()));
            out.push_back(apply_brace(family, outer_args) * Scalar(koszul_sign(sigma, parities)));
        }
    }
    return out;
}

Expr l_infinity_residual(const BraceFamily& family, std::span<const Generator> gens)
{
    Expr total(family.flavor());
    for (const Expr& e : l_infinity_summands(family, gens))
        total += e;
    return total;
}

std::vector<Expr> a_infinity_summands(const BraceFamily& family, std::span<const Generator> gens)
{
    const std::size_t n = gens.size();
    std::vector<Expr> out;
    for (std::size_t v = 1; v <= n; ++v) {
        const std::size_t u = n + 1 - v;
        for (std::size_t i = 1; i <= u; ++i) {
            // m_v occupies a_i .. a_{i+v-1} (1-based)
            const std::size_t begin = i - 1;
            int passed = 0;
            std::vector<Expr> args;
            for (std::size_t k = 0; k < begin; ++k) {
                passed += gens[k].degree;
                args.push_back(Expr::generator(gens[k], family.flavor()));
            }
            args.push_back(family.evaluate(gens.subspan(begin, v)));
            for (std::size_t k = begin + v; k < n; ++k)
                args.push_back(Expr::generator(gens[k], family.flavor()));
            out.push_back(apply_brace(family, args) * sign_power(passed));
        }
    }
    return out;
}

Expr a_infinity_residual(const BraceFamily& family, std::span<const Generator> gens)
{
    Expr total(family.flavor());
    for (const Expr& e : a_infinity_summands(family, gens))
        total += e;
    return total;
}

namespace {

template <typename Residual>
VerificationReport sweep(const char* suite, std::size_t n_max, Residual residual)
{
    VerificationReport report;
    report.suite = suite;
    for (std::size_t n = 1; n <= n_max; ++n) {
        report.checked_arities.push_back(n);
        for (const ParityVector& p : all_parity_vectors(n)) {
            ++report.parity_vectors_checked;
            const auto gens = make_generators(p);
            Expr r = residual(gens);
            if (!r.is_zero()) {
                report.first_failure = FirstFailure{n, p, std::move(r), "relation does not vanish"};
                return report;
            }
        }
    }
    return report;
}

} // namespace

VerificationReport check_l_infinity(const BraceFamily& family, std::size_t n_max)
{
    if (family.flavor() != Flavor::commutative)
        throw ContractViolation("check_l_infinity needs a family with commutative output");
    return sweep("linf", n_max, [&](const std::vector<Generator>& gens) { return l_infinity_residual(family, gens); });
}

VerificationReport check_a_infinity(const BraceFamily& family, std::size_t n_max)
{
    if (family.flavor() != Flavor::noncommutative)
        throw ContractViolation("check_a_infinity needs a family with noncommutative output");
    return sweep("ainf", n_max, [&](const std::vector<Generator>& gens) { return a_infinity_residual(family, gens); });
}

} // namespace hbraces
