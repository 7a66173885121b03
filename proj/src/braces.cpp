#include "hbraces/braces.hpp"

#include <string>

#include "hbraces/combinatorics.hpp"
#include "hbraces/error.hpp"

namespace hbraces {

namespace {

ParityVector parities_of(std::span<const Generator> gens)
{
    ParityVector p;
    for (const Generator& g : gens)
        p.push_back(g.parity());
    return p;
}

Word gen_word(std::span<const Generator> gens, std::span<const std::size_t> positions)
{
    Word w;
    for (std::size_t k : positions)
        w.push_back(Atom::gen(gens[k]));
    return w;
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end)
{
    std::vector<std::size_t> r;
    for (std::size_t k = begin; k < end; ++k)
        r.push_back(k);
    return r;
}

// prefix (nabla segment) suffix, for contiguous index ranges
Word segment_word(std::span<const Generator> gens, std::size_t begin, std::size_t end)
{
    const std::size_t n = gens.size();
    Word w = gen_word(gens, range(0, begin));
    w.push_back(Atom::nabla(gen_word(gens, range(begin, end))));
    Word tail = gen_word(gens, range(end, n));
    w.insert(w.end(), tail.begin(), tail.end());
    return w;
}

int prefix_parity(std::span<const Generator> gens, std::size_t count)
{
    int d = 0;
    for (std::size_t k = 0; k < count; ++k)
        d += gens[k].degree;
    return d & 1;
}

void require_arity(std::span<const Generator> gens)
{
    if (gens.empty())
        throw UsageError("braces are defined for n >= 1");
}

} // namespace

std::vector<RawTerm> koszul_brace_terms(std::span<const Generator> gens)
{
    require_arity(gens);
    const std::size_t n = gens.size();
    const ParityVector parities = parities_of(gens);
    std::vector<RawTerm> out;
    for (std::size_t i = n; i >= 1; --i) {
        for (const Permutation& sigma : unshuffles(i, n - i)) {
            std::span<const std::size_t> s(sigma);
            Word w{Atom::nabla(gen_word(gens, s.first(i)))};
            Word rest = gen_word(gens, s.subspan(i));
            w.insert(w.end(), rest.begin(), rest.end());
            Scalar coeff = sign_power(static_cast<long>(n - i)) * Scalar(koszul_sign(sigma, parities));
            out.push_back(RawTerm{std::move(w), coeff});
        }
    }
    return out;
}

Expr koszul_brace(std::span<const Generator> gens)
{
    auto terms = koszul_brace_terms(gens);
    return normalize(terms, Flavor::commutative);
}

std::vector<RawTerm> borjeson_brace_terms(std::span<const Generator> gens)
{
    require_arity(gens);
    const std::size_t n = gens.size();
    const Scalar s1 = sign_power(gens[0].degree);
    std::vector<RawTerm> out;
    out.push_back(RawTerm{segment_word(gens, 0, n), 1});
    if (n == 1)
        return out;
    out.push_back(RawTerm{segment_word(gens, 0, n - 1), -1});
    out.push_back(RawTerm{segment_word(gens, 1, n), -s1});
    if (n >= 3)
        out.push_back(RawTerm{segment_word(gens, 1, n - 1), s1});
    return out;
}

Expr borjeson_brace(std::span<const Generator> gens)
{
    auto terms = borjeson_brace_terms(gens);
    return normalize(terms, Flavor::noncommutative);
}

std::vector<RawTerm> generalized_brace_terms(std::span<const Generator> gens, const TruncatedSeries& f,
                                             const CoefficientVector& c, Flavor flavor)
{
    require_arity(gens);
    const std::size_t n = gens.size();
    const Convention expected = flavor == Flavor::commutative ? Convention::factorial : Convention::plain;
    if (f.convention() != expected || c.convention() != expected)
        throw ContractViolation("generalized_brace: series and coefficients must match the flavor's convention");
    if (n > f.order())
        throw InsufficientOrder("generalized_brace on " + std::to_string(n) + " generators needs series order >= " +
                                std::to_string(n));
    if (n - 1 > c.max_index())
        throw InsufficientOrder("generalized_brace on " + std::to_string(n) + " generators needs coefficients up to " +
                                std::to_string(n - 1));

    std::vector<RawTerm> out;
    if (flavor == Flavor::commutative) {
        const ParityVector parities = parities_of(gens);
        for (std::size_t i = n; i >= 1; --i) {
            const Scalar weight = c[n - i] * f[i];
            for (const Permutation& sigma : unshuffles(i, n - i)) {
                std::span<const std::size_t> s(sigma);
                Word w{Atom::nabla(gen_word(gens, s.first(i)))};
                Word rest = gen_word(gens, s.subspan(i));
                w.insert(w.end(), rest.begin(), rest.end());
                out.push_back(RawTerm{std::move(w), weight * Scalar(koszul_sign(sigma, parities))});
            }
        }
        return out;
    }
    for (std::size_t i = n; i >= 1; --i) {
        for (std::size_t start = 0; start + i <= n; ++start) {
            Scalar coeff = f[i] * c.split(start, n - start - i);
            if (prefix_parity(gens, start))
                coeff = -coeff;
            out.push_back(RawTerm{segment_word(gens, start, start + i), coeff});
        }
    }
    return out;
}

Expr generalized_brace(std::span<const Generator> gens, const TruncatedSeries& f, const CoefficientVector& c,
                       Flavor flavor)
{
    auto terms = generalized_brace_terms(gens, f, c, flavor);
    return normalize(terms, flavor);
}

BraceFamily BraceFamily::koszul() { return BraceFamily(BraceKind::koszul, Flavor::commutative); }

BraceFamily BraceFamily::borjeson() { return BraceFamily(BraceKind::borjeson, Flavor::noncommutative); }

BraceFamily BraceFamily::trivial(Flavor flavor) { return BraceFamily(BraceKind::trivial, flavor); }

BraceFamily BraceFamily::generalized(TruncatedSeries f, CoefficientVector c, Flavor flavor)
{
    BraceFamily family(BraceKind::generalized, flavor);
    family.f_ = std::move(f);
    family.c_ = std::move(c);
    return family;
}

BraceFamily BraceFamily::pullback_of(const TruncatedSeries& f, Flavor flavor)
{
    CoefficientVector c = c_from_series(f, invert(f), f.order() - 1);
    return generalized(f, std::move(c), flavor);
}

BraceFamily BraceFamily::with_mutation(Mutation m) const
{
    BraceFamily copy = *this;
    copy.mutation_ = m;
    return copy;
}

std::vector<RawTerm> BraceFamily::terms(std::span<const Generator> gens) const
{
    std::vector<RawTerm> out;
    switch (kind_) {
    case BraceKind::koszul:
        out = koszul_brace_terms(gens);
        break;
    case BraceKind::borjeson:
        out = borjeson_brace_terms(gens);
        break;
    case BraceKind::generalized:
        out = generalized_brace_terms(gens, *f_, *c_, flavor_);
        break;
    case BraceKind::trivial:
        require_arity(gens);
        if (gens.size() == 1)
            out.push_back(RawTerm{Word{Atom::nabla(Word{Atom::gen(gens[0])})}, 1});
        break;
    }
    if (mutation_ && mutation_->arity == gens.size()) {
        if (mutation_->term >= out.size())
            throw ContractViolation("mutation targets term " + std::to_string(mutation_->term) + " of " +
                                    std::to_string(out.size()));
        if (mutation_->action == Mutation::Action::flip_sign)
            out[mutation_->term].coeff = -out[mutation_->term].coeff;
        else
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(mutation_->term));
    }
    return out;
}

Expr BraceFamily::evaluate(std::span<const Generator> gens) const
{
    auto raw = terms(gens);
    return normalize(raw, flavor_);
}

} // namespace hbraces
