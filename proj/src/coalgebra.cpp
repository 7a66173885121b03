#include "hbraces/coalgebra.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hbraces/combinatorics.hpp"
#include "hbraces/error.hpp"

namespace hbraces {

namespace {

void require_convention(const TruncatedSeries& s, Flavor flavor, const char* what)
{
    const Convention expected = flavor == symmetric ? Convention::factorial : Convention::plain;
    if (s.convention() != expected)
        throw ContractViolation(std::string(what) + ": the " + (flavor == symmetric ? "symmetric" : "tensor") +
                                " side needs a series in the " +
                                (expected == Convention::factorial ? "factorial" : "plain") + " convention");
}

ParityVector factor_parities(const Block& b)
{
    ParityVector p;
    p.reserve(b.size());
    for (const Word& w : b.factors)
        p.push_back(word_degree(w) & 1);
    return p;
}

// Product of canonical words, canonicalized for the flavor.
std::optional<std::pair<int, Word>> product_word(std::span<const Word* const> words, Flavor flavor)
{
    Word w;
    for (const Word* part : words)
        w.insert(w.end(), part->begin(), part->end());
    return canonicalize_word(w, flavor);
}

} // namespace

int Block::degree() const
{
    int d = 0;
    for (const Word& w : factors)
        d += word_degree(w);
    return d;
}

std::strong_ordering compare_blocks(const Block& a, const Block& b)
{
    if (a.size() != b.size())
        return a.size() <=> b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
        if (auto c = compare_words(a.factors[i], b.factors[i]); c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::optional<std::pair<int, Block>> canonicalize_block(Block b, Flavor flavor)
{
    int sign = 1;
    if (flavor == symmetric) {
        auto& f = b.factors;
        for (std::size_t i = 1; i < f.size(); ++i) {
            for (std::size_t j = i; j > 0 && compare_words(f[j], f[j - 1]) < 0; --j) {
                if ((word_degree(f[j]) & 1) && (word_degree(f[j - 1]) & 1))
                    sign = -sign;
                std::swap(f[j], f[j - 1]);
            }
        }
        for (std::size_t i = 1; i < f.size(); ++i)
            if ((word_degree(f[i]) & 1) && f[i] == f[i - 1])
                return std::nullopt;
    }
    return std::make_pair(sign, std::move(b));
}

CoElem CoElem::from_factors(std::span<const Expr> factors, Flavor flavor)
{
    CoElem out(flavor);
    if (factors.empty())
        return out;
    for (const Expr& e : factors)
        if (e.flavor() != flavor)
            throw ContractViolation("block factor has the wrong flavor");
    // multilinear expansion over the cartesian product of terms
    std::vector<Expr::TermMap::const_iterator> it;
    for (const Expr& e : factors) {
        if (e.is_zero())
            return out;
        it.push_back(e.terms().begin());
    }
    while (true) {
        Block b;
        Scalar c = 1;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            b.factors.push_back(it[i]->first);
            c *= it[i]->second;
        }
        out.add(std::move(b), c);
        std::size_t i = factors.size();
        while (i > 0) {
            --i;
            if (++it[i] != factors[i].terms().end())
                break;
            it[i] = factors[i].terms().begin();
            if (i == 0)
                return out;
        }
    }
}

CoElem CoElem::from_generators(std::span<const Generator> gens, Flavor flavor)
{
    CoElem out(flavor);
    Block b;
    for (const Generator& g : gens)
        b.factors.push_back(Word{Atom::gen(g)});
    out.add(std::move(b), 1);
    return out;
}

void CoElem::add(Block b, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    for (const Word& w : b.factors)
        if (w.empty())
            throw ContractViolation("block factor is the empty word");
    auto canon = canonicalize_block(std::move(b), flavor_);
    if (!canon)
        return;
    Scalar c = canon->first == 1 ? coeff : -coeff;
    auto [pos, inserted] = terms_.try_emplace(std::move(canon->second), c);
    if (!inserted) {
        pos->second += c;
        if (pos->second.is_zero())
            terms_.erase(pos);
    }
}

Scalar CoElem::coefficient(const Block& canonical) const
{
    auto it = terms_.find(canonical);
    return it == terms_.end() ? Scalar(0) : it->second;
}

CoElem& CoElem::operator+=(const CoElem& other)
{
    if (other.flavor_ != flavor_)
        throw ContractViolation("adding coalgebra elements of different flavors");
    for (const auto& [b, c] : other.terms_)
        add(b, c);
    return *this;
}

CoElem& CoElem::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [b, c] : terms_)
        c *= s;
    return *this;
}

std::vector<Split> deconcatenate(const Block& b, Flavor flavor)
{
    std::vector<Split> out;
    const std::size_t n = b.size();
    if (n < 2)
        return out;
    if (flavor == tensor) {
        for (std::size_t j = 1; j < n; ++j) {
            Split s;
            s.left.factors.assign(b.factors.begin(), b.factors.begin() + static_cast<std::ptrdiff_t>(j));
            s.right.factors.assign(b.factors.begin() + static_cast<std::ptrdiff_t>(j), b.factors.end());
            s.sign = 1;
            out.push_back(std::move(s));
        }
        return out;
    }
    const ParityVector parities = factor_parities(b);
    for (std::size_t j = 1; j < n; ++j) {
        for (const Permutation& perm : unshuffles(j, n - j)) {
            Split s;
            for (std::size_t k = 0; k < n; ++k)
                (k < j ? s.left : s.right).factors.push_back(b.factors[perm[k]]);
            s.sign = koszul_sign(perm, parities);
            out.push_back(std::move(s));
        }
    }
    return out;
}

void accumulate(CoTensor& into, const CoTensor& term, const Scalar& coeff)
{
    for (const auto& [key, c] : term) {
        Scalar v = c * coeff;
        if (v.is_zero())
            continue;
        auto [pos, inserted] = into.try_emplace(key, v);
        if (!inserted) {
            pos->second += v;
            if (pos->second.is_zero())
                into.erase(pos);
        }
    }
}

CoTensor coproduct(const CoElem& x)
{
    CoTensor out;
    for (const auto& [b, c] : x.terms()) {
        for (Split& s : deconcatenate(b, x.flavor())) {
            CoTensor one;
            one.emplace(std::make_pair(std::move(s.left), std::move(s.right)), Scalar(s.sign));
            accumulate(out, one, c);
        }
    }
    return out;
}

CoTensor tensor_product(const CoElem& x, const CoElem& y)
{
    CoTensor out;
    for (const auto& [bx, cx] : x.terms()) {
        for (const auto& [by, cy] : y.terms()) {
            CoTensor one;
            one.emplace(std::make_pair(bx, by), cx * cy);
            accumulate(out, one);
        }
    }
    return out;
}

CoElem extend_morphism(const Block& block, const TruncatedSeries& f, Flavor flavor)
{
    require_convention(f, flavor, "extend_morphism");
    const std::size_t n = block.size();
    if (n > f.order())
        throw InsufficientOrder("extend_morphism on " + std::to_string(n) + " factors needs series order >= " +
                                std::to_string(n));
    CoElem out(flavor);
    if (n == 0)
        return out;

    if (flavor == tensor) {
        for (const auto& comp : compositions(n)) {
            Block image;
            Scalar coeff = 1;
            std::size_t start = 0;
            bool vanished = false;
            for (std::size_t part : comp) {
                std::vector<const Word*> words;
                for (std::size_t k = start; k < start + part; ++k)
                    words.push_back(&block.factors[k]);
                auto prod = product_word(words, flavor);
                if (!prod) {
                    vanished = true;
                    break;
                }
                coeff *= f[part] * Scalar(prod->first);
                image.factors.push_back(std::move(prod->second));
                start += part;
            }
            if (!vanished)
                out.add(std::move(image), coeff);
        }
        return out;
    }

    const ParityVector parities = factor_parities(block);
    for (const SetPartition& partition : set_partitions(n)) {
        Permutation order;
        Block image;
        Scalar coeff = 1;
        bool vanished = false;
        for (const auto& part : partition) {
            std::vector<const Word*> words;
            for (std::size_t k : part) {
                order.push_back(k);
                words.push_back(&block.factors[k]);
            }
            auto prod = product_word(words, flavor);
            if (!prod) {
                vanished = true;
                break;
            }
            coeff *= f[part.size()] * Scalar(prod->first);
            image.factors.push_back(std::move(prod->second));
        }
        if (vanished)
            continue;
        coeff *= Scalar(koszul_sign(order, parities));
        out.add(std::move(image), coeff);
    }
    return out;
}

CoElem extend_morphism(std::span<const Generator> gens, const TruncatedSeries& f, Flavor flavor)
{
    if (gens.empty())
        throw UsageError("extend_morphism needs at least one generator");
    Block b;
    for (const Generator& g : gens)
        b.factors.push_back(Word{Atom::gen(g)});
    // a_1 (.) .. (.) a_n need not be sorted; evaluate on the raw monomial
    return extend_morphism(b, f, flavor);
}

CoElem extend_morphism(const CoElem& x, const TruncatedSeries& f)
{
    CoElem out(x.flavor());
    for (const auto& [b, c] : x.terms()) {
        CoElem image = extend_morphism(b, f, x.flavor());
        image *= c;
        out += image;
    }
    return out;
}

CoElem coderive_nabla(const CoElem& x)
{
    CoElem out(x.flavor());
    for (const auto& [b, c] : x.terms()) {
        int before = 0;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const Word& xi = b.factors[i];
            const int di = word_degree(xi);
            if (!(xi.size() == 1 && xi.front().is_nabla())) {
                Block image = b;
                image.factors[i] = Word{Atom::nabla(xi)};
                out.add(std::move(image), (before & 1) ? -c : c);
            }
            before += di;
        }
    }
    return out;
}

Expr project_series(const CoElem& x, const TruncatedSeries& g)
{
    require_convention(g, x.flavor(), "project_series");
    Expr out(x.flavor());
    for (const auto& [b, c] : x.terms()) {
        if (b.size() > g.order())
            throw InsufficientOrder("project_series: block of length " + std::to_string(b.size()) +
                                    " exceeds series order " + std::to_string(g.order()));
        std::vector<const Word*> words;
        for (const Word& w : b.factors)
            words.push_back(&w);
        auto prod = product_word(words, x.flavor());
        if (!prod)
            continue;
        Scalar coeff = g[b.size()] * c;
        out.add_canonical(prod->second, prod->first == 1 ? coeff : -coeff);
    }
    return out;
}

Expr pullback_brace(std::span<const Generator> gens, const TruncatedSeries& f, Flavor flavor)
{
    if (gens.size() > f.order())
        throw InsufficientOrder("pullback on " + std::to_string(gens.size()) + " generators needs truncation order >= " +
                                std::to_string(gens.size()));
    const std::size_t n = std::max<std::size_t>(gens.size(), 1);
    const std::vector<Scalar>& all = f.coefficients();
    const TruncatedSeries head(std::vector<Scalar>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n)),
                               f.convention());
    return project_series(coderive_nabla(extend_morphism(gens, head, flavor)), invert(head));
}

Scalar pairing(std::span<const std::uint32_t> labels, std::span<const Generator> elements)
{
    const std::size_t n = labels.size();
    if (elements.size() != n)
        throw ContractViolation("pairing: functionals and elements differ in number");
    Permutation sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    Scalar total;
    do {
        bool matches = true;
        for (std::size_t i = 0; i < n && matches; ++i)
            matches = labels[i] == elements[sigma[i]].index;
        if (!matches)
            continue;
        // x_0..x_{n-1}, a_0..a_{n-1}  ->  x_0, a_s(0), x_1, a_s(1), ...
        ParityVector parities(2 * n);
        Permutation rho;
        for (std::size_t i = 0; i < n; ++i) {
            parities[i] = elements[sigma[i]].parity(); // x_i is dual to a_s(i)
            parities[n + i] = elements[i].parity();
        }
        for (std::size_t i = 0; i < n; ++i) {
            rho.push_back(i);
            rho.push_back(n + sigma[i]);
        }
        total += Scalar(koszul_sign(rho, parities));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

CoElem diagonal(Generator a, std::size_t n, Flavor flavor)
{
    if (n == 0)
        throw UsageError("diagonal needs n >= 1");
    CoElem out(flavor);
    Block b;
    b.factors.assign(n, Word{Atom::gen(a)});
    Scalar coeff = flavor == symmetric ? Scalar(1) / Scalar::factorial(static_cast<unsigned>(n)) : Scalar(1);
    out.add(std::move(b), coeff);
    return out;
}

} // namespace hbraces
