#include "hbraces/expr.hpp"

#include <algorithm>

#include "hbraces/error.hpp"

namespace hbraces {

std::vector<Generator> make_generators(std::span<const int> degrees)
{
    std::vector<Generator> out;
    out.reserve(degrees.size());
    for (std::size_t i = 0; i < degrees.size(); ++i)
        out.push_back(Generator{static_cast<std::uint32_t>(i + 1), degrees[i]});
    return out;
}

Atom Atom::gen(Generator g)
{
    Atom a;
    a.gen_ = g;
    a.degree_ = g.degree;
    return a;
}

Atom Atom::nabla(Word inner)
{
    if (inner.empty())
        throw ContractViolation("nabla of the empty word");
    Atom a;
    a.degree_ = word_degree(inner) + 1;
    a.inner_ = std::make_shared<const Word>(std::move(inner));
    return a;
}

int word_degree(const Word& w)
{
    int d = 0;
    for (const Atom& a : w)
        d += a.degree();
    return d;
}

std::strong_ordering operator<=>(const Atom& a, const Atom& b)
{
    if (a.is_nabla() != b.is_nabla())
        return a.is_nabla() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_gen())
        return a.gen_ <=> b.gen_;
    if (a.inner_ == b.inner_)
        return std::strong_ordering::equal;
    if (a.inner_->size() != b.inner_->size())
        return a.inner_->size() > b.inner_->size() ? std::strong_ordering::less : std::strong_ordering::greater;
    return compare_words(*a.inner_, *b.inner_);
}

std::strong_ordering compare_words(const Word& a, const Word& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (auto c = a[i] <=> b[i]; c != 0)
            return c;
    return a.size() <=> b.size();
}

namespace {

// Sorts a commutative word in place, returning the Koszul sign, or 0 when a
// repeated odd atom kills the word.
int sort_graded(Word& w)
{
    int sign = 1;
    for (std::size_t i = 1; i < w.size(); ++i) {
        for (std::size_t j = i; j > 0 && w[j] < w[j - 1]; --j) {
            if (w[j].parity() && w[j - 1].parity())
                sign = -sign;
            std::swap(w[j], w[j - 1]);
        }
    }
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i].parity() && w[i] == w[i - 1])
            return 0;
    return sign;
}

std::optional<std::pair<int, Word>> canonicalize_impl(const Word& w, Flavor flavor, bool deep)
{
    int sign = 1;
    Word out;
    out.reserve(w.size());
    for (const Atom& atom : w) {
        if (!deep || atom.is_gen()) {
            out.push_back(atom);
            continue;
        }
        auto inner = canonicalize_impl(atom.inner(), flavor, true);
        if (!inner)
            return std::nullopt;
        auto& [inner_sign, inner_word] = *inner;
        if (inner_word.size() == 1 && inner_word.front().is_nabla())
            return std::nullopt; // nabla squares to zero
        sign *= inner_sign;
        if (inner_word == atom.inner())
            out.push_back(atom);
        else
            out.push_back(Atom::nabla(std::move(inner_word)));
    }
    if (flavor == Flavor::commutative) {
        int s = sort_graded(out);
        if (s == 0)
            return std::nullopt;
        sign *= s;
    }
    return std::make_pair(sign, std::move(out));
}

} // namespace

std::optional<std::pair<int, Word>> canonicalize_word(const Word& w, Flavor flavor)
{
    return canonicalize_impl(w, flavor, true);
}

Expr Expr::generator(Generator g, Flavor flavor, Scalar coeff)
{
    Expr e(flavor);
    e.add_canonical(Word{Atom::gen(g)}, coeff);
    return e;
}

Expr Expr::from_word(Word w, Flavor flavor, Scalar coeff)
{
    RawTerm t{std::move(w), std::move(coeff)};
    return normalize(std::span<const RawTerm>(&t, 1), flavor);
}

std::optional<int> Expr::degree() const
{
    std::optional<int> d;
    for (const auto& [w, c] : terms_) {
        int wd = word_degree(w);
        if (d && *d != wd)
            return std::nullopt;
        d = wd;
    }
    return d;
}

bool Expr::is_homogeneous() const { return is_zero() || degree().has_value(); }

Scalar Expr::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar(0) : it->second;
}

void Expr::add_canonical(const Word& w, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Expr& Expr::operator+=(const Expr& other)
{
    if (other.flavor_ != flavor_)
        throw ContractViolation("adding expressions of different flavors");
    for (const auto& [w, c] : other.terms_)
        add_canonical(w, c);
    return *this;
}

Expr& Expr::operator-=(const Expr& other)
{
    if (other.flavor_ != flavor_)
        throw ContractViolation("subtracting expressions of different flavors");
    for (const auto& [w, c] : other.terms_)
        add_canonical(w, -c);
    return *this;
}

Expr& Expr::operator*=(const Scalar& s)
{
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c *= s;
    return *this;
}

Expr Expr::operator-() const
{
    Expr out = *this;
    for (auto& [w, c] : out.terms_)
        c = -c;
    return out;
}

Expr normalize(std::span<const RawTerm> raw, Flavor flavor)
{
    Expr out(flavor);
    for (const RawTerm& t : raw) {
        if (t.coeff.is_zero())
            continue;
        if (auto canon = canonicalize_impl(t.word, flavor, true))
            out.add_canonical(canon->second, canon->first == 1 ? t.coeff : -t.coeff);
    }
    return out;
}

Expr multiply(const Expr& lhs, const Expr& rhs)
{
    if (lhs.flavor() != rhs.flavor())
        throw ContractViolation("multiplying expressions of different flavors");
    Expr out(lhs.flavor());
    Word buffer;
    for (const auto& [wl, cl] : lhs.terms()) {
        for (const auto& [wr, cr] : rhs.terms()) {
            buffer.assign(wl.begin(), wl.end());
            buffer.insert(buffer.end(), wr.begin(), wr.end());
            auto canon = canonicalize_impl(buffer, lhs.flavor(), false);
            if (!canon)
                continue;
            Scalar c = cl * cr;
            out.add_canonical(canon->second, canon->first == 1 ? c : -c);
        }
    }
    return out;
}

Expr multiply_all(std::span<const Expr> factors)
{
    if (factors.empty())
        throw ContractViolation("multiply_all of an empty sequence");
    Expr acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = multiply(acc, factors[i]);
    return acc;
}

Expr apply_nabla(const Expr& e)
{
    Expr out(e.flavor());
    for (const auto& [w, c] : e.terms()) {
        if (w.empty())
            throw ContractViolation("nabla of the unit is not defined");
        if (w.size() == 1 && w.front().is_nabla())
            continue;
        out.add_canonical(Word{Atom::nabla(w)}, c);
    }
    return out;
}

namespace {

Expr substitute_word(const Word& w, Flavor flavor, const std::map<std::uint32_t, Expr>& values);

Expr substitute_atom(const Atom& a, Flavor flavor, const std::map<std::uint32_t, Expr>& values)
{
    if (a.is_gen()) {
        auto it = values.find(a.generator().index);
        if (it == values.end())
            return Expr::generator(a.generator(), flavor);
        if (it->second.flavor() != flavor)
            throw ContractViolation("substitution value has the wrong flavor");
        return it->second;
    }
    return apply_nabla(substitute_word(a.inner(), flavor, values));
}

Expr substitute_word(const Word& w, Flavor flavor, const std::map<std::uint32_t, Expr>& values)
{
    Expr acc = substitute_atom(w.front(), flavor, values);
    for (std::size_t i = 1; i < w.size() && !acc.is_zero(); ++i)
        acc = multiply(acc, substitute_atom(w[i], flavor, values));
    return acc;
}

} // namespace

Expr substitute(const Expr& e, const std::map<std::uint32_t, Expr>& values)
{
    Expr out(e.flavor());
    for (const auto& [w, c] : e.terms())
        out += substitute_word(w, e.flavor(), values) * c;
    return out;
}

} // namespace hbraces
