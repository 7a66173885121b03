#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "hbraces/braces.hpp"
#include "hbraces/coalgebra.hpp"
#include "hbraces/combinatorics.hpp"
#include "hbraces/expr.hpp"
#include "hbraces/series.hpp"

namespace th {

using namespace hbraces;

inline std::vector<Generator> gens(std::initializer_list<int> degrees)
{
    std::vector<int> d(degrees);
    return make_generators(d);
}

inline Atom g(const Generator& x) { return Atom::gen(x); }

/// nabla of a raw word, canonicalized for the flavor. The sign of the
/// canonicalization is returned separately.
inline std::pair<int, Atom> nab(const Word& raw, Flavor flavor)
{
    auto c = canonicalize_word(raw, flavor);
    return {c->first, Atom::nabla(c->second)};
}

inline Expr term(const Word& w, Flavor flavor, Scalar coeff = 1)
{
    RawTerm t{w, coeff};
    return normalize(std::span<const RawTerm>(&t, 1), flavor);
}

/// Product of the listed generators in the given order.
inline Word product(const std::vector<Generator>& a, std::initializer_list<std::size_t> positions)
{
    Word w;
    for (std::size_t p : positions)
        w.push_back(Atom::gen(a[p]));
    return w;
}

/// Random word of at most max_atoms atoms over gens, with nabla atoms nested
/// up to depth.
inline Word random_word(std::mt19937_64& rng, const std::vector<Generator>& a, Flavor flavor, int depth,
                        std::size_t max_atoms)
{
    std::uniform_int_distribution<std::size_t> len(1, max_atoms);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    std::uniform_int_distribution<int> coin(0, 3);
    Word w;
    const std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) {
        if (depth > 0 && coin(rng) == 0) {
            Word inner = random_word(rng, a, flavor, depth - 1, 3);
            auto c = canonicalize_word(inner, flavor);
            if (c && !(c->second.size() == 1 && c->second[0].is_nabla())) {
                w.push_back(Atom::nabla(c->second));
                continue;
            }
        }
        w.push_back(Atom::gen(a[pick(rng)]));
    }
    return w;
}

inline Expr random_expr(std::mt19937_64& rng, const std::vector<Generator>& a, Flavor flavor, int depth,
                        std::size_t max_atoms, std::size_t max_terms = 3)
{
    std::uniform_int_distribution<std::size_t> terms(1, max_terms);
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<RawTerm> raw;
    const std::size_t k = terms(rng);
    for (std::size_t i = 0; i < k; ++i)
        raw.push_back({random_word(rng, a, flavor, depth, max_atoms), Scalar(num(rng), den(rng))});
    return normalize(raw, flavor);
}

/// A homogeneous random expression: random terms filtered to one degree.
inline Expr random_homogeneous(std::mt19937_64& rng, const std::vector<Generator>& a, Flavor flavor, int depth,
                               std::size_t max_atoms)
{
    for (;;) {
        Expr e = random_expr(rng, a, flavor, depth, max_atoms, 4);
        if (e.is_zero())
            continue;
        const int deg = word_degree(e.terms().begin()->first);
        Expr out(flavor);
        for (const auto& [w, c] : e.terms())
            if (word_degree(w) == deg)
                out.add_canonical(w, c);
        return out;
    }
}

inline CoElem single_block(const Block& b, Flavor flavor, Scalar coeff = 1)
{
    CoElem x(flavor);
    x.add(b, coeff);
    return x;
}

/// (nabla (x) id + id (x) nabla) applied to an element of C (x) C.
inline CoTensor coderive_tensor(const CoTensor& t, Flavor flavor)
{
    CoTensor out;
    for (const auto& [key, coeff] : t) {
        const auto& [l, r] = key;
        accumulate(out, tensor_product(coderive_nabla(single_block(l, flavor)), single_block(r, flavor)), coeff);
        accumulate(out, tensor_product(single_block(l, flavor), coderive_nabla(single_block(r, flavor))),
                   coeff * sign_power(l.degree()));
    }
    return out;
}

inline bool is_zero(const CoTensor& t)
{
    for (const auto& [key, coeff] : t)
        if (!coeff.is_zero())
            return false;
    return true;
}

inline bool equal(const CoTensor& a, const CoTensor& b)
{
    CoTensor diff = a;
    accumulate(diff, b, Scalar(-1));
    return is_zero(diff);
}

/// A fixed invertible series whose coefficients are pairwise unrelated, so
/// identities checked with it hold coefficient by coefficient.
inline TruncatedSeries generic_series(std::size_t order, Convention conv)
{
    const long nums[] = {3, -2, 5, 7, -11, 13, 4, -17, 19, 23, -6, 29, 31, -37, 41, 43};
    const long dens[] = {2, 3, 7, 5, 4, 9, 11, 2, 13, 3, 5, 7, 17, 19, 8, 23};
    std::vector<Scalar> c;
    for (std::size_t k = 0; k < order; ++k)
        c.emplace_back(nums[k % 16], dens[k % 16]);
    return TruncatedSeries(std::move(c), conv);
}

/// coeff * eps(written order) * (literal products)_1 (.) ... (.) (..)_k, the
/// way the displays write a term with its Koszul sign suppressed.
inline CoElem written(const std::vector<Generator>& a, const std::vector<std::vector<std::size_t>>& blocks,
                      Scalar coeff, Flavor flavor)
{
    std::vector<std::size_t> order;
    std::vector<int> parities;
    for (const auto& x : a)
        parities.push_back(x.parity());
    std::vector<Expr> factors;
    for (const auto& b : blocks) {
        Word w;
        for (std::size_t p : b) {
            order.push_back(p);
            w.push_back(Atom::gen(a[p]));
        }
        factors.push_back(Expr::from_word(w, flavor));
    }
    const int sign = flavor == symmetric ? koszul_sign(order, parities) : 1;
    CoElem x = CoElem::from_factors(factors, flavor);
    x *= coeff * Scalar(sign);
    return x;
}

/// f_3 (abc) + f_1 f_2 (ab (.) c + bc (.) a + ca (.) b) + f_1^3 a (.) b (.) c
inline CoElem morphism_display(const std::vector<Generator>& a, const TruncatedSeries& f)
{
    return written(a, {{0, 1, 2}}, f[3], symmetric) + written(a, {{0, 1}, {2}}, f[1] * f[2], symmetric) +
           written(a, {{1, 2}, {0}}, f[1] * f[2], symmetric) + written(a, {{2, 0}, {1}}, f[1] * f[2], symmetric) +
           written(a, {{0}, {1}, {2}}, f[1] * f[1] * f[1], symmetric);
}

/// The pullback displays for n = 1, 2, 3 on a[0..2], each written term
/// carrying its Koszul sign and (-1)^{|x|} for nabla moving past x:
///   g_1 f_1 nabla(a)
///   g_1 f_2 nabla(ab) + g_2 f_1^2 (nabla(a)b + a nabla(b))
///   g_1 f_3 nabla(abc) + g_2 f_2 f_1 (nabla(ab)c + nabla(bc)a + nabla(ca)b)
///     + (g_3 f_1^3 + g_2 f_2 f_1)(nabla(a)bc + a nabla(b)c + ab nabla(c))
inline std::vector<Expr> pullback_displays(const std::vector<Generator>& a, const TruncatedSeries& f,
                                           const TruncatedSeries& g)
{
    const Flavor C = symmetric;
    std::vector<int> p;
    for (const auto& x : a)
        p.push_back(x.parity());
    const Expr A = Expr::generator(a[0], C), B = Expr::generator(a[1], C), Cc = Expr::generator(a[2], C);
    auto eps = [&](std::vector<std::size_t> order) { return Scalar(koszul_sign(order, p)); };
    auto prod = [](std::vector<Expr> xs) { return multiply_all(xs); };

    const Expr n1 = apply_nabla(A) * (g[1] * f[1]);
    const Expr n2 = apply_nabla(multiply(A, B)) * (g[1] * f[2]) +
                    (multiply(apply_nabla(A), B) + multiply(A, apply_nabla(B)) * sign_power(p[0])) *
                        (g[2] * f[1] * f[1]);
    const Expr two = multiply(apply_nabla(multiply(A, B)), Cc) +
                     multiply(apply_nabla(multiply(B, Cc)), A) * eps({1, 2, 0}) +
                     multiply(apply_nabla(multiply(Cc, A)), B) * eps({2, 0, 1});
    const Expr one = prod({apply_nabla(A), B, Cc}) + prod({A, apply_nabla(B), Cc}) * sign_power(p[0]) +
                     prod({A, B, apply_nabla(Cc)}) * sign_power(p[0] + p[1]);
    const Expr n3 = apply_nabla(prod({A, B, Cc})) * (g[1] * f[3]) + two * (g[2] * f[2] * f[1]) +
                    one * (g[3] * f[1] * f[1] * f[1] + g[2] * f[2] * f[1]);
    return {n1, n2, n3};
}

} // namespace th
