#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hbraces/expr.hpp"
#include "hbraces/series.hpp"

namespace hbraces {

// The symmetric coalgebra pairs with commutative expressions, the tensor
// coalgebra with noncommutative ones.
inline constexpr Flavor symmetric = Flavor::commutative;
inline constexpr Flavor tensor = Flavor::noncommutative;

/// x_1 (.) ... (.) x_k with each slot a canonical monomial. Coefficients of
/// the slots are pulled out multilinearly into the owning CoElem.
struct Block {
    std::vector<Word> factors;

    std::size_t size() const { return factors.size(); }
    int degree() const;
};

std::strong_ordering compare_blocks(const Block& a, const Block& b);
inline bool operator==(const Block& a, const Block& b) { return compare_blocks(a, b) == 0; }

struct BlockLess {
    bool operator()(const Block& a, const Block& b) const { return compare_blocks(a, b) < 0; }
};

/// Symmetric flavor: factors sorted with the Koszul sign of the factor
/// degrees, a repeated odd factor kills the block. Tensor flavor: unchanged.
std::optional<std::pair<int, Block>> canonicalize_block(Block b, Flavor flavor);

class CoElem {
public:
    using TermMap = std::map<Block, Scalar, BlockLess>;

    explicit CoElem(Flavor flavor = symmetric) : flavor_(flavor) {}

    /// x_1 (.) ... (.) x_k for arbitrary expressions, expanded multilinearly.
    static CoElem from_factors(std::span<const Expr> factors, Flavor flavor);
    static CoElem from_generators(std::span<const Generator> gens, Flavor flavor);

    Flavor flavor() const { return flavor_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coeff * b after canonicalizing b.
    void add(Block b, const Scalar& coeff);
    Scalar coefficient(const Block& canonical) const;

    CoElem& operator+=(const CoElem& other);
    CoElem& operator*=(const Scalar& s);
    friend CoElem operator+(CoElem a, const CoElem& b) { return a += b; }

    friend bool operator==(const CoElem& a, const CoElem& b)
    {
        return a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }

private:
    Flavor flavor_;
    TermMap terms_;
};

struct BlockPairLess {
    bool operator()(const std::pair<Block, Block>& a, const std::pair<Block, Block>& b) const
    {
        auto c = compare_blocks(a.first, b.first);
        return c != 0 ? c < 0 : compare_blocks(a.second, b.second) < 0;
    }
};

/// Elements of C (x) C, keyed by (left block, right block).
using CoTensor = std::map<std::pair<Block, Block>, Scalar, BlockPairLess>;

struct Split {
    Block left;
    Block right;
    int sign;
};

/// Reduced deconcatenation of one canonical block. Symmetric: all
/// (j, n-j)-unshuffle splittings with their Koszul signs, 1 <= j <= n-1.
/// Tensor: the n-1 contiguous cuts.
std::vector<Split> deconcatenate(const Block& b, Flavor flavor);
CoTensor coproduct(const CoElem& x);

/// Bilinear x (x) y with no extra sign.
CoTensor tensor_product(const CoElem& x, const CoElem& y);
void accumulate(CoTensor& into, const CoTensor& term, const Scalar& coeff = 1);

/// Coalgebra morphism determined by the series f, applied to
/// a_1 (.) ... (.) a_n. Symmetric: sum over set partitions of
/// prod f_{|B|} * Koszul sign * (product of each block). Tensor: sum over
/// compositions of prod f_i * contiguous products. f must use the factorial
/// convention on the symmetric side and the plain one on the tensor side.
CoElem extend_morphism(std::span<const Generator> gens, const TruncatedSeries& f, Flavor flavor);
CoElem extend_morphism(const Block& block, const TruncatedSeries& f, Flavor flavor);
CoElem extend_morphism(const CoElem& x, const TruncatedSeries& f);

/// The coderivation induced by the linear field nabla:
/// x_1..x_k -> sum_i (-1)^{|x_1|+..+|x_{i-1}|} x_1..nabla(x_i)..x_k.
CoElem coderive_nabla(const CoElem& x);

/// sum_k g_k mu^[k]: each block of length k goes to g_k x_1 x_2 ... x_k.
Expr project_series(const CoElem& x, const TruncatedSeries& g);

/// project_series(coderive_nabla(extend_morphism(gens, f)), invert(f)).
Expr pullback_brace(std::span<const Generator> gens, const TruncatedSeries& f, Flavor flavor);

/// <x_1 (.) .. (.) x_n | a_1 (.) .. (.) a_n> where x_i is the dual basis
/// vector of the generator with index labels[i]. Each permutation term
/// carries the Koszul sign of interleaving x_1, a_s(1), ..., x_n, a_s(n).
Scalar pairing(std::span<const std::uint32_t> labels, std::span<const Generator> elements);

/// Symmetric: (1/n!) a (.) ... (.) a, zero when a is odd and n >= 2.
/// Tensor: a (x) ... (x) a.
CoElem diagonal(Generator a, std::size_t n, Flavor flavor);

} // namespace hbraces
