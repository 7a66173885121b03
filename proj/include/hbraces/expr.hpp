#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hbraces/scalar.hpp"

namespace hbraces {

/// Commutative: free graded commutative algebra (symmetric coalgebra side).
/// Noncommutative: free associative algebra (tensor coalgebra side).
enum class Flavor { commutative, noncommutative };

struct Generator {
    std::uint32_t index = 0;
    int degree = 0;

    int parity() const { return degree & 1; }
    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// a_1..a_n with degree(a_i) = parities[i-1].
std::vector<Generator> make_generators(std::span<const int> degrees);

class Atom;
using Word = std::vector<Atom>;

/// Either a generator or the formal value of the square-zero operator on a
/// canonical word. Immutable; nabla atoms share their inner word.
class Atom {
public:
    static Atom gen(Generator g);
    /// `inner` must already be canonical for the flavor it is used in.
    static Atom nabla(Word inner);

    bool is_gen() const { return !inner_; }
    bool is_nabla() const { return static_cast<bool>(inner_); }
    const Generator& generator() const { return gen_; }
    const Word& inner() const { return *inner_; }
    int degree() const { return degree_; }
    int parity() const { return degree_ & 1; }

    friend std::strong_ordering operator<=>(const Atom& a, const Atom& b);
    friend bool operator==(const Atom& a, const Atom& b) { return (a <=> b) == 0; }

private:
    Generator gen_{};
    std::shared_ptr<const Word> inner_;
    int degree_ = 0;
};

int word_degree(const Word& w);

/// Canonical order on words: lexicographic over atoms, a proper prefix first.
/// Atoms: nabla atoms before generators; nabla atoms with longer inner words
/// first, then by inner word; generators by index.
std::strong_ordering compare_words(const Word& a, const Word& b);

struct WordLess {
    bool operator()(const Word& a, const Word& b) const { return compare_words(a, b) < 0; }
};

struct RawTerm {
    Word word;
    Scalar coeff;
};

/// Finite linear combination of canonical words with nonzero exact
/// coefficients.
class Expr {
public:
    using TermMap = std::map<Word, Scalar, WordLess>;

    explicit Expr(Flavor flavor = Flavor::commutative) : flavor_(flavor) {}

    static Expr zero(Flavor flavor) { return Expr(flavor); }
    static Expr generator(Generator g, Flavor flavor, Scalar coeff = 1);
    /// Brings arbitrary words into canonical form (see normalize()).
    static Expr from_word(Word w, Flavor flavor, Scalar coeff = 1);

    Flavor flavor() const { return flavor_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Common degree of all terms; nullopt for zero or inhomogeneous input.
    std::optional<int> degree() const;
    bool is_homogeneous() const;

    /// Coefficient of an already canonical word (zero when absent).
    Scalar coefficient(const Word& w) const;

    Expr& operator+=(const Expr& other);
    Expr& operator-=(const Expr& other);
    Expr& operator*=(const Scalar& s);
    friend Expr operator+(Expr a, const Expr& b) { return a += b; }
    friend Expr operator-(Expr a, const Expr& b) { return a -= b; }
    friend Expr operator*(Expr a, const Scalar& s) { return a *= s; }
    friend Expr operator*(const Scalar& s, Expr a) { return a *= s; }
    Expr operator-() const;

    friend bool operator==(const Expr& a, const Expr& b)
    {
        return a.flavor_ == b.flavor_ && a.terms_ == b.terms_;
    }

    /// Adds coeff * w; w must be canonical.
    void add_canonical(const Word& w, const Scalar& coeff);

private:
    Flavor flavor_;
    TermMap terms_;
};

/// Canonical form of a raw term list. Commutative: atoms sorted with the
/// Koszul sign, words with a repeated odd atom dropped. Both flavors: nabla
/// inner words canonicalized recursively (sign pulled out, a nabla of a lone
/// nabla atom is zero), like words merged, zero coefficients dropped.
Expr normalize(std::span<const RawTerm> raw, Flavor flavor);

/// Canonical form of one word: (sign, word) or nullopt when it vanishes.
std::optional<std::pair<int, Word>> canonicalize_word(const Word& w, Flavor flavor);

/// Product of two expressions of the same flavor. Throws ContractViolation on
/// flavor mismatch.
Expr multiply(const Expr& lhs, const Expr& rhs);

/// Product of a sequence of expressions (empty sequence is not allowed).
Expr multiply_all(std::span<const Expr> factors);

/// The uninterpreted square-zero degree +1 operator, extended linearly.
Expr apply_nabla(const Expr& e);

/// Simultaneous substitution: every generator with index in `values` is
/// replaced by the corresponding expression; nabla atoms are mapped through
/// apply_nabla. Replacement expressions must be homogeneous with the parity
/// of the generator they replace. Unlisted generators stay as they are.
Expr substitute(const Expr& e, const std::map<std::uint32_t, Expr>& values);

} // namespace hbraces
