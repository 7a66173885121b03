#include <doctest.h>

#include "helpers.hpp"
#include "hbraces/checker.hpp"
#include "hbraces/error.hpp"

using namespace th;

TEST_CASE("trivial families pass both checkers")
{
    const auto l = check_l_infinity(BraceFamily::trivial(Flavor::commutative), 4);
    CHECK(l.passed());
    CHECK(l.checked_arities == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(l.parity_vectors_checked == 2 + 4 + 8 + 16);
    CHECK(check_a_infinity(BraceFamily::trivial(Flavor::noncommutative), 4).passed());
}

TEST_CASE("koszul and borjeson families pass")
{
    const auto l = check_l_infinity(BraceFamily::koszul(), 4);
    CHECK(l.passed());
    CHECK(l.parity_vectors_checked == 30);
    CHECK(check_a_infinity(BraceFamily::borjeson(), 5).passed());
}

TEST_CASE("checkers reject the wrong flavor")
{
    CHECK_THROWS_AS(check_l_infinity(BraceFamily::borjeson(), 2), ContractViolation);
    CHECK_THROWS_AS(check_a_infinity(BraceFamily::koszul(), 2), ContractViolation);
}

TEST_CASE("relation summands are homogeneous of degree sum + 2")
{
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            const auto a = make_generators(p);
            int total = 2;
            for (int x : p)
                total += x;
            for (const Expr& s : l_infinity_summands(BraceFamily::koszul(), a))
                CHECK((s.is_zero() || s.degree() == total));
            for (const Expr& s : a_infinity_summands(BraceFamily::borjeson(), a))
                CHECK((s.is_zero() || s.degree() == total));
            CHECK(l_infinity_residual(BraceFamily::koszul(), a).is_zero());
            CHECK(a_infinity_residual(BraceFamily::borjeson(), a).is_zero());
        }
    }
}

TEST_CASE("apply_brace extends multilinearly")
{
    const Flavor C = Flavor::commutative;
    const auto a = gens({0, 1, 1});
    // x = 3 a2 + a1 a3 is homogeneous of degree 1
    const Expr x = Expr::generator(a[1], C) * Scalar(3) + multiply(Expr::generator(a[0], C), Expr::generator(a[2], C));
    const Expr y = Expr::generator(a[2], C);
    const std::vector<Expr> args{x, y};
    const std::vector<Expr> args0{Expr::generator(a[1], C), y};
    const std::vector<Expr> args1{multiply(Expr::generator(a[0], C), Expr::generator(a[2], C)), y};
    const auto k = BraceFamily::koszul();
    CHECK(apply_brace(k, args) == apply_brace(k, args0) * Scalar(3) + apply_brace(k, args1));
    CHECK(apply_brace(k, args0) == koszul_brace(std::vector<Generator>{a[1], a[2]}));
    CHECK(!apply_brace(k, args1).is_zero());
    const std::vector<Expr> mixed{Expr::generator(a[0], C) + Expr::generator(a[1], C), y};
    CHECK_THROWS_AS(apply_brace(k, mixed), ContractViolation);
}

TEST_CASE("mutated families fail")
{
    const auto kr = check_l_infinity(BraceFamily::koszul().with_mutation({2, 1, Mutation::Action::flip_sign}), 5);
    REQUIRE(!kr.passed());
    CHECK(kr.first_failure->arity <= 4);
    REQUIRE(kr.first_failure->residual.has_value());
    CHECK(!kr.first_failure->residual->is_zero());

    const auto br = check_a_infinity(BraceFamily::borjeson().with_mutation({3, 3, Mutation::Action::drop}), 5);
    REQUIRE(!br.passed());
    CHECK(br.first_failure->arity <= 4);
    CHECK(br.first_failure->arity >= 3);
}
