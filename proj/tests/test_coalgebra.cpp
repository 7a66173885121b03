#include <doctest.h>

#include "helpers.hpp"
#include "hbraces/error.hpp"

using namespace th;


TEST_CASE("deconcatenate")
{
    for (const auto& p : all_parity_vectors(2)) {
        const auto a = make_generators(p);
        const Block ab{{{g(a[0])}, {g(a[1])}}};
        const auto splits = deconcatenate(ab, symmetric);
        REQUIRE(splits.size() == 2);
        CHECK(splits[0].left == Block{{{g(a[0])}}});
        CHECK(splits[0].right == Block{{{g(a[1])}}});
        CHECK(splits[0].sign == 1);
        CHECK(splits[1].left == Block{{{g(a[1])}}});
        CHECK(splits[1].right == Block{{{g(a[0])}}});
        CHECK(splits[1].sign == (p[0] * p[1] ? -1 : 1));
    }
    const auto a = gens({1, 1, 0});
    const Block abc{{{g(a[0])}, {g(a[1])}, {g(a[2])}}};
    const auto cuts = deconcatenate(abc, tensor);
    REQUIRE(cuts.size() == 2);
    CHECK(cuts[0].left == Block{{{g(a[0])}}});
    CHECK(cuts[0].right == Block{{{g(a[1])}, {g(a[2])}}});
    CHECK(cuts[1].left == Block{{{g(a[0])}, {g(a[1])}}});
    CHECK(cuts[1].right == Block{{{g(a[2])}}});
    CHECK(cuts[0].sign == 1);
    CHECK(cuts[1].sign == 1);
    CHECK(deconcatenate(Block{{{g(a[0])}}}, symmetric).empty());
    CHECK(deconcatenate(abc, symmetric).size() == 6);
}

TEST_CASE("symmetric blocks absorb Koszul signs")
{
    const Generator a{1, 1}, b{2, 1}, c{3, 0};
    CoElem x(symmetric);
    x.add(Block{{{g(b)}, {g(a)}}}, 1);
    CHECK(x.coefficient(Block{{{g(a)}, {g(b)}}}) == Scalar(-1));
    CoElem y(symmetric);
    y.add(Block{{{g(a)}, {g(a)}}}, 1);
    CHECK(y.is_zero());
    CoElem z(symmetric);
    z.add(Block{{{g(c)}, {g(c)}}}, 1);
    CHECK(!z.is_zero());
    CoElem t(tensor);
    t.add(Block{{{g(b)}, {g(a)}}}, 1);
    CHECK(t.coefficient(Block{{{g(b)}, {g(a)}}}) == Scalar(1));
}

TEST_CASE("extend_morphism examples")
{
    const auto f = generic_series(6, Convention::factorial);
    const auto fp = generic_series(6, Convention::plain);
    for (const auto& p : all_parity_vectors(3)) {
        const auto a = make_generators(p);
        const std::vector<Generator> a2(a.begin(), a.begin() + 2);
        CHECK(extend_morphism(a2, f, symmetric) ==
              written(a2, {{0, 1}}, f[2], symmetric) + written(a2, {{0}, {1}}, f[1] * f[1], symmetric));

        CHECK(extend_morphism(a, f, symmetric) == morphism_display(a, f));

        const CoElem expected_t = written(a, {{0, 1, 2}}, fp[3], tensor) +
                                  written(a, {{0, 1}, {2}}, fp[2] * fp[1], tensor) +
                                  written(a, {{0}, {1, 2}}, fp[2] * fp[1], tensor) +
                                  written(a, {{0}, {1}, {2}}, fp[1] * fp[1] * fp[1], tensor);
        CHECK(extend_morphism(a, fp, tensor) == expected_t);
    }
    const auto a = gens({0, 0, 0});
    CHECK_THROWS_AS(extend_morphism(a, generic_series(2, Convention::factorial), symmetric), InsufficientOrder);
    CHECK_THROWS(extend_morphism(a, fp, symmetric));
}

TEST_CASE("coderive_nabla examples")
{
    for (const auto& p : all_parity_vectors(3)) {
        const auto a = make_generators(p);
        for (Flavor fl : {symmetric, tensor}) {
            const Expr A = Expr::generator(a[0], fl), B = Expr::generator(a[1], fl), C = Expr::generator(a[2], fl);
            std::vector<Expr> ab{A, B};
            std::vector<Expr> nab{apply_nabla(A), B};
            std::vector<Expr> anb{A, apply_nabla(B)};
            CoElem expected = CoElem::from_factors(nab, fl);
            CoElem second = CoElem::from_factors(anb, fl);
            second *= sign_power(p[0]);
            CHECK(coderive_nabla(CoElem::from_factors(ab, fl)) == expected + second);

            std::vector<Expr> single{multiply(A, B)};
            std::vector<Expr> nsingle{apply_nabla(multiply(A, B))};
            CHECK(coderive_nabla(CoElem::from_factors(single, fl)) == CoElem::from_factors(nsingle, fl));

            std::vector<Expr> abc{A, B, C};
            std::vector<Expr> t1{apply_nabla(A), B, C}, t2{A, apply_nabla(B), C}, t3{A, B, apply_nabla(C)};
            CoElem e1 = CoElem::from_factors(t1, fl), e2 = CoElem::from_factors(t2, fl),
                   e3 = CoElem::from_factors(t3, fl);
            e2 *= sign_power(p[0]);
            e3 *= sign_power(p[0] + p[1]);
            CHECK(coderive_nabla(CoElem::from_factors(abc, fl)) == e1 + e2 + e3);
        }
    }
}

TEST_CASE("project_series examples")
{
    const auto g = generic_series(4, Convention::factorial);
    for (const auto& p : all_parity_vectors(3)) {
        const auto a = make_generators(p);
        const Expr A = Expr::generator(a[0], symmetric), B = Expr::generator(a[1], symmetric),
                   C = Expr::generator(a[2], symmetric);
        std::vector<Expr> one{A};
        CHECK(project_series(CoElem::from_factors(one, symmetric), g) == A * g[1]);
        std::vector<Expr> t1{apply_nabla(A), B}, t2{A, apply_nabla(B)};
        CoElem x = CoElem::from_factors(t1, symmetric);
        CoElem y = CoElem::from_factors(t2, symmetric);
        y *= sign_power(p[0]);
        const Expr expected = (multiply(apply_nabla(A), B) + multiply(A, apply_nabla(B)) * sign_power(p[0])) * g[2];
        CHECK(project_series(x + y, g) == expected);
        std::vector<Expr> xyz{A, B, C};
        const std::vector<Expr> prod{A, B, C};
        CHECK(project_series(CoElem::from_factors(xyz, symmetric), g) == multiply_all(prod) * g[3]);
    }
    const auto a = gens({0, 0, 0, 0, 0});
    CoElem big = CoElem::from_generators(a, symmetric);
    CHECK_THROWS_AS(project_series(big, g), InsufficientOrder);
}

TEST_CASE("coderivation law and square zero")
{
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            const auto a = make_generators(p);
            for (Flavor fl : {symmetric, tensor}) {
                const CoElem x = CoElem::from_generators(a, fl);
                CHECK(equal(coproduct(coderive_nabla(x)), coderive_tensor(coproduct(x), fl)));
                CHECK(coderive_nabla(coderive_nabla(x)).is_zero());
            }
        }
    }
    // blocks whose slots are products and nabla atoms
    std::mt19937_64 rng(5);
    const auto a = gens({0, 1, 1, 0});
    for (int trial = 0; trial < 60; ++trial) {
        for (Flavor fl : {symmetric, tensor}) {
            std::vector<Expr> slots;
            const std::size_t k = 1 + trial % 4;
            for (std::size_t i = 0; i < k; ++i)
                slots.push_back(term(random_word(rng, a, fl, 1, 2), fl));
            const CoElem x = CoElem::from_factors(slots, fl);
            CHECK(equal(coproduct(coderive_nabla(x)), coderive_tensor(coproduct(x), fl)));
            CHECK(coderive_nabla(coderive_nabla(x)).is_zero());
        }
    }
}

TEST_CASE("extend_morphism is comultiplicative")
{
    const auto fs = generic_series(5, Convention::factorial);
    const auto ft = generic_series(5, Convention::plain);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& p : all_parity_vectors(n)) {
            const auto a = make_generators(p);
            for (Flavor fl : {symmetric, tensor}) {
                const auto& f = fl == symmetric ? fs : ft;
                const CoTensor lhs = coproduct(extend_morphism(a, f, fl));
                CoTensor rhs;
                for (const auto& [key, coeff] : coproduct(CoElem::from_generators(a, fl)))
                    accumulate(rhs,
                               tensor_product(extend_morphism(key.first, f, fl), extend_morphism(key.second, f, fl)),
                               coeff);
                CHECK(equal(lhs, rhs));
            }
        }
    }
}

TEST_CASE("pullback examples with generic coefficients")
{
    const auto f = generic_series(6, Convention::factorial);
    const auto g = invert(f);
    const Flavor C = symmetric;
    for (const auto& p : all_parity_vectors(3)) {
        const auto a = make_generators(p);
        const auto expected = pullback_displays(a, f, g);
        for (std::size_t n = 1; n <= 3; ++n) {
            const std::vector<Generator> head(a.begin(), a.begin() + static_cast<long>(n));
            CHECK(pullback_brace(head, f, C) == expected[n - 1]);
        }
        CHECK(*pullback_brace(a, f, C).degree() == p[0] + p[1] + p[2] + 1);
    }
    CHECK_THROWS_AS(pullback_brace(gens({0, 0, 0}), generic_series(2, Convention::factorial), C),
                    InsufficientOrder);
}

TEST_CASE("pairing")
{
    const Generator a{1, 0};
    const std::vector<std::uint32_t> x{1};
    CHECK(pairing(x, std::vector<Generator>{a}) == Scalar(1));
    CHECK(pairing(std::vector<std::uint32_t>{1, 1}, std::vector<Generator>{a, a}) == Scalar(2));
    const auto a12 = gens({0, 0});
    CHECK(pairing(std::vector<std::uint32_t>{1, 2}, a12) == Scalar(1));
    CHECK(pairing(std::vector<std::uint32_t>{2, 1}, a12) == Scalar(1));
    CHECK(pairing(std::vector<std::uint32_t>{3}, std::vector<Generator>{a}) == Scalar(0));
    for (std::size_t n = 1; n <= 6; ++n) {
        const std::vector<std::uint32_t> labels(n, 1);
        const std::vector<Generator> elems(n, a);
        CHECK(pairing(labels, elems) == Scalar::factorial(static_cast<unsigned>(n)));
    }
    CHECK_THROWS_AS(pairing(std::vector<std::uint32_t>{1, 1}, std::vector<Generator>{a}), ContractViolation);
}

TEST_CASE("diagonal")
{
    const Generator even{1, 0}, odd{2, 1};
    for (Flavor fl : {symmetric, tensor})
        CHECK(diagonal(even, 1, fl) == single_block(Block{{{g(even)}}}, fl));
    CHECK(diagonal(even, 2, symmetric) == single_block(Block{{{g(even)}, {g(even)}}}, symmetric, Scalar(1, 2)));
    CHECK(diagonal(even, 2, tensor) == single_block(Block{{{g(even)}, {g(even)}}}, tensor));
    CHECK(diagonal(odd, 2, symmetric).is_zero());
    CHECK(!diagonal(odd, 2, tensor).is_zero());

    // phi on the diagonal: the one-slot part carries f_n / n!, resp. f_n
    const auto e = preset(Preset::exp_minus_one, 8, Convention::factorial);
    const auto geo = preset(Preset::geometric, 8, Convention::plain);
    for (std::size_t n = 1; n <= 6; ++n) {
        const Block power{{Word(n, g(even))}};
        CHECK(extend_morphism(diagonal(even, n, symmetric), e).coefficient(power) ==
              Scalar(1) / Scalar::factorial(static_cast<unsigned>(n)));
        CHECK(extend_morphism(diagonal(even, n, tensor), geo).coefficient(power) == Scalar(1));
    }
}
