#include <doctest.h>

#include "helpers.hpp"
#include "hbraces/error.hpp"
#include "hbraces/render.hpp"

using namespace th;

TEST_CASE("text rendering")
{
    CHECK(render_text(koszul_brace(gens({0, 0}))) == "∇(a1 a2) - ∇(a1) a2 - ∇(a2) a1");
    CHECK(render_text(borjeson_brace(gens({1, 0, 0}))) == "∇(a1 a2 a3) - ∇(a1 a2) a3 + a1 ∇(a2 a3) - a1 ∇(a2) a3");
    CHECK(render_text(Expr::zero(Flavor::commutative)) == "0");
    const Generator a{1, 0};
    CHECK(render_text(Expr::generator(a, Flavor::commutative, Scalar(-3, 4))) == "-3/4 a1");
    CHECK(render_text(Expr::generator(a, Flavor::commutative, Scalar(2)) +
                      Expr::generator(Generator{2, 0}, Flavor::commutative, Scalar(-1, 2))) == "2 a1 - 1/2 a2");
}

TEST_CASE("latex rendering")
{
    CHECK(render_latex(koszul_brace(gens({0, 0}))) ==
          "\\nabla(a_{1} a_{2}) - \\nabla(a_{1}) a_{2} - \\nabla(a_{2}) a_{1}");
    const Generator a{12, 0};
    CHECK(render_latex(Expr::generator(a, Flavor::noncommutative, Scalar(-3, 4))) == "-\\frac{3}{4} a_{12}");
    CHECK(render_latex(Expr::zero(Flavor::noncommutative)) == "0");
    CHECK(render(koszul_brace(gens({0})), Format::latex) == "\\nabla(a_{1})");
}

TEST_CASE("json round trip")
{
    std::mt19937_64 rng(77);
    const auto a = gens({0, 1, 1, 0, 1});
    for (int trial = 0; trial < 100; ++trial) {
        const Flavor fl = trial % 2 ? Flavor::noncommutative : Flavor::commutative;
        const Expr e = random_expr(rng, a, fl, 3, 5, 5);
        const std::string text = render_json(e);
        CHECK(parse_json(text) == e);
        CHECK(render_json(parse_json(text)) == text);
    }
    CHECK(parse_json(render_json(Expr::zero(Flavor::noncommutative))) == Expr::zero(Flavor::noncommutative));
}

TEST_CASE("json parsing normalizes and rejects bad input")
{
    const std::string swapped = R"({"flavor":"commutative","generators":[{"index":1,"degree":1},{"index":2,"degree":1}],
        "terms":[{"coeff":"2/4","word":[{"gen":2},{"gen":1}]}]})";
    const Generator a{1, 1}, b{2, 1};
    CHECK(parse_json(swapped) == term({g(a), g(b)}, Flavor::commutative, Scalar(-1, 2)));
    CHECK_THROWS_AS(parse_json("not json"), ParseError);
    CHECK_THROWS_AS(parse_json(R"({"flavor":"sideways","terms":[]})"), ParseError);
    CHECK_THROWS_AS(parse_json(R"({"flavor":"commutative","generators":[],"terms":[{"coeff":"1","word":[{"gen":3}]}]})"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_json(R"({"flavor":"commutative","generators":[{"index":1,"degree":0}],"terms":[{"coeff":"1/0","word":[{"gen":1}]}]})"),
        ParseError);
    CHECK(parse_format("latex") == Format::latex);
    CHECK_THROWS_AS(parse_format("html"), UsageError);
}

TEST_CASE("rendering is deterministic")
{
    const auto a = gens({1, 0, 1, 1});
    const Expr e = koszul_brace(a);
    for (Format f : {Format::text, Format::latex, Format::json})
        CHECK(render(e, f) == render(koszul_brace(a), f));
}
