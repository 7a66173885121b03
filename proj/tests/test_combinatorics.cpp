#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hbraces/combinatorics.hpp"
#include "hbraces/error.hpp"
#include "hbraces/scalar.hpp"

using namespace hbraces;

TEST_CASE("scalar arithmetic is exact and reduced")
{
    Scalar a(6, -4);
    CHECK(a.to_string() == "-3/2");
    CHECK((a + Scalar(3, 2)).is_zero());
    CHECK(Scalar::parse("10/4") == Scalar(5, 2));
    CHECK(Scalar::parse("-7") == Scalar(-7));
    CHECK(Scalar::parse("+3/9").to_string() == "1/3");
    CHECK_THROWS_AS(Scalar::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Scalar::parse("abc"), ParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ParseError);
    CHECK_THROWS_AS(Scalar::parse("1.5"), ParseError);
    CHECK(Scalar::factorial(20).to_string() == "2432902008176640000");
    CHECK(Scalar::factorial(25).to_string() == "15511210043330985984000000");
    CHECK(sign_power(3) == Scalar(-1));
    CHECK(sign_power(-2) == Scalar(1));
}

TEST_CASE("koszul_sign examples")
{
    const std::vector<std::size_t> id{0, 1, 2};
    for (const auto& p : all_parity_vectors(3))
        CHECK(koszul_sign(id, p) == 1);
    CHECK(koszul_sign(std::vector<std::size_t>{1, 0}, std::vector<int>{1, 1}) == -1);
    CHECK(koszul_sign(std::vector<std::size_t>{1, 0}, std::vector<int>{1, 0}) == 1);
    // (a2, a3, a1) with parities (1, 1, 0)
    CHECK(koszul_sign(std::vector<std::size_t>{1, 2, 0}, std::vector<int>{1, 1, 0}) == -1);
    CHECK_THROWS_AS(koszul_sign(std::vector<std::size_t>{0, 1}, std::vector<int>{1}), ContractViolation);
    CHECK_THROWS_AS(koszul_sign(std::vector<std::size_t>{0, 0}, std::vector<int>{1, 1}), ContractViolation);
}

TEST_CASE("koszul_sign is multiplicative")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 7;
        Permutation s(n), t(n);
        std::iota(s.begin(), s.end(), std::size_t{0});
        std::iota(t.begin(), t.end(), std::size_t{0});
        std::shuffle(s.begin(), s.end(), rng);
        std::shuffle(t.begin(), t.end(), rng);
        ParityVector p(n);
        for (auto& x : p)
            x = static_cast<int>(rng() & 1);
        // first reorder by t, then reorder the result by s
        Permutation st(n);
        ParityVector pt(n);
        for (std::size_t k = 0; k < n; ++k) {
            st[k] = t[s[k]];
            pt[k] = p[t[k]];
        }
        CHECK(koszul_sign(st, p) == koszul_sign(s, pt) * koszul_sign(t, p));
    }
}

TEST_CASE("unshuffles")
{
    CHECK(unshuffles(1, 1).size() == 2);
    CHECK(unshuffles(2, 1).size() == 3);
    CHECK(unshuffles(2, 2).size() == 6);
    CHECK(unshuffles(0, 3).size() == 1);
    const auto u = unshuffles(1, 1);
    CHECK(u[0] == Permutation{0, 1});
    CHECK(u[1] == Permutation{1, 0});
    for (std::size_t a = 0; a <= 5; ++a) {
        for (std::size_t b = 0; b <= 5; ++b) {
            const auto list = unshuffles(a, b);
            CHECK(list.size() == binomial(static_cast<unsigned>(a + b), static_cast<unsigned>(a)));
            CHECK(std::is_sorted(list.begin(), list.end()));
            for (const auto& p : list) {
                CHECK(std::is_sorted(p.begin(), p.begin() + static_cast<long>(a)));
                CHECK(std::is_sorted(p.begin() + static_cast<long>(a), p.end()));
            }
        }
    }
}

TEST_CASE("compositions")
{
    CHECK(compositions(0) == std::vector<std::vector<std::size_t>>{{}});
    CHECK(compositions(1) == std::vector<std::vector<std::size_t>>{{1}});
    CHECK(compositions(3) == std::vector<std::vector<std::size_t>>{{3}, {1, 2}, {2, 1}, {1, 1, 1}});
    for (std::size_t r = 1; r <= 12; ++r) {
        const auto list = compositions(r);
        CHECK(list.size() == (std::size_t{1} << (r - 1)));
        for (const auto& c : list)
            CHECK(std::accumulate(c.begin(), c.end(), std::size_t{0}) == r);
    }
}

TEST_CASE("set partitions")
{
    CHECK(set_partitions(1).size() == 1);
    CHECK(set_partitions(3).size() == 5);
    CHECK(set_partitions(4).size() == 15);
    for (unsigned n = 1; n <= 8; ++n) {
        const auto list = set_partitions(n);
        CHECK(list.size() == bell_number(n));
        for (const auto& part : list) {
            std::vector<std::size_t> seen;
            for (std::size_t b = 0; b < part.size(); ++b) {
                CHECK(!part[b].empty());
                CHECK(std::is_sorted(part[b].begin(), part[b].end()));
                if (b > 0)
                    CHECK(part[b - 1].front() < part[b].front());
                seen.insert(seen.end(), part[b].begin(), part[b].end());
            }
            std::sort(seen.begin(), seen.end());
            std::vector<std::size_t> all(n);
            std::iota(all.begin(), all.end(), std::size_t{0});
            CHECK(seen == all);
        }
    }
}

TEST_CASE("parity vectors")
{
    const auto v = all_parity_vectors(3);
    REQUIRE(v.size() == 8);
    CHECK(v.front() == ParityVector{0, 0, 0});
    CHECK(v[1] == ParityVector{0, 0, 1});
    CHECK(v.back() == ParityVector{1, 1, 1});
}
