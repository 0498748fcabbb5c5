#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "cybundle/split_bundle.hpp"
#include "oracles.hpp"

using namespace cybundle;
using cybundle::testing::sym_pow_enumerated;

namespace {

SplitBundle random_bundle(std::mt19937& rng, int max_rank = 6, int deg_span = 3) {
    std::uniform_int_distribution<int> rank_dist(0, max_rank);
    std::uniform_int_distribution<int> deg_dist(-deg_span, deg_span);
    SplitBundle e;
    const int r = rank_dist(rng);
    for (int i = 0; i < r; ++i) e.add(deg_dist(rng), 1);
    return e;
}

}  // namespace

TEST_CASE("line bundle cohomology on P1") {
    CHECK(h0_line(0) == 1);
    CHECK(h0_line(-1) == 0);
    CHECK(h0_line(2) == 3);
    CHECK(h1_line(-2) == 1);
    CHECK(h1_line(0) == 0);
    CHECK(h1_line(-5) == 4);
    for (long long a = -10; a <= 10; ++a) CHECK(h0_line(a) - h1_line(a) == a + 1);
}

TEST_CASE("bundle h0/h1 on the standard bundles") {
    const long long n = 3;
    const SplitBundle e = SplitBundle::standard_unbalanced(n);
    CHECK(h1_bundle(twist(e, -1)) == 1);
    CHECK(h1_bundle(e) == 0);
    CHECK(h0_bundle(e) == 4);
    for (long long m = 3; m <= 12; ++m) {
        const SplitBundle em = SplitBundle::standard_unbalanced(m);
        CHECK(h1_bundle(twist(em, -1)) == 1);
        CHECK(h1_bundle(em) == 0);
        CHECK(h0_bundle(em) == m + 1);
    }
}

TEST_CASE("twist, direct sum, tensor") {
    CHECK(twist(SplitBundle{{-1, 1}, {1, 1}}, 2) == SplitBundle{{1, 1}, {3, 1}});
    CHECK(direct_sum(SplitBundle{{0, 2}}, SplitBundle{{0, 1}, {1, 1}}) ==
          SplitBundle{{0, 3}, {1, 1}});
    CHECK(tensor(SplitBundle{{-1, 1}, {1, 1}}, SplitBundle{{-1, 1}, {1, 1}}) ==
          SplitBundle{{-2, 1}, {0, 2}, {2, 1}});
}

TEST_CASE("empty bundle is the direct_sum identity and tensor absorber") {
    const SplitBundle zero;
    const SplitBundle e{{-1, 1}, {0, 2}};
    CHECK(direct_sum(zero, e) == e);
    CHECK(tensor(zero, e) == zero);
    CHECK(zero.rank() == 0);
    CHECK(sym_pow(zero, 0) == SplitBundle{{0, 1}});
    CHECK(sym_pow(zero, 2) == zero);
}

TEST_CASE("sym_pow on the unbalanced rank-4 bundle") {
    const SplitBundle e{{-1, 1}, {0, 2}, {1, 1}};
    const SplitBundle s4 = sym_pow(e, 4);
    const SplitBundle expected{{-4, 1}, {-3, 2}, {-2, 4}, {-1, 6}, {0, 9},
                               {1, 6},  {2, 4},  {3, 2},  {4, 1}};
    CHECK(s4 == expected);
    CHECK(sym_pow(e, 0) == SplitBundle{{0, 1}});
    CHECK_THROWS_AS(sym_pow(e, -1), std::invalid_argument);
}

TEST_CASE("sym_pow rank formula for the trivial bundle") {
    for (long long n = 3; n <= 8; ++n) {
        const SplitBundle t = SplitBundle::trivial(n + 1);
        CHECK(sym_pow(t, n + 1).rank() == binomial(2 * n + 1, n + 1));
    }
    CHECK(sym_pow(SplitBundle::trivial(4), 4).rank() == 35);
}

TEST_CASE("sym_pow agrees with the enumeration oracle") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 80; ++trial) {
        const SplitBundle e = random_bundle(rng);
        for (long long d = 0; d <= 6; ++d) {
            const SplitBundle computed = sym_pow(e, d);
            const auto expected = sym_pow_enumerated(e, d);
            std::map<long long, BigInt> got(computed.summands().begin(),
                                            computed.summands().end());
            INFO("E = " << to_string(e) << ", d = " << d);
            CHECK(got == expected);
            CHECK(computed.rank() == monomial_count(e.rank(), d));
        }
    }
}

TEST_CASE("sym_pow is insensitive to summand insertion order") {
    std::mt19937 rng(7);
    std::vector<std::pair<long long, BigInt>> parts = {{-2, 1}, {-1, 2}, {0, 1}, {1, 3}, {3, 1}};
    SplitBundle reference;
    for (const auto& [d, m] : parts) reference.add(d, m);
    const SplitBundle want = sym_pow(reference, 5);
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(parts.begin(), parts.end(), rng);
        SplitBundle e;
        for (const auto& [d, m] : parts) e.add(d, m);
        CHECK(sym_pow(e, 5) == want);
    }
}

TEST_CASE("Riemann-Roch: h0 - h1 = degree + rank") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const SplitBundle e = random_bundle(rng, 6, 5);
        CHECK(h0_bundle(e) - h1_bundle(e) == e.degree() + e.rank());
    }
    // and for constructed bundles along the main path
    for (long long n = 3; n <= 6; ++n) {
        const SplitBundle s = sym_pow(SplitBundle::standard_unbalanced(n), n + 1);
        CHECK(h0_bundle(s) - h1_bundle(s) == s.degree() + s.rank());
        CHECK(s.degree() == 0);
    }
}

TEST_CASE("canonical form drops zero multiplicities") {
    SplitBundle e;
    e.add(2, 0);
    CHECK(e.empty());
    CHECK_THROWS_AS(e.add(1, -1), std::invalid_argument);
}

TEST_CASE("bundle notation round-trips") {
    CHECK(to_string(SplitBundle{{-1, 1}, {0, 2}, {1, 1}}) == "O(-1)+O^2+O(1)");
    CHECK(parse_bundle("O(-1)+O^2+O(1)") == SplitBundle{{-1, 1}, {0, 2}, {1, 1}});
    CHECK(parse_bundle("O") == SplitBundle{{0, 1}});
    CHECK(parse_bundle("O^35") == SplitBundle{{0, 35}});
    CHECK(parse_bundle("O(2)") == SplitBundle{{2, 1}});
    CHECK(parse_bundle("O(-4)^12") == SplitBundle{{-4, 12}});
    CHECK(parse_bundle("0").empty());
    CHECK(to_string(SplitBundle{}) == "0");
    CHECK(parse_bundle(" O(-1) + O ") == SplitBundle{{-1, 1}, {0, 1}});
    // duplicated degrees collapse into the canonical map
    CHECK(parse_bundle("O+O") == SplitBundle{{0, 2}});

    std::mt19937 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const SplitBundle e = random_bundle(rng, 5, 4);
        CHECK(parse_bundle(to_string(e)) == e);
    }
}

TEST_CASE("bundle notation rejects malformed input") {
    CHECK_THROWS_AS(parse_bundle(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("Q(1)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O(1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O(x)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O+"), std::invalid_argument);
    CHECK_THROWS_AS(parse_bundle("O O"), std::invalid_argument);
}

TEST_CASE("big multiplicities stay exact") {
    // S^{34} of the rank-34 unbalanced bundle has rank C(67,34) > 2^63
    const SplitBundle s = sym_pow(SplitBundle::standard_unbalanced(33), 34);
    CHECK(s.rank() == binomial(67, 34));
    CHECK(s.rank() > BigInt("9223372036854775807"));
    CHECK(s.degree() == 0);
}
