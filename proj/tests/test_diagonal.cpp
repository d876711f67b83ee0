#include <catch2/catch_amalgamated.hpp>

#include "partfin/encodings/diagonal.hpp"

using namespace partfin;

namespace {

// Tabulates G(0..K) on 0..span from the definition, bottom-up.
std::vector<std::vector<bool>> tabulate(const SubsetFamily& base, Nat K, Nat span)
{
    std::vector<std::vector<bool>> g(K + 1, std::vector<bool>(span + 1));
    for (Nat k = 0; k <= K; ++k)
        for (Nat xi = 0; xi <= span; ++xi) {
            const Nat m = xi / 2;
            if (xi % 2 == 0)
                g[k][xi] = !base(m).contains(xi);
            else
                g[k][xi] = m < k ? !g[m][xi] : true;
        }
    return g;
}

} // namespace

TEST_CASE("pairing F", "[diagonal]")
{
    CHECK(pairing_F(0) == TwoCopyOrdinal{0, 0});
    CHECK(pairing_F(4) == TwoCopyOrdinal{0, 2});
    CHECK(pairing_F(7) == TwoCopyOrdinal{1, 3});
    for (Nat xi = 0; xi < 1000; ++xi)
        CHECK(pairing_F_inverse(pairing_F(xi)) == xi);
    CHECK(TwoCopyOrdinal{0, 100} < TwoCopyOrdinal{1, 0});
    CHECK_THROWS_AS(pairing_F_inverse({2, 0}), std::invalid_argument);
}

TEST_CASE("base family descriptions", "[diagonal]")
{
    auto s = parse_base_family("singletons");
    CHECK(s(5).members_below(20) == std::vector<Nat>{5});
    CHECK(parse_base_family("singleton:3")(2).members_below(20) == std::vector<Nat>{5});
    CHECK(parse_base_family("upto:1")(2).members_below(20) == std::vector<Nat>{0, 1, 2});
    CHECK(parse_base_family("evens")(9).members_below(7) == std::vector<Nat>{0, 2, 4, 6});
    CHECK(parse_base_family("periodic:100")(1).members_below(9) == std::vector<Nat>{2, 5, 8});
    for (auto bad : {"", "odds", "singleton", "singleton:x", "periodic:", "periodic:12", "evens:2", "upto"})
        CHECK_THROWS_AS(parse_base_family(bad), std::invalid_argument);
}

TEST_CASE("diagonal family over singletons, hand-derived", "[diagonal]")
{
    DiagonalFamily G(parse_base_family("singletons"));
    for (Nat xi = 0; xi <= 200; ++xi) {
        INFO("xi = " << xi);
        CHECK(G.contains(0, xi) == (xi != 0));
        CHECK(G.contains(1, xi) == (xi > 1));
    }
    CHECK(G(0).description() == "G(0)");
    CHECK(G(1).members_below(5) == std::vector<Nat>{2, 3, 4});
}

TEST_CASE("vacuous branch: F(xi) = (1,m) with m >= k is always a member", "[diagonal]")
{
    for (auto desc : {"singletons", "evens", "periodic:0110", "upto:4"}) {
        DiagonalFamily G(parse_base_family(desc));
        for (Nat k = 0; k < 10; ++k)
            for (Nat m = k; m < k + 10; ++m)
                CHECK(G.contains(k, 2 * m + 1));
    }
}

TEST_CASE("recursive evaluation agrees with a bottom-up table", "[diagonal]")
{
    for (auto desc : {"singletons", "evens", "periodic:0110", "upto:4", "singleton:7"}) {
        INFO(desc);
        auto base = parse_base_family(desc);
        DiagonalFamily G(base);
        auto table = tabulate(base, 64, 300);
        for (Nat k = 0; k <= 64; ++k)
            for (Nat xi = 0; xi <= 300; ++xi)
                REQUIRE(G.contains(k, xi) == table[k][xi]);
    }
}

TEST_CASE("distinguishing witnesses", "[diagonal]")
{
    DiagonalFamily G(parse_base_family("singletons"));
    CHECK(distinguishing_witness(0, {0, 0}) == 0);
    CHECK(G.indexed_contains({0, 0}, 0));
    CHECK_FALSE(G.contains(0, 0));

    CHECK(distinguishing_witness(1, {1, 0}) == 1);
    CHECK(G.contains(0, 1));
    CHECK_FALSE(G.contains(1, 1));

    CHECK(distinguishing_witness(2, {0, 3}) == 6);
    CHECK(witness_separates(G, 2, {0, 3}));

    CHECK_THROWS_AS(distinguishing_witness(2, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(distinguishing_witness(0, {1, 0}), std::invalid_argument);
}

TEST_CASE("every witness separates, K = 64", "[diagonal]")
{
    for (auto desc : {"singletons", "evens", "periodic:1101", "upto:3"}) {
        INFO(desc);
        DiagonalFamily G(parse_base_family(desc));
        for (Nat k = 0; k <= 64; ++k) {
            for (Nat m = 0; m < k; ++m)
                REQUIRE(witness_separates(G, k, {1, m}));
            for (Nat m = 0; m <= 64; ++m)
                REQUIRE(witness_separates(G, k, {0, m}));
        }
    }
}

TEST_CASE("a non-injective base still yields sets distinct from every earlier one", "[diagonal]")
{
    // evens is the same set at every index; the diagonal sets still differ from it and each other.
    DiagonalFamily G(parse_base_family("evens"));
    for (Nat k = 1; k <= 20; ++k)
        for (Nat m = 0; m < k; ++m) {
            const Nat xi = distinguishing_witness(k, {1, m});
            CHECK(G.contains(k, xi) != G.contains(m, xi));
        }
}
