#include <catch2/catch_amalgamated.hpp>

#include "partfin/types.hpp"

using namespace partfin;

TEST_CASE("restricted growth strings are validated", "[types]")
{
    CHECK(is_restricted_growth(std::vector<Label>{}));
    CHECK(is_restricted_growth(std::vector<Label>{0, 0, 1, 0, 2}));
    CHECK_FALSE(is_restricted_growth(std::vector<Label>{1}));
    CHECK_FALSE(is_restricted_growth(std::vector<Label>{0, 2}));
    CHECK_THROWS_AS(SetPartition::from_rgs({0, 2, 1}), std::invalid_argument);
}

TEST_CASE("from_blocks canonicalizes block order", "[types]")
{
    auto p = SetPartition::from_blocks(3, {{2}, {1, 0}});
    CHECK(std::vector<Label>(p.rgs().begin(), p.rgs().end()) == std::vector<Label>{0, 0, 1});
    CHECK(p.blocks() == std::vector<std::vector<Label>>{{0, 1}, {2}});
    CHECK(p.block_count() == 2);
    CHECK(p.max_block_size() == 2);

    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SetPartition::from_blocks(2, {{0}, {}, {1}}), std::invalid_argument);
}

TEST_CASE("block_of reads the containing block", "[types]")
{
    auto p = SetPartition::from_blocks(3, {{0, 1}, {2}});
    CHECK(p.block_of(0) == std::vector<Label>{0, 1});
    CHECK(p.block_of(2) == std::vector<Label>{2});
    CHECK(SetPartition::singletons(3).block_of(2) == std::vector<Label>{2});
    CHECK_THROWS_AS(p.block_of(3), std::out_of_range);
}

TEST_CASE("carrier names", "[types]")
{
    Carrier c({"x", "y", "z"});
    CHECK(c.size() == 3);
    CHECK(c.find("y") == Label{1});
    CHECK_FALSE(c.find("w"));
    CHECK_THROWS_AS(Carrier({"x", "x"}), std::invalid_argument);

    Carrier plain(4);
    CHECK(plain.name(3) == "3");
    CHECK(plain.find("3") == Label{3});
    CHECK_FALSE(plain.find("4"));
}

TEST_CASE("sequences", "[types]")
{
    FinSeq s{2, 0, 2};
    CHECK_FALSE(s.is_injective());
    CHECK(s.entry_set() == std::vector<Label>{0, 2});
    CHECK(FinSeq{}.is_injective());
    CHECK_THROWS_AS(FinSeq::injective({1, 1}), std::invalid_argument);
    CHECK(format_seq(s, Carrier({"a", "b", "c"})) == "c a c");
    CHECK(format_partition(SetPartition::from_blocks(3, {{0, 2}, {1}}), Carrier({"a", "b", "c"})) ==
          "{a c} {b}");
}
