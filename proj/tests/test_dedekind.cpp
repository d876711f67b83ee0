#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "partfin/encodings/dedekind.hpp"
#include "partfin/enumerate.hpp"

using namespace partfin;

namespace {

// base x=0, y=1, z=2; markers m0.. follow.
const Carrier xyz({"x", "y", "z"});

SetPartition parse(const MarkerUniverse& u, std::vector<std::vector<std::string>> blocks)
{
    std::vector<std::vector<Label>> out;
    for (const auto& b : blocks) {
        out.emplace_back();
        for (const auto& name : b)
            out.back().push_back(*u.combined().find(name));
    }
    return SetPartition::from_blocks(u.size(), out);
}

} // namespace

TEST_CASE("dedekind encoding examples", "[dedekind]")
{
    MarkerUniverse two(xyz, 2);
    CHECK(seq_to_partition_dedekind(FinSeq{}, two) == SetPartition::singletons(5));

    MarkerUniverse four(xyz, 4);
    auto p = seq_to_partition_dedekind(FinSeq{0, 1, 0}, four);
    CHECK(p == parse(four, {{"x", "m0", "m2"}, {"y", "m1"}, {"z"}, {"m3"}}));
    CHECK(format_partition(p, four.combined()) == "{x m0 m2} {y m1} {z} {m3}");

    CHECK(seq_to_partition_dedekind(FinSeq{0}, four) ==
          parse(four, {{"x", "m0"}, {"y"}, {"z"}, {"m1"}, {"m2"}, {"m3"}}));
}

TEST_CASE("dedekind encoding preconditions", "[dedekind]")
{
    MarkerUniverse u(xyz, 2);
    CHECK_THROWS_AS(seq_to_partition_dedekind(FinSeq{0, 1, 2}, u), std::invalid_argument);
    CHECK_THROWS_AS(seq_to_partition_dedekind(FinSeq{3}, u), std::invalid_argument);
}

TEST_CASE("dedekind decoding examples", "[dedekind]")
{
    MarkerUniverse four(xyz, 4);
    CHECK(partition_to_seq_dedekind(parse(four, {{"x", "m0", "m2"}, {"y", "m1"}, {"z"}, {"m3"}}), four) ==
          FinSeq{0, 1, 0});
    CHECK(partition_to_seq_dedekind(SetPartition::singletons(7), four) == FinSeq{});
    CHECK_THROWS_AS(partition_to_seq_dedekind(parse(four, {{"m0", "m1"}, {"x"}, {"y"}, {"z"}, {"m2"}, {"m3"}}), four),
                    NotInRange);
}

TEST_CASE("dedekind decoder rejects every shape violation", "[dedekind]")
{
    MarkerUniverse four(xyz, 4);
    // two base labels together
    CHECK_THROWS_AS(partition_to_seq_dedekind(parse(four, {{"x", "y"}, {"z"}, {"m0"}, {"m1"}, {"m2"}, {"m3"}}), four),
                    NotInRange);
    // marker m1 used while m0 is free
    CHECK_THROWS_AS(partition_to_seq_dedekind(parse(four, {{"x", "m1"}, {"y"}, {"z"}, {"m0"}, {"m2"}, {"m3"}}), four),
                    NotInRange);
    // wrong carrier
    CHECK_THROWS_AS(partition_to_seq_dedekind(SetPartition::singletons(6), four), NotInRange);
}

TEST_CASE("dedekind encoding is injective with ≤ 1 base label per block (exhaustive)", "[dedekind]")
{
    MarkerUniverse u(Carrier(3), 4);
    auto seqs = enumerate_sequences(Carrier(3), 4);
    REQUIRE(seqs.size() == 121);
    std::set<SetPartition> images;
    for (const auto& a : seqs) {
        auto p = seq_to_partition_dedekind(a, u);
        for (const auto& block : p.blocks()) {
            auto base = std::count_if(block.begin(), block.end(), [&](Label x) { return u.is_base(x); });
            CHECK(base <= 1);
        }
        CHECK(partition_to_seq_dedekind(p, u) == a);
        images.insert(p);
    }
    CHECK(images.size() == 121);
}

TEST_CASE("dedekind decoder accepts exactly the image (exhaustive over all partitions)", "[dedekind]")
{
    // Base of 2 and 3 markers: 5 elements, 52 partitions; 1+2+4+8 = 15 images.
    MarkerUniverse u(Carrier(2), 3);
    std::size_t decoded = 0;
    for (const auto& p : enumerate_partitions(Carrier(u.size()))) {
        try {
            auto a = partition_to_seq_dedekind(p, u);
            CHECK(seq_to_partition_dedekind(a, u) == p);
            ++decoded;
        } catch (const NotInRange&) {
        }
    }
    CHECK(decoded == 15);
}
