#include <catch2/catch_amalgamated.hpp>

#include "partfin/counting.hpp"
#include "partfin/enumerate.hpp"
#include "partfin/fraenkel/equivariance.hpp"
#include "partfin/fraenkel/support.hpp"

using namespace partfin;

TEST_CASE("orbit decomposition examples", "[orbits]")
{
    AtomSet A(6);
    auto group = fix_group(A, Support({0, 1}));
    std::vector<FinSeq> singles{{2}, {3}, {4}, {5}};
    auto orbits = orbit_decomposition(singles, group);
    REQUIRE(orbits.size() == 1);
    CHECK(orbits[0].size() == 4);
    CHECK(orbits[0].stabilizer.size() == 6);

    auto fixed = orbit_decomposition(std::vector<FinSeq>{{0, 1}}, group);
    REQUIRE(fixed.size() == 1);
    CHECK(fixed[0].size() == 1);

    auto over_e = orbit_decomposition(injective_sequences_over(Support({0, 1})), group);
    CHECK(over_e.size() == 5);
    for (const auto& o : over_e)
        CHECK(o.size() == 1);

    CHECK_THROWS_AS(orbit_decomposition(std::vector<FinSeq>{{2}}, group), std::invalid_argument);
}

TEST_CASE("orbit-stabilizer identity on every record", "[orbits]")
{
    for (std::size_t e = 0; e <= 3; ++e) {
        AtomSet A(6);
        auto group = fix_group(A, Support::first(e));
        const auto order = group.elements().size();
        std::size_t covered = 0;
        for (const auto& o : orbit_decomposition(enumerate_injective_sequences(A.carrier()), group)) {
            CHECK(o.size() * o.stabilizer.size() == order);
            covered += o.size();
        }
        CHECK(covered == arrangement_count(6));
        for (const auto& o : orbit_decomposition(enumerate_partitions(A.carrier(), 2), group))
            CHECK(o.size() * o.stabilizer.size() == order);
    }
}

TEST_CASE("certifier: injective sequences into 2-bounded partitions under fix({0,1})", "[certifier]")
{
    AtomSet A(6);
    auto group = fix_group(A, Support({0, 1}));
    auto xs = enumerate_injective_sequences(A.carrier());
    auto ys = enumerate_partitions(A.carrier(), 2);
    auto verdict = equivariant_injection_exists(xs, ys, group);
    REQUIRE_FALSE(verdict.exists);
    REQUIRE(verdict.certificate);
    const auto& cert = *verdict.certificate;
    CHECK(cert.x_fixed == 5);
    CHECK(cert.y_fixed == 2);
    CHECK(cert.pigeonhole_suffices);
    CHECK(cert.group_order == 24);
    CHECK(cert.hall_neighbors.size() < cert.hall_set.size());
    CHECK(cert.table.size() == cert.x_orbit_count);
    CHECK(check_certificate(cert, xs, ys, group));

    // A tampered certificate fails the recount.
    auto forged = cert;
    forged.y_fixed = 9;
    CHECK_FALSE(check_certificate(forged, xs, ys, group));
    auto forged_hall = cert;
    forged_hall.neighbor_representatives.push_back(forged_hall.neighbor_representatives.front());
    forged_hall.neighbor_representatives.push_back(forged_hall.neighbor_representatives.front());
    CHECK_FALSE(check_certificate(forged_hall, xs, ys, group));
}

TEST_CASE("certifier: X = Y gives the identity", "[certifier]")
{
    AtomSet A(5);
    auto xs = enumerate_partitions(A.carrier());
    for (std::size_t e : {0, 2, 3}) {
        auto group = fix_group(A, Support::first(e));
        auto verdict = equivariant_injection_exists(xs, xs, group);
        REQUIRE(verdict.exists);
        CHECK(verify_equivariant_injection(verdict.map, xs, xs, group));
        for (const auto& [x, y] : verdict.map)
            CHECK(x == y);
    }
}

TEST_CASE("certifier: one orbit of size 4 against two fixed points under Sym(4)", "[certifier]")
{
    auto group = PermutationGroup::symmetric_on(4, {0, 1, 2, 3});
    std::vector<FinSeq> xs{{0}, {1}, {2}, {3}};
    std::vector<SetPartition> ys{SetPartition::singletons(4), SetPartition::from_blocks(4, {{0, 1, 2, 3}})};
    auto verdict = equivariant_injection_exists(xs, ys, group);
    REQUIRE_FALSE(verdict.exists);
    const auto& cert = *verdict.certificate;
    CHECK(cert.x_orbit_count == 1);
    CHECK(cert.y_orbit_count == 2);
    CHECK(cert.table[0].orbit_size == 4);
    CHECK(cert.table[0].compatible.empty());
    CHECK_FALSE(cert.pigeonhole_suffices);
    CHECK(cert.hall_set == std::vector<std::size_t>{0});
    CHECK(cert.hall_neighbors.empty());
    CHECK(check_certificate(cert, xs, ys, group));
}

TEST_CASE("certifier finds non-identity maps and they re-verify", "[certifier]")
{
    // On three atoms <x> has the same stabilizer as {{x}, rest}.
    auto group = PermutationGroup::symmetric_on(3, {0, 1, 2});
    std::vector<FinSeq> xs{{0}, {1}, {2}};
    std::vector<SetPartition> ys = enumerate_partitions(Carrier(3));
    auto verdict = equivariant_injection_exists(xs, ys, group);
    REQUIRE(verdict.exists);
    CHECK(verify_equivariant_injection(verdict.map, xs, ys, group));
    CHECK(verdict.map.at(FinSeq{0}) == SetPartition::from_blocks(3, {{0}, {1, 2}}));

    // Breaking equivariance is caught by the verifier.
    auto broken = verdict.map;
    std::swap(broken.at(FinSeq{0}), broken.at(FinSeq{1}));
    broken.at(FinSeq{0}) = SetPartition::singletons(3);
    CHECK_FALSE(verify_equivariant_injection(broken, xs, ys, group));
}

TEST_CASE("certifier respects limits", "[certifier]")
{
    auto group = PermutationGroup::symmetric_on(8, {0, 1, 2, 3, 4, 5, 6, 7});
    std::vector<FinSeq> xs{{}};
    CHECK_THROWS_AS(equivariant_injection_exists(xs, xs, group), LimitExceeded);
    OrbitLimits tight;
    tight.elements = 3;
    CHECK_THROWS_AS(orbit_decomposition(enumerate_injective_sequences(Carrier(2)),
                                        PermutationGroup::symmetric_on(2, {0, 1}), tight),
                    LimitExceeded);
}
