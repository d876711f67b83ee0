#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "partfin/fraenkel/permutation.hpp"

namespace partfin {

template <typename T>
struct OrbitRecord {
    T representative;
    std::vector<T> members;              // ascending
    std::vector<Permutation> stabilizer; // ascending
    std::size_t size() const noexcept { return members.size(); }
};

struct OrbitLimits {
    std::size_t group_order = PermutationGroup::default_order_limit;
    std::size_t elements = 200000;
};

/// Splits a group-closed element set into orbits. Representatives are the
/// first members in input order. Throws std::invalid_argument when the set is
/// not closed under the group and LimitExceeded past the limits.
template <typename T>
std::vector<OrbitRecord<T>> orbit_decomposition(const std::vector<T>& elements,
                                                const std::vector<Permutation>& group,
                                                const OrbitLimits& limits = {})
{
    if (elements.size() > limits.elements)
        throw LimitExceeded("element set has more than " + std::to_string(limits.elements) + " members");
    std::map<T, bool> assigned;
    for (const auto& x : elements)
        assigned.emplace(x, false);

    std::vector<OrbitRecord<T>> orbits;
    for (const auto& x : elements) {
        if (assigned.at(x))
            continue;
        OrbitRecord<T> rec{x, {}, {}};
        for (const auto& g : group) {
            T y = act(g, x);
            auto it = assigned.find(y);
            if (it == assigned.end())
                throw std::invalid_argument("element set is not closed under the group");
            if (y == x)
                rec.stabilizer.push_back(g);
            if (!it->second) {
                it->second = true;
                rec.members.push_back(std::move(y));
            }
        }
        std::sort(rec.members.begin(), rec.members.end());
        std::sort(rec.stabilizer.begin(), rec.stabilizer.end());
        orbits.push_back(std::move(rec));
    }
    return orbits;
}

template <typename T>
std::vector<OrbitRecord<T>> orbit_decomposition(const std::vector<T>& elements,
                                                const PermutationGroup& group,
                                                const OrbitLimits& limits = {})
{
    return orbit_decomposition(elements, group.elements(limits.group_order), limits);
}

/// Stabilizer of x in an explicitly listed group, ascending.
template <typename T>
std::vector<Permutation> stabilizer_of(const T& x, const std::vector<Permutation>& group)
{
    std::vector<Permutation> out;
    for (const auto& g : group)
        if (act(g, x) == x)
            out.push_back(g);
    std::sort(out.begin(), out.end());
    return out;
}

/// Elements fixed by every generator.
template <typename T>
std::size_t count_fixed(const std::vector<T>& elements, const PermutationGroup& group)
{
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [&](const T& x) {
        return std::all_of(group.generators().begin(), group.generators().end(),
                           [&](const Permutation& g) { return act(g, x) == x; });
    }));
}

template <typename X>
struct ObstructionRow {
    std::size_t orbit = 0;
    X representative;
    std::size_t orbit_size = 0;
    std::size_t stabilizer_order = 0;
    std::vector<std::size_t> compatible; // Y-orbit indices with a member of equal stabilizer
};

/// Why no equivariant injection X → Y exists.
///
/// hall_set is a family of X-orbits whose compatible Y-orbits (hall_neighbors)
/// are fewer than the family itself, so no orbit-level matching, and hence no
/// equivariant injection, can exist.
template <typename X, typename Y>
struct NonexistenceCertificate {
    std::size_t group_order = 0;
    std::size_t x_count = 0;
    std::size_t y_count = 0;
    std::size_t x_orbit_count = 0;
    std::size_t y_orbit_count = 0;
    std::size_t x_fixed = 0; // supported elements of X
    std::size_t y_fixed = 0;
    bool pigeonhole_suffices = false;
    std::size_t matching_size = 0;
    std::vector<ObstructionRow<X>> table;
    std::vector<std::size_t> hall_set;
    std::vector<std::size_t> hall_neighbors;
    std::vector<X> hall_representatives;
    std::vector<Y> neighbor_representatives;
};

template <typename X, typename Y>
struct EquivarianceVerdict {
    bool exists = false;
    std::map<X, Y> map;                                      // when exists
    std::optional<NonexistenceCertificate<X, Y>> certificate; // otherwise
};

namespace detail {

// Kuhn's augmenting-path matching of left vertices into right vertices.
class BipartiteMatcher {
public:
    BipartiteMatcher(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count)
        : adj_(adj), match_right_(right_count, none), match_left_(adj.size(), none)
    {
        for (std::size_t u = 0; u < adj_.size(); ++u) {
            visited_.assign(right_count, false);
            augment(u);
        }
    }

    static constexpr std::size_t none = static_cast<std::size_t>(-1);

    std::size_t size() const
    {
        return static_cast<std::size_t>(
            std::count_if(match_left_.begin(), match_left_.end(), [](std::size_t v) { return v != none; }));
    }
    std::size_t mate_of_left(std::size_t u) const { return match_left_[u]; }

    /// Left vertices reachable from an unmatched u by alternating paths, and
    /// the right vertices they touch.
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> hall_violator(std::size_t u) const
    {
        std::vector<bool> left_seen(adj_.size(), false), right_seen(match_right_.size(), false);
        std::vector<std::size_t> stack{u};
        left_seen[u] = true;
        while (!stack.empty()) {
            const auto a = stack.back();
            stack.pop_back();
            for (auto v : adj_[a]) {
                if (right_seen[v])
                    continue;
                right_seen[v] = true;
                const auto b = match_right_[v];
                if (b != none && !left_seen[b]) {
                    left_seen[b] = true;
                    stack.push_back(b);
                }
            }
        }
        std::vector<std::size_t> left, right;
        for (std::size_t a = 0; a < adj_.size(); ++a)
            if (left_seen[a])
                left.push_back(a);
        for (std::size_t v = 0; v < match_right_.size(); ++v)
            if (right_seen[v])
                right.push_back(v);
        return {left, right};
    }

private:
    bool augment(std::size_t u)
    {
        for (auto v : adj_[u]) {
            if (visited_[v])
                continue;
            visited_[v] = true;
            if (match_right_[v] == none || augment(match_right_[v])) {
                match_right_[v] = u;
                match_left_[u] = v;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<std::size_t>>& adj_;
    std::vector<std::size_t> match_right_;
    std::vector<std::size_t> match_left_;
    std::vector<bool> visited_;
};

} // namespace detail

/// Decides whether some group-equivariant injection X → Y exists.
///
/// An equivariant injection sends x to an element with exactly the same
/// stabilizer, so it induces an injective matching of X-orbits into Y-orbits
/// along equal-stabilizer pairs; conversely any such matching extends to a
/// map g·x ↦ g·y. Existence is therefore decided by bipartite matching.
template <typename X, typename Y>
EquivarianceVerdict<X, Y> equivariant_injection_exists(const std::vector<X>& xs, const std::vector<Y>& ys,
                                                       const PermutationGroup& group,
                                                       const OrbitLimits& limits = {})
{
    const auto elements = group.elements(limits.group_order);
    const auto x_orbits = orbit_decomposition(xs, elements, limits);
    const auto y_orbits = orbit_decomposition(ys, elements, limits);

    // For each Y-orbit, the stabilizer of every member.
    std::vector<std::vector<std::vector<Permutation>>> y_stabs(y_orbits.size());
    for (std::size_t j = 0; j < y_orbits.size(); ++j)
        for (const auto& y : y_orbits[j].members)
            y_stabs[j].push_back(stabilizer_of(y, elements));

    std::vector<std::vector<std::size_t>> adj(x_orbits.size());
    std::vector<std::vector<std::size_t>> partner(x_orbits.size()); // member index per compatible orbit
    for (std::size_t i = 0; i < x_orbits.size(); ++i) {
        const auto& rep = x_orbits[i].representative;
        std::optional<std::size_t> own;
        for (std::size_t j = 0; j < y_orbits.size(); ++j) {
            std::optional<std::size_t> hit;
            for (std::size_t m = 0; m < y_orbits[j].members.size(); ++m) {
                if (y_stabs[j][m] != x_orbits[i].stabilizer)
                    continue;
                if constexpr (std::is_same_v<X, Y>) {
                    if (y_orbits[j].members[m] == rep) {
                        hit = m;
                        own = j;
                        break;
                    }
                }
                if (!hit)
                    hit = m;
            }
            if (hit) {
                adj[i].push_back(j);
                partner[i].push_back(*hit);
            }
        }
        // Try the orbit holding rep itself first, so X == Y matches by identity.
        if (own) {
            auto pos = static_cast<std::size_t>(std::find(adj[i].begin(), adj[i].end(), *own) - adj[i].begin());
            std::rotate(adj[i].begin(), adj[i].begin() + static_cast<std::ptrdiff_t>(pos),
                        adj[i].begin() + static_cast<std::ptrdiff_t>(pos) + 1);
            std::rotate(partner[i].begin(), partner[i].begin() + static_cast<std::ptrdiff_t>(pos),
                        partner[i].begin() + static_cast<std::ptrdiff_t>(pos) + 1);
        }
    }

    detail::BipartiteMatcher matcher(adj, y_orbits.size());
    EquivarianceVerdict<X, Y> verdict;

    if (matcher.size() == x_orbits.size()) {
        verdict.exists = true;
        for (std::size_t i = 0; i < x_orbits.size(); ++i) {
            const auto j = matcher.mate_of_left(i);
            const auto slot = static_cast<std::size_t>(std::find(adj[i].begin(), adj[i].end(), j) - adj[i].begin());
            const Y& target = y_orbits[j].members[partner[i][slot]];
            for (const auto& g : elements)
                verdict.map.emplace(act(g, x_orbits[i].representative), act(g, target));
        }
        return verdict;
    }

    NonexistenceCertificate<X, Y> cert;
    cert.group_order = elements.size();
    cert.x_count = xs.size();
    cert.y_count = ys.size();
    cert.x_orbit_count = x_orbits.size();
    cert.y_orbit_count = y_orbits.size();
    cert.x_fixed = count_fixed(xs, group);
    cert.y_fixed = count_fixed(ys, group);
    cert.pigeonhole_suffices = cert.x_fixed > cert.y_fixed;
    cert.matching_size = matcher.size();
    for (std::size_t i = 0; i < x_orbits.size(); ++i) {
        std::vector<std::size_t> compatible(adj[i]);
        std::sort(compatible.begin(), compatible.end());
        cert.table.push_back({i, x_orbits[i].representative, x_orbits[i].size(),
                              x_orbits[i].stabilizer.size(), std::move(compatible)});
    }
    for (std::size_t i = 0; i < x_orbits.size(); ++i) {
        if (matcher.mate_of_left(i) != detail::BipartiteMatcher::none)
            continue;
        auto [left, right] = matcher.hall_violator(i);
        cert.hall_set = std::move(left);
        cert.hall_neighbors = std::move(right);
        break;
    }
    for (auto i : cert.hall_set)
        cert.hall_representatives.push_back(x_orbits[i].representative);
    for (auto j : cert.hall_neighbors)
        cert.neighbor_representatives.push_back(y_orbits[j].representative);
    verdict.certificate = std::move(cert);
    return verdict;
}

/// Re-verifies a YES map directly: total on X, values in Y, injective, and
/// commuting with every generator.
template <typename X, typename Y>
bool verify_equivariant_injection(const std::map<X, Y>& map, const std::vector<X>& xs,
                                  const std::vector<Y>& ys, const PermutationGroup& group)
{
    if (map.size() != xs.size())
        return false;
    std::map<Y, bool> in_y;
    for (const auto& y : ys)
        in_y.emplace(y, false);
    for (const auto& x : xs) {
        auto it = map.find(x);
        if (it == map.end())
            return false;
        auto hit = in_y.find(it->second);
        if (hit == in_y.end() || hit->second)
            return false;
        hit->second = true;
        for (const auto& g : group.generators()) {
            auto moved = map.find(act(g, x));
            if (moved == map.end() || !(moved->second == act(g, it->second)))
                return false;
        }
    }
    return true;
}

/// Re-checks a NO certificate from scratch: recounts the supported elements
/// of X and Y, and confirms the Hall family by recomputing stabilizers of
/// every element of Y against the family's representatives.
template <typename X, typename Y>
bool check_certificate(const NonexistenceCertificate<X, Y>& cert, const std::vector<X>& xs,
                       const std::vector<Y>& ys, const PermutationGroup& group,
                       const OrbitLimits& limits = {})
{
    std::size_t x_fixed = 0, y_fixed = 0;
    for (const auto& x : xs)
        x_fixed += std::all_of(group.generators().begin(), group.generators().end(),
                               [&](const Permutation& g) { return act(g, x) == x; });
    for (const auto& y : ys)
        y_fixed += std::all_of(group.generators().begin(), group.generators().end(),
                               [&](const Permutation& g) { return act(g, y) == y; });
    if (x_fixed != cert.x_fixed || y_fixed != cert.y_fixed)
        return false;
    if (cert.pigeonhole_suffices != (x_fixed > y_fixed))
        return false;

    const auto elements = group.elements(limits.group_order);
    if (elements.size() != cert.group_order)
        return false;

    // The Hall family must consist of pairwise distinct X-orbits.
    const auto& reps = cert.hall_representatives;
    if (reps.empty() || cert.neighbor_representatives.size() >= reps.size())
        return false;
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = a + 1; b < reps.size(); ++b)
            for (const auto& g : elements)
                if (act(g, reps[a]) == reps[b])
                    return false;

    const auto& nbrs = cert.neighbor_representatives;
    for (std::size_t a = 0; a < nbrs.size(); ++a)
        for (std::size_t b = a + 1; b < nbrs.size(); ++b)
            for (const auto& g : elements)
                if (act(g, nbrs[a]) == nbrs[b])
                    return false;

    // Every y whose stabilizer equals that of a family member must lie in the
    // orbit of one of the listed neighbours.
    std::vector<std::vector<Permutation>> rep_stabs;
    for (const auto& x : reps)
        rep_stabs.push_back(stabilizer_of(x, elements));
    for (const auto& y : ys) {
        const auto sy = stabilizer_of(y, elements);
        if (std::find(rep_stabs.begin(), rep_stabs.end(), sy) == rep_stabs.end())
            continue;
        const bool covered = std::any_of(nbrs.begin(), nbrs.end(), [&](const Y& n) {
            return std::any_of(elements.begin(), elements.end(),
                               [&](const Permutation& g) { return act(g, n) == y; });
        });
        if (!covered)
            return false;
    }
    return true;
}

} // namespace partfin
