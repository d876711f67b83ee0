#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "partfin/types.hpp"

namespace partfin {

/// A bijection of {0, ..., degree-1}, stored as its image array.
class Permutation {
public:
    Permutation() = default;
    /// Throws std::invalid_argument unless image is a bijection.
    explicit Permutation(std::vector<Label> image);

    static Permutation identity(std::size_t degree);
    /// The cycle (a;b): swaps a and b, fixes everything else.
    static Permutation transposition(std::size_t degree, Label a, Label b);

    std::size_t degree() const noexcept { return image_.size(); }
    Label operator()(Label x) const { return image_.at(x); }
    std::span<const Label> image() const noexcept { return image_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// (*this ∘ rhs)(x) = (*this)(rhs(x)).
    Permutation operator*(const Permutation& rhs) const;

    /// Cycle notation with ';' between entries, e.g. "(0;1)(2;4;3)"; "()" for the identity.
    std::string cycle_string() const;

    auto operator<=>(const Permutation&) const = default;
    bool operator==(const Permutation&) const = default;

private:
    std::vector<Label> image_;
};

FinSeq apply_to_seq(const Permutation& pi, const FinSeq& s);
/// Blockwise image, re-canonicalized to restricted growth form.
SetPartition apply_to_partition(const Permutation& pi, const SetPartition& p);

inline FinSeq act(const Permutation& pi, const FinSeq& s) { return apply_to_seq(pi, s); }
inline SetPartition act(const Permutation& pi, const SetPartition& p) { return apply_to_partition(pi, p); }

/// The group generated by a list of permutations of a common degree.
class PermutationGroup {
public:
    static constexpr std::size_t default_order_limit = 5040; // 7!

    PermutationGroup(std::size_t degree, std::vector<Permutation> generators);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return generators_; }

    /// All group elements in ascending order, by closure from the identity.
    /// Throws LimitExceeded when the group is larger than `limit`.
    std::vector<Permutation> elements(std::size_t limit = default_order_limit) const;

    /// The full symmetric group on the given points (adjacent transpositions).
    static PermutationGroup symmetric_on(std::size_t degree, const std::vector<Label>& points);

private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
};

} // namespace partfin
