#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace partfin {

using Nat = std::uint64_t;

/// An index below ω+ω: (copy 0, m) is m and (copy 1, m) is ω+m.
struct TwoCopyOrdinal {
    unsigned copy = 0;
    Nat index = 0;

    auto operator<=>(const TwoCopyOrdinal&) const = default;
};

/// The bijection ω → ω+ω: 2m ↦ m, 2m+1 ↦ ω+m.
TwoCopyOrdinal pairing_F(Nat xi);
Nat pairing_F_inverse(TwoCopyOrdinal t);

/// A decidable subset of ℕ: a total, deterministic membership oracle.
class LazySubset {
public:
    using Oracle = std::function<bool(Nat)>;

    LazySubset(std::string description, Oracle oracle)
        : description_(std::move(description)), oracle_(std::move(oracle)) {}

    bool contains(Nat x) const { return oracle_(x); }
    bool operator()(Nat x) const { return oracle_(x); }
    const std::string& description() const noexcept { return description_; }

    /// Members in [0, limit).
    std::vector<Nat> members_below(Nat limit) const;

private:
    std::string description_;
    Oracle oracle_;
};

/// An ℕ-indexed family of lazy subsets.
using SubsetFamily = std::function<LazySubset(Nat)>;

/// Parses `singleton:c`, `singletons`, `upto:c`, `evens`, `periodic:BITS`.
///
/// The description names a whole family base(i):
///   singleton:c  {i+c}               (singletons is singleton:0)
///   upto:c       {x : x < i+c}
///   evens        the even numbers, for every i
///   periodic:B   {x : B[(x+i) mod |B|] == '1'}
/// Throws std::invalid_argument on anything else.
SubsetFamily parse_base_family(const std::string& description);

/// The family G(k) = g(ω+k) obtained by diagonalizing against base = g↾ω:
///
///   ξ ∈ G(k)  iff  F(ξ) = (0,m)          and ξ ∉ base(m),
///              or  F(ξ) = (1,m), m < k,  and ξ ∉ G(m),
///              or  F(ξ) = (1,m), m >= k.
///
/// Each G(k) differs from every set indexed below ω+k. Copies share the base
/// family; evaluation recurses only to smaller k.
class DiagonalFamily {
public:
    explicit DiagonalFamily(SubsetFamily base);

    bool contains(Nat k, Nat xi) const;
    LazySubset operator()(Nat k) const;
    /// The set indexed by t: base(m) for copy 0, G(m) for copy 1.
    bool indexed_contains(TwoCopyOrdinal t, Nat xi) const;

private:
    std::shared_ptr<const SubsetFamily> base_;
};

/// ξ = F⁻¹(earlier), the point where G(k) and the earlier set disagree.
/// Requires earlier < (1, k); throws std::invalid_argument otherwise.
Nat distinguishing_witness(Nat k, TwoCopyOrdinal earlier);

/// Evaluates both oracles at the witness and reports whether they differ.
bool witness_separates(const DiagonalFamily& family, Nat k, TwoCopyOrdinal earlier);

} // namespace partfin
