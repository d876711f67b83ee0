#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "partfin/fraenkel/permutation.hpp"
#include "partfin/types.hpp"

namespace partfin {

/// A finite stand-in for the denumerable set of atoms: labels 0..size-1.
class AtomSet {
public:
    /// Throws std::invalid_argument for fewer than two atoms.
    explicit AtomSet(std::size_t size);

    std::size_t size() const noexcept { return size_; }
    Carrier carrier() const { return Carrier(size_); }

private:
    std::size_t size_;
};

/// A subset E of the atoms, kept sorted.
class Support {
public:
    Support() = default;
    explicit Support(std::vector<Label> atoms);
    /// E = {0, ..., size-1}.
    static Support first(std::size_t size);

    const std::vector<Label>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool contains(Label x) const { return std::binary_search(atoms_.begin(), atoms_.end(), x); }
    bool fits(const AtomSet& A) const { return atoms_.empty() || atoms_.back() < A.size(); }
    /// A∖E, ascending.
    std::vector<Label> complement(const AtomSet& A) const;
    /// Carrier on E itself, with element i standing for atoms()[i].
    Carrier local_carrier() const { return Carrier(atoms_.size()); }

private:
    std::vector<Label> atoms_;
};

/// Transpositions (a;b) of consecutive atoms of A∖E; they generate fix(E).
std::vector<Permutation> fix_generators(const AtomSet& A, const Support& E);
PermutationGroup fix_group(const AtomSet& A, const Support& E);

/// E supports x iff every permutation fixing E pointwise fixes x; checked on
/// the generators of fix(E).
bool is_supported(const FinSeq& x, const AtomSet& A, const Support& E);
bool is_supported(const SetPartition& x, const AtomSet& A, const Support& E);

/// seq^{1-1}(E), relabelled into the atoms.
std::vector<FinSeq> injective_sequences_over(const Support& E);
/// { Y ∪ singletons of A∖E : Y a partition of E with blocks <= b }.
std::vector<SetPartition> partitions_extending(const AtomSet& A, const Support& E, std::size_t b);

/// Every injective sequence over A that E supports, by exhaustive filtering.
std::vector<FinSeq> filter_supported_sequences(const AtomSet& A, const Support& E);
/// Every partition of A with blocks <= b that E supports, by exhaustive filtering.
/// No precondition on b; this is the raw filter behind supported_partitions.
std::vector<SetPartition> filter_supported_partitions(const AtomSet& A, const Support& E, std::size_t b);

/// E-supported injective sequences. Requires |A∖E| >= 2. The result is
/// checked to equal seq^{1-1}(E); a mismatch throws std::logic_error.
std::vector<FinSeq> supported_sequences(const AtomSet& A, const Support& E);

/// E-supported partitions with blocks <= b. Requires 1 <= b < |A∖E|, the
/// regime where the only symmetric way to cut A∖E is into singletons. The
/// result is checked to equal partitions_extending(A, E, b).
std::vector<SetPartition> supported_partitions(const AtomSet& A, const Support& E, std::size_t b);

} // namespace partfin
