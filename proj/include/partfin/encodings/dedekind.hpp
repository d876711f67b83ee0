#pragma once

#include <cstddef>

#include "partfin/types.hpp"

namespace partfin {

/// A base carrier A next to a truncated copy of the naturals.
///
/// Base labels keep their numbers 0..|A|-1; marker j is the label |A|+j, so
/// the two parts are disjoint by construction.
class MarkerUniverse {
public:
    MarkerUniverse(Carrier base, std::size_t marker_count);

    const Carrier& base() const noexcept { return base_; }
    std::size_t marker_count() const noexcept { return markers_; }
    std::size_t size() const noexcept { return base_.size() + markers_; }

    Label marker(std::size_t j) const;
    bool is_marker(Label x) const noexcept { return x >= base_.size() && x < size(); }
    bool is_base(Label x) const noexcept { return x < base_.size(); }
    std::size_t marker_index(Label x) const { return x - base_.size(); }

    /// Combined carrier; markers are named m0, m1, ...
    const Carrier& combined() const noexcept { return combined_; }

private:
    Carrier base_;
    std::size_t markers_;
    Carrier combined_;
};

/// Sends a = <a_0..a_{n-1}> to the partition whose blocks are
/// {v} ∪ {m_j : a_j = v} for every value v of a, with every other element a
/// singleton. Throws std::invalid_argument when a is longer than the marker
/// budget or has an entry outside the base.
SetPartition seq_to_partition_dedekind(const FinSeq& a, const MarkerUniverse& u);

/// Inverse of seq_to_partition_dedekind. Throws NotInRange with a shape
/// diagnosis when p is not an image.
FinSeq partition_to_seq_dedekind(const SetPartition& p, const MarkerUniverse& u);

} // namespace partfin
