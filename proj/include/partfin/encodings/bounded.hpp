#pragma once

#include <cstddef>
#include <vector>

#include "partfin/types.hpp"

namespace partfin {

/// (n+2) x (n+2) distinguished elements a^j_i of a carrier; row j is A_j.
class MarkerGrid {
public:
    /// Places the grid row-major on the first (n+2)^2 labels of the carrier.
    MarkerGrid(std::size_t n, const Carrier& carrier);
    /// Uses explicit cells, row-major; they must be distinct labels of the carrier.
    MarkerGrid(std::size_t n, const Carrier& carrier, std::vector<Label> cells);

    std::size_t bound() const noexcept { return n_; }
    std::size_t side() const noexcept { return n_ + 2; }
    std::size_t carrier_size() const noexcept { return carrier_size_; }

    Label cell(std::size_t row, std::size_t col) const { return cells_.at(row * side() + col); }
    std::vector<Label> row(std::size_t j) const;
    bool in_row(Label x, std::size_t j) const;
    /// Row containing x, or side() when x is off the grid.
    std::size_t row_of(Label x) const;

private:
    std::size_t n_;
    std::size_t carrier_size_;
    std::vector<Label> cells_;
    std::vector<std::size_t> row_of_; // indexed by label; side() when off-grid
};

/// Least j with entry-set of c disjoint from A_j. Throws std::invalid_argument
/// when c is longer than the grid bound.
std::size_t least_avoiding_row(const FinSeq& c, const MarkerGrid& g);

/// With k = |c| and j = least_avoiding_row(c): blocks {c_i} ∪ {a^j_m : m < k,
/// c_m = c_i}, the tail {a^j_i : k <= i <= n+1}, and singletons elsewhere.
SetPartition bounded_seq_to_partition(const FinSeq& c, const MarkerGrid& g);

/// Inverse of bounded_seq_to_partition; throws NotInRange on shape violations.
FinSeq bounded_partition_to_seq(const SetPartition& p, const MarkerGrid& g);

} // namespace partfin
