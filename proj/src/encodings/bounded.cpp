#include "partfin/encodings/bounded.hpp"

#include <algorithm>
#include <optional>
#include <string>

namespace partfin {

namespace {

std::vector<Label> first_cells(std::size_t n)
{
    std::vector<Label> cells((n + 2) * (n + 2));
    for (std::size_t i = 0; i < cells.size(); ++i)
        cells[i] = static_cast<Label>(i);
    return cells;
}

} // namespace

MarkerGrid::MarkerGrid(std::size_t n, const Carrier& carrier)
    : MarkerGrid(n, carrier, first_cells(n))
{
}

MarkerGrid::MarkerGrid(std::size_t n, const Carrier& carrier, std::vector<Label> cells)
    : n_(n), carrier_size_(carrier.size()), cells_(std::move(cells)),
      row_of_(carrier.size(), n + 2)
{
    if (cells_.size() != side() * side())
        throw std::invalid_argument("marker grid needs " + std::to_string(side() * side()) +
                                    " cells, got " + std::to_string(cells_.size()));
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        const Label x = cells_[i];
        if (!carrier.contains(x))
            throw std::invalid_argument("grid cell " + std::to_string(x) + " outside carrier of size " +
                                        std::to_string(carrier.size()));
        if (row_of_[x] != side())
            throw std::invalid_argument("grid cell " + std::to_string(x) + " used twice");
        row_of_[x] = i / side();
    }
}

std::vector<Label> MarkerGrid::row(std::size_t j) const
{
    auto first = cells_.begin() + static_cast<std::ptrdiff_t>(j * side());
    return {first, first + static_cast<std::ptrdiff_t>(side())};
}

bool MarkerGrid::in_row(Label x, std::size_t j) const
{
    return row_of(x) == j;
}

std::size_t MarkerGrid::row_of(Label x) const
{
    return x < row_of_.size() ? row_of_[x] : side();
}

std::size_t least_avoiding_row(const FinSeq& c, const MarkerGrid& g)
{
    if (c.size() > g.bound())
        throw std::invalid_argument("sequence of length " + std::to_string(c.size()) +
                                    " exceeds grid bound " + std::to_string(g.bound()));
    std::vector<bool> hit(g.side(), false);
    for (Label x : c) {
        const auto j = g.row_of(x);
        if (j < g.side())
            hit[j] = true;
    }
    // At most n rows are hit and there are n+2 rows.
    return static_cast<std::size_t>(std::find(hit.begin(), hit.end(), false) - hit.begin());
}

SetPartition bounded_seq_to_partition(const FinSeq& c, const MarkerGrid& g)
{
    const std::size_t j = least_avoiding_row(c, g);
    if (!std::all_of(c.begin(), c.end(), [&](Label x) { return x < g.carrier_size(); }))
        throw std::invalid_argument("sequence entry outside the carrier");

    const std::size_t k = c.size();
    std::vector<Label> keys(g.carrier_size());
    for (Label x = 0; x < keys.size(); ++x)
        keys[x] = x;
    // Row j avoids every entry of c, so neither c_m nor a^j_k is reused as a key.
    for (std::size_t m = 0; m < k; ++m)
        keys[g.cell(j, m)] = c[m];
    for (std::size_t i = k; i < g.side(); ++i)
        keys[g.cell(j, i)] = g.cell(j, k);
    return SetPartition::from_keys<Label>(keys);
}

FinSeq bounded_partition_to_seq(const SetPartition& p, const MarkerGrid& g)
{
    if (p.carrier_size() != g.carrier_size())
        throw NotInRange("partition carrier has " + std::to_string(p.carrier_size()) +
                         " elements, grid carrier has " + std::to_string(g.carrier_size()));

    const std::size_t last = g.side() - 1;
    std::optional<std::size_t> tail_row;
    std::size_t tail_size = 0;
    for (std::size_t j = 0; j < g.side(); ++j) {
        const auto block = p.block_of(g.cell(j, last));
        if (block.size() < 2)
            continue;
        if (!std::all_of(block.begin(), block.end(), [&](Label x) { return g.in_row(x, j); }))
            continue;
        if (tail_row)
            throw NotInRange("rows " + std::to_string(*tail_row) + " and " + std::to_string(j) +
                             " both carry a tail block");
        tail_row = j;
        tail_size = block.size();
    }
    if (!tail_row)
        throw NotInRange("no row carries a tail block through its last cell");
    if (tail_size + g.bound() < g.side())
        throw NotInRange("tail block of size " + std::to_string(tail_size) +
                         " implies a sequence longer than the bound");

    const std::size_t j = *tail_row;
    const std::size_t k = g.side() - tail_size;
    std::vector<Label> entries(k);
    for (std::size_t m = 0; m < k; ++m) {
        std::optional<Label> outside;
        for (Label x : p.block_of(g.cell(j, m))) {
            if (g.in_row(x, j))
                continue;
            if (outside)
                throw NotInRange("block of a^" + std::to_string(j) + "_" + std::to_string(m) +
                                 " has two elements off row " + std::to_string(j));
            outside = x;
        }
        if (!outside)
            throw NotInRange("block of a^" + std::to_string(j) + "_" + std::to_string(m) +
                             " has no element off row " + std::to_string(j));
        entries[m] = *outside;
    }

    FinSeq c(std::move(entries));
    if (bounded_seq_to_partition(c, g) != p)
        throw NotInRange("partition differs from the encoding of its only candidate preimage");
    return c;
}

} // namespace partfin
