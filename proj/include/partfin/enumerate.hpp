#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "partfin/types.hpp"

namespace partfin {

/// Injective sequences over a carrier, by length and then lexicographically.
///
/// Each call to next() yields the following sequence; a fresh stream
/// restarts from the empty sequence.
class InjectiveSequenceStream {
public:
    explicit InjectiveSequenceStream(const Carrier& carrier);
    std::optional<FinSeq> next();

private:
    bool advance();
    bool fill_from(std::size_t pos);

    std::size_t n_;
    std::size_t length_ = 0;
    std::vector<Label> current_;
    std::vector<bool> used_;
    bool started_ = false;
    bool done_ = false;
};

/// All sequences of length at most max_len, by length and then lexicographically.
class SequenceStream {
public:
    SequenceStream(const Carrier& carrier, std::size_t max_len);
    std::optional<FinSeq> next();

private:
    std::size_t n_;
    std::size_t max_len_;
    std::vector<Label> current_;
    bool started_ = false;
    bool done_ = false;
};

/// Set partitions in lexicographic order of their restricted growth strings,
/// optionally restricted to blocks of at most max_block elements.
class PartitionStream {
public:
    explicit PartitionStream(const Carrier& carrier,
                             std::optional<std::size_t> max_block = std::nullopt);
    std::optional<SetPartition> next();

private:
    bool advance();
    void fill_from(std::size_t pos);

    std::size_t n_;
    std::size_t bound_;
    std::vector<Label> rgs_;
    std::vector<std::size_t> block_sizes_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<FinSeq> enumerate_injective_sequences(const Carrier& carrier);
std::vector<FinSeq> enumerate_sequences(const Carrier& carrier, std::size_t max_len);
std::vector<SetPartition> enumerate_partitions(const Carrier& carrier,
                                               std::optional<std::size_t> max_block = std::nullopt);

/// block_of with a range check against the carrier; throws std::out_of_range.
std::vector<Label> block_of(const SetPartition& p, Label x);

} // namespace partfin
