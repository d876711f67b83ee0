#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace partfin {

using Label = std::uint32_t;

/// Raised by decoders when a partition does not have the shape of an encoder image.
class NotInRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised when an enumeration would exceed a configured scale limit.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A finite labelled set {0, ..., size-1}, optionally with display names.
class Carrier {
public:
    Carrier() = default;
    explicit Carrier(std::size_t size);
    explicit Carrier(std::vector<std::string> names);

    std::size_t size() const noexcept { return size_; }
    bool has_names() const noexcept { return !names_.empty(); }
    std::string name(Label x) const;
    std::optional<Label> find(std::string_view name) const;
    bool contains(Label x) const noexcept { return x < size_; }

    bool operator==(const Carrier&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::string> names_;
};

/// A finite sequence of labels.
class FinSeq {
public:
    FinSeq() = default;
    FinSeq(std::initializer_list<Label> entries) : entries_(entries) {}
    explicit FinSeq(std::vector<Label> entries) : entries_(std::move(entries)) {}

    /// Builds a sequence that must have pairwise-distinct entries.
    static FinSeq injective(std::vector<Label> entries);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    Label operator[](std::size_t i) const { return entries_[i]; }
    std::span<const Label> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_injective() const;
    bool contains(Label x) const;
    /// The set of entries, ascending.
    std::vector<Label> entry_set() const;
    /// True when every entry is a label of `carrier`.
    bool fits(const Carrier& carrier) const;

    auto operator<=>(const FinSeq&) const = default;
    bool operator==(const FinSeq&) const = default;

private:
    std::vector<Label> entries_;
};

/// A partition of {0, ..., n-1} held as a restricted growth string.
///
/// rgs[x] is the index of the block containing x; blocks are numbered in
/// order of their least element, so rgs[0] == 0 and every rgs[i] is at most
/// one more than the maximum of the prefix before it. This makes the
/// representation unique, and equality of partitions is equality of strings.
class SetPartition {
public:
    SetPartition() = default;

    /// Validates the restricted growth invariants; throws std::invalid_argument.
    static SetPartition from_rgs(std::vector<Label> rgs);
    /// Canonicalizes an arbitrary block-key assignment: x and y share a block
    /// iff keys[x] == keys[y].
    template <typename Key>
    static SetPartition from_keys(std::span<const Key> keys);
    /// Builds from explicit blocks, which must be nonempty, disjoint and cover
    /// {0, ..., carrier_size-1}.
    static SetPartition from_blocks(std::size_t carrier_size,
                                    const std::vector<std::vector<Label>>& blocks);
    static SetPartition singletons(std::size_t carrier_size);

    std::size_t carrier_size() const noexcept { return rgs_.size(); }
    std::size_t block_count() const noexcept { return block_count_; }
    std::span<const Label> rgs() const noexcept { return rgs_; }
    Label block_index(Label x) const;

    /// Blocks ordered by least element, each ascending.
    std::vector<std::vector<Label>> blocks() const;
    /// The block containing x.
    std::vector<Label> block_of(Label x) const;
    std::size_t max_block_size() const;
    bool same_block(Label x, Label y) const;

    auto operator<=>(const SetPartition&) const = default;
    bool operator==(const SetPartition&) const = default;

private:
    explicit SetPartition(std::vector<Label> rgs, std::size_t block_count)
        : rgs_(std::move(rgs)), block_count_(block_count) {}

    std::vector<Label> rgs_;
    std::size_t block_count_ = 0;
};

/// Checks the restricted growth invariants on a raw string.
bool is_restricted_growth(std::span<const Label> rgs);

std::string format_seq(const FinSeq& s, const Carrier& carrier);
/// Blocks in braces ordered by least element, members ascending: "{x m0} {y}".
std::string format_partition(const SetPartition& p, const Carrier& carrier);

std::ostream& operator<<(std::ostream& os, const FinSeq& s);
std::ostream& operator<<(std::ostream& os, const SetPartition& p);

struct FinSeqHash {
    std::size_t operator()(const FinSeq& s) const noexcept;
};
struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const noexcept;
};

template <typename Key>
SetPartition SetPartition::from_keys(std::span<const Key> keys)
{
    std::vector<Label> rgs(keys.size());
    std::vector<Key> seen;
    for (std::size_t x = 0; x < keys.size(); ++x) {
        std::size_t b = 0;
        while (b < seen.size() && !(seen[b] == keys[x]))
            ++b;
        if (b == seen.size())
            seen.push_back(keys[x]);
        rgs[x] = static_cast<Label>(b);
    }
    return SetPartition(std::move(rgs), seen.size());
}

} // namespace partfin
