#include "partfin/types.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace partfin {

Carrier::Carrier(std::size_t size) : size_(size) {}

Carrier::Carrier(std::vector<std::string> names) : size_(names.size()), names_(std::move(names))
{
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty())
            throw std::invalid_argument("carrier names must be nonempty");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate carrier name '" + n + "'");
    }
}

std::string Carrier::name(Label x) const
{
    if (x >= size_)
        throw std::out_of_range("label " + std::to_string(x) + " outside carrier of size " +
                                std::to_string(size_));
    return names_.empty() ? std::to_string(x) : names_[x];
}

std::optional<Label> Carrier::find(std::string_view name) const
{
    if (names_.empty()) {
        Label v = 0;
        if (name.empty())
            return std::nullopt;
        for (char c : name) {
            if (c < '0' || c > '9')
                return std::nullopt;
            v = v * 10 + static_cast<Label>(c - '0');
            if (v >= size_)
                return std::nullopt;
        }
        return v;
    }
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end())
        return std::nullopt;
    return static_cast<Label>(it - names_.begin());
}

FinSeq FinSeq::injective(std::vector<Label> entries)
{
    FinSeq s(std::move(entries));
    if (!s.is_injective())
        throw std::invalid_argument("sequence has repeated entries");
    return s;
}

bool FinSeq::is_injective() const
{
    auto set = entry_set();
    return set.size() == entries_.size();
}

bool FinSeq::contains(Label x) const
{
    return std::find(entries_.begin(), entries_.end(), x) != entries_.end();
}

std::vector<Label> FinSeq::entry_set() const
{
    std::vector<Label> set(entries_);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

bool FinSeq::fits(const Carrier& carrier) const
{
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](Label x) { return carrier.contains(x); });
}

bool is_restricted_growth(std::span<const Label> rgs)
{
    Label next = 0;
    for (Label b : rgs) {
        if (b > next)
            return false;
        if (b == next)
            ++next;
    }
    return true;
}

SetPartition SetPartition::from_rgs(std::vector<Label> rgs)
{
    if (!is_restricted_growth(rgs))
        throw std::invalid_argument("not a restricted growth string");
    std::size_t count = 0;
    for (Label b : rgs)
        count = std::max<std::size_t>(count, b + 1);
    return SetPartition(std::move(rgs), count);
}

SetPartition SetPartition::from_blocks(std::size_t carrier_size,
                                       const std::vector<std::vector<Label>>& blocks)
{
    constexpr auto unset = static_cast<std::size_t>(-1);
    std::vector<std::size_t> key(carrier_size, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty())
            throw std::invalid_argument("partition block is empty");
        for (Label x : blocks[b]) {
            if (x >= carrier_size)
                throw std::invalid_argument("partition element " + std::to_string(x) +
                                            " outside carrier");
            if (key[x] != unset)
                throw std::invalid_argument("element " + std::to_string(x) +
                                            " appears in two blocks");
            key[x] = b;
        }
    }
    for (std::size_t x = 0; x < carrier_size; ++x)
        if (key[x] == unset)
            throw std::invalid_argument("element " + std::to_string(x) + " is in no block");
    return from_keys<std::size_t>(key);
}

SetPartition SetPartition::singletons(std::size_t carrier_size)
{
    std::vector<Label> rgs(carrier_size);
    for (std::size_t x = 0; x < carrier_size; ++x)
        rgs[x] = static_cast<Label>(x);
    return SetPartition(std::move(rgs), carrier_size);
}

Label SetPartition::block_index(Label x) const
{
    if (x >= rgs_.size())
        throw std::out_of_range("label " + std::to_string(x) + " outside carrier of size " +
                                std::to_string(rgs_.size()));
    return rgs_[x];
}

std::vector<std::vector<Label>> SetPartition::blocks() const
{
    std::vector<std::vector<Label>> out(block_count_);
    for (std::size_t x = 0; x < rgs_.size(); ++x)
        out[rgs_[x]].push_back(static_cast<Label>(x));
    return out;
}

std::vector<Label> SetPartition::block_of(Label x) const
{
    const Label b = block_index(x);
    std::vector<Label> out;
    for (std::size_t y = 0; y < rgs_.size(); ++y)
        if (rgs_[y] == b)
            out.push_back(static_cast<Label>(y));
    return out;
}

std::size_t SetPartition::max_block_size() const
{
    std::vector<std::size_t> sizes(block_count_, 0);
    for (Label b : rgs_)
        ++sizes[b];
    return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

bool SetPartition::same_block(Label x, Label y) const
{
    return block_index(x) == block_index(y);
}

std::string format_seq(const FinSeq& s, const Carrier& carrier)
{
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ' ';
        out += carrier.name(s[i]);
    }
    return out;
}

std::string format_partition(const SetPartition& p, const Carrier& carrier)
{
    std::string out;
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block)
            out += ' ';
        first_block = false;
        out += '{';
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i)
                out += ' ';
            out += carrier.name(block[i]);
        }
        out += '}';
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const FinSeq& s)
{
    os << '<';
    for (std::size_t i = 0; i < s.size(); ++i)
        os << (i ? "," : "") << s[i];
    return os << '>';
}

std::ostream& operator<<(std::ostream& os, const SetPartition& p)
{
    return os << format_partition(p, Carrier(p.carrier_size()));
}

namespace {

std::size_t hash_labels(std::span<const Label> xs) noexcept
{
    std::size_t h = 1469598103934665603ull;
    for (Label x : xs) {
        h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h ^ xs.size();
}

} // namespace

std::size_t FinSeqHash::operator()(const FinSeq& s) const noexcept
{
    return hash_labels(s.entries());
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept
{
    return hash_labels(p.rgs());
}

} // namespace partfin
