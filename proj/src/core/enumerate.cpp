#include "partfin/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace partfin {

InjectiveSequenceStream::InjectiveSequenceStream(const Carrier& carrier)
    : n_(carrier.size()), used_(carrier.size(), false)
{
}

bool InjectiveSequenceStream::fill_from(std::size_t pos)
{
    for (std::size_t p = pos; p < length_; ++p) {
        Label v = 0;
        while (v < n_ && used_[v])
            ++v;
        if (v == n_)
            return false;
        current_[p] = v;
        used_[v] = true;
    }
    return true;
}

bool InjectiveSequenceStream::advance()
{
    for (std::size_t pos = length_; pos-- > 0;) {
        used_[current_[pos]] = false;
        for (Label v = current_[pos] + 1; v < n_; ++v) {
            if (!used_[v]) {
                current_[pos] = v;
                used_[v] = true;
                return fill_from(pos + 1);
            }
        }
    }
    // Every arrangement of this length is spent; move to the next length.
    ++length_;
    if (length_ > n_)
        return false;
    current_.assign(length_, 0);
    std::fill(used_.begin(), used_.end(), false);
    return fill_from(0);
}

std::optional<FinSeq> InjectiveSequenceStream::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return FinSeq();
    }
    if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return FinSeq(current_);
}

SequenceStream::SequenceStream(const Carrier& carrier, std::size_t max_len)
    : n_(carrier.size()), max_len_(max_len)
{
}

std::optional<FinSeq> SequenceStream::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        return FinSeq();
    }
    std::size_t pos = current_.size();
    while (pos > 0) {
        --pos;
        if (current_[pos] + 1 < n_) {
            ++current_[pos];
            std::fill(current_.begin() + static_cast<std::ptrdiff_t>(pos) + 1, current_.end(), 0);
            return FinSeq(current_);
        }
    }
    if (current_.size() >= max_len_ || n_ == 0) {
        done_ = true;
        return std::nullopt;
    }
    current_.assign(current_.size() + 1, 0);
    return FinSeq(current_);
}

PartitionStream::PartitionStream(const Carrier& carrier, std::optional<std::size_t> max_block)
    : n_(carrier.size()),
      bound_(max_block.value_or(std::numeric_limits<std::size_t>::max())),
      rgs_(carrier.size(), 0),
      block_sizes_(carrier.size() + 1, 0)
{
    if (max_block && *max_block == 0)
        throw std::invalid_argument("max_block must be positive");
}

void PartitionStream::fill_from(std::size_t pos)
{
    Label top = 0;
    for (std::size_t p = 0; p < pos; ++p)
        top = std::max(top, rgs_[p]);
    for (std::size_t p = pos; p < n_; ++p) {
        const Label limit = p == 0 ? 0 : top + 1;
        Label v = 0;
        while (v < limit && block_sizes_[v] >= bound_)
            ++v;
        rgs_[p] = v;
        ++block_sizes_[v];
        top = std::max(top, v);
    }
}

bool PartitionStream::advance()
{
    for (std::size_t pos = n_; pos-- > 1;) {
        --block_sizes_[rgs_[pos]];
        Label top = 0;
        for (std::size_t p = 0; p < pos; ++p)
            top = std::max(top, rgs_[p]);
        for (Label v = rgs_[pos] + 1; v <= top + 1; ++v) {
            if (block_sizes_[v] < bound_) {
                rgs_[pos] = v;
                ++block_sizes_[v];
                fill_from(pos + 1);
                return true;
            }
        }
    }
    return false;
}

std::optional<SetPartition> PartitionStream::next()
{
    if (done_)
        return std::nullopt;
    if (!started_) {
        started_ = true;
        fill_from(0);
    } else if (!advance()) {
        done_ = true;
        return std::nullopt;
    }
    return SetPartition::from_rgs(rgs_);
}

namespace {

template <typename Stream>
auto drain(Stream stream)
{
    std::vector<typename decltype(stream.next())::value_type> out;
    while (auto x = stream.next())
        out.push_back(std::move(*x));
    return out;
}

} // namespace

std::vector<FinSeq> enumerate_injective_sequences(const Carrier& carrier)
{
    return drain(InjectiveSequenceStream(carrier));
}

std::vector<FinSeq> enumerate_sequences(const Carrier& carrier, std::size_t max_len)
{
    return drain(SequenceStream(carrier, max_len));
}

std::vector<SetPartition> enumerate_partitions(const Carrier& carrier,
                                               std::optional<std::size_t> max_block)
{
    return drain(PartitionStream(carrier, max_block));
}

std::vector<Label> block_of(const SetPartition& p, Label x)
{
    return p.block_of(x);
}

} // namespace partfin
