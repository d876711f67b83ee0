#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "partfin/types.hpp"

namespace partfin {

/// Two escape-iteration outputs coincided.
class EscapeCollision : public std::runtime_error {
public:
    EscapeCollision(std::size_t first, std::size_t second)
        : std::runtime_error("escape iteration repeated itself: s_" + std::to_string(second) +
                             " == s_" + std::to_string(first) +
                             "; f or g is not injective, or the seed lies in the range of f"),
          first_index(first), second_index(second)
    {
    }

    std::size_t first_index;
    std::size_t second_index;
};

/// s_0 = g(seed), s_{i+1} = g(f(s_i)), for `count` terms.
///
/// With f, g injective and seed outside the range of f the terms are pairwise
/// distinct; a repeat throws EscapeCollision naming both indices.
template <typename X, typename Y>
std::vector<X> escape_iteration(const std::function<Y(const X&)>& f,
                                const std::function<X(const Y&)>& g, const Y& seed,
                                std::size_t count)
{
    std::vector<X> out;
    if (count == 0)
        return out;
    out.reserve(count);
    std::map<X, std::size_t> seen;
    X current = g(seed);
    for (std::size_t i = 0;; ++i) {
        auto [it, fresh] = seen.emplace(current, i);
        if (!fresh)
            throw EscapeCollision(it->second, i);
        out.push_back(current);
        if (out.size() == count)
            return out;
        current = g(f(current));
    }
}

/// Union of entry-sets ordered by (first sequence holding the label, first
/// position of the label in that sequence).
std::vector<Label> first_occurrence_order(const std::vector<FinSeq>& seqs);

/// Turns a stream of sequences into a stream of pairwise-distinct labels.
///
/// Each output is the first not-yet-emitted entry of the earliest sequence
/// that still has one. The source is consumed lazily; once it runs dry with
/// no fresh label left, next() reports exhaustion with std::nullopt.
class InjectiveFlattener {
public:
    using Source = std::function<std::optional<FinSeq>()>;

    explicit InjectiveFlattener(Source source) : source_(std::move(source)) {}

    std::optional<Label> next();
    std::size_t consumed() const noexcept { return consumed_; }

private:
    Source source_;
    std::optional<FinSeq> current_;
    std::size_t consumed_ = 0;
    std::unordered_set<Label> emitted_;
    bool exhausted_ = false;
};

/// Source over a fixed list.
InjectiveFlattener::Source list_source(std::vector<FinSeq> seqs);

/// Drains up to `limit` labels.
std::vector<Label> flatten_to_injective_stream(InjectiveFlattener::Source source,
                                               std::size_t limit = static_cast<std::size_t>(-1));

} // namespace partfin
