#include "partfin/encodings/skeleton.hpp"

#include <memory>

namespace partfin {

std::vector<Label> first_occurrence_order(const std::vector<FinSeq>& seqs)
{
    std::vector<Label> order;
    std::unordered_set<Label> seen;
    for (const auto& s : seqs)
        for (Label x : s)
            if (seen.insert(x).second)
                order.push_back(x);
    return order;
}

std::optional<Label> InjectiveFlattener::next()
{
    while (!exhausted_) {
        if (current_) {
            for (Label x : *current_) {
                if (!emitted_.contains(x)) {
                    emitted_.insert(x);
                    return x;
                }
            }
        }
        // The current sequence has nothing fresh; later outputs come from later sequences.
        current_ = source_();
        if (!current_)
            exhausted_ = true;
        else
            ++consumed_;
    }
    return std::nullopt;
}

InjectiveFlattener::Source list_source(std::vector<FinSeq> seqs)
{
    auto data = std::make_shared<std::vector<FinSeq>>(std::move(seqs));
    auto pos = std::make_shared<std::size_t>(0);
    return [data, pos]() -> std::optional<FinSeq> {
        if (*pos >= data->size())
            return std::nullopt;
        return (*data)[(*pos)++];
    };
}

std::vector<Label> flatten_to_injective_stream(InjectiveFlattener::Source source, std::size_t limit)
{
    InjectiveFlattener flat(std::move(source));
    std::vector<Label> out;
    while (out.size() < limit) {
        auto x = flat.next();
        if (!x)
            break;
        out.push_back(*x);
    }
    return out;
}

} // namespace partfin
