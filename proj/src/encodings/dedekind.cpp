#include "partfin/encodings/dedekind.hpp"

#include <string>
#include <vector>

namespace partfin {

namespace {

Carrier combined_carrier(const Carrier& base, std::size_t markers)
{
    std::vector<std::string> names;
    names.reserve(base.size() + markers);
    for (Label x = 0; x < base.size(); ++x)
        names.push_back(base.has_names() ? base.name(x) : "a" + std::to_string(x));
    for (std::size_t j = 0; j < markers; ++j)
        names.push_back("m" + std::to_string(j));
    return Carrier(std::move(names));
}

} // namespace

MarkerUniverse::MarkerUniverse(Carrier base, std::size_t marker_count)
    : base_(std::move(base)), markers_(marker_count), combined_(combined_carrier(base_, markers_))
{
}

Label MarkerUniverse::marker(std::size_t j) const
{
    if (j >= markers_)
        throw std::out_of_range("marker " + std::to_string(j) + " beyond budget " +
                                std::to_string(markers_));
    return static_cast<Label>(base_.size() + j);
}

SetPartition seq_to_partition_dedekind(const FinSeq& a, const MarkerUniverse& u)
{
    if (a.size() > u.marker_count())
        throw std::invalid_argument("sequence of length " + std::to_string(a.size()) +
                                    " exceeds marker budget " + std::to_string(u.marker_count()));
    if (!a.fits(u.base()))
        throw std::invalid_argument("sequence entry outside the base carrier");

    // Every element keys its own block, except that marker j joins a_j.
    std::vector<Label> keys(u.size());
    for (Label x = 0; x < keys.size(); ++x)
        keys[x] = x;
    for (std::size_t j = 0; j < a.size(); ++j)
        keys[u.marker(j)] = a[j];
    return SetPartition::from_keys<Label>(keys);
}

FinSeq partition_to_seq_dedekind(const SetPartition& p, const MarkerUniverse& u)
{
    if (p.carrier_size() != u.size())
        throw NotInRange("partition carrier has " + std::to_string(p.carrier_size()) +
                         " elements, universe has " + std::to_string(u.size()));

    const auto& names = u.combined();
    std::vector<Label> value_of_marker(u.marker_count());
    std::vector<bool> used(u.marker_count(), false);
    for (const auto& block : p.blocks()) {
        std::vector<Label> base_members;
        std::vector<Label> marker_members;
        for (Label x : block)
            (u.is_base(x) ? base_members : marker_members).push_back(x);
        if (base_members.size() > 1)
            throw NotInRange("block {" + names.name(base_members[0]) + " " +
                             names.name(base_members[1]) + " ...} holds two base elements");
        if (base_members.empty()) {
            if (marker_members.size() > 1)
                throw NotInRange("block containing " + names.name(marker_members[0]) +
                                 " has no base element");
            continue;
        }
        for (Label m : marker_members) {
            used[u.marker_index(m)] = true;
            value_of_marker[u.marker_index(m)] = base_members[0];
        }
    }

    std::size_t length = 0;
    while (length < used.size() && used[length])
        ++length;
    for (std::size_t j = length; j < used.size(); ++j)
        if (used[j])
            throw NotInRange("used markers are not a prefix: m" + std::to_string(length) +
                             " is free but m" + std::to_string(j) + " is used");

    value_of_marker.resize(length);
    return FinSeq(std::move(value_of_marker));
}

} // namespace partfin
