#include "partfin/fraenkel/permutation.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace partfin {

Permutation::Permutation(std::vector<Label> image) : image_(std::move(image))
{
    std::vector<bool> hit(image_.size(), false);
    for (Label y : image_) {
        if (y >= image_.size() || hit[y])
            throw std::invalid_argument("image array is not a permutation");
        hit[y] = true;
    }
}

Permutation Permutation::identity(std::size_t degree)
{
    std::vector<Label> image(degree);
    for (std::size_t x = 0; x < degree; ++x)
        image[x] = static_cast<Label>(x);
    Permutation p;
    p.image_ = std::move(image);
    return p;
}

Permutation Permutation::transposition(std::size_t degree, Label a, Label b)
{
    if (a >= degree || b >= degree)
        throw std::invalid_argument("transposition point outside degree");
    Permutation p = identity(degree);
    std::swap(p.image_[a], p.image_[b]);
    return p;
}

bool Permutation::is_identity() const
{
    for (std::size_t x = 0; x < image_.size(); ++x)
        if (image_[x] != x)
            return false;
    return true;
}

Permutation Permutation::inverse() const
{
    Permutation p;
    p.image_.resize(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x)
        p.image_[image_[x]] = static_cast<Label>(x);
    return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const
{
    if (degree() != rhs.degree())
        throw std::invalid_argument("composing permutations of different degree");
    Permutation p;
    p.image_.resize(image_.size());
    for (std::size_t x = 0; x < image_.size(); ++x)
        p.image_[x] = image_[rhs.image_[x]];
    return p;
}

std::string Permutation::cycle_string() const
{
    std::string out;
    std::vector<bool> seen(image_.size(), false);
    for (std::size_t start = 0; start < image_.size(); ++start) {
        if (seen[start] || image_[start] == start)
            continue;
        out += '(';
        for (Label x = static_cast<Label>(start); !seen[x]; x = image_[x]) {
            if (x != start)
                out += ';';
            out += std::to_string(x);
            seen[x] = true;
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

FinSeq apply_to_seq(const Permutation& pi, const FinSeq& s)
{
    std::vector<Label> out;
    out.reserve(s.size());
    for (Label x : s)
        out.push_back(pi(x));
    return FinSeq(std::move(out));
}

SetPartition apply_to_partition(const Permutation& pi, const SetPartition& p)
{
    if (pi.degree() != p.carrier_size())
        throw std::invalid_argument("permutation degree differs from partition carrier");
    std::vector<Label> keys(p.carrier_size());
    for (Label x = 0; x < keys.size(); ++x)
        keys[pi(x)] = p.rgs()[x];
    return SetPartition::from_keys<Label>(keys);
}

PermutationGroup::PermutationGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators))
{
    for (const auto& g : generators_)
        if (g.degree() != degree_)
            throw std::invalid_argument("generator degree differs from group degree");
}

std::vector<Permutation> PermutationGroup::elements(std::size_t limit) const
{
    std::set<Permutation> found{Permutation::identity(degree_)};
    std::deque<Permutation> frontier{Permutation::identity(degree_)};
    while (!frontier.empty()) {
        const Permutation g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : generators_) {
            Permutation h = gen * g;
            if (found.insert(h).second) {
                if (found.size() > limit)
                    throw LimitExceeded("group has more than " + std::to_string(limit) + " elements");
                frontier.push_back(std::move(h));
            }
        }
    }
    return {found.begin(), found.end()};
}

PermutationGroup PermutationGroup::symmetric_on(std::size_t degree, const std::vector<Label>& points)
{
    std::vector<Label> sorted(points);
    std::sort(sorted.begin(), sorted.end());
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
        gens.push_back(Permutation::transposition(degree, sorted[i], sorted[i + 1]));
    return PermutationGroup(degree, std::move(gens));
}

} // namespace partfin
