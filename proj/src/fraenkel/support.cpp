#include "partfin/fraenkel/support.hpp"

#include <stdexcept>
#include <string>

#include "partfin/enumerate.hpp"

namespace partfin {

AtomSet::AtomSet(std::size_t size) : size_(size)
{
    if (size < 2)
        throw std::invalid_argument("an atom set needs at least two atoms");
}

Support::Support(std::vector<Label> atoms) : atoms_(std::move(atoms))
{
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

Support Support::first(std::size_t size)
{
    std::vector<Label> atoms(size);
    for (std::size_t i = 0; i < size; ++i)
        atoms[i] = static_cast<Label>(i);
    return Support(std::move(atoms));
}

std::vector<Label> Support::complement(const AtomSet& A) const
{
    std::vector<Label> out;
    for (Label x = 0; x < A.size(); ++x)
        if (!contains(x))
            out.push_back(x);
    return out;
}

namespace {

void require_fits(const AtomSet& A, const Support& E)
{
    if (!E.fits(A))
        throw std::invalid_argument("support is not a subset of the atoms");
}

template <typename T>
bool supported_by(const T& x, const std::vector<Permutation>& gens)
{
    return std::all_of(gens.begin(), gens.end(), [&](const Permutation& g) { return act(g, x) == x; });
}

} // namespace

std::vector<Permutation> fix_generators(const AtomSet& A, const Support& E)
{
    require_fits(A, E);
    return fix_group(A, E).generators();
}

PermutationGroup fix_group(const AtomSet& A, const Support& E)
{
    require_fits(A, E);
    return PermutationGroup::symmetric_on(A.size(), E.complement(A));
}

bool is_supported(const FinSeq& x, const AtomSet& A, const Support& E)
{
    if (!x.fits(A.carrier()))
        throw std::invalid_argument("sequence entry is not an atom");
    return supported_by(x, fix_generators(A, E));
}

bool is_supported(const SetPartition& x, const AtomSet& A, const Support& E)
{
    if (x.carrier_size() != A.size())
        throw std::invalid_argument("partition carrier differs from the atom set");
    return supported_by(x, fix_generators(A, E));
}

std::vector<FinSeq> injective_sequences_over(const Support& E)
{
    std::vector<FinSeq> out;
    for (const auto& local : enumerate_injective_sequences(E.local_carrier())) {
        std::vector<Label> entries;
        for (Label i : local)
            entries.push_back(E.atoms()[i]);
        out.emplace_back(std::move(entries));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> partitions_extending(const AtomSet& A, const Support& E, std::size_t b)
{
    require_fits(A, E);
    std::vector<SetPartition> out;
    const auto rest = E.complement(A);
    for (const auto& local : enumerate_partitions(E.local_carrier(), b)) {
        std::vector<std::vector<Label>> blocks;
        for (const auto& block : local.blocks()) {
            std::vector<Label> lifted;
            for (Label i : block)
                lifted.push_back(E.atoms()[i]);
            blocks.push_back(std::move(lifted));
        }
        for (Label x : rest)
            blocks.push_back({x});
        out.push_back(SetPartition::from_blocks(A.size(), blocks));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FinSeq> filter_supported_sequences(const AtomSet& A, const Support& E)
{
    require_fits(A, E);
    const auto gens = fix_generators(A, E);
    std::vector<FinSeq> out;
    InjectiveSequenceStream stream(A.carrier());
    while (auto s = stream.next())
        if (supported_by(*s, gens))
            out.push_back(std::move(*s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SetPartition> filter_supported_partitions(const AtomSet& A, const Support& E, std::size_t b)
{
    require_fits(A, E);
    const auto gens = fix_generators(A, E);
    std::vector<SetPartition> out;
    PartitionStream stream(A.carrier(), b);
    while (auto p = stream.next())
        if (supported_by(*p, gens))
            out.push_back(std::move(*p));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<FinSeq> supported_sequences(const AtomSet& A, const Support& E)
{
    require_fits(A, E);
    if (A.size() - E.size() < 2)
        throw std::invalid_argument("supported_sequences needs |A \\ E| >= 2");
    auto found = filter_supported_sequences(A, E);
    if (found != injective_sequences_over(E))
        throw std::logic_error("E-supported injective sequences differ from seq^{1-1}(E)");
    return found;
}

std::vector<SetPartition> supported_partitions(const AtomSet& A, const Support& E, std::size_t b)
{
    require_fits(A, E);
    const std::size_t outside = A.size() - E.size();
    if (b < 1 || b >= outside)
        throw std::invalid_argument("supported_partitions needs 1 <= b < |A \\ E| (b = " +
                                    std::to_string(b) + ", |A \\ E| = " + std::to_string(outside) + ")");
    auto found = filter_supported_partitions(A, E, b);
    if (found != partitions_extending(A, E, b))
        throw std::logic_error("E-supported partitions differ from Part(E) plus singletons");
    return found;
}

} // namespace partfin
