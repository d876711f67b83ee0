#include "partfin/encodings/diagonal.hpp"

#include <stdexcept>

namespace partfin {

TwoCopyOrdinal pairing_F(Nat xi)
{
    return {static_cast<unsigned>(xi % 2), xi / 2};
}

Nat pairing_F_inverse(TwoCopyOrdinal t)
{
    if (t.copy > 1)
        throw std::invalid_argument("two-copy ordinal with copy " + std::to_string(t.copy));
    return 2 * t.index + t.copy;
}

std::vector<Nat> LazySubset::members_below(Nat limit) const
{
    std::vector<Nat> out;
    for (Nat x = 0; x < limit; ++x)
        if (oracle_(x))
            out.push_back(x);
    return out;
}

namespace {

Nat parse_nat(const std::string& text, const std::string& description)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("bad number in base family '" + description + "'");
    return std::stoull(text);
}

} // namespace

SubsetFamily parse_base_family(const std::string& description)
{
    const auto colon = description.find(':');
    const std::string head = description.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : description.substr(colon + 1);
    const bool has_arg = colon != std::string::npos;

    if ((head == "singletons" || head == "evens") && has_arg)
        throw std::invalid_argument("base family '" + head + "' takes no argument");
    if (head == "singletons" || head == "singleton") {
        const Nat shift = head == "singletons" ? 0 : parse_nat(arg, description);
        return [shift](Nat i) {
            return LazySubset("{" + std::to_string(i + shift) + "}",
                              [v = i + shift](Nat x) { return x == v; });
        };
    }
    if (head == "upto") {
        const Nat shift = parse_nat(arg, description);
        return [shift](Nat i) {
            return LazySubset("[0," + std::to_string(i + shift) + ")",
                              [v = i + shift](Nat x) { return x < v; });
        };
    }
    if (head == "evens") {
        return [](Nat) { return LazySubset("evens", [](Nat x) { return x % 2 == 0; }); };
    }
    if (head == "periodic") {
        if (arg.empty() || arg.find_first_not_of("01") != std::string::npos)
            throw std::invalid_argument("periodic pattern must be a nonempty 0/1 string");
        return [arg](Nat i) {
            return LazySubset("periodic:" + arg + "+" + std::to_string(i), [arg, i](Nat x) {
                return arg[(x + i) % arg.size()] == '1';
            });
        };
    }
    throw std::invalid_argument("unknown base family '" + description + "'");
}

DiagonalFamily::DiagonalFamily(SubsetFamily base)
    : base_(std::make_shared<const SubsetFamily>(std::move(base)))
{
}

bool DiagonalFamily::contains(Nat k, Nat xi) const
{
    const auto t = pairing_F(xi);
    if (t.copy == 0)
        return !(*base_)(t.index).contains(xi);
    if (t.index < k)
        return !contains(t.index, xi);
    return true;
}

LazySubset DiagonalFamily::operator()(Nat k) const
{
    return LazySubset("G(" + std::to_string(k) + ")",
                      [self = *this, k](Nat xi) { return self.contains(k, xi); });
}

bool DiagonalFamily::indexed_contains(TwoCopyOrdinal t, Nat xi) const
{
    return t.copy == 0 ? (*base_)(t.index).contains(xi) : contains(t.index, xi);
}

Nat distinguishing_witness(Nat k, TwoCopyOrdinal earlier)
{
    if (earlier.copy > 1 || !(earlier < TwoCopyOrdinal{1, k}))
        throw std::invalid_argument("witness needs an index below ω+" + std::to_string(k));
    return pairing_F_inverse(earlier);
}

bool witness_separates(const DiagonalFamily& family, Nat k, TwoCopyOrdinal earlier)
{
    const Nat xi = distinguishing_witness(k, earlier);
    return family.contains(k, xi) != family.indexed_contains(earlier, xi);
}

} // namespace partfin
