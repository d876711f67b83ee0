#include "partfin/encodings/seqnat.hpp"

#include <stdexcept>
#include <string>

static_assert(sizeof(unsigned long) == 8, "GMP conversions assume a 64-bit unsigned long");

namespace partfin {

BigNat cantor_pair(const BigNat& a, const BigNat& b)
{
    const BigNat s = a + b;
    return s * (s + 1) / 2 + b;
}

std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z)
{
    if (z < 0)
        throw std::invalid_argument("cantor_unpair of a negative number");
    // w = floor((sqrt(8z+1) - 1) / 2) is the diagonal a+b.
    BigNat root = sqrt(BigNat(8 * z + 1));
    BigNat w = (root - 1) / 2;
    BigNat b = z - w * (w + 1) / 2;
    return {w - b, b};
}

BigNat encode_seq_as_nat(const NatSeq& s)
{
    if (s.empty())
        return 0;
    BigNat t = BigNat(static_cast<unsigned long>(s.back()));
    for (std::size_t i = s.size() - 1; i-- > 0;)
        t = cantor_pair(BigNat(static_cast<unsigned long>(s[i])), t);
    return 1 + cantor_pair(BigNat(static_cast<unsigned long>(s.size() - 1)), t);
}

namespace {

std::uint64_t to_u64(const BigNat& v, const char* what)
{
    if (v < 0 || mpz_sizeinbase(v.get_mpz_t(), 2) > 64)
        throw std::overflow_error(std::string(what) + " does not fit in 64 bits");
    return mpz_get_ui(v.get_mpz_t());
}

} // namespace

NatSeq decode_nat_as_seq(const BigNat& code)
{
    if (code < 0)
        throw std::invalid_argument("cannot decode a negative number");
    if (code == 0)
        return {};
    auto [length_minus_one, t] = cantor_unpair(code - 1);
    const std::uint64_t extra = to_u64(length_minus_one, "decoded length");
    if (extra >= (std::uint64_t{1} << 24))
        throw std::overflow_error("decoded length is too large to materialize");

    NatSeq out;
    out.reserve(extra + 1);
    for (std::uint64_t i = 0; i < extra; ++i) {
        auto [head, rest] = cantor_unpair(t);
        out.push_back(to_u64(head, "decoded entry"));
        t = std::move(rest);
    }
    out.push_back(to_u64(t, "decoded entry"));
    return out;
}

} // namespace partfin
