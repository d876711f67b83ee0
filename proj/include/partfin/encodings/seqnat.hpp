#pragma once

#include <cstdint>
#include <vector>

#include "partfin/counting.hpp"

namespace partfin {

using NatSeq = std::vector<std::uint64_t>;

/// Cantor pairing (a+b)(a+b+1)/2 + b and its inverse.
BigNat cantor_pair(const BigNat& a, const BigNat& b);
std::pair<BigNat, BigNat> cantor_unpair(const BigNat& z);

/// Bijection seq(ℕ) → ℕ: <> ↦ 0, and a sequence of length k >= 1 ↦
/// 1 + cantor(k-1, t) where t folds the entries right-to-left with cantor
/// pairing (t = x_0 for k = 1).
BigNat encode_seq_as_nat(const NatSeq& s);

/// Inverse of encode_seq_as_nat. Throws std::overflow_error when the decoded
/// length or an entry does not fit in 64 bits.
NatSeq decode_nat_as_seq(const BigNat& code);

} // namespace partfin
