#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace partfin {

/// Arbitrary-precision nonnegative integer.
using BigNat = mpz_class;

/// Number of injective sequences of every length over an n-element set:
/// a(0) = 1, a(n+1) = (n+1) a(n) + 1.
BigNat arrangement_count(std::size_t n);

/// Bell number B(n) via B(m+1) = sum_k C(m,k) B(k).
BigNat bell_count(std::size_t n);

/// a(0), ..., a(n).
std::vector<BigNat> arrangement_counts(std::size_t n);
/// B(0), ..., B(n), sharing one binomial row per step.
std::vector<BigNat> bell_counts(std::size_t n);

/// Number of partitions of an n-element set whose blocks have at most
/// max_block elements. The block of the last element picks j <= max_block-1
/// companions out of the other n-1.
BigNat bounded_bell_count(std::size_t n, std::size_t max_block);

struct InequalityRow {
    std::size_t n = 0;
    BigNat arrangements;
    BigNat bell;
    /// Set when the row was recomputed by exhaustive enumeration.
    std::optional<BigNat> enumerated_arrangements;
    std::optional<BigNat> enumerated_bell;
    bool holds = false;
};

struct InequalityReport {
    std::vector<InequalityRow> rows;
    std::size_t enumeration_cutoff = 0;
    bool pass = false;
};

/// Tabulates (n, a(n), B(n)) for 1 <= n <= max_n and checks a(n) > B(n) at
/// every row. Rows with n <= enumeration_cutoff are also recounted by
/// enumeration and must agree with the recurrences.
InequalityReport verify_finite_inequality(std::size_t max_n, std::size_t enumeration_cutoff = 8);

} // namespace partfin
