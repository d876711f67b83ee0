#include "partfin/counting.hpp"

#include <stdexcept>

#include "partfin/enumerate.hpp"

namespace partfin {

std::vector<BigNat> arrangement_counts(std::size_t n)
{
    std::vector<BigNat> a(n + 1);
    a[0] = 1;
    for (std::size_t m = 0; m < n; ++m)
        a[m + 1] = a[m] * static_cast<unsigned long>(m + 1) + 1;
    return a;
}

BigNat arrangement_count(std::size_t n)
{
    BigNat a = 1;
    for (std::size_t m = 0; m < n; ++m)
        a = a * static_cast<unsigned long>(m + 1) + 1;
    return a;
}

std::vector<BigNat> bell_counts(std::size_t n)
{
    std::vector<BigNat> bell(n + 1);
    bell[0] = 1;
    std::vector<BigNat> row{1}; // C(m, 0..m)
    for (std::size_t m = 0; m < n; ++m) {
        BigNat sum = 0;
        for (std::size_t k = 0; k <= m; ++k)
            sum += row[k] * bell[k];
        bell[m + 1] = sum;

        std::vector<BigNat> next(m + 2);
        next[0] = 1;
        next[m + 1] = 1;
        for (std::size_t k = 1; k <= m; ++k)
            next[k] = row[k - 1] + row[k];
        row = std::move(next);
    }
    return bell;
}

BigNat bell_count(std::size_t n)
{
    return bell_counts(n).back();
}

BigNat bounded_bell_count(std::size_t n, std::size_t max_block)
{
    if (max_block == 0)
        throw std::invalid_argument("max_block must be positive");
    std::vector<BigNat> p(n + 1);
    p[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        // The block of the last of m elements takes j companions from the other m-1.
        BigNat sum = 0;
        BigNat choose = 1; // C(m-1, j)
        for (std::size_t j = 0; j < max_block && j < m; ++j) {
            sum += choose * p[m - 1 - j];
            choose = choose * static_cast<unsigned long>(m - 1 - j) / static_cast<unsigned long>(j + 1);
        }
        p[m] = sum;
    }
    return p[n];
}

namespace {

template <typename Stream>
BigNat count_stream(Stream stream)
{
    BigNat count = 0;
    while (stream.next())
        ++count;
    return count;
}

} // namespace

InequalityReport verify_finite_inequality(std::size_t max_n, std::size_t enumeration_cutoff)
{
    if (max_n < 1)
        throw std::invalid_argument("table needs max_n >= 1");
    InequalityReport report;
    report.enumeration_cutoff = enumeration_cutoff;
    report.pass = true;

    const auto a = arrangement_counts(max_n);
    const auto bell = bell_counts(max_n);
    for (std::size_t n = 1; n <= max_n; ++n) {
        InequalityRow row;
        row.n = n;
        row.arrangements = a[n];
        row.bell = bell[n];
        row.holds = a[n] > bell[n];
        if (n <= enumeration_cutoff) {
            const Carrier carrier(n);
            row.enumerated_arrangements = count_stream(InjectiveSequenceStream(carrier));
            row.enumerated_bell = count_stream(PartitionStream(carrier));
            row.holds = row.holds && *row.enumerated_arrangements == a[n] &&
                        *row.enumerated_bell == bell[n];
        }
        report.pass = report.pass && row.holds;
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace partfin
