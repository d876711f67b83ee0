#pragma once

// Brute-force oracles shared by the test suites. They deliberately avoid the
// library's streams, recurrences and canonical forms.

#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Seq = std::vector<unsigned>;
using Blocks = std::set<std::set<unsigned>>;

/// Every injective sequence over {0..n-1}, by depth-first search.
inline std::set<Seq> injective_sequences(unsigned n)
{
    std::set<Seq> out;
    Seq cur;
    std::vector<bool> used(n, false);
    std::function<void()> go = [&] {
        out.insert(cur);
        for (unsigned v = 0; v < n; ++v) {
            if (used[v])
                continue;
            used[v] = true;
            cur.push_back(v);
            go();
            cur.pop_back();
            used[v] = false;
        }
    };
    go();
    return out;
}

/// Partitions of {0..n-1} as sets of blocks, from all n^n block assignments.
inline std::set<Blocks> partitions(unsigned n, std::size_t max_block = static_cast<std::size_t>(-1))
{
    std::set<Blocks> out;
    std::vector<unsigned> f(n, 0);
    while (true) {
        std::vector<std::set<unsigned>> by_label(n);
        for (unsigned x = 0; x < n; ++x)
            by_label[f[x]].insert(x);
        Blocks p;
        bool fits = true;
        for (auto& b : by_label) {
            if (b.empty())
                continue;
            fits = fits && b.size() <= max_block;
            p.insert(b);
        }
        if (fits)
            out.insert(p);
        unsigned i = 0;
        while (i < n && ++f[i] == n)
            f[i++] = 0;
        if (i == n)
            break;
    }
    if (n == 0)
        out = {Blocks{}};
    return out;
}

/// Bell numbers from Aitken's triangle (additions only).
inline std::vector<mpz_class> bell_triangle(std::size_t n)
{
    std::vector<mpz_class> bell{1};
    std::vector<mpz_class> row{1};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<mpz_class> next{row.back()};
        for (const auto& v : row)
            next.push_back(next.back() + v);
        bell.push_back(next.front());
        row = std::move(next);
    }
    return bell;
}

/// Partitions of {0..n-1} counted by dropping each element into an existing
/// block or a new one. Visits every partition exactly once.
inline std::size_t partitions_by_insertion(unsigned n)
{
    std::function<std::size_t(unsigned, unsigned)> go = [&](unsigned placed, unsigned blocks) -> std::size_t {
        if (placed == n)
            return 1;
        std::size_t total = 0;
        for (unsigned b = 0; b <= blocks; ++b)
            total += go(placed + 1, b == blocks ? blocks + 1 : blocks);
        return total;
    };
    return go(0, 0);
}

/// sum_{k<=n} n!/(n-k)!, term by term.
inline mpz_class arrangements_by_sum(unsigned n)
{
    mpz_class total = 0, term = 1;
    for (unsigned k = 0; k <= n; ++k) {
        total += term;
        term *= n - k;
    }
    return total;
}

} // namespace oracle
