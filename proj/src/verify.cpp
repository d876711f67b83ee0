#include "partfin/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "partfin/counting.hpp"
#include "partfin/encodings/bounded.hpp"
#include "partfin/encodings/dedekind.hpp"
#include "partfin/encodings/diagonal.hpp"
#include "partfin/encodings/seqnat.hpp"
#include "partfin/encodings/skeleton.hpp"
#include "partfin/enumerate.hpp"
#include "partfin/fraenkel/report.hpp"
#include "partfin/fraenkel/support.hpp"

namespace partfin {

namespace {

// Collects check outcomes for one suite; the first failure message wins.
class Checker {
public:
    explicit Checker(std::string suite) : suite_(std::move(suite)) {}

    void begin(std::string name, std::string detail)
    {
        results_.push_back({suite_, std::move(name), true, std::move(detail), {}});
    }
    void expect(bool ok, const std::function<std::string()>& why)
    {
        auto& r = results_.back();
        if (!ok && r.passed) {
            r.passed = false;
            r.counterexample = why();
        }
    }
    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::string suite_;
    std::vector<CheckResult> results_;
};

template <typename T>
std::string show(const T& x)
{
    std::ostringstream os;
    os << x;
    return os.str();
}

std::vector<CheckResult> counting_suite()
{
    Checker c("counting");

    c.begin("inequality", "a(n) > B(n) for 1 <= n <= 1000, recurrences");
    const auto report = verify_finite_inequality(1000, 0);
    for (const auto& row : report.rows)
        c.expect(row.holds, [&] { return "n = " + std::to_string(row.n); });

    c.begin("enumeration", "a(n), B(n) equal stream counts for n <= 8");
    for (std::size_t n = 0; n <= 8; ++n) {
        const Carrier carrier(n);
        const auto seqs = enumerate_injective_sequences(carrier);
        const auto parts = enumerate_partitions(carrier);
        c.expect(arrangement_count(n) == seqs.size(), [&] { return "a(" + std::to_string(n) + ")"; });
        c.expect(bell_count(n) == parts.size(), [&] { return "B(" + std::to_string(n) + ")"; });
    }

    c.begin("duplicate-free", "streams hash-distinct and RGS-valid for n <= 6");
    for (std::size_t n = 0; n <= 6; ++n) {
        const Carrier carrier(n);
        const auto seqs = enumerate_injective_sequences(carrier);
        std::unordered_set<FinSeq, FinSeqHash> s(seqs.begin(), seqs.end());
        c.expect(s.size() == seqs.size(), [&] { return "injective sequences, n = " + std::to_string(n); });
        for (std::size_t b = 1; b <= n + 1; ++b) {
            const auto parts = enumerate_partitions(carrier, b);
            std::unordered_set<SetPartition, SetPartitionHash> p(parts.begin(), parts.end());
            c.expect(p.size() == parts.size(), [&] { return "partitions, n = " + std::to_string(n); });
            for (const auto& q : parts)
                c.expect(is_restricted_growth(q.rgs()) && q.max_block_size() <= b,
                         [&] { return "invalid partition " + show(q); });
        }
    }

    c.begin("bound-equals-size", "max_block = n reproduces the unbounded stream, n <= 7");
    for (std::size_t n = 1; n <= 7; ++n)
        c.expect(enumerate_partitions(Carrier(n), n) == enumerate_partitions(Carrier(n)),
                 [&] { return "n = " + std::to_string(n); });
    return c.take();
}

std::vector<CheckResult> dedekind_suite()
{
    Checker c("dedekind");
    const MarkerUniverse u(Carrier(3), 4);
    const auto seqs = enumerate_sequences(u.base(), 4);

    c.begin("injective", std::to_string(seqs.size()) + " sequences of length <= 4 over 3 labels, M = 4");
    std::set<SetPartition> images;
    for (const auto& a : seqs)
        images.insert(seq_to_partition_dedekind(a, u));
    c.expect(seqs.size() == 121 && images.size() == seqs.size(),
             [&] { return std::to_string(images.size()) + " distinct images"; });

    c.begin("round-trip", "decoder inverts the encoder");
    for (const auto& a : seqs) {
        const auto p = seq_to_partition_dedekind(a, u);
        FinSeq back;
        try {
            back = partition_to_seq_dedekind(p, u);
        } catch (const NotInRange& e) {
            c.expect(false, [&] { return show(a) + ": " + e.what(); });
            continue;
        }
        c.expect(back == a, [&] { return show(a) + " decodes to " + show(back); });
    }

    c.begin("image-shape", "every image block holds at most one base label");
    for (const auto& a : seqs)
        for (const auto& block : seq_to_partition_dedekind(a, u).blocks())
            c.expect(std::count_if(block.begin(), block.end(), [&](Label x) { return u.is_base(x); }) <= 1,
                     [&] { return show(a); });
    return c.take();
}

std::vector<CheckResult> bounded_suite()
{
    Checker c("bounded");
    const Carrier carrier(20);
    const MarkerGrid g(2, carrier);
    const auto seqs = enumerate_sequences(carrier, 2);

    c.begin("injective", std::to_string(seqs.size()) + " sequences of length <= 2, 16 grid cells + 4 plain");
    std::set<SetPartition> images;
    for (const auto& s : seqs)
        images.insert(bounded_seq_to_partition(s, g));
    c.expect(seqs.size() == 421 && images.size() == seqs.size(),
             [&] { return std::to_string(images.size()) + " distinct images"; });

    c.begin("round-trip", "decoder inverts the encoder");
    for (const auto& s : seqs) {
        FinSeq back;
        try {
            back = bounded_partition_to_seq(bounded_seq_to_partition(s, g), g);
        } catch (const NotInRange& e) {
            c.expect(false, [&] { return show(s) + ": " + e.what(); });
            continue;
        }
        c.expect(back == s, [&] { return show(s) + " decodes to " + show(back); });
    }

    c.begin("tail-block", "each image has one tail block of size n+2-k inside row j_c");
    for (const auto& s : seqs) {
        const auto p = bounded_seq_to_partition(s, g);
        const auto j = least_avoiding_row(s, g);
        const auto tail = p.block_of(g.cell(j, g.side() - 1));
        const bool inside = std::all_of(tail.begin(), tail.end(), [&](Label x) { return g.in_row(x, j); });
        c.expect(inside && tail.size() == g.side() - s.size() && tail.size() >= 2, [&] { return show(s); });
    }

    c.begin("both-cases", "pairs with equal and with different rows j_c both occur");
    std::vector<std::size_t> per_row(g.side(), 0);
    for (const auto& s : seqs)
        ++per_row[least_avoiding_row(s, g)];
    const bool same_row_pair = std::any_of(per_row.begin(), per_row.end(), [](auto n) { return n >= 2; });
    const auto rows_used = std::count_if(per_row.begin(), per_row.end(), [](auto n) { return n > 0; });
    c.expect(same_row_pair, [] { return std::string("no pair shares j_c"); });
    c.expect(rows_used >= 2, [] { return std::string("every sequence has the same j_c"); });
    return c.take();
}

std::vector<CheckResult> diagonal_suite()
{
    Checker c("diagonal");
    const Nat K = 64;
    for (std::string desc : {"singletons", "evens", "periodic:1101"}) {
        c.begin("witnesses/" + desc, "every witness for k <= 64 separates G(k) from the earlier set");
        const DiagonalFamily G(parse_base_family(desc));
        for (Nat k = 0; k <= K; ++k) {
            for (Nat m = 0; m < k; ++m)
                c.expect(witness_separates(G, k, {1, m}),
                         [&] { return "k = " + std::to_string(k) + ", earlier = (1," + std::to_string(m) + ")"; });
            for (Nat m = 0; m <= K; ++m)
                c.expect(witness_separates(G, k, {0, m}),
                         [&] { return "k = " + std::to_string(k) + ", earlier = (0," + std::to_string(m) + ")"; });
        }
    }

    c.begin("hand-sets", "singletons: G(0) = N \\ {0}, G(1) = N \\ {0,1} on 0..200");
    const DiagonalFamily G(parse_base_family("singletons"));
    for (Nat xi = 0; xi <= 200; ++xi) {
        c.expect(G.contains(0, xi) == (xi != 0), [&] { return "G(0) at " + std::to_string(xi); });
        c.expect(G.contains(1, xi) == (xi > 1), [&] { return "G(1) at " + std::to_string(xi); });
    }

    c.begin("pairing", "F is a bijection on 0..10000");
    for (Nat xi = 0; xi <= 10000; ++xi)
        c.expect(pairing_F_inverse(pairing_F(xi)) == xi, [&] { return std::to_string(xi); });
    return c.take();
}

std::vector<CheckResult> skeleton_suite()
{
    Checker c("skeleton");

    c.begin("escape", "10000 distinct terms of s -> g(f(s)) with f = +1, g = id, seed 0");
    std::function<Nat(const Nat&)> succ = [](const Nat& n) { return n + 1; };
    std::function<Nat(const Nat&)> id = [](const Nat& n) { return n; };
    const auto terms = escape_iteration(succ, id, Nat{0}, 10000);
    c.expect(std::set<Nat>(terms.begin(), terms.end()).size() == 10000, [] { return std::string("repeat"); });

    c.begin("escape-collision", "a constant f is caught");
    std::function<Nat(const Nat&)> zero = [](const Nat&) { return Nat{0}; };
    bool caught = false;
    try {
        escape_iteration(zero, id, Nat{1}, 3);
    } catch (const EscapeCollision&) {
        caught = true;
    }
    c.expect(caught, [] { return std::string("no collision reported"); });

    c.begin("first-occurrence", "listed examples");
    c.expect(first_occurrence_order({FinSeq{1, 0}, FinSeq{2, 0}}) == std::vector<Label>{1, 0, 2},
             [] { return std::string("[<b,a>,<c,a>]"); });
    c.expect(first_occurrence_order({}).empty(), [] { return std::string("[]"); });
    c.expect(first_occurrence_order({FinSeq{7}, FinSeq{7}}) == std::vector<Label>{7},
             [] { return std::string("[<x>,<x>]"); });

    c.begin("flatten", "listed examples");
    c.expect(flatten_to_injective_stream(list_source({FinSeq{0}, FinSeq{0}, FinSeq{0, 1}, FinSeq{2}})) ==
                 std::vector<Label>{0, 1, 2},
             [] { return std::string("[<x>,<x>,<x,y>,<z>]"); });
    c.expect(flatten_to_injective_stream(list_source({FinSeq{}, FinSeq{5}})) == std::vector<Label>{5},
             [] { return std::string("[<>,<a>]"); });
    c.expect(flatten_to_injective_stream(list_source({})).empty(), [] { return std::string("[]"); });

    c.begin("seqnat", "decode(encode(s)) = s for |s| <= 3 over 0..10; encode(decode(z)) = z for z <= 10000");
    std::vector<NatSeq> seqs{{}};
    for (std::uint64_t a = 0; a <= 10; ++a) {
        seqs.push_back({a});
        for (std::uint64_t b = 0; b <= 10; ++b) {
            seqs.push_back({a, b});
            for (std::uint64_t d = 0; d <= 10; ++d)
                seqs.push_back({a, b, d});
        }
    }
    for (const auto& s : seqs)
        c.expect(decode_nat_as_seq(encode_seq_as_nat(s)) == s, [&] { return "length " + std::to_string(s.size()); });
    for (unsigned long z = 0; z <= 10000; ++z)
        c.expect(encode_seq_as_nat(decode_nat_as_seq(z)) == z, [&] { return "z = " + std::to_string(z); });
    return c.take();
}

std::vector<CheckResult> fraenkel_suite()
{
    Checker c("fraenkel");

    c.begin("characterizations", "supported sequences and partitions for |A| <= 6, every E, valid b");
    for (std::size_t n = 2; n <= 6; ++n) {
        const AtomSet A(n);
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<Label> atoms;
            for (Label x = 0; x < n; ++x)
                if (mask >> x & 1)
                    atoms.push_back(x);
            const Support E(atoms);
            const auto outside = n - E.size();
            const auto where = [&] { return "|A| = " + std::to_string(n) + ", E mask " + std::to_string(mask); };
            if (outside >= 2)
                c.expect(filter_supported_sequences(A, E) == injective_sequences_over(E), where);
            for (std::size_t b = 1; b < outside; ++b)
                c.expect(filter_supported_partitions(A, E, b) == partitions_extending(A, E, b), where);
        }
    }

    c.begin("report", "atoms 6, E sizes 1,2,3, b = 2: (a(e), B(e)) = (2,1), (5,2), (16,5) and NO certificates");
    const auto rows = fraenkel_report(6, {1, 2, 3}, 2);
    const std::vector<std::pair<int, int>> expected{{2, 1}, {5, 2}, {16, 5}};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        c.expect(r.ok(), [&] { return "row e = " + std::to_string(r.e) + " failed: " + to_record_line(r); });
        c.expect(r.arrangements == expected[i].first && r.partitions_of_e == expected[i].second &&
                     r.supported_sequences == static_cast<std::size_t>(expected[i].first),
                 [&] { return "counts at e = " + std::to_string(r.e); });
    }

    c.begin("boundary", "b = |A \\ E| admits A \\ E as one block");
    const AtomSet A(6);
    for (std::size_t e = 1; e <= 3; ++e) {
        const auto E = Support::first(e);
        const auto b = 6 - e;
        c.expect(filter_supported_partitions(A, E, b) != partitions_extending(A, E, b),
                 [&] { return "e = " + std::to_string(e) + " did not flip"; });
    }
    return c.take();
}

using Suite = std::vector<CheckResult> (*)();

const std::vector<std::pair<std::string, Suite>>& suites()
{
    static const std::vector<std::pair<std::string, Suite>> all{
        {"counting", counting_suite}, {"dedekind", dedekind_suite}, {"bounded", bounded_suite},
        {"diagonal", diagonal_suite}, {"skeleton", skeleton_suite}, {"fraenkel", fraenkel_suite},
    };
    return all;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : suites())
            out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<CheckResult> run_suite(const std::string& name)
{
    std::vector<CheckResult> out;
    for (const auto& [suite, fn] : suites()) {
        if (name != "all" && name != suite)
            continue;
        auto part = fn();
        out.insert(out.end(), part.begin(), part.end());
    }
    if (out.empty())
        throw std::invalid_argument("unknown suite '" + name + "'");
    return out;
}

} // namespace partfin
