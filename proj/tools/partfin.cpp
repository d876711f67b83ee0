// Command-line front end: counting tables, the two sequence encodings, the
// diagonal family, Fraenkel certificate bundles and the verification suites.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "partfin/counting.hpp"
#include "partfin/encodings/bounded.hpp"
#include "partfin/encodings/dedekind.hpp"
#include "partfin/encodings/diagonal.hpp"
#include "partfin/encodings/seqnat.hpp"
#include "partfin/fraenkel/report.hpp"
#include "partfin/verify.hpp"

namespace {

using namespace partfin;

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

/// Malformed input text; reported as a usage error.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open input file '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<std::string> split_words(const std::string& text)
{
    std::istringstream is(text);
    return {std::istream_iterator<std::string>(is), std::istream_iterator<std::string>()};
}

Label lookup(const Carrier& carrier, const std::string& name)
{
    auto x = carrier.find(name);
    if (!x)
        throw InputError("unknown label '" + name + "'");
    return *x;
}

FinSeq parse_seq(const std::string& text, const Carrier& carrier)
{
    std::vector<Label> entries;
    for (const auto& w : split_words(text))
        entries.push_back(lookup(carrier, w));
    return FinSeq(std::move(entries));
}

/// "{x m0} {y} ..." with every label of the carrier exactly once.
SetPartition parse_partition(const std::string& text, const Carrier& carrier)
{
    std::vector<std::vector<Label>> blocks;
    bool open = false;
    std::string word;
    auto flush = [&] {
        if (word.empty())
            return;
        if (!open)
            throw InputError("label '" + word + "' outside braces");
        blocks.back().push_back(lookup(carrier, word));
        word.clear();
    };
    for (char ch : text) {
        if (ch == '{') {
            flush();
            if (open)
                throw InputError("nested '{'");
            open = true;
            blocks.emplace_back();
        } else if (ch == '}') {
            flush();
            if (!open)
                throw InputError("unmatched '}'");
            open = false;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            flush();
        } else {
            word += ch;
        }
    }
    flush();
    if (open)
        throw InputError("unterminated block");
    try {
        return SetPartition::from_blocks(carrier.size(), blocks);
    } catch (const std::invalid_argument& e) {
        throw InputError(std::string("not a partition of the carrier: ") + e.what());
    }
}

Carrier bounded_carrier(std::size_t n, const std::string& base, std::size_t plain)
{
    const std::size_t side = n + 2;
    if (!base.empty()) {
        auto names = split_words(base);
        if (names.size() < side * side)
            throw InputError("--base needs at least " + std::to_string(side * side) + " labels for n = " +
                             std::to_string(n));
        return Carrier(std::move(names));
    }
    std::vector<std::string> names;
    for (std::size_t j = 0; j < side; ++j)
        for (std::size_t i = 0; i < side; ++i)
            names.push_back(side <= 10 ? "a" + std::to_string(j) + std::to_string(i)
                                       : "a" + std::to_string(j) + "_" + std::to_string(i));
    for (std::size_t p = 0; p < plain; ++p)
        names.push_back("x" + std::to_string(p));
    return Carrier(std::move(names));
}

std::vector<std::size_t> parse_size_list(const std::string& text)
{
    std::vector<std::size_t> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad size list '" + text + "'");
        out.push_back(std::stoul(item));
    }
    if (out.empty())
        throw InputError("empty size list");
    return out;
}

int run_table(std::size_t max_n, std::size_t cutoff, const std::string& format)
{
    const auto report = verify_finite_inequality(max_n, cutoff);
    if (format == "records") {
        for (const auto& row : report.rows) {
            nlohmann::ordered_json j;
            j["kind"] = "row";
            j["n"] = row.n;
            j["arrangements"] = row.arrangements.get_str();
            j["bell"] = row.bell.get_str();
            j["enumerated"] = row.enumerated_bell.has_value();
            j["holds"] = row.holds;
            std::cout << j.dump() << '\n';
        }
        nlohmann::ordered_json s;
        s["kind"] = "summary";
        s["max"] = max_n;
        s["enumeration_cutoff"] = cutoff;
        s["pass"] = report.pass;
        std::cout << s.dump() << '\n';
    } else {
        std::cout << "n a(n) B(n)\n";
        for (const auto& row : report.rows)
            std::cout << row.n << ' ' << row.arrangements.get_str() << ' ' << row.bell.get_str()
                      << (row.enumerated_bell ? " enumerated" : "") << (row.holds ? "" : " FAIL") << '\n';
        std::cout << (report.pass ? "PASS" : "FAIL") << '\n';
    }
    return report.pass ? exit_ok : exit_failed;
}

int run_verify(const std::string& suite, const std::string& format)
{
    const auto results = run_suite(suite);
    bool all_passed = true;
    for (const auto& r : results) {
        all_passed = all_passed && r.passed;
        if (format == "records") {
            nlohmann::ordered_json j;
            j["kind"] = "check";
            j["suite"] = r.suite;
            j["name"] = r.name;
            j["passed"] = r.passed;
            j["detail"] = r.detail;
            if (!r.passed)
                j["counterexample"] = r.counterexample;
            std::cout << j.dump() << '\n';
        } else {
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name << ": " << r.detail;
            if (!r.passed)
                std::cout << " -- first counterexample: " << r.counterexample;
            std::cout << '\n';
        }
    }
    if (format != "records")
        std::cout << (all_passed ? "ALL PASS" : "FAILED") << '\n';
    return all_passed ? exit_ok : exit_failed;
}

int run_diagonal(const std::string& desc, Nat k, Nat span)
{
    DiagonalFamily G(parse_base_family(desc));
    std::string bits;
    for (Nat xi = 0; xi <= span; ++xi)
        bits += G.contains(k, xi) ? '1' : '0';
    std::cout << "G(" << k << ") on 0.." << span << ": " << bits << '\n';

    bool ok = true;
    auto print = [&](TwoCopyOrdinal earlier) {
        const Nat xi = distinguishing_witness(k, earlier);
        const bool in_g = G.contains(k, xi);
        const bool in_earlier = G.indexed_contains(earlier, xi);
        ok = ok && in_g != in_earlier;
        std::cout << "witness (" << earlier.copy << ',' << earlier.index << ") xi=" << xi << " G(" << k
                  << ")=" << in_g << ' ' << (earlier.copy == 0 ? "base(" : "G(") << earlier.index
                  << ")=" << in_earlier << (in_g != in_earlier ? " separated" : " NOT SEPARATED") << '\n';
    };
    for (Nat m = 0; 2 * m <= span; ++m)
        print({0, m});
    for (Nat m = 0; m < k; ++m)
        print({1, m});
    return ok ? exit_ok : exit_failed;
}

int run_fraenkel(std::size_t atoms, const std::string& esizes, std::size_t b, const std::string& format)
{
    const auto rows = fraenkel_report(atoms, parse_size_list(esizes), b);
    bool ok = true;
    for (const auto& r : rows) {
        ok = ok && r.ok();
        if (format == "human") {
            std::cout << "atoms=" << r.atoms << " e=" << r.e << " b=" << r.b
                      << " supported_seq=" << r.supported_sequences << " Part(E)=" << r.partitions_of_e.get_str()
                      << " supported_part=" << r.supported_partitions
                      << (r.inequality_claimed ? (r.inequality_holds ? " strict" : " VIOLATED") : " unclaimed")
                      << " verdict=" << (r.injection_exists ? "YES" : "NO")
                      << (r.certificate_rechecked ? " rechecked" : " UNCHECKED") << '\n';
        } else {
            std::cout << to_record_line(r) << '\n';
        }
    }
    return ok ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact finite checks on sequences versus finite-block partitions"};
    app.require_subcommand(1);

    std::string in_path;
    std::string format = "human";

    std::size_t table_max = 0, table_cutoff = 8;
    auto* table = app.add_subcommand("table", "Tabulate a(n) > B(n) for 1 <= n <= max");
    table->add_option("--max", table_max, "Largest n")->required()->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    table->add_option("--cutoff", table_cutoff, "Recount rows up to this n by enumeration")
        ->check(CLI::Range(std::size_t{0}, std::size_t{10}));
    table->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

    std::string base = "x y z";
    std::size_t markers = 0;
    auto* enc_d = app.add_subcommand("encode-dedekind", "Sequence over the base -> partition of base + markers");
    auto* dec_d = app.add_subcommand("decode-dedekind", "Partition of base + markers -> sequence");
    for (auto* sub : {enc_d, dec_d}) {
        sub->add_option("--base", base, "Whitespace-separated base labels");
        sub->add_option("--markers", markers, "Marker budget M")->required();
        sub->add_option("--in", in_path, "Input file (default: standard input)");
    }

    std::size_t grid_n = 0, plain = 1;
    std::string grid_base;
    auto* enc_b = app.add_subcommand("encode-bounded", "Sequence of length <= n -> partition");
    auto* dec_b = app.add_subcommand("decode-bounded", "Partition -> sequence of length <= n");
    for (auto* sub : {enc_b, dec_b}) {
        sub->add_option("--n", grid_n, "Length bound n")->required()->check(CLI::Range(std::size_t{0}, std::size_t{64}));
        sub->add_option("--plain", plain, "Plain labels x0.. after the default grid labels");
        sub->add_option("--base", grid_base, "Explicit labels; the first (n+2)^2 form the grid");
        sub->add_option("--in", in_path, "Input file (default: standard input)");
    }

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run exhaustive property suites");
    std::vector<std::string> suite_choices = suite_names();
    suite_choices.push_back("all");
    verify->add_option("--suite", suite)->check(CLI::IsMember(suite_choices));
    verify->add_option("--format", format)->check(CLI::IsMember({"human", "records"}));

    std::string family;
    Nat diag_k = 0, span = 64;
    auto* diagonal = app.add_subcommand("diagonal", "Print G(k) and its distinguishing witnesses");
    diagonal->add_option("--base", family, "singleton:c | singletons | upto:c | evens | periodic:BITS")->required();
    diagonal->add_option("--k", diag_k, "Index k of G(k)")->required()->check(CLI::Range(Nat{0}, Nat{100000}));
    diagonal->add_option("--span", span, "Print membership on 0..span")->check(CLI::Range(Nat{0}, Nat{1000000}));

    std::size_t atoms = 0, bound = 0;
    std::string esizes;
    std::string fraenkel_format = "records";
    auto* fraenkel = app.add_subcommand("fraenkel", "Certificate bundle, one record per E size");
    fraenkel->add_option("--atoms", atoms)->required();
    fraenkel->add_option("--esizes", esizes, "Comma-separated sizes of E")->required();
    fraenkel->add_option("--b", bound, "Block bound")->required();
    fraenkel->add_option("--format", fraenkel_format)->check(CLI::IsMember({"human", "records"}));

    auto* seqnat = app.add_subcommand("seqnat", "Bijection between finite sequences of naturals and naturals");
    seqnat->require_subcommand(1);
    std::vector<std::string> values;
    auto* sn_enc = seqnat->add_subcommand("encode", "Sequence -> natural");
    auto* sn_dec = seqnat->add_subcommand("decode", "Natural -> sequence");
    for (auto* sub : {sn_enc, sn_dec}) {
        sub->add_option("values", values, "Inline input (default: --in or standard input)");
        sub->add_option("--in", in_path, "Input file (default: standard input)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*table)
            return run_table(table_max, table_cutoff, format);
        if (*verify)
            return run_verify(suite, format);
        if (*diagonal)
            return run_diagonal(family, diag_k, span);
        if (*fraenkel)
            return run_fraenkel(atoms, esizes, bound, fraenkel_format);
        if (*enc_d || *dec_d) {
            MarkerUniverse u(Carrier(split_words(base)), markers);
            const auto text = read_input(in_path);
            if (*enc_d)
                std::cout << format_partition(seq_to_partition_dedekind(parse_seq(text, u.base()), u), u.combined())
                          << '\n';
            else
                std::cout << format_seq(partition_to_seq_dedekind(parse_partition(text, u.combined()), u), u.base())
                          << '\n';
            return exit_ok;
        }
        if (*enc_b || *dec_b) {
            const Carrier carrier = bounded_carrier(grid_n, grid_base, plain);
            const MarkerGrid grid(grid_n, carrier);
            const auto text = read_input(in_path);
            if (*enc_b)
                std::cout << format_partition(bounded_seq_to_partition(parse_seq(text, carrier), grid), carrier)
                          << '\n';
            else
                std::cout << format_seq(bounded_partition_to_seq(parse_partition(text, carrier), grid), carrier)
                          << '\n';
            return exit_ok;
        }
        if (*seqnat) {
            const auto words = values.empty() ? split_words(read_input(in_path)) : values;
            for (const auto& w : words)
                if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
                    throw InputError("not a natural number: '" + w + "'");
            if (*sn_enc) {
                NatSeq s;
                for (const auto& w : words) {
                    try {
                        s.push_back(std::stoull(w));
                    } catch (const std::out_of_range&) {
                        throw InputError("entry exceeds 64 bits: '" + w + "'");
                    }
                }
                std::cout << encode_seq_as_nat(s).get_str() << '\n';
            } else {
                if (words.size() != 1)
                    throw InputError("decode takes exactly one natural number");
                const auto seq = decode_nat_as_seq(BigNat(words[0]));
                for (std::size_t i = 0; i < seq.size(); ++i)
                    std::cout << (i ? " " : "") << seq[i];
                std::cout << '\n';
            }
            return exit_ok;
        }
    } catch (const NotInRange& e) {
        std::cerr << "not in range: " << e.what() << '\n';
        return exit_failed;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
