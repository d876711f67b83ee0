#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <sstream>

#include "cli_runner.hpp"

namespace {

std::string last_line(const std::string& text)
{
    auto trimmed = text.substr(0, text.find_last_not_of('\n') + 1);
    return trimmed.substr(trimmed.find_last_of('\n') + 1);
}

} // namespace

TEST_CASE("table", "[cli]")
{
    auto r = run_cli("table --max 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("5 326 52") != std::string::npos);
    CHECK(last_line(r.out) == "PASS");

    auto rec = run_cli("table --max 2 --format records");
    CHECK(rec.out.find(R"({"kind":"row","n":2,"arrangements":"5","bell":"2")") != std::string::npos);
    CHECK(last_line(rec.out).find(R"("pass":true)") != std::string::npos);
}

TEST_CASE("dedekind encode and decode", "[cli]")
{
    auto enc = run_cli("encode-dedekind --base 'x y z' --markers 4", "x y x\n");
    CHECK(enc.exit_code == 0);
    CHECK(enc.out == "{x m0 m2} {y m1} {z} {m3}\n");

    auto dec = run_cli("decode-dedekind --base 'x y z' --markers 4", enc.out);
    CHECK(dec.exit_code == 0);
    CHECK(dec.out == "x y x\n");

    auto empty = run_cli("encode-dedekind --markers 2", "\n");
    CHECK(empty.out == "{x} {y} {z} {m0} {m1}\n");
    CHECK(run_cli("decode-dedekind --markers 2", empty.out).out == "\n");

    auto bad = run_cli("decode-dedekind --markers 4", "{m0 m1} {x} {y} {z} {m2} {m3}");
    CHECK(bad.exit_code == 1);
    CHECK(run_cli("encode-dedekind --markers 1", "x y").exit_code == 2);
    CHECK(run_cli("encode-dedekind --markers 4", "w").exit_code == 2);
    CHECK(run_cli("decode-dedekind --markers 1", "{x y").exit_code == 2);
    CHECK(run_cli("decode-dedekind --markers 1", "{x} {y}").exit_code == 2);
}

TEST_CASE("bounded encode and decode", "[cli]")
{
    auto enc = run_cli("encode-bounded --n 1", "a00");
    CHECK(enc.out == "{a00 a10} {a01} {a02} {a11 a12} {a20} {a21} {a22} {x0}\n");
    CHECK(run_cli("decode-bounded --n 1", enc.out).out == "a00\n");

    auto x = run_cli("encode-bounded --n 1", "x0");
    CHECK(x.out == "{a00 x0} {a01 a02} {a10} {a11} {a12} {a20} {a21} {a22}\n");
    CHECK(run_cli("decode-bounded --n 1", x.out).out == "x0\n");

    CHECK(run_cli("encode-bounded --n 1", "x0 x0").exit_code == 2);
    CHECK(run_cli("decode-bounded --n 1", "{a00} {a01} {a02} {a10} {a11} {a12} {a20} {a21} {a22} {x0}").exit_code ==
          1);
}

TEST_CASE("round trips through the text formats for every suite input", "[cli]")
{
    // All sequences of length <= 2 over three base labels with two markers.
    std::vector<std::string> labels{"x", "y", "z"};
    std::vector<std::string> inputs{""};
    for (const auto& a : labels) {
        inputs.push_back(a);
        for (const auto& b : labels)
            inputs.push_back(a + " " + b);
    }
    for (const auto& in : inputs) {
        auto enc = run_cli("encode-dedekind --markers 2", in);
        REQUIRE(enc.exit_code == 0);
        CHECK(run_cli("decode-dedekind --markers 2", enc.out).out == in + "\n");
    }
}

TEST_CASE("diagonal", "[cli]")
{
    auto r = run_cli("diagonal --base singletons --k 1");
    CHECK(r.exit_code == 0);
    std::istringstream lines(r.out);
    std::string first;
    std::getline(lines, first);
    CHECK(first == "G(1) on 0..64: 00" + std::string(63, '1'));
    CHECK(r.out.find("NOT SEPARATED") == std::string::npos);
    CHECK(r.out.find("witness (1,0) xi=1 G(1)=0 G(0)=1 separated") != std::string::npos);
    CHECK(run_cli("diagonal --base nope --k 1").exit_code == 2);
}

TEST_CASE("fraenkel bundle", "[cli]")
{
    auto r = run_cli("fraenkel --atoms 6 --esizes 1,2 --b 2");
    CHECK(r.exit_code == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 2);
    CHECK(r.out.find(R"("e":1,"b":2,"supported_sequences":2)") != std::string::npos);
    CHECK(r.out.find(R"("e":2,"b":2,"supported_sequences":5)") != std::string::npos);
    CHECK(r.out.find(R"("verdict":"YES")") == std::string::npos);
    CHECK(run_cli("fraenkel --atoms 6 --esizes 4 --b 2").exit_code == 2);
    CHECK(run_cli("fraenkel --atoms 9 --esizes 1 --b 2").exit_code == 2);
}

TEST_CASE("seqnat", "[cli]")
{
    CHECK(run_cli("seqnat encode 1").out == "3\n");
    CHECK(run_cli("seqnat decode 3").out == "1\n");
    CHECK(run_cli("seqnat encode", "").out == "0\n");
    auto big = run_cli("seqnat encode 5 18446744073709551615 0");
    CHECK(run_cli("seqnat decode " + big.out.substr(0, big.out.size() - 1)).out == "5 18446744073709551615 0\n");
    CHECK(run_cli("seqnat encode -1").exit_code == 2);
}

TEST_CASE("usage errors", "[cli]")
{
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("table").exit_code == 2);
    CHECK(run_cli("table --max 3 --unknown").exit_code == 2);
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
    CHECK(run_cli("encode-dedekind --markers 2 --in /nonexistent/file").exit_code == 2);
}

TEST_CASE("verify one suite", "[cli]")
{
    auto r = run_cli("verify --suite dedekind");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS dedekind/injective") != std::string::npos);
    CHECK(last_line(r.out) == "ALL PASS");
}
