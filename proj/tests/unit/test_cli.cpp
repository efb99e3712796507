#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "trirhombus/cli.hpp"

namespace cli = trirhombus::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("point") {
    CHECK(run({"point", "--multiple", "4"}).out == "5920/4761 5576768/328509\n");
    CHECK(run({"point", "--multiple", "0"}).out == "infinity\n");
    CHECK(run({"point", "--multiple", "-1"}).out == "0/1 12/1\n");
    CHECK(run({"point", "--multiple", "0", "--add-torsion"}).out == "-4/1 0/1\n");
    CHECK(run({"point", "--multiple", "x"}).code == cli::kUsageError);
    CHECK(run({"point"}).code == cli::kUsageError);
}

TEST_CASE("generate") {
    const Run both = run({"generate", "--max-multiple", "4", "--negatives", "--format", "json"});
    CHECK(both.code == cli::kSuccess);
    CHECK(both.out.find("\"c\": \"34\"") != std::string::npos);
    CHECK(both.out.find("\"c\": \"3051458\"") != std::string::npos);
    CHECK(both.out.find("\"common_area\": \"2235676628640/1\"") != std::string::npos);

    const Run none = run({"generate", "--max-multiple", "1"});
    CHECK(none.code == cli::kSuccess);
    CHECK(none.out == "{\n  \"certificates\": []\n}\n");
    CHECK(none.err.rfind("0 certificate(s)", 0) == 0);

    CHECK(run({"generate", "--max-multiple", "0"}).code == cli::kUsageError);
    CHECK(run({"generate"}).code == cli::kUsageError);
    CHECK(run({"generate", "--max-multiple", "3", "--format", "xml"}).code == cli::kUsageError);
    CHECK(run({"generate", "--max-multiple", "3", "--limit", "0"}).code == cli::kUsageError);

    const Run csv = run({"generate", "--max-multiple", "4", "--format", "csv", "--limit", "1"});
    CHECK(csv.code == cli::kSuccess);
    CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 2);
}

TEST_CASE("generate | verify round trip, deterministic") {
    const std::vector<std::string> args = {"generate", "--max-multiple", "8", "--negatives", "--torsion"};
    const Run first = run(args);
    CHECK(first.out == run(args).out);
    const Run verified = run({"verify", "-"}, first.out);
    CHECK(verified.code == cli::kSuccess);
    CHECK(verified.out.find("FAIL") == std::string::npos);

    const Run csv = run({"generate", "--max-multiple", "8", "--negatives", "--torsion", "--format", "csv"});
    CHECK(run({"verify"}, csv.out).code == cli::kSuccess);
}

TEST_CASE("verify exit codes") {
    const std::string doc = run({"generate", "--max-multiple", "4"}).out;
    CHECK(run({"verify", "-"}, doc).code == cli::kSuccess);

    std::string corrupted = doc;
    const auto pos = corrupted.find("\"3051458\"");
    REQUIRE(pos != std::string::npos);
    corrupted.replace(pos, 9, "\"3051459\"");
    const Run bad = run({"verify", "-"}, corrupted);
    CHECK(bad.code == cli::kVerificationFailed);
    CHECK(bad.out.find("pythagoras") != std::string::npos);

    CHECK(run({"verify", "-"}, "{ not json").code == cli::kUsageError);
    CHECK(run({"verify", "/nonexistent/certs.json"}).code == cli::kUsageError);
}

TEST_CASE("search") {
    const Run five = run({"search", "--max-den", "5"});
    CHECK(five.code == cli::kSuccess);
    CHECK(five.out.find("3/5 1/3 0/1 12/1 yes") != std::string::npos);

    const Run two = run({"search", "--max-den", "2"});
    CHECK(two.code == cli::kSuccess);
    CHECK(two.out == "u v x y on_curve\n");

    CHECK(run({"search", "--max-den", "0"}).code == cli::kUsageError);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"--help"}).code == cli::kSuccess);
}
