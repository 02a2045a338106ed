#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "detvar/cli.hpp"
#include "detvar/output.hpp"

using detvar::OutputRecord;
using detvar::run_cli;

namespace {

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

CliResult invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("betti csv output") {
    const CliResult r = invoke({"betti", "--n", "2", "--mode", "solved", "--format", "csv"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "degree,coefficient\n0,1\n2,2\n4,1\n");
}

TEST_CASE("csv rows are exactly degree,coefficient") {
    for (const char* mode : {"solved", "corollary", "theorem"}) {
        const CliResult r = invoke({"betti", "--n", "3", "--mode", mode, "--format", "csv"});
        REQUIRE(r.exit_code == 0);
        std::istringstream lines(r.out);
        std::string line;
        REQUIRE(std::getline(lines, line));
        REQUIRE(line == "degree,coefficient");
        while (std::getline(lines, line)) {
            const auto comma = line.find(',');
            REQUIRE(comma != std::string::npos);
            REQUIRE(line.find(',', comma + 1) == std::string::npos);
            REQUIRE(std::stoi(line.substr(0, comma)) >= 0);
            REQUIRE(line.substr(comma + 1).find_first_not_of("-0123456789") ==
                    std::string::npos);
        }
    }
}

TEST_CASE("compare json has the pinned discrepancy set at n=2") {
    const CliResult r = invoke({"compare", "--n", "2", "--format", "json"});
    REQUIRE(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    REQUIRE(j.at("discrepancies").size() == 4);
    std::set<int> degrees;
    for (const auto& d : j.at("discrepancies")) degrees.insert(d.at("degree").get<int>());
    CHECK(degrees == std::set<int>{2, 3, 4, 6});
    CHECK(j.at("n") == 2);
    CHECK(j.at("mode") == "compare");
    for (const auto& entry : j.at("poincare")) {
        CHECK(entry.at("degree").is_number_integer());
        CHECK(entry.at("coeff").is_string());  // decimal strings, never numbers
    }
}

TEST_CASE("emitted json round-trips byte-identically") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"betti", "--n", "3", "--format", "json"},
             {"psu", "--n", "5", "--format", "json"},
             {"count", "--n", "4", "--format", "json"},
             {"compare", "--n", "3", "--format", "json"}}) {
        const CliResult r = invoke(args);
        REQUIRE(r.exit_code == 0);
        // Strip the trailing newline added after the document.
        REQUIRE(!r.out.empty());
        REQUIRE(r.out.back() == '\n');
        const std::string emitted = r.out.substr(0, r.out.size() - 1);
        REQUIRE(nlohmann::json::parse(emitted).dump(2) == emitted);
    }
}

TEST_CASE("json schema carries all five keys") {
    const CliResult r = invoke({"psu", "--n", "2", "--format", "json"});
    const nlohmann::json j = nlohmann::json::parse(r.out);
    for (const char* key : {"n", "mode", "poincare", "diagnostics", "discrepancies"})
        REQUIRE(j.contains(key));
    CHECK(j.at("discrepancies").empty());
}

TEST_CASE("psu convention flag filters the analysis") {
    const CliResult both = invoke({"psu", "--n", "6"});
    CHECK(both.out.find("unimodal (all coefficients): false") != std::string::npos);
    CHECK(both.out.find("unimodal (nonzero coefficients): false") != std::string::npos);
    CHECK(both.out.find("palindromic: true") != std::string::npos);

    const CliResult nonzero = invoke({"psu", "--n", "4", "--convention", "nonzero"});
    CHECK(nonzero.out.find("unimodal (nonzero coefficients): true") != std::string::npos);
    CHECK(nonzero.out.find("unimodal (all coefficients)") == std::string::npos);

    const CliResult all = invoke({"psu", "--n", "4", "--convention", "all"});
    CHECK(all.out.find("unimodal (all coefficients): false") != std::string::npos);
    CHECK(all.out.find("unimodal (nonzero coefficients)") == std::string::npos);
}

TEST_CASE("count subcommand uses the variable q") {
    const CliResult r = invoke({"count", "--n", "2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("1 + 2q + q^2") != std::string::npos);
    CHECK(r.out.find("euler characteristic at q=1: 4") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(invoke({"betti"}).exit_code == 2);                    // missing --n
    CHECK(invoke({"psu", "--n", "1"}).exit_code == 2);          // below range
    CHECK(invoke({"nonsense"}).exit_code == 2);                 // unknown subcommand
    CHECK(invoke({}).exit_code == 2);                           // no subcommand
    CHECK(invoke({"betti", "--n", "2", "--mode", "x"}).exit_code == 2);
    CHECK(invoke({"betti", "--n", "2", "--format", "x"}).exit_code == 2);
    CHECK(invoke({"--help"}).exit_code == 0);
}

TEST_CASE("verify subcommand reports per-criterion lines") {
    const CliResult r = invoke({"verify", "--max-n", "4"});
    CHECK(r.exit_code == 0);  // the suite is clean through n = 4
    int lines = 0;
    std::istringstream stream(r.out);
    std::string line;
    while (std::getline(stream, line))
        if (line.rfind("PASS", 0) == 0 || line.rfind("FAIL", 0) == 0) ++lines;
    CHECK(lines == 10);
    CHECK(r.out.find("10/10 criteria passed") != std::string::npos);
}

TEST_CASE("verify exit code reflects failures") {
    // From n = 5 the counting polynomial picks up a negative coefficient,
    // so the as-stated nonnegativity clause of the point-counting criterion
    // fails and verify must exit 1.
    const CliResult r = invoke({"verify", "--max-n", "5"});
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL  6") != std::string::npos);
    CHECK(r.out.find("negative coefficient") != std::string::npos);
    CHECK(r.out.find("9/10 criteria passed") != std::string::npos);
}
