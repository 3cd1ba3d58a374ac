#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "provclose/cli.hpp"

using nlohmann::json;
using provclose::parse_word;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = provclose::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(const std::vector<std::string>& args) {
    RunResult r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / name;
    std::ofstream f(p);
    f << body;
    return p;
}

const std::vector<std::string> kClosureKeys = {"input",  "variety",          "root",
                                               "exponent", "closure_exponent", "generator",
                                               "closed", "trace",            "oracle"};

}  // namespace

TEST_CASE("closure subcommand") {
    json r = run_json({"closure", "-V", "GP:2", "-w", "(ab)^6", "--json"});
    for (const std::string& k : kClosureKeys) CHECK(r.contains(k));
    CHECK(r["root"] == "ab");
    CHECK(r["exponent"] == 6);
    CHECK(r["closure_exponent"] == 2);
    CHECK(r["closed"] == false);
    CHECK(r["variety"] == "GP:2");
    CHECK(r["oracle"]["status"] == "not_run");
    REQUIRE(r["trace"].size() == 2);
    CHECK(r["trace"][0]["rule"] == "root/exp");
    CHECK(r["trace"][1]["rule"] == "Cor 3.5(iii)");
    CHECK(parse_word(r["generator"].get<std::string>()) == parse_word("(ab)^2"));
    CHECK(parse_word(r["input"].get<std::string>()) == parse_word("(ab)^6"));
    CHECK(parse_word(r["root"].get<std::string>()) == parse_word("ab"));

    RunResult text = run({"closure", "-V", "GP:2", "-w", "(ab)^6"});
    CHECK(text.code == 0);
    CHECK(text.out.find("closure exponent: 2") != std::string::npos);
    CHECK(text.out.find("[Cor 3.5(iii)]") != std::string::npos);
}

TEST_CASE("closure under Vp cites the h-value") {
    json r = run_json({"closure", "-V", "Vp:3", "-w", "(ab)^4", "--json"});
    CHECK(r["closure_exponent"] == 2);
    CHECK(r["closed"] == false);
    REQUIRE(r["trace"].size() == 2);
    CHECK(r["trace"][0]["rule"] == "root/exp");
    CHECK(r["trace"][1]["rule"] == "Cor 4.7");
    CHECK(r["trace"][1]["detail"].get<std::string>().find("h_u = 2") != std::string::npos);
}

TEST_CASE("is-closed subcommand") {
    json r = run_json({"is-closed", "-V", "S", "-w", "[a,b]^10", "--json"});
    CHECK(r["closed"] == true);
    CHECK(r["reason"] == "Cor 3.4(i)");
    CHECK(r["exponent"] == 10);

    json open = run_json({"is-closed", "-V", "GP:2", "-w", "a^6", "--json"});
    CHECK(open["closed"] == false);
    CHECK(open["reason"] == "Cor 3.5(ii)");
}

TEST_CASE("separate subcommand") {
    json r = run_json({"separate", "-V", "GP:2", "-v", "ab", "-w", "(ab)^6", "--json"});
    CHECK(r["status"] == "separated");
    CHECK(r["closure_exponent"] == 2);
    CHECK(r["closed"] == false);
    REQUIRE(r.contains("witness"));
    CHECK(r["witness"]["group"] == "C2");
    CHECK(r["witness"]["images"] == json::array({1, 0}));

    json inside = run_json({"separate", "-V", "GP:2", "-v", "(ab)^4", "-w", "(ab)^2", "--json"});
    CHECK(inside["status"] == "in_subgroup");
}

TEST_CASE("member and root subcommands") {
    CHECK(run_json({"member", "-V", "GP:2", "-v", "(ab)^-4", "-w", "(ab)^6", "--json"})["member"] ==
          true);
    CHECK(run_json({"member", "-V", "GP:2", "-v", "(ab)^3", "-w", "(ab)^6", "--json"})["member"] ==
          false);

    json root = run_json({"root", "-w", "ba^3b^-1", "--json"});
    CHECK(root["root"] == "bab^-1");
    CHECK(root["exponent"] == 3);
}

TEST_CASE("verify subcommand") {
    json r = run_json({"verify", "-V", "GP:2", "-w", "(ab)^6", "--json"});
    for (const std::string& k : kClosureKeys) CHECK(r.contains(k));
    CHECK(r["oracle"]["status"] == "pass");
    CHECK(r["oracle"]["necessary"]["status"] == "pass");
    // excluded divisors of 6 under m = 2: j = 1 and j = 3
    REQUIRE(r["oracle"]["separation"].size() == 2);
    for (const auto& s : r["oracle"]["separation"]) CHECK(s["status"] == "separated");
    CHECK(r["oracle"].contains("witness"));

    json closed = run_json({"verify", "-V", "N", "-w", "ab", "--json"});
    CHECK(closed["oracle"]["status"] == "pass");
    CHECK(closed["oracle"]["separation"].empty());
}

TEST_CASE("emitted words parse back to the same element") {
    for (const std::string& w : {"(ab)^6", "ba^3b^-1", "[a,b]^2", "a^-5", "1"}) {
        json r = run_json({"closure", "-V", "GP:2,3", "-w", w, "--json"});
        for (const std::string& k : {"input", "root", "generator"}) {
            std::string emitted = r[k].get<std::string>();
            CHECK(provclose::to_string(parse_word(emitted)) == emitted);
        }
        CHECK(parse_word(r["input"].get<std::string>()) == parse_word(w));
    }
}

TEST_CASE("batch subcommand") {
    auto path = temp_file("provclose_batch_test.txt", "(ab)^6\n\na^12\nbogus(\n[a,b]\n");
    RunResult r = run({"batch", "-V", "GP:2", path.string(), "--json"});
    CHECK(r.code == 1);  // one bad line
    std::istringstream lines(r.out);
    std::string line;
    std::vector<json> recs;
    while (std::getline(lines, line)) recs.push_back(json::parse(line));
    REQUIRE(recs.size() == 4);
    CHECK(recs[0]["line"] == 1);
    CHECK(recs[0]["closure_exponent"] == 2);
    CHECK(recs[1]["line"] == 3);
    CHECK(recs[1]["generator"] == "a^4");
    CHECK(recs[2]["line"] == 4);
    CHECK(recs[2].contains("error"));
    CHECK(recs[3]["line"] == 5);
    CHECK(recs[3]["closed"] == true);
    std::filesystem::remove(path);

    auto ok_path = temp_file("provclose_batch_ok.txt", "ab\nba\n");
    CHECK(run({"batch", "-V", "N", ok_path.string(), "--json"}).code == 0);
    std::filesystem::remove(ok_path);
}

TEST_CASE("catalog selection") {
    auto path = temp_file("provclose_catalog_test.json",
                          R"json([{"name": "C4", "kind": "cyclic", "k": 4}])json");

    json flagged = run_json({"separate", "-V", "GP:2", "-v", "ab", "-w", "(ab)^6", "--json",
                             "--catalog", path.string()});
    CHECK(flagged["witness"]["group"] == "C4");

    setenv("PROVCLOSE_CATALOG", path.string().c_str(), 1);
    json via_env = run_json({"separate", "-V", "GP:2", "-v", "ab", "-w", "(ab)^6", "--json"});
    CHECK(via_env["witness"]["group"] == "C4");
    unsetenv("PROVCLOSE_CATALOG");

    json def = run_json({"separate", "-V", "GP:2", "-v", "ab", "-w", "(ab)^6", "--json"});
    CHECK(def["witness"]["group"] == "C2");
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({"closure", "-V", "GP:2", "-w", "ab"}).code == 0);
    CHECK(run({"--help"}).code == 0);

    SECTION("usage errors exit 2") {
        const std::vector<std::vector<std::string>> bad_usage = {
            {},
            {"nonsense"},
            {"closure", "-V", "GP:2"},
            {"closure", "-w", "ab"},
            {"closure", "-V", "bogus", "-w", "ab"},
            {"closure", "-V", "GP:4", "-w", "ab"},
            {"closure", "-V", "GP:2", "-w", "a^"},
            {"closure", "-V", "GP:2", "-w", "(ab"},
            {"closure", "-V", "GP:2", "-w", "A"},
            {"closure", "-V", "GP:2", "-w", "a^0"},
            {"member", "-V", "N", "-w", "ab"},
            {"closure", "-V", "GP:2", "-w", "ab", "--bogus-flag"},
        };
        for (const auto& args : bad_usage) {
            RunResult r = run(args);
            INFO("args failed to exit 2");
            CHECK(r.code == 2);
        }
    }

    SECTION("domain errors exit 1") {
        RunResult ab = run({"closure", "-V", "Ab:6", "-w", "ab"});
        CHECK(ab.code == 1);
        CHECK(ab.err.find("no closure formula in scope") != std::string::npos);

        CHECK(run({"verify", "-V", "Su", "-w", "ab"}).code == 1);
        CHECK(run({"root", "-w", "1"}).code == 1);
        CHECK(run({"batch", "-V", "N", "/nonexistent/words.txt"}).code == 1);
        CHECK(run({"separate", "-V", "GP:2", "-v", "a", "-w", "a^2", "--catalog",
                   "/nonexistent/catalog.json"})
                  .code == 1);
    }
}
