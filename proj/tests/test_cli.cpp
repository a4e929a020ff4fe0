#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "spinsq/cli.hpp"
#include "spinsq/errors.hpp"

using spinsq::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string c; std::getline(ss, c, ',');) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("spinsq_test_" + name);
}

}  // namespace

TEST_CASE("list parsing") {
    CHECK(spinsq::cli::parse_int_list("2..4,10") == std::vector<int>{2, 3, 4, 10});
    CHECK(spinsq::cli::parse_double_list("0.5, 1,2e-1") == std::vector<double>{0.5, 1.0, 0.2});
    CHECK_THROWS_AS(spinsq::cli::parse_int_list("4..2"), spinsq::DomainError);
    CHECK_THROWS_AS(spinsq::cli::parse_int_list("a"), spinsq::DomainError);
    CHECK_THROWS_AS(spinsq::cli::parse_double_list(""), spinsq::DomainError);
}

TEST_CASE("evolve CSV is byte-stable and matches the two-qubit closed form") {
    const std::vector<std::string> args{"evolve", "--model", "one-axis", "--n", "2", "--t-max", "3", "--dt", "0.05"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const auto rows = parse_csv(a.out);
    REQUIRE(rows.size() == 62);
    CHECK(rows[0][0] == "t");
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double t = std::stod(rows[k][0]);
        CHECK(std::abs(std::stod(rows[k][1]) - (1.0 - std::abs(std::sin(t)))) < 1e-10);
        CHECK(std::abs(std::stod(rows[k][5]) - std::abs(std::sin(t))) < 1e-10);
    }
}

TEST_CASE("17 significant digits round-trip") {
    const auto r = invoke({"evolve", "--model", "two-axis", "--n", "6", "--t-max", "0.5", "--dt", "0.1"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    for (std::size_t k = 1; k < rows.size(); ++k) {
        for (std::size_t c = 0; c < rows[k].size(); ++c) {
            if (c == 4 || c == 6 || rows[k][c] == "nan") continue;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", std::stod(rows[k][c]));
            CHECK(rows[k][c] == buf);
        }
    }
}

TEST_CASE("two-axis N=6 CSV satisfies C = (1 - xi2)/5") {
    const auto r = invoke({"evolve", "--model", "two-axis", "--n", "6", "--t-max", "3", "--dt", "0.01"});
    REQUIRE(r.code == 0);
    const auto rows = parse_csv(r.out);
    bool squeezed = false;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const double xi2 = std::stod(rows[k][1]);
        const double c = std::stod(rows[k][5]);
        CHECK(std::abs(c - (1.0 - xi2) / 5.0) < 1e-9);
        squeezed = squeezed || (xi2 < 1.0 && c > 0.0);
    }
    CHECK(squeezed);
}

TEST_CASE("--out writes the file and prints a summary") {
    const auto path = temp_path("evolve.csv");
    const auto r = invoke({"evolve", "--n", "4", "--t-max", "1", "--dt", "0.1", "--out", path.string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("min_xi2=") != std::string::npos);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("t,xi2_closed,", 0) == 0);
    std::filesystem::remove(path);
}

TEST_CASE("config file with command-line override") {
    const auto cfg = temp_path("run.cfg");
    {
        std::ofstream f(cfg);
        f << "model = one-axis-field\nn = 3\nomega = 0.5\nt-max = 1\ndt = 0.5\n";
    }
    const auto from_file = invoke({"evolve", "--config", cfg.string()});
    REQUIRE(from_file.code == 0);
    CHECK(parse_csv(from_file.out).size() == 4);
    const auto overridden = invoke({"evolve", "--config", cfg.string(), "--dt", "0.25"});
    REQUIRE(overridden.code == 0);
    CHECK(parse_csv(overridden.out).size() == 6);
    std::filesystem::remove(cfg);
}

TEST_CASE("scan grid output is sorted and deterministic across worker counts") {
    const std::vector<std::string> base{"scan", "--model", "one-axis,two-axis", "--n", "2..5",
                                        "--mu", "1,0.5", "--t-max", "2", "--dt", "0.05"};
    auto one = base;
    one.insert(one.end(), {"--workers", "1"});
    auto four = base;
    four.insert(four.end(), {"--workers", "4"});
    const auto a = invoke(one);
    const auto b = invoke(four);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    // one-axis: 4 sizes x 2 mu; two-axis: 4 sizes x 1 gamma.
    CHECK(parse_csv(a.out).size() == 1 + 8 + 4);
}

TEST_CASE("dicke subcommand") {
    const auto r = invoke({"dicke", "--n", "4", "--excitations", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("xi2 = 3\n") != std::string::npos);
    CHECK(r.out.find("concurrence = 0.33333333333333331") != std::string::npos);
    const auto single = invoke({"dicke", "--n", "1", "-k", "0"});
    CHECK(single.code == 0);
    CHECK(single.out.find("n/a") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(invoke({"evolve", "--n", "2", "--dt", "0"}).code == 2);
    CHECK(invoke({"evolve", "--n", "2", "--model", "bogus"}).code == 2);
    CHECK(invoke({"evolve", "--n", "2", "--model", "one-axis-field"}).code == 2);
    CHECK(invoke({"evolve"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
    CHECK(invoke({"dicke", "--n", "3", "-k", "4"}).code == 2);
    CHECK(invoke({"scan", "--model", "one-axis-field", "--n", "2"}).code == 2);
    CHECK(invoke({"verify", "bogus"}).code == 2);
    CHECK(invoke({"evolve", "--n", "2", "--out", "/nonexistent-dir/x.csv"}).code == 4);
}

TEST_CASE("verify subcommand") {
    const auto r = invoke({"verify", "lemma3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ALL PASSED") != std::string::npos);
    CHECK(invoke({"verify", "--suite", "x-form", "--seed", "7"}).code == 0);
}
