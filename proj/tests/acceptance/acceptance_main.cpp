// Acceptance runner: one PASS/FAIL line per criterion, details below each
// failing line. Exit status is nonzero when any criterion fails.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "spinsq/cli.hpp"
#include "spinsq/verify.hpp"

using spinsq::verify::Check;

namespace {

constexpr std::uint64_t kSeed = 42;

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) v.push_back(n);
    return v;
}

void append(std::vector<Check>& to, std::vector<Check> from) {
    for (auto& c : from) to.push_back(std::move(c));
}

// N = 6 two-axis CSV from the CLI must contain points with xi2 < 1 and C > 0.
Check fig1_csv_check() {
    std::ostringstream out, err;
    const int code = spinsq::cli::run(
        {"evolve", "--model", "two-axis", "--n", "6", "--gamma", "1", "--t-max", "3", "--dt", "0.01"},
        out, err);
    std::istringstream csv(out.str());
    std::string line;
    std::getline(csv, line);
    int squeezed_and_entangled = 0;
    while (std::getline(csv, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
        if (cells.size() < 6) continue;
        const double xi2 = std::stod(cells[1]);
        const double c = std::stod(cells[5]);
        if (xi2 < 1.0 && c > 0.0) ++squeezed_and_entangled;
    }
    return {"N=6 CSV points with xi2 < 1 and C > 0", code == 0 ? double(squeezed_and_entangled) : 0.0,
            1.0, spinsq::verify::Bound::at_least, "two-axis, gamma = 1, t in [0, 3]"};
}

bool report(int index, const std::string& title, const std::vector<Check>& checks) {
    bool ok = !checks.empty();
    for (const auto& c : checks) ok = ok && c.pass();
    std::printf("[%s] criterion %d: %s (%zu checks)\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                checks.size());
    if (!ok) {
        spinsq::verify::SuiteReport r{title, checks};
        r.print(std::cout);
    }
    std::fflush(stdout);
    return ok;
}

}  // namespace

int main() {
    using namespace spinsq::verify;
    bool all = true;

    all &= report(1, "two-qubit one-axis benchmark", two_qubit_one_axis_checks());
    all &= report(2, "one-axis moment closed forms", lemma3_checks({2, 3, 4, 6, 10, 20}, 200));
    all &= report(3, "one-axis: |u| >= y, xi2 <= 1, squeezing/concurrence identity",
                  one_axis_equivalence_checks(range(2, 100), 10.0, 0.01));

    std::vector<int> field_sizes = range(2, 20);
    field_sizes.push_back(50);
    field_sizes.push_back(100);
    all &= report(4, "transverse field: max xi2 <= 1 and identity",
                  transverse_field_checks(field_sizes, {0.1, 0.5, 1.0, 2.0, 5.0}, 10.0, 0.01));

    auto two_axis = two_axis_checks({2, 4, 6, 8, 10, 20}, 3.0, 0.01);
    two_axis.push_back(fig1_csv_check());
    all &= report(5, "two-axis even-N identity and N=6 squeezing window", two_axis);

    std::vector<Check> oracle = oracle_checks(range(2, 8), 100, kSeed, spinsq::reduced_two_qubit);
    append(oracle, lemma2_checks(range(2, 8), 100, kSeed, spinsq::reduced_two_qubit));
    append(oracle, x_form_checks(1000, range(2, 8), 100, kSeed));
    all &= report(6, "2^N oracle equivalence", oracle);

    all &= report(7, "separable ensembles are not squeezed", lemma1_checks(range(2, 6), 1000, kSeed));
    all &= report(8, "Dicke states", dicke_checks(100));
    all &= report(9, "structural invariants",
                  structural_checks({2, 3, 4, 7, 10, 25, 50, 100}, 10.0, 0.01, kSeed));

    std::printf("%s\n", all ? "ACCEPTANCE: ALL PASS" : "ACCEPTANCE: FAILURES");
    return all ? 0 : 1;
}
