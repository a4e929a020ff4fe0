// verify.hpp
// Named verification checks. Each check reports the worst value observed and
// the limit it is held to; suites bundle checks for `spinsq verify` and the
// acceptance runner.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "spinsq/dicke.hpp"
#include "spinsq/pairwise.hpp"

namespace spinsq::verify {

enum class Bound { at_most, at_least };

struct Check {
    std::string name;
    double value = 0.0;  // worst observed
    double limit = 0.0;
    Bound bound = Bound::at_most;
    std::string note;

    bool pass() const { return bound == Bound::at_most ? value <= limit : value >= limit; }
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    bool passed() const;
    void print(std::ostream& out) const;
};

using Reconstruction = std::function<TwoQubitReduced(const CollectiveMoments&)>;

// Complex Gaussian amplitudes, normalised; `parity` restricts support to
// even or odd n (ParityClass::mixed keeps every n).
SymmetricState random_state(int n_qubits, std::mt19937_64& rng, ParityClass parity);

double gaussian(std::mt19937_64& rng);

// N = 2, mu = 1 one-axis benchmark: xi2 = 1 - |sin t|, C = |sin t| on
// t in [0, pi] at dt = pi/200.
std::vector<Check> two_qubit_one_axis_checks();

// One-axis moments against the closed forms at `points` values of
// mubar = 2 mu t spread over [0, 2pi].
std::vector<Check> lemma3_checks(const std::vector<int>& sizes, int points);

// One-axis twisting from |0>_J: |u| - y >= 0, xi2 <= 1, xi2 = 1 - (N-1)C.
std::vector<Check> one_axis_equivalence_checks(const std::vector<int>& sizes, double t_max,
                                               double dt);

// mu Sx^2 + omega Sz from |0>_J: max xi2 <= 1 and the squeezing/concurrence
// identity where xi2 <= 1.
std::vector<Check> transverse_field_checks(const std::vector<int>& sizes,
                                           const std::vector<double>& omegas, double t_max,
                                           double dt);

// Two-axis counter-twisting, even N: xi2 = 1 - (N-1)C at every point.
std::vector<Check> two_axis_checks(const std::vector<int>& sizes, double t_max, double dt);

// Moment reconstruction of the pair reduced state against full partial traces.
std::vector<Check> lemma2_checks(const std::vector<int>& sizes, int states_per_size,
                                 std::uint64_t seed, const Reconstruction& reconstruct);

// Dicke-basis machinery against the 2^N oracle: moments, Hamiltonian
// projection, reduced states, concurrence routes and evolution fidelity.
std::vector<Check> oracle_checks(const std::vector<int>& sizes, int states_per_size,
                                 std::uint64_t seed, const Reconstruction& reconstruct);

// Closed X-form concurrence against the spectral definition.
std::vector<Check> x_form_checks(int random_tuples, const std::vector<int>& sizes,
                                 int states_per_size, std::uint64_t seed);

// Symmetric separable ensembles: perpendicular pair correlation >= 0 and
// general xi2 >= 1.
std::vector<Check> lemma1_checks(const std::vector<int>& sizes, int ensembles,
                                 std::uint64_t seed);

// Dicke states: xi2 = 1 + 2n(N-n)/N, <S+^2> = 0, and the N = 4, n = 2
// concurrence against the oracle partial trace.
std::vector<Check> dicke_checks(int max_qubits);

// Parity, unitarity, energy, z-rotation invariance and the |<S+^2>| lower
// bound along trajectories of every model Hamiltonian.
std::vector<Check> structural_checks(const std::vector<int>& sizes, double t_max, double dt,
                                     std::uint64_t seed);

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"lemma1", "lemma2", "lemma3", "prop3", "prop4",
                                                "parity", "oracle", "x-form", "all"};
    return names;
}

// Throws DomainError for an unknown suite name.
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace spinsq::verify
