// oracle.hpp
// Independent ground truth on the full 2^N tensor-product space.
//
// Qubit i is bit (N-1-i) of the basis index, so index bits read left to right
// as |q_0 q_1 ... q_{N-1}>. Bit value 0 is the excited state |0> (sigma_z = +1)
// and 1 the ground state |1>; the all-down state |0>_J is index 2^N - 1.
//
// Nothing here uses the Dicke-basis ladder algebra: operators are Pauli sums
// and the eigensolver is Eigen's, not the Jacobi solver used for evolution.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "spinsq/dicke.hpp"
#include "spinsq/hamiltonian.hpp"

namespace spinsq::oracle {

inline constexpr int kMaxEmbedQubits = 12;
inline constexpr int kMaxEvolveQubits = 10;

struct FullState {
    int n_qubits = 0;
    Eigen::VectorXcd amplitudes;
};

FullState embed_symmetric(const SymmetricState& s);

// Overlaps <n|_J psi> with each Dicke state; the squared norm of the result
// is the weight of psi inside the symmetric subspace.
Eigen::VectorXcd project_symmetric(const FullState& f);

// |<embed(s)|f>|^2.
double fidelity(const SymmetricState& s, const FullState& f);

// 2^N x 2^N Hamiltonian assembled from Pauli sums S_a = sum_i sigma_{ia}/2.
Eigen::MatrixXcd full_hamiltonian(const HamiltonianSpec& spec, int n_qubits);

// Full-space evolution of the all-down state. Throws CapacityError for N > 10.
FullState full_evolve(const HamiltonianSpec& spec, int n_qubits, double t);
std::vector<FullState> full_trajectory(const HamiltonianSpec& spec, int n_qubits,
                                       const std::vector<double>& times);

// Reduced state of qubits (i, j) in basis {|00>, |01>, |10>, |11>}.
Eigen::Matrix4cd partial_trace_pair(const FullState& f, int i, int j);

// Collective moments evaluated by applying Pauli-sum operators to the full
// vector.
CollectiveMoments full_moments(const FullState& f);

struct SeparableEnsemble {
    int n_qubits = 0;
    std::vector<double> weights;
    std::vector<Eigen::Vector3d> bloch_vectors;

    void validate() const;
};

struct SeparableSample {
    SeparableEnsemble ensemble;
    CollectiveMoments moments;
};

// Moments of rho^{(x)N} for one single-qubit Bloch vector r:
// <S_a> = N r_a / 2, <[S_a, S_b]_+>/2 = (N delta_ab + N(N-1) r_a r_b) / 4.
CollectiveMoments product_state_moments(int n_qubits, const Eigen::Vector3d& bloch);

CollectiveMoments ensemble_moments(const SeparableEnsemble& e);

inline constexpr const char* kSamplerRng = "mt19937_64, 53-bit mantissa uniforms";

// K Bloch vectors uniform in the unit ball and flat-Dirichlet weights.
// Deterministic for a fixed seed.
SeparableSample sample_separable(int n_qubits, int members, std::uint64_t seed);

// Closed-form one-axis twisting moments from |0>_J with mubar = 2 mu t.
// <S+^2> imaginary part has no closed form here and is left unset.
struct OneAxisMoments {
    double sx2 = 0.0;
    double sy2 = 0.0;
    double sz2 = 0.0;
    double re_sp2 = 0.0;  // <Sx^2 - Sy^2> = <Sz^2> - N^2/4
    std::optional<double> im_sp2;
};

OneAxisMoments one_axis_analytic_moments(int n_qubits, double mu, double t);

}  // namespace spinsq::oracle
