// dicke.hpp
// Symmetric N-qubit states in the Dicke basis |n>_J = |J, -J+n>, J = N/2,
// and the collective-spin moments computed from them.

#pragma once

#include <cmath>
#include <complex>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spinsq {

using cplx = std::complex<double>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kParityTolerance = 1e-12;

class SymmetricState {
public:
    int n_qubits() const { return n_qubits_; }
    int dim() const { return n_qubits_ + 1; }
    double spin() const { return 0.5 * n_qubits_; }

    const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
    cplx operator[](int n) const { return amplitudes_(n); }

    // Re-checks length and unit norm; throws DomainError on violation.
    void validate(double tol = kNormTolerance) const;

    // Trusted construction for vectors that are normalized by construction
    // (evolution output). Only the length is checked.
    static SymmetricState from_normalized(int n_qubits, Eigen::VectorXcd amplitudes);

private:
    SymmetricState(int n_qubits, Eigen::VectorXcd amplitudes)
        : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

    int n_qubits_;
    Eigen::VectorXcd amplitudes_;
};

struct NormalizedState {
    SymmetricState state;
    double scale;  // factor applied to the input amplitudes
};

SymmetricState make_dicke_state(int n_qubits, int excitations);
SymmetricState make_all_down(int n_qubits);
NormalizedState make_state(int n_qubits, std::span<const cplx> amplitudes);

enum class ParityClass { even, odd, mixed };

const char* to_string(ParityClass p);

ParityClass parity_class(const SymmetricState& state);

// First and second moments of the collective spin operators.
// For pure symmetric states sx2 + sy2 + sz2 = J(J+1); ensembles of mixed
// product states (oracle sampler) fall below that, so every second moment is
// stored explicitly rather than re-derived.
struct CollectiveMoments {
    int n_qubits = 0;
    double mean_sx = 0.0;
    double mean_sy = 0.0;
    double mean_sz = 0.0;
    double sx2 = 0.0;
    double sy2 = 0.0;
    double sz2 = 0.0;
    double anti_sx_sy = 0.0;  // <[Sx,Sy]_+>
    cplx sp_mean{};           // <S+>
    cplx sp2{};               // <S+^2>
    cplx anti_sp_sz{};        // <[S+,Sz]_+>

    // Symmetrized second-moment matrix M_ab = <[S_a,S_b]_+>/2.
    Eigen::Matrix3d second_moment_matrix() const;
    Eigen::Vector3d mean_spin() const { return {mean_sx, mean_sy, mean_sz}; }
};

CollectiveMoments collective_moments(const SymmetricState& state);

// Convex combination; throws DomainError on negative or unnormalized
// weights, an empty ensemble, or mismatched qubit counts.
CollectiveMoments mix_moments(std::span<const std::pair<double, CollectiveMoments>> ensemble);

// <n+1|S+|n> = sqrt((N-n)(n+1)).
inline double raising_element(int n_qubits, int n) {
    return std::sqrt(static_cast<double>(n_qubits - n) * static_cast<double>(n + 1));
}

}  // namespace spinsq
