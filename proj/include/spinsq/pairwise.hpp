// pairwise.hpp
// Exchange-symmetric two-qubit reduced state, concurrence and the
// squeezing/concurrence relations built on it.
//
// Basis order is {|00>, |01>, |10>, |11>} with |0> the excited qubit state,
// so the reduced matrix reads
//
//     | v+   x+*  x+*  u*  |
//     | x+   y    y    x-* |
//     | x+   y    y    x-* |
//     | u    x-   x-   v-  |

#pragma once

#include <array>
#include <complex>
#include <tuple>

#include <Eigen/Dense>

#include "spinsq/dicke.hpp"

namespace spinsq {

inline constexpr double kXFormThreshold = 1e-8;

struct TwoQubitReduced {
    int n_qubits = 0;
    double v_plus = 0.0;
    double v_minus = 0.0;
    double y = 0.0;
    cplx x_plus{};
    cplx x_minus{};
    cplx u{};

    Eigen::Matrix4cd matrix() const;
    double trace() const { return v_plus + v_minus + 2.0 * y; }
};

enum class ConcurrenceBranch { coherence_dominated, population_dominated, spectral };

const char* to_string(ConcurrenceBranch b);

struct ConcurrenceResult {
    double concurrence = 0.0;          // unclamped; negative means no entanglement
    std::array<double, 4> lambdas{};   // descending
    ConcurrenceBranch branch = ConcurrenceBranch::spectral;
    bool entangled() const { return concurrence > 0.0; }
};

TwoQubitReduced reduced_two_qubit(const CollectiveMoments& m);

// Closed form for X-shaped reduced matrices (x+ = x- = 0). Throws
// NotXFormError when |x+| or |x-| exceeds 1e-8.
ConcurrenceResult concurrence_x_form(const TwoQubitReduced& r);

// Wootters concurrence of an arbitrary two-qubit density matrix, without the
// max(0, .) clamp. Throws DomainError for non-density input and
// NumericalError when the spin-flipped spectrum violates its contract.
ConcurrenceResult concurrence_spectral(const Eigen::Matrix4cd& rho);

struct SqueezingCondition {
    bool satisfied = false;
    double margin = 0.0;  // |u| - y
    double xi2 = 0.0;     // 1 - 2(N-1)(|u| - y)
};

SqueezingCondition squeezing_condition(const TwoQubitReduced& r);

// xi2 - 1 + (N-1) C; vanishes wherever xi2 = 1 - (N-1) C holds.
double prop3_residual(double xi2, double concurrence, int n_qubits);

}  // namespace spinsq
