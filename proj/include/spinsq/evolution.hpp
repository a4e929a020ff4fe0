// evolution.hpp
// Exact unitary evolution c(t) = V exp(-iEt) V^dagger c(0) from a single
// Hermitian eigendecomposition.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinsq/dicke.hpp"
#include "spinsq/hamiltonian.hpp"

namespace spinsq {

struct Propagator {
    Eigen::VectorXd eigenvalues;   // ascending
    Eigen::MatrixXcd eigenvectors; // orthonormal columns
    int dim() const { return static_cast<int>(eigenvalues.size()); }

    double reconstruction_residual(const HermitianMatrix& h) const;
    double orthonormality_residual() const;
};

struct JacobiOptions {
    int max_sweeps = 100;
    double tolerance = 1e-15;  // relative off-diagonal Frobenius norm
};

// Cyclic complex Jacobi with a fixed (p, q) sweep order, so identical input
// gives bit-identical output. Throws NumericalError if the off-diagonal mass
// does not converge within the sweep budget.
Propagator hermitian_eigen(const HermitianMatrix& h, const JacobiOptions& opts = {});

SymmetricState evolve_to(const Propagator& prop, const SymmetricState& initial, double t);

struct Trajectory {
    std::vector<double> times;
    std::vector<SymmetricState> states;
    std::size_t size() const { return times.size(); }
};

// Grid 0, dt, 2dt, ... extended to the first point >= t_max.
std::vector<double> time_grid(double t_max, double dt);

// Evolves |0>_J under the given Hamiltonian.
Trajectory trajectory(const HamiltonianSpec& spec, int n_qubits, double t_max, double dt);

// Same, from an existing propagator and arbitrary initial state.
Trajectory trajectory(const Propagator& prop, const SymmetricState& initial,
                      const std::vector<double>& times);

}  // namespace spinsq
