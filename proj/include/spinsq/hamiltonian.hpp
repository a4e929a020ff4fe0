// hamiltonian.hpp
// Quadratic collective Hamiltonians
//     H = mu Sx^2 + chi Sy^2 + gamma_sym (SxSy + SySx)
//       + gamma_twist (S+^2 - S-^2)/(2i) + f(Sz)
// represented on the (N+1)-dimensional Dicke basis.

#pragma once

#include <vector>

#include <Eigen/Dense>

namespace spinsq {

struct HamiltonianSpec {
    double mu = 0.0;
    double chi = 0.0;
    double gamma_sym = 0.0;
    double gamma_twist = 0.0;
    std::vector<double> f_coeffs;  // f(Sz) = sum_k f_coeffs[k] Sz^k

    static HamiltonianSpec one_axis(double mu);
    static HamiltonianSpec one_axis_field(double mu, double omega);
    static HamiltonianSpec two_axis(double gamma);

    // Throws DomainError for non-finite coefficients.
    void validate() const;

    double f(double sz) const;
};

// Dense complex Hermitian matrix. Thin wrapper so ownership of the
// Hermiticity check stays in one place.
class HermitianMatrix {
public:
    // Throws DomainError if the input is not square or not Hermitian within tol
    // (relative to the largest entry).
    explicit HermitianMatrix(Eigen::MatrixXcd entries, double tol = 1e-12);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& entries() const { return entries_; }
    std::complex<double> operator()(int i, int j) const { return entries_(i, j); }

    double hermiticity_residual() const;

private:
    Eigen::MatrixXcd entries_;
};

HermitianMatrix build_hamiltonian(const HamiltonianSpec& spec, int n_qubits);

// max |[P, H]| with P = diag((-1)^n).
double parity_check(const HamiltonianSpec& spec, int n_qubits);

// Dense collective operators on the Dicke basis, used by tests and the
// self-check below.
Eigen::MatrixXcd dicke_sx(int n_qubits);
Eigen::MatrixXcd dicke_sy(int n_qubits);
Eigen::MatrixXcd dicke_sz(int n_qubits);

// max |(S+^2 - S-^2)/(2i) - (SxSy + SySx)| over matrix elements, with the
// anticommutator formed by explicit products of Sx and Sy.
double twist_form_residual(int n_qubits);

}  // namespace spinsq
