#include "spinsq/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "spinsq/dicke.hpp"
#include "spinsq/errors.hpp"

namespace spinsq {

HamiltonianSpec HamiltonianSpec::one_axis(double mu) {
    HamiltonianSpec s;
    s.mu = mu;
    return s;
}

HamiltonianSpec HamiltonianSpec::one_axis_field(double mu, double omega) {
    HamiltonianSpec s;
    s.mu = mu;
    s.f_coeffs = {0.0, omega};
    return s;
}

HamiltonianSpec HamiltonianSpec::two_axis(double gamma) {
    HamiltonianSpec s;
    s.gamma_twist = gamma;
    return s;
}

void HamiltonianSpec::validate() const {
    auto finite = [](double v) { return std::isfinite(v); };
    bool ok = finite(mu) && finite(chi) && finite(gamma_sym) && finite(gamma_twist);
    for (double c : f_coeffs) ok = ok && finite(c);
    if (!ok) throw DomainError("Hamiltonian coefficients must be finite");
}

double HamiltonianSpec::f(double sz) const {
    // Horner
    double acc = 0.0;
    for (auto it = f_coeffs.rbegin(); it != f_coeffs.rend(); ++it) acc = acc * sz + *it;
    return acc;
}

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries, double tol) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw DomainError("Hermitian matrix must be square");
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    const double res = hermiticity_residual();
    if (res > tol * scale)
        throw DomainError("matrix is not Hermitian (residual " + std::to_string(res) + ")");
}

double HermitianMatrix::hermiticity_residual() const {
    if (entries_.size() == 0) return 0.0;
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

void check_n(int n_qubits) {
    if (n_qubits < 1) throw DomainError("Hamiltonian needs N >= 1");
}

}  // namespace

Eigen::MatrixXcd dicke_sx(int n_qubits) {
    check_n(n_qubits);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
    for (int n = 0; n < n_qubits; ++n) {
        const double a = 0.5 * raising_element(n_qubits, n);
        m(n + 1, n) = a;
        m(n, n + 1) = a;
    }
    return m;
}

Eigen::MatrixXcd dicke_sy(int n_qubits) {
    check_n(n_qubits);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
    for (int n = 0; n < n_qubits; ++n) {
        const double a = 0.5 * raising_element(n_qubits, n);
        m(n + 1, n) = cplx(0.0, -a);
        m(n, n + 1) = cplx(0.0, a);
    }
    return m;
}

Eigen::MatrixXcd dicke_sz(int n_qubits) {
    check_n(n_qubits);
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
    for (int n = 0; n <= n_qubits; ++n) m(n, n) = n - 0.5 * n_qubits;
    return m;
}

double twist_form_residual(int n_qubits) {
    const Eigen::MatrixXcd sx = dicke_sx(n_qubits);
    const Eigen::MatrixXcd sy = dicke_sy(n_qubits);
    const Eigen::MatrixXcd anti = sx * sy + sy * sx;
    Eigen::MatrixXcd ladder = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
    for (int n = 0; n + 2 <= n_qubits; ++n) {
        const double a2 = raising_element(n_qubits, n) * raising_element(n_qubits, n + 1);
        ladder(n + 2, n) = a2 / cplx(0.0, 2.0);
        ladder(n, n + 2) = -a2 / cplx(0.0, 2.0);
    }
    return (anti - ladder).cwiseAbs().maxCoeff();
}

HermitianMatrix build_hamiltonian(const HamiltonianSpec& spec, int n_qubits) {
    check_n(n_qubits);
    spec.validate();
    const double N = n_qubits;
    const double J = 0.5 * N;

    if (spec.gamma_sym != 0.0 || spec.gamma_twist != 0.0) {
        const double res = twist_form_residual(n_qubits);
        if (res > 1e-12 * std::max(1.0, N * N))
            throw NumericalError("(S+^2 - S-^2)/(2i) != SxSy + SySx, residual " +
                                 std::to_string(res));
    }

    // Sx^2 = (S+^2 + S-^2)/4 + (J(J+1) - Sz^2)/2
    // Sy^2 = -(S+^2 + S-^2)/4 + (J(J+1) - Sz^2)/2
    // SxSy + SySx = (S+^2 - S-^2)/(2i)
    const cplx sp2_coeff = (spec.mu - spec.chi) / 4.0 +
                           (spec.gamma_sym + spec.gamma_twist) / cplx(0.0, 2.0);
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n_qubits + 1, n_qubits + 1);
    for (int n = 0; n <= n_qubits; ++n) {
        const double m = n - J;
        h(n, n) = 0.5 * (spec.mu + spec.chi) * (J * (J + 1.0) - m * m) + spec.f(m);
        if (n + 2 <= n_qubits) {
            const double a2 = raising_element(n_qubits, n) * raising_element(n_qubits, n + 1);
            h(n + 2, n) = sp2_coeff * a2;
            h(n, n + 2) = std::conj(sp2_coeff) * a2;
        }
    }
    return HermitianMatrix(std::move(h));
}

double parity_check(const HamiltonianSpec& spec, int n_qubits) {
    const HermitianMatrix h = build_hamiltonian(spec, n_qubits);
    double worst = 0.0;
    // [P, H]_ij = ((-1)^i - (-1)^j) H_ij
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j) {
            const double sign_diff = ((i % 2 == 0) ? 1.0 : -1.0) - ((j % 2 == 0) ? 1.0 : -1.0);
            worst = std::max(worst, std::abs(sign_diff * h(i, j)));
        }
    return worst;
}

}  // namespace spinsq
