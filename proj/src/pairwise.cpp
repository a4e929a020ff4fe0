#include "spinsq/pairwise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "spinsq/errors.hpp"

namespace spinsq {

Eigen::Matrix4cd TwoQubitReduced::matrix() const {
    const cplx xp = std::conj(x_plus);
    const cplx xm = std::conj(x_minus);
    Eigen::Matrix4cd rho;
    rho << v_plus, xp, xp, std::conj(u),
           x_plus, y, y, xm,
           x_plus, y, y, xm,
           u, x_minus, x_minus, v_minus;
    return rho;
}

const char* to_string(ConcurrenceBranch b) {
    switch (b) {
        case ConcurrenceBranch::coherence_dominated: return "coherence_dominated";
        case ConcurrenceBranch::population_dominated: return "population_dominated";
        case ConcurrenceBranch::spectral: return "spectral";
    }
    return "?";
}

TwoQubitReduced reduced_two_qubit(const CollectiveMoments& m) {
    if (m.n_qubits < 2) throw DomainError("two-qubit reduction needs N >= 2");
    const double N = m.n_qubits;
    const double pairs = N * (N - 1.0);

    TwoQubitReduced r;
    r.n_qubits = m.n_qubits;
    const double pop = N * N - 2.0 * N + 4.0 * m.sz2;
    const double tilt = 4.0 * m.mean_sz * (N - 1.0);
    r.v_plus = (pop + tilt) / (4.0 * pairs);
    r.v_minus = (pop - tilt) / (4.0 * pairs);
    r.x_plus = ((N - 1.0) * m.sp_mean + m.anti_sp_sz) / (2.0 * pairs);
    r.x_minus = ((N - 1.0) * m.sp_mean - m.anti_sp_sz) / (2.0 * pairs);
    r.y = (N * N - 4.0 * m.sz2) / (4.0 * pairs);
    r.u = m.sp2 / pairs;
    return r;
}

namespace {

ConcurrenceResult from_lambdas(std::array<double, 4> lambdas, ConcurrenceBranch branch) {
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    ConcurrenceResult c;
    c.lambdas = lambdas;
    c.concurrence = lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3];
    c.branch = branch;
    return c;
}

}  // namespace

ConcurrenceResult concurrence_x_form(const TwoQubitReduced& r) {
    if (std::abs(r.x_plus) > kXFormThreshold || std::abs(r.x_minus) > kXFormThreshold)
        throw NotXFormError("reduced matrix is not X-shaped (|x+-| > 1e-8)");
    const double root = std::sqrt(std::max(r.v_plus * r.v_minus, 0.0));
    const double abs_u = std::abs(r.u);
    const double y = r.y;
    // Spin-flip spectrum of the X-block {v+, v-, u} and the y-block.
    const std::array<double, 4> lambdas{root + abs_u, std::abs(root - abs_u), 2.0 * y, 0.0};
    const bool coherence = 2.0 * y <= root + abs_u;

    ConcurrenceResult c = from_lambdas(
        lambdas, coherence ? ConcurrenceBranch::coherence_dominated
                           : ConcurrenceBranch::population_dominated);
    // Branch formulas; they coincide with lambda_1 - lambda_2 - lambda_3 - lambda_4
    // whenever v+ v- >= |u|^2.
    c.concurrence = coherence ? 2.0 * (abs_u - y) : 2.0 * (y - root);
    return c;
}

ConcurrenceResult concurrence_spectral(const Eigen::Matrix4cd& rho) {
    constexpr double tol = 1e-10;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol)
        throw DomainError("two-qubit density matrix is not Hermitian");
    if (std::abs(rho.trace() - cplx(1.0)) > tol)
        throw DomainError("two-qubit density matrix does not have unit trace");

    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    if (es.eigenvalues().minCoeff() < -tol)
        throw DomainError("two-qubit density matrix is not positive semidefinite");

    Eigen::Matrix4cd flip = Eigen::Matrix4cd::Zero();
    flip(0, 3) = -1.0;
    flip(1, 2) = 1.0;
    flip(2, 1) = 1.0;
    flip(3, 0) = -1.0;

    // Contract check on the spin-flipped product itself.
    const Eigen::Matrix4cd product = herm * flip * herm.conjugate() * flip;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> ces(product);
    if (ces.info() != Eigen::Success) throw NumericalError("4x4 eigensolver failed");
    for (int k = 0; k < 4; ++k) {
        const cplx ev = ces.eigenvalues()(k);
        if (std::abs(ev.imag()) > 1e-9)
            throw NumericalError("spin-flipped spectrum has imaginary part " +
                                 std::to_string(ev.imag()));
        if (ev.real() < -tol)
            throw NumericalError("spin-flipped spectrum has negative eigenvalue " +
                                 std::to_string(ev.real()));
    }

    // The square roots of that spectrum are the singular values of
    // sqrt(rho) flip sqrt(rho)^*, which avoids squaring small lambdas.
    const Eigen::Vector4d evals = es.eigenvalues().cwiseMax(0.0);
    const Eigen::Matrix4cd root =
        es.eigenvectors() * evals.cwiseSqrt().cast<cplx>().asDiagonal() *
        es.eigenvectors().adjoint();
    const Eigen::Matrix4cd overlap = root * flip * root.conjugate();
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(overlap);
    const Eigen::Vector4d sv = svd.singularValues();
    return from_lambdas({sv(0), sv(1), sv(2), sv(3)}, ConcurrenceBranch::spectral);
}

SqueezingCondition squeezing_condition(const TwoQubitReduced& r) {
    SqueezingCondition s;
    s.margin = std::abs(r.u) - r.y;
    s.satisfied = s.margin > 0.0;
    s.xi2 = 1.0 - 2.0 * (r.n_qubits - 1) * s.margin;
    return s;
}

double prop3_residual(double xi2, double concurrence, int n_qubits) {
    if (n_qubits < 2) throw DomainError("N >= 2 required");
    return xi2 - 1.0 + (n_qubits - 1) * concurrence;
}

}  // namespace spinsq
