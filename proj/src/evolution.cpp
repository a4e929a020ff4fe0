#include "spinsq/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinsq/errors.hpp"

namespace spinsq {

double Propagator::reconstruction_residual(const HermitianMatrix& h) const {
    const Eigen::MatrixXcd rebuilt =
        eigenvectors * eigenvalues.cast<cplx>().asDiagonal() * eigenvectors.adjoint();
    return (rebuilt - h.entries()).cwiseAbs().maxCoeff();
}

double Propagator::orthonormality_residual() const {
    const Eigen::MatrixXcd gram = eigenvectors.adjoint() * eigenvectors;
    return (gram - Eigen::MatrixXcd::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

namespace {

double off_diagonal_norm(const Eigen::MatrixXcd& a) {
    double acc = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) acc += std::norm(a(i, j));
    return std::sqrt(acc);
}

// Zeroes a(p,q) with the unitary U = diag(1, e^{-i phi}) R(c, s) acting on
// columns p, q; accumulates U into v.
void rotate(Eigen::MatrixXcd& a, Eigen::MatrixXcd& v, Eigen::Index p, Eigen::Index q) {
    const cplx apq = a(p, q);
    const double g = std::abs(apq);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double theta = (aqq - app) / (2.0 * g);
    double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;
    const cplx phase = std::conj(apq) / g;  // e^{-i phi}

    const cplx u_pp = c;
    const cplx u_pq = s;
    const cplx u_qp = -s * phase;
    const cplx u_qq = c * phase;

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = akp * u_pp + akq * u_qp;
        a(k, q) = akp * u_pq + akq * u_qq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
        a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * g;
    a(q, q) = aqq + t * g;

    for (Eigen::Index k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = vkp * u_pp + vkq * u_qp;
        v(k, q) = vkp * u_pq + vkq * u_qq;
    }
}

}  // namespace

Propagator hermitian_eigen(const HermitianMatrix& h, const JacobiOptions& opts) {
    const Eigen::Index n = h.dim();
    Eigen::MatrixXcd a = h.entries();
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Identity(n, n);
    const double scale = a.norm();

    bool converged = n <= 1 || off_diagonal_norm(a) <= opts.tolerance * scale;
    for (int sweep = 0; sweep < opts.max_sweeps && !converged; ++sweep) {
        int rotations = 0;
        for (Eigen::Index p = 0; p + 1 < n; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double g = std::abs(a(p, q));
                if (g == 0.0) continue;
                const double app = std::abs(a(p, p).real());
                const double aqq = std::abs(a(q, q).real());
                // Negligible against both diagonal entries in floating point.
                if (sweep > 3 && app + 100.0 * g == app && aqq + 100.0 * g == aqq) {
                    a(p, q) = 0.0;
                    a(q, p) = 0.0;
                    continue;
                }
                rotate(a, v, p, q);
                ++rotations;
            }
        }
        converged = rotations == 0 || off_diagonal_norm(a) <= opts.tolerance * scale;
    }
    if (!converged) {
        throw NumericalError("Jacobi eigensolver did not converge in " +
                             std::to_string(opts.max_sweeps) + " sweeps; off-diagonal norm " +
                             std::to_string(off_diagonal_norm(a)));
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() < a(j, j).real();
    });

    Propagator prop;
    prop.eigenvalues.resize(n);
    prop.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        prop.eigenvalues(k) = a(order[k], order[k]).real();
        prop.eigenvectors.col(k) = v.col(order[k]);
    }
    return prop;
}

SymmetricState evolve_to(const Propagator& prop, const SymmetricState& initial, double t) {
    if (prop.dim() != initial.dim())
        throw DomainError("propagator dimension " + std::to_string(prop.dim()) +
                          " does not match state dimension " + std::to_string(initial.dim()));
    if (t == 0.0) return initial;
    Eigen::VectorXcd w = prop.eigenvectors.adjoint() * initial.amplitudes();
    for (Eigen::Index k = 0; k < w.size(); ++k)
        w(k) *= std::polar(1.0, -prop.eigenvalues(k) * t);
    return SymmetricState::from_normalized(initial.n_qubits(), prop.eigenvectors * w);
}

std::vector<double> time_grid(double t_max, double dt) {
    if (!(t_max > 0.0) || !(dt > 0.0) || dt > t_max || !std::isfinite(t_max))
        throw DomainError("time grid needs t_max > 0 and 0 < dt <= t_max");
    // Tolerate t_max/dt landing a rounding error above an integer.
    const auto steps = static_cast<long>(std::ceil(t_max / dt - 1e-9));
    std::vector<double> times(static_cast<std::size_t>(steps) + 1);
    for (long k = 0; k <= steps; ++k) times[static_cast<std::size_t>(k)] = static_cast<double>(k) * dt;
    return times;
}

Trajectory trajectory(const Propagator& prop, const SymmetricState& initial,
                      const std::vector<double>& times) {
    if (prop.dim() != initial.dim()) throw DomainError("propagator/state dimension mismatch");
    for (std::size_t k = 1; k < times.size(); ++k)
        if (!(times[k] > times[k - 1])) throw DomainError("trajectory times must increase");

    const Eigen::VectorXcd w0 = prop.eigenvectors.adjoint() * initial.amplitudes();
    Trajectory traj;
    traj.times = times;
    traj.states.reserve(times.size());
    Eigen::VectorXcd w(w0.size());
    for (double t : times) {
        if (t == 0.0) {
            traj.states.push_back(initial);
            continue;
        }
        for (Eigen::Index k = 0; k < w.size(); ++k)
            w(k) = w0(k) * std::polar(1.0, -prop.eigenvalues(k) * t);
        traj.states.push_back(
            SymmetricState::from_normalized(initial.n_qubits(), prop.eigenvectors * w));
    }
    return traj;
}

Trajectory trajectory(const HamiltonianSpec& spec, int n_qubits, double t_max, double dt) {
    const std::vector<double> times = time_grid(t_max, dt);
    const Propagator prop = hermitian_eigen(build_hamiltonian(spec, n_qubits));
    return trajectory(prop, make_all_down(n_qubits), times);
}

}  // namespace spinsq
