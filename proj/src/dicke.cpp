#include "spinsq/dicke.hpp"

#include <cmath>
#include <string>

#include "spinsq/errors.hpp"

namespace spinsq {

void SymmetricState::validate(double tol) const {
    if (n_qubits_ < 1) throw DomainError("symmetric state needs N >= 1");
    if (amplitudes_.size() != n_qubits_ + 1)
        throw DomainError("amplitude length must be N+1");
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > tol)
        throw DomainError("state is not normalized: |c|^2 = " + std::to_string(norm2));
}

SymmetricState SymmetricState::from_normalized(int n_qubits, Eigen::VectorXcd amplitudes) {
    if (n_qubits < 1) throw DomainError("symmetric state needs N >= 1");
    if (amplitudes.size() != n_qubits + 1) throw DomainError("amplitude length must be N+1");
    return SymmetricState(n_qubits, std::move(amplitudes));
}

SymmetricState make_dicke_state(int n_qubits, int excitations) {
    if (n_qubits < 1) throw DomainError("Dicke state needs N >= 1");
    if (excitations < 0 || excitations > n_qubits)
        throw DomainError("excitation number " + std::to_string(excitations) +
                          " outside [0, " + std::to_string(n_qubits) + "]");
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n_qubits + 1);
    c(excitations) = 1.0;
    return SymmetricState::from_normalized(n_qubits, std::move(c));
}

SymmetricState make_all_down(int n_qubits) { return make_dicke_state(n_qubits, 0); }

NormalizedState make_state(int n_qubits, std::span<const cplx> amplitudes) {
    if (n_qubits < 1) throw DomainError("symmetric state needs N >= 1");
    if (static_cast<int>(amplitudes.size()) != n_qubits + 1)
        throw DomainError("expected " + std::to_string(n_qubits + 1) + " amplitudes, got " +
                          std::to_string(amplitudes.size()));
    Eigen::VectorXcd c(n_qubits + 1);
    for (int n = 0; n <= n_qubits; ++n) c(n) = amplitudes[n];
    const double norm = c.norm();
    if (!(norm > 1e-12)) throw DomainError("amplitude vector has (near) zero norm");
    const double scale = 1.0 / norm;
    c *= scale;
    return {SymmetricState::from_normalized(n_qubits, std::move(c)), scale};
}

const char* to_string(ParityClass p) {
    switch (p) {
        case ParityClass::even: return "even";
        case ParityClass::odd: return "odd";
        case ParityClass::mixed: return "mixed";
    }
    return "?";
}

ParityClass parity_class(const SymmetricState& state) {
    bool has_even = false;
    bool has_odd = false;
    for (int n = 0; n < state.dim(); ++n) {
        if (std::norm(state[n]) > kParityTolerance) (n % 2 == 0 ? has_even : has_odd) = true;
    }
    if (has_odd && !has_even) return ParityClass::odd;
    if (has_even && !has_odd) return ParityClass::even;
    return ParityClass::mixed;
}

Eigen::Matrix3d CollectiveMoments::second_moment_matrix() const {
    Eigen::Matrix3d m;
    const double xy = 0.5 * anti_sx_sy;
    const double xz = 0.5 * anti_sp_sz.real();
    const double yz = 0.5 * anti_sp_sz.imag();
    m << sx2, xy, xz,
         xy, sy2, yz,
         xz, yz, sz2;
    return m;
}

CollectiveMoments collective_moments(const SymmetricState& state) {
    const int N = state.n_qubits();
    const double J = state.spin();
    const auto& c = state.amplitudes();

    CollectiveMoments m;
    m.n_qubits = N;
    for (int n = 0; n <= N; ++n) {
        const double p = std::norm(c(n));
        const double mz = n - J;
        m.mean_sz += p * mz;
        m.sz2 += p * mz * mz;
        if (n + 1 <= N) {
            const cplx amp = std::conj(c(n + 1)) * c(n) * raising_element(N, n);
            m.sp_mean += amp;
            // [S+,Sz]_+ |n> = a_n ((n - J) + (n + 1 - J)) |n+1>
            m.anti_sp_sz += amp * (2.0 * mz + 1.0);
        }
        if (n + 2 <= N) {
            m.sp2 += std::conj(c(n + 2)) * c(n) * raising_element(N, n) *
                     raising_element(N, n + 1);
        }
    }
    m.mean_sx = m.sp_mean.real();
    m.mean_sy = m.sp_mean.imag();
    // Sx^2 + Sy^2 = J(J+1) - Sz^2, Sx^2 - Sy^2 = Re S+^2, [Sx,Sy]_+ = Im S+^2.
    const double transverse = J * (J + 1.0) - m.sz2;
    m.sx2 = 0.5 * (transverse + m.sp2.real());
    m.sy2 = 0.5 * (transverse - m.sp2.real());
    m.anti_sx_sy = m.sp2.imag();
    return m;
}

CollectiveMoments mix_moments(std::span<const std::pair<double, CollectiveMoments>> ensemble) {
    if (ensemble.empty()) throw DomainError("empty ensemble");
    const int N = ensemble.front().second.n_qubits;
    double total = 0.0;
    for (const auto& [w, mom] : ensemble) {
        if (!(w >= 0.0)) throw DomainError("ensemble weights must be non-negative");
        if (mom.n_qubits != N) throw DomainError("ensemble members differ in qubit count");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12)
        throw DomainError("ensemble weights sum to " + std::to_string(total) + ", not 1");

    CollectiveMoments out;
    out.n_qubits = N;
    for (const auto& [w, mom] : ensemble) {
        out.mean_sx += w * mom.mean_sx;
        out.mean_sy += w * mom.mean_sy;
        out.mean_sz += w * mom.mean_sz;
        out.sx2 += w * mom.sx2;
        out.sy2 += w * mom.sy2;
        out.sz2 += w * mom.sz2;
        out.anti_sx_sy += w * mom.anti_sx_sy;
        out.sp_mean += w * mom.sp_mean;
        out.sp2 += w * mom.sp2;
        out.anti_sp_sz += w * mom.anti_sp_sz;
    }
    return out;
}

}  // namespace spinsq
