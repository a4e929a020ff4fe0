#include "spinsq/oracle.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/Sparse>

#include "spinsq/errors.hpp"

namespace spinsq::oracle {

namespace {

using Sparse = Eigen::SparseMatrix<cplx>;

std::uint64_t full_dim(int n_qubits) { return std::uint64_t{1} << n_qubits; }

int excitations(std::uint64_t index, int n_qubits) {
    return n_qubits - std::popcount(index);
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
    return b;
}

std::uint64_t qubit_bit(int n_qubits, int qubit) {
    return std::uint64_t{1} << (n_qubits - 1 - qubit);
}

// S_a = sum_i sigma_{ia}/2 as sparse 2^N matrices.
struct PauliSums {
    Sparse sx, sy, sz;
};

PauliSums pauli_sums(int n_qubits) {
    const auto dim = static_cast<Eigen::Index>(full_dim(n_qubits));
    std::vector<Eigen::Triplet<cplx>> tx, ty, tz;
    tx.reserve(static_cast<std::size_t>(dim) * n_qubits);
    ty.reserve(static_cast<std::size_t>(dim) * n_qubits);
    tz.reserve(static_cast<std::size_t>(dim));
    for (Eigen::Index col = 0; col < dim; ++col) {
        double z = 0.0;
        for (int q = 0; q < n_qubits; ++q) {
            const std::uint64_t mask = qubit_bit(n_qubits, q);
            const bool ground = (static_cast<std::uint64_t>(col) & mask) != 0;
            const auto row = static_cast<Eigen::Index>(static_cast<std::uint64_t>(col) ^ mask);
            tx.emplace_back(row, col, 0.5);
            // sigma_y|0> = i|1>, sigma_y|1> = -i|0>
            ty.emplace_back(row, col, ground ? cplx(0.0, -0.5) : cplx(0.0, 0.5));
            z += ground ? -0.5 : 0.5;
        }
        tz.emplace_back(col, col, z);
    }
    PauliSums s{Sparse(dim, dim), Sparse(dim, dim), Sparse(dim, dim)};
    s.sx.setFromTriplets(tx.begin(), tx.end());
    s.sy.setFromTriplets(ty.begin(), ty.end());
    s.sz.setFromTriplets(tz.begin(), tz.end());
    return s;
}

void check_pair(int n_qubits, int i, int j) {
    if (!(0 <= i && i < j && j < n_qubits))
        throw DomainError("qubit pair (" + std::to_string(i) + ", " + std::to_string(j) +
                          ") invalid for N = " + std::to_string(n_qubits));
}

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

FullState embed_symmetric(const SymmetricState& s) {
    const int N = s.n_qubits();
    if (N > kMaxEmbedQubits)
        throw CapacityError("embedding limited to N <= " + std::to_string(kMaxEmbedQubits));
    std::vector<double> inv_sqrt_binom(static_cast<std::size_t>(N) + 1);
    for (int n = 0; n <= N; ++n) inv_sqrt_binom[n] = 1.0 / std::sqrt(binomial(N, n));

    FullState f{N, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(full_dim(N)))};
    for (std::uint64_t b = 0; b < full_dim(N); ++b) {
        const int n = excitations(b, N);
        f.amplitudes(static_cast<Eigen::Index>(b)) = s[n] * inv_sqrt_binom[n];
    }
    return f;
}

Eigen::VectorXcd project_symmetric(const FullState& f) {
    const int N = f.n_qubits;
    Eigen::VectorXcd c = Eigen::VectorXcd::Zero(N + 1);
    for (std::uint64_t b = 0; b < full_dim(N); ++b)
        c(excitations(b, N)) += f.amplitudes(static_cast<Eigen::Index>(b));
    for (int n = 0; n <= N; ++n) c(n) /= std::sqrt(binomial(N, n));
    return c;
}

double fidelity(const SymmetricState& s, const FullState& f) {
    if (s.n_qubits() != f.n_qubits) throw DomainError("qubit count mismatch");
    return std::norm(embed_symmetric(s).amplitudes.dot(f.amplitudes));
}

Eigen::MatrixXcd full_hamiltonian(const HamiltonianSpec& spec, int n_qubits) {
    if (n_qubits < 1) throw DomainError("N >= 1 required");
    if (n_qubits > kMaxEvolveQubits)
        throw CapacityError("full Hamiltonian limited to N <= " + std::to_string(kMaxEvolveQubits));
    spec.validate();
    const PauliSums s = pauli_sums(n_qubits);
    const cplx i_unit(0.0, 1.0);
    const Sparse sp = s.sx + i_unit * s.sy;
    const Sparse sm = s.sx - i_unit * s.sy;

    Sparse h = spec.mu * Sparse(s.sx * s.sx) + spec.chi * Sparse(s.sy * s.sy) +
               spec.gamma_sym * Sparse(s.sx * s.sy + s.sy * s.sx) +
               (spec.gamma_twist / (2.0 * i_unit)) * Sparse(sp * sp - sm * sm);
    Eigen::MatrixXcd dense(h);
    for (Eigen::Index k = 0; k < dense.rows(); ++k) dense(k, k) += spec.f(s.sz.coeff(k, k).real());
    return dense;
}

std::vector<FullState> full_trajectory(const HamiltonianSpec& spec, int n_qubits,
                                       const std::vector<double>& times) {
    const Eigen::MatrixXcd h = full_hamiltonian(spec, n_qubits);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    if (es.info() != Eigen::Success) throw NumericalError("full-space eigensolver failed");

    const auto dim = static_cast<Eigen::Index>(full_dim(n_qubits));
    // <k|all-down> picks the last row of V^dagger.
    const Eigen::VectorXcd w0 = es.eigenvectors().row(dim - 1).adjoint();
    std::vector<FullState> out;
    out.reserve(times.size());
    for (double t : times) {
        Eigen::VectorXcd w = w0;
        for (Eigen::Index k = 0; k < dim; ++k) w(k) *= std::polar(1.0, -es.eigenvalues()(k) * t);
        out.push_back({n_qubits, es.eigenvectors() * w});
    }
    return out;
}

FullState full_evolve(const HamiltonianSpec& spec, int n_qubits, double t) {
    return full_trajectory(spec, n_qubits, {t}).front();
}

Eigen::Matrix4cd partial_trace_pair(const FullState& f, int i, int j) {
    const int N = f.n_qubits;
    check_pair(N, i, j);
    const std::uint64_t mi = qubit_bit(N, i);
    const std::uint64_t mj = qubit_bit(N, j);
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
    for (std::uint64_t rest = 0; rest < full_dim(N); ++rest) {
        if (rest & (mi | mj)) continue;
        cplx amp[4];
        for (int a = 0; a < 4; ++a) {
            const std::uint64_t idx = rest | ((a & 2) ? mi : 0) | ((a & 1) ? mj : 0);
            amp[a] = f.amplitudes(static_cast<Eigen::Index>(idx));
        }
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) rho(a, b) += amp[a] * std::conj(amp[b]);
    }
    return rho;
}

CollectiveMoments full_moments(const FullState& f) {
    const PauliSums s = pauli_sums(f.n_qubits);
    const Eigen::VectorXcd& psi = f.amplitudes;
    const Eigen::VectorXcd x = s.sx * psi;
    const Eigen::VectorXcd y = s.sy * psi;
    const Eigen::VectorXcd z = s.sz * psi;
    const cplx i_unit(0.0, 1.0);
    const Eigen::VectorXcd raised = x + i_unit * y;   // S+ psi
    const Eigen::VectorXcd lowered = x - i_unit * y;  // S- psi

    CollectiveMoments m;
    m.n_qubits = f.n_qubits;
    m.mean_sx = psi.dot(x).real();
    m.mean_sy = psi.dot(y).real();
    m.mean_sz = psi.dot(z).real();
    m.sx2 = x.squaredNorm();
    m.sy2 = y.squaredNorm();
    m.sz2 = z.squaredNorm();
    m.anti_sx_sy = 2.0 * x.dot(y).real();
    m.sp_mean = psi.dot(raised);
    m.sp2 = lowered.dot(raised);                       // <S- psi | S+ psi>
    m.anti_sp_sz = lowered.dot(z) + z.dot(raised);     // <psi|S+ Sz|psi> + <Sz psi|S+ psi>
    return m;
}

void SeparableEnsemble::validate() const {
    if (n_qubits < 2) throw DomainError("separable ensemble needs N >= 2");
    if (weights.empty() || weights.size() != bloch_vectors.size())
        throw DomainError("ensemble weights and Bloch vectors differ in length");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw DomainError("negative ensemble weight");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw DomainError("ensemble weights not normalized");
    for (const auto& r : bloch_vectors)
        if (r.norm() > 1.0 + 1e-12) throw DomainError("Bloch vector outside the unit ball");
}

CollectiveMoments product_state_moments(int n_qubits, const Eigen::Vector3d& r) {
    const double N = n_qubits;
    const double pairs = N * (N - 1.0);
    Eigen::Matrix3d sym = (pairs / 4.0) * (r * r.transpose());
    sym.diagonal().array() += N / 4.0;

    CollectiveMoments m;
    m.n_qubits = n_qubits;
    m.mean_sx = 0.5 * N * r.x();
    m.mean_sy = 0.5 * N * r.y();
    m.mean_sz = 0.5 * N * r.z();
    m.sx2 = sym(0, 0);
    m.sy2 = sym(1, 1);
    m.sz2 = sym(2, 2);
    m.anti_sx_sy = 2.0 * sym(0, 1);
    m.sp_mean = {m.mean_sx, m.mean_sy};
    m.sp2 = {sym(0, 0) - sym(1, 1), 2.0 * sym(0, 1)};
    m.anti_sp_sz = {2.0 * sym(0, 2), 2.0 * sym(1, 2)};
    return m;
}

CollectiveMoments ensemble_moments(const SeparableEnsemble& e) {
    e.validate();
    std::vector<std::pair<double, CollectiveMoments>> parts;
    parts.reserve(e.weights.size());
    for (std::size_t k = 0; k < e.weights.size(); ++k)
        parts.emplace_back(e.weights[k], product_state_moments(e.n_qubits, e.bloch_vectors[k]));
    return mix_moments(parts);
}

SeparableSample sample_separable(int n_qubits, int members, std::uint64_t seed) {
    if (n_qubits < 2) throw DomainError("separable sampler needs N >= 2");
    if (members < 1) throw DomainError("separable sampler needs K >= 1");
    std::mt19937_64 rng(seed);

    SeparableEnsemble e;
    e.n_qubits = n_qubits;
    double total = 0.0;
    for (int k = 0; k < members; ++k) {
        const double cos_polar = 2.0 * uniform01(rng) - 1.0;
        const double azimuth = 2.0 * std::numbers::pi * uniform01(rng);
        const double radius = std::cbrt(uniform01(rng));
        const double sin_polar = std::sqrt(std::max(0.0, 1.0 - cos_polar * cos_polar));
        e.bloch_vectors.emplace_back(radius * sin_polar * std::cos(azimuth),
                                     radius * sin_polar * std::sin(azimuth), radius * cos_polar);
        // Exponential draws normalise to a flat Dirichlet sample.
        const double w = -std::log1p(-uniform01(rng));
        e.weights.push_back(w);
        total += w;
    }
    if (!(total > 0.0)) {
        e.weights.assign(e.weights.size(), 1.0 / members);
    } else {
        for (double& w : e.weights) w /= total;
    }
    // Summation order can leave the total a few ulps off one.
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < e.weights.size(); ++k) sum += e.weights[k];
    e.weights.back() = std::max(0.0, 1.0 - sum);

    SeparableSample out{e, ensemble_moments(e)};
    return out;
}

OneAxisMoments one_axis_analytic_moments(int n_qubits, double mu, double t) {
    if (n_qubits < 2) throw DomainError("one-axis analytic moments need N >= 2");
    const double N = n_qubits;
    const double mubar = 2.0 * mu * t;
    const double decay = std::pow(std::cos(mubar), n_qubits - 2);
    OneAxisMoments m;
    m.sx2 = N / 4.0;
    m.sy2 = (N * N + N - N * (N - 1.0) * decay) / 8.0;
    m.sz2 = (N * N + N + N * (N - 1.0) * decay) / 8.0;
    m.re_sp2 = m.sz2 - N * N / 4.0;
    return m;
}

}  // namespace spinsq::oracle
