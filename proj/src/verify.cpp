#include "spinsq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>

#include "spinsq/analysis.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/evolution.hpp"
#include "spinsq/hamiltonian.hpp"
#include "spinsq/oracle.hpp"
#include "spinsq/squeezing.hpp"

namespace spinsq::verify {

namespace {

constexpr double kPi = std::numbers::pi;

Check at_most(std::string name, double worst, double limit, std::string note = {}) {
    return {std::move(name), worst, limit, Bound::at_most, std::move(note)};
}

Check at_least(std::string name, double worst, double limit, std::string note = {}) {
    return {std::move(name), worst, limit, Bound::at_least, std::move(note)};
}

// "N in {2..20,50}": consecutive runs collapsed.
std::string sizes_note(const std::vector<int>& sizes) {
    std::ostringstream os;
    os << "N in {";
    for (std::size_t k = 0; k < sizes.size();) {
        std::size_t end = k;
        while (end + 1 < sizes.size() && sizes[end + 1] == sizes[end] + 1) ++end;
        os << (k ? "," : "") << sizes[k];
        if (end >= k + 2) {
            os << ".." << sizes[end];
        } else if (end == k + 1) {
            os << "," << sizes[end];
        }
        k = end + 1;
    }
    os << "}";
    return os.str();
}

double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double max_abs(const Eigen::Matrix4cd& a) { return a.cwiseAbs().maxCoeff(); }

HamiltonianSpec random_spec(std::mt19937_64& rng) {
    HamiltonianSpec s;
    s.mu = 4.0 * uniform(rng) - 2.0;
    s.chi = 4.0 * uniform(rng) - 2.0;
    s.gamma_sym = 4.0 * uniform(rng) - 2.0;
    s.gamma_twist = 4.0 * uniform(rng) - 2.0;
    s.f_coeffs = {4.0 * uniform(rng) - 2.0, 4.0 * uniform(rng) - 2.0, 4.0 * uniform(rng) - 2.0};
    return s;
}

Propagator propagator_for(const HamiltonianSpec& spec, int n_qubits) {
    return hermitian_eigen(build_hamiltonian(spec, n_qubits));
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass(); });
}

void SuiteReport::print(std::ostream& out) const {
    out << "== " << name << '\n';
    for (const auto& c : checks) {
        out << (c.pass() ? "  PASS  " : "  FAIL  ") << c.name << ": "
            << std::setprecision(3) << std::scientific << c.value
            << (c.bound == Bound::at_most ? " <= " : " >= ") << c.limit << std::defaultfloat;
        if (!c.note.empty()) out << "  [" << c.note << "]";
        out << '\n';
    }
    out << (passed() ? "  suite passed\n" : "  suite FAILED\n");
}

double gaussian(std::mt19937_64& rng) {
    // Box-Muller on 53-bit uniforms; (0, 1] keeps the log finite.
    const double u1 = 1.0 - uniform(rng);
    const double u2 = uniform(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

SymmetricState random_state(int n_qubits, std::mt19937_64& rng, ParityClass parity) {
    std::vector<cplx> c(static_cast<std::size_t>(n_qubits) + 1);
    for (int n = 0; n <= n_qubits; ++n) {
        const double re = gaussian(rng);
        const double im = gaussian(rng);
        const bool keep = parity == ParityClass::mixed || (parity == ParityClass::even) == (n % 2 == 0);
        c[n] = keep ? cplx(re, im) : cplx(0.0);
    }
    return make_state(n_qubits, c).state;
}

std::vector<Check> two_qubit_one_axis_checks() {
    const Propagator prop = propagator_for(HamiltonianSpec::one_axis(1.0), 2);
    const auto obs = observe(trajectory(prop, make_all_down(2), time_grid(kPi, kPi / 200.0)));
    double worst_xi2 = 0.0;
    double worst_c = 0.0;
    double worst_res = 0.0;
    for (const auto& o : obs) {
        const double s = std::abs(std::sin(o.t));
        worst_xi2 = std::max(worst_xi2, std::abs(o.xi2_closed - (1.0 - s)));
        worst_c = std::max(worst_c, std::abs(o.concurrence.concurrence - s));
        worst_res = std::max(worst_res,
                             std::abs(prop3_residual(o.xi2_closed, o.concurrence.concurrence, 2)));
    }
    const std::string note = std::to_string(obs.size()) + " points, t in [0, pi]";
    return {at_most("N=2 one-axis |xi2 - (1 - |sin t|)|", worst_xi2, 1e-10, note),
            at_most("N=2 one-axis |C - |sin t||", worst_c, 1e-10, note),
            at_most("N=2 one-axis |xi2 - 1 + C|", worst_res, 1e-10, note)};
}

std::vector<Check> lemma3_checks(const std::vector<int>& sizes, int points) {
    constexpr double mu = 1.0;
    double worst_sx2 = 0.0, worst_sy2 = 0.0, worst_sz2 = 0.0, worst_rel = 0.0;
    for (int N : sizes) {
        const Propagator prop = propagator_for(HamiltonianSpec::one_axis(mu), N);
        const SymmetricState start = make_all_down(N);
        for (int k = 0; k < points; ++k) {
            const double mubar = 2.0 * kPi * k / (points - 1);
            const double t = mubar / (2.0 * mu);
            const CollectiveMoments m = collective_moments(evolve_to(prop, start, t));
            const oracle::OneAxisMoments ref = oracle::one_axis_analytic_moments(N, mu, t);
            worst_sx2 = std::max(worst_sx2, std::abs(m.sx2 - ref.sx2));
            worst_sy2 = std::max(worst_sy2, std::abs(m.sy2 - ref.sy2));
            worst_sz2 = std::max(worst_sz2, std::abs(m.sz2 - ref.sz2));
            // <Sx^2 - Sy^2> = <Sz^2> - N^2/4, both sides numeric.
            worst_rel = std::max(worst_rel, std::abs((m.sx2 - m.sy2) - (m.sz2 - N * N / 4.0)));
        }
    }
    const std::string note = sizes_note(sizes) + ", " + std::to_string(points) + " mubar points";
    return {at_most("one-axis <Sx^2> = N/4", worst_sx2, 1e-9, note),
            at_most("one-axis <Sy^2> closed form", worst_sy2, 1e-9, note),
            at_most("one-axis <Sz^2> closed form", worst_sz2, 1e-9, note),
            at_most("one-axis <Sx^2 - Sy^2> = <Sz^2> - N^2/4", worst_rel, 1e-9, note)};
}

std::vector<Check> one_axis_equivalence_checks(const std::vector<int>& sizes, double t_max,
                                               double dt) {
    const std::vector<double> times = time_grid(t_max, dt);
    double min_margin = std::numeric_limits<double>::infinity();
    double max_xi2 = -std::numeric_limits<double>::infinity();
    double worst_res = 0.0;
    for (int N : sizes) {
        const Propagator prop = propagator_for(HamiltonianSpec::one_axis(1.0), N);
        for (const auto& o : observe(trajectory(prop, make_all_down(N), times))) {
            min_margin = std::min(min_margin, squeezing_condition(o.reduced).margin);
            max_xi2 = std::max(max_xi2, o.xi2_closed);
            worst_res = std::max(
                worst_res, std::abs(prop3_residual(o.xi2_closed, o.concurrence.concurrence, N)));
        }
    }
    const std::string note = sizes_note(sizes) + ", " + std::to_string(times.size()) + " times";
    return {at_least("one-axis |u| - y", min_margin, -1e-12, note),
            at_most("one-axis max xi2", max_xi2, 1.0 + 1e-12, note),
            at_most("one-axis |xi2 - 1 + (N-1)C|", worst_res, 1e-9, note)};
}

std::vector<Check> transverse_field_checks(const std::vector<int>& sizes,
                                           const std::vector<double>& omegas, double t_max,
                                           double dt) {
    const std::vector<double> times = time_grid(t_max, dt);
    double max_xi2 = -std::numeric_limits<double>::infinity();
    double worst_res = 0.0;
    for (double omega : omegas) {
        for (int N : sizes) {
            const Propagator prop = propagator_for(HamiltonianSpec::one_axis_field(1.0, omega), N);
            const auto s = summarize(observe(trajectory(prop, make_all_down(N), times)));
            max_xi2 = std::max(max_xi2, s.max_xi2);
            worst_res = std::max(worst_res, s.max_prop3_residual);
        }
    }
    const std::string note = sizes_note(sizes) + ", " + std::to_string(omegas.size()) + " fields";
    return {at_most("one-axis+field max xi2", max_xi2, 1.0 + 1e-9, note),
            at_most("one-axis+field |xi2 - 1 + (N-1)C| where xi2 <= 1", worst_res, 1e-9, note)};
}

std::vector<Check> two_axis_checks(const std::vector<int>& sizes, double t_max, double dt) {
    const std::vector<double> times = time_grid(t_max, dt);
    double worst_res = 0.0;
    double max_xi2 = -std::numeric_limits<double>::infinity();
    for (int N : sizes) {
        const Propagator prop = propagator_for(HamiltonianSpec::two_axis(1.0), N);
        const auto s = summarize(observe(trajectory(prop, make_all_down(N), times)));
        worst_res = std::max(worst_res, s.max_relation_residual);
        max_xi2 = std::max(max_xi2, s.max_xi2);
    }
    std::ostringstream note;
    note << sizes_note(sizes) << ", max xi2 seen " << max_xi2;
    return {at_most("two-axis |xi2 - 1 + (N-1)C| at every point", worst_res, 1e-9, note.str())};
}

std::vector<Check> lemma2_checks(const std::vector<int>& sizes, int states_per_size,
                                 std::uint64_t seed, const Reconstruction& reconstruct) {
    std::mt19937_64 rng(seed);
    double worst_first = 0.0;
    double worst_last = 0.0;
    double worst_trace = 0.0;
    for (int N : sizes) {
        if (N < 2) continue;
        std::vector<SymmetricState> states;
        for (int k = 0; k < states_per_size; ++k)
            states.push_back(random_state(N, rng, ParityClass::mixed));
        for (const HamiltonianSpec& spec :
             {HamiltonianSpec::one_axis(1.0), HamiltonianSpec::one_axis_field(1.0, 2.0),
              HamiltonianSpec::two_axis(1.0)}) {
            const Propagator prop = propagator_for(spec, N);
            for (double t : {0.3, 1.1, 2.7}) states.push_back(evolve_to(prop, make_all_down(N), t));
        }
        for (const auto& s : states) {
            const Eigen::Matrix4cd rho = reconstruct(collective_moments(s)).matrix();
            const oracle::FullState f = oracle::embed_symmetric(s);
            worst_first = std::max(worst_first, max_abs(rho - oracle::partial_trace_pair(f, 0, 1)));
            worst_last =
                std::max(worst_last, max_abs(rho - oracle::partial_trace_pair(f, N - 2, N - 1)));
            worst_trace = std::max(worst_trace, std::abs(rho.trace() - cplx(1.0)));
        }
    }
    const std::string note = sizes_note(sizes) + ", seed " + std::to_string(seed);
    return {at_most("pair reconstruction vs partial trace (0,1)", worst_first, 1e-10, note),
            at_most("pair reconstruction vs partial trace (N-2,N-1)", worst_last, 1e-10, note),
            at_most("pair reconstruction trace - 1", worst_trace, 1e-10, note)};
}

std::vector<Check> oracle_checks(const std::vector<int>& sizes, int states_per_size,
                                 std::uint64_t seed, const Reconstruction& reconstruct) {
    std::mt19937_64 rng(seed);
    double worst_moments = 0.0;
    double worst_ham = 0.0;
    double worst_reduced = 0.0;
    double worst_conc = 0.0;
    double min_fidelity = 1.0;
    double worst_leak = 0.0;
    const std::vector<double> times = time_grid(3.0, 0.25);

    auto moment_gap = [](const CollectiveMoments& a, const CollectiveMoments& b) {
        double g = 0.0;
        for (double d : {a.mean_sx - b.mean_sx, a.mean_sy - b.mean_sy, a.mean_sz - b.mean_sz,
                         a.sx2 - b.sx2, a.sy2 - b.sy2, a.sz2 - b.sz2, a.anti_sx_sy - b.anti_sx_sy})
            g = std::max(g, std::abs(d));
        for (cplx d : {a.sp_mean - b.sp_mean, a.sp2 - b.sp2, a.anti_sp_sz - b.anti_sp_sz})
            g = std::max(g, std::abs(d));
        return g;
    };

    for (int N : sizes) {
        // Random states: moments, reduced state and concurrence routes.
        for (int k = 0; k < states_per_size; ++k) {
            const ParityClass parity =
                k % 3 == 0 ? ParityClass::mixed : (k % 3 == 1 ? ParityClass::even : ParityClass::odd);
            const SymmetricState s = random_state(N, rng, parity);
            const oracle::FullState f = oracle::embed_symmetric(s);
            const CollectiveMoments m = collective_moments(s);
            worst_moments = std::max(worst_moments, moment_gap(m, oracle::full_moments(f)));
            if (N < 2) continue;
            const Eigen::Matrix4cd truth = oracle::partial_trace_pair(f, 0, 1);
            const TwoQubitReduced r = reconstruct(m);
            worst_reduced = std::max(worst_reduced, max_abs(r.matrix() - truth));
            if (parity != ParityClass::mixed) {
                worst_conc = std::max(worst_conc, std::abs(concurrence_x_form(r).concurrence -
                                                           concurrence_spectral(truth).concurrence));
            }
        }

        // Model evolutions: Hamiltonian projection and trajectory fidelity.
        Eigen::MatrixXcd embed(Eigen::Index{1} << N, N + 1);
        for (int n = 0; n <= N; ++n)
            embed.col(n) = oracle::embed_symmetric(make_dicke_state(N, n)).amplitudes;
        std::vector<HamiltonianSpec> specs{HamiltonianSpec::one_axis(1.0),
                                           HamiltonianSpec::one_axis_field(1.0, 2.0),
                                           HamiltonianSpec::two_axis(1.0), random_spec(rng)};
        for (const auto& spec : specs) {
            const HermitianMatrix h = build_hamiltonian(spec, N);
            const Eigen::MatrixXcd projected =
                embed.adjoint() * oracle::full_hamiltonian(spec, N) * embed;
            worst_ham = std::max(worst_ham, (projected - h.entries()).cwiseAbs().maxCoeff());

            const Trajectory traj = trajectory(hermitian_eigen(h), make_all_down(N), times);
            const auto full = oracle::full_trajectory(spec, N, times);
            for (std::size_t k = 0; k < times.size(); ++k) {
                min_fidelity = std::min(min_fidelity, oracle::fidelity(traj.states[k], full[k]));
                worst_leak = std::max(
                    worst_leak, 1.0 - oracle::project_symmetric(full[k]).squaredNorm());
                worst_moments = std::max(worst_moments, moment_gap(collective_moments(traj.states[k]),
                                                                   oracle::full_moments(full[k])));
                if (N < 2) continue;
                const TwoQubitReduced r = reconstruct(collective_moments(traj.states[k]));
                const Eigen::Matrix4cd truth = oracle::partial_trace_pair(full[k], 0, 1);
                worst_reduced = std::max(worst_reduced, max_abs(r.matrix() - truth));
                worst_conc = std::max(worst_conc, std::abs(concurrence_x_form(r).concurrence -
                                                           concurrence_spectral(truth).concurrence));
            }
        }
    }
    const std::string note = sizes_note(sizes) + ", seed " + std::to_string(seed);
    return {at_most("collective moments vs full-space operators", worst_moments, 1e-10, note),
            at_most("Dicke Hamiltonian vs projected Pauli-sum Hamiltonian", worst_ham, 1e-10, note),
            at_most("pair reconstruction vs partial trace", worst_reduced, 1e-10, note),
            at_most("X-form concurrence vs spectral on oracle trace", worst_conc, 1e-10, note),
            at_least("subspace vs full evolution fidelity", min_fidelity, 1.0 - 1e-10, note),
            at_most("full evolution leakage out of symmetric subspace", worst_leak, 1e-10, note)};
}

std::vector<Check> x_form_checks(int random_tuples, const std::vector<int>& sizes,
                                 int states_per_size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double worst_tuple = 0.0;
    double worst_state = 0.0;
    double worst_lambda = 0.0;
    for (int k = 0; k < random_tuples; ++k) {
        TwoQubitReduced r;
        r.n_qubits = 2;
        r.y = 0.5 * uniform(rng);
        const double rest = 1.0 - 2.0 * r.y;
        r.v_plus = rest * uniform(rng);
        r.v_minus = rest - r.v_plus;
        r.u = std::polar(std::sqrt(r.v_plus * r.v_minus) * uniform(rng), 2.0 * kPi * uniform(rng));
        const ConcurrenceResult closed = concurrence_x_form(r);
        const ConcurrenceResult spectral = concurrence_spectral(r.matrix());
        worst_tuple = std::max(worst_tuple, std::abs(closed.concurrence - spectral.concurrence));
        for (int i = 0; i < 4; ++i)
            worst_lambda = std::max(worst_lambda, std::abs(closed.lambdas[i] - spectral.lambdas[i]));
    }
    for (int N : sizes) {
        for (int k = 0; k < states_per_size; ++k) {
            const SymmetricState s =
                random_state(N, rng, k % 2 == 0 ? ParityClass::even : ParityClass::odd);
            const TwoQubitReduced r = reduced_two_qubit(collective_moments(s));
            worst_state = std::max(worst_state, std::abs(concurrence_x_form(r).concurrence -
                                                         concurrence_spectral(r.matrix()).concurrence));
        }
    }
    return {at_most("X-form vs spectral, random (v+-, y, u)", worst_tuple, 1e-10,
                    std::to_string(random_tuples) + " tuples, seed " + std::to_string(seed)),
            at_most("X-form vs spectral lambdas", worst_lambda, 1e-10),
            at_most("X-form vs spectral, parity-pure states", worst_state, 1e-10, sizes_note(sizes))};
}

std::vector<Check> lemma1_checks(const std::vector<int>& sizes, int ensembles, std::uint64_t seed) {
    double min_corr = std::numeric_limits<double>::infinity();
    double min_xi2 = std::numeric_limits<double>::infinity();
    double worst_route = 0.0;
    int nondegenerate = 0;
    for (int N : sizes) {
        for (int i = 0; i < ensembles; ++i) {
            const int members = 1 + i % 6;
            const std::uint64_t sample_seed =
                seed * 1000003ULL + static_cast<std::uint64_t>(N) * 10007ULL + static_cast<std::uint64_t>(i);
            const auto sample = oracle::sample_separable(N, members, sample_seed);
            const CollectiveMoments& m = sample.moments;

            Eigen::Vector3d direction;
            if (m.mean_spin().norm() >= kMeanSpinThreshold) {
                const SqueezingResult sq = squeezing_general(m);
                min_xi2 = std::min(min_xi2, sq.xi2);
                direction = sq.n_perp;
                ++nondegenerate;
            } else {
                // No mean-spin axis: every direction is perpendicular; take the least correlated.
                Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(m.second_moment_matrix());
                direction = es.eigenvectors().col(0);
            }
            const double corr = pair_correlation(m, direction);
            min_corr = std::min(min_corr, corr);

            // Same correlation straight from the ensemble: sum_k p_k (r_k . n)^2.
            double direct = 0.0;
            for (std::size_t k = 0; k < sample.ensemble.weights.size(); ++k) {
                const double proj = sample.ensemble.bloch_vectors[k].dot(direction);
                direct += sample.ensemble.weights[k] * proj * proj;
            }
            worst_route = std::max(worst_route, std::abs(corr - direct));
        }
    }
    std::ostringstream note;
    note << sizes_note(sizes) << ", " << ensembles << " ensembles each, rng " << oracle::kSamplerRng
         << ", seed " << seed;
    return {at_least("separable perpendicular pair correlation", min_corr, -1e-12, note.str()),
            at_least("separable general xi2", min_xi2, 1.0 - 1e-10,
                     std::to_string(nondegenerate) + " nondegenerate ensembles"),
            at_most("correlation from moments vs from Bloch vectors", worst_route, 1e-12)};
}

std::vector<Check> dicke_checks(int max_qubits) {
    double worst_xi2 = 0.0;
    double worst_sp2 = 0.0;
    double worst_bound = 0.0;
    for (int N = 1; N <= max_qubits; ++N) {
        for (int n = 0; n <= N; ++n) {
            const CollectiveMoments m = collective_moments(make_dicke_state(N, n));
            const double expected = 1.0 + 2.0 * n * (N - n) / static_cast<double>(N);
            worst_xi2 = std::max(worst_xi2, std::abs(squeezing_even_odd(m).xi2 - expected));
            worst_sp2 = std::max(worst_sp2, std::abs(m.sp2));
            worst_bound = std::max(worst_bound, std::abs(squeezing_lower_bound(m) - 1.0));
        }
    }
    const SymmetricState half = make_dicke_state(4, 2);
    const double c_moments = concurrence_x_form(reduced_two_qubit(collective_moments(half))).concurrence;
    const double c_oracle =
        concurrence_spectral(oracle::partial_trace_pair(oracle::embed_symmetric(half), 0, 1)).concurrence;
    const std::string note = "0 <= n <= N <= " + std::to_string(max_qubits);
    return {at_most("Dicke xi2 - (1 + 2n(N-n)/N)", worst_xi2, 1e-12, note),
            at_most("Dicke |<S+^2>|", worst_sp2, 0.0, note),
            at_most("Dicke lower bound - 1", worst_bound, 0.0, note),
            at_most("Dicke N=4 n=2 |C - 1/3| (moments)", std::abs(c_moments - 1.0 / 3.0), 1e-12),
            at_most("Dicke N=4 n=2 |C - 1/3| (oracle trace)", std::abs(c_oracle - 1.0 / 3.0), 1e-10)};
}

std::vector<Check> structural_checks(const std::vector<int>& sizes, double t_max, double dt,
                                     std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<double> times = time_grid(t_max, dt);
    double worst_transverse = 0.0;
    double worst_norm = 0.0;
    double worst_leak = 0.0;
    double worst_energy = 0.0;
    double worst_rotation = 0.0;
    double min_bound_gap = std::numeric_limits<double>::infinity();
    double worst_commutator = 0.0;
    double worst_x = 0.0;

    for (int N : sizes) {
        std::vector<HamiltonianSpec> specs{HamiltonianSpec::one_axis(1.0),
                                           HamiltonianSpec::one_axis_field(1.0, 2.0),
                                           HamiltonianSpec::two_axis(1.0), random_spec(rng)};
        for (const auto& spec : specs) {
            worst_commutator = std::max(worst_commutator, parity_check(spec, N));
            const HermitianMatrix h = build_hamiltonian(spec, N);
            const Trajectory traj = trajectory(hermitian_eigen(h), make_all_down(N), times);
            const double e0 = (traj.states.front().amplitudes().adjoint() * h.entries() *
                               traj.states.front().amplitudes())(0).real();
            for (std::size_t k = 0; k < traj.size(); ++k) {
                const SymmetricState& s = traj.states[k];
                const auto& c = s.amplitudes();
                worst_norm = std::max(worst_norm, std::abs(c.norm() - 1.0));
                double odd = 0.0;
                for (int n = 1; n <= N; n += 2) odd += std::norm(c(n));
                worst_leak = std::max(worst_leak, odd);
                const double e = (c.adjoint() * h.entries() * c)(0).real();
                worst_energy = std::max(worst_energy, std::abs(e - e0));

                const CollectiveMoments m = collective_moments(s);
                worst_transverse =
                    std::max({worst_transverse, std::abs(m.mean_sx), std::abs(m.mean_sy)});
                const double xi2 = squeezing_even_odd(m).xi2;
                min_bound_gap = std::min(min_bound_gap, xi2 - squeezing_lower_bound(m));
                if (N >= 2) {
                    const TwoQubitReduced r = reduced_two_qubit(m);
                    worst_x = std::max({worst_x, std::abs(r.x_plus), std::abs(r.x_minus)});
                }
                if (k % 25 == 0) {
                    const double theta = 2.0 * kPi * uniform(rng);
                    Eigen::VectorXcd rotated = c;
                    for (int n = 0; n <= N; ++n) rotated(n) *= std::polar(1.0, -theta * n);
                    const double xi2_rot =
                        squeezing_even_odd(collective_moments(
                                               SymmetricState::from_normalized(N, rotated)))
                            .xi2;
                    worst_rotation = std::max(worst_rotation, std::abs(xi2_rot - xi2));
                }
            }
        }
    }
    std::ostringstream note;
    note << sizes_note(sizes) << ", t in [0, " << t_max << "], dt " << dt << ", 4 models";
    return {at_most("parity commutator |[P, H]|", worst_commutator, 1e-13, note.str()),
            at_most("transverse mean spin |<Sx>|, |<Sy>|", worst_transverse, 1e-10, note.str()),
            at_most("odd-sector leakage", worst_leak, 1e-12),
            at_most("even-state |x+-|", worst_x, 1e-12),
            at_most("norm drift", worst_norm, 1e-12),
            at_most("energy drift", worst_energy, 1e-10),
            at_most("xi2 change under z rotation", worst_rotation, 1e-12),
            at_least("xi2 - lower bound", min_bound_gap, -1e-12)};
}

std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed) {
    auto range = [](int lo, int hi) {
        std::vector<int> v;
        for (int n = lo; n <= hi; ++n) v.push_back(n);
        return v;
    };
    const Reconstruction reconstruct = reduced_two_qubit;
    std::vector<int> field_sizes = range(2, 20);
    field_sizes.push_back(50);
    field_sizes.push_back(100);

    std::vector<SuiteReport> out;
    auto want = [&](const char* suite) { return name == suite || name == "all"; };
    bool known = false;
    if (want("lemma1")) {
        known = true;
        out.push_back({"lemma1", lemma1_checks(range(2, 6), 1000, seed)});
    }
    if (want("lemma2")) {
        known = true;
        out.push_back({"lemma2", lemma2_checks(range(2, 8), 100, seed, reconstruct)});
    }
    if (want("lemma3")) {
        known = true;
        out.push_back({"lemma3", lemma3_checks({2, 3, 4, 6, 10, 20}, 200)});
    }
    if (want("prop3")) {
        known = true;
        auto checks = two_qubit_one_axis_checks();
        for (auto& c : transverse_field_checks(field_sizes, {0.1, 0.5, 1.0, 2.0, 5.0}, 10.0, 0.01))
            checks.push_back(std::move(c));
        for (auto& c : two_axis_checks({2, 4, 6, 8, 10, 20}, 3.0, 0.01)) checks.push_back(std::move(c));
        out.push_back({"prop3", std::move(checks)});
    }
    if (want("prop4")) {
        known = true;
        out.push_back({"prop4", one_axis_equivalence_checks(range(2, 100), 10.0, 0.01)});
    }
    if (want("parity")) {
        known = true;
        out.push_back({"parity", structural_checks({2, 3, 4, 7, 10, 25, 50, 100}, 10.0, 0.01, seed)});
    }
    if (want("oracle")) {
        known = true;
        out.push_back({"oracle", oracle_checks(range(2, 8), 100, seed, reconstruct)});
    }
    if (want("x-form")) {
        known = true;
        out.push_back({"x-form", x_form_checks(1000, range(2, 8), 100, seed)});
    }
    if (name == "all") out.push_back({"dicke", dicke_checks(100)});
    if (!known) throw DomainError("unknown verification suite '" + name + "'");
    return out;
}

}  // namespace spinsq::verify
