#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsq/errors.hpp"
#include "spinsq/evolution.hpp"

using namespace spinsq;

namespace {

// Classical RK4 on i dc/dt = H c, independent of the eigen route.
Eigen::VectorXcd rk4(const Eigen::MatrixXcd& h, Eigen::VectorXcd c, double t, int steps) {
    const double dt = t / steps;
    const cplx mi(0, -1);
    for (int k = 0; k < steps; ++k) {
        const Eigen::VectorXcd k1 = mi * (h * c);
        const Eigen::VectorXcd k2 = mi * (h * (c + 0.5 * dt * k1));
        const Eigen::VectorXcd k3 = mi * (h * (c + 0.5 * dt * k2));
        const Eigen::VectorXcd k4 = mi * (h * (c + dt * k3));
        c += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return c;
}

HermitianMatrix random_hermitian(int dim, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = cplx(g(rng), g(rng));
    return HermitianMatrix{(a + a.adjoint()) / 2.0};
}

}  // namespace

TEST_CASE("one-axis N=2 closed-form amplitudes") {
    const auto prop = hermitian_eigen(build_hamiltonian(HamiltonianSpec::one_axis(1.0), 2));
    CHECK(prop.eigenvalues(0) == doctest::Approx(0.0));
    CHECK(prop.eigenvalues(1) == doctest::Approx(1.0));
    CHECK(prop.eigenvalues(2) == doctest::Approx(1.0));
    for (double t : {0.0, 0.3, 1.0, 2.5, 7.0}) {
        const auto s = evolve_to(prop, make_all_down(2), t);
        const cplx e = std::exp(cplx(0, -t));
        CHECK(std::abs(s[0] - (e + 1.0) / 2.0) < 1e-13);
        CHECK(std::abs(s[1]) < 1e-13);
        CHECK(std::abs(s[2] - (e - 1.0) / 2.0) < 1e-13);
    }
}

TEST_CASE("Jacobi on a random 50x50 Hermitian matrix") {
    const auto h = random_hermitian(50, 3);
    const auto prop = hermitian_eigen(h);
    CHECK(prop.reconstruction_residual(h) <= 1e-10);
    CHECK(prop.orthonormality_residual() <= 1e-12);
    for (int k = 1; k < prop.dim(); ++k) CHECK(prop.eigenvalues(k - 1) <= prop.eigenvalues(k));

    const Eigen::VectorXd ref = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(h.entries()).eigenvalues();
    CHECK((prop.eigenvalues - ref).cwiseAbs().maxCoeff() < 1e-10);

    const auto again = hermitian_eigen(h);
    CHECK((again.eigenvalues - prop.eigenvalues).norm() == 0.0);
    CHECK((again.eigenvectors - prop.eigenvectors).norm() == 0.0);
}

TEST_CASE("Jacobi reports non-convergence") {
    JacobiOptions opts;
    opts.max_sweeps = 1;
    CHECK_THROWS_AS(hermitian_eigen(random_hermitian(20, 5), opts), NumericalError);
}

TEST_CASE("evolution agrees with RK4") {
    HamiltonianSpec spec;
    spec.mu = 0.7;
    spec.chi = -0.3;
    spec.gamma_sym = 0.4;
    spec.gamma_twist = 0.2;
    spec.f_coeffs = {0.1, 0.5, -0.05};
    const int n = 7;
    const auto h = build_hamiltonian(spec, n);
    const auto prop = hermitian_eigen(h);
    std::vector<cplx> amps(n + 1);
    for (int k = 0; k <= n; ++k) amps[k] = cplx(std::cos(k), std::sin(2.0 * k));
    const auto s0 = make_state(n, amps).state;
    const double t = 1.3;
    const Eigen::VectorXcd ref = rk4(h.entries(), s0.amplitudes(), t, 20000);
    CHECK((evolve_to(prop, s0, t).amplitudes() - ref).norm() < 1e-9);
}

TEST_CASE("forward then backward returns the initial state") {
    const auto prop = hermitian_eigen(build_hamiltonian(HamiltonianSpec::two_axis(1.0), 12));
    const auto s0 = make_dicke_state(12, 5);
    const auto back = evolve_to(prop, evolve_to(prop, s0, 2.7), -2.7);
    CHECK((back.amplitudes() - s0.amplitudes()).norm() < 1e-12);
}

TEST_CASE("time grid") {
    const auto g = time_grid(1.0, 0.1);
    REQUIRE(g.size() == 11);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(1.0));
    CHECK_THROWS_AS(time_grid(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(time_grid(-1.0, 0.1), DomainError);
}

TEST_CASE("trajectory starts at |0>_J and stays normalised") {
    const auto traj = trajectory(HamiltonianSpec::one_axis_field(1.0, 0.5), 9, 2.0, 0.05);
    CHECK(traj.states.front().amplitudes() == make_all_down(9).amplitudes());
    for (const auto& s : traj.states) CHECK(std::abs(s.amplitudes().norm() - 1.0) < 1e-12);
}

TEST_CASE("dimension mismatch") {
    const auto prop = hermitian_eigen(build_hamiltonian(HamiltonianSpec::one_axis(1.0), 3));
    CHECK_THROWS_AS(evolve_to(prop, make_all_down(4), 1.0), DomainError);
}
