#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "spinsq/errors.hpp"
#include "spinsq/hamiltonian.hpp"

using namespace spinsq;
using cplx = std::complex<double>;

namespace {

HamiltonianSpec random_spec(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    HamiltonianSpec s;
    s.mu = u(rng);
    s.chi = u(rng);
    s.gamma_sym = u(rng);
    s.gamma_twist = u(rng);
    s.f_coeffs = {u(rng), u(rng), u(rng)};
    return s;
}

}  // namespace

TEST_CASE("one-axis N=2 matrix") {
    const auto h = build_hamiltonian(HamiltonianSpec::one_axis(1.0), 2);
    const Eigen::Matrix3cd expected =
        (Eigen::Matrix3d() << 0.5, 0, 0.5, 0, 1, 0, 0.5, 0, 0.5).finished().cast<cplx>();
    CHECK((h.entries() - expected).norm() < 1e-15);
}

TEST_CASE("two-axis N=2 couples |0> and |2> with -i and +i") {
    const auto h = build_hamiltonian(HamiltonianSpec::two_axis(1.0), 2);
    CHECK(std::abs(h(2, 0) - cplx(0, -1)) < 1e-15);
    CHECK(std::abs(h(0, 2) - cplx(0, 1)) < 1e-15);
    for (int k = 0; k < 3; ++k) CHECK(std::abs(h(k, k)) < 1e-15);
}

TEST_CASE("builder matches dense spin operators") {
    std::mt19937_64 rng(7);
    for (int n = 1; n <= 9; ++n) {
        const auto spec = random_spec(rng, 3.0);
        const Eigen::MatrixXcd sx = dicke_sx(n), sy = dicke_sy(n), sz = dicke_sz(n);
        Eigen::MatrixXcd dense = spec.mu * sx * sx + spec.chi * sy * sy +
                                 spec.gamma_sym * (sx * sy + sy * sx);
        const Eigen::MatrixXcd sp = sx + cplx(0, 1) * sy;
        const Eigen::MatrixXcd sm = sx - cplx(0, 1) * sy;
        dense += spec.gamma_twist * (sp * sp - sm * sm) / cplx(0, 2);
        for (int k = 0; k <= n; ++k) dense(k, k) += spec.f(sz(k, k).real());
        CHECK((build_hamiltonian(spec, n).entries() - dense).norm() < 1e-12);
    }
}

TEST_CASE("Hermitian and pentadiagonal for random specs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 30;
        const auto spec = random_spec(rng, 10.0);
        const auto h = build_hamiltonian(spec, n);
        CHECK(h.hermiticity_residual() < 1e-12);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (std::abs(i - j) != 0 && std::abs(i - j) != 2) CHECK(h(i, j) == cplx(0, 0));
        CHECK(parity_check(spec, n) < 1e-12);
    }
}

TEST_CASE("twist form identity") {
    for (int n = 1; n <= 40; ++n) CHECK(twist_form_residual(n) <= 1e-12 * std::max(1, n * n));
}

TEST_CASE("spec validation") {
    HamiltonianSpec s = HamiltonianSpec::one_axis(std::nan(""));
    CHECK_THROWS_AS(s.validate(), DomainError);
    CHECK_THROWS_AS(build_hamiltonian(s, 3), DomainError);
    CHECK_THROWS_AS(build_hamiltonian(HamiltonianSpec::one_axis(1.0), 0), DomainError);
}

TEST_CASE("HermitianMatrix rejects non-Hermitian input") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 1) = 1.0;
    CHECK_THROWS_AS(HermitianMatrix{m}, DomainError);
    CHECK_THROWS_AS(HermitianMatrix{Eigen::MatrixXcd::Zero(2, 3)}, DomainError);
}

TEST_CASE("f polynomial") {
    HamiltonianSpec s;
    s.f_coeffs = {1.0, -2.0, 0.5};
    CHECK(s.f(2.0) == doctest::Approx(1.0 - 4.0 + 2.0));
}
