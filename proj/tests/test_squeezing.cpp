#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>
#include <random>

#include "spinsq/errors.hpp"
#include "spinsq/evolution.hpp"
#include "spinsq/squeezing.hpp"
#include "spinsq/verify.hpp"

using namespace spinsq;

namespace {

// Brute-force minimum of 4/N Var(n.S) over the perpendicular circle.
double brute_xi2(const CollectiveMoments& m) {
    const auto [n1, n2] = perpendicular_frame(m.mean_spin());
    const Eigen::Matrix3d mm = m.second_moment_matrix();
    double best = 1e300;
    for (int k = 0; k < 20000; ++k) {
        const double th = std::numbers::pi * k / 20000;
        const Eigen::Vector3d n = std::cos(th) * n1 + std::sin(th) * n2;
        best = std::min(best, n.dot(mm * n));
    }
    return 4.0 * best / m.n_qubits;
}

}  // namespace

TEST_CASE("one-axis N=2 at t = pi/4") {
    const auto prop = hermitian_eigen(build_hamiltonian(HamiltonianSpec::one_axis(1.0), 2));
    const auto m = collective_moments(evolve_to(prop, make_all_down(2), std::numbers::pi / 4));
    CHECK(squeezing_even_odd(m).xi2 == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
    CHECK(squeezing_general(m).xi2 == doctest::Approx(1.0 - std::sqrt(0.5)).epsilon(1e-12));
}

TEST_CASE("Dicke state squeezing") {
    CHECK(squeezing_even_odd(collective_moments(make_dicke_state(4, 2))).xi2 == doctest::Approx(3.0));
    CHECK(squeezing_even_odd(collective_moments(make_dicke_state(2, 1))).xi2 == doctest::Approx(2.0));
    CHECK(squeezing_even_odd(collective_moments(make_all_down(10))).xi2 == doctest::Approx(1.0));
}

TEST_CASE("closed form agrees with the general route on even/odd states") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + trial % 15;
        const auto parity = trial % 2 ? ParityClass::odd : ParityClass::even;
        const auto m = collective_moments(verify::random_state(n, rng, parity));
        if (m.mean_spin().norm() < 1e-6) continue;
        const double closed = squeezing_even_odd(m).xi2;
        CHECK(std::abs(closed - squeezing_general(m).xi2) < 1e-10);
        CHECK(squeezing_lower_bound(m) <= closed + 1e-12);
    }
}

TEST_CASE("general route matches a brute-force angle search") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto m = collective_moments(verify::random_state(2 + trial % 8, rng, ParityClass::mixed));
        CHECK(squeezing_general(m).xi2 == doctest::Approx(brute_xi2(m)).epsilon(1e-6));
    }
}

TEST_CASE("optimal direction is perpendicular and attains xi2") {
    std::mt19937_64 rng(9);
    const auto m = collective_moments(verify::random_state(6, rng, ParityClass::mixed));
    const auto r = squeezing_general(m);
    CHECK(std::abs(r.n_perp.dot(m.mean_spin())) < 1e-12);
    CHECK(std::abs(r.n_perp.norm() - 1.0) < 1e-12);
    CHECK(4.0 * r.n_perp.dot(m.second_moment_matrix() * r.n_perp) / 6 == doctest::Approx(r.xi2));
}

TEST_CASE("closed form rejects states with transverse mean spin") {
    std::vector<cplx> amps{1.0, 1.0, 0.0};
    const auto m = collective_moments(make_state(2, amps).state);
    CHECK_THROWS_AS(squeezing_even_odd(m), NotEvenOddError);
}

TEST_CASE("general route rejects a vanishing mean spin") {
    CHECK_THROWS_AS(squeezing_general(collective_moments(make_dicke_state(4, 2))),
                    DegenerateDirectionError);
}

TEST_CASE("correlation form") {
    CHECK(squeezing_from_correlation(0.1, 6) == doctest::Approx(1.5));
    CHECK(squeezing_from_correlation(0.0, 3) == doctest::Approx(1.0));
    CHECK_THROWS_AS(squeezing_from_correlation(1.5, 6), DomainError);
    CHECK_THROWS_AS(squeezing_from_correlation(0.1, 1), DomainError);
}

TEST_CASE("xi2 invariant under z rotation") {
    std::mt19937_64 rng(13);
    const int n = 9;
    const auto s = verify::random_state(n, rng, ParityClass::even);
    Eigen::VectorXcd rotated = s.amplitudes();
    for (int k = 0; k <= n; ++k) rotated(k) *= std::exp(cplx(0, 0.77 * (k - 0.5 * n)));
    const double a = squeezing_even_odd(collective_moments(s)).xi2;
    const double b = squeezing_even_odd(collective_moments(SymmetricState::from_normalized(n, rotated))).xi2;
    CHECK(std::abs(a - b) < 1e-12);
}
