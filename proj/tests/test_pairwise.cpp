#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spinsq/errors.hpp"
#include "spinsq/oracle.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/squeezing.hpp"
#include "spinsq/verify.hpp"

using namespace spinsq;

TEST_CASE("Dicke (4,2) reduced state") {
    const auto m = collective_moments(make_dicke_state(4, 2));
    const auto r = reduced_two_qubit(m);
    CHECK(r.y == doctest::Approx(1.0 / 3.0));
    CHECK(r.v_plus == doctest::Approx(1.0 / 6.0));
    CHECK(r.v_minus == doctest::Approx(1.0 / 6.0));
    CHECK(std::abs(r.u) < 1e-15);
    CHECK(r.trace() == doctest::Approx(1.0));

    const auto c = concurrence_x_form(r);
    CHECK(c.concurrence == doctest::Approx(1.0 / 3.0));
    CHECK(c.branch == ConcurrenceBranch::population_dominated);

    const auto cond = squeezing_condition(r);
    CHECK_FALSE(cond.satisfied);
    CHECK(cond.margin == doctest::Approx(-1.0 / 3.0));
    CHECK(cond.xi2 == doctest::Approx(3.0));
    CHECK(prop3_residual(squeezing_even_odd(m).xi2, c.concurrence, 4) == doctest::Approx(3.0));
}

TEST_CASE("Bell state from the Dicke (2,1) state") {
    const auto m = collective_moments(make_dicke_state(2, 1));
    CHECK(concurrence_x_form(reduced_two_qubit(m)).concurrence == doctest::Approx(1.0));
    const auto rho = oracle::partial_trace_pair(oracle::embed_symmetric(make_dicke_state(2, 1)), 0, 1);
    CHECK(concurrence_spectral(rho).concurrence == doctest::Approx(1.0));
}

TEST_CASE("maximally mixed pair has unclamped concurrence -1/2") {
    const Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity() / 4.0;
    const auto c = concurrence_spectral(rho);
    CHECK(c.concurrence == doctest::Approx(-0.5));
    CHECK_FALSE(c.entangled());
}

TEST_CASE("spectral route validates its input") {
    Eigen::Matrix4cd rho = Eigen::Matrix4cd::Identity() / 2.0;
    CHECK_THROWS_AS(concurrence_spectral(rho), DomainError);
    rho = Eigen::Matrix4cd::Zero();
    rho(0, 0) = 1.5;
    rho(3, 3) = -0.5;
    CHECK_THROWS_AS(concurrence_spectral(rho), DomainError);
    rho = Eigen::Matrix4cd::Identity() / 4.0;
    rho(0, 1) = 0.1;
    CHECK_THROWS_AS(concurrence_spectral(rho), DomainError);
}

TEST_CASE("X-form route rejects non-X reduced states") {
    std::vector<cplx> amps{1.0, 1.0, 0.0, 0.0};
    const auto r = reduced_two_qubit(collective_moments(make_state(3, amps).state));
    CHECK_THROWS_AS(concurrence_x_form(r), NotXFormError);
    CHECK_THROWS_AS(reduced_two_qubit(collective_moments(make_all_down(1))), DomainError);
}

TEST_CASE("X-form and spectral agree on random even/odd states") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 20;
        const auto parity = trial % 2 ? ParityClass::odd : ParityClass::even;
        const auto r = reduced_two_qubit(collective_moments(verify::random_state(n, rng, parity)));
        const auto a = concurrence_x_form(r);
        const auto b = concurrence_spectral(r.matrix());
        CHECK(std::abs(a.concurrence - b.concurrence) < 1e-10);
        for (int k = 0; k < 4; ++k) CHECK(std::abs(a.lambdas[k] - b.lambdas[k]) < 1e-9);
    }
}

TEST_CASE("reconstruction mutations are caught by the partial-trace check") {
    const std::vector<int> sizes{2, 3, 4, 5};
    auto failing = [&](const verify::Reconstruction& rec) {
        int fails = 0;
        for (const auto& c : verify::lemma2_checks(sizes, 20, 42, rec)) fails += !c.pass();
        return fails;
    };
    CHECK(failing(reduced_two_qubit) == 0);
    CHECK(failing([](const CollectiveMoments& m) {
              auto r = reduced_two_qubit(m);
              r.u = -r.u;
              return r;
          }) > 0);
    CHECK(failing([](const CollectiveMoments& m) {
              auto r = reduced_two_qubit(m);
              r.x_plus = -r.x_plus;
              return r;
          }) > 0);
    CHECK(failing([](const CollectiveMoments& m) {
              auto r = reduced_two_qubit(m);
              r.u = std::conj(r.u);
              return r;
          }) > 0);
}
