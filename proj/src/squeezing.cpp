#include "spinsq/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "spinsq/errors.hpp"

namespace spinsq {

namespace {

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    theta = std::fmod(theta, two_pi);
    if (theta < 0.0) theta += two_pi;
    if (theta >= two_pi) theta = 0.0;
    return theta;
}

}  // namespace

std::pair<Eigen::Vector3d, Eigen::Vector3d> perpendicular_frame(const Eigen::Vector3d& s) {
    const double norm = s.norm();
    if (!(norm >= kMeanSpinThreshold))
        throw DegenerateDirectionError("mean spin below threshold; no perpendicular plane");
    const Eigen::Vector3d z = Eigen::Vector3d::UnitZ();
    const double transverse = std::hypot(s.x(), s.y());
    Eigen::Vector3d n1 = transverse / norm <= kMeanSpinThreshold ? Eigen::Vector3d::UnitX()
                                                                  : z.cross(s).normalized();
    Eigen::Vector3d n2 = s.cross(n1) / norm;
    return {n1, n2};
}

SqueezingResult squeezing_general(const CollectiveMoments& m) {
    const Eigen::Vector3d s = m.mean_spin();
    const auto [n1, n2] = perpendicular_frame(s);
    const Eigen::Matrix3d sym = m.second_moment_matrix();

    const double g11 = n1.dot(sym * n1);
    const double g22 = n2.dot(sym * n2);
    const double g12 = n1.dot(sym * n2);
    const double half_diff = 0.5 * (g11 - g22);
    const double radius = std::hypot(half_diff, g12);
    const double lambda_min = 0.5 * (g11 + g22) - radius;

    // Gamma(theta) = tr/2 + half_diff cos 2theta + g12 sin 2theta is minimal
    // where (cos 2theta, sin 2theta) points against (half_diff, g12).
    double theta = 0.0;
    if (radius > 0.0) theta = wrap_angle(0.5 * std::atan2(-g12, -half_diff));

    SqueezingResult r;
    r.xi2 = 4.0 * lambda_min / m.n_qubits;
    r.optimal_angle = theta;
    r.n_perp = std::cos(theta) * n1 + std::sin(theta) * n2;
    r.mean_spin = s;
    r.method = SqueezingMethod::general;
    return r;
}

SqueezingResult squeezing_even_odd(const CollectiveMoments& m) {
    if (std::abs(m.mean_sx) > kTransverseMeanThreshold ||
        std::abs(m.mean_sy) > kTransverseMeanThreshold ||
        std::abs(m.sp_mean) > kTransverseMeanThreshold) {
        throw NotEvenOddError("transverse mean spin is nonzero; closed form does not apply");
    }
    const double N = m.n_qubits;
    const double abs_sp2 = std::abs(m.sp2);

    SqueezingResult r;
    r.xi2 = 1.0 + 0.5 * N - (2.0 / N) * (m.sz2 + abs_sp2);
    // 2 theta = pi + arg <S+^2>; no preferred axis when <S+^2> = 0.
    r.optimal_angle = abs_sp2 > 0.0 ? wrap_angle(0.5 * (std::numbers::pi + std::arg(m.sp2))) : 0.0;
    r.n_perp = {std::cos(r.optimal_angle), std::sin(r.optimal_angle), 0.0};
    r.mean_spin = m.mean_spin();
    r.method = SqueezingMethod::even_odd_closed_form;
    return r;
}

double squeezing_lower_bound(const CollectiveMoments& m) {
    return 1.0 - (2.0 / m.n_qubits) * std::abs(m.sp2);
}

double squeezing_from_correlation(double corr, int n_qubits) {
    if (n_qubits < 2) throw DomainError("pair correlation needs N >= 2");
    if (!(corr >= -1.0 && corr <= 1.0))
        throw DomainError("correlation " + std::to_string(corr) + " outside [-1, 1]");
    return 1.0 + (n_qubits - 1) * corr;
}

double pair_correlation(const CollectiveMoments& m, const Eigen::Vector3d& n) {
    const double N = m.n_qubits;
    if (m.n_qubits < 2) throw DomainError("pair correlation needs N >= 2");
    const double sn2 = n.dot(m.second_moment_matrix() * n);
    return (4.0 * sn2 - N) / (N * (N - 1.0));
}

}  // namespace spinsq
