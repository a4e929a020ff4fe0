// squeezing.hpp
// Kitagawa-Ueda squeezing parameter xi^2 = (4/N) min (Delta S_perp)^2.

#pragma once

#include <Eigen/Dense>

#include "spinsq/dicke.hpp"

namespace spinsq {

inline constexpr double kMeanSpinThreshold = 1e-8;
inline constexpr double kTransverseMeanThreshold = 1e-8;

enum class SqueezingMethod { general, even_odd_closed_form };

struct SqueezingResult {
    double xi2 = 0.0;
    double optimal_angle = 0.0;  // in [0, 2pi), measured in the perpendicular frame
    Eigen::Vector3d n_perp = Eigen::Vector3d::Zero();
    Eigen::Vector3d mean_spin = Eigen::Vector3d::Zero();
    SqueezingMethod method = SqueezingMethod::general;
};

// Orthonormal pair spanning the plane perpendicular to mean_spin:
// n1 = normalize(z x s), or x when s is (anti)parallel to z; n2 = s x n1 / |s|.
std::pair<Eigen::Vector3d, Eigen::Vector3d> perpendicular_frame(const Eigen::Vector3d& mean_spin);

// Minimises the variance over the perpendicular plane. Throws
// DegenerateDirectionError when |<S>| < 1e-8.
SqueezingResult squeezing_general(const CollectiveMoments& m);

// xi^2 = 1 + N/2 - (2/N)(<Sz^2> + |<S+^2>|). Requires vanishing transverse
// mean spin (even/odd states); throws NotEvenOddError otherwise. Does not
// require <Sz> != 0.
SqueezingResult squeezing_even_odd(const CollectiveMoments& m);

// 1 - (2/N)|<S+^2>|.
double squeezing_lower_bound(const CollectiveMoments& m);

// 1 + (N-1) corr for the pair correlation <sigma_i.n sigma_j.n>.
double squeezing_from_correlation(double corr, int n_qubits);

// <sigma_i.n sigma_j.n> = (4 <S_n^2> - N) / (N(N-1)) for a unit vector n.
double pair_correlation(const CollectiveMoments& m, const Eigen::Vector3d& n);

}  // namespace spinsq
