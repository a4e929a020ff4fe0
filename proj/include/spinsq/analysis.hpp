// analysis.hpp
// Per-time-point observables, trajectory CSV emission and parameter scans.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "spinsq/dicke.hpp"
#include "spinsq/evolution.hpp"
#include "spinsq/hamiltonian.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/squeezing.hpp"

namespace spinsq {

enum class Model { one_axis, one_axis_field, two_axis, general };

const char* to_string(Model m);
std::optional<Model> parse_model(const std::string& name);

struct ModelParams {
    double mu = 1.0;
    double chi = 0.0;
    double gamma = 1.0;
    double omega = 0.0;
    std::vector<double> f_coeffs;
};

// one-axis: mu Sx^2; one-axis-field: mu Sx^2 + omega Sz;
// two-axis: gamma (S+^2 - S-^2)/(2i); general: mu, chi, gamma (SxSy + SySx), f.
HamiltonianSpec make_spec(Model model, const ModelParams& p);

struct PointObservables {
    double t = 0.0;
    double xi2_closed = 0.0;               // NaN when the state is not even/odd
    std::optional<double> xi2_general;     // empty when the mean spin is degenerate
    double mean_spin_norm = 0.0;
    bool degenerate = false;               // |<S>| < 1e-8
    ConcurrenceResult concurrence;
    TwoQubitReduced reduced;
    CollectiveMoments moments;
};

PointObservables observe(const SymmetricState& state, double t);

std::vector<PointObservables> observe(const Trajectory& traj);

// Decimal text with `precision` significant digits; NaN as "nan".
std::string format_number(double v, int precision);

extern const char* const kTrajectoryCsvHeader;

void write_trajectory_csv(std::ostream& out, const std::vector<PointObservables>& rows,
                          int precision = 17);

struct TrajectorySummary {
    double min_xi2 = 0.0;
    double t_min_xi2 = 0.0;
    double max_xi2 = 0.0;
    double max_concurrence = 0.0;
    double t_max_concurrence = 0.0;
    double max_prop3_residual = 0.0;  // over points with xi2 <= 1 + 1e-12
    double max_relation_residual = 0.0;  // same probe over every point
};

TrajectorySummary summarize(const std::vector<PointObservables>& rows);

struct ScanPoint {
    Model model = Model::one_axis;
    int n_qubits = 2;
    ModelParams params;
};

struct ScanRow {
    ScanPoint point;
    TrajectorySummary summary;
    bool max_xi2_exceeds_one = false;  // max over time > 1 + 1e-9
};

// Evaluates every point on [0, t_max] and returns rows sorted by
// (model, N, mu, chi, gamma, omega) regardless of worker scheduling.
std::vector<ScanRow> run_scan(const std::vector<ScanPoint>& points, double t_max, double dt,
                              int workers = 1);

extern const char* const kScanCsvHeader;

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, int precision = 17);

}  // namespace spinsq
