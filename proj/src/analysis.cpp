#include "spinsq/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <tuple>

#include "spinsq/errors.hpp"

namespace spinsq {

const char* to_string(Model m) {
    switch (m) {
        case Model::one_axis: return "one-axis";
        case Model::one_axis_field: return "one-axis-field";
        case Model::two_axis: return "two-axis";
        case Model::general: return "general";
    }
    return "?";
}

std::optional<Model> parse_model(const std::string& name) {
    for (Model m : {Model::one_axis, Model::one_axis_field, Model::two_axis, Model::general})
        if (name == to_string(m)) return m;
    return std::nullopt;
}

HamiltonianSpec make_spec(Model model, const ModelParams& p) {
    switch (model) {
        case Model::one_axis: return HamiltonianSpec::one_axis(p.mu);
        case Model::one_axis_field: return HamiltonianSpec::one_axis_field(p.mu, p.omega);
        case Model::two_axis: return HamiltonianSpec::two_axis(p.gamma);
        case Model::general: {
            HamiltonianSpec s;
            s.mu = p.mu;
            s.chi = p.chi;
            s.gamma_sym = p.gamma;
            s.f_coeffs = p.f_coeffs;
            return s;
        }
    }
    throw DomainError("unknown model");
}

PointObservables observe(const SymmetricState& state, double t) {
    PointObservables p;
    p.t = t;
    p.moments = collective_moments(state);
    p.mean_spin_norm = p.moments.mean_spin().norm();
    p.degenerate = p.mean_spin_norm < kMeanSpinThreshold;
    try {
        p.xi2_closed = squeezing_even_odd(p.moments).xi2;
    } catch (const NotEvenOddError&) {
        p.xi2_closed = std::numeric_limits<double>::quiet_NaN();
    }
    if (!p.degenerate) p.xi2_general = squeezing_general(p.moments).xi2;

    if (state.n_qubits() >= 2) {
        p.reduced = reduced_two_qubit(p.moments);
        try {
            p.concurrence = concurrence_x_form(p.reduced);
        } catch (const NotXFormError&) {
            p.concurrence = concurrence_spectral(p.reduced.matrix());
        }
    }
    return p;
}

std::vector<PointObservables> observe(const Trajectory& traj) {
    std::vector<PointObservables> rows;
    rows.reserve(traj.size());
    for (std::size_t k = 0; k < traj.size(); ++k) rows.push_back(observe(traj.states[k], traj.times[k]));
    return rows;
}

std::string format_number(double v, int precision) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

const char* const kTrajectoryCsvHeader =
    "t,xi2_closed,xi2_general,mean_spin_norm,degenerate_flag,concurrence,branch,"
    "u_re,u_im,y,v_plus,v_minus,sz_mean,sz2,sp2_re,sp2_im";

void write_trajectory_csv(std::ostream& out, const std::vector<PointObservables>& rows,
                          int precision) {
    auto num = [precision](double v) { return format_number(v, precision); };
    out << kTrajectoryCsvHeader << '\n';
    for (const auto& r : rows) {
        const double xi2_general =
            r.xi2_general ? *r.xi2_general : std::numeric_limits<double>::quiet_NaN();
        out << num(r.t) << ',' << num(r.xi2_closed) << ',' << num(xi2_general) << ','
            << num(r.mean_spin_norm) << ',' << (r.degenerate ? 1 : 0) << ','
            << num(r.concurrence.concurrence) << ',' << to_string(r.concurrence.branch) << ','
            << num(r.reduced.u.real()) << ',' << num(r.reduced.u.imag()) << ','
            << num(r.reduced.y) << ',' << num(r.reduced.v_plus) << ','
            << num(r.reduced.v_minus) << ',' << num(r.moments.mean_sz) << ','
            << num(r.moments.sz2) << ',' << num(r.moments.sp2.real()) << ','
            << num(r.moments.sp2.imag()) << '\n';
    }
}

TrajectorySummary summarize(const std::vector<PointObservables>& rows) {
    TrajectorySummary s;
    if (rows.empty()) return s;
    s.min_xi2 = std::numeric_limits<double>::infinity();
    s.max_xi2 = -std::numeric_limits<double>::infinity();
    s.max_concurrence = -std::numeric_limits<double>::infinity();
    for (const auto& r : rows) {
        if (r.xi2_closed < s.min_xi2) {
            s.min_xi2 = r.xi2_closed;
            s.t_min_xi2 = r.t;
        }
        s.max_xi2 = std::max(s.max_xi2, r.xi2_closed);
        if (r.concurrence.concurrence > s.max_concurrence) {
            s.max_concurrence = r.concurrence.concurrence;
            s.t_max_concurrence = r.t;
        }
        if (r.moments.n_qubits >= 2) {
            const double res =
                std::abs(prop3_residual(r.xi2_closed, r.concurrence.concurrence, r.moments.n_qubits));
            s.max_relation_residual = std::max(s.max_relation_residual, res);
            if (r.xi2_closed <= 1.0 + 1e-12)
                s.max_prop3_residual = std::max(s.max_prop3_residual, res);
        }
    }
    return s;
}

namespace {

auto scan_key(const ScanPoint& p) {
    return std::tie(p.model, p.n_qubits, p.params.mu, p.params.chi, p.params.gamma,
                    p.params.omega, p.params.f_coeffs);
}

}  // namespace

std::vector<ScanRow> run_scan(const std::vector<ScanPoint>& points, double t_max, double dt,
                              int workers) {
    if (points.empty()) throw DomainError("scan grid is empty");
    const std::vector<double> times = time_grid(t_max, dt);

    std::vector<ScanRow> rows(points.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (std::size_t k = next++; k < points.size(); k = next++) {
            try {
                const ScanPoint& p = points[k];
                const HamiltonianSpec spec = make_spec(p.model, p.params);
                const Propagator prop = hermitian_eigen(build_hamiltonian(spec, p.n_qubits));
                const auto obs = observe(trajectory(prop, make_all_down(p.n_qubits), times));
                rows[k].point = p;
                rows[k].summary = summarize(obs);
                rows[k].max_xi2_exceeds_one = rows[k].summary.max_xi2 > 1.0 + 1e-9;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };

    const int n_threads = std::max(1, std::min<int>(workers, static_cast<int>(points.size())));
    if (n_threads == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n_threads; ++i) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failure) std::rethrow_exception(failure);

    std::stable_sort(rows.begin(), rows.end(), [](const ScanRow& a, const ScanRow& b) {
        return scan_key(a.point) < scan_key(b.point);
    });
    return rows;
}

const char* const kScanCsvHeader =
    "model,n,mu,chi,gamma,omega,min_xi2,t_min_xi2,mubar_min_xi2,max_xi2,max_concurrence,"
    "t_max_concurrence,max_prop3_residual,max_relation_residual,max_xi2_exceeds_one";

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows, int precision) {
    auto num = [precision](double v) { return format_number(v, precision); };
    out << kScanCsvHeader << '\n';
    for (const auto& r : rows) {
        const auto& p = r.point.params;
        const auto& s = r.summary;
        out << to_string(r.point.model) << ',' << r.point.n_qubits << ',' << num(p.mu) << ','
            << num(p.chi) << ',' << num(p.gamma) << ',' << num(p.omega) << ','
            << num(s.min_xi2) << ',' << num(s.t_min_xi2) << ','
            << num(2.0 * p.mu * s.t_min_xi2) << ',' << num(s.max_xi2) << ','
            << num(s.max_concurrence) << ',' << num(s.t_max_concurrence) << ','
            << num(s.max_prop3_residual) << ',' << num(s.max_relation_residual) << ','
            << (r.max_xi2_exceeds_one ? 1 : 0) << '\n';
    }
}

}  // namespace spinsq
