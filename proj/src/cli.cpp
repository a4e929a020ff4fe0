#include "spinsq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "spinsq/analysis.hpp"
#include "spinsq/errors.hpp"
#include "spinsq/evolution.hpp"
#include "spinsq/pairwise.hpp"
#include "spinsq/squeezing.hpp"
#include "spinsq/verify.hpp"

namespace spinsq::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (!item.empty()) parts.push_back(item);
    }
    return parts;
}

int to_int(const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("not an integer: '" + s + "'");
    return v;
}

double to_double(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw DomainError("not a number: '" + s + "'");
    return v;
}

struct CommonOptions {
    std::string model = "one-axis";
    double mu = 1.0;
    double chi = 0.0;
    double gamma = 1.0;
    std::optional<double> omega;
    std::string f_coeffs;
    double t_max = 10.0;
    double dt = 0.01;
    std::string out_path;
    int precision = 17;
};

void add_grid_options(CLI::App* cmd, CommonOptions& o) {
    cmd->add_option("--t-max", o.t_max, "final time")->capture_default_str();
    cmd->add_option("--dt", o.dt, "time step")->capture_default_str();
    cmd->add_option("--out", o.out_path, "output CSV path (stdout when omitted)");
    cmd->add_option("--precision", o.precision, "significant digits in CSV output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

Model require_model(const std::string& name) {
    auto m = parse_model(name);
    if (!m) throw DomainError("unknown model '" + name + "' (one-axis, one-axis-field, two-axis, general)");
    return *m;
}

void check_grid(double t_max, double dt) {
    if (!(t_max > 0.0) || !(dt > 0.0) || dt > t_max)
        throw DomainError("need t-max > 0 and 0 < dt <= t-max");
}

// Writes via `emit` to the file named by path, or to `fallback` when empty.
template <typename Emit>
void write_output(const std::string& path, std::ostream& fallback, Emit emit) {
    if (path.empty()) {
        emit(fallback);
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw std::ios_base::failure("cannot open '" + path + "' for writing");
    emit(file);
    file.flush();
    if (!file) throw std::ios_base::failure("write to '" + path + "' failed");
}

int cmd_evolve(const CommonOptions& o, int n_qubits, std::ostream& out, std::ostream& err) {
    const Model model = require_model(o.model);
    check_grid(o.t_max, o.dt);
    if (model == Model::one_axis_field && !o.omega)
        throw DomainError("model one-axis-field needs --omega");

    ModelParams params;
    params.mu = o.mu;
    params.chi = o.chi;
    params.gamma = o.gamma;
    params.omega = o.omega.value_or(0.0);
    if (!o.f_coeffs.empty()) params.f_coeffs = parse_double_list(o.f_coeffs);

    const auto rows = observe(trajectory(make_spec(model, params), n_qubits, o.t_max, o.dt));
    write_output(o.out_path, out,
                 [&](std::ostream& os) { write_trajectory_csv(os, rows, o.precision); });

    const TrajectorySummary s = summarize(rows);
    const auto degenerate =
        std::count_if(rows.begin(), rows.end(), [](const PointObservables& r) { return r.degenerate; });
    std::ostream& summary = o.out_path.empty() ? err : out;
    summary << "model=" << to_string(model) << " N=" << n_qubits << " points=" << rows.size()
            << " min_xi2=" << format_number(s.min_xi2, 10) << " at t=" << format_number(s.t_min_xi2, 10)
            << " max_C=" << format_number(s.max_concurrence, 10)
            << " at t=" << format_number(s.t_max_concurrence, 10)
            << " degenerate_points=" << degenerate << '\n';
    return kOk;
}

int cmd_scan(const CommonOptions& o, const std::string& models, const std::string& sizes,
             const std::string& mus, const std::string& chis, const std::string& gammas,
             const std::string& omegas, int workers, std::ostream& out, std::ostream& err) {
    check_grid(o.t_max, o.dt);
    const std::vector<int> n_list = parse_int_list(sizes);
    const std::vector<double> mu_list = parse_double_list(mus);
    const std::vector<double> chi_list = parse_double_list(chis);
    const std::vector<double> gamma_list = parse_double_list(gammas);
    const std::vector<double> omega_list = omegas.empty() ? std::vector<double>{} : parse_double_list(omegas);
    std::vector<double> f_coeffs;
    if (!o.f_coeffs.empty()) f_coeffs = parse_double_list(o.f_coeffs);

    std::vector<ScanPoint> points;
    for (const std::string& name : split(models, ',')) {
        const Model model = require_model(name);
        if (model == Model::one_axis_field && omega_list.empty())
            throw DomainError("model one-axis-field needs --omega values");
        for (int n : n_list) {
            if (n < 1) throw DomainError("qubit counts must be >= 1");
            auto add = [&](ModelParams p) { points.push_back({model, n, std::move(p)}); };
            switch (model) {
                case Model::one_axis:
                    for (double mu : mu_list) add({mu, 0.0, 0.0, 0.0, {}});
                    break;
                case Model::one_axis_field:
                    for (double mu : mu_list)
                        for (double om : omega_list) add({mu, 0.0, 0.0, om, {}});
                    break;
                case Model::two_axis:
                    for (double g : gamma_list) add({0.0, 0.0, g, 0.0, {}});
                    break;
                case Model::general:
                    for (double mu : mu_list)
                        for (double chi : chi_list)
                            for (double g : gamma_list) add({mu, chi, g, 0.0, f_coeffs});
                    break;
            }
        }
    }
    if (points.empty()) throw DomainError("scan grid is empty");

    const auto rows = run_scan(points, o.t_max, o.dt, workers);
    write_output(o.out_path, out, [&](std::ostream& os) { write_scan_csv(os, rows, o.precision); });
    const auto exceed = std::count_if(rows.begin(), rows.end(),
                                      [](const ScanRow& r) { return r.max_xi2_exceeds_one; });
    (o.out_path.empty() ? err : out)
        << "scan points=" << rows.size() << " rows_with_max_xi2_above_1=" << exceed << '\n';
    return kOk;
}

int cmd_dicke(int n_qubits, int excitations, int precision, std::ostream& out) {
    const SymmetricState s = make_dicke_state(n_qubits, excitations);
    const CollectiveMoments m = collective_moments(s);
    auto num = [precision](double v) { return format_number(v, precision); };
    out << "N = " << n_qubits << ", n = " << excitations << '\n';
    out << "xi2 = " << num(squeezing_even_odd(m).xi2) << '\n';
    out << "lower_bound = " << num(squeezing_lower_bound(m)) << '\n';
    out << "|<S+^2>| = " << num(std::abs(m.sp2)) << '\n';
    if (n_qubits < 2) {
        out << "concurrence = n/a (single qubit)\n";
        return kOk;
    }
    const TwoQubitReduced r = reduced_two_qubit(m);
    const ConcurrenceResult c = concurrence_x_form(r);
    out << "concurrence = " << num(c.concurrence) << " (" << to_string(c.branch) << ")\n";
    out << "v_plus = " << num(r.v_plus) << '\n';
    out << "v_minus = " << num(r.v_minus) << '\n';
    out << "y = " << num(r.y) << '\n';
    out << "u = " << num(r.u.real()) << " + " << num(r.u.imag()) << "i\n";
    out << "x_plus = " << num(std::abs(r.x_plus)) << ", x_minus = " << num(std::abs(r.x_minus)) << '\n';
    return kOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, std::ostream& out) {
    out << "verify suite=" << suite << " seed=" << seed << '\n';
    bool ok = true;
    for (const auto& report : verify::run_suite(suite, seed)) {
        report.print(out);
        ok = ok && report.passed();
    }
    out << (ok ? "ALL PASSED\n" : "VERIFICATION FAILED\n");
    return ok ? kOk : kVerificationFailed;
}

// Reads `key = value` lines; '#' starts a comment. Keys are long option
// names without the leading dashes.
std::vector<std::string> read_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot read config '" + path + "'");
    std::vector<std::string> flags;
    int line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        line = line.substr(0, line.find('#'));
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError(path + ":" + std::to_string(line_no) + ": expected key = value");
        auto trim = [](std::string v) {
            v.erase(0, v.find_first_not_of(" \t\r"));
            v.erase(v.find_last_not_of(" \t\r") + 1);
            if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front())
                v = v.substr(1, v.size() - 2);
            return v;
        };
        const std::string key = trim(line.substr(0, eq));
        if (key.empty()) throw DomainError(path + ":" + std::to_string(line_no) + ": empty key");
        flags.push_back("--" + key);
        flags.push_back(trim(line.substr(eq + 1)));
    }
    return flags;
}

// Replaces `--config FILE` with the file's options, placed right after the
// subcommand name so later command-line flags take precedence.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
    std::vector<std::string> rest;
    std::vector<std::string> from_file;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) {
            const auto f = read_config(args[++i]);
            from_file.insert(from_file.end(), f.begin(), f.end());
        } else if (args[i].rfind("--config=", 0) == 0) {
            const auto f = read_config(args[i].substr(9));
            from_file.insert(from_file.end(), f.begin(), f.end());
        } else {
            rest.push_back(args[i]);
        }
    }
    if (from_file.empty() || rest.empty()) return rest;
    std::vector<std::string> out{rest.front()};
    out.insert(out.end(), from_file.begin(), from_file.end());
    out.insert(out.end(), rest.begin() + 1, rest.end());
    return out;
}

}  // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    for (const std::string& token : split(text, ',')) {
        const auto dots = token.find("..");
        if (dots == std::string::npos) {
            values.push_back(to_int(token));
            continue;
        }
        const int lo = to_int(token.substr(0, dots));
        const int hi = to_int(token.substr(dots + 2));
        if (hi < lo) throw DomainError("empty range '" + token + "'");
        for (int v = lo; v <= hi; ++v) values.push_back(v);
    }
    if (values.empty()) throw DomainError("empty list");
    return values;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const std::string& token : split(text, ',')) values.push_back(to_double(token));
    if (values.empty()) throw DomainError("empty list");
    return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spin squeezing and pairwise entanglement of symmetric multiqubit states", "spinsq"};
    app.require_subcommand(1);
    // Repeated options keep the last value, so flags after the expanded
    // config file override it.
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    std::string config_path;

    CommonOptions evolve_opts;
    int evolve_n = 0;
    auto* evolve = app.add_subcommand("evolve", "evolve |0>_J and write a per-time CSV");
    evolve->add_option("--config", config_path, "key = value configuration file");
    evolve->add_option("--model", evolve_opts.model, "one-axis | one-axis-field | two-axis | general")
        ->capture_default_str();
    evolve->add_option("--n", evolve_n, "number of qubits")->required()->check(CLI::PositiveNumber);
    evolve->add_option("--mu", evolve_opts.mu, "Sx^2 coefficient")->capture_default_str();
    evolve->add_option("--chi", evolve_opts.chi, "Sy^2 coefficient (general)")->capture_default_str();
    evolve->add_option("--gamma", evolve_opts.gamma, "twisting coefficient")->capture_default_str();
    evolve->add_option("--omega", evolve_opts.omega, "Sz field (one-axis-field)");
    evolve->add_option("--f-coeffs", evolve_opts.f_coeffs, "f(Sz) coefficients, ascending powers");
    add_grid_options(evolve, evolve_opts);

    CommonOptions scan_opts;
    std::string scan_models, scan_sizes, scan_mu = "1", scan_chi = "0", scan_gamma = "1", scan_omega;
    int workers = 1;
    auto* scan = app.add_subcommand("scan", "summaries over a parameter grid");
    scan->add_option("--config", config_path, "key = value configuration file");
    scan->add_option("--model", scan_models, "comma list of models")->required();
    scan->add_option("--n", scan_sizes, "qubit counts, e.g. 2..20,50,100")->required();
    scan->add_option("--mu", scan_mu, "comma list")->capture_default_str();
    scan->add_option("--chi", scan_chi, "comma list (general)")->capture_default_str();
    scan->add_option("--gamma", scan_gamma, "comma list")->capture_default_str();
    scan->add_option("--omega", scan_omega, "comma list (one-axis-field)");
    scan->add_option("--f-coeffs", scan_opts.f_coeffs, "f(Sz) coefficients (general)");
    scan->add_option("--workers", workers, "parallel grid workers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_grid_options(scan, scan_opts);

    int dicke_n = 0;
    int dicke_k = 0;
    int dicke_precision = 17;
    auto* dicke = app.add_subcommand("dicke", "squeezing and concurrence of a Dicke state");
    dicke->add_option("--config", config_path, "key = value configuration file");
    dicke->add_option("--n", dicke_n, "number of qubits")->required();
    dicke->add_option("-k,--excitations", dicke_k, "excitation number n")->required();
    dicke->add_option("--precision", dicke_precision)->check(CLI::Range(1, 17))->capture_default_str();

    std::string suite = "all";
    std::uint64_t seed = 42;
    int verify_workers = 1;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("--config", config_path, "key = value configuration file");
    verify_cmd->add_option("suite,--suite", suite,
                           "lemma1 | lemma2 | lemma3 | prop3 | prop4 | parity | oracle | x-form | all")
        ->capture_default_str();
    verify_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
    verify_cmd->add_option("--workers", verify_workers, "accepted for symmetry; suites run serially");

    std::vector<std::string> argv_storage{"spinsq"};
    try {
        const auto expanded = expand_config(args);
        argv_storage.insert(argv_storage.end(), expanded.begin(), expanded.end());
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (evolve->parsed()) return cmd_evolve(evolve_opts, evolve_n, out, err);
        if (scan->parsed())
            return cmd_scan(scan_opts, scan_models, scan_sizes, scan_mu, scan_chi, scan_gamma,
                            scan_omega, workers, out, err);
        if (dicke->parsed()) return cmd_dicke(dicke_n, dicke_k, dicke_precision, out);
        if (verify_cmd->parsed()) {
            const auto& names = verify::suite_names();
            if (std::find(names.begin(), names.end(), suite) == names.end()) {
                err << "error: unknown suite '" << suite << "'\n\n" << verify_cmd->help();
                return kUsage;
            }
            return cmd_verify(suite, seed, out);
        }
    } catch (const NumericalError& e) {
        err << "numerical error: " << e.what() << '\n';
        return kNumerical;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::ios_base::failure& e) {
        err << "I/O error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}

}  // namespace spinsq::cli
