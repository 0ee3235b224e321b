#include "qcorr/sweep.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "qcorr/dynamics.hpp"
#include "qcorr/error.hpp"
#include "qcorr/measures.hpp"

namespace qcorr {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
    text = trim(text);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(v))
        throw Error(ErrorCode::InvalidConfig, "not a number: '" + std::string(text) + "'");
    return v;
}

// States along the time grid for one parameter point.
std::vector<DensityMatrix> trajectory_on_grid(const SweepConfig& cfg, const ModelParams& p,
                                              const std::vector<double>& grid) {
    std::vector<DensityMatrix> states;
    states.reserve(grid.size());
    if (cfg.integrator == Integrator::Analytic) {
        for (double t : grid) states.push_back(analytic_state_at(p, t));
        return states;
    }
    const int intervals = static_cast<int>(grid.size()) - 1;
    const double per_interval = cfg.t_max / intervals;
    const int sub = std::max(1, static_cast<int>(std::ceil(default_steps_per_unit * per_interval - 1e-9)));
    const Trajectory traj = integrate(p, cfg.t_max, intervals * sub);
    for (int k = 0; k <= intervals; ++k) states.push_back(traj.states[static_cast<std::size_t>(k * sub)]);
    return states;
}

template <typename Writer>
void write_to_path(const SweepConfig& cfg, Writer&& writer) {
    cfg.validate();
    if (cfg.output_path.empty()) throw Error(ErrorCode::InvalidConfig, "no output path given");
    std::ostringstream buffer;
    writer(cfg, buffer);
    std::ofstream file(cfg.output_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::IoFailure, "cannot open '" + cfg.output_path + "' for writing");
    file << buffer.str();
    file.flush();
    if (!file) throw Error(ErrorCode::IoFailure, "write to '" + cfg.output_path + "' failed");
}

} // namespace

void SweepConfig::validate() const {
    if (n_values.empty() || r_values.empty() || x_values.empty())
        throw Error(ErrorCode::InvalidConfig, "parameter lists must be non-empty");
    for (double n : n_values)
        if (!(n >= 0.0)) throw Error(ErrorCode::InvalidConfig, "n must be >= 0, got " + format_value(n));
    for (double r : r_values)
        if (!(r >= 0.0 && r <= 1.0))
            throw Error(ErrorCode::InvalidConfig, "r must lie in [0, 1], got " + format_value(r));
    for (double x : x_values)
        if (!(x >= 0.0)) throw Error(ErrorCode::InvalidConfig, "x must be >= 0, got " + format_value(x));
    if (!(gamma > 0.0)) throw Error(ErrorCode::InvalidConfig, "gamma must be > 0");
    if (!(t_max > 0.0) || !std::isfinite(t_max)) throw Error(ErrorCode::InvalidConfig, "t-max must be > 0");
    if (t_steps < 2) throw Error(ErrorCode::InvalidConfig, "steps must be >= 2");
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_number(text.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value) {
    key = trim(key);
    value = trim(value);
    if (key == "n") {
        cfg.n_values = parse_number_list(value);
    } else if (key == "r") {
        cfg.r_values = parse_number_list(value);
    } else if (key == "x") {
        cfg.x_values = parse_number_list(value);
    } else if (key == "gamma") {
        cfg.gamma = parse_number(value);
    } else if (key == "t-max") {
        cfg.t_max = parse_number(value);
    } else if (key == "steps") {
        const double s = parse_number(value);
        if (s != std::floor(s) || s < 0 || s > 1e9)
            throw Error(ErrorCode::InvalidConfig, "steps must be a non-negative integer");
        cfg.t_steps = static_cast<int>(s);
    } else if (key == "out") {
        cfg.output_path = std::string(value);
    } else if (key == "integrator") {
        if (value == "analytic")
            cfg.integrator = Integrator::Analytic;
        else if (value == "rk4")
            cfg.integrator = Integrator::Rk4;
        else
            throw Error(ErrorCode::InvalidConfig, "integrator must be 'analytic' or 'rk4'");
    } else {
        throw Error(ErrorCode::InvalidConfig, "unknown setting '" + std::string(key) + "'");
    }
}

void load_config_file(SweepConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoFailure, "cannot read config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view v = line;
        if (const auto hash = v.find('#'); hash != std::string_view::npos) v = v.substr(0, hash);
        v = trim(v);
        if (v.empty()) continue;
        const auto eq = v.find('=');
        if (eq == std::string_view::npos)
            throw Error(ErrorCode::InvalidConfig, path + ":" + std::to_string(lineno) + ": expected key=value");
        apply_setting(cfg, v.substr(0, eq), v.substr(eq + 1));
    }
}

std::vector<double> time_grid(double t_max, int t_steps) {
    std::vector<double> grid(static_cast<std::size_t>(t_steps));
    for (int k = 0; k < t_steps; ++k) grid[static_cast<std::size_t>(k)] = t_max * k / (t_steps - 1);
    return grid;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_time_sweep(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();
    const auto grid = time_grid(cfg.t_max, cfg.t_steps);
    out << "n,r,gamma_t,C,N2,N1\n";
    for (double n : cfg.n_values) {
        for (double r : cfg.r_values) {
            const auto p = ModelParams::make(cfg.gamma, n, r);
            const auto states = trajectory_on_grid(cfg, p, grid);
            for (std::size_t k = 0; k < grid.size(); ++k) {
                const DensityMatrix& rho = states[k];
                out << format_value(n) << ',' << format_value(r) << ',' << format_value(grid[k]) << ','
                    << format_value(concurrence(rho)) << ',' << format_value(hs_min(rho)) << ','
                    << format_value(trace_min(rho)) << '\n';
            }
        }
    }
}

void write_strength_sweep(const SweepConfig& cfg, std::ostream& out) {
    cfg.validate();
    if (cfg.n_values.size() != 1 || cfg.r_values.size() != 1)
        throw Error(ErrorCode::InvalidConfig, "sweep-strength takes exactly one n and one r value");
    const auto p = ModelParams::make(cfg.gamma, cfg.n_values.front(), cfg.r_values.front());
    const auto grid = time_grid(cfg.t_max, cfg.t_steps);
    const auto states = trajectory_on_grid(cfg, p, grid);

    std::vector<double> n2(grid.size()), n1(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        n2[k] = hs_min(states[k]);
        n1[k] = trace_min(states[k]);
    }

    out << "x,gamma_t,N2,N1,N2W,N1W\n";
    for (double x : cfg.x_values) {
        const double f = weak_factor(WeakStrength::make(x));
        for (std::size_t k = 0; k < grid.size(); ++k) {
            out << format_value(x) << ',' << format_value(grid[k]) << ',' << format_value(n2[k]) << ','
                << format_value(n1[k]) << ',' << format_value(f * n2[k]) << ',' << format_value(f * n1[k])
                << '\n';
        }
    }
}

void run_time_sweep(const SweepConfig& cfg) {
    write_to_path(cfg, [](const SweepConfig& c, std::ostream& o) { write_time_sweep(c, o); });
}

void run_strength_sweep(const SweepConfig& cfg) {
    write_to_path(cfg, [](const SweepConfig& c, std::ostream& o) { write_strength_sweep(c, o); });
}

} // namespace qcorr
