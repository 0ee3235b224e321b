#pragma once

// Parameter sweeps over the thermal-reservoir model, emitted as CSV.
//
//   sweep-time:     n,r,gamma_t,C,N2,N1
//   sweep-strength: x,gamma_t,N2,N1,N2W,N1W
//
// Values are printed with 12 significant digits, '.' decimal separator and
// '\n' line endings. Output depends only on the configuration.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qcorr {

enum class Integrator { Analytic, Rk4 };

struct SweepConfig {
    std::vector<double> n_values{1.0};
    std::vector<double> r_values{1.0};
    std::vector<double> x_values{0.1, 1.0, 3.0, 30.0};
    double gamma = 1.0;
    double t_max = 5.0;
    int t_steps = 101;
    std::string output_path;
    Integrator integrator = Integrator::Analytic;

    /// Throws Error{InvalidConfig}.
    void validate() const;
};

/// "0.1,0.3,0.5" -> {0.1, 0.3, 0.5}; throws Error{InvalidConfig}.
std::vector<double> parse_number_list(std::string_view text);

/// Applies one key=value setting. Keys: n, r, x, gamma, t-max, steps, out,
/// integrator. Throws Error{InvalidConfig} on unknown keys or bad values.
void apply_setting(SweepConfig& cfg, std::string_view key, std::string_view value);

/// Reads key=value lines ('#' starts a comment) into `cfg`.
/// Throws Error{IoFailure} if the file cannot be read.
void load_config_file(SweepConfig& cfg, const std::string& path);

/// t_steps uniform points on [0, t_max], endpoints included.
std::vector<double> time_grid(double t_max, int t_steps);

void write_time_sweep(const SweepConfig& cfg, std::ostream& out);

/// Requires exactly one n and one r value.
void write_strength_sweep(const SweepConfig& cfg, std::ostream& out);

/// Write to cfg.output_path; throws Error{IoFailure} on file errors.
void run_time_sweep(const SweepConfig& cfg);
void run_strength_sweep(const SweepConfig& cfg);

/// printf("%.12g") formatting used for every CSV value.
std::string format_value(double v);

} // namespace qcorr
