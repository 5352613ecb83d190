#pragma once

// Study harness: orchestrates the convergence and verification sweeps over
// the other modules and emits machine-readable CSV tables. Output is
// deterministic byte-for-byte for a fixed configuration: quadrature nodes
// are fixed, sweep lists are canonicalized to ascending order, and rows are
// emitted in nested sorted-key order. Floating-point cells use scientific
// notation with 12 significant digits.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracwave/limit.hpp"

namespace fracwave {

enum class StudyKind {
    geometry,
    epsilon_sweep,
    superpose_convergence,
    caputo_check,
    residual_sweep,
    verify_pde,
};

/// Raised on invalid configuration (CLI maps it to exit code 1).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on output failures (CLI maps it to exit code 2).
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct StudyConfig {
    StudyKind study = StudyKind::geometry;
    std::vector<double> s_values = {0.1, 0.25, 0.5, 0.75, 0.9};
    std::vector<std::size_t> n_values = {10, 100, 1000, 10000};
    double base_length = 1.0;
    double speed = 1.0;
    double a1 = 0.0;
    double a2 = 10.0;
    double a3 = 1.0;
    std::vector<double> mu_values = {0.0, 0.01, 0.02, 0.04};
    std::optional<double> kappa_override;
    int quad_nodes = 256;
    std::string output_path;  // empty means standard output

    QuadratureSpec quadrature() const {
        return {quad_nodes, QuadScheme::gauss_legendre, 1e-10};
    }
};

/// Checks ranges and nonemptiness, then sorts the sweep lists ascending so
/// emission order is canonical. Throws ConfigError.
void validate_and_canonicalize(StudyConfig& config);

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    bool operator==(const Table&) const = default;
};

/// Scientific notation, 12 significant digits.
std::string format_sci(double value);

std::string emit_csv(const Table& table);
Table parse_csv(const std::string& text);

/// Parses a flat key = value config file ('#' starts a comment). Unknown
/// keys raise ConfigError; the result still needs validate_and_canonicalize.
StudyConfig load_config_file(const std::string& path);

const char* study_name(StudyKind kind);
StudyKind study_from_name(const std::string& name);

Table run_geometry(const StudyConfig& config);
Table run_epsilon_sweep(const StudyConfig& config);
Table run_superpose_convergence(const StudyConfig& config);
Table run_caputo_check(const StudyConfig& config);
Table run_residual_sweep(const StudyConfig& config);
Table run_verify_pde(const StudyConfig& config);

/// Dispatch on config.study. The config must already be validated.
Table run_study(const StudyConfig& config);

/// Writes the CSV to config's output path, or to stdout when the path is
/// empty. Throws IoError on failure.
void write_table(const Table& table, const std::string& output_path);

}  // namespace fracwave
