#include "fracwave/studies.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fracwave {

namespace {

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = text.find_last_not_of(" \t\r\n");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& text) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + text + "'");
    }
    if (used != t.size()) throw ConfigError("not a number: '" + text + "'");
    return value;
}

std::size_t parse_count(const std::string& text) {
    const double value = parse_double(text);
    if (!(value >= 1.0) || value != std::floor(value))
        throw ConfigError("not a positive integer: '" + text + "'");
    return static_cast<std::size_t>(value);
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> values;
    for (const auto& part : split(text, ','))
        if (!trim(part).empty()) values.push_back(parse_double(part));
    return values;
}

std::vector<std::size_t> parse_count_list(const std::string& text) {
    std::vector<std::size_t> values;
    for (const auto& part : split(text, ','))
        if (!trim(part).empty()) values.push_back(parse_count(part));
    return values;
}

}  // namespace

void validate_and_canonicalize(StudyConfig& config) {
    if (config.s_values.empty()) throw ConfigError("s list must not be empty");
    if (config.n_values.empty()) throw ConfigError("N list must not be empty");
    if (config.mu_values.empty()) throw ConfigError("mu list must not be empty");
    for (double s : config.s_values)
        if (!(s > 0.0) || !(s < 1.0)) throw ConfigError("every s must lie in (0,1)");
    for (std::size_t n : config.n_values)
        if (n < 1) throw ConfigError("every N must be >= 1");
    for (double mu : config.mu_values)
        if (mu < 0.0 || mu >= 1.0) throw ConfigError("every mu must lie in [0,1)");
    if (!(config.base_length > 0.0)) throw ConfigError("L must be > 0");
    if (!(config.speed > 0.0)) throw ConfigError("c must be > 0");
    if (config.a2 < 0.0 || config.a3 < 0.0) throw ConfigError("a2 and a3 must be >= 0");
    if (config.quad_nodes < 2) throw ConfigError("quad_nodes must be >= 2");

    std::sort(config.s_values.begin(), config.s_values.end());
    std::sort(config.n_values.begin(), config.n_values.end());
    std::sort(config.mu_values.begin(), config.mu_values.end());
}

std::string format_sci(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.11e", value);
    return buffer;
}

std::string emit_csv(const Table& table) {
    std::ostringstream out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i) out << ',';
        out << table.header[i];
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            out << row[i];
        }
        out << '\n';
    }
    return out.str();
}

Table parse_csv(const std::string& text) {
    Table table;
    bool first = true;
    for (const auto& line : split(text, '\n')) {
        if (line.empty()) continue;
        auto cells = split(line, ',');
        if (first) {
            table.header = std::move(cells);
            first = false;
        } else {
            table.rows.push_back(std::move(cells));
        }
    }
    return table;
}

const char* study_name(StudyKind kind) {
    switch (kind) {
        case StudyKind::geometry: return "geometry";
        case StudyKind::epsilon_sweep: return "epsilon-sweep";
        case StudyKind::superpose_convergence: return "superpose";
        case StudyKind::caputo_check: return "caputo-check";
        case StudyKind::residual_sweep: return "residual";
        case StudyKind::verify_pde: return "verify-pde";
    }
    return "unknown";
}

StudyKind study_from_name(const std::string& name) {
    for (StudyKind kind : {StudyKind::geometry, StudyKind::epsilon_sweep,
                           StudyKind::superpose_convergence, StudyKind::caputo_check,
                           StudyKind::residual_sweep, StudyKind::verify_pde})
        if (name == study_name(kind)) return kind;
    throw ConfigError("unknown study: '" + name + "'");
}

StudyConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file: " + path);

    StudyConfig config;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string content = trim(line);
        if (content.empty()) continue;
        const auto eq = content.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(line_no) + ": expected key = value");
        const std::string key = trim(content.substr(0, eq));
        const std::string value = trim(content.substr(eq + 1));

        if (key == "study") config.study = study_from_name(value);
        else if (key == "s") config.s_values = parse_double_list(value);
        else if (key == "n_values") config.n_values = parse_count_list(value);
        else if (key == "big_l") config.base_length = parse_double(value);
        else if (key == "c") config.speed = parse_double(value);
        else if (key == "a1") config.a1 = parse_double(value);
        else if (key == "a2") config.a2 = parse_double(value);
        else if (key == "a3") config.a3 = parse_double(value);
        else if (key == "mu") config.mu_values = parse_double_list(value);
        else if (key == "kappa") config.kappa_override = parse_double(value);
        else if (key == "quad_nodes") config.quad_nodes = static_cast<int>(parse_count(value));
        else if (key == "out") config.output_path = value;
        else throw ConfigError(path + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    return config;
}

namespace {

WaveProfile config_profile(const StudyConfig& config, double mu) {
    return {config.a1, config.a2, config.a3, mu, sine_perturbation()};
}

std::string format_count(std::size_t n) { return std::to_string(n); }

}  // namespace

Table run_geometry(const StudyConfig& config) {
    Table table;
    table.header = {"s", "N", "alpha", "b_N", "ell_1", "ell_N", "lambda_N", "telescoping_error"};
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        for (std::size_t n : config.n_values) {
            const MediumSpec spec(n, config.base_length, order);
            const MediumGeometry geom = build_geometry(spec);
            table.rows.push_back({format_sci(s), format_count(n), format_sci(order.alpha()),
                                  format_sci(geom.b_n), format_sci(geom.ell.front()),
                                  format_sci(geom.ell.back()), format_sci(geom.lambda.back()),
                                  format_sci(std::abs(geom.lambda.back() - config.base_length))});
        }
    }
    return table;
}

Table run_epsilon_sweep(const StudyConfig& config) {
    Table table;
    table.header = {"N", "s", "alpha", "epsilon_N", "upper_bound", "ratio"};
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        for (std::size_t n : config.n_values) {
            const MediumSpec spec(n, config.base_length, order);
            const DelayErrorReport report = eta_errors(build_geometry(spec), spec);
            const double ratio =
                std::isfinite(report.upper_bound) ? report.epsilon_n / report.upper_bound : 0.0;
            table.rows.push_back({format_count(n), format_sci(s), format_sci(order.alpha()),
                                  format_sci(report.epsilon_n), format_sci(report.upper_bound),
                                  format_sci(ratio)});
        }
    }
    return table;
}

Table run_superpose_convergence(const StudyConfig& config) {
    Table table;
    table.header = {"s", "N", "discrete", "continuum", "abs_error", "epsilon_N"};
    const WaveProfile profile = config_profile(config, config.mu_values.front());
    const QuadratureSpec quad = config.quadrature();
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        const ScaleParams scales(config.base_length, config.speed, order);
        const TravellingWave wave(profile, config.speed, config.base_length);
        const double continuum =
            continuum_u(profile, order, scales, config.base_length, scales.characteristic_time, quad);
        for (std::size_t n : config.n_values) {
            const MediumSpec spec(n, config.base_length, order);
            const MediumGeometry geom = build_geometry(spec);
            const double discrete =
                discrete_superposition(wave, geom, config.base_length, scales.characteristic_time);
            const DelayErrorReport report = eta_errors(geom, spec);
            table.rows.push_back({format_sci(s), format_count(n), format_sci(discrete),
                                  format_sci(continuum), format_sci(std::abs(discrete - continuum)),
                                  format_sci(report.epsilon_n)});
        }
    }
    return table;
}

Table run_caputo_check(const StudyConfig& config) {
    struct NamedFunction {
        const char* name;
        TimeFunction fn;
    };
    const NamedFunction functions[] = {
        {"t", {[](double t) { return t; }, [](double) { return 1.0; }, [](double) { return 0.0; }}},
        {"t^2",
         {[](double t) { return t * t; }, [](double t) { return 2.0 * t; },
          [](double) { return 2.0; }}},
        {"t^3",
         {[](double t) { return t * t * t; }, [](double t) { return 3.0 * t * t; },
          [](double t) { return 6.0 * t; }}},
        {"t^2+0.1*sin(t)",
         {[](double t) { return t * t + 0.1 * std::sin(t); },
          [](double t) { return 2.0 * t + 0.1 * std::cos(t); },
          [](double t) { return 2.0 - 0.1 * std::sin(t); }}},
    };
    const double eval_times[] = {0.5, 1.0, 2.0};

    Table table;
    table.header = {"s", "t", "u", "caputo_direct", "caputo_ibp", "scaled_direct", "abs_diff"};
    const QuadratureSpec quad = config.quadrature();
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        const double factor = scaling_constant(order);
        for (double t : eval_times) {
            for (const auto& named : functions) {
                const double direct = caputo_direct(named.fn, order, t, quad);
                const double ibp = caputo_ibp(named.fn, order, t, quad);
                table.rows.push_back({format_sci(s), format_sci(t), named.name,
                                      format_sci(direct), format_sci(ibp),
                                      format_sci(factor * direct),
                                      format_sci(std::abs(ibp - factor * direct))});
            }
        }
    }
    return table;
}

Table run_residual_sweep(const StudyConfig& config) {
    Table table;
    table.header = {"s", "mu", "kappa", "total"};
    const QuadratureSpec quad = config.quadrature();
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        for (double mu : config.mu_values) {
            const WaveProfile profile = config_profile(config, mu);
            std::vector<double> kappas;
            if (config.kappa_override) {
                kappas = {*config.kappa_override};
            } else {
                const double base = kappa(order, config.a2, config.a3);
                kappas = {base - 1.0, base, base + 1.0};
            }
            for (double kap : kappas) {
                const ResidualReport report = scaled_residual_at_LT(profile, order, kap, quad);
                table.rows.push_back(
                    {format_sci(s), format_sci(mu), format_sci(kap), format_sci(report.total)});
            }
        }
    }
    return table;
}

Table run_verify_pde(const StudyConfig& config) {
    Table table;
    table.header = {"s", "mu", "kappa", "total", "term_boundary", "term_double", "term_diffusion"};
    const QuadratureSpec quad = config.quadrature();
    for (double s : config.s_values) {
        const FractionalOrder order(s);
        const double kap = config.kappa_override
                               ? *config.kappa_override
                               : kappa(order, config.a2, config.a3);
        for (double mu : config.mu_values) {
            const WaveProfile profile = config_profile(config, mu);
            const ResidualReport report = scaled_residual_at_LT(profile, order, kap, quad);
            table.rows.push_back({format_sci(s), format_sci(mu), format_sci(kap),
                                  format_sci(report.total), format_sci(report.term_boundary),
                                  format_sci(report.term_double),
                                  format_sci(report.term_diffusion)});
        }
    }
    return table;
}

Table run_study(const StudyConfig& config) {
    switch (config.study) {
        case StudyKind::geometry: return run_geometry(config);
        case StudyKind::epsilon_sweep: return run_epsilon_sweep(config);
        case StudyKind::superpose_convergence: return run_superpose_convergence(config);
        case StudyKind::caputo_check: return run_caputo_check(config);
        case StudyKind::residual_sweep: return run_residual_sweep(config);
        case StudyKind::verify_pde: return run_verify_pde(config);
    }
    throw ConfigError("unknown study kind");
}

void write_table(const Table& table, const std::string& output_path) {
    const std::string text = emit_csv(table);
    if (output_path.empty()) {
        std::cout << text;
        if (!std::cout) throw IoError("failed to write to standard output");
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + output_path);
    out << text;
    out.flush();
    if (!out) throw IoError("failed to write output file: " + output_path);
}

}  // namespace fracwave
