// diskfront: wave-front simulation and asymptotics in the unit-disk billiard.
//
//   front             sample the front at one time and export it
//   series            length series over a time grid, with analysis report
//   model             evaluate the closed-form and integral length models
//   density           compare measured vs model front length per annulus
//   stationary-check  validate the oscillatory-integral approximations
//
// CSV is the output contract; --format json mirrors the columns as arrays
// plus a metadata header. --emit-plot writes a gnuplot script next to the
// CSV. Set DISKFRONT_THREADS to bound worker threads.

#include <CLI11.hpp>

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <json.hpp>

#include "diskfront/analysis.hpp"
#include "diskfront/asymptotics.hpp"
#include "diskfront/density.hpp"
#include "diskfront/parallel.hpp"
#include "diskfront/quadrature.hpp"
#include "diskfront/stationary_phase.hpp"
#include "diskfront/wavefront.hpp"

namespace {

constexpr const char* kVersion = "diskfront 1.0.0";
constexpr double kPi = std::numbers::pi;

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    os << contents;
}

struct CommonOpts {
    double a = 0.5;
    double quad_tol = 1e-8;
    std::string output;
    std::string format = "csv";
    bool emit_plot = false;
};

const CLI::Validator SourceRange{
    [](std::string& s) -> std::string {
        try {
            const double v = std::stod(s);
            if (v >= 0.0 && v < 1.0) return {};
        } catch (...) {
        }
        return std::string("a must be in [0,1)");
    },
    "FLOAT in [0,1)"};

void add_common(CLI::App* cmd, CommonOpts& opt, const std::string& default_output,
                double default_a = 0.5, double default_quad_tol = 1e-8) {
    opt.output = default_output;
    opt.a = default_a;
    opt.quad_tol = default_quad_tol;
    cmd->add_option("--a", opt.a, "source distance from the center, in [0,1)")
        ->check(SourceRange)
        ->capture_default_str();
    cmd->add_option("--quad-tol", opt.quad_tol, "absolute quadrature tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--output,-o", opt.output, "output path base")->capture_default_str();
    cmd->add_option("--format", opt.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_flag("--emit-plot", opt.emit_plot, "write a gnuplot script next to the CSV");
    cmd->set_config("--config", "", "flat key=value config file (flags win)");
}

nlohmann::json meta_json(const CommonOpts& opt) {
    return {{"version", kVersion}, {"a", opt.a}, {"quad_tol", opt.quad_tol}};
}

// ---------------------------------------------------------------- front ----

int run_front(const CommonOpts& opt, double t, std::size_t n_alpha) {
    const auto sample = diskfront::front_points(diskfront::Source{opt.a}, t, n_alpha);

    if (opt.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(opt);
        j["meta"]["t"] = t;
        j["meta"]["n_alpha"] = n_alpha;
        auto& alpha = j["alpha"] = nlohmann::json::array();
        auto& x = j["x"] = nlohmann::json::array();
        auto& y = j["y"] = nlohmann::json::array();
        auto& refl = j["reflections"] = nlohmann::json::array();
        for (std::size_t i = 0; i < sample.alphas.size(); ++i) {
            alpha.push_back(sample.alphas[i]);
            x.push_back(sample.states[i].position.x);
            y.push_back(sample.states[i].position.y);
            refl.push_back(sample.states[i].reflections);
        }
        write_file(opt.output + ".json", j.dump(2) + "\n");
        std::cout << opt.output << ".json\n";
        return 0;
    }

    std::ofstream os(opt.output + ".csv", std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + opt.output + ".csv");
    diskfront::write_front_csv(os, sample);
    std::cout << opt.output << ".csv\n";

    if (opt.emit_plot) {
        std::string gp;
        gp += "set size square\nset xrange [-1.05:1.05]\nset yrange [-1.05:1.05]\n";
        gp += "set parametric\nset trange [0:2*pi]\nset datafile separator ','\n";
        gp += "plot cos(t),sin(t) w l lc 'black' notitle, '" + opt.output +
              ".csv' every ::1 u 2:3 w d lc 'blue' notitle\n";
        write_file(opt.output + ".gp", gp);
    }
    return 0;
}

// --------------------------------------------------------------- series ----

int run_series(const CommonOpts& opt, double t_min, double t_max, double dt, int terms) {
    const auto series = diskfront::build_series(opt.a, t_min, t_max, dt, terms, opt.quad_tol);
    const auto report = diskfront::analyze(series);

    if (opt.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(opt);
        j["meta"]["t_min"] = t_min;
        j["meta"]["t_max"] = t_max;
        j["meta"]["dt"] = dt;
        j["meta"]["terms"] = terms;
        j["t"] = series.t_values;
        j["sim"] = series.sim;
        j["model"] = series.model;
        j["lambda_t"] = series.lambda_line;
        j["report"] = {{"period", report.period},
                       {"exponent", report.exponent},
                       {"degenerate_model", report.degenerate_model},
                       {"residual_max", report.residual_max}};
        if (!report.degenerate_model) j["report"]["fit_ratio"] = report.fit_ratio;
        write_file(opt.output + ".json", j.dump(2) + "\n");
        std::cout << opt.output << ".json\n";
        return 0;
    }

    {
        std::ofstream os(opt.output + ".csv", std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + opt.output + ".csv");
        diskfront::write_series_csv(os, series);
    }
    {
        std::ofstream os(opt.output + "_report.txt", std::ios::binary);
        diskfront::write_report(os, report);
    }
    std::cout << opt.output << ".csv\n" << opt.output << "_report.txt\n";

    if (opt.emit_plot) {
        std::string gp;
        gp += "set datafile separator ','\nset key left top\n";
        gp += "plot '" + opt.output + ".csv' every ::1 u 1:2 w l t 'measured', '" + opt.output +
              ".csv' every ::1 u 1:3 w l t 'series model', '" + opt.output +
              ".csv' every ::1 u 1:4 w l t 'slope line'\n";
        write_file(opt.output + ".gp", gp);
    }
    return 0;
}

// ---------------------------------------------------------------- model ----

int run_model(const CommonOpts& opt, double t_min, double t_max, double dt, int terms) {
    std::vector<double> ts;
    for (double t = t_min; t <= t_max + 1e-12; t += dt) ts.push_back(t);
    std::vector<double> series_vals(ts.size()), xi_vals(ts.size()), alpha_vals(ts.size());
    const diskfront::ModelParams params{opt.a, terms, opt.quad_tol};
    diskfront::parallel_for(ts.size(), [&](std::size_t i) {
        series_vals[i] = diskfront::model_length_series(params, ts[i]);
        xi_vals[i] = diskfront::model_length_integral_xi(opt.a, ts[i], opt.quad_tol);
        alpha_vals[i] = diskfront::model_length_integral_alpha(opt.a, ts[i], opt.quad_tol);
    });
    const double slope = diskfront::length_slope(opt.a);

    if (opt.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(opt);
        j["meta"]["t_min"] = t_min;
        j["meta"]["t_max"] = t_max;
        j["meta"]["dt"] = dt;
        j["meta"]["terms"] = terms;
        j["t"] = ts;
        j["series_model"] = series_vals;
        j["integral_xi"] = xi_vals;
        j["integral_alpha"] = alpha_vals;
        write_file(opt.output + ".json", j.dump(2) + "\n");
        std::cout << opt.output << ".json\n";
        return 0;
    }

    std::string csv = "t,series_model,integral_xi,integral_alpha,lambda_t\n";
    for (std::size_t i = 0; i < ts.size(); ++i) {
        csv += fmt(ts[i]) + "," + fmt(series_vals[i]) + "," + fmt(xi_vals[i]) + "," +
               fmt(alpha_vals[i]) + "," + fmt(slope * ts[i]) + "\n";
    }
    write_file(opt.output + ".csv", csv);
    std::cout << opt.output << ".csv\n";
    return 0;
}

// -------------------------------------------------------------- density ----

int run_density(const CommonOpts& opt, double t, double width) {
    const auto rows = diskfront::density_report(diskfront::Source{opt.a}, t, width, opt.quad_tol);

    if (opt.format == "json") {
        nlohmann::json j;
        j["meta"] = meta_json(opt);
        j["meta"]["t"] = t;
        j["meta"]["width"] = width;
        auto& arr = j["annuli"] = nlohmann::json::array();
        for (const auto& r : rows)
            arr.push_back({{"r_lo", r.r_lo},
                           {"r_hi", r.r_hi},
                           {"simulated", r.simulated},
                           {"model", r.model},
                           {"rel_err", r.rel_err}});
        write_file(opt.output + ".json", j.dump(2) + "\n");
        std::cout << opt.output << ".json\n";
        return 0;
    }

    std::ofstream os(opt.output + ".csv", std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + opt.output + ".csv");
    diskfront::write_density_csv(os, rows);
    std::cout << opt.output << ".csv\n";

    if (opt.emit_plot) {
        std::string gp;
        gp += "set datafile separator ','\nset key left top\nset style data histeps\n";
        gp += "plot '" + opt.output + ".csv' every ::1 u 1:3 t 'measured', '" + opt.output +
              ".csv' every ::1 u 1:4 t 'model'\n";
        write_file(opt.output + ".gp", gp);
    }
    return 0;
}

// ----------------------------------------------------- stationary-check ----

diskfront::PhaseProblem circle_problem() {
    diskfront::PhaseProblem p;
    p.lo = 0.0;
    p.hi = 1.0;
    p.periodic = true;
    p.phase = [](double x) { return std::cos(2 * kPi * x); };
    p.phase_deriv = [](double x) { return -2 * kPi * std::sin(2 * kPi * x); };
    p.phase_second_deriv = [](double x) { return -4 * kPi * kPi * std::cos(2 * kPi * x); };
    return p;
}

int run_stationary(const CommonOpts& opt, const std::string& family, double t_max) {
    using diskfront::brute_force;
    using diskfront::leading_term;
    std::string out;
    bool all_ok = true;

    if (family == "bessel" || family == "all") {
        // Antinodes of the first correction term keep the fit clean.
        std::vector<double> ts, errs;
        for (int m : {3, 8, 21, 55, 144}) {
            const double t = kPi / 4 + (m + 0.5) * kPi;
            if (t > t_max && ts.size() >= 3) break;
            ts.push_back(t);
            errs.push_back(std::abs(brute_force(circle_problem(), t, 1e-11) -
                                    leading_term(circle_problem(), t)));
        }
        const double slope = diskfront::log_log_slope(ts, errs);
        const bool ok = slope > -1.7 && slope < -1.3;
        all_ok = all_ok && ok;
        out += std::string(ok ? "PASS" : "FAIL") + " bessel: leading-term error slope " +
               fmt(slope) + " (want [-1.7,-1.3])\n";
    }

    if (family == "fresnel" || family == "all") {
        diskfront::PhaseProblem p;
        p.lo = -1.0;
        p.hi = 1.0;
        p.phase = [](double x) { return 0.5 * x * x; };
        p.phase_deriv = [](double x) { return x; };
        p.phase_second_deriv = [](double) { return 1.0; };
        p.amplitude = [](double x) {
            return std::abs(x) >= 1.0 ? 0.0 : std::exp(1.0 - 1.0 / (1.0 - x * x));
        };
        std::vector<double> ts{50.0, 100.0, 200.0, 400.0}, errs;
        for (double t : ts)
            errs.push_back(std::abs(brute_force(p, t, 1e-12) - leading_term(p, t)));
        const double slope = diskfront::log_log_slope(ts, errs);
        const bool ok = slope > -1.8 && slope < -1.2;
        all_ok = all_ok && ok;
        out += std::string(ok ? "PASS" : "FAIL") + " fresnel: error slope " + fmt(slope) +
               " (want about -1.5)\n";
    }

    if (family == "boundary" || family == "all") {
        diskfront::PhaseProblem p;
        p.lo = 1.0;
        p.hi = 2.0;
        p.phase = [](double x) { return x * x; };
        p.phase_deriv = [](double x) { return 2.0 * x; };
        std::vector<double> ts{100.0, 316.22776601683793, 1000.0}, errs;
        for (double t : ts)
            errs.push_back(std::abs(brute_force(p, t, 1e-12) - diskfront::boundary_term(p, t)));
        const double slope = diskfront::log_log_slope(ts, errs);
        const bool ok = slope > -2.2 && slope < -1.8;
        all_ok = all_ok && ok;
        out += std::string(ok ? "PASS" : "FAIL") + " boundary: error slope " + fmt(slope) +
               " (want [-2.2,-1.8])\n";
    }

    if (family == "chord" || family == "all") {
        auto fam = [&](double lambda) { return diskfront::chord_phase_problem(opt.a, lambda); };
        std::vector<double> ts;
        for (double t = 10.0; t <= t_max + 1e-9; t *= 1.55) ts.push_back(t);
        const std::vector<double> lambdas{0.0, 0.005, 0.01, 0.02, 0.05, 0.1};
        const auto scan = diskfront::uniform_remainder_scan(fam, ts, lambdas, 1e-10);
        const bool ok = scan.max <= 3.0 * scan.median;
        all_ok = all_ok && ok;
        out += std::string(ok ? "PASS" : "FAIL") + " chord: scaled remainder max " +
               fmt(scan.max) + " vs median " + fmt(scan.median) + " (want max <= 3x median)\n";
    }

    if (out.empty()) throw std::runtime_error("unknown family: " + family);
    std::cout << out;
    write_file(opt.output + ".txt", out);
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wave fronts in the unit-disk billiard: simulation, length asymptotics, "
                 "density, and stationary-phase checks."};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    // front
    CommonOpts front_opt;
    double front_t = 10.0;
    std::size_t n_alpha = 100000;
    auto* front = app.add_subcommand("front", "sample the wave front at one time");
    add_common(front, front_opt, "front");
    front->add_option("--t", front_t, "propagation time")->check(CLI::NonNegativeNumber);
    front->add_option("--n-alpha", n_alpha, "number of launch angles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // series
    CommonOpts series_opt;
    double s_tmin = 0.1, s_tmax = 50.0, s_dt = 0.1;
    int s_terms = 10;
    auto* series = app.add_subcommand("series", "length series over a time grid");
    add_common(series, series_opt, "series", 0.5, 1e-6);
    series->add_option("--t-min", s_tmin, "grid start")->capture_default_str();
    series->add_option("--t-max", s_tmax, "grid end")->capture_default_str();
    series->add_option("--dt", s_dt, "grid step")->check(CLI::PositiveNumber)
        ->capture_default_str();
    series->add_option("--terms", s_terms, "oscillation terms in the model")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    // model
    CommonOpts model_opt;
    double m_tmin = 10.0, m_tmax = 50.0, m_dt = 0.5;
    int m_terms = 10;
    auto* model = app.add_subcommand("model", "evaluate the length models only");
    add_common(model, model_opt, "model");
    model->add_option("--t-min", m_tmin, "grid start")->check(CLI::PositiveNumber)
        ->capture_default_str();
    model->add_option("--t-max", m_tmax, "grid end")->check(CLI::PositiveNumber)
        ->capture_default_str();
    model->add_option("--dt", m_dt, "grid step")->check(CLI::PositiveNumber)
        ->capture_default_str();
    model->add_option("--terms", m_terms, "oscillation terms")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    // density
    CommonOpts density_opt;
    double d_t = 300.0, d_width = 0.1;
    auto* density = app.add_subcommand("density", "front density per annulus");
    add_common(density, density_opt, "density", 0.5, 1e-6);
    density->add_option("--t", d_t, "propagation time")->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    density->add_option("--width", d_width, "annulus width")->check(CLI::PositiveNumber)
        ->capture_default_str();

    // stationary-check
    CommonOpts st_opt;
    std::string st_family = "all";
    double st_t = 200.0;
    auto* st = app.add_subcommand("stationary-check", "oscillatory-integral validation suites");
    add_common(st, st_opt, "stationary", 0.3);
    st->add_option("--family", st_family, "bessel, fresnel, boundary, chord, or all")
        ->check(CLI::IsMember({"bessel", "fresnel", "boundary", "chord", "all"}))
        ->capture_default_str();
    st->add_option("--t", st_t, "largest scan time")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try {
        if (front->parsed()) return run_front(front_opt, front_t, n_alpha);
        if (series->parsed()) return run_series(series_opt, s_tmin, s_tmax, s_dt, s_terms);
        if (model->parsed()) return run_model(model_opt, m_tmin, m_tmax, m_dt, m_terms);
        if (density->parsed()) return run_density(density_opt, d_t, d_width);
        if (st->parsed()) {
            if (!(st_t > 0.0)) throw std::invalid_argument("t must be positive");
            return run_stationary(st_opt, st_family, st_t);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
