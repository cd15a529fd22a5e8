#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "contourint/complexfn.hpp"
#include "contourint/quadrature.hpp"
#include "contourint/verify.hpp"

namespace {

using namespace contourint;
constexpr double pi = std::numbers::pi;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

int write_output(const std::string& text, const std::string& out_file) {
    if (out_file.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream os(out_file, std::ios::binary);
    if (!os) {
        std::cerr << "cannot open output file: " << out_file << "\n";
        return 1;
    }
    os << text;
    return 0;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream os;
    for (const auto& c : report.checks) {
        os << (c.passed ? "PASS" : "FAIL") << "  " << c.name
           << "  residual=" << fmt17(c.residual)
           << "  tolerance=" << fmt17(c.tolerance)
           << "  wall_time_ms=" << c.wall_time_ms << "\n";
    }
    os << (report.all_passed ? "ALL PASSED" : "FAILURES PRESENT") << "\n";
    return os.str();
}

std::string report_csv(const VerificationReport& report) {
    std::ostringstream os;
    os << "name,residual,tolerance,passed,wall_time_ms\n";
    for (const auto& c : report.checks) {
        os << c.name << "," << fmt17(c.residual) << "," << fmt17(c.tolerance) << ","
           << (c.passed ? "true" : "false") << "," << c.wall_time_ms << "\n";
    }
    return os.str();
}

struct CommonOpts {
    std::vector<double> radii;
    std::vector<double> epsilons;
    double tol = 1e-12;
    int samples = 200;
    unsigned long long seed = 42;

    VerifyConfig to_config() const {
        VerifyConfig cfg;
        if (!radii.empty()) cfg.R_values = radii;
        if (!epsilons.empty()) cfg.eps_values = epsilons;
        cfg.tol = {tol, tol};
        cfg.n_samples = samples;
        cfg.seed = seed;
        return cfg;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

int run_sample(const std::string& function, const std::string& grid,
               const std::string& out_file) {
    std::vector<Complex> points;
    const auto parts = split(grid, ':');
    try {
        if (parts.size() == 3) {
            const double start = std::stod(parts[0]);
            const double stop = std::stod(parts[1]);
            const long count = std::stol(parts[2]);
            if (count < 1) throw std::invalid_argument("count");
            for (long k = 0; k < count; ++k) {
                const double x =
                    count == 1 ? start : start + (stop - start) * k / double(count - 1);
                points.emplace_back(x, 0.0);
            }
        } else if (parts.size() == 5) {
            const double re0 = std::stod(parts[0]), re1 = std::stod(parts[1]);
            const double im0 = std::stod(parts[2]), im1 = std::stod(parts[3]);
            const long n = std::stol(parts[4]);
            if (n < 1) throw std::invalid_argument("count");
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b) {
                    const double re =
                        n == 1 ? re0 : re0 + (re1 - re0) * a / double(n - 1);
                    const double im =
                        n == 1 ? im0 : im0 + (im1 - im0) * b / double(n - 1);
                    points.emplace_back(re, im);
                }
        } else {
            throw std::invalid_argument("field count");
        }
    } catch (const std::exception&) {
        std::cerr << "bad --grid spec: expected start:stop:count or "
                     "re0:re1:im0:im1:n\n";
        return 2;
    }

    std::ostringstream os;
    os << "re,im,value_re,value_im,method,trunc_bound,error\n";
    for (const Complex z : points) {
        os << fmt17(z.real()) << "," << fmt17(z.imag()) << ",";
        try {
            if (function == "f") {
                const FEval fe = f_eval(z);
                os << fmt17(fe.value.real()) << "," << fmt17(fe.value.imag()) << ","
                   << region_name(fe.method) << "," << fmt17(fe.trunc_bound) << ",\n";
            } else if (function == "G") {
                const Complex g = G_eval(z);
                os << fmt17(g.real()) << "," << fmt17(g.imag()) << ","
                   << region_name(classify_region(z)) << ",,\n";
            } else {  // integrand
                if (z.imag() != 0.0) throw DomainError("integrand needs real x");
                os << fmt17(real_integrand(z.real())) << ",0,,,\n";
            }
        } catch (const std::exception& e) {
            os << ",,,," << e.what() << "\n";
        }
    }
    return write_output(os.str(), out_file);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical certification of the arctan/arctanh contour integral "
                 "identity"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::vector<std::string> selected_checks;
    std::string format = "text";
    std::string out_file;
    std::string method = "direct";
    std::string function = "integrand";
    std::string grid = "0:0.999:100";
    bool timings = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--radius", opts.radii, "Outer radius R (repeatable)");
        cmd->add_option("--epsilon", opts.epsilons, "Detour radius eps (repeatable)");
        cmd->add_option("--tol", opts.tol, "Quadrature tolerance");
        cmd->add_option("--samples", opts.samples, "Sampling count");
        cmd->add_option("--seed", opts.seed, "PRNG seed");
        cmd->add_option("--out", out_file, "Write output to FILE instead of stdout");
    };

    CLI::App* verify_cmd = app.add_subcommand("verify", "Run verification checks");
    add_common(verify_cmd);
    verify_cmd->add_option("--check", selected_checks,
                           "Run only the named check (repeatable)");
    verify_cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    verify_cmd->add_flag("--timings", timings,
                         "Include measured wall times in JSON output");

    CLI::App* integral_cmd =
        app.add_subcommand("integral", "Compute the target integral");
    add_common(integral_cmd);
    integral_cmd->add_option("--method", method, "Evaluation route")
        ->check(CLI::IsMember({"direct", "complex"}));

    CLI::App* sample_cmd = app.add_subcommand("sample", "Export evaluation grids");
    add_common(sample_cmd);
    sample_cmd->add_option("--function", function, "Function to sample")
        ->check(CLI::IsMember({"f", "G", "integrand"}));
    sample_cmd->add_option("--grid", grid,
                           "start:stop:count (real) or re0:re1:im0:im1:n (complex)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (verify_cmd->parsed()) {
            const VerifyConfig cfg = opts.to_config();
            for (const auto& name : selected_checks) {
                const auto& names = check_names();
                if (std::find(names.begin(), names.end(), name) == names.end()) {
                    std::cerr << "unknown check: " << name << "\n";
                    return 2;
                }
            }
            const VerificationReport report =
                selected_checks.empty() ? run_all(cfg)
                                        : run_subset(selected_checks, cfg);
            std::string text;
            if (format == "json")
                text = report_to_json(report, timings).dump(2) + "\n";
            else if (format == "csv")
                text = report_csv(report);
            else
                text = report_text(report);
            const int rc = write_output(text, out_file);
            if (rc != 0) return rc;
            return report.all_passed ? 0 : 1;
        }

        if (integral_cmd->parsed()) {
            const VerifyConfig cfg = opts.to_config();
            QuadResult q;
            if (method == "direct") {
                q = tanh_sinh([](double x) {
                    return Complex{real_integrand(x), 0.0};
                }, cfg.tol);
            } else {
                q = tanh_sinh([](double x) {
                    if (x < 1.0 - 1e-6) return G_eval(Complex{x, 0.0});
                    const double f = (std::atanh(x) - std::atan(x)) / pi;
                    return std::log(Complex{1.0 + f, f}) / x;
                }, cfg.tol);
            }
            const double value = method == "direct" ? q.value.real() : q.value.imag();
            const double target = pi / 8.0 * std::log(pi * pi / 8.0);
            std::ostringstream os;
            os << "method      " << method << "\n"
               << "value       " << fmt17(value) << "\n"
               << "closed_form " << fmt17(target) << "\n"
               << "difference  " << fmt17(value - target) << "\n"
               << "n_evals     " << q.n_evals << "\n";
            return write_output(os.str(), out_file);
        }

        if (sample_cmd->parsed()) return run_sample(function, grid, out_file);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
