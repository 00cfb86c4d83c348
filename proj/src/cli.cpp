#include "fracol/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fracol/error.hpp"
#include "fracol/problems.hpp"
#include "fracol/quadrature.hpp"
#include "fracol/solver.hpp"

namespace fracol::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

std::string fixed17(double v) {
    if (std::isnan(v)) {
        return "nan";
    }
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

std::string shortest(double v) {
    std::array<char, 40> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

nlohmann::json json_number(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

struct ProblemOptions {
    std::optional<int> example;
    std::optional<double> alpha;
    std::optional<double> T;
    std::optional<std::string> a, b, f, exact;

    void attach(CLI::App& app) {
        app.add_option("--example", example, "Built-in benchmark problem")->check(CLI::IsMember({1, 2, 3}));
        app.add_option("--alpha", alpha, "Fractional order in (0,1)");
        app.add_option("--T", T, "Right end of the interval [0,T]");
        app.add_option("--a", a, "Coefficient a(t) as an expression in t");
        app.add_option("--b", b, "Coefficient b(t)");
        app.add_option("--f", f, "Forcing term f(t)");
        app.add_option("--exact", exact, "Exact solution y(t), if known");
    }

    ProblemSpec build() const {
        const bool any_custom = alpha || T || a || b || f || exact;
        if (example) {
            if (any_custom) {
                throw UsageError("--example cannot be combined with --alpha/--T/--a/--b/--f/--exact");
            }
            return builtin(*example);
        }
        if (!(alpha && T && a && b && f)) {
            throw UsageError("give either --example or all of --alpha --T --a --b --f");
        }
        return expression_problem(*alpha, *T, *a, *b, *f, exact);
    }

    nlohmann::json describe(const ProblemSpec& p) const {
        nlohmann::json j;
        if (example) {
            j["example"] = *example;
        } else {
            j["a"] = *a;
            j["b"] = *b;
            j["f"] = *f;
            j["exact"] = exact ? nlohmann::json(*exact) : nlohmann::json(nullptr);
        }
        j["alpha"] = p.alpha;
        j["T"] = p.T;
        return j;
    }
};

struct OutputOptions {
    std::string format = "csv";
    std::string output;

    void attach(CLI::App& app) {
        app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        app.add_option("--output", output, "Output path (default: standard output)");
    }

    void emit(const std::string& payload, std::ostream& out) const {
        if (output.empty()) {
            out << payload;
            return;
        }
        std::ofstream file(output, std::ios::binary);
        if (!file) {
            throw UsageError("cannot open output file '" + output + "'");
        }
        file << payload;
        if (!file) {
            throw UsageError("failed writing output file '" + output + "'");
        }
    }
};

std::vector<double> parse_points(const std::string& spec, double T) {
    auto fields = CLI::detail::split(spec, ':');
    if (fields.size() != 3) {
        throw UsageError("--points expects lo:hi:step, got '" + spec + "'");
    }
    std::array<double, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& s = fields[i];
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v[i]);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            throw UsageError("--points: cannot read number '" + s + "'");
        }
    }
    const auto [lo, hi, step] = v;
    if (!(step > 0.0) || !(hi >= lo)) {
        throw UsageError("--points needs lo <= hi and step > 0");
    }
    if (lo < 0.0 || hi > T * (1.0 + 1e-12)) {
        throw UsageError("--points must lie inside [0, T]");
    }
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 1000000) {
        throw UsageError("--points describes more than 10^6 points");
    }
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (long k = 0; k < count; ++k) {
        // Round to 12 significant digits so 0:1:0.1 yields 0.3, not 0.30000000000000004.
        std::array<char, 40> buf{};
        std::snprintf(buf.data(), buf.size(), "%.12g", lo + static_cast<double>(k) * step);
        pts.push_back(std::min(std::strtod(buf.data(), nullptr), T));
    }
    return pts;
}

std::string default_points(double T) {
    return "0:" + shortest(T) + ":" + shortest(T / 10.0);
}

std::string render_solution(const std::string& command, const ProblemOptions& popts, const ProblemSpec& p,
                            int N, const std::vector<double>& pts, const std::string& format) {
    const auto sol = solve(p, N);
    struct Row {
        double t, approx;
        std::optional<double> exact;
    };
    std::vector<Row> rows;
    rows.reserve(pts.size());
    for (double t : pts) {
        Row r{t, eval_solution(sol, t), std::nullopt};
        if (p.exact) {
            r.exact = (*p.exact)(t);
        }
        rows.push_back(r);
    }

    if (format == "json") {
        nlohmann::json j;
        j["command"] = command;
        j["metadata"] = popts.describe(p);
        j["metadata"]["N"] = N;
        j["metadata"]["timestamp"] = utc_timestamp();
        j["metadata"]["condition_estimate"] = json_number(sol.condition_estimate.value_or(std::nan("")));
        j["rows"] = nlohmann::json::array();
        for (const auto& r : rows) {
            nlohmann::json row{{"t", r.t}, {"approx", json_number(r.approx)}};
            row["exact"] = r.exact ? json_number(*r.exact) : nlohmann::json(nullptr);
            row["abs_error"] = r.exact ? json_number(std::abs(r.approx - *r.exact)) : nlohmann::json(nullptr);
            j["rows"].push_back(std::move(row));
        }
        return j.dump(2) + "\n";
    }
    std::string csv = "t,approx,exact,abs_error\n";
    for (const auto& r : rows) {
        csv += shortest(r.t) + "," + fixed17(r.approx) + ",";
        if (r.exact) {
            csv += fixed17(*r.exact) + "," + fixed17(std::abs(r.approx - *r.exact));
        } else {
            csv += ",";
        }
        csv += "\n";
    }
    return csv;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Legendre spectral-collocation solver for second-kind fractional integral equations"};
    app.require_subcommand(1);

    ProblemOptions solve_problem, table_problem, conv_problem;
    OutputOptions solve_out, table_out, conv_out, quad_out;
    int solve_N = 16, table_N = 10;
    std::string solve_points, table_points;
    int n_min = 2, n_max = 24, n_step = 1;
    std::string family = "lgl";
    int quad_N = 4;
    double q1 = 0.0, q2 = 0.0;

    auto* solve_cmd = app.add_subcommand("solve", "Solve a problem and print its values on a grid");
    solve_problem.attach(*solve_cmd);
    solve_out.attach(*solve_cmd);
    solve_cmd->add_option("--N", solve_N, "Polynomial degree")->check(CLI::Range(1, 400));
    solve_cmd->add_option("--points", solve_points, "Evaluation grid lo:hi:step");

    auto* table_cmd = app.add_subcommand("table", "Approximate versus exact values on a grid");
    table_problem.attach(*table_cmd);
    table_out.attach(*table_cmd);
    table_cmd->add_option("--N", table_N, "Polynomial degree")->check(CLI::Range(1, 400));
    table_cmd->add_option("--points", table_points, "Evaluation grid lo:hi:step");

    auto* conv_cmd = app.add_subcommand("convergence", "Error norms versus N");
    conv_problem.attach(*conv_cmd);
    conv_out.attach(*conv_cmd);
    conv_cmd->add_option("--N-min", n_min, "Smallest N")->check(CLI::Range(1, 400));
    conv_cmd->add_option("--N-max", n_max, "Largest N")->check(CLI::Range(1, 400));
    conv_cmd->add_option("--N-step", n_step, "Increment of N")->check(CLI::Range(1, 400));

    auto* quad_cmd = app.add_subcommand("quad", "Dump a quadrature rule");
    quad_out.attach(*quad_cmd);
    quad_cmd->add_option("--family", family, "gl, lgl or gj")->check(CLI::IsMember({"gl", "lgl", "gj"}));
    quad_cmd->add_option("--N", quad_N, "Point count (gl, gj) or degree N with N+1 points (lgl)")
        ->check(CLI::Range(1, 4096));
    quad_cmd->add_option("--q1", q1, "Jacobi exponent of (1-x)");
    quad_cmd->add_option("--q2", q2, "Jacobi exponent of (1+x)");

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("fracol");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) {
        argv.push_back(s.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (solve_cmd->parsed() || table_cmd->parsed()) {
            const bool is_table = table_cmd->parsed();
            const auto& popts = is_table ? table_problem : solve_problem;
            const auto& oopts = is_table ? table_out : solve_out;
            const auto p = popts.build();
            if (is_table && !p.exact) {
                throw UsageError("table needs an exact solution (--example or --exact)");
            }
            const auto& points_spec = is_table ? table_points : solve_points;
            const auto pts = parse_points(points_spec.empty() ? default_points(p.T) : points_spec, p.T);
            oopts.emit(render_solution(is_table ? "table" : "solve", popts, p, is_table ? table_N : solve_N, pts,
                                       oopts.format),
                       out);
        } else if (conv_cmd->parsed()) {
            const auto p = conv_problem.build();
            if (!p.exact) {
                throw UsageError("convergence needs an exact solution (--example or --exact)");
            }
            if (n_min > n_max) {
                throw UsageError("--N-min must not exceed --N-max");
            }
            std::vector<int> Ns;
            for (int N = n_min; N <= n_max; N += n_step) {
                Ns.push_back(N);
            }
            const auto report = convergence_study(p, Ns);
            for (const auto& r : report.records) {
                if (r.failure) {
                    err << "warning: N=" << r.N << " failed: " << *r.failure << "\n";
                }
            }
            if (conv_out.format == "json") {
                nlohmann::json j;
                j["command"] = "convergence";
                j["metadata"] = conv_problem.describe(p);
                j["metadata"]["timestamp"] = utc_timestamp();
                j["slope"] = report.slope ? nlohmann::json(*report.slope) : nlohmann::json(nullptr);
                j["rows"] = nlohmann::json::array();
                for (const auto& r : report.records) {
                    j["rows"].push_back({{"N", r.N},
                                         {"l2_error", json_number(r.l2_error)},
                                         {"linf_error", json_number(r.linf_error)},
                                         {"cond_estimate", json_number(r.condition_estimate)}});
                }
                conv_out.emit(j.dump(2) + "\n", out);
            } else {
                std::string csv = "N,l2_error,linf_error,cond_estimate\n";
                for (const auto& r : report.records) {
                    csv += std::to_string(r.N) + "," + fixed17(r.l2_error) + "," + fixed17(r.linf_error) + "," +
                           fixed17(r.condition_estimate) + "\n";
                }
                conv_out.emit(csv, out);
            }
            const bool any_failed = std::any_of(report.records.begin(), report.records.end(),
                                                [](const ConvergenceRecord& r) { return r.failure.has_value(); });
            if (any_failed) {
                return kNumerical;
            }
        } else if (quad_cmd->parsed()) {
            QuadratureRule rule;
            if (family == "gl") {
                rule = gauss_legendre(quad_N);
            } else if (family == "lgl") {
                rule = gauss_lobatto_legendre(quad_N);
            } else {
                rule = gauss_jacobi(quad_N, q1, q2);
            }
            if (quad_out.format == "json") {
                nlohmann::json j;
                j["command"] = "quad";
                j["metadata"] = {{"family", family}, {"N", quad_N}, {"q1", q1}, {"q2", q2},
                                 {"timestamp", utc_timestamp()}};
                j["rows"] = nlohmann::json::array();
                for (std::size_t i = 0; i < rule.size(); ++i) {
                    j["rows"].push_back({{"index", i}, {"node", rule.nodes[i]}, {"weight", rule.weights[i]}});
                }
                quad_out.emit(j.dump(2) + "\n", out);
            } else {
                std::string csv = "index,node,weight\n";
                for (std::size_t i = 0; i < rule.size(); ++i) {
                    csv += std::to_string(i) + "," + fixed17(rule.nodes[i]) + "," + fixed17(rule.weights[i]) + "\n";
                }
                quad_out.emit(csv, out);
            }
        }
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kNumerical;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal failure: " << e.what() << "\n";
        return kNumerical;
    }
    return kOk;
}

} // namespace fracol::cli
