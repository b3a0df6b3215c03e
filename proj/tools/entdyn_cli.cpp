// Command-line front end: evolve a single state, sweep a parameter grid,
// reproduce the figure data, or run the closed-form-vs-numeric audit.
//
// Exit codes: 0 success, 1 audit violation, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "entdyn/sweep.hpp"

namespace {

using entdyn::EmitFormat;
using entdyn::GhzFamily;
using entdyn::GhzSpec;
using entdyn::MixtureSpec;
using entdyn::ParamGrid;
using entdyn::ReservoirParams;
using entdyn::ResultTable;
using entdyn::StateSpec;
using entdyn::SweepSpec;
using entdyn::WFamily;
using entdyn::WSpec;

struct StateFlags {
    std::string family;
    std::optional<double> a2, b2, c2, delta, delta2, p;
};

struct GridFlags {
    std::optional<double> min, max;
    std::optional<int> count;
};

struct CommonFlags {
    StateFlags state;
    GridFlags grid;
    std::optional<double> lambda_ratio, tmax;
    std::optional<int> steps, threads;
    std::string format = "csv";
    std::string out;
    std::string config;
};

void overlay_config(const std::string& path, CommonFlags& f) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    in >> j;

    // Flags win on conflict, so the config only fills what is still unset.
    auto fill = [](auto& slot, const nlohmann::json& obj, const char* key) {
        if (!slot && obj.contains(key)) slot = obj.at(key).template get<typename std::decay_t<decltype(slot)>::value_type>();
    };
    if (j.contains("state")) {
        const auto& s = j.at("state");
        if (f.state.family.empty() && s.contains("family")) f.state.family = s.at("family").get<std::string>();
        fill(f.state.a2, s, "a2");
        fill(f.state.b2, s, "b2");
        fill(f.state.c2, s, "c2");
        fill(f.state.delta, s, "delta");
        fill(f.state.delta2, s, "delta2");
        fill(f.state.p, s, "p");
    }
    if (j.contains("reservoir")) fill(f.lambda_ratio, j.at("reservoir"), "lambda_ratio");
    if (j.contains("time_grid")) {
        fill(f.tmax, j.at("time_grid"), "t_max");
        fill(f.steps, j.at("time_grid"), "steps");
    }
    if (j.contains("param_grid")) {
        fill(f.grid.min, j.at("param_grid"), "min");
        fill(f.grid.max, j.at("param_grid"), "max");
        fill(f.grid.count, j.at("param_grid"), "count");
    }
    fill(f.threads, j, "threads");
}

StateSpec build_state(const StateFlags& s) {
    const std::string fam = s.family.empty() ? "ghz1" : s.family;
    auto ghz = [&](GhzFamily family) {
        return GhzSpec::from_a2(family, s.a2.value_or(0.5), s.delta.value_or(0.0));
    };
    auto w = [&](WFamily family) {
        double a2 = s.a2.value_or(1.0 / 3.0);
        double b2, c2;
        if (s.b2 && s.c2) {
            b2 = *s.b2;
            c2 = *s.c2;
        } else if (s.b2) {
            b2 = *s.b2;
            c2 = 1.0 - a2 - b2;
        } else if (s.c2) {
            c2 = *s.c2;
            b2 = 1.0 - a2 - c2;
        } else if (s.a2) {
            b2 = c2 = (1.0 - a2) / 2.0;
        } else {
            b2 = c2 = 1.0 / 3.0;
        }
        return WSpec::from_squares(family, a2, b2, c2, s.delta.value_or(0.0), s.delta2.value_or(0.0));
    };
    if (fam == "ghz1") return ghz(GhzFamily::I);
    if (fam == "ghz2") return ghz(GhzFamily::II);
    if (fam == "ghz3") return ghz(GhzFamily::III);
    if (fam == "ghz4") return ghz(GhzFamily::IV);
    if (fam == "w1") return w(WFamily::W1);
    if (fam == "w2") return w(WFamily::W2);
    if (fam == "mixture") return MixtureSpec{s.p.value_or(1.0)};
    throw std::invalid_argument("unknown state family: " + fam +
                                " (expected ghz1..ghz4, w1, w2 or mixture)");
}

SweepSpec build_sweep(const CommonFlags& f, bool allow_grid) {
    SweepSpec spec;
    spec.state = build_state(f.state);
    spec.reservoir = ReservoirParams::from_ratio(f.lambda_ratio.value_or(3.0));
    spec.time_grid = {f.tmax.value_or(5.0), f.steps.value_or(501)};
    spec.threads = f.threads.value_or(1);
    const bool has_grid = f.grid.min || f.grid.max || f.grid.count;
    if (has_grid) {
        if (!allow_grid)
            throw std::invalid_argument("evolve runs a single state; use `sweep` for parameter grids");
        spec.param_grid = ParamGrid{f.grid.min.value_or(0.0), f.grid.max.value_or(1.0),
                                    f.grid.count.value_or(51)};
    }
    return spec;
}

void write_table(const ResultTable& table, const CommonFlags& f) {
    const EmitFormat format = f.format == "json" ? EmitFormat::json : EmitFormat::csv;
    if (f.out.empty()) {
        std::cout << (format == EmitFormat::csv ? entdyn::to_csv(table) : entdyn::to_json(table));
    } else {
        entdyn::emit(table, format, f.out);
        std::cerr << "wrote " << f.out << " (" << table.rows() << " rows)\n";
    }
}

void add_common_flags(CLI::App* cmd, CommonFlags& f, bool with_grid) {
    cmd->add_option("--state", f.state.family, "state family: ghz1..ghz4, w1, w2, mixture");
    cmd->add_option("--a2", f.state.a2, "a^2 of the initial state");
    cmd->add_option("--b2", f.state.b2, "b^2 (W families)");
    cmd->add_option("--c2", f.state.c2, "c^2 (W families)");
    cmd->add_option("--delta", f.state.delta, "phase delta (GHZ) / delta1 (W), radians");
    cmd->add_option("--delta2", f.state.delta2, "phase delta2 (W families), radians");
    cmd->add_option("--p", f.state.p, "GHZ weight of the mixture state");
    cmd->add_option("--lambda-ratio", f.lambda_ratio, "lambda / gamma0 (>2 Markovian, <2 non-Markovian)");
    cmd->add_option("--tmax", f.tmax, "time horizon in units of 1/gamma0");
    cmd->add_option("--steps", f.steps, "number of time samples");
    cmd->add_option("--threads", f.threads, "worker threads (results identical for any count)");
    cmd->add_option("--format", f.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out, "output path (stdout when omitted)");
    cmd->add_option("--config", f.config, "JSON config mirroring the sweep spec; flags win");
    if (with_grid) {
        cmd->add_option("--grid-min", f.grid.min, "parameter grid start (a^2, or p for mixture)");
        cmd->add_option("--grid-max", f.grid.max, "parameter grid end");
        cmd->add_option("--grid-count", f.grid.count, "parameter grid point count");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entdyn: three damped qubits, tripartite entanglement dynamics"};
    app.require_subcommand(1);

    CommonFlags evolve_flags, sweep_flags;
    CLI::App* evolve = app.add_subcommand("evolve", "single state over a time grid");
    add_common_flags(evolve, evolve_flags, false);
    CLI::App* sweep = app.add_subcommand("sweep", "parameter grid x time grid");
    add_common_flags(sweep, sweep_flags, true);

    std::string figure_id, figure_dir = ".";
    CLI::App* figure = app.add_subcommand("figure", "reproduce the data behind one figure");
    figure->add_option("id", figure_id, "figure id: 1a 1b 2a 2b 3a 3b 4 5a 5b 6a 6b")->required();
    figure->add_option("--out-dir", figure_dir, "output directory");

    double audit_tol = 1e-9;
    CLI::App* audit = app.add_subcommand("audit", "closed-form vs numeric audit");
    audit->add_option("--tolerance", audit_tol, "max allowed closed-vs-numeric gap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*evolve || *sweep) {
            CommonFlags& f = *evolve ? evolve_flags : sweep_flags;
            if (!f.config.empty()) overlay_config(f.config, f);
            write_table(entdyn::run_sweep(build_sweep(f, static_cast<bool>(*sweep))), f);
        } else if (*figure) {
            for (const std::string& path : entdyn::reproduce_figure(figure_id, figure_dir))
                std::cout << path << "\n";
        } else if (*audit) {
            const entdyn::AuditReport report = entdyn::run_audit(audit_tol);
            std::cout << entdyn::audit_summary(report);
            return report.pass() ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
