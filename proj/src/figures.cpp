#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "entdyn/sweep.hpp"

namespace entdyn {

namespace {

// One named curve sampled over (a2, t); surfaces keep a2 varying, line
// figures pin it.
struct Curve {
    std::string label;
    SweepSpec spec;
    std::string column = "pi";
};

struct FigurePlan {
    std::vector<Curve> curves;
    bool surface = false;
};

SweepSpec ghz_sweep(GhzFamily family, double ratio, double t_max, std::optional<ParamGrid> grid,
                    double a2 = 0.5) {
    SweepSpec s;
    s.state = GhzSpec::from_a2(family, a2);
    s.reservoir = ReservoirParams::from_ratio(ratio);
    s.time_grid = {t_max, 501};
    s.param_grid = grid;
    return s;
}

SweepSpec w_sweep(WFamily family, double ratio, double t_max, std::optional<ParamGrid> grid,
                  double a2 = 1.0 / 3.0, double c2 = 1.0 / 3.0) {
    SweepSpec s;
    s.state = WSpec::from_squares(family, a2, 1.0 - a2 - c2, c2);
    s.reservoir = ReservoirParams::from_ratio(ratio);
    s.time_grid = {t_max, 501};
    s.param_grid = grid;
    return s;
}

FigurePlan figure_plan(const std::string& id) {
    const ParamGrid full_a2{0.0, 1.0, 51};       // step 0.02
    const ParamGrid w_a2{0.0, 2.0 / 3.0, 34};    // c^2 = 1/3 leaves a^2 <= 2/3

    FigurePlan plan;
    if (id == "1a") {
        plan.surface = true;
        plan.curves.push_back({"pi_ghz1", ghz_sweep(GhzFamily::I, 3.0, 5.0, full_a2)});
    } else if (id == "1b") {
        plan.surface = true;
        plan.curves.push_back({"pi_ghz1", ghz_sweep(GhzFamily::I, 0.01, 50.0, full_a2)});
    } else if (id == "2a") {
        plan.surface = true;
        plan.curves.push_back({"pi_ghz2", ghz_sweep(GhzFamily::II, 0.01, 50.0, full_a2)});
    } else if (id == "2b") {
        plan.surface = true;
        plan.curves.push_back({"pi_ghz3", ghz_sweep(GhzFamily::III, 0.01, 50.0, full_a2)});
    } else if (id == "3a" || id == "3b") {
        const double a2 = id == "3a" ? 0.1 : 0.9;
        plan.curves.push_back({"pi_ghz1", ghz_sweep(GhzFamily::I, 0.001, 150.0, std::nullopt, a2)});
        plan.curves.push_back({"pi_ghz2", ghz_sweep(GhzFamily::II, 0.001, 150.0, std::nullopt, a2)});
        plan.curves.push_back({"pi_ghz3", ghz_sweep(GhzFamily::III, 0.001, 150.0, std::nullopt, a2)});
    } else if (id == "4") {
        plan.curves.push_back({"pi_w1", w_sweep(WFamily::W1, 3.0, 5.0, std::nullopt)});
        plan.curves.push_back({"pi_w2", w_sweep(WFamily::W2, 3.0, 5.0, std::nullopt)});
    } else if (id == "5a") {
        plan.surface = true;
        plan.curves.push_back({"pi_w1", w_sweep(WFamily::W1, 0.01, 50.0, w_a2)});
    } else if (id == "5b") {
        plan.curves.push_back({"pi_w1", w_sweep(WFamily::W1, 0.001, 150.0, std::nullopt)});
        plan.curves.push_back({"pi_w2", w_sweep(WFamily::W2, 0.001, 150.0, std::nullopt)});
    } else if (id == "6a") {
        plan.curves.push_back({"c_w1", w_sweep(WFamily::W1, 3.0, 5.0, std::nullopt), "c_ab"});
        plan.curves.push_back({"c_w2", w_sweep(WFamily::W2, 3.0, 5.0, std::nullopt), "c_ab"});
    } else if (id == "6b") {
        plan.curves.push_back({"c_w1", w_sweep(WFamily::W1, 0.01, 50.0, std::nullopt), "c_ab"});
        plan.curves.push_back({"c_w2", w_sweep(WFamily::W2, 0.01, 50.0, std::nullopt), "c_ab"});
    } else {
        throw std::invalid_argument("reproduce_figure: unknown figure id: " + id);
    }
    return plan;
}

size_t column_index(const ResultTable& t, const std::string& name) {
    for (size_t c = 0; c < t.columns.size(); ++c)
        if (t.columns[c] == name) return c;
    throw std::logic_error("figure: missing column " + name);
}

}  // namespace

std::vector<std::string> reproduce_figure(const std::string& id, const std::string& out_dir) {
    const FigurePlan plan = figure_plan(id);
    std::filesystem::create_directories(out_dir);
    const std::string wide_path = out_dir + "/figure_" + id + ".csv";
    const std::string long_path = out_dir + "/figure_" + id + "_long.csv";

    std::vector<ResultTable> tables;
    tables.reserve(plan.curves.size());
    for (const Curve& c : plan.curves) tables.push_back(run_sweep(c.spec));

    if (plan.surface) {
        emit(tables.front(), EmitFormat::csv, wide_path);
    } else {
        // Line figures share the time grid; wide form is one column per curve.
        ResultTable wide;
        wide.add_column("gamma0_t");
        for (const Curve& c : plan.curves) wide.add_column(c.label);
        const size_t tcol = column_index(tables.front(), "gamma0_t");
        std::vector<size_t> vcols;
        for (size_t k = 0; k < plan.curves.size(); ++k)
            vcols.push_back(column_index(tables[k], plan.curves[k].column));
        std::vector<double> row(1 + plan.curves.size());
        for (size_t r = 0; r < tables.front().rows(); ++r) {
            row[0] = tables.front().values[tcol][r];
            for (size_t k = 0; k < plan.curves.size(); ++k) row[1 + k] = tables[k].values[vcols[k]][r];
            wide.push_row(row);
        }
        emit(wide, EmitFormat::csv, wide_path);
    }

    std::ofstream out(long_path, std::ios::binary);
    if (!out) throw std::runtime_error("reproduce_figure: cannot open for writing: " + long_path);
    out << "curve,a2,gamma0_t,value\n";
    for (size_t k = 0; k < plan.curves.size(); ++k) {
        const ResultTable& t = tables[k];
        const size_t pcol = column_index(t, "a2");
        const size_t tcol = column_index(t, "gamma0_t");
        const size_t vcol = column_index(t, plan.curves[k].column);
        for (size_t r = 0; r < t.rows(); ++r)
            out << plan.curves[k].label << ',' << format_double(t.values[pcol][r]) << ','
                << format_double(t.values[tcol][r]) << ',' << format_double(t.values[vcol][r])
                << '\n';
    }
    out.flush();
    if (!out) throw std::runtime_error("reproduce_figure: write failed: " + long_path);
    return {wide_path, long_path};
}

}  // namespace entdyn
