#include "entdyn/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "entdyn/catalog.hpp"
#include "entdyn/channel.hpp"
#include "entdyn/measures.hpp"

namespace entdyn {

namespace {

constexpr double kSymmetricTol = 1e-9;

std::string family_name(const StateSpec& state) {
    if (const auto* g = std::get_if<GhzSpec>(&state)) {
        switch (g->family) {
            case GhzFamily::I: return "ghz1";
            case GhzFamily::II: return "ghz2";
            case GhzFamily::III: return "ghz3";
            case GhzFamily::IV: return "ghz4";
        }
    }
    if (const auto* w = std::get_if<WSpec>(&state))
        return w->family == WFamily::W1 ? "w1" : "w2";
    return "mixture";
}

bool w_symmetric(const WSpec& w) {
    return std::abs(w.a * w.a - 1.0 / 3.0) < kSymmetricTol &&
           std::abs(w.b * w.b - 1.0 / 3.0) < kSymmetricTol &&
           std::abs(w.c * w.c - 1.0 / 3.0) < kSymmetricTol;
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// The swept parameter is a^2 for the GHZ and W families (W holds c^2 fixed)
// and p for the mixture.
StateSpec state_at(const StateSpec& base, double param) {
    if (const auto* g = std::get_if<GhzSpec>(&base))
        return GhzSpec::from_a2(g->family, clamp01(param), g->delta);
    if (const auto* w = std::get_if<WSpec>(&base)) {
        const double c2 = w->c * w->c;
        const double a2 = param;
        const double b2 = 1.0 - a2 - c2;
        if (a2 < -1e-12 || b2 < -1e-9)
            throw std::invalid_argument("run_sweep: a^2 grid leaves no weight for b^2 (a^2 + c^2 > 1)");
        return WSpec::from_squares(w->family, clamp01(a2), clamp01(b2), c2, w->delta1, w->delta2);
    }
    return MixtureSpec{param};
}

double base_param(const StateSpec& state) {
    if (const auto* g = std::get_if<GhzSpec>(&state)) return g->a * g->a;
    if (const auto* w = std::get_if<WSpec>(&state)) return w->a * w->a;
    return std::get<MixtureSpec>(state).p;
}

DensityMatrix make_state(const StateSpec& state) {
    if (const auto* g = std::get_if<GhzSpec>(&state)) return make_ghz(*g);
    if (const auto* w = std::get_if<WSpec>(&state)) return make_w(*w);
    return make_mixture(std::get<MixtureSpec>(state));
}

std::optional<double> closed_pi(const StateSpec& state, Amplitude P) {
    if (const auto* g = std::get_if<GhzSpec>(&state))
        return pi_ghz_closed(g->family, g->a * g->a, P).pi;
    if (const auto* w = std::get_if<WSpec>(&state)) {
        if (w->family == WFamily::W1) return pi_w1_closed(w->a, w->b, w->c, P).pi;
        if (w_symmetric(*w)) return pi_w2_symmetric_closed(P).pi;
    }
    return std::nullopt;
}

bool closed_pi_defined(const SweepSpec& spec) {
    if (std::holds_alternative<GhzSpec>(spec.state)) return true;
    if (const auto* w = std::get_if<WSpec>(&spec.state)) {
        if (w->family == WFamily::W1) return true;
        return !spec.param_grid && w_symmetric(*w);
    }
    return false;
}

void append_metadata(ResultTable& table, const SweepSpec& spec) {
    auto num = [](double v) { return format_double(v); };
    table.metadata.emplace_back("engine", "entdyn");
    table.metadata.emplace_back("engine_version", "1.0.0");
    table.metadata.emplace_back("state", family_name(spec.state));
    if (const auto* g = std::get_if<GhzSpec>(&spec.state)) {
        table.metadata.emplace_back("a2", num(g->a * g->a));
        table.metadata.emplace_back("delta", num(g->delta));
    } else if (const auto* w = std::get_if<WSpec>(&spec.state)) {
        table.metadata.emplace_back("a2", num(w->a * w->a));
        table.metadata.emplace_back("b2", num(w->b * w->b));
        table.metadata.emplace_back("c2", num(w->c * w->c));
        table.metadata.emplace_back("delta1", num(w->delta1));
        table.metadata.emplace_back("delta2", num(w->delta2));
    } else {
        table.metadata.emplace_back("p", num(std::get<MixtureSpec>(spec.state).p));
    }
    table.metadata.emplace_back("lambda_ratio", num(spec.reservoir.lambda / spec.reservoir.gamma0));
    table.metadata.emplace_back("t_max", num(spec.time_grid.t_max));
    table.metadata.emplace_back("steps", std::to_string(spec.time_grid.steps));
    if (spec.param_grid) {
        table.metadata.emplace_back("param_grid_min", num(spec.param_grid->min));
        table.metadata.emplace_back("param_grid_max", num(spec.param_grid->max));
        table.metadata.emplace_back("param_grid_count", std::to_string(spec.param_grid->count));
    }
    table.metadata.emplace_back("gap_tolerance", "1e-09");
}

}  // namespace

ResultTable run_sweep(const SweepSpec& spec) {
    if (spec.time_grid.steps < 2) throw std::invalid_argument("run_sweep: time grid needs at least 2 samples");
    if (!(spec.time_grid.t_max > 0.0)) throw std::invalid_argument("run_sweep: t_max must be positive");
    if (spec.param_grid && spec.param_grid->count < 1)
        throw std::invalid_argument("run_sweep: parameter grid must be nonempty");
    if (spec.threads < 1) throw std::invalid_argument("run_sweep: threads must be >= 1");

    std::vector<double> params;
    if (spec.param_grid) {
        const ParamGrid& g = *spec.param_grid;
        if (g.count == 1) {
            params.push_back(g.min);
        } else {
            for (int i = 0; i < g.count; ++i)
                params.push_back(g.min + (g.max - g.min) * i / (g.count - 1));
        }
    } else {
        params.push_back(base_param(spec.state));
    }

    std::vector<double> times;
    for (int i = 0; i < spec.time_grid.steps; ++i)
        times.push_back(spec.time_grid.t_max * i / (spec.time_grid.steps - 1));

    const bool with_closed = closed_pi_defined(spec);
    const bool is_mixture = std::holds_alternative<MixtureSpec>(spec.state);

    ResultTable table;
    append_metadata(table, spec);
    table.add_column(is_mixture ? "p" : "a2");
    for (const char* name : {"gamma0_t", "P_t", "n_a_bc", "n_b_ac", "n_ab_c", "n_ab", "n_ac",
                             "n_bc", "pi_a", "pi_b", "pi_c", "pi", "c_ab", "c_ac", "c_bc",
                             "ckw_margin"})
        table.add_column(name);
    if (with_closed) {
        table.add_column("closed_pi");
        table.add_column("abs_gap");
    }

    const size_t n_jobs = params.size() * times.size();
    const size_t width = table.columns.size();
    std::vector<std::vector<double>> rows(n_jobs);

    auto worker = [&](size_t begin, size_t end) {
        for (size_t job = begin; job < end; ++job) {
            const double param = params[job / times.size()];
            const double t = times[job % times.size()];
            const StateSpec point = state_at(spec.state, param);
            const Amplitude P = amplitude(t, spec.reservoir);
            const DensityMatrix evolved = evolve_three_direct(make_state(point), P);
            const MeasureReport m = measure_report(evolved);

            std::vector<double>& row = rows[job];
            row.reserve(width);
            row.insert(row.end(), {param, t, P.value});
            row.insert(row.end(), m.one_vs_rest.begin(), m.one_vs_rest.end());
            row.insert(row.end(), m.pairs.begin(), m.pairs.end());
            row.insert(row.end(), m.pi_abc.begin(), m.pi_abc.end());
            row.push_back(m.pi);
            row.insert(row.end(), m.concurrences.begin(), m.concurrences.end());
            row.push_back(m.ckw);
            if (with_closed) {
                const double cp = closed_pi(point, P).value();
                row.push_back(cp);
                row.push_back(std::abs(cp - m.pi));
            }
        }
    };

    const size_t n_threads = std::min<size_t>(spec.threads, std::max<size_t>(n_jobs, 1));
    if (n_threads <= 1) {
        worker(0, n_jobs);
    } else {
        std::vector<std::thread> pool;
        const size_t chunk = (n_jobs + n_threads - 1) / n_threads;
        for (size_t k = 0; k < n_threads; ++k) {
            const size_t begin = k * chunk;
            const size_t end = std::min(n_jobs, begin + chunk);
            if (begin < end) pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    for (const auto& row : rows) table.push_row(row);
    return table;
}

}  // namespace entdyn
