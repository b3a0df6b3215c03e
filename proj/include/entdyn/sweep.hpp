#pragma once

// Batch evaluation: evolve an initial-state family over a parameter/time
// grid, tabulate the measures next to the closed forms, reproduce the
// figure data, and run the closed-form-vs-numeric audit.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "entdyn/decoherence.hpp"
#include "entdyn/result_table.hpp"
#include "entdyn/states.hpp"

namespace entdyn {

struct TimeGrid {
    double t_max = 5.0;  // in units of 1/gamma0
    int steps = 501;     // number of samples, t = 0 included
};

// Range over a^2 (GHZ and W families; the W sweep holds c^2 fixed) or over
// the mixing weight p.
struct ParamGrid {
    double min = 0.0;
    double max = 1.0;
    int count = 51;
};

using StateSpec = std::variant<GhzSpec, WSpec, MixtureSpec>;

struct SweepSpec {
    StateSpec state;
    ReservoirParams reservoir = ReservoirParams::from_ratio(3.0);
    TimeGrid time_grid;
    std::optional<ParamGrid> param_grid;
    int threads = 1;
};

// Rows ordered lexicographically by (param, t); identical specs produce
// identical tables regardless of thread count.
ResultTable run_sweep(const SweepSpec& spec);

// Figure ids: 1a 1b 2a 2b 3a 3b 4 5a 5b 6a 6b. Writes figure_<id>.csv and
// figure_<id>_long.csv into out_dir; returns the paths written.
std::vector<std::string> reproduce_figure(const std::string& id, const std::string& out_dir);

struct AuditViolation {
    std::string check;
    std::string location;
    double value = 0.0;
    double bound = 0.0;
};

struct AuditReport {
    long checks = 0;
    double worst_gap = 0.0;
    std::string worst_gap_location;
    std::vector<AuditViolation> violations;  // capped at 50 entries
    long violation_count = 0;

    bool pass() const { return violation_count == 0; }
};

// Runs the closed-form-vs-numeric grid audit, the Kraus-vs-direct channel
// audit and the catalog ordering/vanishing invariants. `tolerance` bounds
// every closed-vs-numeric gap; structural invariants carry their own fixed
// tolerances.
AuditReport run_audit(double tolerance);

std::string audit_summary(const AuditReport& report);

}  // namespace entdyn
