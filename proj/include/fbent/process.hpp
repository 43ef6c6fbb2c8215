#pragma once
// Iterated processes that turn a BPA into a probability distribution: the
// fractal splitting process (uniform or three-element (p, q) kernel) and
// repeated Dempster fusion with the uniform BPA, which ends at PnPl.

#include <variant>

#include "fbent/combination.hpp"
#include "fbent/csv.hpp"
#include "fbent/measures.hpp"

namespace fbent {

struct UniformKernel {};
struct Param3Kernel {
    double p = 3.0;
};
using SplitKernel = std::variant<UniformKernel, Param3Kernel>;

struct ProcessOptions {
    std::size_t max_steps = 10000;
    double tol = 1e-9;
    std::vector<MeasureId> metrics = {MeasureId::hartley, MeasureId::fb};
};

struct TraceStep {
    std::size_t index = 0;
    MassAssignment bpa;
    std::vector<std::pair<MeasureId, double>> metrics;

    double metric(MeasureId id) const {
        for (const auto& [m, v] : metrics) {
            if (m == id) return v;
        }
        throw Error(ErrorCode::UnknownMeasure, "metric '" + std::string(to_string(id)) + "' was not recorded");
    }
};

struct SplitTrace {
    std::vector<TraceStep> steps;  // steps[0] is the input
    bool converged = false;

    const MassAssignment& result() const { return steps.back().bpa; }
};

inline double non_singleton_mass(const MassAssignment& bpa) {
    double total = 0.0;
    for (const auto& e : bpa) {
        if (!e.set.is_singleton()) total += e.mass;
    }
    return total;
}

// Singleton masses as a dense vector, in element order.
inline std::vector<double> singleton_masses(const MassAssignment& bpa) {
    std::vector<double> out(bpa.frame().size(), 0.0);
    for (const auto& e : bpa) {
        if (e.set.is_singleton()) out[static_cast<std::size_t>(std::countr_zero(e.set.mask()))] = e.mass;
    }
    return out;
}

namespace detail {

inline TraceStep snapshot(std::size_t index, MassAssignment bpa, const std::vector<MeasureId>& metrics) {
    TraceStep step{index, std::move(bpa), {}};
    for (auto id : metrics) step.metrics.emplace_back(id, measure(id, step.bpa));
    return step;
}

inline void check_options(const ProcessOptions& opts) {
    if (!(opts.tol > 0.0)) throw Error(ErrorCode::ParamOutOfRange, "tolerance must be positive");
}

}  // namespace detail

inline MassAssignment apply_kernel(const SplitKernel& kernel, const MassAssignment& bpa) {
    if (const auto* k = std::get_if<Param3Kernel>(&kernel)) return parametrized_split_step_3(bpa, k->p);
    return uniform_split_step(bpa);
}

/// Repeats a splitting kernel until the mass left on multi-element sets drops
/// below tol (or max_steps kernel applications have run).
inline SplitTrace iterate_split(const MassAssignment& bpa, const SplitKernel& kernel, const ProcessOptions& opts = {}) {
    detail::check_options(opts);
    if (const auto* k = std::get_if<Param3Kernel>(&kernel)) {
        if (bpa.frame().size() != 3) throw Error(ErrorCode::NotThreeElementFrame, "param3 kernel needs three elements");
        if (!(k->p >= 3.0) || !std::isfinite(k->p)) throw Error(ErrorCode::ParamOutOfRange, "p must be >= 3");
    } else {
        require_frame_at_most(bpa.frame(), kMaxDenseFrame, "uniform splitting");
    }
    SplitTrace trace;
    trace.steps.push_back(detail::snapshot(0, bpa, opts.metrics));
    while (true) {
        if (non_singleton_mass(trace.result()) < opts.tol) {
            trace.converged = true;
            break;
        }
        if (trace.steps.size() > opts.max_steps) break;
        auto next = apply_kernel(kernel, trace.result());
        trace.steps.push_back(detail::snapshot(trace.steps.size(), std::move(next), opts.metrics));
    }
    return trace;
}

// Assigns 1/(2^n - 1) to every nonempty subset of the frame.
inline MassAssignment uniform_bpa(const Frame& frame) {
    std::vector<FocalMass> entries;
    const double share = 1.0 / static_cast<double>(full_mask(frame.size()));
    for (auto set : enumerate_powerset(frame)) entries.push_back({set, share});
    return MassAssignment(frame, std::move(entries));
}

/// Fuses the BPA with the uniform BPA over and over (Dempster's rule); the
/// singleton masses tend to the plausibility transform. Converged once no
/// singleton mass moves by tol or more between consecutive steps.
inline SplitTrace ptm_fusion_process(const MassAssignment& bpa, const ProcessOptions& opts = {}) {
    detail::check_options(opts);
    require_frame_at_most(bpa.frame(), kMaxCombineFrame, "fusion process");
    const MassAssignment partner = uniform_bpa(bpa.frame());
    SplitTrace trace;
    trace.steps.push_back(detail::snapshot(0, bpa, opts.metrics));
    while (trace.steps.size() <= opts.max_steps) {
        auto next = dempster_combine(trace.result(), partner).bpa;
        const auto before = singleton_masses(trace.result());
        const auto after = singleton_masses(next);
        double delta = 0.0;
        for (std::size_t i = 0; i < before.size(); ++i) delta = std::max(delta, std::abs(after[i] - before[i]));
        trace.steps.push_back(detail::snapshot(trace.steps.size(), std::move(next), opts.metrics));
        if (delta < opts.tol) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

/// Trace CSV: `step,<set>...,<metric>...`, set columns in canonical order over
/// every set seen in the trace, absent masses written as 0.
inline void write_trace_csv(const SplitTrace& trace, std::ostream& out) {
    std::vector<FocalSet> sets;
    for (const auto& step : trace.steps) {
        for (const auto& e : step.bpa) sets.push_back(e.set);
    }
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());

    const Frame& frame = trace.steps.front().bpa.frame();
    std::vector<std::string> row{"step"};
    for (auto s : sets) row.push_back(frame.format(s));
    for (const auto& [id, _] : trace.steps.front().metrics) row.emplace_back(to_string(id));
    write_csv_row(out, row);

    for (const auto& step : trace.steps) {
        row.assign({std::to_string(step.index)});
        for (auto s : sets) row.push_back(shortest_decimal(step.bpa.mass(s)));
        for (const auto& [_, value] : step.metrics) row.push_back(shortest_decimal(value));
        write_csv_row(out, row);
    }
}

}  // namespace fbent
