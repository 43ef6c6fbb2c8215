#pragma once
// Probability transforms (pignistic, plausibility) and the single-step
// kernels of the splitting processes: uniform power-set splitting, the
// three-element (p, q) splitting schedule, and negation.

#include <array>
#include <unordered_map>

#include "fbent/belief.hpp"

namespace fbent {

inline DiscreteDistribution betp(const MassAssignment& bpa) {
    std::vector<double> probs(bpa.frame().size(), 0.0);
    for (const auto& e : bpa) {
        const double share = e.mass / e.set.cardinality();
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (e.set.contains(i)) probs[i] += share;
        }
    }
    return DiscreteDistribution(bpa.frame(), std::move(probs));
}

inline DiscreteDistribution pnpl(const MassAssignment& bpa) {
    const std::size_t n = bpa.frame().size();
    std::vector<double> probs(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        probs[i] = pl(bpa, FocalSet::singleton(i));
        total += probs[i];
    }
    for (auto& p : probs) p /= total;
    return DiscreteDistribution(bpa.frame(), std::move(probs));
}

namespace detail {

// Spreads each focal mass evenly over the nonempty subsets of its set.
// Result is sorted by mask; contributions are added in focal-set order.
inline std::vector<FocalMass> uniform_split_values(const MassAssignment& bpa) {
    require_frame_at_most(bpa.frame(), kMaxDenseFrame, "uniform splitting");
    std::unordered_map<std::uint64_t, double> acc;
    std::size_t support = 0;
    for (const auto& e : bpa) support += std::size_t{1} << e.set.cardinality();
    acc.reserve(std::min<std::size_t>(support, std::size_t{1} << kMaxDenseFrame));

    for (const auto& e : bpa) {
        const double share = e.mass / static_cast<double>(full_mask(e.set.cardinality()));
        for_each_nonempty_subset(e.set, [&](FocalSet sub) { acc[sub.mask()] += share; });
    }
    std::vector<FocalMass> out;
    out.reserve(acc.size());
    for (const auto& [mask, value] : acc) out.push_back({FocalSet{mask}, value});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
    return out;
}

}  // namespace detail

/// One unit of the fractal splitting process: every focal element hands an
/// equal share of its mass to each of its nonempty subsets (itself included).
inline MassAssignment uniform_split_step(const MassAssignment& bpa) {
    return MassAssignment(bpa.frame(), detail::uniform_split_values(bpa));
}

/// The three-element schedule with free rate p (q = p + 4): each pair sends
/// m/p to each of its two singletons; the full set sends m/q to each of its
/// six proper nonempty subsets.
inline MassAssignment parametrized_split_step_3(const MassAssignment& bpa, double p) {
    if (bpa.frame().size() != 3) {
        throw Error(ErrorCode::NotThreeElementFrame, "the (p, q) schedule is defined on three-element frames");
    }
    if (!(p >= 3.0) || !std::isfinite(p)) throw Error(ErrorCode::ParamOutOfRange, "p must be >= 3");
    const double q = p + 4.0;

    std::array<double, 8> next{};
    for (const auto& e : bpa) {
        const auto mask = e.set.mask();
        switch (e.set.cardinality()) {
            case 1:
                next[mask] += e.mass;
                break;
            case 2:
                next[mask] += (1.0 - 2.0 / p) * e.mass;
                for_each_nonempty_subset(e.set, [&](FocalSet sub) {
                    if (sub.is_singleton()) next[sub.mask()] += e.mass / p;
                });
                break;
            default:
                next[mask] += (1.0 - 6.0 / q) * e.mass;
                for_each_nonempty_subset(e.set, [&](FocalSet sub) {
                    if (sub != e.set) next[sub.mask()] += e.mass / q;
                });
                break;
        }
    }
    std::vector<FocalMass> entries;
    for (std::uint64_t mask = 1; mask < next.size(); ++mask) entries.push_back({FocalSet{mask}, next[mask]});
    return MassAssignment(bpa.frame(), std::move(entries));
}

/// Negation: the mass of each F other than the frame moves evenly onto every
/// superset of F's complement; m(frame) stays put.
inline MassAssignment negation_step(const MassAssignment& bpa) {
    const Frame& frame = bpa.frame();
    std::unordered_map<std::uint64_t, double> acc;
    for (const auto& e : bpa) {
        if (e.set == frame.full()) {
            acc[e.set.mask()] += e.mass;
            continue;
        }
        if (static_cast<std::size_t>(e.set.cardinality()) > kMaxDenseFrame) {
            throw Error(ErrorCode::FrameTooLarge, "negation of a focal set with more than 24 elements");
        }
        const FocalSet complement = frame.complement(e.set);
        const double share = std::ldexp(e.mass, -e.set.cardinality());
        acc[complement.mask()] += share;
        for_each_nonempty_subset(e.set, [&](FocalSet sub) { acc[(complement | sub).mask()] += share; });
    }
    std::vector<FocalMass> entries;
    for (const auto& [mask, value] : acc) entries.push_back({FocalSet{mask}, value});
    return MassAssignment(frame, std::move(entries));
}

}  // namespace fbent
