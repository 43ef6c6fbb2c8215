#pragma once
// Belief, plausibility and commonality of a BPA. Every query walks the stored
// focal sets only, so cost is linear in the number of focal elements and works
// for frames of any supported size.

#include "fbent/evidence.hpp"

namespace fbent {

struct BeliefInterval {
    double lower = 0.0;  // Bel
    double upper = 0.0;  // Pl
};

namespace detail {

inline void check_query(const MassAssignment& bpa, FocalSet set) {
    if (set.empty()) throw Error(ErrorCode::EmptySetQuery, "belief functions are queried on nonempty sets");
    if (!bpa.frame().contains(set)) throw Error(ErrorCode::UnknownElement, "query set outside the frame");
}

}  // namespace detail

inline double bel(const MassAssignment& bpa, FocalSet set) {
    detail::check_query(bpa, set);
    if (set == bpa.frame().full()) return 1.0;
    double total = 0.0;
    for (const auto& e : bpa) {
        if (e.set.subset_of(set)) total += e.mass;
    }
    return std::min(total, 1.0);
}

inline double pl(const MassAssignment& bpa, FocalSet set) {
    detail::check_query(bpa, set);
    if (set == bpa.frame().full()) return 1.0;
    double total = 0.0;
    for (const auto& e : bpa) {
        if (e.set.intersects(set)) total += e.mass;
    }
    return std::min(total, 1.0);
}

inline double commonality(const MassAssignment& bpa, FocalSet set) {
    detail::check_query(bpa, set);
    double total = 0.0;
    for (const auto& e : bpa) {
        if (set.subset_of(e.set)) total += e.mass;
    }
    return std::min(total, 1.0);
}

inline BeliefInterval belief_interval(const MassAssignment& bpa, FocalSet element) {
    if (!element.is_singleton()) throw Error(ErrorCode::NotSingleton, "belief interval is defined per element");
    return {bel(bpa, element), pl(bpa, element)};
}

}  // namespace fbent
