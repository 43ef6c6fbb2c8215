#pragma once
// Classical and recent uncertainty measures of a BPA, for comparison with FB
// entropy, plus the non-specificity part of the measures that have one.

#include <array>
#include <optional>

#include "fbent/fb_entropy.hpp"

namespace fbent {

enum class MeasureId { am, hohle, yager, hartley, klir_parviz, au, pal, deng, su, js, decomposable, yang_han, fb };

inline constexpr std::array<MeasureId, 13> kAllMeasures = {
    MeasureId::am,  MeasureId::hohle, MeasureId::yager, MeasureId::hartley,      MeasureId::klir_parviz,
    MeasureId::au,  MeasureId::pal,   MeasureId::deng,  MeasureId::su,           MeasureId::js,
    MeasureId::decomposable,          MeasureId::yang_han, MeasureId::fb,
};

// These strings are part of the CLI contract; never rename one.
constexpr std::string_view to_string(MeasureId id) {
    switch (id) {
        case MeasureId::am: return "am";
        case MeasureId::hohle: return "hohle";
        case MeasureId::yager: return "yager";
        case MeasureId::hartley: return "hartley";
        case MeasureId::klir_parviz: return "klir_parviz";
        case MeasureId::au: return "au";
        case MeasureId::pal: return "pal";
        case MeasureId::deng: return "deng";
        case MeasureId::su: return "su";
        case MeasureId::js: return "js";
        case MeasureId::decomposable: return "decomposable";
        case MeasureId::yang_han: return "yang_han";
        case MeasureId::fb: return "fb";
    }
    return "?";
}

inline MeasureId parse_measure(std::string_view name) {
    for (auto id : kAllMeasures) {
        if (to_string(id) == name) return id;
    }
    throw Error(ErrorCode::UnknownMeasure, "unknown measure '" + std::string(name) + "'");
}

inline constexpr std::size_t kMaxPowerSetMeasureFrame = 16;
inline constexpr std::size_t kMaxAuFrame = 12;

namespace detail {

// Bel of every subset of the frame (index = mask), by a subset-sum transform.
inline std::vector<double> dense_belief(const MassAssignment& bpa) {
    const std::size_t n = bpa.frame().size();
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (const auto& e : bpa) table[e.set.mask()] += e.mass;
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            if (mask & bit) table[mask] += table[mask ^ bit];
        }
    }
    return table;
}

// Commonality of every subset of the frame, by a superset-sum transform.
inline std::vector<double> dense_commonality(const MassAssignment& bpa) {
    const std::size_t n = bpa.frame().size();
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (const auto& e : bpa) table[e.set.mask()] += e.mass;
    for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
        for (std::size_t mask = 0; mask < table.size(); ++mask) {
            if (!(mask & bit)) table[mask] += table[mask | bit];
        }
    }
    return table;
}

inline double hartley(const MassAssignment& bpa, double base) {
    CompensatedSum h;
    for (const auto& e : bpa) h.add(e.mass * log_in_base(e.set.cardinality(), base));
    return h.value();
}

// Interval distance to [0, 1] used by Yang and Han's measure.
inline double interval_distance(double lo1, double hi1, double lo2, double hi2) {
    const double dc = (lo1 + hi1) / 2.0 - (lo2 + hi2) / 2.0;
    const double dw = (hi1 - lo1) / 2.0 - (hi2 - lo2) / 2.0;
    return std::sqrt(dc * dc + dw * dw / 3.0);
}

}  // namespace detail

/// Maximum Shannon entropy over the credal set {p : p(A) >= Bel(A) for all A},
/// returned as the maximizing distribution. Greedy: repeatedly take the set A
/// with the largest Bel(A)/|A| (ties: larger |A|, then smaller mask), give
/// each of its elements Bel(A)/|A|, and condition Bel on the rest.
inline DiscreteDistribution au_distribution(const MassAssignment& bpa) {
    require_frame_at_most(bpa.frame(), kMaxAuFrame, "aggregate uncertainty");
    const std::size_t n = bpa.frame().size();
    const auto belief = detail::dense_belief(bpa);
    const std::uint64_t full = full_mask(n);
    std::vector<double> probs(n, 0.0);

    std::uint64_t taken = 0;
    while (taken != full) {
        const std::uint64_t remaining = full & ~taken;
        const double base = belief[taken];
        double best_ratio = -1.0;
        std::uint64_t best = 0;
        // Ascending submask order so that ties keep the smaller mask.
        std::vector<std::uint64_t> subs;
        for (std::uint64_t sub = remaining; sub != 0; sub = (sub - 1) & remaining) subs.push_back(sub);
        for (auto it = subs.rbegin(); it != subs.rend(); ++it) {
            const std::uint64_t a = *it;
            const double ratio = (belief[a | taken] - base) / std::popcount(a);
            const bool better = ratio > best_ratio + 1e-12 ||
                                (ratio > best_ratio - 1e-12 && std::popcount(a) > std::popcount(best));
            if (better) {
                best_ratio = ratio;
                best = a;
            }
        }
        if (best_ratio <= 0.0) break;  // leftover elements carry no belief
        for (std::size_t i = 0; i < n; ++i) {
            if ((best >> i) & 1U) probs[i] = best_ratio;
        }
        taken |= best;
    }
    double total = 0.0;
    for (double p : probs) total += p;
    for (auto& p : probs) p /= total;
    return DiscreteDistribution(bpa.frame(), std::move(probs));
}

inline double au(const MassAssignment& bpa, double base = 2.0) {
    require_valid_base(base);
    return shannon(au_distribution(bpa).probs(), base);
}

inline double measure(MeasureId id, const MassAssignment& bpa, double base = 2.0) {
    require_valid_base(base);
    const Frame& frame = bpa.frame();
    const std::size_t n = frame.size();
    switch (id) {
        case MeasureId::fb:
            return fb_entropy(bpa, base);
        case MeasureId::au:
            return au(bpa, base);
        case MeasureId::klir_parviz:
        case MeasureId::decomposable:
            require_frame_at_most(frame, kMaxPowerSetMeasureFrame, to_string(id));
            break;
        default:
            require_frame_at_most(frame, kMaxDenseFrame, to_string(id));
            break;
    }

    double h = 0.0;
    switch (id) {
        case MeasureId::am:
            return shannon(betp(bpa).probs(), base);
        case MeasureId::hohle:
            for (const auto& e : bpa) h -= e.mass * log_in_base(bel(bpa, e.set), base);
            return h;
        case MeasureId::yager:
            for (const auto& e : bpa) h -= e.mass * log_in_base(pl(bpa, e.set), base);
            return h;
        case MeasureId::hartley:
            return detail::hartley(bpa, base);
        case MeasureId::klir_parviz:
            for (const auto& f : bpa) {
                double agreement = 0.0;
                for (const auto& g : bpa) {
                    agreement += g.mass * (f.set & g.set).cardinality() / g.set.cardinality();
                }
                h -= f.mass * log_in_base(agreement, base);
            }
            return h;
        case MeasureId::pal:
            for (const auto& e : bpa) h -= e.mass * log_in_base(e.mass / e.set.cardinality(), base);
            return h;
        case MeasureId::deng:
            for (const auto& e : bpa) {
                h -= e.mass * (log_in_base(e.mass, base) - log_pow2_minus_one(e.set.cardinality(), base));
            }
            return h;
        case MeasureId::su:
            for (std::size_t i = 0; i < n; ++i) {
                const auto iv = belief_interval(bpa, FocalSet::singleton(i));
                const double mid = (iv.upper + iv.lower) / 2.0;
                if (mid > 0.0) h -= mid * log_in_base(mid, base);
                h += iv.upper - iv.lower;
            }
            return h;
        case MeasureId::js:
            return detail::hartley(bpa, base) + shannon(pnpl(bpa).probs(), base);
        case MeasureId::decomposable: {
            const auto q = detail::dense_commonality(bpa);
            for (std::size_t mask = 1; mask < q.size(); ++mask) {
                if (q[mask] <= 0.0) continue;
                const double term = q[mask] * log_in_base(q[mask], base);
                h += (std::popcount(mask) % 2 == 0) ? term : -term;
            }
            return h;
        }
        case MeasureId::yang_han: {
            double distance = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const auto iv = belief_interval(bpa, FocalSet::singleton(i));
                distance += detail::interval_distance(iv.lower, iv.upper, 0.0, 1.0);
            }
            return 1.0 - std::sqrt(3.0) / static_cast<double>(n) * distance;
        }
        case MeasureId::fb:
        case MeasureId::au:
            break;
    }
    return h;
}

/// Non-specificity component of the measures that split one off.
inline double nonspecificity(MeasureId id, const MassAssignment& bpa, double base = 2.0) {
    require_valid_base(base);
    double h = 0.0;
    switch (id) {
        case MeasureId::js:
        case MeasureId::pal:
            return detail::hartley(bpa, base);
        case MeasureId::su:
            for (std::size_t i = 0; i < bpa.frame().size(); ++i) {
                const auto iv = belief_interval(bpa, FocalSet::singleton(i));
                h += iv.upper - iv.lower;
            }
            return h;
        case MeasureId::deng: {
            CompensatedSum sum;
            for (const auto& e : bpa) sum.add(e.mass * log_pow2_minus_one(e.set.cardinality(), base));
            return sum.value();
        }
        case MeasureId::fb:
            return decompose(bpa, base).nonspecificity;
        default:
            throw Error(ErrorCode::UnsupportedDecomposition,
                        "measure '" + std::string(to_string(id)) + "' has no non-specificity component");
    }
}

}  // namespace fbent
