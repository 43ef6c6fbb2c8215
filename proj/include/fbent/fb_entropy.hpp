#pragma once
// Fractal-based BPA (one uniform splitting step) and its Shannon entropy,
// with an exact evaluator for large sparse frames and the discord /
// non-specificity split.

#include <numeric>

#include <json.hpp>

#include "fbent/transforms.hpp"

namespace fbent {

// Values of the fractal-based BPA; sorted by mask, zero entries absent.
struct FbBpa {
    Frame frame;
    std::vector<FocalMass> values;

    double value(FocalSet set) const {
        auto it = std::lower_bound(values.begin(), values.end(), set,
                                   [](const FocalMass& e, FocalSet s) { return e.set < s; });
        return (it != values.end() && it->set == set) ? it->mass : 0.0;
    }
};

struct EntropyReport {
    double total = 0.0;
    double discord = 0.0;
    double nonspecificity = 0.0;
    double base = 2.0;
};

inline nlohmann::ordered_json to_json(const EntropyReport& r) {
    return {{"total", r.total}, {"discord", r.discord}, {"nonspecificity", r.nonspecificity}, {"base", r.base}};
}

inline FbBpa fbbpa(const MassAssignment& bpa) {
    return FbBpa{bpa.frame(), detail::uniform_split_values(bpa)};
}

inline double shannon(const FbBpa& f, double base = 2.0) {
    require_valid_base(base);
    double h = 0.0;
    for (const auto& e : f.values) {
        if (e.mass > 0.0) h -= e.mass * log_in_base(e.mass, base);
    }
    return h;
}

inline double max_fb_entropy(std::size_t n, double base = 2.0) {
    require_valid_base(base);
    if (n < 1 || n > kMaxFrameSize) throw Error(ErrorCode::ParamOutOfRange, "frame size must be in [1, 64]");
    return log_pow2_minus_one(static_cast<int>(n), base);
}

// Largest overlap component the signature evaluator accepts.
inline constexpr std::size_t kMaxSparseFocal = 20;

namespace detail {

// Entropy contribution of the FBBPA restricted to sets below one overlap
// component of focal elements. Every nonempty S is characterized by its
// signature T = {i : S subset of F_i}; m_F(S) depends on T only. Counts of
// sets per exact signature come from a superset Moebius inversion of
// N(T) = 2^|intersection(T)| - 1, done modulo 2^64 (the true counts fit).
inline double signature_entropy(std::span<const FocalMass> comp, double base) {
    const std::size_t k = comp.size();
    if (k == 1) {
        const auto& e = comp[0];
        return e.mass * (log_pow2_minus_one(e.set.cardinality(), base) - log_in_base(e.mass, base));
    }
    if (k > kMaxSparseFocal) {
        throw Error(ErrorCode::TooManyFocalElements, "overlapping group of " + std::to_string(k) +
                                                         " focal elements exceeds the limit of 20");
    }
    const std::size_t subsets = std::size_t{1} << k;
    std::vector<double> weight(k);
    for (std::size_t i = 0; i < k; ++i) {
        const int c = comp[i].set.cardinality();
        if (c <= 53) {
            weight[i] = comp[i].mass / static_cast<double>(full_mask(static_cast<std::size_t>(c)));
        } else {
            // 2^c - 1 is not representable; divide by 2^c (1 - 2^-c) instead
            weight[i] = std::ldexp(comp[i].mass, -c) / -std::expm1(-c * std::numbers::ln2);
        }
    }

    std::vector<std::uint64_t> inter(subsets);
    std::vector<double> value(subsets);
    std::vector<std::uint64_t> count(subsets);
    inter[0] = ~std::uint64_t{0};
    value[0] = 0.0;
    count[0] = 0;
    for (std::size_t t = 1; t < subsets; ++t) {
        const std::size_t low = static_cast<std::size_t>(std::countr_zero(t));
        const std::size_t prev = t & (t - 1);
        inter[t] = inter[prev] & comp[low].set.mask();
        value[t] = value[prev] + weight[low];
        count[t] = inter[t] == 0 ? 0 : full_mask(static_cast<std::size_t>(std::popcount(inter[t])));
    }
    for (std::size_t bit = 1; bit < subsets; bit <<= 1) {
        for (std::size_t t = 1; t < subsets; ++t) {
            if (!(t & bit)) count[t] -= count[t | bit];
        }
    }
    double h = 0.0;
    for (std::size_t t = 1; t < subsets; ++t) {
        if (count[t] == 0) continue;
        double neg_log;
        if (std::has_single_bit(t)) {
            const auto& e = comp[static_cast<std::size_t>(std::countr_zero(t))];
            neg_log = log_pow2_minus_one(e.set.cardinality(), base) - log_in_base(e.mass, base);
        } else {
            neg_log = -log_in_base(value[t], base);
        }
        h += static_cast<double>(count[t]) * value[t] * neg_log;
    }
    return h;
}

// Groups focal elements into connected components of the "intersects" graph.
inline std::vector<std::vector<FocalMass>> overlap_components(const MassAssignment& bpa) {
    const auto focal = bpa.focal();
    std::vector<std::size_t> parent(focal.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < focal.size(); ++i) {
        for (std::size_t j = i + 1; j < focal.size(); ++j) {
            if (focal[i].set.intersects(focal[j].set)) parent[find(i)] = find(j);
        }
    }
    std::vector<std::vector<FocalMass>> groups;
    std::vector<std::size_t> slot(focal.size(), SIZE_MAX);
    for (std::size_t i = 0; i < focal.size(); ++i) {
        const std::size_t root = find(i);
        if (slot[root] == SIZE_MAX) {
            slot[root] = groups.size();
            groups.emplace_back();
        }
        groups[slot[root]].push_back(focal[i]);
    }
    return groups;
}

}  // namespace detail

/// Exact FB entropy without enumerating the power set. Cost is
/// O(k 2^k) per overlap component of k focal elements, independent of the
/// frame size, so 64-element frames with a handful of focal sets are cheap.
inline double fb_entropy_sparse(const MassAssignment& bpa, double base = 2.0) {
    require_valid_base(base);
    double h = 0.0;
    for (const auto& group : detail::overlap_components(bpa)) h += detail::signature_entropy(group, base);
    return h;
}

/// Shannon entropy of the fractal-based BPA. Frames above 24 elements go
/// through the sparse evaluator.
inline double fb_entropy(const MassAssignment& bpa, double base = 2.0) {
    require_valid_base(base);
    if (bpa.frame().size() > kMaxDenseFrame) return fb_entropy_sparse(bpa, base);
    return shannon(fbbpa(bpa), base);
}

inline EntropyReport decompose(const MassAssignment& bpa, double base = 2.0) {
    EntropyReport r;
    r.base = base;
    r.total = fb_entropy(bpa, base);
    if (is_bayesian(bpa)) {
        r.discord = r.total;
        r.nonspecificity = 0.0;
        return r;
    }
    const auto p = betp(bpa);
    r.discord = shannon(p.probs(), base);
    r.nonspecificity = r.total - r.discord;
    return r;
}

}  // namespace fbent
