#pragma once
// Dempster and disjunctive combination, and independent joint BPAs on
// product frames together with their fractal-based counterpart.

#include <map>

#include "fbent/fb_entropy.hpp"

namespace fbent {

// Combination rules enumerate focal pairs over dense masks.
inline constexpr std::size_t kMaxCombineFrame = 16;
inline constexpr double kTotalConflictThreshold = 1e-12;

struct Combination {
    MassAssignment bpa;
    double conflict = 0.0;  // K, mass lost to empty intersections
};

namespace detail {

inline void check_combinable(const MassAssignment& b1, const MassAssignment& b2) {
    if (!(b1.frame() == b2.frame())) throw Error(ErrorCode::FrameMismatch, "cannot combine BPAs on different frames");
    require_frame_at_most(b1.frame(), kMaxCombineFrame, "combination");
}

}  // namespace detail

inline Combination dempster_combine(const MassAssignment& b1, const MassAssignment& b2) {
    detail::check_combinable(b1, b2);
    std::map<FocalSet, double> acc;
    double conflict = 0.0;
    for (const auto& g : b1) {
        for (const auto& h : b2) {
            const FocalSet meet = g.set & h.set;
            const double product = g.mass * h.mass;
            if (meet.empty()) {
                conflict += product;
            } else {
                acc[meet] += product;
            }
        }
    }
    if (conflict >= 1.0 - kTotalConflictThreshold) {
        throw Error(ErrorCode::TotalConflict, "the two bodies of evidence are in total conflict");
    }
    const double scale = 1.0 - conflict;
    std::vector<FocalMass> entries;
    entries.reserve(acc.size());
    for (const auto& [set, mass] : acc) entries.push_back({set, mass / scale});
    return {MassAssignment(b1.frame(), std::move(entries)), conflict};
}

inline MassAssignment disjunctive_combine(const MassAssignment& b1, const MassAssignment& b2) {
    detail::check_combinable(b1, b2);
    std::map<FocalSet, double> acc;
    for (const auto& g : b1) {
        for (const auto& h : b2) acc[g.set | h.set] += g.mass * h.mass;
    }
    std::vector<FocalMass> entries;
    for (const auto& [set, mass] : acc) entries.push_back({set, mass});
    return MassAssignment(b1.frame(), std::move(entries));
}

// X x Y flattened to an ordinary frame; pair (i, j) sits at i * |Y| + j.
class ProductFrame {
public:
    ProductFrame(Frame left, Frame right)
        : left_(std::move(left)), right_(std::move(right)), joint_(make_joint(left_, right_)) {}

    const Frame& left() const { return left_; }
    const Frame& right() const { return right_; }
    const Frame& joint() const { return joint_; }

    std::size_t position(std::size_t i, std::size_t j) const { return i * right_.size() + j; }

    // The product set G x H as a subset of the joint frame.
    FocalSet lift(FocalSet g, FocalSet h) const {
        std::uint64_t mask = 0;
        for (std::size_t i = 0; i < left_.size(); ++i) {
            if (!g.contains(i)) continue;
            for (std::size_t j = 0; j < right_.size(); ++j) {
                if (h.contains(j)) mask |= std::uint64_t{1} << position(i, j);
            }
        }
        return FocalSet{mask};
    }

private:
    static Frame make_joint(const Frame& left, const Frame& right) {
        if (left.size() * right.size() > kMaxFrameSize) {
            throw Error(ErrorCode::JointFrameTooLarge, "joint frame would exceed 64 elements");
        }
        std::vector<std::string> labels;
        for (const auto& x : left.labels()) {
            for (const auto& y : right.labels()) labels.push_back(x + "\xC3\x97" + y);  // U+00D7
        }
        return Frame(std::move(labels));
    }

    Frame left_;
    Frame right_;
    Frame joint_;
};

struct ProductFocal {
    FocalSet left;
    FocalSet right;
    double mass = 0.0;
};

struct ProductFocalStructure {
    std::vector<ProductFocal> pairs;
};

struct JointProduct {
    ProductFrame frame;
    ProductFocalStructure structure;
    MassAssignment joint;
};

/// Joint BPA of two independent BPAs: m(G x H) = m_X(G) m_Y(H).
inline JointProduct joint_product(const MassAssignment& bx, const MassAssignment& by) {
    ProductFrame frame(bx.frame(), by.frame());
    ProductFocalStructure structure;
    std::vector<FocalMass> entries;
    for (const auto& g : bx) {
        for (const auto& h : by) {
            const double mass = g.mass * h.mass;
            structure.pairs.push_back({g.set, h.set, mass});
            entries.push_back({frame.lift(g.set, h.set), mass});
        }
    }
    MassAssignment joint(frame.joint(), std::move(entries));
    return {std::move(frame), std::move(structure), std::move(joint)};
}

/// Fractal-based BPA of a joint structure. Each G x H splits only onto the
/// product sets A x B with A, B nonempty subsets of G, H; sets of the joint
/// frame that are not products get nothing.
inline FbBpa joint_fbbpa(const ProductFrame& frame, const ProductFocalStructure& structure) {
    if (frame.joint().size() > kMaxDenseFrame) {
        throw Error(ErrorCode::JointFrameTooLarge, "joint fractal BPA needs a joint frame of at most 24 elements");
    }
    std::map<FocalSet, double> acc;
    for (const auto& p : structure.pairs) {
        const double parts = static_cast<double>(full_mask(p.left.cardinality())) *
                             static_cast<double>(full_mask(p.right.cardinality()));
        const double share = p.mass / parts;
        for_each_nonempty_subset(p.left, [&](FocalSet a) {
            for_each_nonempty_subset(p.right, [&](FocalSet b) { acc[frame.lift(a, b)] += share; });
        });
    }
    FbBpa out{frame.joint(), {}};
    for (const auto& [set, value] : acc) out.values.push_back({set, value});
    return out;
}

}  // namespace fbent
