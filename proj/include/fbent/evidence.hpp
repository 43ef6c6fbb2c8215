#pragma once
// Frames of discernment, focal sets, mass assignments (BPAs) and discrete
// probability distributions. Everything else in the library builds on these.

#include <algorithm>
#include <bit>
#include <cmath>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fbent/error.hpp"

namespace fbent {

inline constexpr std::size_t kMaxFrameSize = 64;
// Dense power-set enumeration ceiling (2^24 subsets).
inline constexpr std::size_t kMaxDenseFrame = 24;
// Masses summing within this of 1 are accepted untouched.
inline constexpr double kMassTolerance = 1e-9;
// Beyond kMassTolerance but within this, masses are rescaled and flagged.
inline constexpr double kRenormalizeTolerance = 1e-6;

constexpr std::uint64_t full_mask(std::size_t n) {
    return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Subset of a frame as a bitmask over element positions.
class FocalSet {
public:
    constexpr FocalSet() = default;
    constexpr explicit FocalSet(std::uint64_t mask) : mask_(mask) {}

    static constexpr FocalSet singleton(std::size_t index) { return FocalSet{std::uint64_t{1} << index}; }

    constexpr std::uint64_t mask() const { return mask_; }
    constexpr int cardinality() const { return std::popcount(mask_); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool is_singleton() const { return std::has_single_bit(mask_); }
    constexpr bool contains(std::size_t index) const { return (mask_ >> index) & 1U; }
    constexpr bool subset_of(FocalSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool intersects(FocalSet other) const { return (mask_ & other.mask_) != 0; }

    friend constexpr FocalSet operator&(FocalSet a, FocalSet b) { return FocalSet{a.mask_ & b.mask_}; }
    friend constexpr FocalSet operator|(FocalSet a, FocalSet b) { return FocalSet{a.mask_ | b.mask_}; }
    friend constexpr auto operator<=>(const FocalSet&, const FocalSet&) = default;

private:
    std::uint64_t mask_ = 0;
};

// Calls fn(sub) for every nonempty subset of `set`, in decreasing mask order.
template <typename Fn>
void for_each_nonempty_subset(FocalSet set, Fn&& fn) {
    const std::uint64_t mask = set.mask();
    for (std::uint64_t sub = mask; sub != 0; sub = (sub - 1) & mask) {
        fn(FocalSet{sub});
    }
}

class Frame {
public:
    explicit Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty() || labels_.size() > kMaxFrameSize) {
            throw Error(ErrorCode::MalformedDocument,
                        "frame must have between 1 and 64 elements, got " + std::to_string(labels_.size()));
        }
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            const auto& label = labels_[i];
            if (label.empty() || label.find('|') != std::string::npos) {
                throw Error(ErrorCode::MalformedDocument, "frame labels must be nonempty and free of '|'");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (labels_[j] == label) throw Error(ErrorCode::MalformedDocument, "duplicate frame label '" + label + "'");
            }
        }
    }

    // a, b, c, ... for n <= 26; e1..en beyond.
    static Frame letters(std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back(n <= 26 ? std::string(1, static_cast<char>('a' + i)) : "e" + std::to_string(i + 1));
        }
        return Frame(std::move(labels));
    }

    static Frame numbered(std::string_view prefix, std::size_t n) {
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::string(prefix) + std::to_string(i));
        return Frame(std::move(labels));
    }

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    FocalSet full() const { return FocalSet{full_mask(size())}; }
    bool contains(FocalSet set) const { return set.subset_of(full()); }
    FocalSet complement(FocalSet set) const { return FocalSet{~set.mask() & full_mask(size())}; }

    std::size_t index_of(std::string_view label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i) {
            if (labels_[i] == label) return i;
        }
        throw Error(ErrorCode::UnknownElement, "'" + std::string(label) + "' is not in the frame");
    }

    FocalSet set_of(std::initializer_list<std::string_view> members) const {
        std::uint64_t mask = 0;
        for (auto m : members) mask |= std::uint64_t{1} << index_of(m);
        return FocalSet{mask};
    }

    FocalSet range(std::size_t first, std::size_t last) const {  // [first, last)
        std::uint64_t mask = 0;
        for (std::size_t i = first; i < last && i < size(); ++i) mask |= std::uint64_t{1} << i;
        return FocalSet{mask};
    }

    // Canonical text form: member labels in frame order joined by '|'.
    std::string format(FocalSet set) const {
        std::string out;
        for (std::size_t i = 0; i < size(); ++i) {
            if (!set.contains(i)) continue;
            if (!out.empty()) out += '|';
            out += labels_[i];
        }
        return out;
    }

    FocalSet parse_set(std::string_view text) const {
        if (text.empty()) throw Error(ErrorCode::EmptyFocalSet, "empty focal-set key");
        std::uint64_t mask = 0;
        std::size_t start = 0;
        while (true) {
            const auto bar = text.find('|', start);
            const auto token = text.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start);
            if (token.empty()) throw Error(ErrorCode::MalformedDocument, "empty label in key '" + std::string(text) + "'");
            const auto bit = std::uint64_t{1} << index_of(token);
            if (mask & bit) throw Error(ErrorCode::MalformedDocument, "repeated label in key '" + std::string(text) + "'");
            mask |= bit;
            if (bar == std::string_view::npos) break;
            start = bar + 1;
        }
        return FocalSet{mask};
    }

    friend bool operator==(const Frame&, const Frame&) = default;

private:
    std::vector<std::string> labels_;
};

struct FocalMass {
    FocalSet set;
    double mass = 0.0;

    friend bool operator==(const FocalMass&, const FocalMass&) = default;
};

// Normalized BPA: sparse, sorted by mask, strictly positive masses, no empty set.
class MassAssignment {
public:
    MassAssignment(Frame frame, std::vector<FocalMass> entries) : frame_(std::move(frame)) {
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.set < b.set; });
        focal_.reserve(entries.size());
        double total = 0.0;
        for (const auto& e : entries) {
            if (e.set.empty()) throw Error(ErrorCode::EmptyFocalSet, "m(empty set) must be zero");
            if (!frame_.contains(e.set)) throw Error(ErrorCode::UnknownElement, "focal set outside the frame");
            if (!std::isfinite(e.mass) || e.mass < 0.0 || e.mass > 1.0 + kMassTolerance) {
                throw Error(ErrorCode::MassOutOfRange, "mass " + std::to_string(e.mass) + " outside [0,1]");
            }
            total += e.mass;
            if (e.mass == 0.0) continue;
            if (!focal_.empty() && focal_.back().set == e.set) {
                focal_.back().mass += e.mass;
            } else {
                focal_.push_back(e);
            }
        }
        const double drift = std::abs(total - 1.0);
        if (drift > kRenormalizeTolerance) {
            throw Error(ErrorCode::NotNormalized, "masses sum to " + std::to_string(total));
        }
        if (drift > kMassTolerance) {
            for (auto& e : focal_) e.mass /= total;
            renormalized_ = true;
        }
    }

    static MassAssignment vacuous(const Frame& frame) { return MassAssignment(frame, {{frame.full(), 1.0}}); }

    static MassAssignment certain(const Frame& frame, std::size_t element) {
        return MassAssignment(frame, {{FocalSet::singleton(element), 1.0}});
    }

    static MassAssignment from_probabilities(const Frame& frame, std::span<const double> probs) {
        if (probs.size() != frame.size()) throw Error(ErrorCode::FrameMismatch, "probability vector length differs from frame");
        std::vector<FocalMass> entries;
        for (std::size_t i = 0; i < probs.size(); ++i) entries.push_back({FocalSet::singleton(i), probs[i]});
        return MassAssignment(frame, std::move(entries));
    }

    const Frame& frame() const { return frame_; }
    std::span<const FocalMass> focal() const { return focal_; }
    std::size_t size() const { return focal_.size(); }
    auto begin() const { return focal_.begin(); }
    auto end() const { return focal_.end(); }

    double mass(FocalSet set) const {
        auto it = std::lower_bound(focal_.begin(), focal_.end(), set,
                                   [](const FocalMass& e, FocalSet s) { return e.set < s; });
        return (it != focal_.end() && it->set == set) ? it->mass : 0.0;
    }

    // True when construction rescaled masses that were slightly off 1.
    bool renormalized() const { return renormalized_; }

    friend bool operator==(const MassAssignment& a, const MassAssignment& b) {
        return a.frame_ == b.frame_ && a.focal_ == b.focal_;
    }

private:
    Frame frame_;
    std::vector<FocalMass> focal_;
    bool renormalized_ = false;
};

class DiscreteDistribution {
public:
    DiscreteDistribution(Frame frame, std::vector<double> probs) : frame_(std::move(frame)), probs_(std::move(probs)) {
        if (probs_.size() != frame_.size()) throw Error(ErrorCode::FrameMismatch, "distribution length differs from frame");
        double total = 0.0;
        for (double p : probs_) {
            if (!std::isfinite(p) || p < 0.0) throw Error(ErrorCode::MassOutOfRange, "negative probability");
            total += p;
        }
        if (std::abs(total - 1.0) > kMassTolerance) {
            throw Error(ErrorCode::NotNormalized, "probabilities sum to " + std::to_string(total));
        }
    }

    const Frame& frame() const { return frame_; }
    std::span<const double> probs() const { return probs_; }
    double operator[](std::size_t i) const { return probs_.at(i); }
    std::size_t size() const { return probs_.size(); }

private:
    Frame frame_;
    std::vector<double> probs_;
};

inline std::vector<FocalSet> enumerate_powerset(const Frame& frame) {
    if (frame.size() > kMaxDenseFrame) {
        throw Error(ErrorCode::FrameTooLarge, "dense power set limited to 24 elements, frame has " +
                                                  std::to_string(frame.size()));
    }
    const std::uint64_t count = full_mask(frame.size());
    std::vector<FocalSet> out;
    out.reserve(count);
    for (std::uint64_t mask = 1; mask <= count; ++mask) out.emplace_back(mask);
    return out;
}

inline bool is_bayesian(const MassAssignment& bpa) {
    return std::all_of(bpa.begin(), bpa.end(), [](const FocalMass& e) { return e.set.is_singleton(); });
}

inline bool is_vacuous(const MassAssignment& bpa) {
    return bpa.size() == 1 && bpa.focal()[0].set == bpa.frame().full();
}

inline void require_frame_at_most(const Frame& frame, std::size_t limit, std::string_view what) {
    if (frame.size() > limit) {
        throw Error(ErrorCode::FrameTooLarge, std::string(what) + " supports frames of at most " + std::to_string(limit) +
                                                  " elements, got " + std::to_string(frame.size()));
    }
}

// Numeric helpers shared by the entropy code.

inline double log_in_base(double x, double base) {
    return base == 2.0 ? std::log2(x) : std::log(x) / std::log(base);
}

inline void require_valid_base(double base) {
    if (!(base > 0.0) || base == 1.0 || !std::isfinite(base)) {
        throw Error(ErrorCode::ParamOutOfRange, "logarithm base must be positive and != 1");
    }
}

// log_base(2^c - 1) without forming 2^c, exact for c up to 64.
inline double log_pow2_minus_one(int c, double base = 2.0) {
    if (c <= 0) return -INFINITY;
    const double bits = c + std::log1p(-std::ldexp(1.0, -c)) / std::numbers::ln2;
    return base == 2.0 ? bits : bits * std::log(2.0) / std::log(base);
}

// Neumaier summation; keeps sums of many equal shares at their exact value.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        carry_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

// Shannon entropy with 0 log 0 = 0, summed in the given order.
inline double shannon(std::span<const double> probs, double base = 2.0) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) h -= p * log_in_base(p, base);
    }
    return h;
}

}  // namespace fbent
