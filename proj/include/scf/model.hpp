#pragma once

// Interval hypergraph data model: intervals over points 1..n, the right-endpoint
// order, sub-family extraction and unique-color accounting.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scf {

using Point = int;
using Color = int;

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class InternalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A contiguous run of points {left, ..., right}.
struct Interval {
    Point left = 1;
    Point right = 1;

    constexpr int size() const { return right - left + 1; }
    constexpr bool contains(Point p) const { return left <= p && p <= right; }
    constexpr bool contains(const Interval& other) const {
        return left <= other.left && other.right <= right;
    }
    /// Proper containment: other is a subset of *this and differs from it.
    constexpr bool strictly_contains(const Interval& other) const {
        return contains(other) && !(other == *this);
    }
    constexpr bool intersects(const Interval& other) const {
        return left <= other.right && other.left <= right;
    }
    constexpr bool operator==(const Interval&) const = default;
};

std::string to_string(const Interval& iv);

/// Smaller right endpoint first; equal right endpoints put the larger left
/// endpoint (the shorter interval) first. Irreflexive.
constexpr bool precedes(const Interval& a, const Interval& b) {
    return a.right < b.right || (a.right == b.right && a.left > b.left);
}

struct PrecedesOrder {
    constexpr bool operator()(const Interval& a, const Interval& b) const { return precedes(a, b); }
};

/// A deduplicated family of intervals on points 1..n, stored in increasing
/// precedes() order. Construct through normalize_family().
class IntervalFamily {
public:
    IntervalFamily() = default;

    int n() const { return n_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }
    const Interval& operator[](std::size_t i) const { return intervals_[i]; }
    auto begin() const { return intervals_.begin(); }
    auto end() const { return intervals_.end(); }

    /// Number of input pairs collapsed as duplicates during normalization.
    std::size_t duplicates_removed() const { return duplicates_removed_; }

    bool contains(const Interval& iv) const;
    int max_interval_size() const;

    /// Family on the same n keeping the members for which keep(iv) is true.
    template <class Pred>
    IntervalFamily filtered(Pred keep) const {
        IntervalFamily out;
        out.n_ = n_;
        for (const auto& iv : intervals_)
            if (keep(iv)) out.intervals_.push_back(iv);
        return out;
    }

    bool operator==(const IntervalFamily& other) const {
        return n_ == other.n_ && intervals_ == other.intervals_;
    }

private:
    friend IntervalFamily normalize_family(const std::vector<std::pair<int, int>>& raw, int n);

    int n_ = 0;
    std::vector<Interval> intervals_;
    std::size_t duplicates_removed_ = 0;
};

/// Validates every pair against 1 <= left <= right <= n, collapses duplicates
/// and sorts by precedes(). Throws ValidationError naming the offending pair.
IntervalFamily normalize_family(const std::vector<std::pair<int, int>>& raw, int n);

struct Subfamilies {
    IntervalFamily left;    ///< not inside I, right endpoint in I
    IntervalFamily right;   ///< not inside I, left endpoint in I
    IntervalFamily inside;  ///< strictly inside I
};

Subfamilies subfamilies(const IntervalFamily& family, const Interval& iv);

/// Total map from points 1..n to colors; 0 is the default (non-)color.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(int n) : colors_(static_cast<std::size_t>(n), 0) {}
    explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

    int n() const { return static_cast<int>(colors_.size()); }
    Color operator[](Point p) const { return colors_[static_cast<std::size_t>(p - 1)]; }
    Color& operator[](Point p) { return colors_[static_cast<std::size_t>(p - 1)]; }
    const std::vector<Color>& values() const { return colors_; }

    /// Number of distinct positive colors used anywhere.
    int distinct_positive() const;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<Color> colors_;
};

/// Positive colors carried by exactly one point of iv, ascending.
std::vector<Color> unique_positive_colors(const Coloring& coloring, const Interval& iv);

struct KColoredStatus {
    Interval interval;
    std::vector<Color> unique_colors;
    int required = 0;
    bool satisfied = false;
};

/// An interval is k-colored when it holds at least min(|I|, k) unique colors.
KColoredStatus is_k_colored(const Coloring& coloring, const Interval& iv, int k);

}  // namespace scf
