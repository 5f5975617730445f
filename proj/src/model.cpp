#include "scf/model.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace scf {

std::string to_string(const Interval& iv) {
    return "(" + std::to_string(iv.left) + "," + std::to_string(iv.right) + ")";
}

bool IntervalFamily::contains(const Interval& iv) const {
    return std::binary_search(intervals_.begin(), intervals_.end(), iv, PrecedesOrder{});
}

int IntervalFamily::max_interval_size() const {
    int best = 0;
    for (const auto& iv : intervals_) best = std::max(best, iv.size());
    return best;
}

IntervalFamily normalize_family(const std::vector<std::pair<int, int>>& raw, int n) {
    if (n < 1) throw ValidationError("number of points must be at least 1, got " + std::to_string(n));

    IntervalFamily family;
    family.n_ = n;
    family.intervals_.reserve(raw.size());
    for (const auto& [l, r] : raw) {
        const Interval iv{l, r};
        if (l > r) throw ValidationError("interval " + to_string(iv) + " has left > right");
        if (l < 1 || r > n)
            throw ValidationError("interval " + to_string(iv) + " is outside points 1.." + std::to_string(n));
        family.intervals_.push_back(iv);
    }
    std::sort(family.intervals_.begin(), family.intervals_.end(), PrecedesOrder{});
    auto last = std::unique(family.intervals_.begin(), family.intervals_.end());
    family.duplicates_removed_ = static_cast<std::size_t>(family.intervals_.end() - last);
    family.intervals_.erase(last, family.intervals_.end());
    return family;
}

Subfamilies subfamilies(const IntervalFamily& family, const Interval& iv) {
    return {
        family.filtered([&](const Interval& j) { return !iv.contains(j) && iv.contains(j.right); }),
        family.filtered([&](const Interval& j) { return !iv.contains(j) && iv.contains(j.left); }),
        family.filtered([&](const Interval& j) { return iv.strictly_contains(j); }),
    };
}

int Coloring::distinct_positive() const {
    std::set<Color> seen;
    for (Color c : colors_)
        if (c > 0) seen.insert(c);
    return static_cast<int>(seen.size());
}

std::vector<Color> unique_positive_colors(const Coloring& coloring, const Interval& iv) {
    std::map<Color, int> count;
    for (Point p = iv.left; p <= iv.right; ++p)
        if (coloring[p] > 0) ++count[coloring[p]];
    std::vector<Color> unique;
    for (const auto& [c, cnt] : count)
        if (cnt == 1) unique.push_back(c);
    return unique;
}

KColoredStatus is_k_colored(const Coloring& coloring, const Interval& iv, int k) {
    KColoredStatus status;
    status.interval = iv;
    status.unique_colors = unique_positive_colors(coloring, iv);
    status.required = std::min(iv.size(), k);
    status.satisfied = static_cast<int>(status.unique_colors.size()) >= status.required;
    return status;
}

}  // namespace scf
