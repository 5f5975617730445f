#include "scf/kcolor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace scf {

int c_of_k(int k) {
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    return 2 * k + (k + 1) / 2 - 1;
}

std::string_view to_string(PaletteMode mode) {
    switch (mode) {
        case PaletteMode::General: return "general";
        case PaletteMode::Special: return "special";
        case PaletteMode::Small: return "small";
    }
    return "unknown";
}

std::vector<Point> Selection::prefix(std::size_t iterations) const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < iterations && i < added.size(); ++i)
        out.insert(out.end(), added[i].begin(), added[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

Selection select_points(const IntervalFamily& active, int k) {
    Selection sel;
    std::vector<char> chosen(static_cast<std::size_t>(active.n()) + 1, 0);
    sel.added.reserve(active.size());
    for (const auto& iv : active) {
        int have = 0;
        for (Point p = iv.left; p <= iv.right; ++p) have += chosen[p];
        int missing = std::min(iv.size(), k) - have;
        std::vector<Point> added;
        for (Point p = iv.right; missing > 0 && p >= iv.left; --p) {
            if (chosen[p]) continue;
            chosen[p] = 1;
            added.push_back(p);
            --missing;
        }
        sel.added.push_back(std::move(added));
    }
    for (Point p = 1; p <= active.n(); ++p)
        if (chosen[p]) sel.points.push_back(p);
    return sel;
}

namespace {

class Fenwick {
public:
    explicit Fenwick(int n) : tree_(static_cast<std::size_t>(n) + 1, 0) {}

    void add(int i) {
        for (; i < static_cast<int>(tree_.size()); i += i & -i) ++tree_[i];
    }
    int prefix(int i) const {
        int s = 0;
        for (; i > 0; i -= i & -i) s += tree_[i];
        return s;
    }
    int range(int l, int r) const { return prefix(r) - prefix(l - 1); }

private:
    std::vector<int> tree_;
};

// free_[p] chains to the largest unselected point <= p; 0 means none.
class FreePoints {
public:
    explicit FreePoints(int n) : parent_(static_cast<std::size_t>(n) + 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    Point largest_free_at_most(Point p) {
        while (parent_[p] != p) {
            parent_[p] = parent_[parent_[p]];
            p = parent_[p];
        }
        return p;
    }
    void take(Point p) { parent_[p] = p - 1; }

private:
    std::vector<Point> parent_;
};

}  // namespace

Selection select_points_fast(const IntervalFamily& active, int k) {
    Selection sel;
    Fenwick count(active.n());
    FreePoints free_points(active.n());
    sel.added.resize(active.size());

    // Once the k-th shortest interval ending at r is handled it holds k points,
    // so every longer one ending at r is already satisfied.
    int run_right = 0;
    int run_length = 0;
    for (std::size_t i = 0; i < active.size(); ++i) {
        const Interval& iv = active[i];
        if (iv.right != run_right) {
            run_right = iv.right;
            run_length = 0;
        }
        if (++run_length > k) continue;

        int missing = std::min(iv.size(), k) - count.range(iv.left, iv.right);
        auto& added = sel.added[i];
        while (missing > 0) {
            Point p = free_points.largest_free_at_most(iv.right);
            if (p < iv.left) break;
            free_points.take(p);
            count.add(p);
            added.push_back(p);
            --missing;
        }
    }
    for (const auto& a : sel.added) sel.points.insert(sel.points.end(), a.begin(), a.end());
    std::sort(sel.points.begin(), sel.points.end());
    return sel;
}

std::vector<Assignment> assign_cyclic(const std::vector<Point>& points, int t, int c) {
    std::vector<Assignment> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out.emplace_back(points[i], (t - 1) * c + static_cast<int>(i % static_cast<std::size_t>(c)) + 1);
    return out;
}

namespace {

void check_palette(const IntervalFamily& family, int k, const Palette& palette) {
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    if (palette.k != k) throw PreconditionError("palette was built for a different k");
    switch (palette.mode) {
        case PaletteMode::General:
            if (palette.colors_per_step != c_of_k(k))
                throw PreconditionError("general palette must use c(k) colors per step");
            break;
        case PaletteMode::Special:
            if (palette.colors_per_step != k) throw PreconditionError("special palette must use k colors per step");
            if (!is_theorem5_family(family, k))
                throw PreconditionError("special palette requires a family passing the k-separation check");
            break;
        case PaletteMode::Small:
            if (family.max_interval_size() >= k)
                throw PreconditionError("small palette requires every interval to be shorter than k");
            if (palette.colors_per_step != std::max(1, family.max_interval_size()))
                throw PreconditionError("small palette must use max |I| colors per step");
            break;
    }
}

}  // namespace

KColorResult run_kcolor(const IntervalFamily& family, int k, const Palette& palette, SelectPath path) {
    check_palette(family, k, palette);

    KColorResult result;
    result.coloring = Coloring(family.n());
    result.trace.k = k;
    result.trace.palette = palette;

    const int step_limit = family.n() > 0 ? std::bit_width(static_cast<unsigned>(family.n())) + 1 : 0;
    IntervalFamily active = family;
    for (int t = 1; !active.empty(); ++t) {
        if (t > step_limit)
            throw InternalError("step " + std::to_string(t) + " exceeds floor(log2 n) + 2 = " +
                                std::to_string(step_limit));

        StepRecord step;
        step.t = t;
        step.selection = path == SelectPath::Fast ? select_points_fast(active, k) : select_points(active, k);
        step.assignments = assign_cyclic(step.selection.points, t, palette.colors_per_step);
        for (const auto& [p, c] : step.assignments) result.coloring[p] = c;

        const Coloring& now = result.coloring;
        step.discarded = active.filtered([&](const Interval& iv) { return is_k_colored(now, iv, k).satisfied; });
        step.survivors = active.filtered([&](const Interval& iv) { return !is_k_colored(now, iv, k).satisfied; });
        step.active = std::move(active);
        active = step.survivors;
        result.trace.steps.push_back(std::move(step));
    }
    return result;
}

bool is_theorem5_family(const IntervalFamily& family, int k) {
    const auto& ivs = family.intervals();
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            const Interval& later = ivs[i];
            const Interval& earlier = ivs[j];
            if (!later.intersects(earlier)) continue;
            if (later.contains(earlier) || earlier.contains(later)) return false;
            // |later \ earlier|: later.right > earlier.right here, no containment.
            if (later.right - std::max(earlier.right, later.left - 1) < k) return false;
        }
    }
    return true;
}

Palette choose_palette(const IntervalFamily& family, int k, PaletteChoice choice) {
    c_of_k(k);
    switch (choice) {
        case PaletteChoice::General: return Palette::general(k);
        case PaletteChoice::Special:
            if (!is_theorem5_family(family, k))
                throw PreconditionError("special palette requested but the family fails the k-separation check");
            return Palette::special(k);
        case PaletteChoice::Auto: break;
    }
    if (!family.empty() && family.max_interval_size() < k) return Palette::small(k, family.max_interval_size());
    if (is_theorem5_family(family, k)) return Palette::special(k);
    return Palette::general(k);
}

}  // namespace scf
