#pragma once

// The step-wise approximation algorithm: SELECT picks points so every active
// interval holds min(|I|, k) of them, the picks are colored cyclically from a
// fresh palette, k-colored intervals are discarded, and the loop repeats on
// the survivors.

#include <string_view>
#include <utility>
#include <vector>

#include "scf/model.hpp"

namespace scf {

/// 2k + ceil(k/2) - 1. Throws ValidationError for k < 1.
int c_of_k(int k);

enum class PaletteMode { General, Special, Small };

std::string_view to_string(PaletteMode mode);

/// Colors consumed per step and which rule produced that number.
struct Palette {
    int k = 1;
    int colors_per_step = 2;
    PaletteMode mode = PaletteMode::General;

    static Palette general(int k) { return {k, c_of_k(k), PaletteMode::General}; }
    static Palette special(int k) { return {k, k, PaletteMode::Special}; }
    static Palette small(int k, int max_size) { return {k, max_size, PaletteMode::Small}; }

    bool operator==(const Palette&) const = default;
};

struct Selection {
    std::vector<Point> points;               ///< ascending
    std::vector<std::vector<Point>> added;   ///< points added while handling the i-th active interval

    /// Cumulative selection after the first `iterations` intervals were handled.
    std::vector<Point> prefix(std::size_t iterations) const;
};

/// Straightforward SELECT: every active interval is examined in order.
Selection select_points(const IntervalFamily& active, int k);

/// Same output as select_points, but only the k shortest intervals sharing a
/// right endpoint are examined, and counts/free points come from a Fenwick
/// tree and a predecessor union-find.
Selection select_points_fast(const IntervalFamily& active, int k);

using Assignment = std::pair<Point, Color>;

/// points[i] gets color (t-1)c + (i mod c) + 1.
std::vector<Assignment> assign_cyclic(const std::vector<Point>& points, int t, int c);

struct StepRecord {
    int t = 1;
    Selection selection;
    std::vector<Assignment> assignments;
    IntervalFamily active;
    IntervalFamily discarded;
    IntervalFamily survivors;
};

struct KColorTrace {
    int k = 1;
    Palette palette;
    std::vector<StepRecord> steps;

    int step_count() const { return static_cast<int>(steps.size()); }
};

struct KColorResult {
    Coloring coloring;
    KColorTrace trace;
};

enum class SelectPath { Naive, Fast };

/// Runs the discard loop until no interval is left. Throws PreconditionError
/// when the palette does not match k or the family, and InternalError if the
/// step count passes floor(log2 n) + 2.
KColorResult run_kcolor(const IntervalFamily& family, int k, const Palette& palette,
                        SelectPath path = SelectPath::Naive);

/// Pairwise check: every overlapping pair J before I has neither interval
/// inside the other and |I \ J| >= k.
bool is_theorem5_family(const IntervalFamily& family, int k);

enum class PaletteChoice { Auto, General, Special };

/// Auto prefers c = max|I| when every interval is shorter than k, then c = k
/// when is_theorem5_family holds, then c(k).
Palette choose_palette(const IntervalFamily& family, int k, PaletteChoice choice);

}  // namespace scf
