#pragma once

// Test-only helpers: the seeded instance corpus, a literal reading of the
// k-SCF definition used as an independent checker, and the step-trace
// invariant checks.

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "scf/io.hpp"
#include "scf/kcolor.hpp"
#include "scf/model.hpp"

namespace scf::testing {

struct CorpusItem {
    IntervalFamily family;
    int k = 1;
    GenSpec spec;
};

/// m distinct intervals drawn from the complete family on n points.
inline IntervalFamily dense_subfamily(int n, int m, std::uint64_t seed) {
    std::vector<std::pair<int, int>> all;
    for (int l = 1; l <= n; ++l)
        for (int r = l; r <= n; ++r) all.emplace_back(l, r);
    std::mt19937_64 rng(seed);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min(all.size(), static_cast<std::size_t>(m)));
    return normalize_family(all, n);
}

/// Seeded instances with n <= 30, m <= 40, k in 1..4, cycling through
/// uniform random endpoints, multi-scale nested intervals and dense subsets
/// of the complete family. Every third instance has n <= 9 so the exhaustive
/// search can run on it.
inline std::vector<CorpusItem> corpus(int count = 1200) {
    std::vector<CorpusItem> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        GenSpec spec;
        spec.seed = 1000003ULL * static_cast<unsigned>(i) + 17;
        spec.n = (i % 3 == 0) ? 1 + (i / 3) % 9 : 1 + (i * 7) % 30;
        spec.m = (i * 13) % 41;
        const int k = 1 + (i / 2) % 4;
        if (i % 5 == 4) {
            out.push_back({dense_subfamily(spec.n, spec.m, spec.seed), k, spec});
            continue;
        }
        spec.shape = (i % 2 == 0) ? Shape::Random : Shape::Nested;
        const auto file = gen_instance(spec);
        out.push_back({normalize_family(file.pairs, file.n), k, spec});
    }
    return out;
}

/// Larger instances that drive the step loop deeper: complete families up to
/// n = 64 and dense subsets of them, for every k in 1..4.
inline std::vector<CorpusItem> deep_corpus() {
    std::vector<CorpusItem> out;
    for (int n = 1; n <= 64; ++n)
        for (int k = 1; k <= 4; ++k) {
            GenSpec spec{n, n * (n + 1) / 2, 0, Shape::Complete, k};
            const auto file = gen_instance(spec);
            out.push_back({normalize_family(file.pairs, n), k, spec});
            for (std::uint64_t s = 1; s <= 3; ++s) {
                GenSpec sub{n, static_cast<int>(n * (n + 1) / (2 * (s + 1))) + 1, 977 * s + static_cast<std::uint64_t>(n), Shape::Random, k};
                out.push_back({dense_subfamily(n, sub.m, sub.seed), k, sub});
            }
        }
    return out;
}

/// k-SCF condition read literally: intervals of size <= k need pairwise
/// distinct positive colors, larger ones need k colors appearing once.
/// Color 0 is never counted.
inline bool definition_holds(const Coloring& c, const Interval& iv, int k) {
    std::map<Color, int> seen;
    for (Point p = iv.left; p <= iv.right; ++p) seen[c[p]]++;
    if (iv.size() <= k) {
        if (seen.count(0)) return false;
        return static_cast<int>(seen.size()) == iv.size();
    }
    int once = 0;
    for (const auto& [color, cnt] : seen) once += color > 0 && cnt == 1;
    return once >= k;
}

inline bool definition_holds(const IntervalFamily& f, const Coloring& c, int k) {
    return std::all_of(f.begin(), f.end(), [&](const Interval& iv) { return definition_holds(c, iv, k); });
}

/// Returns a list of violated trace properties; empty when all hold.
/// Count properties are only meaningful for the general palette.
inline std::vector<std::string> trace_violations(const IntervalFamily& family, int k, const KColorResult& run) {
    std::vector<std::string> bad;
    auto fail = [&](int t, const std::string& what) { bad.push_back("step " + std::to_string(t) + ": " + what); };
    const auto& trace = run.trace;
    const int c = trace.palette.colors_per_step;
    const bool general = trace.palette.mode == PaletteMode::General;

    if (family.n() > 0 && trace.step_count() > std::bit_width(static_cast<unsigned>(family.n())))
        fail(trace.step_count(), "more than floor(log2 n) + 1 steps");
    if (!trace.steps.empty() && !trace.steps.back().survivors.empty()) fail(trace.step_count(), "last survivors");

    Coloring cumulative(family.n());
    for (std::size_t s = 0; s < trace.steps.size(); ++s) {
        const auto& step = trace.steps[s];
        const int t = step.t;
        const auto& P = step.selection.points;
        std::vector<int> upto(static_cast<std::size_t>(family.n()) + 1, 0);
        for (Point p : P) upto[static_cast<std::size_t>(p)] = 1;
        for (std::size_t p = 1; p < upto.size(); ++p) upto[p] += upto[p - 1];
        auto count_in = [&](const Interval& iv) { return upto[iv.right] - upto[iv.left - 1]; };
        const IntervalFamily& expected_active = s == 0 ? family : trace.steps[s - 1].survivors;
        if (!(step.active == expected_active)) fail(t, "active family is not the previous survivors");

        for (const auto& [p, col] : step.assignments) {
            if (col < (t - 1) * c + 1 || col > t * c) fail(t, "color outside the step palette");
            cumulative[p] = col;
        }
        // survivors = active \ discarded
        for (const auto& iv : step.active) {
            if (step.discarded.contains(iv) == step.survivors.contains(iv))
                fail(t, to_string(iv) + " must be in exactly one of discarded/survivors");
            if (step.discarded.contains(iv) != is_k_colored(cumulative, iv, k).satisfied)
                fail(t, to_string(iv) + " discarded flag disagrees with k-coloredness");
        }

        for (const auto& iv : step.active) {
            const int inside = count_in(iv);
            if (inside < std::min(iv.size(), k)) fail(t, "too few selected points in " + to_string(iv));
            if (general && inside <= 4 * k - 2 && !step.discarded.contains(iv)) fail(t, "survivor with at most 4k-2 selected points " + to_string(iv));
            if (t >= 2 && iv.size() < k) fail(t, "survivor shorter than k " + to_string(iv));
            if (general && !step.discarded.contains(iv) && inside <= 2 * c - k)
                fail(t, "survivor below the 2c-k threshold " + to_string(iv));
        }
        for (const auto& outer : step.discarded)
            for (const auto& inner : step.active)
                if (outer.strictly_contains(inner) && !step.discarded.contains(inner))
                    fail(t, "discarded " + to_string(outer) + " keeps inner survivor " + to_string(inner));
        if (general) {
            for (const auto& iv : family) {
                const bool has_inside = std::any_of(step.active.begin(), step.active.end(),
                                                    [&](const Interval& j) { return iv.strictly_contains(j); });
                if (!has_inside && count_in(iv) > 2 * k - 1) fail(t, "more than 2k-1 selected points without an active sub-interval in " + to_string(iv));
            }
        }
        if (s > 0) {
            // Two disjoint members inside iv exist iff the earliest right end
            // among them comes before the latest left end.
            const auto& previous = trace.steps[s - 1].active;
            for (const auto& iv : step.active) {
                int min_right = iv.right + 1, max_left = iv.left - 1;
                for (const auto& a : previous)
                    if (iv.strictly_contains(a)) {
                        min_right = std::min(min_right, a.right);
                        max_left = std::max(max_left, a.left);
                    }
                if (!(min_right < max_left)) fail(t, "no two disjoint earlier members inside " + to_string(iv));
            }
        }
        // S(t): everything discarded so far is k-colored now.
        for (std::size_t u = 0; u <= s; ++u)
            for (const auto& iv : trace.steps[u].discarded)
                if (!is_k_colored(cumulative, iv, k).satisfied) fail(t, "discarded interval no longer k-colored " + to_string(iv));
        // Selection prefixes grow to the final selection.
        if (step.selection.prefix(step.active.size()) != P) fail(t, "prefix sets do not end at P_t");
    }
    if (!(cumulative == run.coloring)) bad.push_back("final coloring differs from replayed assignments");
    return bad;
}

}  // namespace scf::testing
