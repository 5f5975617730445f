#pragma once

// Recursive block coloring of the complete interval hypergraph H_n.

#include "scf/model.hpp"

namespace scf {

/// All n(n+1)/2 intervals on 1..n. Throws ValidationError for n < 1.
IntervalFamily complete_family(int n);

/// The n points padded up to h = ceil(n/k) blocks of k consecutive points.
struct BlockPartition {
    int n = 0;
    int k = 1;
    int blocks = 0;

    BlockPartition(int n, int k);

    int padded_n() const { return blocks * k; }
    Interval block(int j) const { return {(j - 1) * k + 1, j * k}; }
};

/// Colors k(t-1)+1 .. kt reserved for recursion depth t.
struct ColorSet {
    int k = 1;
    int depth = 1;

    Color first() const { return k * (depth - 1) + 1; }
    Color last() const { return k * depth; }
};

/// The median block of each block range takes the current depth's color set
/// left to right; both sides recurse one level deeper. Padding points are
/// dropped from the result.
Coloring knc_color(int n, int k);

/// k(floor(log2 ceil(n/k)) + 1).
int knc_color_bound(int n, int k);

}  // namespace scf
