#include "scf/complete.hpp"

#include <bit>

namespace scf {

IntervalFamily complete_family(int n) {
    if (n < 1) throw ValidationError("number of points must be at least 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> raw;
    raw.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2);
    for (int l = 1; l <= n; ++l)
        for (int r = l; r <= n; ++r) raw.emplace_back(l, r);
    return normalize_family(raw, n);
}

BlockPartition::BlockPartition(int n_, int k_) : n(n_), k(k_), blocks(0) {
    if (n < 1) throw ValidationError("number of points must be at least 1, got " + std::to_string(n));
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    blocks = (n + k - 1) / k;
}

namespace {

void color_range(const BlockPartition& part, int first, int last, int depth, std::vector<Color>& padded) {
    if (first > last) return;
    const int median = first + (last - first + 2) / 2 - 1;
    const ColorSet set{part.k, depth};
    const Interval block = part.block(median);
    for (Point p = block.left; p <= block.right; ++p) padded[p - 1] = set.first() + (p - block.left);
    color_range(part, first, median - 1, depth + 1, padded);
    color_range(part, median + 1, last, depth + 1, padded);
}

}  // namespace

Coloring knc_color(int n, int k) {
    const BlockPartition part(n, k);
    std::vector<Color> padded(static_cast<std::size_t>(part.padded_n()), 0);
    color_range(part, 1, part.blocks, 1, padded);
    padded.resize(static_cast<std::size_t>(n));
    return Coloring(std::move(padded));
}

int knc_color_bound(int n, int k) {
    const BlockPartition part(n, k);
    return k * static_cast<int>(std::bit_width(static_cast<unsigned>(part.blocks)));
}

}  // namespace scf
