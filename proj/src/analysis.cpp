#include "scf/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "scf/complete.hpp"

namespace scf {

Ratio::Ratio(long long n, long long d) : num(n), den(d) {
    if (den == 0) throw ValidationError("ratio with zero denominator");
    const long long g = std::gcd(num, den);
    if (g != 0) {
        num /= g;
        den /= g;
    }
}

std::string Ratio::str() const { return std::to_string(num) + "/" + std::to_string(den); }

std::string Ratio::decimal(int digits) const {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(digits);
    out << static_cast<long double>(num) / static_cast<long double>(den);
    return out.str();
}

VerifyReport verify(const IntervalFamily& family, const Coloring& coloring, int k) {
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    if (coloring.n() != family.n())
        throw ValidationError("coloring has " + std::to_string(coloring.n()) + " points but the family has " +
                              std::to_string(family.n()));
    VerifyReport rep;
    rep.k = k;
    rep.statuses.reserve(family.size());
    for (const auto& iv : family) {
        auto status = is_k_colored(coloring, iv, k);
        if (!status.satisfied) rep.failing.push_back(status);
        rep.statuses.push_back(std::move(status));
    }
    rep.overall = rep.failing.empty();
    return rep;
}

namespace {

class ExhaustiveSearch {
public:
    ExhaustiveSearch(const IntervalFamily& family, int k, Semantics semantics)
        : family_(family), k_(k), semantics_(semantics),
          ends_at_(static_cast<std::size_t>(family.n()) + 1),
          colors_(static_cast<std::size_t>(family.n()) + 1, 0) {
        for (const auto& iv : family) ends_at_[iv.right].push_back(iv);
    }

    bool run(int palette) {
        palette_ = palette;
        count_.assign(static_cast<std::size_t>(palette) + 1, 0);
        return extend(1, 0);
    }

    std::vector<Color> witness() const { return {colors_.begin() + 1, colors_.end()}; }
    long long nodes() const { return nodes_; }

private:
    bool satisfied(const Interval& iv) {
        std::fill(count_.begin(), count_.end(), 0);
        for (Point p = iv.left; p <= iv.right; ++p) ++count_[colors_[p]];
        int unique = 0;
        for (int c = 1; c <= palette_; ++c) unique += count_[c] == 1;
        return unique >= std::min(iv.size(), k_);
    }

    bool extend(Point p, int used) {
        ++nodes_;
        if (p > family_.n()) return true;
        const Color lowest = semantics_ == Semantics::Partial ? 0 : 1;
        const Color highest = std::min(used + 1, palette_);
        for (Color c = lowest; c <= highest; ++c) {
            colors_[p] = c;
            bool ok = true;
            for (const auto& iv : ends_at_[p])
                if (!satisfied(iv)) {
                    ok = false;
                    break;
                }
            if (ok && extend(p + 1, std::max(used, c))) return true;
        }
        colors_[p] = 0;
        return false;
    }

    const IntervalFamily& family_;
    int k_;
    Semantics semantics_;
    int palette_ = 0;
    std::vector<std::vector<Interval>> ends_at_;
    std::vector<Color> colors_;
    std::vector<int> count_;
    long long nodes_ = 0;
};

}  // namespace

OptResult oracle_chi(const IntervalFamily& family, int k, Semantics semantics, int max_colors) {
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    OptResult res;
    res.semantics = semantics;
    if (family.n() > 10)
        res.warning = "exhaustive search on " + std::to_string(family.n()) + " points may take very long";
    if (max_colors < 0) max_colors = family.n();

    int start = 0;
    for (const auto& iv : family) start = std::max(start, std::min(iv.size(), k));

    ExhaustiveSearch search(family, k, semantics);
    for (int palette = start; palette <= max_colors; ++palette) {
        if (search.run(palette)) {
            res.found = true;
            res.witness = Coloring(search.witness());
            res.chi_star = res.witness.distinct_positive();
            break;
        }
    }
    res.nodes = search.nodes();
    return res;
}

int combine_lower_bounds(int chi1, int chi2, int k) {
    const int hi = std::max(chi1, chi2);
    const int gap = std::abs(chi2 - chi1);
    if (k <= gap) return hi;
    return hi + (k - gap + 1) / 2;
}

int lb_dp(const IntervalFamily& family, int k) {
    if (k < 1) throw ValidationError("k must be at least 1, got " + std::to_string(k));
    const auto& ivs = family.intervals();
    std::vector<int> f(ivs.size(), 0);
    int best = 0;
    for (std::size_t i = 0; i < ivs.size(); ++i) {
        const Interval& outer = ivs[i];
        const int need = std::min(outer.size(), k);
        int value = need;

        // Split point s separates a member ending at or before s from one
        // starting after s; monotonicity of the combination lets each side
        // take its own maximum.
        const auto width = static_cast<std::size_t>(outer.size());
        std::vector<int> ends_by(width, 0), starts_after(width + 1, 0);
        for (std::size_t j = 0; j < i; ++j) {
            const Interval& inner = ivs[j];
            if (!outer.strictly_contains(inner)) continue;
            auto& e = ends_by[static_cast<std::size_t>(inner.right - outer.left)];
            e = std::max(e, f[j]);
            auto& s = starts_after[static_cast<std::size_t>(inner.left - outer.left)];
            s = std::max(s, f[j]);
        }
        for (std::size_t s = 1; s < width; ++s) ends_by[s] = std::max(ends_by[s], ends_by[s - 1]);
        for (std::size_t s = width; s-- > 0;) starts_after[s] = std::max(starts_after[s], starts_after[s + 1]);
        for (std::size_t s = 0; s + 1 < width; ++s) {
            const int a = ends_by[s];
            const int b = starts_after[s + 1];
            if (a > 0 && b > 0) value = std::max(value, combine_lower_bounds(a, b, need));
        }
        f[i] = value;
        best = std::max(best, value);
    }
    return best;
}

int lb_complete(int n, int k) {
    if (n < 1 || k < 1) throw ValidationError("lb_complete needs n >= 1 and k >= 1");
    int exponent = 0;
    for (long long reach = k; reach < n; reach *= 2) ++exponent;
    return (k + 1) / 2 * exponent;
}

bool is_complete_family(const IntervalFamily& family) {
    const auto n = static_cast<std::size_t>(family.n());
    return n > 0 && family.size() == n * (n + 1) / 2;
}

BoundReport report(const IntervalFamily& family, int k, PaletteChoice choice, int oracle_limit) {
    BoundReport rep;
    rep.k = k;
    rep.palette = choose_palette(family, k, choice);
    rep.ratio_guarantee = Ratio(c_of_k(k), (k + 1) / 2);
    if (family.empty()) {
        rep.lb_dp = 0;
        rep.chi_partial = 0;
        rep.chi_total = family.n() > 0 ? std::optional<int>(1) : std::optional<int>(0);
        return rep;
    }

    const auto run = run_kcolor(family, k, rep.palette);
    rep.algorithm_colors = run.coloring.distinct_positive();
    rep.steps = run.trace.step_count();
    rep.verified = verify(family, run.coloring, k).overall;
    rep.lb_dp = lb_dp(family, k);
    if (is_complete_family(family)) rep.lb_complete = lb_complete(family.n(), k);

    const int half = (k + 1) / 2;
    if (family.max_interval_size() >= k) {
        rep.lemma5_floor = k + (rep.steps - 1) * half;
        rep.lemma5_stated = k + rep.steps * half;
    } else {
        rep.lemma5_floor = rep.lemma5_stated = family.max_interval_size();
    }

    if (family.n() <= oracle_limit) {
        const auto partial = oracle_chi(family, k, Semantics::Partial);
        const auto total = oracle_chi(family, k, Semantics::Total);
        if (partial.found) {
            rep.chi_partial = partial.chi_star;
            rep.ratio = Ratio(rep.algorithm_colors, partial.chi_star);
        }
        if (total.found) rep.chi_total = total.chi_star;
    }
    return rep;
}

}  // namespace scf
