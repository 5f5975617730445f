#pragma once

// Verification, the exhaustive optimum, lower bounds and per-instance ratio
// reports.

#include <optional>
#include <string>
#include <vector>

#include "scf/kcolor.hpp"
#include "scf/model.hpp"

namespace scf {

/// Exact non-negative rational, always stored in lowest terms.
struct Ratio {
    long long num = 0;
    long long den = 1;

    Ratio() = default;
    Ratio(long long n, long long d);

    std::string str() const;          ///< "a/b"
    std::string decimal(int digits = 4) const;

    bool operator==(const Ratio&) const = default;
    friend bool operator<=(const Ratio& a, const Ratio& b) { return a.num * b.den <= b.num * a.den; }
    friend bool operator<(const Ratio& a, const Ratio& b) { return a.num * b.den < b.num * a.den; }
};

struct VerifyReport {
    int k = 1;
    std::vector<KColoredStatus> statuses;
    std::vector<KColoredStatus> failing;
    bool overall = true;
};

/// Checks every member of the family. Throws ValidationError if the coloring
/// and the family disagree on n.
VerifyReport verify(const IntervalFamily& family, const Coloring& coloring, int k);

enum class Semantics { Partial, Total };

struct OptResult {
    bool found = false;
    int chi_star = 0;
    Coloring witness;
    Semantics semantics = Semantics::Partial;
    std::string warning;   ///< set when the instance is larger than the search is meant for
    long long nodes = 0;
};

/// Exhaustive minimum over colorings with restricted-growth labels. The
/// witness is the lexicographically smallest valid coloring at the optimum.
/// Partial semantics lets points keep color 0 for free; total forces every
/// point positive. max_colors < 0 means n.
OptResult oracle_chi(const IntervalFamily& family, int k, Semantics semantics = Semantics::Partial,
                     int max_colors = -1);

/// Lower bound for an interval holding two disjoint sub-intervals whose own
/// bounds are chi1 and chi2.
int combine_lower_bounds(int chi1, int chi2, int k);

/// Lower bound from nesting: f(I) = max(min(|I|,k), best combination over
/// disjoint member pairs strictly inside I), maximised over the family.
int lb_dp(const IntervalFamily& family, int k);

/// ceil(k/2) * ceil(log2(n/k)); 0 when n <= k.
int lb_complete(int n, int k);

bool is_complete_family(const IntervalFamily& family);

struct BoundReport {
    int k = 1;
    Palette palette;
    int algorithm_colors = 0;
    int steps = 0;
    bool verified = true;
    int lb_dp = 0;
    std::optional<int> lb_complete;
    Ratio ratio_guarantee;       ///< c(k) / ceil(k/2)
    int lemma5_floor = 0;        ///< k + (steps-1) ceil(k/2)
    int lemma5_stated = 0;       ///< k + steps ceil(k/2), reported for comparison only
    std::optional<int> chi_partial;
    std::optional<int> chi_total;
    std::optional<Ratio> ratio;  ///< algorithm_colors / chi_partial
};

BoundReport report(const IntervalFamily& family, int k, PaletteChoice choice = PaletteChoice::Auto,
                   int oracle_limit = 9);

}  // namespace scf
