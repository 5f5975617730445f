#include "scf/io.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <random>
#include <sstream>

#include "scf/complete.hpp"

namespace scf {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && !(line[j] == ' ' || line[j] == '\t' || line[j] == '\r')) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, int& value) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc{} && ptr == tok.data() + tok.size();
}

// Calls fn(line_number, tokens) for every non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn fn) {
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        ++line_no;
        pos = nl + 1;
        auto toks = split_ws(line);
        if (toks.empty() || toks.front().front() == '#') continue;
        fn(line_no, toks);
    }
}

void write_intervals(std::ostringstream& out, std::string_view label, const IntervalFamily& family) {
    out << label;
    for (const auto& iv : family) out << ' ' << iv.left << '-' << iv.right;
    out << '\n';
}

}  // namespace

InstanceFile read_instance_file(std::string_view text) {
    InstanceFile file;
    bool have_n = false;
    for_each_record(text, [&](int line, const std::vector<std::string_view>& toks) {
        if (!have_n) {
            if (toks.size() != 1 || !parse_int(toks[0], file.n))
                throw ParseError(line, "expected the number of points");
            if (file.n < 1) throw ParseError(line, "number of points must be at least 1");
            have_n = true;
            return;
        }
        int l = 0, r = 0;
        if (toks.size() != 2 || !parse_int(toks[0], l) || !parse_int(toks[1], r))
            throw ParseError(line, "expected \"<left> <right>\"");
        const std::string pair = "(" + std::to_string(l) + "," + std::to_string(r) + ")";
        if (l > r) throw ParseError(line, "interval " + pair + " has left > right");
        if (l < 1 || r > file.n)
            throw ParseError(line, "interval " + pair + " is outside points 1.." + std::to_string(file.n));
        file.pairs.emplace_back(l, r);
    });
    if (!have_n) throw ParseError(1, "missing number of points");
    return file;
}

IntervalFamily parse_instance(std::string_view text, std::ostream* diagnostics) {
    const auto file = read_instance_file(text);
    auto family = normalize_family(file.pairs, file.n);
    if (diagnostics && family.duplicates_removed() > 0) {
        const auto d = family.duplicates_removed();
        *diagnostics << d << (d == 1 ? " duplicate removed\n" : " duplicates removed\n");
    }
    return family;
}

std::string emit_instance(const InstanceFile& file) {
    std::ostringstream out;
    out << file.n << '\n';
    for (const auto& [l, r] : file.pairs) out << l << ' ' << r << '\n';
    return out.str();
}

std::string emit_instance(const IntervalFamily& family) {
    InstanceFile file{family.n(), {}};
    for (const auto& iv : family) file.pairs.emplace_back(iv.left, iv.right);
    return emit_instance(file);
}

std::string emit_coloring(const Coloring& coloring) {
    std::ostringstream out;
    for (Point p = 1; p <= coloring.n(); ++p) out << p << ' ' << coloring[p] << '\n';
    return out.str();
}

Coloring parse_coloring(std::string_view text) {
    std::vector<std::pair<Point, Color>> entries;
    for_each_record(text, [&](int line, const std::vector<std::string_view>& toks) {
        int p = 0, c = 0;
        if (toks.size() != 2 || !parse_int(toks[0], p) || !parse_int(toks[1], c))
            throw ParseError(line, "expected \"<point> <color>\"");
        if (p < 1) throw ParseError(line, "point must be positive");
        if (c < 0) throw ParseError(line, "color must be non-negative");
        entries.emplace_back(p, c);
    });
    std::vector<Color> colors(entries.size(), -1);
    for (const auto& [p, c] : entries) {
        if (p > static_cast<int>(entries.size()))
            throw ValidationError("coloring skips points: saw point " + std::to_string(p) + " among " +
                                  std::to_string(entries.size()) + " entries");
        auto& slot = colors[static_cast<std::size_t>(p - 1)];
        if (slot >= 0) throw ValidationError("point " + std::to_string(p) + " colored twice");
        slot = c;
    }
    return Coloring(std::move(colors));
}

Shape parse_shape(std::string_view name) {
    if (name == "random") return Shape::Random;
    if (name == "nested") return Shape::Nested;
    if (name == "laminar-free") return Shape::LaminarFree;
    if (name == "complete") return Shape::Complete;
    throw ValidationError("unknown shape '" + std::string(name) + "'");
}

std::string_view to_string(Shape shape) {
    switch (shape) {
        case Shape::Random: return "random";
        case Shape::Nested: return "nested";
        case Shape::LaminarFree: return "laminar-free";
        case Shape::Complete: return "complete";
    }
    return "unknown";
}

InstanceFile gen_instance(const GenSpec& spec) {
    if (spec.n < 1) throw ValidationError("gen: n must be at least 1");
    if (spec.m < 0) throw ValidationError("gen: m must be non-negative");
    if (spec.k < 1) throw ValidationError("gen: k must be at least 1");

    InstanceFile file;
    file.n = spec.n;
    std::mt19937_64 rng(spec.seed);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    switch (spec.shape) {
        case Shape::Complete:
            for (const auto& iv : complete_family(spec.n)) file.pairs.emplace_back(iv.left, iv.right);
            break;
        case Shape::Random:
            for (int i = 0; i < spec.m; ++i) {
                int a = uniform(1, spec.n), b = uniform(1, spec.n);
                file.pairs.emplace_back(std::min(a, b), std::max(a, b));
            }
            break;
        case Shape::Nested: {
            // A few centers, each grown into intervals at doubling scales.
            std::vector<int> centers(static_cast<std::size_t>(uniform(1, std::max(1, spec.n / 4))));
            for (auto& c : centers) c = uniform(1, spec.n);
            int levels = 0;
            while ((1 << levels) < spec.n) ++levels;
            for (int i = 0; i < spec.m; ++i) {
                const int c = centers[static_cast<std::size_t>(uniform(0, static_cast<int>(centers.size()) - 1))];
                const int reach = (1 << uniform(0, levels)) - 1;
                file.pairs.emplace_back(std::max(1, c - uniform(0, reach)), std::min(spec.n, c + uniform(0, reach)));
            }
            break;
        }
        case Shape::LaminarFree: {
            const long long need = static_cast<long long>(spec.m) * spec.k;
            if (need > spec.n)
                throw ValidationError("gen: a laminar-free chain of " + std::to_string(spec.m) +
                                      " intervals with k=" + std::to_string(spec.k) + " needs at least " +
                                      std::to_string(need) + " points, have " + std::to_string(spec.n));
            int prev_left = 0, prev_right = 0;
            for (int i = 0; i < spec.m; ++i) {
                const int remaining = spec.m - 1 - i;
                const int r = uniform(prev_right + spec.k, spec.n - remaining * spec.k);
                const int l = uniform(prev_left + 1, r - spec.k + 1);
                file.pairs.emplace_back(l, r);
                prev_left = l;
                prev_right = r;
            }
            break;
        }
    }
    return file;
}

std::string write_trace(const KColorTrace& trace) {
    std::ostringstream out;
    out << "trace k=" << trace.k << " palette=" << to_string(trace.palette.mode)
        << " c=" << trace.palette.colors_per_step << " steps=" << trace.step_count() << '\n';
    for (const auto& step : trace.steps) {
        out << "step " << step.t << '\n';
        write_intervals(out, "active", step.active);
        for (std::size_t i = 0; i < step.active.size(); ++i) {
            out << "select " << step.active[i].left << '-' << step.active[i].right << " :";
            for (Point p : step.selection.added[i]) out << ' ' << p;
            out << '\n';
        }
        out << "selected";
        for (Point p : step.selection.points) out << ' ' << p;
        out << "\nassign";
        for (const auto& [p, c] : step.assignments) out << ' ' << p << ':' << c;
        out << '\n';
        write_intervals(out, "discarded", step.discarded);
        write_intervals(out, "survivors", step.survivors);
        out << "end\n";
    }
    return out.str();
}

}  // namespace scf
