#pragma once

// Text formats and instance generation.
//
// Instance:  first line n, then one "<left> <right>" per line; '#' lines are
//            comments and blank lines are skipped.
// Coloring:  one "<point> <color>" line per point, ascending, color 0 written.
// Trace:     see write_trace().

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scf/kcolor.hpp"
#include "scf/model.hpp"

namespace scf {

class ParseError : public ValidationError {
public:
    ParseError(int line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

struct InstanceFile {
    int n = 0;
    std::vector<std::pair<int, int>> pairs;
};

InstanceFile read_instance_file(std::string_view text);

/// Parses and normalizes. If diagnostics is non-null, a note is written there
/// when duplicates were collapsed.
IntervalFamily parse_instance(std::string_view text, std::ostream* diagnostics = nullptr);

std::string emit_instance(const IntervalFamily& family);
std::string emit_instance(const InstanceFile& file);

std::string emit_coloring(const Coloring& coloring);

/// Lines must list points 1..N exactly once each, in any order.
Coloring parse_coloring(std::string_view text);

enum class Shape { Random, Nested, LaminarFree, Complete };

Shape parse_shape(std::string_view name);
std::string_view to_string(Shape shape);

struct GenSpec {
    int n = 1;
    int m = 0;
    std::uint64_t seed = 0;
    Shape shape = Shape::Random;
    int k = 1;  ///< only used by LaminarFree
};

/// Deterministic in the spec. LaminarFree builds a left-to-right chain whose
/// right endpoints advance by at least k, so every overlap leaves k new points.
InstanceFile gen_instance(const GenSpec& spec);

/// Plain-text trace, one block per step:
///
///   trace k=<k> palette=<mode> c=<colors per step> steps=<count>
///   step <t>
///   active <l>-<r> ...
///   select <l>-<r> : <points added> ...     (one line per active interval)
///   selected <p> ...
///   assign <p>:<color> ...
///   discarded <l>-<r> ...
///   survivors <l>-<r> ...
///   end
std::string write_trace(const KColorTrace& trace);

}  // namespace scf
