#pragma once

#include "treewalk/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

namespace treewalk {

/// Reads the TWG text format:
///
///     # optional comment lines (also blank lines)
///     n
///     u v w      (one per edge, 0-based, decimal weight)
///
/// Errors carry the 1-based line number of the offending line.
WeightedGraph parse_graph(std::istream& in);
WeightedGraph parse_graph(std::string_view text);
WeightedGraph read_graph_file(const std::filesystem::path& path);

/// Writes TWG with edges sorted by (u, v) and weights at 12 significant digits.
std::string format_graph(const WeightedGraph& g);

/// `%.12g`-style formatting used by every text/JSON emitter.
std::string format_real(double x, int significant_digits = 12);

}  // namespace treewalk
