#include "treewalk/io.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <vector>

namespace treewalk {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_index(std::string_view tok, std::size_t& out) {
    const auto* end = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(tok.data(), end, out);
    return ec == std::errc() && p == end;
}

bool parse_weight(std::string_view tok, double& out) {
    // from_chars for double is unavailable on older libstdc++; strtod on a copy.
    const std::string s(tok);
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size() && !s.empty();
}

}  // namespace

WeightedGraph parse_graph(std::istream& in) {
    std::string raw;
    std::size_t lineno = 0;
    bool have_n = false;
    std::size_t n = 0;
    std::vector<Edge> edges;
    std::set<std::pair<Vertex, Vertex>> seen;

    while (std::getline(in, raw)) {
        ++lineno;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto toks = split_ws(line);
        if (!have_n) {
            if (toks.size() != 1 || !parse_index(toks[0], n)) {
                throw ParseError(lineno, "expected vertex count");
            }
            have_n = true;
            continue;
        }
        Edge e{};
        if (toks.size() != 3 || !parse_index(toks[0], e.u) || !parse_index(toks[1], e.v) ||
            !parse_weight(toks[2], e.w)) {
            throw ParseError(lineno, "malformed edge line, expected 'u v w'");
        }
        if (e.u >= n || e.v >= n) throw ParseError(lineno, "vertex index >= n");
        if (e.u == e.v) throw ParseError(lineno, "loop");
        if (!(e.w > 0.0) || !std::isfinite(e.w)) throw ParseError(lineno, "non-positive weight");
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
            throw ParseError(lineno, "duplicate edge");
        }
        edges.push_back(e);
    }
    if (!have_n) throw ParseError(0, "missing vertex count");
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph parse_graph(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_graph(in);
}

WeightedGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path.string());
    return parse_graph(in);
}

std::string format_real(double x, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    return buf;
}

std::string format_graph(const WeightedGraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
    std::string out = std::to_string(g.vertex_count()) + "\n";
    for (const Edge& e : edges) {
        out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + format_real(e.w) + "\n";
    }
    return out;
}

}  // namespace treewalk
