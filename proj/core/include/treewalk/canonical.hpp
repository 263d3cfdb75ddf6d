#pragma once

#include "treewalk/graph.hpp"

#include <compare>
#include <string>
#include <vector>

namespace treewalk {

/// Isomorphism-invariant encoding of a weighted tree. Two trees have equal
/// codes iff some vertex bijection maps edges to edges of identical weight.
/// Codes are totally ordered (lexicographic on the token string).
struct CanonicalForm {
    std::string code;

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
    friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

enum class WeightLabels { include, ignore };

/// The center vertices of a tree (one or two), found by leaf peeling.
std::vector<Vertex> tree_centers(const WeightedGraph& t);

/// AHU encoding rooted at the tree center, each subtree prefixed with the
/// weight of its parent edge. With a bicentral tree both rootings are
/// encoded and the lexicographic minimum kept. Weights are written with
/// 17 significant digits so that equal tokens mean bit-identical doubles.
/// Throws GraphError if t is not a tree.
CanonicalForm canonical_form(const WeightedGraph& t,
                             WeightLabels labels = WeightLabels::include);

}  // namespace treewalk
