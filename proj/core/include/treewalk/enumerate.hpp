#pragma once

#include "treewalk/canonical.hpp"
#include "treewalk/graph.hpp"
#include "treewalk/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace treewalk {

/// Decode a Prüfer sequence of length n-2 over 0..n-1 into a unit-weight tree.
WeightedGraph prufer_decode(std::span<const Vertex> sequence, std::size_t n);

/// Streams all n^(n-2) labeled trees on n vertices (unit weights), one
/// per Prüfer sequence, in lexicographic sequence order. 1 <= n <= 9.
class LabeledTreeStream {
public:
    explicit LabeledTreeStream(std::size_t n);

    std::optional<WeightedGraph> next();
    std::uint64_t total() const noexcept { return total_; }

private:
    std::size_t n_;
    std::vector<Vertex> seq_;
    std::uint64_t total_;
    std::uint64_t emitted_ = 0;
};

/// Callback form of LabeledTreeStream.
void for_each_labeled_tree(std::size_t n, const std::function<void(const WeightedGraph&)>& fn);

std::uint64_t labeled_tree_count(std::size_t n);

/// Rebuild a tree from its canonical code. Vertex 0 is the root, the rest
/// follow in preorder. Inverse of canonical_form up to isomorphism.
WeightedGraph tree_from_canonical(const CanonicalForm& form);

/// One representative per isomorphism class of unit-weight trees on n
/// vertices (1 <= n <= 10), sorted by canonical code. Each representative
/// is the tree_from_canonical labeling. Uses the level-sequence route;
/// the Prüfer route below is an independent and much slower check.
std::vector<WeightedGraph> enumerate_free_trees(std::size_t n);

/// Free trees by Prüfer enumeration plus canonical dedup (n <= 9).
std::vector<WeightedGraph> free_trees_by_prufer(std::size_t n);

/// Free trees from the Beyer–Hedetniemi rooted level-sequence successor,
/// deduplicated by center-rooted canonical form (n <= 16).
std::vector<WeightedGraph> free_trees_by_level_sequences(std::size_t n);

/// Calls fn once per distinct permutation of the multiset `values`, in
/// ascending lexicographic order. Values compare with operator<, so only
/// bit-identical doubles count as equal.
void for_each_distinct_permutation(std::vector<double> values,
                                   const std::function<void(std::span<const double>)>& fn);

/// Uniform random labeled tree on n vertices with weights drawn
/// log-uniformly from [lo, hi].
WeightedGraph random_weighted_tree(Xorshift64Star& rng, std::size_t n, double lo, double hi);

/// Random connected graph: a random tree plus each remaining pair with
/// probability p, weights log-uniform in [lo, hi].
WeightedGraph random_connected_graph(Xorshift64Star& rng, std::size_t n, double p, double lo,
                                     double hi);

}  // namespace treewalk
