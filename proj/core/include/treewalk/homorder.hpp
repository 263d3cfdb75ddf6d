#pragma once

#include "treewalk/canonical.hpp"
#include "treewalk/graph.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace treewalk {

/// Unweighted simple graph used as a homomorphism target.
class SimpleGraph {
public:
    SimpleGraph() = default;
    /// GraphError on loops, duplicates, or out-of-range endpoints.
    SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges, std::string id = {});
    /// Drops the weights of g.
    static SimpleGraph from(const WeightedGraph& g, std::string id = {});

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Vertex> neighbors(Vertex u) const { return adj_.at(u); }
    std::span<const std::pair<Vertex, Vertex>> edges() const noexcept { return edges_; }
    bool adjacent(Vertex u, Vertex v) const noexcept;
    const std::string& id() const noexcept { return id_; }

private:
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::string id_;
};

SimpleGraph complete_graph(std::size_t k);

/// hom(T, G) by bottom-up DP over T rooted at vertex 0:
/// table[x][y] = Π_{children c} Σ_{z ~ y} table[c][z]. Weights of t are
/// ignored. GraphError if t is not a tree; NumericalError on 64-bit overflow.
std::uint64_t hom_count(const WeightedGraph& t, const SimpleGraph& g);

/// All connected simple graphs on min_n..max_n vertices up to isomorphism
/// (edge-subset enumeration, dedup by minimum relabeled adjacency mask),
/// ordered by vertex count then mask. Ids are "g<n>_<index>".
/// Supports 1 <= min_n <= max_n <= 6.
std::vector<SimpleGraph> connected_graph_corpus(std::size_t min_n, std::size_t max_n);

enum class HomVerdict { dominates, dominated, equal, incomparable };

std::string_view to_string(HomVerdict v);

struct HomWitness {
    std::size_t graph = 0;  // corpus index
    std::uint64_t first = 0;
    std::uint64_t second = 0;
};

struct HomComparison {
    HomVerdict verdict = HomVerdict::equal;
    /// First corpus graph where hom(T, G) > hom(T', G), and where it is smaller.
    std::vector<HomWitness> witnesses;
};

/// Corpus approximation of Sidorenko's order: `dominates` iff
/// hom(t, G) >= hom(t2, G) on every corpus graph with strict inequality on
/// at least one. GraphError when |t| != |t2|.
HomComparison corpus_dominates(const WeightedGraph& t, const WeightedGraph& t2,
                               std::span<const SimpleGraph> corpus);

struct HomPair {
    std::size_t first = 0;   // tree index
    std::size_t second = 0;  // tree index, first < second
    HomComparison comparison;
};

struct ConjectureViolation {
    std::size_t dominant = 0;   // T with T ≽ T' on the corpus
    std::size_t dominated = 0;  // T'
    double alpha_dominant = 0.0;
    double alpha_dominated = 0.0;
    /// Set by refine_violations when a larger corpus breaks the dominance.
    bool corpus_false_positive = false;
};

struct HomDominanceReport {
    std::size_t n = 0;
    std::vector<std::string> corpus_ids;
    std::vector<CanonicalForm> trees;
    std::vector<double> alpha;
    std::vector<HomPair> pairs;
    std::vector<ConjectureViolation> violations;
};

/// For every pair of free trees on n vertices (n <= 8), compare them on
/// the corpus; whenever T dominates T', require α(T') >= α(T) - slack.
/// Failures are recorded, never thrown.
HomDominanceReport conjecture_scan(std::size_t n, std::span<const SimpleGraph> corpus,
                                   double slack = 1e-10);

/// Re-check each violation against a larger corpus and flag those whose
/// dominance no longer holds.
void refine_violations(HomDominanceReport& report, std::span<const SimpleGraph> extended_corpus);

}  // namespace treewalk
