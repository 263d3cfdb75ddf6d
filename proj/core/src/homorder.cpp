#include "treewalk/homorder.hpp"

#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace treewalk {

SimpleGraph::SimpleGraph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                         std::string id)
    : adj_(n), id_(std::move(id)) {
    std::set<std::pair<Vertex, Vertex>> seen;
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) throw GraphError("simple graph endpoint out of range");
        if (u == v) throw GraphError("simple graph has a loop");
        if (u > v) std::swap(u, v);
        if (!seen.emplace(u, v).second) throw GraphError("simple graph has a duplicate edge");
        edges_.emplace_back(u, v);
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
}

SimpleGraph SimpleGraph::from(const WeightedGraph& g, std::string id) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (const Edge& x : g.edges()) e.emplace_back(x.u, x.v);
    return SimpleGraph(g.vertex_count(), e, std::move(id));
}

bool SimpleGraph::adjacent(Vertex u, Vertex v) const noexcept {
    if (u >= adj_.size()) return false;
    return std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end();
}

SimpleGraph complete_graph(std::size_t k) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < k; ++u)
        for (Vertex v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return SimpleGraph(k, e, "K" + std::to_string(k));
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw NumericalError("homomorphism count overflows 64 bits");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw NumericalError("homomorphism count overflows 64 bits");
    return r;
}

}  // namespace

std::uint64_t hom_count(const WeightedGraph& t, const SimpleGraph& g) {
    require_tree(t);
    const std::size_t nt = t.vertex_count();
    const std::size_t ng = g.vertex_count();
    if (ng == 0) return 0;

    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(nt, static_cast<Vertex>(-1));
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        const Vertex u = order[i];
        for (const Neighbor& nb : t.neighbors(u)) {
            if (nb.v == 0 || parent[nb.v] != static_cast<Vertex>(-1)) continue;
            parent[nb.v] = u;
            order.push_back(nb.v);
        }
    }

    std::vector<std::vector<std::uint64_t>> table(nt, std::vector<std::uint64_t>(ng, 1));
    for (std::size_t i = order.size(); i-- > 1;) {
        const Vertex child = order[i];
        const Vertex p = parent[child];
        for (Vertex y = 0; y < ng; ++y) {
            std::uint64_t s = 0;
            for (Vertex z : g.neighbors(y)) s = checked_add(s, table[child][z]);
            table[p][y] = checked_mul(table[p][y], s);
        }
    }
    std::uint64_t total = 0;
    for (Vertex y = 0; y < ng; ++y) total = checked_add(total, table[0][y]);
    return total;
}

std::vector<SimpleGraph> connected_graph_corpus(std::size_t min_n, std::size_t max_n) {
    if (min_n < 1 || min_n > max_n || max_n > 6) {
        throw GuardError("graph corpus supports 1 <= min_n <= max_n <= 6");
    }
    std::vector<SimpleGraph> out;
    for (std::size_t n = min_n; n <= max_n; ++n) {
        std::vector<std::pair<Vertex, Vertex>> pairs;
        std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                pair_index[u][v] = pair_index[v][u] = pairs.size();
                pairs.emplace_back(u, v);
            }
        std::vector<std::vector<Vertex>> perms;
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), Vertex{0});
        do perms.push_back(perm);
        while (std::next_permutation(perm.begin(), perm.end()));

        std::set<std::uint32_t> canon;
        const std::uint32_t limit = std::uint32_t{1} << pairs.size();
        for (std::uint32_t mask = 0; mask < limit; ++mask) {
            // connectivity by bit-parallel BFS
            std::vector<std::uint32_t> nbr(n, 0);
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                if ((mask >> i) & 1U) {
                    nbr[pairs[i].first] |= 1U << pairs[i].second;
                    nbr[pairs[i].second] |= 1U << pairs[i].first;
                }
            }
            std::uint32_t seen = 1, frontier = 1;
            while (frontier) {
                std::uint32_t next = 0;
                for (Vertex u = 0; u < n; ++u)
                    if ((frontier >> u) & 1U) next |= nbr[u];
                frontier = next & ~seen;
                seen |= next;
            }
            if (seen != (1U << n) - 1) continue;
            std::uint32_t best = mask;
            for (const auto& p : perms) {
                std::uint32_t m = 0;
                for (std::size_t i = 0; i < pairs.size(); ++i)
                    if ((mask >> i) & 1U) m |= 1U << pair_index[p[pairs[i].first]][p[pairs[i].second]];
                best = std::min(best, m);
            }
            canon.insert(best);
        }
        std::size_t idx = 0;
        for (std::uint32_t mask : canon) {
            std::vector<std::pair<Vertex, Vertex>> e;
            for (std::size_t i = 0; i < pairs.size(); ++i)
                if ((mask >> i) & 1U) e.push_back(pairs[i]);
            out.emplace_back(n, e, "g" + std::to_string(n) + "_" + std::to_string(idx++));
        }
    }
    return out;
}

std::string_view to_string(HomVerdict v) {
    switch (v) {
        case HomVerdict::dominates: return "dominates";
        case HomVerdict::dominated: return "dominated";
        case HomVerdict::equal: return "equal";
        case HomVerdict::incomparable: return "incomparable";
    }
    return "?";
}

namespace {

HomComparison compare_counts(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    HomComparison c;
    std::optional<HomWitness> above, below;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i] && !above) above = HomWitness{i, a[i], b[i]};
        if (a[i] < b[i] && !below) below = HomWitness{i, a[i], b[i]};
    }
    if (above) c.witnesses.push_back(*above);
    if (below) c.witnesses.push_back(*below);
    c.verdict = above && below ? HomVerdict::incomparable
              : above          ? HomVerdict::dominates
              : below          ? HomVerdict::dominated
                               : HomVerdict::equal;
    return c;
}

std::vector<std::uint64_t> counts_on(const WeightedGraph& t, std::span<const SimpleGraph> corpus) {
    std::vector<std::uint64_t> out;
    out.reserve(corpus.size());
    for (const SimpleGraph& g : corpus) out.push_back(hom_count(t, g));
    return out;
}

}  // namespace

HomComparison corpus_dominates(const WeightedGraph& t, const WeightedGraph& t2,
                               std::span<const SimpleGraph> corpus) {
    if (t.vertex_count() != t2.vertex_count()) throw GraphError("trees must have the same size");
    return compare_counts(counts_on(t, corpus), counts_on(t2, corpus));
}

HomDominanceReport conjecture_scan(std::size_t n, std::span<const SimpleGraph> corpus, double slack) {
    if (n < 1 || n > 8) throw GuardError("conjecture scan supports 1 <= n <= 8");
    HomDominanceReport r;
    r.n = n;
    for (const SimpleGraph& g : corpus) r.corpus_ids.push_back(g.id());
    const auto trees = enumerate_free_trees(n);
    std::vector<std::vector<std::uint64_t>> counts;
    for (const WeightedGraph& t : trees) {
        r.trees.push_back(canonical_form(t));
        r.alpha.push_back(n >= 2 ? alpha_tree(t) : 0.0);
        counts.push_back(counts_on(t, corpus));
    }
    for (std::size_t i = 0; i < trees.size(); ++i) {
        for (std::size_t j = i + 1; j < trees.size(); ++j) {
            HomPair p{i, j, compare_counts(counts[i], counts[j])};
            auto check = [&](std::size_t dom, std::size_t sub) {
                if (r.alpha[sub] < r.alpha[dom] - slack * std::abs(r.alpha[dom])) {
                    r.violations.push_back({dom, sub, r.alpha[dom], r.alpha[sub], false});
                }
            };
            if (p.comparison.verdict == HomVerdict::dominates) check(i, j);
            if (p.comparison.verdict == HomVerdict::dominated) check(j, i);
            r.pairs.push_back(std::move(p));
        }
    }
    return r;
}

void refine_violations(HomDominanceReport& report, std::span<const SimpleGraph> extended_corpus) {
    for (ConjectureViolation& v : report.violations) {
        const WeightedGraph a = tree_from_canonical(report.trees[v.dominant]);
        const WeightedGraph b = tree_from_canonical(report.trees[v.dominated]);
        v.corpus_false_positive =
            corpus_dominates(a, b, extended_corpus).verdict != HomVerdict::dominates;
    }
}

}  // namespace treewalk
