#include "treewalk/transfer.hpp"

#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"
#include "treewalk/io.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>

namespace treewalk {

std::string_view to_string(TransferMode mode) {
    return mode == TransferMode::size ? "size" : "volume";
}

TransferMode parse_transfer_mode(std::string_view text) {
    if (text == "size") return TransferMode::size;
    if (text == "volume") return TransferMode::volume;
    throw GuardError("unknown transfer mode '" + std::string(text) + "'");
}

MoveComponents move_components(const WeightedGraph& t, Vertex v1, Vertex v2, Vertex v3) {
    const std::pair<Vertex, Vertex> removed[] = {{v1, v2}, {v2, v3}};
    const VertexPartition parts = remove_edges_partition(t, removed);
    return MoveComponents{parts.block(parts.block_of(v1)), parts.block(parts.block_of(v2)),
                          parts.block(parts.block_of(v3))};
}

namespace {

std::pair<double, double> compare_stats(const WeightedGraph& t, const MoveComponents& c,
                                        TransferMode mode) {
    if (mode == TransferMode::size) {
        return {static_cast<double>(c.t1.size()), static_cast<double>(c.t2.size())};
    }
    return {induced_volume(t, c.t1), induced_volume(t, c.t2)};
}

bool strictly_greater(double a, double b) {
    return a - b > kLegalityMargin * std::max(std::abs(a), std::abs(b));
}

double stat_of(const WeightedGraph& t, TransferMode mode) {
    return mode == TransferMode::size ? alpha_tree(t) : kappa_tree(t);
}

double two_forest_stat(const WeightedGraph& t, Vertex a, Vertex b, TransferMode mode) {
    const std::pair<Vertex, Vertex> removed[] = {{a, b}};
    const VertexPartition parts = remove_edges_partition(t, removed);
    if (mode == TransferMode::size) {
        return static_cast<double>(parts.block(0).size()) *
               static_cast<double>(parts.block(1).size());
    }
    return static_cast<double>(static_cast<long double>(volume_of(t, parts.block(0))) *
                               volume_of(t, parts.block(1)));
}

}  // namespace

std::vector<TransferMove> legal_moves(const WeightedGraph& t, TransferMode mode) {
    require_tree(t);
    std::vector<TransferMove> moves;
    for (Vertex v2 = 0; v2 < t.vertex_count(); ++v2) {
        const auto nbs = t.neighbors(v2);
        for (const Neighbor& a : nbs) {
            for (const Neighbor& b : nbs) {
                if (a.v == b.v) continue;
                const MoveComponents c = move_components(t, a.v, v2, b.v);
                const auto [s1, s2] = compare_stats(t, c, mode);
                if (strictly_greater(s1, s2)) moves.push_back({a.v, v2, b.v, mode, s1, s2});
            }
        }
    }
    return moves;
}

WeightedGraph apply_move(const WeightedGraph& t, const TransferMove& m) {
    require_tree(t);
    if (!t.has_edge(m.v1, m.v2) || !t.has_edge(m.v2, m.v3) || m.v1 == m.v3) {
        throw GraphError("move edges are not adjacent edges of the tree");
    }
    const auto [s1, s2] = compare_stats(t, move_components(t, m.v1, m.v2, m.v3), m.mode);
    if (!strictly_greater(s1, s2)) throw GraphError("illegal edge transfer");
    const std::size_t moved = t.find_edge(m.v2, m.v3);
    std::vector<Edge> edges;
    edges.reserve(t.edge_count());
    for (std::size_t i = 0; i < t.edge_count(); ++i) {
        if (i == moved) {
            edges.push_back({m.v1, m.v3, t.edge(i).w});
        } else {
            edges.push_back(t.edge(i));
        }
    }
    return WeightedGraph(t.vertex_count(), std::move(edges));
}

std::pair<double, double> verify_monotonicity(const WeightedGraph& t, const TransferMove& m) {
    const WeightedGraph after = apply_move(t, m);
    const double before_stat = stat_of(t, m.mode);
    const double after_stat = stat_of(after, m.mode);
    if (!(after_stat < before_stat - 1e-10 * before_stat)) {
        throw ViolationError(std::string(m.mode == TransferMode::size ? "alpha" : "kappa") +
                             " did not strictly decrease under a legal " +
                             std::string(to_string(m.mode)) + " transfer");
    }
    return {before_stat, after_stat};
}

TransferIdentity transfer_identity(const WeightedGraph& t, const TransferMove& m) {
    const WeightedGraph after = apply_move(t, m);
    const double n = static_cast<double>(t.vertex_count());
    const double vol = 2.0 * t.total_weight();
    const double w1 = t.weight(m.v1, m.v2);
    const double diff_2f = two_forest_stat(t, m.v1, m.v2, m.mode) -
                           two_forest_stat(after, m.v1, m.v2, m.mode);
    TransferIdentity id;
    if (m.mode == TransferMode::size) {
        id.lhs = n / vol * (alpha_tree(t) - alpha_tree(after));
        id.rhs = diff_2f / (n * w1);
    } else {
        id.lhs = kappa_tree(t) - kappa_tree(after);
        id.rhs = diff_2f / (vol * w1);
    }
    id.residual = relative_difference(id.lhs, id.rhs);
    return id;
}

double volume_bookkeeping_residual(const WeightedGraph& t, const TransferMove& m) {
    const WeightedGraph after = apply_move(t, m);
    const MoveComponents c = move_components(t, m.v1, m.v2, m.v3);
    const double w1 = t.weight(m.v1, m.v2);
    const double w2 = t.weight(m.v2, m.v3);
    const double own1 = induced_volume(t, c.t1);
    const double own2 = induced_volume(t, c.t2);
    const double own3 = induced_volume(t, c.t3);

    auto joined = [](const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::vector<Vertex> out(a);
        out.insert(out.end(), b.begin(), b.end());
        return out;
    };
    const double worst = std::max({
        relative_difference(volume_of(t, c.t1), own1 + w1),
        relative_difference(volume_of(t, joined(c.t2, c.t3)), own2 + w1 + 2.0 * w2 + own3),
        relative_difference(volume_of(after, joined(c.t1, c.t3)), own1 + w1 + 2.0 * w2 + own3),
        relative_difference(volume_of(after, c.t2), own2 + w1),
    });
    return worst;
}

std::vector<std::size_t> HasseDiagram::maximal() const {
    std::vector<char> has_parent(codes.size(), 0);
    for (auto [hi, lo] : covers) has_parent[lo] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (!has_parent[i]) out.push_back(i);
    return out;
}

std::vector<std::size_t> HasseDiagram::minimal() const {
    std::vector<char> has_child(codes.size(), 0);
    for (auto [hi, lo] : covers) has_child[hi] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (!has_child[i]) out.push_back(i);
    return out;
}

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }

}  // namespace

HasseDiagram build_hasse(std::span<const WeightedGraph> trees, TransferMode mode) {
    HasseDiagram d;
    d.mode = mode;
    if (trees.empty()) return d;

    const WeightMultiset family = WeightMultiset::of(trees.front());
    std::map<CanonicalForm, std::size_t> input_index;
    for (const WeightedGraph& t : trees) {
        require_tree(t);
        if (!(WeightMultiset::of(t) == family)) {
            throw GraphError("Hasse construction needs one shared weight multiset");
        }
        if (!input_index.emplace(canonical_form(t), 0).second) {
            throw GraphError("Hasse input contains isomorphic trees");
        }
    }
    std::size_t k = 0;
    for (auto& [code, idx] : input_index) {
        idx = k++;
        d.codes.push_back(code);
        d.trees.push_back(tree_from_canonical(code));
    }
    const std::size_t inputs = d.codes.size();

    // Breadth-first closure; node ids are discovery order.
    std::map<CanonicalForm, std::size_t> id_of;
    std::vector<WeightedGraph> closure;
    std::vector<std::vector<std::size_t>> succ;
    std::deque<std::size_t> queue;
    auto intern = [&](const CanonicalForm& code, const WeightedGraph& t) {
        auto [it, fresh] = id_of.emplace(code, closure.size());
        if (fresh) {
            if (closure.size() == kMaxHasseClosure) {
                throw GuardError("move closure exceeds " + std::to_string(kMaxHasseClosure) +
                                 " canonical trees");
            }
            closure.push_back(t);
            succ.emplace_back();
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (std::size_t i = 0; i < inputs; ++i) intern(d.codes[i], d.trees[i]);
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        const WeightedGraph current = closure[u];
        std::vector<std::size_t> next;
        for (const TransferMove& m : legal_moves(current, mode)) {
            const WeightedGraph after = apply_move(current, m);
            next.push_back(intern(canonical_form(after), after));
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        succ[u] = std::move(next);
    }

    // reach[x] = inputs reachable from x by >= 1 move. Moves strictly
    // decrease α (size) or κ (volume), so the closure is a DAG.
    const std::size_t words = (inputs + 63) / 64;
    const std::size_t total = closure.size();
    std::vector<Bits> reach(total, Bits(words, 0));
    std::vector<int> state(total, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack;
    for (std::size_t root = 0; root < total; ++root) {
        if (state[root]) continue;
        stack.push_back({root, 0});
        state[root] = 1;
        while (!stack.empty()) {
            auto& [u, pos] = stack.back();
            if (pos < succ[u].size()) {
                const std::size_t v = succ[u][pos++];
                if (state[v] == 1) throw ViolationError("edge-transfer relation has a cycle");
                if (state[v] == 0) {
                    state[v] = 1;
                    stack.push_back({v, 0});
                }
                continue;
            }
            for (std::size_t v : succ[u]) {
                if (v < inputs) set_bit(reach[u], v);
                for (std::size_t w = 0; w < words; ++w) reach[u][w] |= reach[v][w];
            }
            state[u] = 2;
            stack.pop_back();
        }
    }

    // Closure ids 0..inputs-1 are the inputs in code order.
    for (std::size_t a = 0; a < inputs; ++a) {
        for (std::size_t b = 0; b < inputs; ++b) {
            if (!test_bit(reach[a], b)) continue;
            bool covered = true;
            for (std::size_t c = 0; c < inputs && covered; ++c) {
                if (c != a && c != b && test_bit(reach[a], c) && test_bit(reach[c], b)) {
                    covered = false;
                }
            }
            if (covered) d.covers.emplace_back(a, b);
        }
    }
    return d;
}

std::string to_dot(const HasseDiagram& d) {
    std::string out = "digraph hasse {\n";
    out += "  // mode: " + std::string(to_string(d.mode)) + "\n";
    out += "  rankdir=TB;\n";
    for (std::size_t i = 0; i < d.trees.size(); ++i) {
        const WeightedGraph& t = d.trees[i];
        std::string deg, w;
        for (std::size_t x : degree_sequence(t)) deg += (deg.empty() ? "" : ",") + std::to_string(x);
        for (const Edge& e : t.edges()) w += (w.empty() ? "" : ",") + format_real(e.w);
        out += "  n" + std::to_string(i) + " [label=\"deg: " + deg + "\\nw: " + w + "\"];\n";
    }
    for (auto [hi, lo] : d.covers) {
        out += "  n" + std::to_string(hi) + " -> n" + std::to_string(lo) + ";\n";
    }
    out += "}\n";
    return out;
}

}  // namespace treewalk
