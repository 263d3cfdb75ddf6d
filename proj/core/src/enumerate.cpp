#include "treewalk/enumerate.hpp"

#include "treewalk/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

namespace treewalk {

WeightedGraph prufer_decode(std::span<const Vertex> sequence, std::size_t n) {
    if (n == 0) throw GuardError("tree needs at least one vertex");
    if (n == 1) return WeightedGraph(1, {});
    if (sequence.size() + 2 != n) throw GuardError("Prüfer sequence must have length n-2");
    std::vector<std::size_t> deg(n, 1);
    for (Vertex x : sequence) {
        if (x >= n) throw GuardError("Prüfer entry out of range");
        ++deg[x];
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex x : sequence) {
        Vertex leaf = 0;
        while (deg[leaf] != 1) ++leaf;
        edges.push_back({leaf, x, 1.0});
        --deg[leaf];
        --deg[x];
    }
    Vertex a = n, b = n;
    for (Vertex u = 0; u < n; ++u) {
        if (deg[u] == 1) (a == n ? a : b) = u;
    }
    edges.push_back({a, b, 1.0});
    return WeightedGraph(n, std::move(edges));
}

std::uint64_t labeled_tree_count(std::size_t n) {
    if (n <= 2) return 1;
    std::uint64_t c = 1;
    for (std::size_t i = 0; i + 2 < n; ++i) c *= n;
    return c;
}

LabeledTreeStream::LabeledTreeStream(std::size_t n)
    : n_(n), seq_(n >= 2 ? n - 2 : 0, 0), total_(labeled_tree_count(n)) {
    if (n < 1 || n > 9) throw GuardError("labeled tree enumeration supports 1 <= n <= 9");
}

std::optional<WeightedGraph> LabeledTreeStream::next() {
    if (emitted_ == total_) return std::nullopt;
    WeightedGraph t = prufer_decode(seq_, n_);
    ++emitted_;
    for (std::size_t i = seq_.size(); i-- > 0;) {
        if (++seq_[i] < n_) break;
        seq_[i] = 0;
    }
    return t;
}

void for_each_labeled_tree(std::size_t n, const std::function<void(const WeightedGraph&)>& fn) {
    LabeledTreeStream stream(n);
    while (auto t = stream.next()) fn(*t);
}

namespace {

class CodeParser {
public:
    explicit CodeParser(const std::string& code) : s_(code) {}

    WeightedGraph parse() {
        node(static_cast<Vertex>(-1));
        if (pos_ != s_.size()) fail();
        return WeightedGraph(count_, std::move(edges_));
    }

private:
    void node(Vertex parent) {
        if (pos_ >= s_.size() || s_[pos_] != '(') fail();
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != '(' && s_[pos_] != ')') ++pos_;
        const std::string token = s_.substr(start, pos_ - start);
        const Vertex self = count_++;
        if (parent != static_cast<Vertex>(-1)) {
            double w = 1.0;
            if (!token.empty()) {
                char* end = nullptr;
                w = std::strtod(token.c_str(), &end);
                if (end != token.c_str() + token.size()) fail();
            }
            edges_.push_back({parent, self, w});
        }
        while (pos_ < s_.size() && s_[pos_] == '(') node(self);
        if (pos_ >= s_.size() || s_[pos_] != ')') fail();
        ++pos_;
    }

    [[noreturn]] void fail() const { throw GraphError("malformed canonical code"); }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t count_ = 0;
    std::vector<Edge> edges_;
};

std::vector<WeightedGraph> materialize(const std::set<CanonicalForm>& forms) {
    std::vector<WeightedGraph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(tree_from_canonical(f));
    return out;
}

// Unit tree from a rooted level sequence (root at level 0).
WeightedGraph tree_from_levels(const std::vector<std::size_t>& levels) {
    std::vector<Edge> edges;
    std::vector<Vertex> last_at_level(levels.size() + 1, 0);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (i > 0) edges.push_back({last_at_level[levels[i] - 1], i, 1.0});
        last_at_level[levels[i]] = i;
    }
    return WeightedGraph(levels.size(), std::move(edges));
}

}  // namespace

WeightedGraph tree_from_canonical(const CanonicalForm& form) {
    return CodeParser(form.code).parse();
}

std::vector<WeightedGraph> free_trees_by_prufer(std::size_t n) {
    if (n < 1 || n > 9) throw GuardError("Prüfer free-tree enumeration supports 1 <= n <= 9");
    std::set<CanonicalForm> forms;
    for_each_labeled_tree(n, [&](const WeightedGraph& t) {
        forms.insert(canonical_form(t, WeightLabels::ignore));
    });
    return materialize(forms);
}

std::vector<WeightedGraph> free_trees_by_level_sequences(std::size_t n) {
    if (n < 1 || n > 16) throw GuardError("level-sequence enumeration supports 1 <= n <= 16");
    std::set<CanonicalForm> forms;
    std::vector<std::size_t> levels(n);
    for (std::size_t i = 0; i < n; ++i) levels[i] = i;
    while (true) {
        forms.insert(canonical_form(tree_from_levels(levels), WeightLabels::ignore));
        // Beyer–Hedetniemi successor: p = last position with level > 1,
        // q = its parent; copy the subtree pattern starting at q forward.
        std::size_t p = n;
        for (std::size_t i = n; i-- > 0;) {
            if (levels[i] > 1) {
                p = i;
                break;
            }
        }
        if (p == n) break;
        std::size_t q = p;
        while (levels[q] != levels[p] - 1) --q;
        const std::size_t shift = p - q;
        for (std::size_t i = p; i < n; ++i) levels[i] = levels[i - shift];
    }
    return materialize(forms);
}

std::vector<WeightedGraph> enumerate_free_trees(std::size_t n) {
    if (n < 1 || n > 10) throw GuardError("free-tree enumeration supports 1 <= n <= 10");
    return free_trees_by_level_sequences(n);
}

void for_each_distinct_permutation(std::vector<double> values,
                                   const std::function<void(std::span<const double>)>& fn) {
    std::sort(values.begin(), values.end());
    do {
        fn(values);
    } while (std::next_permutation(values.begin(), values.end()));
}

namespace {

double log_uniform(Xorshift64Star& rng, double lo, double hi) {
    if (!(lo > 0.0) || !(hi >= lo)) throw GuardError("log-uniform range must satisfy 0 < lo <= hi");
    return std::exp(std::log(lo) + rng.uniform01() * (std::log(hi) - std::log(lo)));
}

}  // namespace

WeightedGraph random_weighted_tree(Xorshift64Star& rng, std::size_t n, double lo, double hi) {
    if (n < 1) throw GuardError("tree needs at least one vertex");
    std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
    for (auto& x : seq) x = rng.below(n);
    const WeightedGraph shape = prufer_decode(seq, n);
    std::vector<Edge> edges(shape.edges().begin(), shape.edges().end());
    for (Edge& e : edges) e.w = log_uniform(rng, lo, hi);
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph random_connected_graph(Xorshift64Star& rng, std::size_t n, double p, double lo,
                                     double hi) {
    const WeightedGraph base = random_weighted_tree(rng, n, lo, hi);
    std::vector<Edge> edges(base.edges().begin(), base.edges().end());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (base.has_edge(u, v)) continue;
            if (rng.uniform01() < p) edges.push_back({u, v, log_uniform(rng, lo, hi)});
        }
    }
    return WeightedGraph(n, std::move(edges));
}

}  // namespace treewalk
