#include "treewalk/canonical.hpp"

#include "treewalk/error.hpp"
#include "treewalk/io.hpp"

#include <algorithm>

namespace treewalk {

std::vector<Vertex> tree_centers(const WeightedGraph& t) {
    require_tree(t);
    const std::size_t n = t.vertex_count();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        for (Vertex u = 0; u < n; ++u) all[u] = u;
        return all;
    }
    std::vector<std::size_t> deg(n);
    std::vector<Vertex> layer;
    for (Vertex u = 0; u < n; ++u) {
        deg[u] = t.neighbors(u).size();
        if (deg[u] == 1) layer.push_back(u);
    }
    std::size_t remaining = n;
    while (remaining > 2) {
        remaining -= layer.size();
        std::vector<Vertex> next;
        for (Vertex u : layer) {
            for (const Neighbor& nb : t.neighbors(u)) {
                if (--deg[nb.v] == 1) next.push_back(nb.v);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

struct Encoder {
    const WeightedGraph& t;
    WeightLabels labels;

    std::string encode(Vertex u, Vertex parent, const std::string& incoming) const {
        std::vector<std::string> kids;
        for (const Neighbor& nb : t.neighbors(u)) {
            if (nb.v == parent) continue;
            kids.push_back(encode(nb.v, u, token(nb.w)));
        }
        std::sort(kids.begin(), kids.end());
        std::string out = "(" + incoming;
        for (const auto& k : kids) out += k;
        out += ")";
        return out;
    }

    std::string token(double w) const {
        return labels == WeightLabels::include ? format_real(w, 17) : std::string();
    }
};

}  // namespace

CanonicalForm canonical_form(const WeightedGraph& t, WeightLabels labels) {
    const auto centers = tree_centers(t);
    const Encoder enc{t, labels};
    constexpr Vertex none = static_cast<Vertex>(-1);
    std::string best;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        std::string code = enc.encode(centers[i], none, "r");
        if (i == 0 || code < best) best = std::move(code);
    }
    return CanonicalForm{std::move(best)};
}

}  // namespace treewalk
