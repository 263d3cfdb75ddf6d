#include "treewalk/extremal.hpp"

#include "treewalk/enumerate.hpp"
#include "treewalk/error.hpp"
#include "treewalk/forest.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace treewalk {

PathLayout::PathLayout(std::vector<double> weights_in_order) : weights_(std::move(weights_in_order)) {
    for (double w : weights_) {
        if (!(w > 0.0)) throw GuardError("path weights must be positive");
    }
}

std::size_t PathLayout::centrality(std::size_t i) const noexcept {
    const std::size_t n = weights_.size() + 1;
    return std::min(i, n - i);
}

bool PathLayout::is_polarized() const noexcept {
    const std::size_t m = weights_.size();
    for (std::size_t i = 1; i <= m; ++i) {
        for (std::size_t j = 1; j <= m; ++j) {
            if (centrality(i) < centrality(j) && weights_[i - 1] < weights_[j - 1]) return false;
        }
    }
    return true;
}

PathLayout PathLayout::reversed() const {
    return PathLayout(std::vector<double>(weights_.rbegin(), weights_.rend()));
}

PathLayout PathLayout::oriented() const {
    PathLayout r = reversed();
    return r.weights_ > weights_ ? r : *this;
}

WeightedGraph PathLayout::to_graph() const { return make_path(weights_); }

std::optional<PathLayout> path_layout_of(const WeightedGraph& t) {
    if (!is_path(t)) return std::nullopt;
    const std::size_t n = t.vertex_count();
    if (n == 1) return PathLayout{};
    Vertex start = 0;
    while (t.neighbors(start).size() != 1) ++start;
    std::vector<double> w;
    Vertex prev = start, cur = start;
    for (std::size_t step = 0; step + 1 < n; ++step) {
        for (const Neighbor& nb : t.neighbors(cur)) {
            if (nb.v == prev && step > 0) continue;
            w.push_back(nb.w);
            prev = cur;
            cur = nb.v;
            break;
        }
    }
    return PathLayout(std::move(w)).oriented();
}

std::vector<PathLayout> polarized_paths(const WeightMultiset& w) {
    if (w.empty()) throw GuardError("weight multiset is empty");
    if (w.size() > 40) throw GuardError("polarized_paths supports at most 40 weights");
    const auto sorted = w.values();  // descending
    const std::size_t m = sorted.size();
    const std::size_t n = m + 1;
    const std::size_t classes = (m + 1) / 2;
    std::size_t pairs = 0;  // classes holding two edges
    for (std::size_t k = 1; k <= classes; ++k)
        if (k != n - k) ++pairs;

    std::map<CanonicalForm, PathLayout> unique;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        std::vector<double> layout(m);
        std::size_t bit = 0;
        for (std::size_t k = 1; k <= classes; ++k) {
            const std::size_t lo = k - 1;       // e_k
            const std::size_t hi = n - k - 1;   // e_{n-k}
            const double a = sorted[2 * k - 2];
            if (lo == hi) {
                layout[lo] = a;
                continue;
            }
            const double b = sorted[2 * k - 1];
            const bool swap = (mask >> bit++) & 1U;
            layout[lo] = swap ? b : a;
            layout[hi] = swap ? a : b;
        }
        PathLayout p(std::move(layout));
        unique.emplace(canonical_form(p.to_graph()), p.oriented());
    }
    std::vector<PathLayout> out;
    for (auto& [code, p] : unique) out.push_back(std::move(p));
    return out;
}

WeightedGraph star_of(const WeightMultiset& w) {
    if (w.empty()) throw GuardError("weight multiset is empty");
    return make_star(w.values());
}

namespace {

void require_family_guard(const WeightMultiset& w) {
    if (w.empty()) throw GuardError("weight multiset is empty");
    if (w.size() > kMaxFamilyEdges) {
        throw GuardError("T_W enumeration supports at most " + std::to_string(kMaxFamilyEdges) +
                         " weights");
    }
}

void place_weights(const WeightedGraph& shape, const WeightMultiset& w,
                   std::set<CanonicalForm>& forms) {
    std::vector<Edge> edges(shape.edges().begin(), shape.edges().end());
    for_each_distinct_permutation(std::vector<double>(w.values().begin(), w.values().end()),
                                  [&](std::span<const double> perm) {
                                      for (std::size_t i = 0; i < edges.size(); ++i) edges[i].w = perm[i];
                                      forms.insert(canonical_form(WeightedGraph(shape.vertex_count(), edges)));
                                  });
}

std::vector<WeightedGraph> materialize(const std::set<CanonicalForm>& forms) {
    std::vector<WeightedGraph> out;
    out.reserve(forms.size());
    for (const auto& f : forms) out.push_back(tree_from_canonical(f));
    return out;
}

}  // namespace

std::vector<WeightedGraph> enumerate_tw(const WeightMultiset& w) {
    require_family_guard(w);
    std::set<CanonicalForm> forms;
    for (const WeightedGraph& shape : free_trees_by_level_sequences(w.size() + 1)) {
        place_weights(shape, w, forms);
    }
    return materialize(forms);
}

std::vector<WeightedGraph> enumerate_tw_labeled(const WeightMultiset& w) {
    require_family_guard(w);
    std::set<CanonicalForm> forms;
    for_each_labeled_tree(w.size() + 1, [&](const WeightedGraph& t) { place_weights(t, w, forms); });
    return materialize(forms);
}

std::string_view to_string(Statistic s) { return s == Statistic::alpha ? "alpha" : "kappa"; }

Statistic parse_statistic(std::string_view text) {
    if (text == "alpha") return Statistic::alpha;
    if (text == "kappa") return Statistic::kappa;
    throw GuardError("unknown statistic '" + std::string(text) + "'");
}

FamilyReport scan_family(const WeightMultiset& w, Statistic stat, double tie_tol) {
    FamilyReport r;
    r.weights = w;
    r.stat = stat;
    const auto family = enumerate_tw(w);
    r.family_size = family.size();

    std::vector<FamilyMember> members;
    members.reserve(family.size());
    for (const WeightedGraph& t : family) {
        FamilyMember m;
        m.code = canonical_form(t);
        m.value = stat == Statistic::alpha ? alpha_tree(t) : kappa_tree(t);
        m.is_path = is_path(t);
        m.layout = path_layout_of(t);
        m.tree = t;
        members.push_back(std::move(m));
    }
    const auto [lo, hi] = std::minmax_element(
        members.begin(), members.end(),
        [](const FamilyMember& a, const FamilyMember& b) { return a.value < b.value; });
    r.max_value = hi->value;
    r.min_value = lo->value;

    constexpr double inf = std::numeric_limits<double>::infinity();
    r.max_margin = inf;
    r.min_margin = inf;
    for (const FamilyMember& m : members) {
        if (approx_equal(m.value, r.max_value, tie_tol)) {
            r.argmax.push_back(m);
        } else {
            r.max_margin = std::min(r.max_margin, (r.max_value - m.value) / r.max_value);
        }
        if (approx_equal(m.value, r.min_value, tie_tol)) {
            r.argmin.push_back(m);
        } else {
            r.min_margin = std::min(r.min_margin, (m.value - r.min_value) / r.min_value);
        }
    }

    r.polarized = polarized_paths(w);
    for (const PathLayout& p : r.polarized) r.polarized_values.push_back(alpha_tree(p.to_graph()));

    const CanonicalForm star = canonical_form(star_of(w));
    if (r.argmin.size() != 1 || r.argmin.front().code != star) {
        r.violations.push_back("argmin is not uniquely the weighted star S_W");
    }
    if (stat == Statistic::alpha) {
        std::set<CanonicalForm> expected;
        for (const PathLayout& p : r.polarized) expected.insert(canonical_form(p.to_graph()));
        std::set<CanonicalForm> got;
        for (const FamilyMember& m : r.argmax) got.insert(m.code);
        if (got != expected) r.violations.push_back("alpha argmax set differs from the polarized paths");
        for (double v : r.polarized_values) {
            if (!approx_equal(v, r.polarized_values.front(), tie_tol)) {
                r.violations.push_back("polarized paths do not share one alpha value");
                break;
            }
        }
    } else {
        for (const FamilyMember& m : r.argmax) {
            if (!m.is_path) {
                r.violations.push_back("a kappa maximizer is not a path");
                break;
            }
        }
    }
    return r;
}

FamilyReport extremal_scan(const WeightMultiset& w, Statistic stat, double tie_tol) {
    FamilyReport r = scan_family(w, stat, tie_tol);
    if (!r.violations.empty()) throw ViolationError("extremal check failed: " + r.violations.front());
    return r;
}

double path_kappa_objective(std::span<const double> weights_in_order) {
    double total = 0.0;
    for (double x : weights_in_order) {
        if (!(x > 0.0)) throw GuardError("path weights must be positive");
        total += x;
    }
    double left = 0.0, j = 0.0;
    for (double x : weights_in_order) {
        const double right = total - left - x;
        j += left * right / x;
        left += x;
    }
    return j;
}

double path_alpha_closed_form(std::span<const double> weights_in_order) {
    const std::size_t m = weights_in_order.size();
    const double n = static_cast<double>(m + 1);
    double s = 0.0, acc = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        const double w = weights_in_order[i - 1];
        s += w;
        acc += static_cast<double>(i) * (n - static_cast<double>(i)) / w;
    }
    return 2.0 * s / (n * n) * acc;
}

double path_kappa_closed_form(std::span<const double> weights_in_order) {
    const double n = static_cast<double>(weights_in_order.size() + 1);
    const double s = std::accumulate(weights_in_order.begin(), weights_in_order.end(), 0.0);
    return (4.0 * path_kappa_objective(weights_in_order) + (2.0 * n - 3.0) * s) / (2.0 * s);
}

PathSearchResult best_path_assignment(const WeightMultiset& w, double tie_tol) {
    if (w.empty()) throw GuardError("weight multiset is empty");
    if (w.size() > kMaxPathSearchEdges) {
        throw GuardError("path search supports at most " + std::to_string(kMaxPathSearchEdges) +
                         " weights");
    }
    PathSearchResult r;
    for_each_distinct_permutation(
        std::vector<double>(w.values().begin(), w.values().end()), [&](std::span<const double> perm) {
            PathLayout layout(std::vector<double>(perm.begin(), perm.end()));
            const double j = path_kappa_objective(perm);
            const double k = kappa_forest(layout.to_graph());
            r.all.push_back({std::move(layout), j, k});
        });
    r.assignments = r.all.size();

    std::vector<std::size_t> order(r.all.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return r.all[a].objective < r.all[b].objective;
    });
    r.rankings_agree = true;
    for (std::size_t i = 1; i < order.size(); ++i) {
        const auto& a = r.all[order[i - 1]];
        const auto& b = r.all[order[i]];
        const bool j_tie = approx_equal(a.objective, b.objective, tie_tol);
        const bool ok = j_tie ? approx_equal(a.kappa, b.kappa, tie_tol) : b.kappa > a.kappa;
        if (!ok) r.rankings_agree = false;
    }
    if (!r.rankings_agree) throw ViolationError("kappa ranking and J ranking disagree");

    std::size_t best = 0;
    for (std::size_t i = 1; i < r.all.size(); ++i)
        if (r.all[i].kappa > r.all[best].kappa) best = i;
    r.best = r.all[best];
    r.best.layout = r.best.layout.oriented();

    std::set<std::vector<double>> maxima;
    for (const auto& a : r.all) {
        if (approx_equal(a.kappa, r.best.kappa, tie_tol)) {
            const PathLayout o = a.layout.oriented();
            maxima.emplace(o.weights().begin(), o.weights().end());
        }
    }
    r.maximizers = maxima.size();
    return r;
}

}  // namespace treewalk
