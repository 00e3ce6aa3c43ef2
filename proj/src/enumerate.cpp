#include "stratifold/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "stratifold/io.hpp"

namespace stratifold {

namespace {

/// Sorted labels that can still grow into {1,1,1}, {1,2} or {3}.
bool trivalent_prefix(std::vector<int> labels)
{
    std::sort(labels.begin(), labels.end());
    static const std::vector<std::vector<int>> full{{1, 1, 1}, {1, 2}, {3}};
    for (const auto& f : full)
        if (std::includes(f.begin(), f.end(), labels.begin(), labels.end()))
            return true;
    return false;
}

std::vector<int> black_labels(const LabelledGraph& g, int b)
{
    std::vector<int> out;
    for (int e : g.incident(black(b)))
        out.push_back(g.edge(e).label);
    return out;
}

bool can_attach(const LabelledGraph& g, int b, int label, const EnumerationBounds& bounds)
{
    if (g.degree(black(b)) >= bounds.max_black_degree)
        return false;
    if (!bounds.trivalent_only)
        return true;
    auto labels = black_labels(g, b);
    labels.push_back(label);
    return trivalent_prefix(std::move(labels));
}

bool acceptable(const LabelledGraph& g, const EnumerationBounds& bounds)
{
    for (int b = 0; b < g.num_blacks(); ++b) {
        int sum = 0;
        for (int e : g.incident(black(b)))
            sum += g.edge(e).label;
        if (sum < 3)
            return false;
    }
    return !bounds.trivalent_only || is_trivalent(g);
}

}  // namespace

std::size_t enumerate_graphs(const EnumerationBounds& bounds, const std::function<void(const LabelledGraph&)>& sink)
{
    if (bounds.max_blacks < 0 || bounds.max_label < 1 || bounds.max_black_degree < 1)
        throw StratifoldError(ErrorCode::PreconditionFailed, "enumeration bounds must be positive");
    if (bounds.max_blacks > EnumerationBounds::kMaxBlacks || bounds.max_label > EnumerationBounds::kMaxLabel ||
        bounds.max_black_degree > EnumerationBounds::kMaxBlackDegree)
        throw StratifoldError(ErrorCode::BoundsTooLarge,
                              "enumeration bounds exceed the caps (" + std::to_string(EnumerationBounds::kMaxBlacks) +
                                  " blacks, label " + std::to_string(EnumerationBounds::kMaxLabel) + ", degree " +
                                  std::to_string(EnumerationBounds::kMaxBlackDegree) + ")");
    if (bounds.betti1 && *bounds.betti1 != 0 && *bounds.betti1 != 1)
        throw StratifoldError(ErrorCode::PreconditionFailed, "betti1 filter must be 0 or 1");
    const bool want_trees = !bounds.betti1 || *bounds.betti1 == 0;
    const bool want_cycles = !bounds.betti1 || *bounds.betti1 == 1;

    std::size_t emitted = 0;
    std::vector<LabelledGraph> all_trees;
    std::map<std::string, LabelledGraph> level;
    {
        LabelledGraph seed;
        seed.add_white("w1");
        level.emplace(canonical_key(seed), canonical_form(seed));
    }
    while (!level.empty()) {
        std::map<std::string, LabelledGraph> next;
        for (auto& [key, t] : level) {
            if (want_trees && acceptable(t, bounds)) {
                sink(t);
                ++emitted;
            }
            for (int w = 0; w < t.num_whites(); ++w) {
                if (t.num_blacks() >= bounds.max_blacks)
                    break;
                for (int l = 1; l <= bounds.max_label; ++l) {
                    if (bounds.trivalent_only && l > 3)
                        break;
                    LabelledGraph h = t;
                    int b = h.add_black("new");
                    h.add_edge(w, b, l);
                    std::string k = canonical_key(h);
                    if (!next.count(k))
                        next.emplace(std::move(k), canonical_form(h));
                }
            }
            for (int b = 0; b < t.num_blacks(); ++b)
                for (int l = 1; l <= bounds.max_label; ++l) {
                    if (!can_attach(t, b, l, bounds))
                        continue;
                    LabelledGraph h = t;
                    int w = h.add_white("new");
                    h.add_edge(w, b, l);
                    std::string k = canonical_key(h);
                    if (!next.count(k))
                        next.emplace(std::move(k), canonical_form(h));
                }
            if (want_cycles)
                all_trees.push_back(std::move(t));
        }
        level = std::move(next);
    }

    if (!want_cycles)
        return emitted;
    std::map<std::string, LabelledGraph> cycles;
    for (const auto& t : all_trees)
        for (int w = 0; w < t.num_whites(); ++w)
            for (int b = 0; b < t.num_blacks(); ++b)
                for (int l = 1; l <= bounds.max_label; ++l) {
                    if (!can_attach(t, b, l, bounds))
                        continue;
                    for (int sign : {+1, -1}) {
                        LabelledGraph h = t;
                        h.add_edge(w, b, l, sign);
                        if (!acceptable(h, bounds))
                            continue;
                        std::string k = canonical_key(h);
                        if (!cycles.count(k))
                            cycles.emplace(std::move(k), canonical_form(h));
                    }
                }
    for (const auto& [key, g] : cycles) {
        sink(g);
        ++emitted;
    }
    return emitted;
}

std::vector<LabelledGraph> enumerate_graphs(const EnumerationBounds& bounds)
{
    std::vector<LabelledGraph> out;
    enumerate_graphs(bounds, [&](const LabelledGraph& g) { out.push_back(g); });
    return out;
}

}  // namespace stratifold
