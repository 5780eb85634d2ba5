#pragma once

// Shared fixtures for the unit and acceptance tests. The check_* helpers
// compare the linear-time code against the brute-force oracle and return an
// empty string on agreement, a description of the first mismatch otherwise.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "povu/cycle_equiv.hpp"
#include "povu/flubble.hpp"
#include "povu/gfa.hpp"
#include "povu/graph.hpp"
#include "povu/hairpin.hpp"
#include "povu/oracle.hpp"
#include "povu/spanning.hpp"

namespace povu::test {

/// GFA text with fields separated by single spaces, one record per line.
inline GfaDocument gfa(std::string_view spaced) {
    std::string text(spaced);
    std::replace(text.begin(), text.end(), ' ', '\t');
    return parse_gfa(std::string_view(text));
}

inline constexpr std::string_view kExampleA =
    "S s A\nS a C\nS b G\nS t T\n"
    "L s + a + 0M\nL s + b + 0M\nL a + t + 0M\nL b + t + 0M\n";

inline constexpr std::string_view kExampleB =
    "S s A\nS a C\nS b G\nS c G\nS d T\nS e A\nS t T\n"
    "L s + a + 0M\nL s + b + 0M\nL a + c + 0M\nL a + d + 0M\n"
    "L c + e + 0M\nL d + e + 0M\nL e + t + 0M\nL b + t + 0M\n";

/// The b+b+ link joins b's two sides, parallel to its black edge.
inline constexpr std::string_view kExampleC = "S a A\nS b C\nL a + b + 0M\nL b + b + 0M\n";

/// Same stem, but b+b- is a grey self-loop at (b,End).
inline constexpr std::string_view kExampleCSelfLoop = "S a A\nS b C\nL a + b + 0M\nL b + b - 0M\n";

/// A rooted component with its tree and classes. Not movable: the tree
/// points into the component's graph.
struct Analysis {
    Component comp;
    std::unique_ptr<SpanningTree> tree;
    ClassAssignment classes;

    const BiedgedGraph& graph() const { return comp.graph; }
    const SpanningTree& t() const { return *tree; }

    SegmentId segment(std::string_view name) const {
        const auto& names = comp.graph.names();
        const auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) {
            throw std::out_of_range("no segment " + std::string(name));
        }
        return static_cast<SegmentId>(it - names.begin());
    }
    EdgeId black(std::string_view name) const { return segment(name); }
};

inline std::unique_ptr<Analysis> analyze(Component c) {
    auto a = std::make_unique<Analysis>();
    a->comp = attach_dummy_root(std::move(c));
    a->tree = std::make_unique<SpanningTree>(dfs_tree(a->comp));
    a->classes = cycle_equivalence(*a->tree);
    return a;
}

/// Analysis of a document expected to form a single component.
inline std::unique_ptr<Analysis> analyze(const GfaDocument& doc) {
    auto comps = connected_components(from_gfa(doc));
    if (comps.size() != 1) {
        throw std::invalid_argument("expected one component, got " + std::to_string(comps.size()));
    }
    return analyze(std::move(comps.front()));
}

inline std::unique_ptr<Analysis> analyze(std::string_view spaced) { return analyze(gfa(spaced)); }

/// The random corpus shared by the oracle checks: connected graphs of 2 to
/// 12 segments with every generator feature on.
inline oracle::GeneratorSpec corpus_spec(std::uint64_t i) {
    oracle::GeneratorSpec spec;
    spec.seed = 0x9e3779b97f4a7c15ull * (i + 1);
    spec.n_segments = 2 + i % 11;
    spec.link_density = 0.15 + 0.1 * static_cast<double>(i % 5);
    spec.tips = true;
    spec.self_loops = true;
    spec.parallel_branches = true;
    spec.connected = true;
    return spec;
}

inline bool is_real(const BiedgedGraph& g, EdgeId e) { return !g.edge(e).dummy; }

/// Canonical form of a partition: each block sorted, blocks sorted.
inline std::vector<std::vector<EdgeId>> normalize(std::vector<std::vector<EdgeId>> blocks) {
    for (auto& b : blocks) {
        std::sort(b.begin(), b.end());
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

/// Classes on real cyclic edges match the oracle's; real bridges are exactly
/// the real edges on no cycle.
inline std::string check_classes(const Analysis& a, const oracle::CycleSet& cycles) {
    const BiedgedGraph& g = a.graph();
    const oracle::EdgePartition ref = oracle::reference_cycle_classes(g, cycles);

    std::vector<std::vector<EdgeId>> expected;
    for (const auto& cls : ref.classes) {
        std::vector<EdgeId> real;
        for (EdgeId e : cls) {
            if (is_real(g, e)) {
                real.push_back(e);
            }
        }
        if (!real.empty()) {
            expected.push_back(std::move(real));
        }
    }
    std::set<EdgeId> oracle_acyclic;
    for (EdgeId e : ref.acyclic) {
        if (is_real(g, e)) {
            oracle_acyclic.insert(e);
        }
    }

    std::map<std::uint32_t, std::vector<EdgeId>> by_class;
    std::set<EdgeId> bridges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!is_real(g, e)) {
            continue;
        }
        if (a.classes.bridge[e]) {
            bridges.insert(e);
        } else if (!oracle_acyclic.contains(e)) {
            by_class[a.classes.class_of[e]].push_back(e);
        }
    }
    std::vector<std::vector<EdgeId>> got;
    for (auto& [cls, edges] : by_class) {
        got.push_back(std::move(edges));
    }
    if (bridges != oracle_acyclic) {
        return "bridge set differs from the oracle's acyclic edges";
    }
    if (normalize(got) != normalize(expected)) {
        return "class partition differs from the oracle";
    }
    return {};
}

/// Tree edges grouped by bracket set coincide with the class grouping of
/// non-bridge tree edges.
inline std::string check_bracket_sets(const Analysis& a) {
    const auto sets = bracket_sets(a.t());
    std::map<std::vector<EdgeId>, std::vector<EdgeId>> by_set;
    std::map<std::uint32_t, std::vector<EdgeId>> by_class;
    for (const auto& [e, brackets] : sets) {
        if (brackets.empty() != static_cast<bool>(a.classes.bridge[e])) {
            return "edge " + std::to_string(e) + ": empty bracket set disagrees with bridge flag";
        }
        if (brackets.empty()) {
            continue;
        }
        std::vector<EdgeId> key = brackets;
        std::sort(key.begin(), key.end());
        by_set[key].push_back(e);
        by_class[a.classes.class_of[e]].push_back(e);
    }
    std::vector<std::vector<EdgeId>> lhs, rhs;
    for (auto& [k, v] : by_set) {
        lhs.push_back(v);
    }
    for (auto& [k, v] : by_class) {
        rhs.push_back(v);
    }
    if (normalize(lhs) != normalize(rhs)) {
        return "bracket-set grouping differs from class grouping";
    }
    return {};
}

/// Every flubble's boundary pair is 2-blackedge-disconnectable.
inline std::string check_flubble_boundaries(const Analysis& a, const FlubbleForest& forest) {
    for (const Flubble& f : forest.flubbles) {
        const EdgeId pair[2] = {a.graph().black_edge(f.entry), a.graph().black_edge(f.exit)};
        if (!oracle::is_k_blackedge_disconnectable(a.graph(), pair, 2)) {
            return "flubble " + a.graph().name(f.entry) + " " + a.graph().name(f.exit) +
                   " is not 2-blackedge-disconnectable";
        }
    }
    return {};
}

/// Brute-force hairpin stems: real black edges whose removal cuts off a
/// tip-free side that still holds a cycle. The reported stems must cover
/// exactly these black edges, each once, and each outer edge must itself
/// be such an edge.
inline std::string check_hairpins(const Analysis& a, const oracle::CycleSet& cycles,
                                  std::span<const Hairpin> hairpins) {
    const BiedgedGraph& g = a.graph();
    std::set<VertexId> tips;
    for (const VertexRef& r : a.comp.tips) {
        tips.insert(g.id(r));
    }
    std::set<EdgeId> expected;
    for (SegmentId s = 0; s < g.segment_count(); ++s) {
        const EdgeId e = g.black_edge(s);
        const EdgeId removed[1] = {e};
        const auto label = oracle::components_without(g, removed);
        const std::uint32_t su = label[g.edge(e).u];
        const std::uint32_t sv = label[g.edge(e).v];
        if (su == sv) {
            continue;  // not a bridge
        }
        for (std::uint32_t side : {su, sv}) {
            bool tip_free = true;
            for (VertexId v : tips) {
                tip_free = tip_free && label[v] != side;
            }
            bool has_cycle = false;
            for (std::uint64_t mask : cycles.cycles) {
                bool inside = true;
                for (EdgeId x = 0; x < g.edge_count() && inside; ++x) {
                    if (mask >> x & 1u) {
                        inside = label[g.edge(x).u] == side && label[g.edge(x).v] == side;
                    }
                }
                has_cycle = has_cycle || inside;
            }
            if (tip_free && has_cycle) {
                expected.insert(e);
                break;
            }
        }
    }

    std::multiset<EdgeId> reported;
    for (const Hairpin& h : hairpins) {
        if (!expected.contains(g.black_edge(h.outer))) {
            return "hairpin outer " + g.name(h.outer) + " fails the brute-force stem test";
        }
        for (EdgeId e : h.stem_edges) {
            if (g.edge(e).color == EdgeColor::Black) {
                reported.insert(e);
            }
        }
    }
    if (std::set<EdgeId>(reported.begin(), reported.end()).size() != reported.size()) {
        return "a black edge appears in two stems";
    }
    if (std::set<EdgeId>(reported.begin(), reported.end()) != expected) {
        std::ostringstream msg;
        msg << "stem black edges differ: expected " << expected.size() << ", reported " << reported.size();
        return msg.str();
    }
    return {};
}

/// A forest as comparable facts: boundary name pairs with their parent's
/// pair. Pairs are unordered since the DFS may enter a chain from either end.
using NamePair = std::pair<std::string, std::string>;
using ForestFacts = std::set<std::pair<std::pair<std::string, std::string>, std::pair<std::string, std::string>>>;

inline NamePair unordered(std::string a, std::string b) {
    if (b < a) {
        std::swap(a, b);
    }
    return {std::move(a), std::move(b)};
}

inline ForestFacts facts(const FlubbleForest& forest, const std::vector<std::string>& names) {
    ForestFacts out;
    for (const Flubble& f : forest.flubbles) {
        std::pair<std::string, std::string> parent{".", "."};
        if (f.parent) {
            const Flubble& p = forest.flubbles[*f.parent];
            parent = unordered(names[p.entry], names[p.exit]);
        }
        out.insert({unordered(names[f.entry], names[f.exit]), parent});
    }
    return out;
}

inline ForestFacts facts(const std::vector<oracle::ExpectedFlubble>& forest) {
    ForestFacts out;
    for (const auto& f : forest) {
        std::pair<std::string, std::string> parent{".", "."};
        if (f.parent) {
            parent = unordered(forest[*f.parent].entry, forest[*f.parent].exit);
        }
        out.insert({unordered(f.entry, f.exit), parent});
    }
    return out;
}

}  // namespace povu::test
