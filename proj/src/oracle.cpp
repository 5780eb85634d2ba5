#include "povu/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <unordered_set>

namespace povu::oracle {

std::vector<std::vector<EdgeId>> CycleSet::as_edges() const {
    std::vector<std::vector<EdgeId>> out;
    out.reserve(cycles.size());
    for (std::uint64_t mask : cycles) {
        std::vector<EdgeId> edges;
        for (EdgeId e = 0; e < 64; ++e) {
            if (mask >> e & 1u) {
                edges.push_back(e);
            }
        }
        out.push_back(std::move(edges));
    }
    return out;
}

CycleSet enumerate_simple_cycles(const BiedgedGraph& g, std::size_t cap) {
    if (g.edge_count() > kMaxEnumerationEdges) {
        throw InputTooLarge("cycle enumeration limited to " + std::to_string(kMaxEnumerationEdges) +
                            " edges, got " + std::to_string(g.edge_count()));
    }
    const std::size_t nv = g.vertex_count();
    std::vector<std::vector<std::pair<EdgeId, VertexId>>> adj(nv);
    std::unordered_set<std::uint64_t> found;
    auto record = [&](std::uint64_t mask) {
        found.insert(mask);
        if (found.size() > cap) {
            throw CapExceeded("more than " + std::to_string(cap) + " simple cycles");
        }
    };
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (edge.is_self_loop()) {
            record(std::uint64_t{1} << e);
            continue;
        }
        adj[edge.u].emplace_back(e, edge.v);
        adj[edge.v].emplace_back(e, edge.u);
    }

    // Each cycle is found from its smallest vertex, once per direction.
    std::vector<bool> on_path(nv, false);
    for (VertexId s = 0; s < nv; ++s) {
        std::function<void(VertexId, std::uint64_t, EdgeId)> extend = [&](VertexId u, std::uint64_t mask,
                                                                           EdgeId last) {
            for (const auto& [e, w] : adj[u]) {
                if (e == last) {
                    continue;
                }
                if (w == s) {
                    record(mask | (std::uint64_t{1} << e));
                } else if (w > s && !on_path[w]) {
                    on_path[w] = true;
                    extend(w, mask | (std::uint64_t{1} << e), e);
                    on_path[w] = false;
                }
            }
        };
        on_path[s] = true;
        extend(s, 0, kNone);
        on_path[s] = false;
    }

    CycleSet out;
    out.cycles.assign(found.begin(), found.end());
    std::sort(out.cycles.begin(), out.cycles.end());
    return out;
}

EdgePartition reference_cycle_classes(const BiedgedGraph& g, const CycleSet& cycles) {
    const std::size_t words = (cycles.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> signature(g.edge_count(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t c = 0; c < cycles.size(); ++c) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (cycles.cycles[c] >> e & 1u) {
                signature[e][c / 64] |= std::uint64_t{1} << (c % 64);
            }
        }
    }
    EdgePartition part;
    std::map<std::vector<std::uint64_t>, std::size_t> index;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const bool acyclic = std::all_of(signature[e].begin(), signature[e].end(),
                                         [](std::uint64_t w) { return w == 0; });
        if (acyclic) {
            part.acyclic.push_back(e);
            continue;
        }
        auto [it, inserted] = index.emplace(signature[e], part.classes.size());
        if (inserted) {
            part.classes.emplace_back();
        }
        part.classes[it->second].push_back(e);
    }
    return part;
}

EdgePartition reference_cycle_classes(const BiedgedGraph& g, std::size_t cap) {
    return reference_cycle_classes(g, enumerate_simple_cycles(g, cap));
}

std::vector<std::uint32_t> components_without(const BiedgedGraph& g, std::span<const EdgeId> removed) {
    const std::size_t nv = g.vertex_count();
    std::vector<bool> gone(g.edge_count(), false);
    for (EdgeId e : removed) {
        gone[e] = true;
    }
    std::vector<std::vector<VertexId>> adj(nv);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!gone[e]) {
            adj[g.edge(e).u].push_back(g.edge(e).v);
            adj[g.edge(e).v].push_back(g.edge(e).u);
        }
    }
    std::vector<std::uint32_t> label(nv, kNone);
    std::uint32_t next = 0;
    for (VertexId s = 0; s < nv; ++s) {
        if (label[s] != kNone) {
            continue;
        }
        std::vector<VertexId> todo{s};
        label[s] = next;
        while (!todo.empty()) {
            const VertexId u = todo.back();
            todo.pop_back();
            for (VertexId w : adj[u]) {
                if (label[w] == kNone) {
                    label[w] = next;
                    todo.push_back(w);
                }
            }
        }
        ++next;
    }
    return label;
}

bool is_k_blackedge_disconnectable(const BiedgedGraph& g, std::span<const EdgeId> edges, std::size_t k) {
    if (edges.size() != k) {
        throw std::invalid_argument("is_k_blackedge_disconnectable: expected exactly k edges");
    }
    if (k == 0) {
        return false;
    }
    for (EdgeId e : edges) {
        if (g.edge(e).color != EdgeColor::Black) {
            throw std::invalid_argument("is_k_blackedge_disconnectable: edge " + std::to_string(e) +
                                        " is not black");
        }
    }
    const auto label = components_without(g, edges);
    std::set<std::uint32_t> candidates;
    for (EdgeId e : edges) {
        candidates.insert(label[g.edge(e).u]);
        candidates.insert(label[g.edge(e).v]);
    }
    // A part cut off by exactly these edges has every one of them on its boundary.
    for (std::uint32_t part : candidates) {
        const bool all_cross = std::all_of(edges.begin(), edges.end(), [&](EdgeId e) {
            return (label[g.edge(e).u] == part) != (label[g.edge(e).v] == part);
        });
        if (all_cross) {
            return true;
        }
    }
    return false;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

Orientation random_orient(Rng& rng) { return coin(rng) ? Orientation::Forward : Orientation::Reverse; }

std::string random_sequence(Rng& rng, std::size_t len) {
    static constexpr char kBases[] = "ACGT";
    std::string s(len, 'A');
    for (char& c : s) {
        c = kBases[uniform(rng, 0, 3)];
    }
    return s;
}

/// Segments by index and links between them, turned into a document at the end.
struct Builder {
    struct Link {
        std::size_t from;
        Orientation from_orient;
        std::size_t to;
        Orientation to_orient;
    };
    std::vector<std::string> sequences;
    std::vector<Link> links;

    std::size_t add_segment(Rng& rng) {
        sequences.push_back(random_sequence(rng, uniform(rng, 1, 3)));
        return sequences.size() - 1;
    }
    void link(std::size_t a, Orientation oa, std::size_t b, Orientation ob) { links.push_back({a, oa, b, ob}); }
    void link(std::size_t a, std::size_t b) { link(a, Orientation::Forward, b, Orientation::Forward); }

    // Grey-edge ends per segment side (0 = Start, 1 = End).
    std::vector<std::size_t> side_degrees() const {
        std::vector<std::size_t> deg(2 * sequences.size(), 0);
        for (const Link& l : links) {
            ++deg[2 * l.from + (l.from_orient == Orientation::Forward ? 1 : 0)];
            ++deg[2 * l.to + (l.to_orient == Orientation::Forward ? 0 : 1)];
        }
        return deg;
    }

    /// Optionally reverses segments and shuffles their order; names are
    /// 1-based declaration positions.
    GfaDocument finish(Rng& rng, bool scramble, std::vector<std::string>* names_out = nullptr) const {
        const std::size_t n = sequences.size();
        std::vector<std::size_t> position(n);
        std::iota(position.begin(), position.end(), 0);
        std::vector<bool> reversed(n, false);
        if (scramble) {
            std::shuffle(position.begin(), position.end(), rng);
            for (std::size_t i = 0; i < n; ++i) {
                reversed[i] = coin(rng);
            }
        }
        std::vector<std::string> names(n);
        GfaDocument doc;
        doc.segments.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            names[i] = std::to_string(position[i] + 1);
            doc.segments[position[i]] = {names[i], reversed[i] ? reverse_complement(sequences[i]) : sequences[i]};
        }
        std::set<std::tuple<std::string, Orientation, std::string, Orientation>> seen;
        for (const Link& l : links) {
            GfaLink gl{names[l.from], reversed[l.from] ? flip(l.from_orient) : l.from_orient, names[l.to],
                       reversed[l.to] ? flip(l.to_orient) : l.to_orient, "0M"};
            gl = canonical_link(std::move(gl));
            if (seen.emplace(gl.from_name, gl.from_orient, gl.to_name, gl.to_orient).second) {
                doc.links.push_back(std::move(gl));
            }
        }
        if (names_out) {
            *names_out = std::move(names);
        }
        return doc;
    }
};

struct NestedState {
    Builder& b;
    Rng& rng;
    std::size_t max_width;
    std::vector<std::tuple<std::size_t, std::size_t, std::optional<std::size_t>>> expected;

    // Returns the first and last boundary segment of the chain.
    std::pair<std::size_t, std::size_t> chain(std::size_t depth, std::size_t width,
                                              std::optional<std::size_t> parent) {
        const std::size_t first = b.add_segment(rng);
        std::size_t prev = first;
        for (std::size_t i = 0; i < width; ++i) {
            const std::size_t next = b.add_segment(rng);
            const std::size_t f = expected.size();
            expected.emplace_back(prev, next, parent);
            for (int branch = 0; branch < 2; ++branch) {
                const bool nest = depth > 1 && (branch == 0 || (max_width >= 2 && coin(rng, 0.4)));
                if (nest) {
                    auto [x, y] = chain(depth - 1, uniform(rng, 1, max_width), f);
                    b.link(prev, x);
                    b.link(y, next);
                } else {
                    const std::size_t z = b.add_segment(rng);
                    b.link(prev, z);
                    b.link(z, next);
                }
            }
            prev = next;
        }
        return {first, prev};
    }
};

}  // namespace

NestedBubbles nested_bubble_generator(std::size_t depth, std::size_t chain_width, std::uint64_t seed) {
    if (depth == 0 || chain_width == 0) {
        throw std::invalid_argument("nested_bubble_generator: depth and chain_width must be >= 1");
    }
    Rng rng(seed);
    Builder b;
    NestedState st{b, rng, chain_width, {}};
    st.chain(depth, chain_width, std::nullopt);
    std::vector<std::string> names;
    NestedBubbles out;
    out.doc = b.finish(rng, true, &names);
    for (const auto& [entry, exit, parent] : st.expected) {
        out.forest.push_back({names[entry], names[exit], parent});
    }
    return out;
}

GfaDocument bubble_chain_document(std::size_t n_segments, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t bubbles = std::max<std::size_t>(1, n_segments > 1 ? (n_segments - 1) / 3 : 1);
    GfaDocument doc;
    doc.segments.reserve(3 * bubbles + 1);
    doc.links.reserve(4 * bubbles);
    std::size_t next_name = 1;
    auto segment = [&](std::string seq) {
        doc.segments.push_back({std::to_string(next_name++), std::move(seq)});
        return doc.segments.back().name;
    };
    std::string prev = segment(random_sequence(rng, 8));
    for (std::size_t i = 0; i < bubbles; ++i) {
        const std::string ref = segment(random_sequence(rng, 1));
        const std::string alt = segment(random_sequence(rng, 1));
        const std::string next = segment(random_sequence(rng, 8));
        for (const std::string* mid : {&ref, &alt}) {
            doc.links.push_back(canonical_link({prev, Orientation::Forward, *mid, Orientation::Forward, "0M"}));
            doc.links.push_back(canonical_link({*mid, Orientation::Forward, next, Orientation::Forward, "0M"}));
        }
        prev = next;
    }
    return doc;
}

GfaDocument random_biedged_graph(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    Builder b;
    const std::size_t n = std::max<std::size_t>(1, spec.n_segments);

    std::size_t core = 0;
    if (spec.nesting_depth > 0) {
        NestedState st{b, rng, 2, {}};
        st.chain(spec.nesting_depth, 1, std::nullopt);
        core = b.sequences.size();
    }
    const std::size_t branch_segments =
        spec.parallel_branches && n >= 4 ? uniform(rng, 0, n / 4) : 0;
    const std::size_t base = std::max(core, n - branch_segments);
    while (b.sequences.size() < base) {
        b.add_segment(rng);
    }

    if (spec.connected) {
        for (std::size_t i = std::max<std::size_t>(core, 1); i < base; ++i) {
            b.link(uniform(rng, 0, i - 1), random_orient(rng), i, random_orient(rng));
        }
    }
    const auto extras = static_cast<std::size_t>(spec.link_density * static_cast<double>(base) + 0.5);
    for (std::size_t i = 0; i < extras; ++i) {
        const std::size_t a = uniform(rng, 0, base - 1);
        std::size_t c = uniform(rng, 0, base - 1);
        if (a == c && !spec.self_loops) {
            if (base == 1) {
                continue;
            }
            c = (c + 1) % base;
        }
        b.link(a, random_orient(rng), c, random_orient(rng));
    }
    if (spec.self_loops && coin(rng)) {
        const std::size_t a = uniform(rng, 0, base - 1);
        const Orientation o = random_orient(rng);
        b.link(a, o, a, coin(rng) ? flip(o) : o);
    }
    // Each branch segment doubles an existing link, making a two-path bubble.
    for (std::size_t z = base; z < base + branch_segments; ++z) {
        b.add_segment(rng);
        if (b.links.empty()) {
            b.link(0, random_orient(rng), z, random_orient(rng));
            continue;
        }
        const Builder::Link l = b.links[uniform(rng, 0, b.links.size() - 1)];
        b.link(l.from, l.from_orient, z, Orientation::Forward);
        b.link(z, Orientation::Forward, l.to, l.to_orient);
    }
    if (!spec.tips && b.sequences.size() > 1) {
        const auto deg = b.side_degrees();
        for (std::size_t v = 0; v < deg.size(); ++v) {
            if (deg[v] != 0) {
                continue;
            }
            const std::size_t seg = v / 2;
            std::size_t other = uniform(rng, 0, b.sequences.size() - 2);
            if (other >= seg) {
                ++other;
            }
            // Leave through Start means a reversed traversal of seg.
            b.link(seg, (v & 1) ? Orientation::Forward : Orientation::Reverse, other, random_orient(rng));
        }
    }
    return b.finish(rng, false);
}

GfaDocument hairpin_corpus_graph(std::uint64_t seed) {
    Rng rng(seed);
    Builder b;
    // Core: a plain bubble, or a short random tangle.
    if (coin(rng)) {
        NestedState st{b, rng, 1, {}};
        st.chain(1, 1, std::nullopt);
    } else {
        const std::size_t k = uniform(rng, 2, 4);
        for (std::size_t i = 0; i < k; ++i) {
            b.add_segment(rng);
        }
        for (std::size_t i = 1; i < k; ++i) {
            b.link(uniform(rng, 0, i - 1), random_orient(rng), i, random_orient(rng));
        }
        if (coin(rng)) {
            b.link(uniform(rng, 0, k - 1), random_orient(rng), uniform(rng, 0, k - 1), random_orient(rng));
        }
    }
    const std::size_t core = b.sequences.size();

    const std::size_t stems = uniform(rng, 1, 2);
    for (std::size_t s = 0; s < stems; ++s) {
        std::size_t at = uniform(rng, 0, core - 1);
        Orientation at_o = random_orient(rng);
        const std::size_t len = uniform(rng, 1, 2);
        for (std::size_t i = 0; i < len; ++i) {
            const std::size_t x = b.add_segment(rng);
            const Orientation xo = random_orient(rng);
            b.link(at, at_o, x, xo);
            at = x;
            at_o = xo;
        }
        // `at` is the stem's last segment, left through the side given by at_o.
        switch (uniform(rng, 0, 2)) {
        case 0:
            b.link(at, at_o, at, flip(at_o));
            break;
        case 1: {
            std::size_t prev = at;
            Orientation prev_o = at_o;
            const std::size_t ring = uniform(rng, 1, 2);
            for (std::size_t i = 0; i < ring; ++i) {
                const std::size_t y = b.add_segment(rng);
                const Orientation yo = random_orient(rng);
                b.link(prev, prev_o, y, yo);
                prev = y;
                prev_o = yo;
            }
            b.link(prev, prev_o, at, flip(at_o));
            break;
        }
        default: {
            const std::size_t p = b.add_segment(rng);
            const std::size_t q1 = b.add_segment(rng);
            const std::size_t q2 = b.add_segment(rng);
            const std::size_t r = b.add_segment(rng);
            b.link(at, at_o, p, Orientation::Forward);
            b.link(p, q1);
            b.link(p, q2);
            b.link(q1, r);
            b.link(q2, r);
            b.link(r, Orientation::Forward, at, flip(at_o));
            break;
        }
        }
    }
    if (coin(rng)) {
        const std::size_t d = b.add_segment(rng);
        b.link(uniform(rng, 0, core - 1), random_orient(rng), d, Orientation::Forward);
    }
    return b.finish(rng, true);
}

}  // namespace povu::oracle
