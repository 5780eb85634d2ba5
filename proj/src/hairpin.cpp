#include "povu/hairpin.hpp"

#include <algorithm>

namespace povu {

std::vector<bool> mark_cyclic_subtrees(const SpanningTree& t) {
    std::vector<bool> cyclic(t.vertex_count(), false);
    for (std::uint32_t dn = static_cast<std::uint32_t>(t.vertex_count()); dn-- > 0;) {
        const VertexId n = t.vertex_at(dn);
        bool c = !t.back_edges_down(n).empty() || !t.self_loops(n).empty();
        for (VertexId child : t.children(n)) {
            c = c || cyclic[child];
        }
        cyclic[n] = c;
    }
    return cyclic;
}

HairpinScan scan_hairpins(const SpanningTree& t, const ClassAssignment& ca) {
    const BiedgedGraph& g = t.graph();
    const auto cyclic = mark_cyclic_subtrees(t);

    auto is_bridge = [&](EdgeId e) { return e != kNone && ca.bridge[e]; };
    // The stem runs on through v when v is a plain pass-through vertex.
    auto continues = [&](VertexId v) {
        const auto kids = t.children(v);
        return is_bridge(t.parent_edge(v)) && kids.size() == 1 && is_bridge(t.parent_edge(kids[0])) &&
               t.self_loops(v).empty();
    };
    auto black_child = [&](VertexId v) -> EdgeId {
        if (g.is_dummy_vertex(v)) {
            return kNone;
        }
        const EdgeId black = g.black_edge(BiedgedGraph::segment_of(v));
        return t.upper(black) == v ? black : kNone;
    };

    HairpinScan scan;
    std::vector<EdgeId> chain;
    for (std::uint32_t dn = 0; dn < t.vertex_count(); ++dn) {
        const VertexId top = t.vertex_at(dn);
        if (continues(top)) {
            continue;
        }
        for (VertexId first : t.children(top)) {
            if (!is_bridge(t.parent_edge(first))) {
                continue;
            }
            chain.clear();
            VertexId bottom = first;
            chain.push_back(t.parent_edge(first));
            while (continues(bottom)) {
                bottom = t.children(bottom)[0];
                chain.push_back(t.parent_edge(bottom));
            }

            std::vector<SegmentId> blacks;
            for (EdgeId e : chain) {
                if (g.edge(e).color == EdgeColor::Black) {
                    blacks.push_back(BiedgedGraph::segment_of(g.edge(e).u));
                }
            }
            if (blacks.empty() || !cyclic[bottom]) {
                ++scan.suppressed_chains;
                continue;
            }

            Hairpin h;
            h.outer = blacks.front();
            if (blacks.size() >= 2) {
                h.inner = blacks.back();
            } else {
                // Follow the first child into the loop until a black edge turns up.
                h.inner = h.outer;
                for (VertexId v = bottom;;) {
                    if (const EdgeId b = black_child(v); b != kNone) {
                        h.inner = BiedgedGraph::segment_of(g.edge(b).u);
                        break;
                    }
                    const auto kids = t.children(v);
                    if (kids.empty()) {
                        break;
                    }
                    v = kids[0];
                }
            }
            h.stem_edges = chain;
            h.loop_root = g.ref(bottom);
            scan.hairpins.push_back(std::move(h));
        }
    }
    return scan;
}

std::vector<Hairpin> detect_hairpins(const SpanningTree& t, const ClassAssignment& ca) {
    return scan_hairpins(t, ca).hairpins;
}

std::vector<std::string> hairpin_report(std::span<const Hairpin> hairpins, std::span<const std::string> names) {
    std::vector<std::pair<std::string_view, std::string_view>> pairs;
    pairs.reserve(hairpins.size());
    for (const Hairpin& h : hairpins) {
        pairs.emplace_back(names[h.outer], names[h.inner]);
    }
    std::sort(pairs.begin(), pairs.end());
    std::vector<std::string> lines;
    lines.reserve(pairs.size());
    for (const auto& [outer, inner] : pairs) {
        std::string line = "HAIRPIN ";
        line += outer;
        line += ' ';
        line += inner;
        lines.push_back(std::move(line));
    }
    return lines;
}

}  // namespace povu
