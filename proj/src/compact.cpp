#include <algorithm>
#include <stdexcept>

#include "povu/graph.hpp"

namespace povu {

namespace {

struct ChainStep {
    SegmentId segment;
    VertexId entry;  // side the chain walk enters this segment through
};

}  // namespace

BiedgedGraph compact(const BiedgedGraph& g) {
    if (g.has_dummy_root()) {
        throw std::logic_error("compact expects a graph without a dummy root");
    }
    const std::size_t n = g.segment_count();
    const auto deg = g.grey_degrees();

    // join[v] = (neighbour, edge) when v's only grey edge is mergeable.
    std::vector<VertexId> join(2 * n, kNone);
    std::vector<EdgeId> join_edge(2 * n, kNone);
    bool any = false;
    for (EdgeId id = static_cast<EdgeId>(n); id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (BiedgedGraph::segment_of(e.u) == BiedgedGraph::segment_of(e.v)) {
            continue;
        }
        if (deg[e.u] == 1 && deg[e.v] == 1) {
            join[e.u] = e.v;
            join[e.v] = e.u;
            join_edge[e.u] = join_edge[e.v] = id;
            any = true;
        }
    }
    if (!any) {
        return g;
    }

    std::vector<std::string> names;
    std::vector<std::string> labels;
    std::vector<std::string> provenance;
    std::vector<VertexId> side_map(2 * n, kNone);
    std::vector<bool> visited(n, false);
    std::vector<bool> keep_edge(g.edge_count(), true);
    std::vector<ChainStep> chain;

    for (SegmentId s = 0; s < n; ++s) {
        if (visited[s]) {
            continue;
        }
        chain.clear();
        bool cyclic = false;
        // Walk out through s's Start to find a terminal (or come back round).
        VertexId cur = BiedgedGraph::vertex(s, Side::Start);
        while (join[cur] != kNone) {
            const VertexId w = join[cur];
            if (BiedgedGraph::segment_of(w) == s) {
                cyclic = true;
                break;
            }
            cur = BiedgedGraph::opposite(w);
        }
        if (cyclic) {
            // Enter s forward and go round; the closing edge survives.
            VertexId entry = BiedgedGraph::vertex(s, Side::Start);
            while (true) {
                chain.push_back({BiedgedGraph::segment_of(entry), entry});
                const VertexId exit = BiedgedGraph::opposite(entry);
                const VertexId w = join[exit];
                if (BiedgedGraph::segment_of(w) == s) {
                    break;
                }
                keep_edge[join_edge[exit]] = false;
                entry = w;
            }
        } else {
            VertexId entry = cur;
            while (true) {
                chain.push_back({BiedgedGraph::segment_of(entry), entry});
                const VertexId exit = BiedgedGraph::opposite(entry);
                if (join[exit] == kNone) {
                    break;
                }
                keep_edge[join_edge[exit]] = false;
                entry = join[exit];
            }
            if (chain.back().segment < chain.front().segment) {
                std::reverse(chain.begin(), chain.end());
                for (ChainStep& step : chain) {
                    step.entry = BiedgedGraph::opposite(step.entry);
                }
            }
        }

        const auto new_id = static_cast<SegmentId>(names.size());
        std::string label;
        std::string prov;
        bool starred = false;
        for (const ChainStep& step : chain) {
            visited[step.segment] = true;
            const bool forward = BiedgedGraph::side_of(step.entry) == Side::Start;
            const std::string& piece = g.label(step.segment);
            if (piece == "*") {
                starred = true;
            } else if (!starred) {
                label += forward ? piece : reverse_complement(piece);
            }
            if (!prov.empty()) {
                prov += ',';
            }
            const std::string& old = g.provenance(step.segment);
            if (old.empty()) {
                prov += g.name(step.segment);
                prov += forward ? '+' : '-';
            } else {
                // Re-compaction nests the earlier record; "(rc)" marks a reversed one.
                prov += old;
                if (!forward) {
                    prov += "(rc)";
                }
            }
        }
        names.push_back(g.name(chain.front().segment));
        labels.push_back(starred ? "*" : std::move(label));
        provenance.push_back(std::move(prov));
        side_map[chain.front().entry] = BiedgedGraph::vertex(new_id, Side::Start);
        side_map[BiedgedGraph::opposite(chain.back().entry)] = BiedgedGraph::vertex(new_id, Side::End);
    }

    BiedgedGraph out(std::move(names), std::move(labels));
    out.set_provenance(std::move(provenance));
    for (EdgeId id = static_cast<EdgeId>(n); id < g.edge_count(); ++id) {
        if (!keep_edge[id]) {
            continue;
        }
        const Edge& e = g.edge(id);
        out.add_grey_edge(side_map[e.u], side_map[e.v]);
    }
    return out;
}

}  // namespace povu
