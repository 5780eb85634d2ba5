#include "povu/flubble.hpp"

#include <numeric>

namespace povu {

std::vector<std::uint32_t> FlubbleForest::roots() const {
    std::vector<std::uint32_t> out;
    for (const Flubble& f : flubbles) {
        if (!f.parent) {
            out.push_back(f.id);
        }
    }
    return out;
}

std::vector<Flubble> enumerate_flubbles(const SpanningTree& t, const ClassAssignment& ca, ChainMode mode) {
    const BiedgedGraph& g = t.graph();
    auto usable = [&](EdgeId e) {
        const Edge& edge = g.edge(e);
        return edge.color == EdgeColor::Black && !edge.dummy && !ca.bridge[e];
    };

    // Bucket boundary candidates by class; filling in DFS order sorts each
    // bucket by the depth of the edge's lower end.
    std::vector<std::uint32_t> off(ca.n_classes + 1, 0);
    for (std::uint32_t d = 1; d < t.vertex_count(); ++d) {
        const EdgeId e = t.parent_edge(t.vertex_at(d));
        if (usable(e)) {
            ++off[ca.class_of[e] + 1];
        }
    }
    std::partial_sum(off.begin(), off.end(), off.begin());
    std::vector<EdgeId> members(off.back());
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    for (std::uint32_t d = 1; d < t.vertex_count(); ++d) {
        const EdgeId e = t.parent_edge(t.vertex_at(d));
        if (usable(e)) {
            members[fill[ca.class_of[e]]++] = e;
        }
    }

    std::vector<Flubble> out;
    for (std::uint32_t cls = 0; cls < ca.n_classes; ++cls) {
        const auto begin = off[cls];
        const auto end = off[cls + 1];
        if (end - begin < 2) {
            continue;
        }
        auto emit = [&](EdgeId a, EdgeId b) {
            Flubble f;
            f.id = static_cast<std::uint32_t>(out.size());
            f.entry = BiedgedGraph::segment_of(g.edge(a).u);
            f.exit = BiedgedGraph::segment_of(g.edge(b).u);
            f.class_id = cls;
            out.push_back(f);
        };
        if (mode == ChainMode::PerClass) {
            emit(members[begin], members[end - 1]);
        } else {
            for (auto i = begin; i + 1 < end; ++i) {
                emit(members[i], members[i + 1]);
            }
        }
    }
    return out;
}

FlubbleForest build_flubble_tree(std::vector<Flubble> flubbles, const SpanningTree& t) {
    const BiedgedGraph& g = t.graph();
    const std::size_t nf = flubbles.size();
    FlubbleForest forest;
    if (nf == 0) {
        return forest;
    }

    std::vector<std::uint32_t> opens(g.edge_count(), kNone);
    std::vector<std::uint32_t> closes(g.edge_count(), kNone);
    for (std::uint32_t i = 0; i < nf; ++i) {
        const EdgeId entry = g.black_edge(flubbles[i].entry);
        const EdgeId exit = g.black_edge(flubbles[i].exit);
        if (opens[entry] != kNone || closes[exit] != kNone) {
            throw OverlapViolation("boundary edge shared by two flubbles on the same side");
        }
        opens[entry] = i;
        closes[exit] = i;
    }

    std::vector<std::uint32_t> parent(nf, kNone);
    std::vector<std::uint32_t> opened_at(nf, kNone);
    std::uint32_t open_clock = 0;
    std::vector<std::uint32_t> open;  // innermost on top

    auto pop_expect = [&](std::uint32_t f, const char* what) {
        if (open.empty() || open.back() != f) {
            throw OverlapViolation(std::string("flubble regions cross at ") + what + " of flubble " +
                                   std::to_string(f));
        }
        open.pop_back();
    };
    auto descend = [&](EdgeId e) {
        if (closes[e] != kNone) {
            pop_expect(closes[e], "exit");
        }
        if (const auto f = opens[e]; f != kNone) {
            parent[f] = open.empty() ? kNone : open.back();
            opened_at[f] = open_clock++;
            open.push_back(f);
        }
    };
    auto ascend = [&](EdgeId e) {
        if (opens[e] != kNone) {
            pop_expect(opens[e], "entry");
        }
        if (closes[e] != kNone) {
            open.push_back(closes[e]);
        }
    };

    struct Frame {
        VertexId v;
        std::uint32_t next;
    };
    std::vector<Frame> stack{{t.root(), 0}};
    while (!stack.empty()) {
        Frame& top = stack.back();
        const auto kids = t.children(top.v);
        if (top.next == kids.size()) {
            const EdgeId up = t.parent_edge(top.v);
            stack.pop_back();
            if (up != kNone) {
                ascend(up);
            }
            continue;
        }
        const VertexId c = kids[top.next++];
        descend(t.parent_edge(c));
        stack.push_back({c, 0});
    }
    if (!open.empty()) {
        throw OverlapViolation("flubble regions left open after the walk");
    }
    for (std::uint32_t f = 0; f < nf; ++f) {
        if (opened_at[f] == kNone) {
            throw OverlapViolation("flubble " + std::to_string(f) + " never opened");
        }
    }

    // Children ordered by opening time, then ids by pre-order.
    std::vector<std::uint32_t> by_open(nf);
    for (std::uint32_t f = 0; f < nf; ++f) {
        by_open[opened_at[f]] = f;
    }
    std::vector<std::uint32_t> child_off(nf + 2, 0);
    for (std::uint32_t f : by_open) {
        ++child_off[(parent[f] == kNone ? nf : parent[f]) + 1];
    }
    std::partial_sum(child_off.begin(), child_off.end(), child_off.begin());
    std::vector<std::uint32_t> kids(nf);
    {
        std::vector<std::uint32_t> fill(child_off.begin(), child_off.end() - 1);
        for (std::uint32_t f : by_open) {
            kids[fill[parent[f] == kNone ? nf : parent[f]]++] = f;
        }
    }

    std::vector<std::uint32_t> new_id(nf, kNone);
    forest.flubbles.resize(nf);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> walk;  // (node, next child)
    walk.emplace_back(static_cast<std::uint32_t>(nf), child_off[nf]);
    std::uint32_t clock = 0;
    while (!walk.empty()) {
        auto& [node, next] = walk.back();
        if (next == child_off[node + 1]) {
            if (node != nf) {
                forest.flubbles[new_id[node]].interval.second = clock - 1;
            }
            walk.pop_back();
            continue;
        }
        const std::uint32_t f = kids[next++];
        const std::uint32_t id = clock++;
        new_id[f] = id;
        Flubble& out = forest.flubbles[id];
        out = flubbles[f];
        out.id = id;
        out.interval.first = id;
        out.parent = parent[f] == kNone ? std::nullopt : std::optional<std::uint32_t>(new_id[parent[f]]);
        walk.emplace_back(f, child_off[f]);
    }
    return forest;
}

bool flubble_count_bound_check(const BiedgedGraph& g, std::span<const FlubbleForest> forests) {
    std::size_t total = 0;
    for (const FlubbleForest& f : forests) {
        total += f.size();
    }
    return total <= g.real_edge_count();
}

bool flubble_count_bound_check(const BiedgedGraph& g, const FlubbleForest& forest) {
    return flubble_count_bound_check(g, std::span<const FlubbleForest>(&forest, 1));
}

}  // namespace povu
