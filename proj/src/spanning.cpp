#include "povu/spanning.hpp"

#include <numeric>
#include <stdexcept>

namespace povu {

namespace {

// Buckets `items` by `key` into a CSR layout, keeping input order per bucket.
template <class Key>
void bucket(std::size_t n, std::span<const EdgeId> items, Key key, std::vector<EdgeId>& out,
            std::vector<std::uint32_t>& off) {
    off.assign(n + 1, 0);
    for (EdgeId e : items) {
        ++off[key(e) + 1];
    }
    std::partial_sum(off.begin(), off.end(), off.begin());
    out.resize(items.size());
    std::vector<std::uint32_t> fill(off.begin(), off.end() - 1);
    for (EdgeId e : items) {
        out[fill[key(e)]++] = e;
    }
}

}  // namespace

SpanningTree dfs_tree(const BiedgedGraph& g, VertexId root) {
    const std::size_t nv = g.vertex_count();
    const std::size_t ne = g.edge_count();
    if (root >= nv) {
        throw std::invalid_argument("dfs_tree: root out of range");
    }

    SpanningTree t;
    t.graph_ = &g;
    t.root_ = root;
    t.dfsnum_.assign(nv, kNone);
    t.exit_.assign(nv, 0);
    t.order_.reserve(nv);
    t.parent_edge_.assign(nv, kNone);
    t.kind_.assign(ne, EdgeKind::Tree);
    t.lower_.assign(ne, kNone);
    t.upper_.assign(ne, kNone);
    t.tree_edges_.reserve(nv ? nv - 1 : 0);

    const Adjacency adj = g.adjacency();
    std::vector<bool> classified(ne, false);

    struct Frame {
        VertexId v;
        std::uint32_t next;  // position in adj.edges
    };
    std::vector<Frame> stack;
    auto discover = [&](VertexId v) {
        t.dfsnum_[v] = static_cast<std::uint32_t>(t.order_.size());
        t.order_.push_back(v);
        stack.push_back({v, adj.offsets[v]});
    };
    discover(root);
    while (!stack.empty()) {
        Frame& top = stack.back();
        const VertexId v = top.v;
        if (top.next == adj.offsets[v + 1]) {
            t.exit_[v] = static_cast<std::uint32_t>(t.order_.size() - 1);
            stack.pop_back();
            continue;
        }
        const EdgeId e = adj.edges[top.next++];
        if (classified[e]) {
            continue;
        }
        classified[e] = true;
        const VertexId w = g.edge(e).other(v);
        if (t.dfsnum_[w] == kNone) {
            t.kind_[e] = EdgeKind::Tree;
            t.lower_[e] = w;
            t.upper_[e] = v;
            t.parent_edge_[w] = e;
            t.tree_edges_.push_back(e);
            discover(w);  // invalidates `top`
        } else {
            // Undirected DFS has no cross edges: w is v itself or an ancestor on the stack.
            t.kind_[e] = EdgeKind::Back;
            t.lower_[e] = v;
            t.upper_[e] = w;
            t.back_edges_.push_back(e);
        }
    }
    if (t.order_.size() != nv) {
        throw std::invalid_argument("dfs_tree: graph is not connected");
    }

    // Children in discovery order.
    t.child_off_.assign(nv + 1, 0);
    for (std::uint32_t d = 1; d < nv; ++d) {
        ++t.child_off_[t.upper_[t.parent_edge_[t.order_[d]]] + 1];
    }
    std::partial_sum(t.child_off_.begin(), t.child_off_.end(), t.child_off_.begin());
    t.children_.resize(nv ? nv - 1 : 0);
    {
        std::vector<std::uint32_t> fill(t.child_off_.begin(), t.child_off_.end() - 1);
        for (std::uint32_t d = 1; d < nv; ++d) {
            const VertexId c = t.order_[d];
            t.children_[fill[t.upper_[t.parent_edge_[c]]]++] = c;
        }
    }

    std::vector<EdgeId> proper, loops;
    for (EdgeId e : t.back_edges_) {
        (t.lower_[e] == t.upper_[e] ? loops : proper).push_back(e);
    }
    bucket(nv, proper, [&](EdgeId e) { return t.lower_[e]; }, t.up_, t.up_off_);
    bucket(nv, proper, [&](EdgeId e) { return t.upper_[e]; }, t.down_, t.down_off_);
    bucket(nv, loops, [&](EdgeId e) { return t.lower_[e]; }, t.loops_, t.loop_off_);
    return t;
}

SpanningTree dfs_tree(const Component& c) {
    if (!c.root) {
        throw std::invalid_argument("dfs_tree: component has not been rooted");
    }
    return dfs_tree(c.graph, *c.root);
}

}  // namespace povu
