#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "povu/graph.hpp"

namespace povu {

enum class EdgeKind : std::uint8_t { Tree, Back };

/// Rooted DFS spanning tree of a connected graph, augmented with its
/// back-edges. Holds a pointer to the graph it was built from, which must
/// outlive it.
///
/// Every edge is oriented (lower, upper): for a tree edge, child then
/// parent; for a back-edge, descendant then ancestor. Self-loops are
/// back-edges with lower == upper.
class SpanningTree {
public:
    const BiedgedGraph& graph() const { return *graph_; }
    VertexId root() const { return root_; }
    std::size_t vertex_count() const { return order_.size(); }

    std::uint32_t dfsnum(VertexId v) const { return dfsnum_[v]; }
    VertexId vertex_at(std::uint32_t dfsnum) const { return order_[dfsnum]; }
    /// Pre-order interval: enter(v) == dfsnum(v), exit(v) is the largest
    /// dfsnum in v's subtree.
    std::uint32_t enter(VertexId v) const { return dfsnum_[v]; }
    std::uint32_t exit(VertexId v) const { return exit_[v]; }
    /// kNone for the root.
    EdgeId parent_edge(VertexId v) const { return parent_edge_[v]; }

    EdgeKind kind(EdgeId e) const { return kind_[e]; }
    VertexId lower(EdgeId e) const { return lower_[e]; }
    VertexId upper(EdgeId e) const { return upper_[e]; }

    std::span<const EdgeId> tree_edges() const { return tree_edges_; }
    std::span<const EdgeId> back_edges() const { return back_edges_; }

    /// Children in discovery order.
    std::span<const VertexId> children(VertexId v) const { return slice(children_, child_off_, v); }
    /// Back-edges from v to a proper ancestor.
    std::span<const EdgeId> back_edges_up(VertexId v) const { return slice(up_, up_off_, v); }
    /// Back-edges from a proper descendant to v.
    std::span<const EdgeId> back_edges_down(VertexId v) const { return slice(down_, down_off_, v); }
    std::span<const EdgeId> self_loops(VertexId v) const { return slice(loops_, loop_off_, v); }

    bool is_ancestor(VertexId u, VertexId v) const {
        return enter(u) <= enter(v) && exit(v) <= exit(u);
    }

private:
    friend SpanningTree dfs_tree(const BiedgedGraph& g, VertexId root);

    template <class T>
    static std::span<const T> slice(const std::vector<T>& data, const std::vector<std::uint32_t>& off,
                                    VertexId v) {
        return {data.data() + off[v], data.data() + off[v + 1]};
    }

    const BiedgedGraph* graph_ = nullptr;
    VertexId root_ = 0;
    std::vector<std::uint32_t> dfsnum_;
    std::vector<std::uint32_t> exit_;
    std::vector<VertexId> order_;
    std::vector<EdgeId> parent_edge_;
    std::vector<EdgeKind> kind_;
    std::vector<VertexId> lower_;
    std::vector<VertexId> upper_;
    std::vector<EdgeId> tree_edges_;
    std::vector<EdgeId> back_edges_;
    std::vector<VertexId> children_;
    std::vector<std::uint32_t> child_off_;
    std::vector<EdgeId> up_, down_, loops_;
    std::vector<std::uint32_t> up_off_, down_off_, loop_off_;
};

/// Iterative DFS from `root`, visiting incidences in adjacency order.
/// Throws std::invalid_argument if the graph is not connected.
SpanningTree dfs_tree(const BiedgedGraph& g, VertexId root);

/// Tree of a rooted component (see attach_dummy_root).
SpanningTree dfs_tree(const Component& c);

inline bool is_ancestor(const SpanningTree& t, VertexId u, VertexId v) { return t.is_ancestor(u, v); }

}  // namespace povu
