#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "povu/gfa.hpp"

namespace povu {

using SegmentId = std::uint32_t;
using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

/// Start is the side a forward traversal enters through, End the side it
/// leaves through.
enum class Side : std::uint8_t { Start, End };

enum class EdgeColor : std::uint8_t { Black, Grey };

struct VertexRef {
    enum class Kind : std::uint8_t { SegmentSide, DummyRoot };

    Kind kind = Kind::SegmentSide;
    SegmentId segment = 0;
    Side side = Side::Start;

    static constexpr VertexRef side_of(SegmentId s, Side side) { return {Kind::SegmentSide, s, side}; }
    static constexpr VertexRef dummy_root() { return {Kind::DummyRoot, 0, Side::Start}; }

    friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    EdgeColor color = EdgeColor::Grey;
    bool dummy = false;

    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool is_self_loop() const { return u == v; }
};

/// Incidence lists in compressed form. Each vertex's range is sorted
/// black-first, then by neighbour segment, neighbour side, dummy last.
struct Adjacency {
    std::vector<std::uint32_t> offsets;
    std::vector<EdgeId> edges;

    std::span<const EdgeId> of(VertexId v) const {
        return {edges.data() + offsets[v], edges.data() + offsets[v + 1]};
    }
};

/// Biedged variation graph. Segment s owns vertices 2s (Start) and 2s+1
/// (End) and black edge s; grey edges follow the black ones and an optional
/// dummy root sits after all segment sides.
class BiedgedGraph {
public:
    BiedgedGraph() = default;
    explicit BiedgedGraph(std::vector<std::string> names, std::vector<std::string> labels = {});

    static constexpr VertexId vertex(SegmentId s, Side side) {
        return 2 * s + (side == Side::End ? 1u : 0u);
    }
    static constexpr SegmentId segment_of(VertexId v) { return v / 2; }
    static constexpr Side side_of(VertexId v) { return (v & 1u) ? Side::End : Side::Start; }
    static constexpr VertexId opposite(VertexId v) { return v ^ 1u; }

    std::size_t segment_count() const { return names_.size(); }
    std::size_t vertex_count() const { return 2 * names_.size() + (has_dummy_root() ? 1 : 0); }
    std::size_t edge_count() const { return edges_.size(); }
    /// Black plus non-dummy grey edges.
    std::size_t real_edge_count() const { return edges_.size() - dummy_edges_; }
    std::size_t grey_edge_count() const { return edges_.size() - names_.size() - dummy_edges_; }
    std::size_t dummy_edge_count() const { return dummy_edges_; }

    EdgeId black_edge(SegmentId s) const { return s; }
    EdgeId add_grey_edge(VertexId a, VertexId b);

    bool has_dummy_root() const { return dummy_root_ != kNone; }
    VertexId dummy_root() const { return dummy_root_; }
    VertexId add_dummy_root();
    EdgeId add_dummy_edge(VertexId tip);

    bool is_dummy_vertex(VertexId v) const { return v == dummy_root_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    std::span<const Edge> edges() const { return edges_; }

    VertexRef ref(VertexId v) const;
    VertexId id(const VertexRef& r) const;

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(SegmentId s) const { return names_[s]; }
    const std::string& label(SegmentId s) const { return labels_[s]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Original oriented segments ("a+,b-") a compacted segment was built
    /// from; empty when the graph was never compacted.
    const std::string& provenance(SegmentId s) const;
    void set_provenance(std::vector<std::string> provenance) { provenance_ = std::move(provenance); }

    /// Number of grey edge ends (dummy included) at each vertex; a
    /// self-loop counts twice.
    std::vector<std::uint32_t> grey_degrees() const;
    Adjacency adjacency() const;

    bool operator==(const BiedgedGraph&) const;

private:
    std::vector<std::string> names_;
    std::vector<std::string> labels_;
    std::vector<std::string> provenance_;
    std::vector<Edge> edges_;
    VertexId dummy_root_ = kNone;
    std::size_t dummy_edges_ = 0;
};

/// One grey edge per link, joining the side a link leaves through to the
/// side it enters through.
BiedgedGraph from_gfa(const GfaDocument& doc);

/// Connected piece of a graph, re-indexed locally. Local segment i is global
/// segment `segments[i]`; names and labels are carried along.
struct Component {
    std::size_t id = 0;
    BiedgedGraph graph;
    std::vector<SegmentId> segments;
    std::vector<VertexRef> tips;
    std::optional<VertexId> root;
};

std::vector<Component> connected_components(const BiedgedGraph& g);

/// Segment sides without any grey edge, in vertex order. The dummy root is
/// never a tip.
std::vector<VertexRef> find_tips(const BiedgedGraph& g);
std::vector<VertexRef> find_tips(const Component& c);

/// Links every tip to a fresh dummy root with a dummy grey edge and roots the
/// component there. Tipless components are rooted at (segment 0, Start).
Component attach_dummy_root(Component c);

/// Merges maximal linear chains of segments (a grey edge that is the only
/// grey edge at both of its ends, between two different segments) into
/// single segments. Idempotent.
BiedgedGraph compact(const BiedgedGraph& g);

/// Reverse complement over ACGTN (case kept); "*" stays "*".
std::string reverse_complement(std::string_view seq);

}  // namespace povu
