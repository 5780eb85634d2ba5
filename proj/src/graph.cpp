#include "povu/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace povu {

BiedgedGraph::BiedgedGraph(std::vector<std::string> names, std::vector<std::string> labels)
    : names_(std::move(names)), labels_(std::move(labels)) {
    if (labels_.empty()) {
        labels_.assign(names_.size(), "*");
    }
    if (labels_.size() != names_.size()) {
        throw std::invalid_argument("BiedgedGraph: names and labels differ in length");
    }
    edges_.reserve(names_.size());
    for (SegmentId s = 0; s < names_.size(); ++s) {
        edges_.push_back({vertex(s, Side::Start), vertex(s, Side::End), EdgeColor::Black, false});
    }
}

EdgeId BiedgedGraph::add_grey_edge(VertexId a, VertexId b) {
    edges_.push_back({a, b, EdgeColor::Grey, false});
    return static_cast<EdgeId>(edges_.size() - 1);
}

VertexId BiedgedGraph::add_dummy_root() {
    if (has_dummy_root()) {
        throw std::logic_error("dummy root already present");
    }
    dummy_root_ = static_cast<VertexId>(2 * names_.size());
    return dummy_root_;
}

EdgeId BiedgedGraph::add_dummy_edge(VertexId tip) {
    if (!has_dummy_root()) {
        throw std::logic_error("add_dummy_edge without a dummy root");
    }
    edges_.push_back({dummy_root_, tip, EdgeColor::Grey, true});
    ++dummy_edges_;
    return static_cast<EdgeId>(edges_.size() - 1);
}

VertexRef BiedgedGraph::ref(VertexId v) const {
    if (v == dummy_root_) {
        return VertexRef::dummy_root();
    }
    return VertexRef::side_of(segment_of(v), side_of(v));
}

VertexId BiedgedGraph::id(const VertexRef& r) const {
    if (r.kind == VertexRef::Kind::DummyRoot) {
        if (!has_dummy_root()) {
            throw std::out_of_range("graph has no dummy root");
        }
        return dummy_root_;
    }
    return vertex(r.segment, r.side);
}

const std::string& BiedgedGraph::provenance(SegmentId s) const {
    static const std::string empty;
    return provenance_.empty() ? empty : provenance_[s];
}

std::vector<std::uint32_t> BiedgedGraph::grey_degrees() const {
    std::vector<std::uint32_t> deg(vertex_count(), 0);
    for (const Edge& e : edges_) {
        if (e.color == EdgeColor::Grey) {
            ++deg[e.u];
            ++deg[e.v];
        }
    }
    return deg;
}

Adjacency BiedgedGraph::adjacency() const {
    const std::size_t nv = vertex_count();
    Adjacency adj;
    adj.offsets.assign(nv + 1, 0);
    for (const Edge& e : edges_) {
        ++adj.offsets[e.u + 1];
        if (e.v != e.u) {
            ++adj.offsets[e.v + 1];
        }
    }
    std::partial_sum(adj.offsets.begin(), adj.offsets.end(), adj.offsets.begin());
    adj.edges.resize(adj.offsets.back());
    std::vector<std::uint32_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const Edge& e = edges_[id];
        adj.edges[fill[e.u]++] = id;
        if (e.v != e.u) {
            adj.edges[fill[e.v]++] = id;
        }
    }

    auto key = [&](VertexId v, EdgeId id) {
        const Edge& e = edges_[id];
        const VertexId w = e.other(v);
        const std::uint64_t seg = (w == dummy_root_) ? 0xffffffffull : segment_of(w);
        const std::uint64_t side = (w != dummy_root_ && side_of(w) == Side::End) ? 1 : 0;
        return (std::uint64_t(e.color == EdgeColor::Grey) << 63) | (std::uint64_t(e.dummy) << 62) |
               (seg << 1) | side;
    };
    std::vector<std::pair<std::uint64_t, EdgeId>> scratch;
    for (VertexId v = 0; v < nv; ++v) {
        const auto begin = adj.offsets[v];
        const auto end = adj.offsets[v + 1];
        if (end - begin < 2) {
            continue;
        }
        scratch.clear();
        for (auto i = begin; i < end; ++i) {
            scratch.emplace_back(key(v, adj.edges[i]), adj.edges[i]);
        }
        std::sort(scratch.begin(), scratch.end());
        for (auto i = begin; i < end; ++i) {
            adj.edges[i] = scratch[i - begin].second;
        }
    }
    return adj;
}

bool BiedgedGraph::operator==(const BiedgedGraph& o) const {
    if (names_ != o.names_ || labels_ != o.labels_ || dummy_root_ != o.dummy_root_ ||
        edges_.size() != o.edges_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& a = edges_[i];
        const Edge& b = o.edges_[i];
        if (a.u != b.u || a.v != b.v || a.color != b.color || a.dummy != b.dummy) {
            return false;
        }
    }
    return true;
}

BiedgedGraph from_gfa(const GfaDocument& doc) {
    std::vector<std::string> names;
    std::vector<std::string> labels;
    names.reserve(doc.segments.size());
    labels.reserve(doc.segments.size());
    std::unordered_map<std::string_view, SegmentId> index;
    index.reserve(doc.segments.size());
    for (const GfaSegment& s : doc.segments) {
        names.push_back(s.name);
        labels.push_back(s.sequence);
    }
    for (SegmentId i = 0; i < names.size(); ++i) {
        index.emplace(names[i], i);
    }
    BiedgedGraph g(std::move(names), std::move(labels));
    for (const GfaLink& l : doc.links) {
        const SegmentId a = index.at(l.from_name);
        const SegmentId b = index.at(l.to_name);
        // Leaving a '+' segment happens through its End, entering it through its Start.
        const Side out = l.from_orient == Orientation::Forward ? Side::End : Side::Start;
        const Side in = l.to_orient == Orientation::Forward ? Side::Start : Side::End;
        g.add_grey_edge(BiedgedGraph::vertex(a, out), BiedgedGraph::vertex(b, in));
    }
    return g;
}

namespace {

struct DisjointSets {
    std::vector<std::uint32_t> parent;

    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }

    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            // Keep the smaller id as representative so segment order is preserved.
            if (b < a) {
                std::swap(a, b);
            }
            parent[b] = a;
        }
    }
};

}  // namespace

std::vector<VertexRef> find_tips(const BiedgedGraph& g) {
    std::vector<VertexRef> tips;
    const auto deg = g.grey_degrees();
    for (VertexId v = 0; v < 2 * g.segment_count(); ++v) {
        if (deg[v] == 0) {
            tips.push_back(g.ref(v));
        }
    }
    return tips;
}

std::vector<VertexRef> find_tips(const Component& c) { return find_tips(c.graph); }

std::vector<Component> connected_components(const BiedgedGraph& g) {
    const std::size_t n = g.segment_count();
    std::vector<Component> out;
    if (n == 0) {
        return out;
    }
    DisjointSets ds(2 * n);
    for (const Edge& e : g.edges()) {
        if (!g.is_dummy_vertex(e.u) && !g.is_dummy_vertex(e.v)) {
            ds.unite(e.u, e.v);
        }
    }

    // Components numbered by their smallest segment.
    std::vector<std::uint32_t> comp_of_rep(2 * n, kNone);
    std::vector<std::uint32_t> comp(n);
    std::vector<SegmentId> local(n);
    std::vector<std::size_t> seg_count;
    for (SegmentId s = 0; s < n; ++s) {
        const auto rep = ds.find(BiedgedGraph::vertex(s, Side::Start));
        if (comp_of_rep[rep] == kNone) {
            comp_of_rep[rep] = static_cast<std::uint32_t>(seg_count.size());
            seg_count.push_back(0);
        }
        comp[s] = comp_of_rep[rep];
        local[s] = static_cast<SegmentId>(seg_count[comp[s]]++);
    }

    std::vector<std::vector<std::string>> names(seg_count.size());
    std::vector<std::vector<std::string>> labels(seg_count.size());
    out.resize(seg_count.size());
    for (std::size_t c = 0; c < seg_count.size(); ++c) {
        out[c].id = c;
        out[c].segments.reserve(seg_count[c]);
        names[c].reserve(seg_count[c]);
        labels[c].reserve(seg_count[c]);
    }
    for (SegmentId s = 0; s < n; ++s) {
        out[comp[s]].segments.push_back(s);
        names[comp[s]].push_back(g.name(s));
        labels[comp[s]].push_back(g.label(s));
    }
    for (std::size_t c = 0; c < out.size(); ++c) {
        out[c].graph = BiedgedGraph(std::move(names[c]), std::move(labels[c]));
    }
    auto local_vertex = [&](VertexId v) {
        const SegmentId s = BiedgedGraph::segment_of(v);
        return BiedgedGraph::vertex(local[s], BiedgedGraph::side_of(v));
    };
    for (EdgeId id = static_cast<EdgeId>(n); id < g.edge_count(); ++id) {
        const Edge& e = g.edge(id);
        if (e.dummy) {
            continue;
        }
        const auto c = comp[BiedgedGraph::segment_of(e.u)];
        out[c].graph.add_grey_edge(local_vertex(e.u), local_vertex(e.v));
    }
    for (Component& c : out) {
        c.tips = find_tips(c.graph);
    }
    return out;
}

Component attach_dummy_root(Component c) {
    if (c.root) {
        throw std::logic_error("component is already rooted");
    }
    c.tips = find_tips(c.graph);
    if (c.tips.empty()) {
        c.root = BiedgedGraph::vertex(0, Side::Start);
        return c;
    }
    const VertexId root = c.graph.add_dummy_root();
    for (const VertexRef& tip : c.tips) {
        c.graph.add_dummy_edge(c.graph.id(tip));
    }
    c.root = root;
    return c;
}

std::string reverse_complement(std::string_view seq) {
    if (seq == "*") {
        return "*";
    }
    std::string out(seq.rbegin(), seq.rend());
    for (char& ch : out) {
        switch (ch) {
        case 'A': ch = 'T'; break;
        case 'T': ch = 'A'; break;
        case 'C': ch = 'G'; break;
        case 'G': ch = 'C'; break;
        case 'a': ch = 't'; break;
        case 't': ch = 'a'; break;
        case 'c': ch = 'g'; break;
        case 'g': ch = 'c'; break;
        default: break;
        }
    }
    return out;
}

}  // namespace povu
