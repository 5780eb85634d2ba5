#include "povu/cycle_equiv.hpp"

#include <algorithm>

namespace povu {

namespace {

constexpr std::uint32_t kInf = kNone;

struct Bracket {
    EdgeId edge = kNone;  // kNone for capping brackets
    std::uint32_t prev = kNone;
    std::uint32_t next = kNone;
    std::uint32_t recent_size = kNone;
    std::uint32_t recent_class = kNone;
    std::uint32_t next_cap = kNone;  // intrusive list of caps ending at one vertex
};

// Doubly-linked bracket lists over a shared node pool; `head` is the top.
struct BracketList {
    std::uint32_t head = kNone;
    std::uint32_t tail = kNone;
    std::uint32_t size = 0;
};

class BracketPool {
public:
    explicit BracketPool(std::size_t reserve) { nodes_.reserve(reserve); }

    std::uint32_t make(EdgeId edge) {
        nodes_.push_back({});
        nodes_.back().edge = edge;
        return static_cast<std::uint32_t>(nodes_.size() - 1);
    }

    Bracket& operator[](std::uint32_t i) { return nodes_[i]; }

    void push(BracketList& l, std::uint32_t i) {
        Bracket& b = nodes_[i];
        b.prev = kNone;
        b.next = l.head;
        if (l.head != kNone) {
            nodes_[l.head].prev = i;
        } else {
            l.tail = i;
        }
        l.head = i;
        ++l.size;
    }

    void erase(BracketList& l, std::uint32_t i) {
        Bracket& b = nodes_[i];
        if (b.prev != kNone) {
            nodes_[b.prev].next = b.next;
        } else {
            l.head = b.next;
        }
        if (b.next != kNone) {
            nodes_[b.next].prev = b.prev;
        } else {
            l.tail = b.prev;
        }
        b.prev = b.next = kNone;
        --l.size;
    }

    // Appends `other` below `l`, leaving `other` empty.
    void concat(BracketList& l, BracketList& other) {
        if (other.size == 0) {
            return;
        }
        if (l.size == 0) {
            l = other;
        } else {
            nodes_[l.tail].next = other.head;
            nodes_[other.head].prev = l.tail;
            l.tail = other.tail;
            l.size += other.size;
        }
        other = {};
    }

private:
    std::vector<Bracket> nodes_;
};

}  // namespace

ClassAssignment cycle_equivalence(const SpanningTree& t) {
    const BiedgedGraph& g = t.graph();
    const std::size_t nv = t.vertex_count();
    const std::size_t ne = g.edge_count();

    ClassAssignment ca;
    ca.class_of.assign(ne, kNone);
    ca.bridge.assign(ne, false);
    auto mint = [&ca] { return ca.n_classes++; };

    BracketPool pool(t.back_edges().size() + nv / 4 + 1);
    std::vector<std::uint32_t> node_of(ne, kNone);
    std::vector<BracketList> blist(nv);
    std::vector<std::uint32_t> hi(nv, kInf);
    std::vector<std::uint32_t> cap_head(nv, kNone);

    for (std::uint32_t dn = static_cast<std::uint32_t>(nv); dn-- > 0;) {
        const VertexId n = t.vertex_at(dn);

        std::uint32_t hi0 = kInf;
        for (EdgeId b : t.back_edges_up(n)) {
            hi0 = std::min(hi0, t.dfsnum(t.upper(b)));
        }
        std::uint32_t hi1 = kInf;
        std::uint32_t hi2 = kInf;
        for (VertexId c : t.children(n)) {
            if (hi[c] < hi1) {
                hi2 = hi1;
                hi1 = hi[c];
            } else if (hi[c] < hi2) {
                hi2 = hi[c];
            }
        }
        hi[n] = std::min(hi0, hi1);

        BracketList& list = blist[n];
        for (VertexId c : t.children(n)) {
            pool.concat(list, blist[c]);
        }
        for (std::uint32_t cap = cap_head[n]; cap != kNone; cap = pool[cap].next_cap) {
            pool.erase(list, cap);
        }
        for (EdgeId b : t.back_edges_down(n)) {
            pool.erase(list, node_of[b]);
            if (ca.class_of[b] == kNone) {
                ca.class_of[b] = mint();
            }
        }
        for (EdgeId b : t.back_edges_up(n)) {
            node_of[b] = pool.make(b);
            pool.push(list, node_of[b]);
            ++ca.bracket_pushes;
        }
        // Children whose brackets reach past n but not as far as the highest
        // one: cap them so edges above n are told apart from edges below.
        if (hi2 < hi0 && hi2 < dn) {
            const std::uint32_t cap = pool.make(kNone);
            const VertexId target = t.vertex_at(hi2);
            pool[cap].next_cap = cap_head[target];
            cap_head[target] = cap;
            pool.push(list, cap);
            ++ca.bracket_pushes;
            ++ca.capping_brackets;
        }
        // A self-loop is a cycle on its own and shares it with nothing.
        for (EdgeId loop : t.self_loops(n)) {
            ca.class_of[loop] = mint();
        }

        if (n == t.root()) {
            if (list.size != 0) {
                throw MalformedTree("brackets left open at the root");
            }
            continue;
        }
        const EdgeId e = t.parent_edge(n);
        if (list.size == 0) {
            ca.bridge[e] = true;
            ca.class_of[e] = mint();
            continue;
        }
        Bracket& top = pool[list.head];
        if (top.recent_size != list.size) {
            top.recent_size = list.size;
            top.recent_class = mint();
        }
        ca.class_of[e] = top.recent_class;
        if (list.size == 1 && top.edge != kNone) {
            ca.class_of[top.edge] = ca.class_of[e];
        }
    }

    for (std::size_t e = 0; e < ne; ++e) {
        if (ca.class_of[e] == kNone) {
            throw MalformedTree("edge " + std::to_string(e) + " left without a class");
        }
    }
    return ca;
}

std::map<EdgeId, std::vector<EdgeId>> bracket_sets(const SpanningTree& t) {
    if (t.graph().edge_count() > kBracketSetEdgeLimit) {
        throw InputTooLarge("bracket_sets: " + std::to_string(t.graph().edge_count()) +
                            " edges exceeds limit of " + std::to_string(kBracketSetEdgeLimit));
    }
    std::map<EdgeId, std::vector<EdgeId>> sets;
    for (EdgeId e : t.tree_edges()) {
        auto& set = sets[e];
        for (EdgeId b : t.back_edges()) {
            const VertexId d = t.lower(b);
            const VertexId a = t.upper(b);
            if (d == a) {
                continue;
            }
            if (t.is_ancestor(a, t.upper(e)) && t.is_ancestor(t.lower(e), d)) {
                set.push_back(b);
            }
        }
    }
    return sets;
}

}  // namespace povu
