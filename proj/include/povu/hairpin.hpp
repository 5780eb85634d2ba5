#pragma once

#include <span>
#include <string>
#include <vector>

#include "povu/cycle_equiv.hpp"

namespace povu {

/// A chain of bridges (the stem) leading down into a cyclic subgraph (the
/// loop). `outer` is the stem's topmost black edge; `inner` its deepest one,
/// or the first black edge inside the loop when the stem has a single black
/// edge.
struct Hairpin {
    SegmentId outer = 0;
    SegmentId inner = 0;
    std::vector<EdgeId> stem_edges;  // top to bottom
    VertexRef loop_root;
};

struct HairpinScan {
    std::vector<Hairpin> hairpins;
    /// Bridge chains over an acyclic subtree (dead ends), or without any
    /// real black edge.
    std::size_t suppressed_chains = 0;
};

/// cyclic[v] is true iff some back-edge (self-loops included) has both ends
/// in v's subtree.
std::vector<bool> mark_cyclic_subtrees(const SpanningTree& t);

HairpinScan scan_hairpins(const SpanningTree& t, const ClassAssignment& ca);
std::vector<Hairpin> detect_hairpins(const SpanningTree& t, const ClassAssignment& ca);

/// "HAIRPIN <outer> <inner>" per hairpin, sorted by name.
std::vector<std::string> hairpin_report(std::span<const Hairpin> hairpins,
                                        std::span<const std::string> names);

}  // namespace povu
