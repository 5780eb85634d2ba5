#pragma once

// Brute-force references and graph generators for testing and benchmarks.
// Everything here is exponential or quadratic on purpose and must stay
// independent of the linear-time code it is used to check.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "povu/gfa.hpp"
#include "povu/graph.hpp"

namespace povu::oracle {

inline constexpr std::size_t kMaxEnumerationEdges = 64;

class InputTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Simple cycles as edge bitmasks (bit i = edge i).
struct CycleSet {
    std::vector<std::uint64_t> cycles;

    std::size_t size() const { return cycles.size(); }
    std::vector<std::vector<EdgeId>> as_edges() const;
};

/// Every simple cycle of g (grey self-loops as one-edge cycles, parallel
/// edges as two-edge cycles). Throws InputTooLarge above 64 edges and
/// CapExceeded past `cap` cycles.
CycleSet enumerate_simple_cycles(const BiedgedGraph& g, std::size_t cap = 1u << 20);

struct EdgePartition {
    /// Edges lying on at least one cycle, grouped by the exact set of cycles
    /// through them. Each class sorted; classes sorted by first edge.
    std::vector<std::vector<EdgeId>> classes;
    /// Edges on no cycle.
    std::vector<EdgeId> acyclic;
};

EdgePartition reference_cycle_classes(const BiedgedGraph& g, std::size_t cap = 1u << 20);
EdgePartition reference_cycle_classes(const BiedgedGraph& g, const CycleSet& cycles);

/// True iff deleting `edges` leaves some part of the graph attached to the
/// rest only through all k of them.
bool is_k_blackedge_disconnectable(const BiedgedGraph& g, std::span<const EdgeId> edges, std::size_t k);

/// Connected components (as vertex labels) of g with `removed` edges deleted.
std::vector<std::uint32_t> components_without(const BiedgedGraph& g, std::span<const EdgeId> removed);

struct GeneratorSpec {
    std::uint64_t seed = 0;
    std::size_t n_segments = 8;
    /// Extra links per segment on top of a random spanning tree of links.
    double link_density = 0.5;
    bool tips = true;
    bool self_loops = true;
    bool parallel_branches = true;
    /// When > 0, a nested bubble of this depth forms the core of the graph.
    std::size_t nesting_depth = 0;
    bool connected = true;
};

GfaDocument random_biedged_graph(const GeneratorSpec& spec);

struct ExpectedFlubble {
    std::string entry;
    std::string exit;
    std::optional<std::size_t> parent;  // index into the same list
};

struct NestedBubbles {
    GfaDocument doc;
    std::vector<ExpectedFlubble> forest;
};

/// Series-parallel construction: a chain of `chain_width` bubbles whose
/// branches are, below the top level, chains of up to `chain_width` bubbles,
/// `depth` levels deep. The seed picks nested widths, shuffles declaration
/// order and reverses segments.
NestedBubbles nested_bubble_generator(std::size_t depth, std::size_t chain_width, std::uint64_t seed);

/// Linear chain of simple bubbles with about `n_segments` segments.
GfaDocument bubble_chain_document(std::size_t n_segments, std::uint64_t seed = 0);

/// Small graph with loop-ended stems hung off a bubble core, optionally
/// with a dangling tip. Loops are self-loops, short cycles or looped bubbles.
GfaDocument hairpin_corpus_graph(std::uint64_t seed);

}  // namespace povu::oracle
