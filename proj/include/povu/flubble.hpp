#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "povu/cycle_equiv.hpp"

namespace povu {

/// Region of the graph cut off by two cycle-equivalent black edges.
/// `entry` is the boundary nearer the DFS root, `exit` the one below it.
struct Flubble {
    std::uint32_t id = 0;
    SegmentId entry = 0;
    SegmentId exit = 0;
    std::uint32_t class_id = 0;
    /// Pre-order/last-descendant interval of this flubble in its forest.
    std::pair<std::uint32_t, std::uint32_t> interval{0, 0};
    std::optional<std::uint32_t> parent;

    bool operator==(const Flubble&) const = default;
};

/// Flubbles of one component in pre-order; ids equal positions.
struct FlubbleForest {
    std::vector<Flubble> flubbles;

    std::vector<std::uint32_t> roots() const;
    std::size_t size() const { return flubbles.size(); }
};

enum class ChainMode {
    /// One flubble per consecutive pair of same-class black edges.
    ConsecutivePairs,
    /// One flubble per class, from its first to its last black edge.
    PerClass,
};

/// Black, non-bridge tree edges grouped by class and ordered along their
/// root-leaf path. Ids and intervals are left for build_flubble_tree.
std::vector<Flubble> enumerate_flubbles(const SpanningTree& t, const ClassAssignment& ca,
                                        ChainMode mode = ChainMode::ConsecutivePairs);

class OverlapViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Nests the flubbles by walking the spanning tree: a flubble's region is
/// open between crossing its entry and its exit and again after returning
/// from below its exit. The parent is the innermost region open when the
/// entry is crossed. Throws OverlapViolation when regions cross.
FlubbleForest build_flubble_tree(std::vector<Flubble> flubbles, const SpanningTree& t);

/// At most one flubble per edge of the graph: black plus real grey edges.
bool flubble_count_bound_check(const BiedgedGraph& g, std::span<const FlubbleForest> forests);
bool flubble_count_bound_check(const BiedgedGraph& g, const FlubbleForest& forest);

}  // namespace povu
