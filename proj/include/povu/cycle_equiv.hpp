#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "povu/spanning.hpp"

namespace povu {

/// Cycle-equivalence class per edge of a spanning tree's graph. Every edge,
/// dummy ones included, gets a class; only non-dummy edges are meant to be
/// reported. Bridges (tree edges no cycle passes through) get singleton
/// classes.
struct ClassAssignment {
    std::vector<std::uint32_t> class_of;
    std::vector<bool> bridge;
    std::uint32_t n_classes = 0;
    /// Brackets pushed while classifying, capping ones included.
    std::size_t bracket_pushes = 0;
    std::size_t capping_brackets = 0;
};

class MalformedTree : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Linear-time bracket-list classification. Two edges share a class iff
/// every cycle through one passes through the other.
ClassAssignment cycle_equivalence(const SpanningTree& t);

class InputTooLarge : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kBracketSetEdgeLimit = 200;

/// Direct computation of every tree edge's bracket set (the back-edges that
/// connect its subtree to a proper ancestor), self-loops excluded. Quadratic;
/// throws InputTooLarge above kBracketSetEdgeLimit edges.
std::map<EdgeId, std::vector<EdgeId>> bracket_sets(const SpanningTree& t);

}  // namespace povu
