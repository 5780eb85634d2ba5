#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "povu/flubble.hpp"
#include "povu/hairpin.hpp"

namespace povu {

struct RunConfig {
    std::filesystem::path input_path;
    std::filesystem::path output_dir;
    bool emit_hairpins = true;
    bool do_compact = false;
    ChainMode chain_mode = ChainMode::ConsecutivePairs;
    /// 0 means one per hardware thread.
    std::size_t workers = 0;
    int verbosity = 0;
};

struct PhaseTimes {
    double parse_ms = 0;
    double build_ms = 0;
    double compact_ms = 0;
    double components_ms = 0;
    /// Wall time of the parallel per-component section.
    double analyze_ms = 0;
    /// Per-component stages, summed over components (CPU time, not wall).
    double dfs_ms = 0;
    double classes_ms = 0;
    double flubbles_ms = 0;
    double hairpins_ms = 0;
    double write_ms = 0;
    double total_ms = 0;
};

struct RunSummary {
    std::size_t components = 0;
    std::size_t segments = 0;
    std::size_t vertices = 0;  // dummy roots included
    std::size_t edges = 0;     // dummy edges included
    std::size_t tips = 0;
    std::size_t flubbles = 0;
    std::size_t hairpins = 0;
    std::size_t workers = 1;
    std::filesystem::path flb_path;
    std::filesystem::path hairpin_path;
    PhaseTimes times;
};

/// Raised when the flubble count exceeds the edge count; never expected.
class SelfCheckFailure : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Everything computed for one rooted component.
struct ComponentResult {
    std::size_t id = 0;
    std::vector<std::string> names;  // local segment names
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t tips = 0;
    FlubbleForest forest;
    std::vector<Hairpin> hairpins;
    double dfs_ms = 0, classes_ms = 0, flubbles_ms = 0, hairpins_ms = 0;
};

ComponentResult analyze_component(Component c, ChainMode mode = ChainMode::ConsecutivePairs,
                                  bool find_hairpins = true);

/// Splits g into components and analyzes them on `workers` threads. Results
/// come back in component order whatever the thread count.
std::vector<ComponentResult> analyze_graph(const BiedgedGraph& g, ChainMode mode = ChainMode::ConsecutivePairs,
                                           bool find_hairpins = true, std::size_t workers = 1);

/// FLB text: a header line, then per component "C <id> <n>" followed by
/// "F <id> <entry> <exit> <parent|.> c<k>", class tags numbered per
/// component in order of first use.
void write_forest(std::span<const FlubbleForest> forests, std::span<const std::vector<std::string>> names,
                  std::ostream& out);
void write_forest(std::span<const ComponentResult> results, std::ostream& out);

/// Sorted "HAIRPIN <outer> <inner>" lines over all components.
std::vector<std::string> hairpin_lines(std::span<const ComponentResult> results);

/// The full pipeline: reads cfg.input_path, writes <stem>.flb and
/// <stem>.hairpins.txt into cfg.output_dir. Throws GfaError on bad input
/// (before any file is written), IoError on file problems and
/// SelfCheckFailure if the flubble bound is broken.
RunSummary deconstruct(const RunConfig& cfg);

}  // namespace povu
