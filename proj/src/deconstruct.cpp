#include "povu/deconstruct.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace povu {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::size_t resolve_workers(std::size_t requested) {
    if (requested > 0) {
        return requested;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

ComponentResult analyze_component(Component c, ChainMode mode, bool find_hairpins) {
    ComponentResult r;
    r.id = c.id;
    r.tips = c.tips.size();
    c = attach_dummy_root(std::move(c));
    const BiedgedGraph& g = c.graph;
    r.names = g.names();
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();

    auto t0 = Clock::now();
    const SpanningTree t = dfs_tree(c);
    r.dfs_ms = ms_since(t0);

    t0 = Clock::now();
    const ClassAssignment ca = cycle_equivalence(t);
    r.classes_ms = ms_since(t0);

    t0 = Clock::now();
    r.forest = build_flubble_tree(enumerate_flubbles(t, ca, mode), t);
    r.flubbles_ms = ms_since(t0);

    if (find_hairpins) {
        t0 = Clock::now();
        r.hairpins = detect_hairpins(t, ca);
        r.hairpins_ms = ms_since(t0);
    }
    return r;
}

std::vector<ComponentResult> analyze_graph(const BiedgedGraph& g, ChainMode mode, bool find_hairpins,
                                           std::size_t workers) {
    std::vector<Component> comps = connected_components(g);
    std::vector<ComponentResult> results(comps.size());
    workers = std::min(resolve_workers(workers), std::max<std::size_t>(comps.size(), 1));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (std::size_t i = next++; i < comps.size(); i = next++) {
            try {
                results[i] = analyze_component(std::move(comps[i]), mode, find_hairpins);
            } catch (...) {
                std::lock_guard lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = comps.size();
            }
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return results;
}

namespace {

void write_block(std::ostream& out, std::size_t c, const FlubbleForest& forest,
                 const std::vector<std::string>& names) {
    out << "C " << c << ' ' << forest.size() << '\n';
    std::map<std::uint32_t, std::uint32_t> tag;
    for (const Flubble& f : forest.flubbles) {
        const auto k = tag.emplace(f.class_id, static_cast<std::uint32_t>(tag.size())).first->second;
        out << "F " << f.id << ' ' << names[f.entry] << ' ' << names[f.exit] << ' ';
        if (f.parent) {
            out << *f.parent;
        } else {
            out << '.';
        }
        out << " c" << k << '\n';
    }
}

constexpr const char* kFlbHeader = "# povu-flubble-forest v1\n";

}  // namespace

void write_forest(std::span<const FlubbleForest> forests, std::span<const std::vector<std::string>> names,
                  std::ostream& out) {
    out << kFlbHeader;
    for (std::size_t c = 0; c < forests.size(); ++c) {
        write_block(out, c, forests[c], names[c]);
    }
    if (!out) {
        throw IoError("failed writing flubble forest");
    }
}

void write_forest(std::span<const ComponentResult> results, std::ostream& out) {
    out << kFlbHeader;
    for (const ComponentResult& r : results) {
        write_block(out, r.id, r.forest, r.names);
    }
    if (!out) {
        throw IoError("failed writing flubble forest");
    }
}

std::vector<std::string> hairpin_lines(std::span<const ComponentResult> results) {
    std::vector<std::string> lines;
    for (const ComponentResult& r : results) {
        auto part = hairpin_report(r.hairpins, r.names);
        lines.insert(lines.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

RunSummary deconstruct(const RunConfig& cfg) {
    const auto start = Clock::now();
    RunSummary s;
    s.workers = resolve_workers(cfg.workers);

    auto t0 = Clock::now();
    std::ifstream in(cfg.input_path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open input " + cfg.input_path.string());
    }
    const GfaDocument doc = parse_gfa(in);
    s.times.parse_ms = ms_since(t0);

    t0 = Clock::now();
    BiedgedGraph g = from_gfa(doc);
    s.times.build_ms = ms_since(t0);
    if (cfg.do_compact) {
        t0 = Clock::now();
        g = compact(g);
        s.times.compact_ms = ms_since(t0);
    }
    s.segments = g.segment_count();

    t0 = Clock::now();
    const std::vector<ComponentResult> results = analyze_graph(g, cfg.chain_mode, cfg.emit_hairpins, s.workers);
    s.times.analyze_ms = ms_since(t0);

    s.components = results.size();
    for (const ComponentResult& r : results) {
        s.vertices += r.vertices;
        s.edges += r.edges;
        s.tips += r.tips;
        s.flubbles += r.forest.size();
        s.hairpins += r.hairpins.size();
        s.times.dfs_ms += r.dfs_ms;
        s.times.classes_ms += r.classes_ms;
        s.times.flubbles_ms += r.flubbles_ms;
        s.times.hairpins_ms += r.hairpins_ms;
    }
    // Same bound as flubble_count_bound_check, without gathering the forests.
    if (s.flubbles > g.real_edge_count()) {
        throw SelfCheckFailure("flubble count " + std::to_string(s.flubbles) + " exceeds edge count " +
                               std::to_string(g.real_edge_count()));
    }

    t0 = Clock::now();
    std::error_code ec;
    std::filesystem::create_directories(cfg.output_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + cfg.output_dir.string() + ": " + ec.message());
    }
    const std::string stem = cfg.input_path.stem().string();
    s.flb_path = cfg.output_dir / (stem + ".flb");
    {
        std::ofstream out(s.flb_path, std::ios::binary);
        if (!out) {
            throw IoError("cannot write " + s.flb_path.string());
        }
        write_forest(results, out);
    }
    if (cfg.emit_hairpins) {
        s.hairpin_path = cfg.output_dir / (stem + ".hairpins.txt");
        std::ofstream out(s.hairpin_path, std::ios::binary);
        if (!out) {
            throw IoError("cannot write " + s.hairpin_path.string());
        }
        for (const std::string& line : hairpin_lines(results)) {
            out << line << '\n';
        }
        if (!out) {
            throw IoError("failed writing " + s.hairpin_path.string());
        }
    }
    s.times.write_ms = ms_since(t0);
    s.times.total_ms = ms_since(start);
    return s;
}

}  // namespace povu
