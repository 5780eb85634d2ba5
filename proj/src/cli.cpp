#include "povu/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>

#include "povu/deconstruct.hpp"
#include "povu/oracle.hpp"

namespace povu {

namespace {

void print_summary(const RunSummary& s, int verbosity, std::ostream& out, std::ostream& err) {
    out << "components\t" << s.components << '\n'
        << "segments\t" << s.segments << '\n'
        << "vertices\t" << s.vertices << '\n'
        << "edges\t" << s.edges << '\n'
        << "tips\t" << s.tips << '\n'
        << "flubbles\t" << s.flubbles << '\n'
        << "hairpins\t" << s.hairpins << '\n'
        << "total_ms\t" << std::fixed << std::setprecision(1) << s.times.total_ms << '\n';
    if (verbosity > 0) {
        const PhaseTimes& t = s.times;
        err << std::fixed << std::setprecision(1) << "[povu] workers " << s.workers << '\n'
            << "[povu] parse " << t.parse_ms << " ms\n"
            << "[povu] build " << t.build_ms << " ms\n"
            << "[povu] compact " << t.compact_ms << " ms\n"
            << "[povu] analyze " << t.analyze_ms << " ms (dfs " << t.dfs_ms << ", classes " << t.classes_ms
            << ", flubbles " << t.flubbles_ms << ", hairpins " << t.hairpins_ms << ")\n"
            << "[povu] write " << t.write_ms << " ms\n"
            << "[povu] wrote " << s.flb_path.string();
        if (!s.hairpin_path.empty()) {
            err << " and " << s.hairpin_path.string();
        }
        err << '\n';
    }
}

int write_generated(const GfaDocument& doc, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        write_gfa(doc, out);
        return kExitOk;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot write " + path);
    }
    write_gfa(doc, file);
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flubble and hairpin decomposition of GFA variation graphs", "povu"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string chain_mode = "consecutive";
    auto* dec = app.add_subcommand("deconstruct", "Write the flubble forest and hairpin report of a GFA file");
    dec->add_option("-i,--input", cfg.input_path, "GFA v1 input")->required();
    dec->add_option("-o,--output", cfg.output_dir, "Output directory")->required();
    dec->add_flag("!--no-hairpins", cfg.emit_hairpins, "Skip hairpin detection");
    dec->add_flag("--compact", cfg.do_compact, "Merge linear chains before analysis");
    dec->add_option("--chain-mode", chain_mode, "Flubbles per cycle-equivalence class")
        ->check(CLI::IsMember({"consecutive", "per-class"}));
    dec->add_option("--workers", cfg.workers, "Worker threads (default: all cores)")
        ->check(CLI::PositiveNumber);
    dec->add_flag("-v,--verbose", cfg.verbosity, "Report phase timings on stderr");

    std::string kind;
    std::size_t n = 1000;
    std::uint64_t seed = 0;
    std::size_t depth = 2;
    std::size_t width = 2;
    std::string gen_out;
    auto* gen = app.add_subcommand("gen", "Generate synthetic GFA");
    gen->group("");  // hidden
    gen->add_option("kind", kind, "bubble-chain | random | nested")
        ->required()
        ->check(CLI::IsMember({"bubble-chain", "random", "nested"}));
    gen->add_option("-n,--segments", n, "Approximate segment count");
    gen->add_option("--seed", seed);
    gen->add_option("--depth", depth)->check(CLI::PositiveNumber);
    gen->add_option("--width", width)->check(CLI::PositiveNumber);
    gen->add_option("-o,--output", gen_out, "Output file (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "povu: " << e.what() << '\n';
        return kExitInput;
    }

    try {
        if (*dec) {
            cfg.chain_mode = chain_mode == "per-class" ? ChainMode::PerClass : ChainMode::ConsecutivePairs;
            const RunSummary s = deconstruct(cfg);
            print_summary(s, cfg.verbosity, out, err);
            return kExitOk;
        }
        if (kind == "bubble-chain") {
            return write_generated(oracle::bubble_chain_document(n, seed), gen_out, out);
        }
        if (kind == "random") {
            oracle::GeneratorSpec spec;
            spec.seed = seed;
            spec.n_segments = n;
            return write_generated(oracle::random_biedged_graph(spec), gen_out, out);
        }
        return write_generated(oracle::nested_bubble_generator(depth, width, seed).doc, gen_out, out);
    } catch (const GfaError& e) {
        err << "povu: " << cfg.input_path.string() << ": " << e.what() << '\n';
        return kExitInput;
    } catch (const IoError& e) {
        err << "povu: " << e.what() << '\n';
        return kExitIo;
    } catch (const SelfCheckFailure& e) {
        err << "povu: internal error: " << e.what() << '\n';
        return kExitSelfCheck;
    }
}

}  // namespace povu
