#include <doctest.h>

#include <set>

#include "povu/cycle_equiv.hpp"
#include "support.hpp"

using namespace povu;

TEST_CASE("single cycle is one class") {
    const auto a = test::analyze("S a A\nS b C\nS c G\nL a + b + 0M\nL b + c + 0M\nL c + a + 0M\n");
    const BiedgedGraph& g = a->graph();
    REQUIRE(g.edge_count() == 6);
    std::set<std::uint32_t> classes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        classes.insert(a->classes.class_of[e]);
        CHECK_FALSE(a->classes.bridge[e]);
    }
    CHECK(classes.size() == 1);
}

TEST_CASE("Example A classes") {
    const auto a = test::analyze(test::kExampleA);
    const auto& cls = a->classes.class_of;
    CHECK(cls[a->black("s")] == cls[a->black("t")]);
    CHECK(cls[a->black("a")] != cls[a->black("b")]);
    CHECK(cls[a->black("a")] != cls[a->black("s")]);
    CHECK(cls[a->black("b")] != cls[a->black("s")]);
    // Each branch shares its class with its two flanking grey edges.
    const BiedgedGraph& g = a->graph();
    for (const char* branch : {"a", "b"}) {
        std::size_t greys = 0;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            if (g.edge(e).color == EdgeColor::Grey && cls[e] == cls[a->black(branch)]) {
                ++greys;
            }
        }
        CHECK(greys == 2);
    }
    CHECK(test::check_classes(*a, oracle::enumerate_simple_cycles(a->graph())).empty());
}

TEST_CASE("tree input has only bridges") {
    const BiedgedGraph g = from_gfa(test::gfa("S a A\nS b C\nS c G\nL a + b + 0M\nL b + c + 0M\n"));
    const SpanningTree t = dfs_tree(g, 0);
    const ClassAssignment ca = cycle_equivalence(t);
    std::set<std::uint32_t> classes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        CHECK(ca.bridge[e]);
        classes.insert(ca.class_of[e]);
    }
    CHECK(classes.size() == g.edge_count());
    for (const auto& [e, brackets] : bracket_sets(t)) {
        CHECK(brackets.empty());
    }
}

TEST_CASE("single cycle bracket sets are identical") {
    const auto a = test::analyze("S a A\nS b C\nL a + b + 0M\nL b + a + 0M\n");
    const auto sets = bracket_sets(a->t());
    REQUIRE(sets.size() == 3);
    for (const auto& [e, brackets] : sets) {
        CHECK(brackets.size() == 1);
        CHECK(brackets == sets.begin()->second);
    }
}

TEST_CASE("Example C stem is a bridge") {
    const auto a = test::analyze(test::kExampleC);
    CHECK(a->classes.bridge[a->black("a")]);
    CHECK_FALSE(a->classes.bridge[a->black("b")]);
    CHECK(test::check_classes(*a, oracle::enumerate_simple_cycles(a->graph())).empty());
}

TEST_CASE("a grey self-loop is a class of its own") {
    const auto a = test::analyze(test::kExampleCSelfLoop);
    const BiedgedGraph& g = a->graph();
    CHECK(a->classes.bridge[a->black("a")]);
    std::size_t loops = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.edge(e).is_self_loop()) {
            ++loops;
            for (EdgeId f = 0; f < g.edge_count(); ++f) {
                CHECK((f == e) == (a->classes.class_of[f] == a->classes.class_of[e]));
            }
        }
    }
    CHECK(loops == 1);
    CHECK(test::check_classes(*a, oracle::enumerate_simple_cycles(g)).empty());
}

TEST_CASE("two cycles joined by a bridge") {
    const auto a = test::analyze("S a A\nS b C\nS c G\nL a + a - 0M\nL a - b + 0M\nL b + c + 0M\nL c + c - 0M\n");
    const auto cycles = oracle::enumerate_simple_cycles(a->graph());
    CHECK(test::check_classes(*a, cycles).empty());
    CHECK(a->classes.bridge[a->black("b")]);
}

TEST_CASE("bracket bookkeeping") {
    const auto a = test::analyze(test::kExampleB);
    CHECK(a->classes.bracket_pushes >= a->t().back_edges().size());
    CHECK(a->classes.capping_brackets <= a->classes.bracket_pushes);
    CHECK(a->classes.n_classes > 0);
}

TEST_CASE("bracket sets are size-capped") {
    const GfaDocument doc = oracle::bubble_chain_document(200);
    const auto a = test::analyze(doc);
    CHECK_THROWS_AS(bracket_sets(a->t()), InputTooLarge);
}

TEST_CASE("oracle agreement on random graphs") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        CAPTURE(i);
        const auto a = test::analyze(oracle::random_biedged_graph(test::corpus_spec(i)));
        const auto cycles = oracle::enumerate_simple_cycles(a->graph());
        REQUIRE(test::check_classes(*a, cycles) == "");
        REQUIRE(test::check_bracket_sets(*a) == "");
    }
}

TEST_CASE("oracle agreement on tipless and disconnected-then-split graphs") {
    for (std::uint64_t i = 0; i < 100; ++i) {
        CAPTURE(i);
        oracle::GeneratorSpec spec = test::corpus_spec(i);
        spec.tips = false;
        spec.connected = i % 2 == 0;
        for (Component& c : connected_components(from_gfa(oracle::random_biedged_graph(spec)))) {
            const auto a = test::analyze(std::move(c));
            REQUIRE(test::check_classes(*a, oracle::enumerate_simple_cycles(a->graph())) == "");
            REQUIRE(test::check_bracket_sets(*a) == "");
        }
    }
}
