#include <doctest.h>

#include "povu/flubble.hpp"
#include "support.hpp"

using namespace povu;

namespace {

FlubbleForest forest_of(const test::Analysis& a, ChainMode mode = ChainMode::ConsecutivePairs) {
    return build_flubble_tree(enumerate_flubbles(a.t(), a.classes, mode), a.t());
}

test::NamePair boundary(const test::Analysis& a, const Flubble& f) {
    return {a.graph().name(f.entry), a.graph().name(f.exit)};
}

/// Structural invariants of a forest over its tree.
void check_forest(const test::Analysis& a, const FlubbleForest& forest) {
    const SpanningTree& t = a.t();
    const BiedgedGraph& g = a.graph();
    for (std::uint32_t i = 0; i < forest.size(); ++i) {
        const Flubble& f = forest.flubbles[i];
        CHECK(f.id == i);
        CHECK(f.entry != f.exit);
        const EdgeId in = g.black_edge(f.entry);
        const EdgeId out = g.black_edge(f.exit);
        CHECK(t.kind(in) == EdgeKind::Tree);
        CHECK(t.kind(out) == EdgeKind::Tree);
        CHECK(a.classes.class_of[in] == a.classes.class_of[out]);
        // entry's lower end is an ancestor of exit's upper end
        CHECK(t.is_ancestor(t.lower(in), t.upper(out)));
        CHECK(f.interval.first == f.id);
        if (f.parent) {
            const Flubble& p = forest.flubbles[*f.parent];
            CHECK(p.interval.first < f.interval.first);
            CHECK(f.interval.second <= p.interval.second);
        }
    }
    // siblings are disjoint
    for (const Flubble& x : forest.flubbles) {
        for (const Flubble& y : forest.flubbles) {
            if (x.id < y.id && x.parent == y.parent) {
                CHECK(x.interval.second < y.interval.first);
            }
        }
    }
}

}  // namespace

TEST_CASE("Example A has one flubble s..t") {
    const auto a = test::analyze(test::kExampleA);
    const FlubbleForest forest = forest_of(*a);
    REQUIRE(forest.size() == 1);
    CHECK(boundary(*a, forest.flubbles[0]) == test::NamePair{"s", "t"});
    CHECK_FALSE(forest.flubbles[0].parent);
    CHECK(forest.roots() == std::vector<std::uint32_t>{0});
    check_forest(*a, forest);
    CHECK(test::check_flubble_boundaries(*a, forest).empty());
}

TEST_CASE("Example B nests a..e under s..t") {
    const auto a = test::analyze(test::kExampleB);
    const FlubbleForest forest = forest_of(*a);
    REQUIRE(forest.size() == 2);
    CHECK(boundary(*a, forest.flubbles[0]) == test::NamePair{"s", "t"});
    CHECK(boundary(*a, forest.flubbles[1]) == test::NamePair{"a", "e"});
    CHECK(forest.flubbles[1].parent == 0u);
    CHECK(forest.flubbles[0].interval == std::pair<std::uint32_t, std::uint32_t>{0, 1});
    check_forest(*a, forest);
    CHECK(test::check_flubble_boundaries(*a, forest).empty());
}

TEST_CASE("two bubbles sharing a middle segment are siblings") {
    const auto a = test::analyze(
        "S s A\nS a C\nS b G\nS m T\nS c C\nS d G\nS t T\n"
        "L s + a + 0M\nL s + b + 0M\nL a + m + 0M\nL b + m + 0M\n"
        "L m + c + 0M\nL m + d + 0M\nL c + t + 0M\nL d + t + 0M\n");
    const auto& cls = a->classes.class_of;
    CHECK(cls[a->black("s")] == cls[a->black("m")]);
    CHECK(cls[a->black("m")] == cls[a->black("t")]);

    const FlubbleForest forest = forest_of(*a);
    REQUIRE(forest.size() == 2);
    CHECK(boundary(*a, forest.flubbles[0]) == test::NamePair{"s", "m"});
    CHECK(boundary(*a, forest.flubbles[1]) == test::NamePair{"m", "t"});
    CHECK_FALSE(forest.flubbles[0].parent);
    CHECK_FALSE(forest.flubbles[1].parent);
    check_forest(*a, forest);
    CHECK(test::check_flubble_boundaries(*a, forest).empty());

    SUBCASE("per-class mode spans the chain") {
        const FlubbleForest one = forest_of(*a, ChainMode::PerClass);
        REQUIRE(one.size() == 1);
        CHECK(boundary(*a, one.flubbles[0]) == test::NamePair{"s", "t"});
    }
}

TEST_CASE("a path closed by the dummy root is one flubble") {
    const auto a = test::analyze("S a A\nS b C\nL a + b + 0M\n");
    REQUIRE(forest_of(*a).size() == 1);
    CHECK(boundary(*a, forest_of(*a).flubbles[0]) == test::NamePair{"a", "b"});
}

TEST_CASE("a stem and its loop hold no flubble") {
    const auto c = test::analyze(test::kExampleC);
    CHECK(forest_of(*c).size() == 0);
}

TEST_CASE("crossing regions are rejected") {
    const auto a = test::analyze(test::kExampleB);
    std::vector<Flubble> bad = enumerate_flubbles(a->t(), a->classes);
    REQUIRE(bad.size() == 2);
    // Re-pair the boundaries so that the regions interleave.
    std::swap(bad[0].exit, bad[1].exit);
    CHECK_THROWS_AS(build_flubble_tree(bad, a->t()), OverlapViolation);
}

TEST_CASE("bound on the flubble count") {
    const auto a = test::analyze(test::kExampleB);
    const FlubbleForest forest = forest_of(*a);
    CHECK(flubble_count_bound_check(a->graph(), forest));
    FlubbleForest inflated;
    inflated.flubbles.resize(a->graph().real_edge_count() + 1);
    CHECK_FALSE(flubble_count_bound_check(a->graph(), inflated));
}

TEST_CASE("nested generator base cases") {
    SUBCASE("depth 1 width 1 is Example A") {
        const auto nb = oracle::nested_bubble_generator(1, 1, 3);
        CHECK(nb.doc.segments.size() == 4);
        CHECK(nb.doc.links.size() == 4);
        REQUIRE(nb.forest.size() == 1);
        const auto a = test::analyze(nb.doc);
        CHECK(test::facts(forest_of(*a), a->graph().names()) == test::facts(nb.forest));
    }
    SUBCASE("depth 2 width 1 is Example B") {
        const auto nb = oracle::nested_bubble_generator(2, 1, 5);
        CHECK(nb.doc.segments.size() == 7);
        REQUIRE(nb.forest.size() == 2);
        CHECK(nb.forest[1].parent == 0u);
        const auto a = test::analyze(nb.doc);
        CHECK(test::facts(forest_of(*a), a->graph().names()) == test::facts(nb.forest));
    }
    SUBCASE("depth 1 width 3 gives three siblings") {
        const auto nb = oracle::nested_bubble_generator(1, 3, 11);
        REQUIRE(nb.forest.size() == 3);
        const auto a = test::analyze(nb.doc);
        const FlubbleForest forest = forest_of(*a);
        CHECK(forest.roots().size() == 3);
        CHECK(test::facts(forest, a->graph().names()) == test::facts(nb.forest));
    }
}

TEST_CASE("nested generator ground truth") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        CAPTURE(seed);
        const auto nb = oracle::nested_bubble_generator(1 + seed % 4, 1 + (seed / 4) % 4, seed);
        const auto a = test::analyze(nb.doc);
        const FlubbleForest forest = forest_of(*a);
        check_forest(*a, forest);
        REQUIRE(test::facts(forest, a->graph().names()) == test::facts(nb.forest));
    }
}

TEST_CASE("boundaries on random graphs are 2-blackedge-disconnectable") {
    for (std::uint64_t i = 0; i < 300; ++i) {
        CAPTURE(i);
        const auto a = test::analyze(oracle::random_biedged_graph(test::corpus_spec(i)));
        for (ChainMode mode : {ChainMode::ConsecutivePairs, ChainMode::PerClass}) {
            const FlubbleForest forest = forest_of(*a, mode);
            check_forest(*a, forest);
            REQUIRE(test::check_flubble_boundaries(*a, forest) == "");
            REQUIRE(flubble_count_bound_check(a->graph(), forest));
        }
    }
}
