#include "doctest.h"

#include "moorelab/census.hpp"
#include "moorelab/error.hpp"
#include "moorelab/metrics.hpp"
#include "moorelab/moore.hpp"
#include "support/oracles.hpp"

using namespace moorelab;

namespace {

ErrorCode code_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::Io;
}

}  // namespace

TEST_CASE("moore bounds")
{
    CHECK(moore_bound_diameter(3, 3) == 14);
    CHECK(moore_bound_diameter(2, 5) == 10);
    for (int delta = 2; delta <= 8; ++delta)
        CHECK(moore_bound_diameter(delta, 2) == 2 * delta);
    CHECK(moore_bound_girth(3, 6) == 14);
    CHECK(moore_bound_girth(3, 8) == 30);
    for (int delta = 3; delta <= 8; ++delta)
        CHECK(moore_bound_girth(delta, 4) == 2 * delta);
    for (int delta = 3; delta <= 10; ++delta)
        for (int d = 1; d <= 8; ++d)
            if (d >= 2)
                CHECK(moore_bound_girth(delta, 2 * d) == moore_bound_diameter(delta, d));
    CHECK(moore_order(2, 6) == 6);
    CHECK(MooreParams::by_girth(3, 6).bound == 14);
    CHECK(MooreParams::by_diameter(3, 3).bound == MooreParams::by_girth(3, 6).bound);

    CHECK(code_of([] { (void)moore_bound_girth(3, 5); }) == ErrorCode::OddGirth);
    CHECK(code_of([] { (void)moore_bound_diameter(1, 3); }) == ErrorCode::DegreeTooSmall);
    CHECK(code_of([] { (void)moore_bound_diameter(3, 0); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([] { (void)moore_bound_diameter(1000, 40); }) == ErrorCode::Overflow);
}

TEST_CASE("moore tree edges")
{
    const auto h = oracle::heawood();
    for (auto [u, v] : h.edges()) {
        CHECK(is_moore_tree_edge(h, u, v, 6));
        CHECK(is_moore_tree_edge(h, v, u, 6));
        CHECK(is_moore_tree_edge_explicit(h, u, v, 6));
    }
    for (int delta = 2; delta <= 5; ++delta) {
        const auto k = oracle::complete_bipartite(delta);
        for (auto [u, v] : k.edges())
            CHECK(is_moore_tree_edge(k, u, v, 4));
        CHECK(is_local_bipartite_moore(k, delta, 4));
    }
    CHECK(is_local_bipartite_moore(oracle::cycle(6), 2, 6));
    CHECK(is_local_bipartite_moore(h, 3, 6));
    CHECK_FALSE(is_local_bipartite_moore(oracle::cycle(5), 2, 6));

    // G3: root edge W_r B_r (vertices 0, 1) passes; edges between two
    // local-girth-4 vertices fail.
    const auto g3 = oracle::lbm36(oracle::Lbm36::G3);
    CHECK(is_moore_tree_edge(g3, 0, 1, 6));
    for (auto [u, v] : g3.edges()) {
        const bool passes = is_moore_tree_edge(g3, u, v, 6);
        CHECK(passes == is_moore_tree_edge_explicit(g3, u, v, 6));
        CHECK(passes == is_moore_tree_edge(g3, v, u, 6));
        if (passes) {
            CHECK(local_girth(g3, u) == 6);
            CHECK(local_girth(g3, v) == 6);
        }
        if (local_girth(g3, u) == 4 && local_girth(g3, v) == 4)
            CHECK_FALSE(passes);
    }

    CHECK(code_of([&] { (void)is_moore_tree_edge(h, 0, 1, 6); }) == ErrorCode::PreconditionViolated);
    CHECK(code_of([&] { (void)is_moore_tree_edge(oracle::cycle(8), 0, 1, 6); }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("non-LBM cubic graphs of order 14")
{
    const auto records = enumerate_regular_bipartite(3, 14);
    REQUIRE(records.size() == 13);
    int lbm = 0;
    for (const auto& r : records) {
        const auto g = r.graph();
        const bool is_lbm = is_local_bipartite_moore(g, 3, 6);
        CHECK(is_lbm == r.lbm);
        lbm += is_lbm;
        const auto edge = find_moore_tree_edge(g, 3, 6);
        CHECK(edge.has_value() == is_lbm);
        bool all = true;
        for (auto [u, v] : g.edges())
            all = all && is_moore_tree_edge(g, u, v, 6);
        if (all)
            CHECK(girth_vector(g, 6).str() == "6^14");
    }
    CHECK(lbm == 5);
}
