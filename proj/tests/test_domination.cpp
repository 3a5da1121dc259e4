#include "oracles.hpp"
#include "unidom/constructions.hpp"
#include "unidom/domination.hpp"

#include <doctest.h>

using namespace unidom;

namespace {

namespace ext {
enum { x1, a11, a12, a21, a22, b11, b12, y1, y2, c1 };
}
const VertexSet kExtD = VertexSet::of({ext::x1, ext::y1, ext::y2});

std::vector<std::uint64_t> bits_of(const std::vector<VertexSet>& sets) {
    std::vector<std::uint64_t> out;
    for (const auto& s : sets) out.push_back(s.bits());
    return out;
}

}  // namespace

TEST_SUITE_BEGIN("domination");

TEST_CASE("is_dominating") {
    const Graph p3 = oracle::path(3);
    CHECK(is_dominating(p3, VertexSet::of({1})));
    CHECK_FALSE(is_dominating(p3, VertexSet::of({0})));
    CHECK(is_dominating(oracle::extremal_10_3(), kExtD));
    CHECK(is_dominating(Graph::edgeless(0), VertexSet{}));
}

TEST_CASE("domination_number small cases") {
    CHECK(domination_number(oracle::path(3)) == 1);
    CHECK(domination_number(oracle::cycle(6)) == 2);
    CHECK(domination_number(oracle::extremal_10_3()) == 3);
    CHECK(domination_number(Graph::edgeless(5)) == 5);
    CHECK(domination_number(Graph::edgeless(0)) == 0);
    for (int n = 3; n <= 20; ++n) CHECK(domination_number(oracle::cycle(n)) == (n + 2) / 3);
}

TEST_CASE("domination_number agrees with the unpruned oracle") {
    std::mt19937_64 rng(31337);
    for (int t = 0; t < 250; ++t) {
        const int n = 1 + t % 12;
        const double density = 0.1 + 0.1 * (t % 9);
        const Graph g = oracle::random_graph(rng, n, density);
        DominationSolver solver(g);
        const int gamma = solver.domination_number();
        REQUIRE(gamma == oracle::naive_domination_number(g));
        CHECK(solver.greedy_upper_bound() >= gamma);
        CHECK(solver.has_dominating_set_of_size(gamma));
        if (gamma > 0) CHECK_FALSE(solver.has_dominating_set_of_size(gamma - 1));
    }
}

TEST_CASE("enumerate_minimum_dominating_sets") {
    SUBCASE("P3") {
        CHECK(bits_of(enumerate_minimum_dominating_sets(oracle::path(3))) ==
              std::vector<std::uint64_t>{0b010});
    }
    SUBCASE("P4 has exactly four") {
        const auto sets = enumerate_minimum_dominating_sets(oracle::path(4));
        CHECK(sets == std::vector<VertexSet>{VertexSet::of({0, 2}), VertexSet::of({1, 2}),
                                             VertexSet::of({0, 3}), VertexSet::of({1, 3})});
    }
    SUBCASE("extremal (10, 3) graph") {
        CHECK(enumerate_minimum_dominating_sets(oracle::extremal_10_3()) ==
              std::vector<VertexSet>{kExtD});
    }
    SUBCASE("cap") {
        CHECK(enumerate_minimum_dominating_sets(oracle::path(4), 2).size() == 2);
        CHECK_THROWS_AS(enumerate_minimum_dominating_sets(oracle::path(4), 1),
                        std::invalid_argument);
    }
    SUBCASE("matches brute force on random graphs up to n = 8") {
        std::mt19937_64 rng(8);
        for (int t = 0; t < 200; ++t) {
            const Graph g = oracle::random_graph(rng, 1 + t % 8, 0.15 + 0.1 * (t % 7));
            REQUIRE(bits_of(enumerate_minimum_dominating_sets(g)) == oracle::naive_minimum_sets(g));
        }
    }
}

TEST_CASE("dominating_sets_up_to") {
    DominationSolver p4(oracle::path(4));
    CHECK(p4.dominating_sets_up_to(1).empty());
    CHECK(p4.dominating_sets_up_to(2).size() == 4);
    CHECK(p4.dominating_sets_up_to(2, 2).size() == 2);
    CHECK(p4.dominating_sets_up_to(-1).empty());
    std::mt19937_64 rng(77);
    for (int t = 0; t < 100; ++t) {
        const Graph g = oracle::random_graph(rng, 2 + t % 8, 0.3);
        DominationSolver s(g);
        CHECK(bits_of(s.dominating_sets_up_to(oracle::naive_domination_number(g))) ==
              oracle::naive_minimum_sets(g));
    }
}

TEST_CASE("is_umd") {
    SUBCASE("P3") {
        const auto r = is_umd(oracle::path(3));
        CHECK(r.unique);
        CHECK(r.gamma == 1);
        CHECK(r.min_sets == std::vector<VertexSet>{VertexSet::of({1})});
        CHECK(r.perfectly_dominated);
        CHECK(r.epn_condition_met);
        CHECK(r.epn_by_dominator.at(1) == VertexSet::of({0, 2}));
    }
    SUBCASE("C4 is not unique") {
        const auto r = is_umd(oracle::cycle(4));
        CHECK_FALSE(r.unique);
        CHECK(r.gamma == 2);
        CHECK(r.min_sets.size() == 2);
        CHECK(r.truncated);
        CHECK(r.epn_by_dominator.empty());
        CHECK_FALSE(r.perfectly_dominated);
    }
    SUBCASE("full enumeration on request") {
        const auto r = is_umd(oracle::cycle(4), kNoCap);
        CHECK(r.min_sets.size() == 6);
        CHECK_FALSE(r.truncated);
    }
    SUBCASE("bipartite construction at (9, 3)") {
        const auto built = construct_bipartite(9, 3);
        const auto r = is_umd(built.graph);
        CHECK(r.unique);
        CHECK(r.min_sets.front().size() == 3);
        CHECK(built.graph.size() == 10);
    }
    SUBCASE("edgeless graph is unique but flagged") {
        const auto r = is_umd(Graph::edgeless(3));
        CHECK(r.unique);
        CHECK(r.gamma == 3);
        CHECK(r.has_isolated);
        CHECK_FALSE(r.epn_condition_met);
    }
    SUBCASE("uniqueness agrees with the oracle") {
        std::mt19937_64 rng(4);
        for (int t = 0; t < 300; ++t) {
            const Graph g = oracle::random_graph(rng, 2 + t % 9, 0.3);
            const auto r = is_umd(g);
            REQUIRE(r.unique == (oracle::naive_minimum_sets(g).size() == 1));
        }
    }
}

TEST_CASE("exterior_private_neighbors") {
    const Graph g = oracle::extremal_10_3();
    CHECK(exterior_private_neighbors(oracle::path(3), 1, VertexSet::of({1})) ==
          VertexSet::of({0, 2}));
    CHECK(exterior_private_neighbors(g, ext::x1, kExtD) == VertexSet::of({ext::b11, ext::b12, ext::c1}));
    CHECK(exterior_private_neighbors(g, ext::y1, kExtD) == VertexSet::of({ext::a11, ext::a12}));
    CHECK(exterior_private_neighbors(g, ext::y2, kExtD) == VertexSet::of({ext::a21, ext::a22}));
    CHECK_THROWS_AS(exterior_private_neighbors(g, ext::a11, kExtD), std::invalid_argument);
    // Shared neighbors are nobody's private neighbor.
    CHECK(exterior_private_neighbors(oracle::cycle(4), 0, VertexSet::of({0, 2})).empty());
}

TEST_CASE("check_epn_condition") {
    CHECK(check_epn_condition(oracle::extremal_10_3(), kExtD));
    CHECK_FALSE(check_epn_condition(oracle::path(4), VertexSet::of({1, 2})));
    CHECK(check_epn_condition(construct_star(5).graph, VertexSet::of({0})));
    CHECK_THROWS_AS(check_epn_condition(oracle::path(4), VertexSet::of({0})),
                    std::invalid_argument);
}

TEST_CASE("perfect domination") {
    CHECK(is_perfectly_dominated(oracle::path(3), VertexSet::of({1})));
    CHECK(is_perfectly_dominated(oracle::extremal_10_3(), kExtD));
    CHECK_FALSE(is_perfectly_dominated(oracle::cycle(4), VertexSet::of({0, 1})));
    CHECK_THROWS_AS(is_perfectly_dominated(oracle::path(3), VertexSet::of({0, 1})),
                    std::invalid_argument);

    SUBCASE("degree-sum and structural formulations agree") {
        std::mt19937_64 rng(12);
        for (int t = 0; t < 200; ++t) {
            const Graph g = oracle::random_graph(rng, 2 + t % 9, 0.35);
            for (const VertexSet& d : enumerate_minimum_dominating_sets(g)) {
                REQUIRE(perfect_by_degree_sum(g, d) == perfect_by_structure(g, d));
            }
        }
    }
}

TEST_CASE("closed_neighborhoods_disjoint") {
    const Graph two_p3 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    CHECK(closed_neighborhoods_disjoint(two_p3, VertexSet::of({1, 4})));
    CHECK_FALSE(closed_neighborhoods_disjoint(oracle::cycle(4), VertexSet::of({0, 2})));

    SUBCASE("disjoint closed neighborhoods never exceed gamma") {
        std::mt19937_64 rng(17);
        for (int t = 0; t < 200; ++t) {
            const Graph g = oracle::random_graph(rng, 3 + t % 10, 0.25);
            const int gamma = domination_number(g);
            for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.order()); m += 7) {
                const VertexSet d{m};
                if (closed_neighborhoods_disjoint(g, d)) REQUIRE(gamma >= d.size());
            }
        }
    }
}

TEST_CASE("private-neighbor audit") {
    const std::uint64_t before = audit::umd_instances_checked();
    (void)is_umd(oracle::extremal_10_3());
    CHECK(audit::umd_instances_checked() == before + 1);

    // A forged report must be rejected.
    DominationReport forged;
    forged.gamma = 2;
    forged.unique = true;
    forged.min_sets = {VertexSet::of({1, 2})};
    CHECK_THROWS_AS(audit::check_private_neighbor_theorem(oracle::path(4), forged),
                    TheoremViolation);

    // Isolated vertices put a graph outside the theorem.
    const auto r = is_umd(Graph::edgeless(2));
    CHECK_NOTHROW(audit::check_private_neighbor_theorem(Graph::edgeless(2), r));
}

TEST_SUITE_END();
