#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "drs/reduction.hpp"
#include "drs/resolving.hpp"
#include "test_util.hpp"

using namespace drs;

namespace {

ThreeDmInstance parse_str(const std::string& text) {
    std::istringstream in(text);
    return parse_3dm(in);
}

int parse_error_line(const std::string& text) {
    std::istringstream in(text);
    try {
        parse_3dm(in);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST_SUITE_BEGIN("reduction");

TEST_CASE("parse_3dm accepts the documented format") {
    ThreeDmInstance one = parse_str("3dm 1 1\n0 0 0\n");
    CHECK(one.n == 1);
    CHECK(one.triples == std::vector<std::array<int, 3>>{{0, 0, 0}});

    ThreeDmInstance commented = parse_str(
        "# leading comment\n\n3dm 2 2\n0 0 0\n\n1 1 1\n# trailing\n");
    CHECK(commented.n == 2);
    CHECK(commented.triples ==
          std::vector<std::array<int, 3>>{{0, 0, 0}, {1, 1, 1}});
}

TEST_CASE("parse_3dm reports 1-based line numbers") {
    CHECK(parse_error_line("3dm 2 1\n0 2 0\n") == 2);          // index >= n
    CHECK(parse_error_line("3dm 2 2\n0 0 0\n0 0 0\n") == 3);   // duplicate
    CHECK(parse_error_line("3dm x\n") == 1);                   // bad header
    CHECK(parse_error_line("graph 2 1\n") == 1);               // wrong tag
    CHECK(parse_error_line("3dm 1 1 9\n0 0 0\n") == 1);        // trailing header
    CHECK(parse_error_line("3dm 1 1\n0 0 0 7\n") == 2);        // trailing triple
    CHECK(parse_error_line("3dm 1 1\n0 0 0\nmore\n") == 3);    // junk after
    CHECK(parse_error_line("3dm 2 2\n0 0 0\n") == 3);          // missing triple
    CHECK(parse_error_line("3dm 0 1\n") == 1);                 // n < 1
    CHECK(parse_error_line("3dm 1 0\n") == 1);                 // t < 1
    CHECK(parse_error_line("") == 1);                          // no header
    CHECK(parse_error_line("3dm 1 1\n0 x 0\n") == 2);          // non-numeric
}

TEST_CASE("parse_3dm_file round trip") {
    const char* path = "tmp_roundtrip.3dm";
    {
        std::ofstream out(path);
        out << "3dm 3 7\n0 0 0\n0 1 2\n0 2 1\n1 0 1\n1 1 2\n2 2 0\n2 2 1\n";
    }
    ThreeDmInstance inst = parse_3dm_file(path);
    std::remove(path);
    ThreeDmInstance want = testutil::example_3dm();
    CHECK(inst.n == want.n);
    CHECK(inst.triples == want.triples);

    CHECK_THROWS_AS(parse_3dm_file("definitely_missing.3dm"), Error);
}

TEST_CASE("k_threshold") {
    ThreeDmInstance inst = testutil::example_3dm();
    CHECK(k_threshold(inst) == 10);       // 3 + ceil(log2 7) + 4
    CHECK(k_threshold(inst, 2) == 14);    // 3*2 + ceil(log2 14) + 4

    ThreeDmInstance one{1, {{0, 0, 0}}};
    CHECK(k_threshold(one) == 5);        // 1 + 0 + 4
    CHECK(k_threshold(one, 2) == 7);     // 1*2 + 1 + 4
    ThreeDmInstance two{1, {{0, 0, 0}}};
    two.triples.push_back({0, 0, 0});    // duplicate is fine for the formula
    CHECK(k_threshold(two) == 6);        // 1 + 1 + 4

    CHECK_THROWS_AS(k_threshold(one, 0), Error);
    CHECK_THROWS_AS(k_threshold(ThreeDmInstance{}), Error);
}

TEST_CASE("build_reduction sizes and layout for the single-triple instance") {
    ThreeDmInstance one{1, {{0, 0, 0}}};
    ReductionGraph rg = build_reduction(one);
    CHECK(rg.tau == 1);
    CHECK(rg.lambda == 0);
    CHECK(rg.k_threshold == 5);
    CHECK(rg.graph.vertex_count() == 13);
    CHECK(rg.graph.edge_count() == 14);
    CHECK(rg.n_prime == 1);

    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::triple, 0)) == "s0");
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::triple_mate, 0)) == "s'0");
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::sel_d)) == "sD");
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::sel_d_mate)) == "s'D");
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::element_b, 0)) == "b1");
}

TEST_CASE("build_reduction on the seven-triple instance") {
    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst);
    CHECK(rg.tau == 7);
    CHECK(rg.lambda == 3);
    CHECK(rg.k_threshold == 10);
    CHECK(rg.graph.vertex_count() == 37);
    CHECK(rg.graph.edge_count() == 65);
    CHECK(rg.graph.connected());

    // Vertex layout: selector side first, then elements / mates / bits.
    CHECK(rg.vertex_of(ReductionRole::triple, 0) == 0);
    CHECK(rg.vertex_of(ReductionRole::sel_a) == 7);
    CHECK(rg.vertex_of(ReductionRole::bit_mate, 0) == 11);
    CHECK(rg.vertex_of(ReductionRole::element_a, 0) == 14);
    CHECK(rg.vertex_of(ReductionRole::element_c, 2) == 22);
    CHECK(rg.vertex_of(ReductionRole::triple_mate, 0) == 23);
    CHECK(rg.vertex_of(ReductionRole::sel_d_mate) == 33);
    CHECK(rg.vertex_of(ReductionRole::bit, 2) == 36);

    // Role tags are the inverse of vertex_of.
    const RoleTag& tag = rg.roles[rg.vertex_of(ReductionRole::element_b, 1)];
    CHECK(tag.role == ReductionRole::element_b);
    CHECK(tag.index == 1);
    CHECK(tag.copy == 0);

    // Bit d_i is adjacent to exactly the selectors s_j with bit i of j set.
    auto bit_neighbors = [&](int i) {
        VertexSet js;
        for (int w : rg.graph.neighbors(rg.vertex_of(ReductionRole::bit, i)))
            if (rg.roles[w].role == ReductionRole::triple)
                js.push_back(rg.roles[w].index);
        return js;
    };
    CHECK(bit_neighbors(0) == VertexSet{1, 3, 5});
    CHECK(bit_neighbors(1) == VertexSet{2, 3, 6});
    CHECK(bit_neighbors(2) == VertexSet{4, 5, 6});

    // The graph is bipartite with the selector side as one part.
    const int i_side = rg.tau + 4 + rg.lambda;
    for (const Edge& e : rg.graph.edges())
        CHECK(((e.u < i_side) != (e.v < i_side)));

    // Out-of-range role lookups are rejected.
    CHECK_THROWS_AS(rg.vertex_of(ReductionRole::triple, 7), Error);
    CHECK_THROWS_AS(rg.vertex_of(ReductionRole::element_a, 0, 1), Error);
    CHECK_THROWS_AS(rg.vertex_of(ReductionRole::bit, 3), Error);
}

TEST_CASE("build_reduction with replication") {
    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst, 2);
    CHECK(rg.tau == 14);
    CHECK(rg.lambda == 4);
    CHECK(rg.k_threshold == 14);
    CHECK(rg.graph.vertex_count() == 62);
    CHECK(rg.graph.edge_count() == 129);
    CHECK(rg.n_prime == 6);
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::element_a, 0, 1)) == "a1@1");
    CHECK(rg.graph.label(rg.vertex_of(ReductionRole::triple, 7)) == "s7");

    // Copy-1 selector s7 repeats triple 0 inside the copy-1 element block.
    const int s7 = rg.vertex_of(ReductionRole::triple, 7);
    CHECK(rg.graph.has_edge(s7, rg.vertex_of(ReductionRole::element_a, 0, 1)));
    CHECK_FALSE(rg.graph.has_edge(s7, rg.vertex_of(ReductionRole::element_a, 0, 0)));

    // Single triple doubled: both sides gain one bit vertex.
    ThreeDmInstance one{1, {{0, 0, 0}}};
    ReductionGraph rg2 = build_reduction(one, 2);
    CHECK(rg2.tau == 2);
    CHECK(rg2.lambda == 1);
    CHECK(rg2.k_threshold == 7);
    CHECK(rg2.graph.vertex_count() == 20);

    CHECK_THROWS_AS(build_reduction(inst, 0), Error);
    CHECK_THROWS_AS(build_reduction(ThreeDmInstance{}), Error);
    ThreeDmInstance bad{2, {{0, 2, 0}}};
    CHECK_THROWS_AS(build_reduction(bad), Error);
}

TEST_CASE("drs_from_matching yields a verified DRS of the expected size") {
    ThreeDmInstance one{1, {{0, 0, 0}}};
    ReductionGraph rg1 = build_reduction(one);
    VertexSet r1 = drs_from_matching(rg1, {0});
    CHECK(static_cast<int>(r1.size()) == rg1.k_threshold);
    auto [lg1, map1] = line_graph(rg1.graph);
    DistanceMatrix dm1 = bfs_all_pairs(lg1);
    CHECK(is_drs_fast(dm1, r1));
    // The certificate is an upper bound on the optimum, not always tight:
    // this gadget's true minimum is 4 while K = 5.
    const int psi1 = min_drs_exhaustive(dm1).psi;
    CHECK(psi1 == 4);
    CHECK(psi1 <= rg1.k_threshold);

    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst);
    VertexSet r = drs_from_matching(rg, {0, 4, 6});
    CHECK(static_cast<int>(r.size()) == 10);
    auto [lg, map] = line_graph(rg.graph);
    CHECK(is_drs_fast(bfs_all_pairs(lg), r));

    // The other perfect matching of the instance also certifies.
    VertexSet r2 = drs_from_matching(rg, {1, 3, 5});
    CHECK(static_cast<int>(r2.size()) == 10);
    CHECK(is_drs_fast(bfs_all_pairs(lg), r2));

    // Replicated graphs still take base-instance matchings; the matched
    // pairs are mirrored into both selector blocks (6 + 4 + 4 = 14).
    ReductionGraph rg2 = build_reduction(inst, 2);
    VertexSet rr = drs_from_matching(rg2, {0, 4, 6});
    CHECK(static_cast<int>(rr.size()) == rg2.k_threshold);
    CHECK(static_cast<int>(rr.size()) == 14);
    CHECK(is_drs_fast(bfs_all_pairs(line_graph(rg2.graph).first), rr));
}

TEST_CASE("drs_from_matching rejects non-matchings") {
    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst);
    CHECK_THROWS_AS(drs_from_matching(rg, {0, 4}), Error);        // wrong size
    CHECK_THROWS_AS(drs_from_matching(rg, {0, 4, 7}), Error);     // out of range
    CHECK_THROWS_AS(drs_from_matching(rg, {0, 1, 2}), Error);     // double cover
    CHECK_THROWS_AS(drs_from_matching(rg, {0, 4, 4}), Error);     // repeat
}

TEST_CASE("edge_distance_class matches line-graph BFS") {
    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst);

    const int sd = rg.vertex_of(ReductionRole::sel_d);
    const int sd_m = rg.vertex_of(ReductionRole::sel_d_mate);
    CHECK(edge_distance_class(rg, sd, sd_m) == 0);
    CHECK(edge_distance_class(rg, sd, rg.vertex_of(ReductionRole::element_a, 0)) == 1);
    CHECK(edge_distance_class(rg, sd, rg.vertex_of(ReductionRole::bit, 0)) == 1);
    CHECK(edge_distance_class(rg, rg.vertex_of(ReductionRole::sel_a),
                              rg.vertex_of(ReductionRole::element_a, 0)) == 2);
    CHECK(edge_distance_class(rg, rg.vertex_of(ReductionRole::bit, 0),
                              rg.vertex_of(ReductionRole::bit_mate, 0)) == 2);
    CHECK(edge_distance_class(rg, rg.vertex_of(ReductionRole::bit, 0),
                              rg.vertex_of(ReductionRole::triple, 1)) == 2);
    CHECK(edge_distance_class(rg, rg.vertex_of(ReductionRole::triple, 0),
                              rg.vertex_of(ReductionRole::triple_mate, 0)) == 3);
    CHECK(edge_distance_class(rg, rg.vertex_of(ReductionRole::sel_a),
                              rg.vertex_of(ReductionRole::sel_a_mate)) == 3);

    // Arguments commute; non-edges are rejected.
    CHECK(edge_distance_class(rg, sd_m, sd) == 0);
    CHECK_THROWS_AS(edge_distance_class(rg, 0, 1), Error);

    // Every edge's class equals its line-graph distance from {sD, s'D}.
    auto [lg, map] = line_graph(rg.graph);
    DistanceMatrix dm = bfs_all_pairs(lg);
    const int anchor = map.line_vertex(std::min(sd, sd_m), std::max(sd, sd_m));
    REQUIRE(anchor >= 0);
    for (const Edge& e : rg.graph.edges())
        CHECK(edge_distance_class(rg, e.u, e.v) ==
              dm(map.line_vertex(e.u, e.v), anchor));
}

TEST_CASE("the residual pairs doubly resolve distances at the anchor") {
    // The letter selector pairs plus the bit pairs pin down every line vertex
    // against the anchor pair {sD, s'D}.
    ThreeDmInstance inst = testutil::example_3dm();
    ReductionGraph rg = build_reduction(inst);
    auto [lg, map] = line_graph(rg.graph);
    DistanceMatrix dm = bfs_all_pairs(lg);

    auto pair_lv = [&](ReductionRole a, ReductionRole b, int idx = 0) {
        const int u = rg.vertex_of(a, idx), v = rg.vertex_of(b, idx);
        return map.line_vertex(std::min(u, v), std::max(u, v));
    };
    VertexSet residual{
        pair_lv(ReductionRole::sel_a, ReductionRole::sel_a_mate),
        pair_lv(ReductionRole::sel_b, ReductionRole::sel_b_mate),
        pair_lv(ReductionRole::sel_c, ReductionRole::sel_c_mate)};
    for (int i = 0; i < rg.lambda; ++i)
        residual.push_back(pair_lv(ReductionRole::bit, ReductionRole::bit_mate, i));
    residual = make_vertex_set(std::move(residual));

    const int anchor = pair_lv(ReductionRole::sel_d, ReductionRole::sel_d_mate);
    CHECK(is_doubly_distance_resolving_on(dm, residual, anchor));
}

TEST_CASE("solve_3dm_exhaustive") {
    ThreeDmInstance inst = testutil::example_3dm();
    auto m = solve_3dm_exhaustive(inst);
    REQUIRE(m.has_value());
    CHECK(*m == std::vector<int>{0, 4, 6});  // lexicographically least

    ThreeDmInstance one{1, {{0, 0, 0}}};
    auto m1 = solve_3dm_exhaustive(one);
    REQUIRE(m1.has_value());
    CHECK(*m1 == std::vector<int>{0});

    ThreeDmInstance unsat{2, {{0, 0, 0}, {1, 1, 0}}};  // c=1 never covered
    CHECK_FALSE(solve_3dm_exhaustive(unsat).has_value());

    SolveOptions tight;
    tight.work_limit = 1;
    try {
        solve_3dm_exhaustive(unsat, tight);
        FAIL("expected the work limit to trip");
    } catch (const WorkLimitError& e) {
        CHECK(e.limit() == 1);
    }

    CHECK_THROWS_AS(solve_3dm_exhaustive(ThreeDmInstance{}), Error);
}

TEST_SUITE_END();
