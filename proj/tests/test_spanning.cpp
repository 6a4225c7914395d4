// Spanning trees and forests in every dimension, the two weighted counting
// identities, and the determinant criterion for tree detection.
#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracles.hpp"

#include <relap/generators.hpp>
#include <relap/homology.hpp>
#include <relap/random_complex.hpp>
#include <relap/spanning.hpp>

using namespace relap;

namespace {

SimplicialComplex projective_plane_6() {
    return SimplicialComplex::from_facets({{0, 1, 2},
                                           {0, 1, 3},
                                           {0, 2, 4},
                                           {0, 3, 5},
                                           {0, 4, 5},
                                           {1, 2, 5},
                                           {1, 3, 4},
                                           {1, 4, 5},
                                           {2, 3, 4},
                                           {2, 3, 5}});
}

} // namespace

TEST_CASE("target and complement sizes") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    CHECK(spanning_target_size(k3, 1) == 2);
    CHECK(forest_complement_size(k3, 1) == 1);
    CHECK(spanning_target_size(k3, 0) == 1);
    CHECK(forest_complement_size(k3, 0) == 2);
    CHECK(spanning_target_size(k3, -1) == 0);
    CHECK(forest_complement_size(k3, -1) == 1);
    CHECK_THROWS_AS(spanning_target_size(k3, 2), std::domain_error);
    CHECK_THROWS_AS(forest_complement_size(k3, -2), std::domain_error);

    const auto d2 = generate_simplex(2);
    const ComplexPair rel(d2, SimplicialComplex::from_facets({{0, 1}}));
    CHECK(spanning_target_size(rel, 1) == 1);
    CHECK(forest_complement_size(rel, 1) == 1);
    CHECK(spanning_target_size(rel, 0) == 0);
}

TEST_CASE("existence of spanning trees reads the Betti number below") {
    CHECK(spanning_trees_exist(ComplexPair(generate_skeleton_simplex(2, 1)), 1));
    CHECK(spanning_trees_exist(ComplexPair(generate_skeleton_simplex(2, 1)), 0));
    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    CHECK_FALSE(spanning_trees_exist(split, 1));
    // the real projective plane has vanishing first Betti number (pure torsion)
    CHECK(spanning_trees_exist(ComplexPair(projective_plane_6()), 2));
    CHECK_THROWS_AS(spanning_trees_exist(split, 4), std::domain_error);
}

TEST_CASE("candidate, forest, and tree predicates on hand-checked inputs") {
    const auto k3 = generate_skeleton_simplex(2, 1);
    const ComplexPair pair(k3);

    const auto two_edges = SimplicialComplex::from_facets({{0, 1}, {0, 2}});
    CHECK(is_spanning_candidate(pair, 1, two_edges));
    CHECK(is_spanning_forest(pair, 1, two_edges));
    CHECK(is_spanning_tree(pair, 1, two_edges));

    // the whole complex carries too many edges to be a forest
    CHECK(is_spanning_candidate(pair, 1, k3));
    CHECK_FALSE(is_spanning_forest(pair, 1, k3));

    // one edge cannot span; a lone pair of vertices misses the base
    const auto one_edge = SimplicialComplex::from_facets({{0, 1}, {2}});
    CHECK(is_spanning_candidate(pair, 1, one_edge));
    CHECK_FALSE(is_spanning_forest(pair, 1, one_edge));
    CHECK_FALSE(is_spanning_candidate(
        pair, 1, SimplicialComplex::from_facets({{0, 1}})));

    // a forest that is not a tree: two components, full rank
    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    const auto upsilon = split.complex();
    CHECK(is_spanning_forest(split, 1, upsilon));
    CHECK_FALSE(is_spanning_tree(split, 1, upsilon));
}

TEST_CASE("the greedy forest spans and reports the predicted complement") {
    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto g = greedy_forest(k4, 1);
    CHECK(g.kept.size() == 3);
    CHECK(g.removed.size() == 3);
    CHECK(is_spanning_tree(k4, 1, g.complex));

    const auto d2 = generate_simplex(2);
    const ComplexPair rel(d2, SimplicialComplex::from_facets({{0, 1}}));
    const auto gr = greedy_forest(rel, 1);
    CHECK(gr.kept.size() == 1);
    CHECK(gr.removed.size() == 1);
    CHECK(is_spanning_tree(rel, 1, gr.complex));

    const auto gm = greedy_forest(k4, -1);
    CHECK(gm.removed == std::vector<Face>{Face()});
    CHECK(gm.kept.empty());

    std::size_t spanned = 0;
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_complex(6, 0.55, 11000 + trial);
        if (x.dim() < 0) continue;
        const auto a = random_subcomplex(x, 0.4, 11100 + trial);
        const ComplexPair p(x, a);
        for (int k = 0; k <= x.dim(); ++k) {
            const auto gf = greedy_forest(p, k);
            CHECK(static_cast<long long>(gf.removed.size()) ==
                  forest_complement_size(p, k));
            CHECK(is_spanning_forest(p, k, gf.complex));
            if (spanning_trees_exist(p, k)) {
                CHECK(is_spanning_tree(p, k, gf.complex));
                ++spanned;
            }
        }
    }
    CHECK(spanned > 10);
}

TEST_CASE("enumerating trees of small graphs matches first principles") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    const auto t3 = enumerate_trees(k3, 1);
    CHECK(t3.candidate_count == 3);
    CHECK(t3.match_count == 3);
    CHECK(t3.weight_square_sum == 3);
    CHECK(t3.items.size() == 3);
    for (const auto& item : t3.items) CHECK(item.weight == 1);

    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto t4 = enumerate_trees(k4, 1);
    CHECK(t4.candidate_count == 20);
    CHECK(t4.match_count == 16);
    CHECK(t4.weight_square_sum == 16);
    CHECK(t4.used_det_fast_path);

    // complete graphs against the classical count n^{n-2}
    for (int n = 2; n <= 5; ++n) {
        const auto kn = generate_skeleton_simplex(n - 1, 1);
        const auto t = enumerate_trees(ComplexPair(kn), 1,
                                       default_enumeration_budget, false, false);
        CHECK(t.match_count == oracle::kirchhoff_tree_count(n, graph_edges(kn)));
        CHECK(t.weight_square_sum == Int(t.match_count));
    }

    // single-vertex trees in degree zero
    const auto t0 = enumerate_trees(k4, 0);
    CHECK(t0.match_count == 4);
    CHECK(t0.weight_square_sum == 4);
    for (const auto& item : t0.items) CHECK(item.added.size() == 1);

    // degenerate level: the one candidate with the empty face
    const auto tm = enumerate_trees(k4, -1);
    CHECK(tm.degenerate_level);
    CHECK(tm.match_count == 1);
    CHECK(tm.weight_square_sum == 1);
}

TEST_CASE("forests of a disconnected graph exist although trees do not") {
    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    const auto forests = enumerate_forests(split, 1);
    CHECK(forests.match_count == 1);
    CHECK(forests.weight_square_sum == 1);
    const auto trees = enumerate_trees(split, 1);
    CHECK(trees.match_count == 0);
    CHECK(trees.weight_square_sum == 0);
    // paranoid sweep re-checks every candidate without finding a tree
    const auto paranoid = enumerate_trees(split, 1, default_enumeration_budget, true);
    CHECK(paranoid.match_count == 0);
}

TEST_CASE("two-dimensional trees of simplex skeleta") {
    const ComplexPair d3(generate_simplex(3));
    const auto t = enumerate_trees(d3, 2);
    CHECK(t.candidate_count == 4);
    CHECK(t.match_count == 4);
    CHECK(t.weight_square_sum == 4);

    const ComplexPair sk(generate_skeleton_simplex(4, 2));
    const auto t5 = enumerate_trees(sk, 2, default_enumeration_budget, false, false);
    CHECK(t5.candidate_count == 210);
    CHECK(t5.match_count == 125);
    CHECK(t5.weight_square_sum == 125);
}

TEST_CASE("the projective plane is a torsion-weighted spanning tree") {
    const ComplexPair pair(projective_plane_6());
    const auto t = enumerate_trees(pair, 2);
    CHECK(t.candidate_count == 1);
    CHECK(t.match_count == 1);
    REQUIRE(t.items.size() == 1);
    CHECK(t.items.front().weight == 2);
    CHECK(t.weight_square_sum == 4);

    const auto paranoid = enumerate_trees(pair, 2, default_enumeration_budget, true);
    CHECK(paranoid.weight_square_sum == 4);
}

TEST_CASE("enumeration respects the candidate budget") {
    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    CHECK_THROWS_AS(enumerate_trees(k4, 1, 10), resource_limit);
    CHECK_NOTHROW(enumerate_trees(k4, 1, 20));
    CHECK_THROWS_AS(enumerate_trees(k4, 2), std::domain_error);
}

TEST_CASE("first counting identity on hand-checked pairs") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    const auto r3 = verify_matrix_tree_i(k3, 1);
    CHECK(r3.status == VerifyStatus::verified);
    CHECK(r3.pseudo_determinant == 9);
    CHECK(r3.t_x == 1);
    CHECK(r3.tree_count == 3);
    CHECK(r3.low_tree_count == 3);
    CHECK(r3.lhs == 9);
    CHECK(r3.rhs == 9);

    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto r4 = verify_matrix_tree_i(k4, 1);
    CHECK(r4.status == VerifyStatus::verified);
    CHECK(r4.pseudo_determinant == 64);
    CHECK(r4.tree_weight_square_sum == 16);
    CHECK(r4.low_tree_weight_square_sum == 4);
    CHECK(r4.lhs == 64);

    // degree zero: the pseudo-determinant of a 1x1 total-degree matrix
    const auto r0 = verify_matrix_tree_i(k4, 0);
    CHECK(r0.status == VerifyStatus::verified);
    CHECK(r0.lhs == 4);
    CHECK(r0.rhs == 4);

    // torsion contributes quadratically: 5184 = (2^2) * 1296
    const ComplexPair rp2(projective_plane_6());
    const auto rp = verify_matrix_tree_i(rp2, 2);
    CHECK(rp.status == VerifyStatus::verified);
    CHECK(rp.pseudo_determinant == 5184);
    CHECK(rp.tree_weight_square_sum == 4);
    CHECK(rp.low_tree_weight_square_sum == 1296);
    CHECK(rp.t_x == 1);

    // hypotheses fail on a disconnected complex
    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    CHECK_FALSE(matrix_tree_hypotheses(split, 1));
    CHECK(verify_matrix_tree_i(split, 1).status == VerifyStatus::vacuous);
    const ComplexPair twotri(SimplicialComplex::from_facets({{0, 1, 2}, {3, 4, 5}}));
    CHECK_FALSE(matrix_tree_hypotheses(twotri, 2));
    CHECK(verify_matrix_tree_i(twotri, 2).status == VerifyStatus::vacuous);

    CHECK_THROWS_AS(verify_matrix_tree_i(k3, 2), std::domain_error);
}

TEST_CASE("second counting identity walks every low-dimensional tree") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    const auto r3 = verify_matrix_tree_ii(k3, 1);
    CHECK(r3.status == VerifyStatus::verified);
    REQUIRE(r3.checks.size() == 3);
    for (const auto& chk : r3.checks) {
        CHECK(chk.t_gamma == 1);
        CHECK(chk.deleted_det == 3);
        CHECK(chk.ok);
    }

    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto r4 = verify_matrix_tree_ii(k4, 1);
    CHECK(r4.status == VerifyStatus::verified);
    REQUIRE(r4.checks.size() == 4);
    for (const auto& chk : r4.checks) CHECK(chk.deleted_det == 16);

    // relative pair: the single empty low tree and a 1x2 boundary block
    const auto d2 = generate_simplex(2);
    const ComplexPair rel(d2, SimplicialComplex::from_facets({{0, 1}}));
    const auto rr = verify_matrix_tree_ii(rel, 1);
    CHECK(rr.status == VerifyStatus::verified);
    CHECK(rr.tree_weight_square_sum == 2);
    REQUIRE(rr.checks.size() == 1);
    CHECK(rr.checks.front().deleted_det == 2);
    CHECK(rr.checks.front().lhs == 2);
    CHECK(rr.checks.front().rhs == 2);

    // degree zero against the degenerate level below
    const auto r0 = verify_matrix_tree_ii(k3, 0);
    CHECK(r0.status == VerifyStatus::verified);
    REQUIRE(r0.checks.size() == 1);
    CHECK(r0.checks.front().deleted_det == 3);

    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    CHECK(verify_matrix_tree_ii(split, 1).status == VerifyStatus::vacuous);
}

TEST_CASE("determinant criterion agrees with the homology conditions") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    const auto r3 = det_submatrix_criterion(k3, 1);
    CHECK(r3.status == VerifyStatus::verified);
    CHECK(r3.candidates_checked == 3);
    CHECK(r3.tree_count == 3);
    CHECK(r3.fixed_complement.size() == 2);

    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto r4 = det_submatrix_criterion(k4, 1);
    CHECK(r4.status == VerifyStatus::verified);
    CHECK(r4.candidates_checked == 20);
    CHECK(r4.tree_count == 16);

    const auto d2 = generate_simplex(2);
    const ComplexPair rel(d2, SimplicialComplex::from_facets({{0, 1}}));
    const auto rr = det_submatrix_criterion(rel, 1);
    CHECK(rr.status == VerifyStatus::verified);
    CHECK(rr.candidates_checked == 2);
    CHECK(rr.tree_count == 2);

    const ComplexPair d3(generate_simplex(3));
    const auto rt = det_submatrix_criterion(d3, 2);
    CHECK(rt.status == VerifyStatus::verified);
    CHECK(rt.tree_count == 4);

    // torsion: the only candidate has |det| = 2 against the unit fixed tree
    const ComplexPair rp2(projective_plane_6());
    const auto rp = det_submatrix_criterion(rp2, 2);
    CHECK(rp.status == VerifyStatus::verified);
    CHECK(rp.candidates_checked == 1);
    CHECK(rp.tree_count == 1);
    CHECK(rp.t_gamma == 1);

    const ComplexPair split(SimplicialComplex::from_facets({{0, 1}, {2, 3}}));
    CHECK(det_submatrix_criterion(split, 1).status == VerifyStatus::vacuous);
    CHECK_THROWS_AS(det_submatrix_criterion(k3, 1, 2), resource_limit);
}

TEST_CASE("paranoid sweeps agree with the fast path on random pairs") {
    int verified_pairs = 0;
    for (int trial = 0; trial < 12; ++trial) {
        const auto x = random_complex(5, 0.6, 12000 + trial);
        if (x.dim() < 0) continue;
        const auto a = random_subcomplex(x, 0.35, 12100 + trial);
        const ComplexPair pair(x, a);
        for (int k = 0; k <= x.dim(); ++k) {
            SpanningEnumeration fast, slow;
            try {
                fast = enumerate_trees(pair, k, 100000, false, false);
                slow = enumerate_trees(pair, k, 100000, true, false);
            } catch (const resource_limit&) {
                continue;
            }
            CHECK(fast.match_count == slow.match_count);
            CHECK(fast.weight_square_sum == slow.weight_square_sum);
            if (matrix_tree_hypotheses(pair, k)) {
                const auto rep = verify_matrix_tree_i(pair, k, 100000);
                CHECK(rep.status == VerifyStatus::verified);
                ++verified_pairs;
            }
        }
    }
    CHECK(verified_pairs > 8);
}
