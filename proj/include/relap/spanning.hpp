/**
 * Spanning trees and forests of a simplicial complex pair (X,A) in a given
 * dimension, and exact verification of the matrix-tree identities that count
 * them.
 *
 * A spanning candidate in dimension k is Υ = X_(k-1) ∪ A_(k) ∪ B where B is a
 * set of relative k-faces. Writing β for Betti numbers under the reduced
 * convention (see homology.hpp: a minimal subcomplex makes them reduced), Υ is
 *
 *   a spanning k-forest when β_k(Υ, A_(k)) = 0 and |B| equals the rank of the
 *   reduced boundary operator ∂_k(X,A) (the middle condition
 *   β_{k-1}(Υ, A_(k)) = β_{k-1}(X, A) then holds automatically), and
 *
 *   a spanning k-tree when additionally β_{k-1}(Υ, A_(k)) = 0.
 *
 * Spanning k-trees exist iff β_{k-1}(X,A) = 0. Each tree carries the weight
 * h_Υ = |torsion of H_{k-1}(Υ, A_(k))|, and with t_X = |torsion H_{k-2}(X,A)|
 * the two counting identities verified here are:
 *
 *   (I)  pseudodet(L^ud_{k-1}(X,A)) · t_X² = (Σ_{Υ ∈ T_k} h_Υ²) (Σ_{Γ ∈ T_{k-1}} h_Γ²)
 *
 *   (II) for every Γ ∈ T_{k-1}:
 *        (Σ_{Υ ∈ T_k} h_Υ²) · h_Γ² = t_X² · det L^ud_{k-1}(X, Γ ∪ A)
 *
 * where L^ud is built from the reduced boundary matrices. The per-candidate
 * determinant criterion behind these: with Γ* a fixed spanning (k-1)-tree and
 * C* its complement among the relative (k-1)-faces, a candidate B is a
 * spanning k-tree iff det ∂_k[C*, B] ≠ 0, in which case
 * |det ∂_k[C*, B]| · t_X = h_B · h_{Γ*}. All identities are checked in exact
 * integer arithmetic, cross-multiplied so no division is needed.
 *
 * Enumeration walks all C(f_k(X,A), |B|) candidates and refuses to start when
 * that count exceeds the caller's budget (resource_limit).
 */

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "relap/chains.hpp"
#include "relap/errors.hpp"
#include "relap/exact.hpp"
#include "relap/homology.hpp"
#include "relap/simplicial_complex.hpp"

namespace relap {

inline constexpr long long default_enumeration_budget = 10'000'000;

/**
 * |B| for every spanning k-forest/tree candidate: the rank of the reduced
 * boundary operator ∂_k(X,A), equivalently f_k(X,A) - β_k(X_(k), A_(k)).
 * Valid for -1 <= k <= dim X.
 */
inline long long spanning_target_size(const ComplexPair& pair, int k) {
    if (k < -1 || k > pair.complex().dim())
        throw std::domain_error("spanning_target_size: k out of range");
    return reduced_relative_boundary_rank(pair, k);
}

/**
 * Number of relative k-faces any spanning k-forest leaves out:
 * β_k(X_(k), A_(k)) = f_k(X,A) - rank ∂_k under the reduced convention.
 */
inline long long forest_complement_size(const ComplexPair& pair, int k) {
    if (k < -1 || k > pair.complex().dim())
        throw std::domain_error("forest_complement_size: k out of range");
    return reduced_relative_face_count(pair, k) -
           reduced_relative_boundary_rank(pair, k);
}

/** Spanning k-trees of (X,A) exist iff β_{k-1}(X,A) = 0 (reduced convention). */
inline bool spanning_trees_exist(const ComplexPair& pair, int k) {
    if (k < -1 || k > pair.complex().dim())
        throw std::domain_error("spanning_trees_exist: k out of range");
    return reduced_relative_betti(pair, k - 1) == 0;
}

namespace detail {

/** X_(k-1) ∪ A_(k): the part shared by every spanning candidate in dimension k. */
inline SimplicialComplex candidate_base(const ComplexPair& pair, int k) {
    std::vector<Face> faces = skeleton(pair.complex(), k - 1).all_faces();
    const SimplicialComplex ak = skeleton(pair.subcomplex(), k);
    const auto extra = ak.all_faces();
    faces.insert(faces.end(), extra.begin(), extra.end());
    return SimplicialComplex::from_faces(faces);
}

/** Candidate complex for an added k-face set B. */
inline SimplicialComplex candidate_complex(const SimplicialComplex& base,
                                           const std::vector<Face>& added) {
    std::vector<Face> faces = base.all_faces();
    faces.insert(faces.end(), added.begin(), added.end());
    return SimplicialComplex::from_faces(faces);
}

/** Visit all size-t index combinations of {0..n-1} in lexicographic order. */
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t t, Fn&& fn) {
    if (t > n) return;
    std::vector<std::size_t> idx(t);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(static_cast<const std::vector<std::size_t>&>(idx));
        // advance to the next combination
        std::size_t i = t;
        while (i > 0 && idx[i - 1] == n - t + (i - 1)) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < t; ++j) idx[j] = idx[j - 1] + 1;
    }
}

inline IntegerMatrix submatrix(const IntegerMatrix& m,
                               const std::vector<std::size_t>& rows,
                               const std::vector<std::size_t>& cols) {
    IntegerMatrix out(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            out.at(i, j) = m.at(rows[i], cols[j]);
    return out;
}

} // namespace detail

/** True iff Υ has the shape of a spanning candidate: X_(k-1) ∪ A_(k) ⊆ Υ ⊆ X, dim Υ <= k. */
inline bool is_spanning_candidate(const ComplexPair& pair, int k,
                                  const SimplicialComplex& upsilon) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("is_spanning_candidate: k out of range");
    if (!pair.complex().contains_complex(upsilon)) return false;
    if (upsilon.dim() > k) return false;
    return upsilon.contains_complex(detail::candidate_base(pair, k));
}

/** Spanning k-forest predicate (homology conditions, reduced convention). */
inline bool is_spanning_forest(const ComplexPair& pair, int k,
                               const SimplicialComplex& upsilon) {
    if (!is_spanning_candidate(pair, k, upsilon)) return false;
    const ComplexPair sub(upsilon, skeleton(pair.subcomplex(), k));
    if (sub.relative_face_count(k) != spanning_target_size(pair, k)) return false;
    return reduced_relative_betti(sub, k) == 0;
}

/** Spanning k-tree predicate: a forest that is also acyclic in degree k-1. */
inline bool is_spanning_tree(const ComplexPair& pair, int k,
                             const SimplicialComplex& upsilon) {
    if (!is_spanning_forest(pair, k, upsilon)) return false;
    const ComplexPair sub(upsilon, skeleton(pair.subcomplex(), k));
    return reduced_relative_betti(sub, k - 1) == 0;
}

struct GreedyForest {
    int k = -1;
    std::vector<Face> removed;   // the complement C* among the relative k-faces
    std::vector<Face> kept;      // relative k-faces of the forest
    SimplicialComplex complex;   // the forest X_(k-1) ∪ A_(k) ∪ kept
};

/**
 * Deterministic spanning k-forest: repeatedly drop a k-face carrying a
 * nonzero coefficient of a kernel vector of ∂_k until the kernel (relative to
 * the k-skeleton) is trivial. Dropping such a face never lowers the rank, so
 * exactly forest_complement_size(pair, k) faces are removed. At k = -1 the
 * forest degenerates to the complex {∅} with the empty face as complement
 * under the reduced convention.
 */
inline GreedyForest greedy_forest(const ComplexPair& pair, int k) {
    if (k < -1 || k > pair.complex().dim())
        throw std::domain_error("greedy_forest: k out of range");
    GreedyForest out;
    out.k = k;
    out.complex = minimal_complex();
    if (k == -1) {
        if (pair.subcomplex_is_minimal()) out.removed.push_back(Face());
        return out;
    }

    const IntegerMatrix m = reduced_relative_boundary_matrix(pair, k);
    std::vector<std::size_t> all_rows(m.rows());
    std::iota(all_rows.begin(), all_rows.end(), std::size_t{0});
    std::vector<std::size_t> active(m.cols());
    std::iota(active.begin(), active.end(), std::size_t{0});

    while (true) {
        const auto kernel = nullspace(detail::submatrix(m, all_rows, active));
        if (kernel.empty()) break;
        const auto& v = kernel.front();
        std::size_t drop = active.size();
        for (std::size_t p = 0; p < active.size(); ++p)
            if (v[p] != 0) { drop = p; break; }
        if (drop == active.size())
            throw invariant_violation("greedy_forest: zero vector reported in the kernel basis");
        out.removed.push_back(m.col_labels[active[drop]]);
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(drop));
    }
    for (std::size_t p : active) out.kept.push_back(m.col_labels[p]);
    std::sort(out.removed.begin(), out.removed.end());
    out.complex = detail::candidate_complex(detail::candidate_base(pair, k), out.kept);

    if (static_cast<long long>(out.removed.size()) != forest_complement_size(pair, k))
        throw invariant_violation(
            "greedy_forest: removal count disagrees with the predicted complement size");
    return out;
}

struct SpanningCandidate {
    std::vector<Face> added;  // B: the relative k-faces of the candidate
    Int weight = 1;           // |torsion of H_{k-1}(Υ, A_(k))| (reduced convention)
};

struct SpanningEnumeration {
    int k = 0;
    long long target_size = 0;      // |B|
    Int candidate_count = 0;        // C(f_k(X,A), |B|)
    long long match_count = 0;      // trees (or forests) found
    Int weight_square_sum = 0;      // Σ weight² over the matches
    bool trees_only = true;
    bool used_det_fast_path = false;
    bool degenerate_level = false;  // k = -1: the single candidate {∅}
    std::vector<SpanningCandidate> items;  // filled when store_items
};

namespace detail {

inline SpanningEnumeration degenerate_level_enumeration(bool trees_only, bool store_items) {
    SpanningEnumeration out;
    out.k = -1;
    out.candidate_count = 1;
    out.match_count = 1;
    out.weight_square_sum = 1;
    out.trees_only = trees_only;
    out.degenerate_level = true;
    if (store_items) out.items.push_back(SpanningCandidate{});
    return out;
}

inline void check_budget(const Int& candidates, long long budget, const std::string& what) {
    if (candidates > Int(budget))
        throw resource_limit(what + " needs " + candidates.str() +
                             " candidates, which exceeds the budget " +
                             std::to_string(budget));
}

/** Torsion order of H_{k-2}(Γ, A_(k-1)) for a level-(k-1) candidate Γ. */
inline Int low_candidate_weight(const ComplexPair& pair, int k,
                                const SimplicialComplex& gamma) {
    if (k - 1 == -1) return 1;  // degenerate level: the zero group
    const ComplexPair sub(gamma, skeleton(pair.subcomplex(), k - 1));
    return reduced_relative_homology(sub, k - 2).torsion_order;
}

} // namespace detail

/**
 * Enumerate the spanning k-trees (trees_only) or k-forests of (X,A).
 *
 * Trees are detected with the determinant criterion whenever a spanning
 * (k-1)-tree exists (β_{k-2}(X,A) = 0); otherwise, and for forests always,
 * the homology conditions are evaluated per candidate. With paranoid set,
 * the fast path re-derives every verdict and weight from the homology
 * definitions and throws invariant_violation on any mismatch.
 */
inline SpanningEnumeration enumerate_spanning(const ComplexPair& pair, int k,
                                              bool trees_only,
                                              long long budget = default_enumeration_budget,
                                              bool paranoid = false,
                                              bool store_items = true) {
    if (k < -1 || k > pair.complex().dim())
        throw std::domain_error("enumerate_spanning: k out of range");
    if (k == -1) return detail::degenerate_level_enumeration(trees_only, store_items);

    SpanningEnumeration out;
    out.k = k;
    out.trees_only = trees_only;
    out.target_size = spanning_target_size(pair, k);
    const std::vector<Face> rel = pair.relative_faces(k);
    out.candidate_count = binomial(static_cast<long long>(rel.size()), out.target_size);
    const bool exist = !trees_only || spanning_trees_exist(pair, k);
    if (!exist && !paranoid) return out;  // β_{k-1}(X,A) ≠ 0: no spanning trees
    detail::check_budget(out.candidate_count, budget, "enumerate_spanning");

    const SimplicialComplex ak = skeleton(pair.subcomplex(), k);
    const SimplicialComplex base = detail::candidate_base(pair, k);

    // Homology-side verdict and weight for one candidate.
    auto homology_verdict = [&](const std::vector<Face>& added,
                                Int* weight) -> bool {
        const SimplicialComplex upsilon = detail::candidate_complex(base, added);
        const ComplexPair sub(upsilon, ak);
        if (reduced_relative_betti(sub, k) != 0) return false;
        const auto low = reduced_relative_homology(sub, k - 1);
        if (trees_only && low.betti != 0) return false;
        if (weight) *weight = low.torsion_order;
        return true;
    };

    const bool fast = trees_only && exist && reduced_relative_betti(pair, k - 2) == 0;
    out.used_det_fast_path = fast;

    IntegerMatrix dk;                      // reduced ∂_k(X,A)
    std::vector<std::size_t> fixed_rows;   // rows C* of the determinant criterion
    Int t_x = 1, t_gamma = 1;
    if (fast) {
        const GreedyForest g = greedy_forest(pair, k - 1);
        if (k - 1 >= 0 && !is_spanning_tree(pair, k - 1, g.complex))
            throw invariant_violation(
                "enumerate_spanning: greedy forest fails the spanning tree conditions "
                "although trees exist in dimension " + std::to_string(k - 1));
        t_gamma = (k - 1 == -1)
                      ? Int(1)
                      : detail::low_candidate_weight(
                            pair, k, g.complex);
        t_x = (k - 2 >= -1) ? reduced_relative_homology(pair, k - 2).torsion_order : Int(1);

        dk = reduced_relative_boundary_matrix(pair, k);
        std::map<Face, std::size_t> row_of;
        for (std::size_t i = 0; i < dk.row_labels.size(); ++i) row_of[dk.row_labels[i]] = i;
        for (const auto& f : g.removed) fixed_rows.push_back(row_of.at(f));
        if (static_cast<long long>(fixed_rows.size()) != out.target_size)
            throw invariant_violation(
                "enumerate_spanning: determinant criterion matrix is not square");
    }

    detail::for_each_combination(
        rel.size(), static_cast<std::size_t>(out.target_size),
        [&](const std::vector<std::size_t>& idx) {
            std::vector<Face> added;
            added.reserve(idx.size());
            for (std::size_t i : idx) added.push_back(rel[i]);

            bool match = false;
            Int weight = 1;
            if (fast) {
                const Int det = exact_det(detail::submatrix(dk, fixed_rows, idx));
                match = det != 0;
                if (match) {
                    const Int scaled = detail::abs_int(det) * t_x;
                    if (scaled % t_gamma != 0)
                        throw invariant_violation(
                            "enumerate_spanning: determinant weight is not divisible "
                            "by the fixed tree weight");
                    weight = scaled / t_gamma;
                }
                if (paranoid) {
                    Int hweight = 1;
                    const bool hmatch = homology_verdict(added, &hweight);
                    if (hmatch != match || (match && hweight != weight))
                        throw invariant_violation(
                            "enumerate_spanning: determinant criterion disagrees with "
                            "the homology conditions");
                }
            } else {
                match = homology_verdict(added, &weight);
                if (match && trees_only && !exist)
                    throw invariant_violation(
                        "enumerate_spanning: found a spanning tree although "
                        "β_{k-1}(X,A) ≠ 0");
            }
            if (match) {
                ++out.match_count;
                out.weight_square_sum += weight * weight;
                if (store_items) out.items.push_back({std::move(added), weight});
            }
        });
    return out;
}

inline SpanningEnumeration enumerate_trees(const ComplexPair& pair, int k,
                                           long long budget = default_enumeration_budget,
                                           bool paranoid = false,
                                           bool store_items = true) {
    return enumerate_spanning(pair, k, true, budget, paranoid, store_items);
}

inline SpanningEnumeration enumerate_forests(const ComplexPair& pair, int k,
                                             long long budget = default_enumeration_budget,
                                             bool store_items = true) {
    return enumerate_spanning(pair, k, false, budget, false, store_items);
}

enum class VerifyStatus { verified, violated, vacuous };

inline const char* to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::verified: return "verified";
        case VerifyStatus::violated: return "violated";
        default: return "vacuous";
    }
}

/** Hypotheses shared by the counting identities: trees exist in dimensions k and k-1. */
inline bool matrix_tree_hypotheses(const ComplexPair& pair, int k) {
    return reduced_relative_betti(pair, k - 1) == 0 &&
           reduced_relative_betti(pair, k - 2) == 0;
}

struct MatrixTreeReportI {
    VerifyStatus status = VerifyStatus::vacuous;
    int k = 0;
    Int pseudo_determinant = 0;          // of the reduced L^ud_{k-1}(X,A)
    Int t_x = 1;                         // |torsion H_{k-2}(X,A)|
    long long tree_count = 0;            // |T_k|
    long long low_tree_count = 0;        // |T_{k-1}|
    Int tree_weight_square_sum = 0;      // Σ_{T_k} h²
    Int low_tree_weight_square_sum = 0;  // Σ_{T_{k-1}} h²
    Int lhs = 0, rhs = 0;                // pseudodet·t_X² vs the product of the sums
};

/**
 * Verify identity (I): pseudodet(L^ud_{k-1}(X,A)) · t_X² equals
 * (Σ_{T_k} h²)(Σ_{T_{k-1}} h²). Vacuous unless trees exist in both dimensions.
 */
inline MatrixTreeReportI verify_matrix_tree_i(const ComplexPair& pair, int k,
                                              long long budget = default_enumeration_budget,
                                              bool paranoid = false) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("verify_matrix_tree_i: k out of range");
    MatrixTreeReportI rep;
    rep.k = k;
    if (!matrix_tree_hypotheses(pair, k)) return rep;

    const IntegerMatrix d = reduced_relative_boundary_matrix(pair, k);
    const IntegerMatrix lap = d * d.transpose();
    rep.pseudo_determinant = pseudo_det(lap, exact_rank(lap));
    rep.t_x = (k - 2 >= -1) ? reduced_relative_homology(pair, k - 2).torsion_order : Int(1);

    const auto high = enumerate_trees(pair, k, budget, paranoid, false);
    const auto low = enumerate_trees(pair, k - 1, budget, paranoid, false);
    rep.tree_count = high.match_count;
    rep.low_tree_count = low.match_count;
    rep.tree_weight_square_sum = high.weight_square_sum;
    rep.low_tree_weight_square_sum = low.weight_square_sum;

    rep.lhs = rep.pseudo_determinant * rep.t_x * rep.t_x;
    rep.rhs = rep.tree_weight_square_sum * rep.low_tree_weight_square_sum;
    rep.status = (rep.lhs == rep.rhs) ? VerifyStatus::verified : VerifyStatus::violated;
    return rep;
}

struct GammaCheck {
    std::vector<Face> gamma_added;  // relative (k-1)-faces of Γ
    Int t_gamma = 1;                // h_Γ
    Int deleted_det = 0;            // det L^ud_{k-1}(X, Γ ∪ A)
    Int lhs = 0, rhs = 0;           // Σh²·h_Γ² vs t_X²·det
    bool ok = false;
};

struct MatrixTreeReportII {
    VerifyStatus status = VerifyStatus::vacuous;
    int k = 0;
    Int t_x = 1;
    long long tree_count = 0;
    Int tree_weight_square_sum = 0;
    std::vector<GammaCheck> checks;  // one per Γ ∈ T_{k-1}
};

/**
 * Verify identity (II) for every spanning (k-1)-tree Γ:
 * (Σ_{T_k} h²) · h_Γ² = t_X² · det L^ud_{k-1}(X, Γ ∪ A), the Laplacian built
 * from the reduced boundary matrix of the pair (X, Γ ∪ A).
 */
inline MatrixTreeReportII verify_matrix_tree_ii(const ComplexPair& pair, int k,
                                                long long budget = default_enumeration_budget,
                                                bool paranoid = false) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("verify_matrix_tree_ii: k out of range");
    MatrixTreeReportII rep;
    rep.k = k;
    if (!matrix_tree_hypotheses(pair, k)) return rep;

    rep.t_x = (k - 2 >= -1) ? reduced_relative_homology(pair, k - 2).torsion_order : Int(1);
    const auto high = enumerate_trees(pair, k, budget, paranoid, false);
    rep.tree_count = high.match_count;
    rep.tree_weight_square_sum = high.weight_square_sum;

    const auto low = enumerate_trees(pair, k - 1, budget, paranoid, true);
    const SimplicialComplex base_low =
        (k - 1 == -1) ? minimal_complex() : detail::candidate_base(pair, k - 1);

    bool all_ok = true;
    for (const auto& gamma : low.items) {
        GammaCheck chk;
        chk.gamma_added = gamma.added;
        chk.t_gamma = gamma.weight;

        const SimplicialComplex gamma_complex =
            detail::candidate_complex(base_low, gamma.added);
        std::vector<Face> s_faces = gamma_complex.all_faces();
        const auto a_faces = pair.subcomplex().all_faces();
        s_faces.insert(s_faces.end(), a_faces.begin(), a_faces.end());
        const ComplexPair deleted(pair.complex(), SimplicialComplex::from_faces(s_faces));

        const IntegerMatrix d = reduced_relative_boundary_matrix(deleted, k);
        chk.deleted_det = exact_det(d * d.transpose());

        chk.lhs = rep.tree_weight_square_sum * chk.t_gamma * chk.t_gamma;
        chk.rhs = rep.t_x * rep.t_x * chk.deleted_det;
        chk.ok = chk.lhs == chk.rhs;
        all_ok = all_ok && chk.ok;
        rep.checks.push_back(std::move(chk));
    }
    rep.status = (all_ok && !rep.checks.empty()) ? VerifyStatus::verified
                                                 : VerifyStatus::violated;
    return rep;
}

struct DetCriterionReport {
    VerifyStatus status = VerifyStatus::vacuous;
    int k = 0;
    long long candidates_checked = 0;
    long long tree_count = 0;
    Int t_x = 1, t_gamma = 1;
    std::vector<Face> fixed_complement;  // C*
};

/**
 * Exhaustive check of the determinant criterion against the homology
 * definitions: for every candidate B, det ∂_k[C*, B] ≠ 0 iff B spans a
 * k-tree, and |det| · t_X = h_B · h_{Γ*} for trees. Vacuous unless trees
 * exist in dimensions k and k-1.
 */
inline DetCriterionReport det_submatrix_criterion(const ComplexPair& pair, int k,
                                                  long long budget = default_enumeration_budget) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("det_submatrix_criterion: k out of range");
    DetCriterionReport rep;
    rep.k = k;
    if (!matrix_tree_hypotheses(pair, k)) return rep;

    const long long target = spanning_target_size(pair, k);
    const std::vector<Face> rel = pair.relative_faces(k);
    detail::check_budget(binomial(static_cast<long long>(rel.size()), target), budget,
                         "det_submatrix_criterion");

    const GreedyForest g = greedy_forest(pair, k - 1);
    if (k - 1 >= 0 && !is_spanning_tree(pair, k - 1, g.complex))
        throw invariant_violation(
            "det_submatrix_criterion: greedy forest is not a spanning tree");
    rep.fixed_complement = g.removed;
    rep.t_gamma = detail::low_candidate_weight(pair, k, g.complex);
    rep.t_x = (k - 2 >= -1) ? reduced_relative_homology(pair, k - 2).torsion_order : Int(1);

    const IntegerMatrix dk = reduced_relative_boundary_matrix(pair, k);
    std::map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < dk.row_labels.size(); ++i) row_of[dk.row_labels[i]] = i;
    std::vector<std::size_t> rows;
    for (const auto& f : g.removed) rows.push_back(row_of.at(f));
    if (static_cast<long long>(rows.size()) != target)
        throw invariant_violation("det_submatrix_criterion: criterion matrix is not square");

    const SimplicialComplex ak = skeleton(pair.subcomplex(), k);
    const SimplicialComplex base = detail::candidate_base(pair, k);
    bool all_ok = true;

    detail::for_each_combination(
        rel.size(), static_cast<std::size_t>(target),
        [&](const std::vector<std::size_t>& idx) {
            ++rep.candidates_checked;
            std::vector<Face> added;
            for (std::size_t i : idx) added.push_back(rel[i]);
            const Int det = exact_det(detail::submatrix(dk, rows, idx));

            const ComplexPair sub(detail::candidate_complex(base, added), ak);
            const bool forest = sub.relative_face_count(k) == target &&
                                reduced_relative_betti(sub, k) == 0;
            const auto low = reduced_relative_homology(sub, k - 1);
            const bool tree = forest && low.betti == 0;
            if (tree) ++rep.tree_count;

            const bool det_matches = (det != 0) == tree;
            const bool weight_matches =
                !tree || detail::abs_int(det) * rep.t_x == low.torsion_order * rep.t_gamma;
            all_ok = all_ok && det_matches && weight_matches;
        });

    rep.status = all_ok ? VerifyStatus::verified : VerifyStatus::violated;
    return rep;
}

} // namespace relap
