/**
 * Integral homology of complex pairs, computed exactly.
 *
 *   - smith_normal_form: diagonalization over Z with the divisibility chain
 *     α_1 | α_2 | ... (pivoting on the entry of least magnitude to limit
 *     coefficient growth);
 *   - relative_homology((X,A), k): Betti number from exact ranks
 *     (β_k = f_k - rank ∂_k - rank ∂_{k+1}) and torsion from the invariant
 *     factors of ∂_{k+1} that exceed 1;
 *   - euler_poincare_check: Σ(-1)^i f_i(X,A) = Σ(-1)^i β_i(X,A), exactly.
 *
 * Conventions: H_k(X,A) = 0 for k outside [0, dim X] (the relative chain
 * complex has C_{-1}(X,A) = 0 because {} ∈ A); |H| of the zero group is 1.
 */

#pragma once

#include <vector>

#include "relap/chains.hpp"
#include "relap/exact.hpp"
#include "relap/integer_matrix.hpp"
#include "relap/simplicial_complex.hpp"

namespace relap {

struct SmithForm {
    std::vector<Int> invariant_factors;  // positive, each dividing the next
    int rank = 0;                        // = number of invariant factors
};

/** Smith normal form over Z. */
inline SmithForm smith_normal_form(const IntegerMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    auto abs_lt = [](const Int& x, const Int& y) {
        return detail::abs_int(x) < detail::abs_int(y);
    };

    std::size_t t = 0;
    const std::size_t tmax = std::min(nr, nc);
    while (t < tmax) {
        // locate the nonzero entry of least magnitude in the trailing block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (a[i][j] != 0 && (pi == nr || abs_lt(a[i][j], a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr) break;  // block is zero: done
        std::swap(a[t], a[pi]);
        for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][t], a[i][pj]);

        // clear row and column t by repeated remainder steps
        bool clean = true;
        for (std::size_t i = t + 1; i < nr; ++i) {
            if (a[i][t] == 0) continue;
            const Int q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
            if (a[i][t] != 0) clean = false;  // remainder smaller than pivot
        }
        for (std::size_t j = t + 1; j < nc; ++j) {
            if (a[t][j] == 0) continue;
            const Int q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
            if (a[t][j] != 0) clean = false;
        }
        if (!clean) continue;  // re-pick the (now smaller) pivot

        // enforce divisibility: pivot must divide the whole trailing block
        bool divides_all = true;
        for (std::size_t i = t + 1; i < nr && divides_all; ++i)
            for (std::size_t j = t + 1; j < nc; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    // fold that row into row t and restart the cleanup
                    for (std::size_t l = t; l < nc; ++l) a[t][l] += a[i][l];
                    divides_all = false;
                    break;
                }
        if (!divides_all) continue;
        ++t;
    }

    SmithForm out;
    for (std::size_t i = 0; i < t; ++i)
        out.invariant_factors.push_back(detail::abs_int(a[i][i]));
    out.rank = static_cast<int>(t);
    return out;
}

struct HomologySummary {
    int k = 0;
    long long betti = 0;
    std::vector<Int> torsion_factors;  // invariant factors of ∂_{k+1} exceeding 1
    Int torsion_order = 1;             // product of torsion_factors

    /** |H| when the group is finite (betti 0); the zero group has order 1. */
    bool is_finite() const { return betti == 0; }
};

/**
 * H_k(X,A) computed exactly. Total in k: out-of-range degrees give the zero
 * group. Betti numbers use exact ranks over Q; torsion uses the Smith form
 * of ∂_{k+1}(X,A).
 */
inline HomologySummary relative_homology(const ComplexPair& pair, int k) {
    HomologySummary out;
    out.k = k;
    const int dim = pair.complex().dim();
    if (k < 0 || k > dim) return out;

    const long long fk = pair.relative_face_count(k);
    const int rank_dk = (k == 0) ? 0 : exact_rank(relative_boundary_matrix(pair, k));
    if (k == dim) {
        out.betti = fk - rank_dk;
        return out;
    }
    const IntegerMatrix dk1 = relative_boundary_matrix(pair, k + 1);
    const SmithForm snf = smith_normal_form(dk1);
    out.betti = fk - rank_dk - snf.rank;
    for (const auto& alpha : snf.invariant_factors)
        if (alpha > 1) {
            out.torsion_factors.push_back(alpha);
            out.torsion_order *= alpha;
        }
    return out;
}

/** Torsion order |H_k(X,A) / free part|. */
inline Int torsion_order_mod_free(const ComplexPair& pair, int k) {
    return relative_homology(pair, k).torsion_order;
}

/** All homology summaries for k = 0..dim X. */
inline std::vector<HomologySummary> all_relative_homology(const ComplexPair& pair) {
    std::vector<HomologySummary> out;
    for (int k = 0; k <= pair.complex().dim(); ++k)
        out.push_back(relative_homology(pair, k));
    return out;
}

/** Exact Euler–Poincaré identity Σ(-1)^i f_i(X,A) = Σ(-1)^i β_i(X,A). */
inline bool euler_poincare_check(const ComplexPair& pair) {
    long long faces = 0, betti = 0;
    for (int i = 0; i <= pair.complex().dim(); ++i) {
        const long long sign = (i % 2 == 0) ? 1 : -1;
        faces += sign * pair.relative_face_count(i);
        betti += sign * relative_homology(pair, i).betti;
    }
    return faces == betti;
}

/**
 * Reduced homology of an absolute complex, from the augmented boundary
 * matrices (∂_0 keeps its empty-face row). Total in k.
 */
inline HomologySummary reduced_homology(const SimplicialComplex& x, int k) {
    HomologySummary out;
    out.k = k;
    const int dim = x.dim();
    if (k < -1 || k > dim) return out;

    const long long fk = x.face_count(k);
    const int rank_dk = (k <= -1) ? 0 : exact_rank(boundary_matrix(x, k));
    if (k == dim) {
        out.betti = fk - rank_dk;
        return out;
    }
    const SmithForm snf = smith_normal_form(boundary_matrix(x, k + 1));
    out.betti = fk - rank_dk - snf.rank;
    for (const auto& alpha : snf.invariant_factors)
        if (alpha > 1) {
            out.torsion_factors.push_back(alpha);
            out.torsion_order *= alpha;
        }
    return out;
}

/**
 * f_k of a pair under the reduced convention: for a minimal subcomplex the
 * empty face counts (f_{-1} = 1); otherwise the strict relative count.
 */
inline long long reduced_relative_face_count(const ComplexPair& pair, int k) {
    if (pair.subcomplex_is_minimal()) return pair.complex().face_count(k);
    return pair.relative_face_count(k);
}

/** Rank of the reduced-convention boundary operator; zero outside 0..dim. */
inline int reduced_relative_boundary_rank(const ComplexPair& pair, int k) {
    if (k < 0 || k > pair.complex().dim()) return 0;
    return exact_rank(reduced_relative_boundary_matrix(pair, k));
}

/**
 * Betti number under the reduced convention: for a minimal subcomplex this is
 * the reduced Betti number of the complex, otherwise the relative one. The
 * conventions agree for k >= 1; this is the convention under which spanning
 * tree counts specialize to the classical graph case. Total in k.
 */
inline long long reduced_relative_betti(const ComplexPair& pair, int k) {
    if (k < -1 || k > pair.complex().dim()) return 0;
    return reduced_relative_face_count(pair, k) -
           reduced_relative_boundary_rank(pair, k) -
           reduced_relative_boundary_rank(pair, k + 1);
}

/** Full homology summary under the reduced convention. Total in k >= -1. */
inline HomologySummary reduced_relative_homology(const ComplexPair& pair, int k) {
    HomologySummary out;
    out.k = k;
    const int dim = pair.complex().dim();
    if (k < -1 || k > dim) return out;

    const long long fk = reduced_relative_face_count(pair, k);
    const int rank_dk = reduced_relative_boundary_rank(pair, k);
    if (k == dim) {
        out.betti = fk - rank_dk;
        return out;
    }
    const SmithForm snf = smith_normal_form(reduced_relative_boundary_matrix(pair, k + 1));
    out.betti = fk - rank_dk - snf.rank;
    for (const auto& alpha : snf.invariant_factors)
        if (alpha > 1) {
            out.torsion_factors.push_back(alpha);
            out.torsion_order *= alpha;
        }
    return out;
}

} // namespace relap
