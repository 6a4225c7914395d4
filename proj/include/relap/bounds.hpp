/**
 * Lower bounds for the spectral gap μ_k(X,A) of the full Laplacian L_k(X,A),
 * evaluated against the measured gap, plus the interval bracket for pure
 * complexes relative to their discrete boundary.
 *
 * Notation used throughout: X' is the derived complex of the pair at level k
 * (see x_prime), n' its vertex count, h' the largest dimension of a missing
 * face of X', and |σ ∩ A| the number of (k-1)-subfaces of σ lying in A.
 *
 * The bounds:
 *
 *   join model    μ_k >= min_{σ ∈ X'_k}((h'+1) deg_{X'}(σ) - |σ ∩ A|)
 *                        + (h'+1)(k+1) - h'n'
 *                 with the weak form (h'+1)(k+1) - h'n' - max_σ |σ ∩ A|;
 *                 equality in the refined form exactly when X' is the join of
 *                 n'-k-1 copies of the h'-simplex boundary with a full simplex
 *                 and |σ ∩ A| is constant.
 *
 *   derived flag  X' a flag complex:
 *                 μ_k >= (k+1) λ_2(G_{X'}) - k n' - max_σ |σ ∩ A|.
 *
 *   pure boundary X pure of dimension d with discrete boundary B(X) and
 *                 H_d(X, B(X)) ≠ 0:
 *                 min_σ |σ ∩ B(X)| <= μ_d(X, B(X)) <= max_σ |σ ∩ B(X)|.
 *
 *   interference  μ_k(X,A) >= μ_k(X) - max_σ(|σ ∩ A| + #{τ : σ ∩ τ ∈ A_{k-1}}),
 *                 the maximum over relative k-faces σ, with τ ranging over the
 *                 other relative k-faces.
 *
 *   flag pair     X itself flag: the interference bound with
 *                 μ_k(X) >= (k+1) λ_2(G_X) - k n substituted.
 *
 * Whenever a bound is strictly positive it certifies H_k(X,A;Q) = 0; every
 * such certificate is cross-checked against the exact Betti number and an
 * invariant_violation is thrown if they disagree.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "relap/chains.hpp"
#include "relap/errors.hpp"
#include "relap/exact.hpp"
#include "relap/generators.hpp"
#include "relap/homology.hpp"
#include "relap/simplicial_complex.hpp"
#include "relap/spectra.hpp"

namespace relap {

namespace detail {

inline double gap_tolerance(double scale) { return 1e-8 * std::max(1.0, std::abs(scale)); }

/** |σ_{k-1} ∩ A_{k-1}|: the number of (k-1)-subfaces of σ lying in a. */
inline long long boundary_overlap(const SimplicialComplex& a, const Face& sigma) {
    long long c = 0;
    for (const auto& eta : sigma.boundary())
        if (a.contains(eta)) ++c;
    return c;
}

/**
 * Spectral proxy for isomorphism: equal f-vectors and, in every degree, equal
 * (up to 1e-6 relative) eigenvalue lists of the full absolute Laplacians.
 */
inline bool spectra_match(const SimplicialComplex& x, const SimplicialComplex& y) {
    if (x.dim() != y.dim()) return false;
    for (int j = -1; j <= x.dim(); ++j)
        if (x.face_count(j) != y.face_count(j)) return false;
    const ComplexPair px(x, minimal_complex());
    const ComplexPair py(y, minimal_complex());
    for (int j = 0; j <= x.dim(); ++j) {
        const auto ex = symmetric_eigenvalues(laplacian(px, j, LaplacianKind::full).matrix);
        const auto ey = symmetric_eigenvalues(laplacian(py, j, LaplacianKind::full).matrix);
        if (ex.size() != ey.size()) return false;
        for (std::size_t i = 0; i < ex.size(); ++i)
            if (std::abs(ex[i] - ey[i]) > 1e-6 * std::max(1.0, std::abs(ex[i])))
                return false;
    }
    return true;
}

} // namespace detail

/**
 * Ensure a positive spectral-gap bound is consistent with exact homology:
 * μ_k(X,A) > 0 forces H_k(X,A;Q) = 0.
 */
inline void assert_vanishing_certificate(const ComplexPair& pair, int k, const char* name) {
    if (relative_homology(pair, k).betti != 0)
        throw invariant_violation(
            std::string(name) +
            ": positive spectral-gap bound contradicts nonzero exact homology in degree " +
            std::to_string(k));
}

// ---------------------------------------------------------------------------
// Join-model bound
// ---------------------------------------------------------------------------

struct JoinModelBound {
    int k = 0;
    bool vacuous = true;
    std::string reason;            // why the bound does not apply
    long long n_prime = 0;
    long long h_prime = 0;         // largest missing-face dimension of X'
    bool degenerate_h = false;     // X' is a full simplex: no missing face, h' := 0
    long long refined_bound = 0;
    long long weak_bound = 0;
    double measured_gap = 0.0;
    bool refined_holds = false;
    bool weak_holds = false;
    bool equality = false;               // measured gap meets the refined bound
    bool characterization_applicable = false;
    bool model_match = false;            // X' matches the extremal join model
    bool constant_overlap = false;       // |σ ∩ A| constant over σ ∈ X'_k
    bool predicted_equality = false;     // model_match && constant_overlap
    bool certifies_vanishing = false;
};

inline JoinModelBound join_model_bound(const ComplexPair& pair, int k) {
    if (k < 1 || k > pair.complex().dim())
        throw std::domain_error("join_model_bound: k must lie in [1, dim X]");
    if (!is_discrete_boundary(pair, k))
        throw std::domain_error(
            "join_model_bound: subcomplex is not a k-th discrete boundary");
    JoinModelBound rep;
    rep.k = k;
    if (pair.relative_face_count(k) == 0) {
        rep.reason = "no relative k-faces";
        return rep;
    }

    const SimplicialComplex xp = x_prime(pair, k);
    rep.n_prime = xp.vertex_count();
    const auto h = missing_face_dim(xp);
    rep.degenerate_h = !h.has_value();
    rep.h_prime = h.value_or(0);

    const auto& a = pair.subcomplex();
    long long min_term = std::numeric_limits<long long>::max();
    long long max_overlap = 0;
    long long first_overlap = -1;
    bool constant = true;
    for (const auto& sigma : xp.faces(k)) {
        const long long ov = detail::boundary_overlap(a, sigma);
        min_term = std::min(min_term, (rep.h_prime + 1) * xp.degree(sigma) - ov);
        max_overlap = std::max(max_overlap, ov);
        if (first_overlap < 0) first_overlap = ov;
        constant = constant && (ov == first_overlap);
    }
    const long long base = (rep.h_prime + 1) * (k + 1) - rep.h_prime * rep.n_prime;
    rep.refined_bound = min_term + base;
    rep.weak_bound = base - max_overlap;
    rep.constant_overlap = constant;

    rep.measured_gap = spectral_gap(pair, k);
    const double tol = detail::gap_tolerance(rep.measured_gap);
    rep.refined_holds = static_cast<double>(rep.refined_bound) <= rep.measured_gap + tol;
    rep.weak_holds = static_cast<double>(rep.weak_bound) <= rep.measured_gap + tol;
    rep.equality = std::abs(rep.measured_gap - static_cast<double>(rep.refined_bound)) <= tol;

    if (!rep.degenerate_h && rep.n_prime - k - 1 >= 0 && base >= 0) {
        try {
            const SimplicialComplex model =
                generate_model_join(static_cast<int>(rep.h_prime),
                                    static_cast<int>(rep.n_prime), k);
            rep.characterization_applicable = true;
            rep.model_match = detail::spectra_match(xp, model);
            rep.predicted_equality = rep.model_match && rep.constant_overlap;
        } catch (const std::invalid_argument&) {
            // no extremal model exists for these parameters
        }
    }

    if (rep.refined_bound > 0) {
        rep.certifies_vanishing = true;
        assert_vanishing_certificate(pair, k, "join_model_bound");
    }
    rep.vacuous = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Derived flag bound
// ---------------------------------------------------------------------------

struct DerivedFlagBound {
    int k = 0;
    bool vacuous = true;
    std::string reason;
    long long n_prime = 0;
    double lambda2 = 0.0;       // algebraic connectivity of the 1-skeleton of X'
    long long max_overlap = 0;  // max_σ |σ ∩ A|
    double bound = 0.0;
    double measured_gap = 0.0;
    bool holds = false;
    bool certifies_vanishing = false;
};

inline DerivedFlagBound derived_flag_bound(const ComplexPair& pair, int k) {
    if (k < 1 || k > pair.complex().dim())
        throw std::domain_error("derived_flag_bound: k must lie in [1, dim X]");
    if (!is_flag(pair.complex()))
        throw std::domain_error("derived_flag_bound: complex is not a flag complex");
    if (!is_discrete_boundary(pair, k))
        throw std::domain_error(
            "derived_flag_bound: subcomplex is not a k-th discrete boundary");
    DerivedFlagBound rep;
    rep.k = k;
    if (pair.relative_face_count(k) == 0) {
        rep.reason = "no relative k-faces";
        return rep;
    }
    const SimplicialComplex xp = x_prime(pair, k);
    if (xp.vertex_count() < 2) {
        rep.reason = "derived complex has fewer than two vertices";
        return rep;
    }

    rep.n_prime = xp.vertex_count();
    rep.lambda2 = lambda_2(xp);
    const auto& a = pair.subcomplex();
    for (const auto& sigma : xp.faces(k))
        rep.max_overlap = std::max(rep.max_overlap, detail::boundary_overlap(a, sigma));

    rep.bound = (k + 1) * rep.lambda2 -
                static_cast<double>(k) * static_cast<double>(rep.n_prime) -
                static_cast<double>(rep.max_overlap);
    rep.measured_gap = spectral_gap(pair, k);
    rep.holds = rep.bound <= rep.measured_gap + detail::gap_tolerance(rep.measured_gap);

    if (rep.bound > detail::gap_tolerance((k + 1) * rep.lambda2)) {
        rep.certifies_vanishing = true;
        assert_vanishing_certificate(pair, k, "derived_flag_bound");
    }
    rep.vacuous = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Pure-boundary interval
// ---------------------------------------------------------------------------

struct PureBoundaryInterval {
    int d = 0;
    bool vacuous = true;
    std::string reason;
    long long betti = 0;  // β_d(X, B(X)); the bracket requires it to be positive
    long long min_overlap = 0, max_overlap = 0;  // of |σ ∩ B(X)| over σ ∈ X_d
    double measured_gap = 0.0;
    bool holds = false;
};

/**
 * Interval bracket min_σ |σ ∩ B(X)| <= μ_d(X, B(X)) <= max_σ |σ ∩ B(X)| for a
 * pure d-complex whose top relative homology against its discrete boundary is
 * nonzero.
 */
inline PureBoundaryInterval pure_boundary_interval(const SimplicialComplex& x) {
    if (x.dim() < 1)
        throw std::domain_error("pure_boundary_interval: complex has dimension < 1");
    if (!x.is_pure())
        throw std::domain_error("pure_boundary_interval: complex is not pure");
    PureBoundaryInterval rep;
    rep.d = x.dim();
    const SimplicialComplex b = discrete_boundary(x);
    const ComplexPair pair(x, b);
    rep.betti = relative_homology(pair, rep.d).betti;
    if (rep.betti <= 0) {
        rep.reason =
            "hypothesis-not-met: top relative homology against the discrete "
            "boundary vanishes";
        return rep;
    }

    rep.min_overlap = std::numeric_limits<long long>::max();
    for (const auto& sigma : x.faces(rep.d)) {
        const long long ov = detail::boundary_overlap(b, sigma);
        rep.min_overlap = std::min(rep.min_overlap, ov);
        rep.max_overlap = std::max(rep.max_overlap, ov);
    }
    rep.measured_gap = spectral_gap(ComplexPair(x, minimal_complex()), rep.d);
    const double tol = detail::gap_tolerance(rep.measured_gap);
    rep.holds = static_cast<double>(rep.min_overlap) - tol <= rep.measured_gap &&
                rep.measured_gap <= static_cast<double>(rep.max_overlap) + tol;
    rep.vacuous = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Interference bound and its flag-complex variant
// ---------------------------------------------------------------------------

namespace detail {

/** max_σ(|σ ∩ A| + #{τ ≠ σ relative : σ ∩ τ ∈ A_{k-1}}). */
inline long long max_interference(const ComplexPair& pair, int k) {
    const auto rel = pair.relative_faces(k);
    const auto& a = pair.subcomplex();
    long long best = 0;
    for (const auto& sigma : rel) {
        long long v = boundary_overlap(a, sigma);
        for (const auto& tau : rel) {
            if (tau == sigma) continue;
            const Face meet = face_intersection(sigma, tau);
            if (meet.dim() == k - 1 && a.contains(meet)) ++v;
        }
        best = std::max(best, v);
    }
    return best;
}

} // namespace detail

struct InterferenceBound {
    int k = 0;
    bool vacuous = true;
    std::string reason;
    double absolute_gap = 0.0;      // μ_k(X), i.e. of the pair (X, {∅})
    long long max_interference = 0;
    double bound = 0.0;
    double measured_gap = 0.0;
    bool holds = false;
    bool certifies_vanishing = false;
};

inline InterferenceBound interference_bound(const ComplexPair& pair, int k) {
    if (k < 1 || k > pair.complex().dim())
        throw std::domain_error("interference_bound: k must lie in [1, dim X]");
    InterferenceBound rep;
    rep.k = k;
    if (pair.relative_face_count(k) == 0) {
        rep.reason = "no relative k-faces";
        return rep;
    }
    rep.absolute_gap = spectral_gap(ComplexPair(pair.complex(), minimal_complex()), k);
    rep.max_interference = detail::max_interference(pair, k);
    rep.bound = rep.absolute_gap - static_cast<double>(rep.max_interference);
    rep.measured_gap = spectral_gap(pair, k);
    rep.holds = rep.bound <= rep.measured_gap + detail::gap_tolerance(rep.measured_gap);

    if (rep.bound > detail::gap_tolerance(rep.absolute_gap)) {
        rep.certifies_vanishing = true;
        assert_vanishing_certificate(pair, k, "interference_bound");
    }
    rep.vacuous = false;
    return rep;
}

struct FlagInterferenceBound {
    int k = 0;
    bool vacuous = true;
    std::string reason;
    long long n = 0;
    double lambda2 = 0.0;  // algebraic connectivity of the 1-skeleton of X
    long long max_interference = 0;
    double bound = 0.0;
    double measured_gap = 0.0;
    bool holds = false;
    bool certifies_vanishing = false;
};

/** The interference bound with μ_k(X) >= (k+1)λ_2(G_X) - kn substituted (X flag). */
inline FlagInterferenceBound flag_interference_bound(const ComplexPair& pair, int k) {
    if (k < 1 || k > pair.complex().dim())
        throw std::domain_error("flag_interference_bound: k must lie in [1, dim X]");
    if (!is_flag(pair.complex()))
        throw std::domain_error(
            "flag_interference_bound: complex is not a flag complex");
    FlagInterferenceBound rep;
    rep.k = k;
    if (pair.complex().vertex_count() < 2) {
        rep.reason = "complex has fewer than two vertices";
        return rep;
    }
    if (pair.relative_face_count(k) == 0) {
        rep.reason = "no relative k-faces";
        return rep;
    }
    rep.n = pair.complex().vertex_count();
    rep.lambda2 = lambda_2(pair.complex());
    rep.max_interference = detail::max_interference(pair, k);
    rep.bound = (k + 1) * rep.lambda2 -
                static_cast<double>(k) * static_cast<double>(rep.n) -
                static_cast<double>(rep.max_interference);
    rep.measured_gap = spectral_gap(pair, k);
    rep.holds = rep.bound <= rep.measured_gap + detail::gap_tolerance(rep.measured_gap);

    if (rep.bound > detail::gap_tolerance((k + 1) * rep.lambda2)) {
        rep.certifies_vanishing = true;
        assert_vanishing_certificate(pair, k, "flag_interference_bound");
    }
    rep.vacuous = false;
    return rep;
}

// ---------------------------------------------------------------------------
// Additive compound
// ---------------------------------------------------------------------------

/**
 * k-th additive compound of a square matrix: the matrix of the induced action
 * on k-vectors, indexed by the size-k subsets of the ground set in
 * lexicographic order. Its eigenvalues are exactly the sums of k distinct
 * eigenvalues of the input, so the smallest eigenvalue of the compound of a
 * symmetric matrix is the sum of the k smallest eigenvalues.
 */
inline IntegerMatrix additive_compound(const IntegerMatrix& m, int k) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("additive_compound: matrix not square");
    const std::size_t n = m.rows();
    if (k < 1 || static_cast<std::size_t>(k) > n)
        throw std::invalid_argument("additive_compound: order out of range");

    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur(static_cast<std::size_t>(k));
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    while (true) {
        subsets.push_back(cur);
        std::size_t i = cur.size();
        while (i > 0 && cur[i - 1] == n - cur.size() + (i - 1)) --i;
        if (i == 0) break;
        ++cur[i - 1];
        for (std::size_t j = i; j < cur.size(); ++j) cur[j] = cur[j - 1] + 1;
    }

    const std::size_t nn = subsets.size();
    IntegerMatrix out(nn, nn);
    for (std::size_t a = 0; a < nn; ++a) {
        const auto& s = subsets[a];
        for (std::size_t i : s) out.at(a, a) += m.at(i, i);
        for (std::size_t b = 0; b < nn; ++b) {
            if (a == b) continue;
            const auto& t = subsets[b];
            // entry nonzero only when the subsets differ in a single element
            std::vector<std::size_t> sd, td;
            std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(sd));
            std::set_difference(t.begin(), t.end(), s.begin(), s.end(), std::back_inserter(td));
            if (sd.size() != 1) continue;
            const std::size_t i = sd[0], j = td[0];
            const auto pos_s = static_cast<std::size_t>(
                std::lower_bound(s.begin(), s.end(), i) - s.begin());
            const auto pos_t = static_cast<std::size_t>(
                std::lower_bound(t.begin(), t.end(), j) - t.begin());
            const int sign = ((pos_s + pos_t) % 2 == 0) ? 1 : -1;
            out.at(a, b) = sign * m.at(i, j);
        }
    }
    return out;
}

} // namespace relap
