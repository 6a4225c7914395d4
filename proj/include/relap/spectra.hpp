/**
 * Combinatorial Laplacians of complex pairs and their spectra.
 *
 * L_k(X,A) = ∂_{k+1}∂*_{k+1} + ∂*_k ∂_k on the relative k-chains. Every
 * Laplacian is built twice — once as a product of boundary matrices and once
 * entry-by-entry from the closed form below — and the two integer matrices
 * must agree exactly (invariant_violation otherwise):
 *
 *   up-down   diag deg_X(σ); off-diag -(-1)^ε(σ,τ) when σ ∪ τ ∈ X_{k+1}
 *   down-up   diag |σ_{k-1} \ A_{k-1}|; off-diag (-1)^ε when
 *             σ ∩ τ ∈ X_{k-1} \ A_{k-1}
 *   full      diag deg_X(σ) + |σ_{k-1} \ A_{k-1}|; off-diag (-1)^ε when
 *             σ ∪ τ ∉ X_{k+1} and σ ∩ τ ∈ X_{k-1} \ A_{k-1}, and -(-1)^ε
 *             when σ ∪ τ ∈ X_{k+1} and σ ∩ τ ∈ A_{k-1}
 *
 * Spectra are computed with a dense symmetric eigensolver, but every
 * zero/nonzero decision is anchored to exact integer ranks: the number of
 * floating eigenvalues below τ_zero = 1e-8 · max(1, λ_max) must equal the
 * exact nullity, or the library refuses to continue.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "relap/chains.hpp"
#include "relap/errors.hpp"
#include "relap/exact.hpp"
#include "relap/homology.hpp"

namespace relap {

enum class LaplacianKind { up_down, down_up, full };

inline const char* to_string(LaplacianKind kind) {
    switch (kind) {
        case LaplacianKind::up_down: return "ud";
        case LaplacianKind::down_up: return "du";
        default: return "full";
    }
}

struct LaplacianPart {
    LaplacianKind kind = LaplacianKind::full;
    int k = 0;
    IntegerMatrix matrix;  // symmetric, labeled by X_k \ A_k
};

namespace detail {

/** Closed-form Laplacian entries (see header comment). */
inline IntegerMatrix laplacian_closed_form(const ComplexPair& pair, int k,
                                           LaplacianKind kind) {
    const auto& x = pair.complex();
    const auto& a = pair.subcomplex();
    const std::vector<Face> basis = pair.relative_faces(k);
    const std::size_t n = basis.size();
    IntegerMatrix m(n, n);
    m.row_labels = basis;
    m.col_labels = basis;

    auto down_degree = [&](const Face& sigma) {
        long long cnt = 0;
        for (const auto& eta : sigma.boundary())
            if (!a.contains(eta)) ++cnt;
        return Int(cnt);
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Face& sigma = basis[i];
        const Int up = Int(x.degree(sigma));
        switch (kind) {
            case LaplacianKind::up_down: m.at(i, i) = up; break;
            case LaplacianKind::down_up: m.at(i, i) = down_degree(sigma); break;
            case LaplacianKind::full: m.at(i, i) = up + down_degree(sigma); break;
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            const Face& tau = basis[j];
            const Face meet = face_intersection(sigma, tau);
            if (static_cast<int>(meet.size()) + 1 != static_cast<int>(sigma.size()))
                continue;  // entries vanish unless the faces meet in codimension one
            const int sgn = (epsilon(sigma, tau) % 2 == 0) ? 1 : -1;
            const bool joined = x.contains(face_union(sigma, tau));
            Int value = 0;
            switch (kind) {
                case LaplacianKind::up_down:
                    if (joined) value = -sgn;
                    break;
                case LaplacianKind::down_up:
                    if (x.contains(meet) && !a.contains(meet)) value = sgn;
                    break;
                case LaplacianKind::full:
                    if (!joined && x.contains(meet) && !a.contains(meet)) value = sgn;
                    else if (joined && a.contains(meet)) value = -sgn;
                    break;
            }
            m.at(i, j) = value;
            m.at(j, i) = value;
        }
    }
    return m;
}

/** Product-form Laplacian from the relative boundary matrices. */
inline IntegerMatrix laplacian_product_form(const ComplexPair& pair, int k,
                                            LaplacianKind kind) {
    const std::vector<Face> basis = pair.relative_faces(k);
    IntegerMatrix up(basis.size(), basis.size());
    IntegerMatrix down(basis.size(), basis.size());
    if (k + 1 <= pair.complex().dim()) {
        const IntegerMatrix d = relative_boundary_matrix(pair, k + 1);
        up = d * d.transpose();
    }
    {
        const IntegerMatrix d = relative_boundary_matrix(pair, k);
        down = d.transpose() * d;
    }
    IntegerMatrix m = (kind == LaplacianKind::up_down) ? up
                      : (kind == LaplacianKind::down_up) ? down
                                                         : up + down;
    m.row_labels = basis;
    m.col_labels = basis;
    return m;
}

} // namespace detail

/**
 * Laplacian part of (X,A) in degree k (0 <= k <= dim X), computed by both
 * routes and cross-checked exactly.
 */
inline LaplacianPart laplacian(const ComplexPair& pair, int k, LaplacianKind kind) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("laplacian: k out of range");
    IntegerMatrix closed = detail::laplacian_closed_form(pair, k, kind);
    const IntegerMatrix product = detail::laplacian_product_form(pair, k, kind);
    if (closed != product)
        throw invariant_violation(
            "laplacian: closed-form and product-form matrices disagree (k=" +
            std::to_string(k) + ", part=" + to_string(kind) + ")");
    LaplacianPart out;
    out.kind = kind;
    out.k = k;
    out.matrix = std::move(closed);
    return out;
}

/** Convert to a floating matrix for the eigensolver. */
inline Eigen::MatrixXd to_eigen(const IntegerMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                static_cast<double>(m.at(i, j));
    return e;
}

/** Eigenvalues of a symmetric integer matrix, ascending. */
inline std::vector<double> symmetric_eigenvalues(const IntegerMatrix& m) {
    if (m.rows() == 0) return {};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_eigen(m),
                                                          Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw invariant_violation("symmetric_eigenvalues: eigensolver failed");
    std::vector<double> out(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + m.rows());
    std::sort(out.begin(), out.end());
    return out;
}

struct SpectrumReport {
    std::vector<double> eigenvalues;  // ascending
    int exact_rank = 0;
    Int pseudo_determinant = 1;  // exact product of the nonzero eigenvalues
    int zero_multiplicity = 0;   // matrix size - exact rank
    double tau_zero = 0.0;       // floating zero threshold used for the cross-check
};

/**
 * Spectrum of a Laplacian part. The floating eigenvalue count below τ_zero is
 * cross-checked against the exact nullity (hard error on disagreement); the
 * pseudo-determinant comes from the exact characteristic polynomial.
 */
inline SpectrumReport spectrum(const LaplacianPart& part) {
    SpectrumReport rep;
    rep.eigenvalues = symmetric_eigenvalues(part.matrix);
    rep.exact_rank = exact_rank(part.matrix);
    rep.zero_multiplicity = static_cast<int>(part.matrix.rows()) - rep.exact_rank;
    rep.pseudo_determinant = pseudo_det(part.matrix, rep.exact_rank);

    const double lambda_max = rep.eigenvalues.empty() ? 0.0 : rep.eigenvalues.back();
    rep.tau_zero = 1e-8 * std::max(1.0, std::abs(lambda_max));
    int floating_zeros = 0;
    for (double ev : rep.eigenvalues)
        if (std::abs(ev) < rep.tau_zero) ++floating_zeros;
    if (floating_zeros != rep.zero_multiplicity)
        throw invariant_violation(
            "spectrum: floating zero count " + std::to_string(floating_zeros) +
            " does not match exact nullity " + std::to_string(rep.zero_multiplicity));
    return rep;
}

/**
 * Spectral gap μ_k(X,A): least eigenvalue of the full L_k(X,A). Returns +inf
 * when there are no relative k-faces (empty Laplacian).
 */
inline double spectral_gap(const ComplexPair& pair, int k) {
    const LaplacianPart part = laplacian(pair, k, LaplacianKind::full);
    if (part.matrix.rows() == 0) return std::numeric_limits<double>::infinity();
    return symmetric_eigenvalues(part.matrix).front();
}

/**
 * χ_{k-1}(X,A) = Σ_{j>=k} (-1)^{j-k} (f_j - β_j): the rank of ∂_k(X,A).
 * Both sides are computed and must agree exactly. Valid for 0 <= k <= dim+1.
 */
inline long long chi(const ComplexPair& pair, int k) {
    const int dim = pair.complex().dim();
    if (k < 0 || k > dim + 1) throw std::domain_error("chi: k out of range");
    long long alternating = 0;
    for (int j = k; j <= dim; ++j) {
        const long long sign = ((j - k) % 2 == 0) ? 1 : -1;
        alternating += sign * (pair.relative_face_count(j) -
                               relative_homology(pair, j).betti);
    }
    const long long rank =
        (k == 0 || k > dim) ? 0 : exact_rank(relative_boundary_matrix(pair, k));
    if (alternating != rank)
        throw invariant_violation("chi: alternating sum " + std::to_string(alternating) +
                                  " != rank of boundary operator " + std::to_string(rank));
    return alternating;
}

/**
 * Exact zero multiplicities (nullities) of L^ud_k and L^du_k:
 * (f_k - χ_k, f_k - χ_{k-1}). Cross-checked against the exact ranks of the
 * Laplacian matrices themselves.
 */
inline std::pair<long long, long long> zero_multiplicities(const ComplexPair& pair, int k) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("zero_multiplicities: k out of range");
    const long long fk = pair.relative_face_count(k);
    const long long chi_k = chi(pair, k + 1);
    const long long chi_km1 = chi(pair, k);

    const int rank_ud = exact_rank(laplacian(pair, k, LaplacianKind::up_down).matrix);
    const int rank_du = exact_rank(laplacian(pair, k, LaplacianKind::down_up).matrix);
    if (rank_ud != chi_k || rank_du != chi_km1)
        throw invariant_violation("zero_multiplicities: Laplacian ranks disagree with χ");
    return {fk - chi_k, fk - chi_km1};
}

struct LambdaMaxReport {
    double lambda_max = 0.0;     // measured top eigenvalue of L^ud_k
    Int upper_bound = 0;         // (k+2) max_{σ ∈ X_k} deg_X(σ)
    bool upper_holds = false;
    Rational lower_bound = 0;    // Σ_{σ ∈ X_k \ A_k} deg_X(σ) / χ_k
    bool lower_vacuous = true;   // χ_k = 0: no lower bound claimed
    bool lower_holds = true;
};

/**
 * Graph Laplacian of the 1-skeleton: rows/cols indexed by the vertices of X,
 * diagonal the number of incident edges, off-diagonal -1 per edge.
 */
inline IntegerMatrix graph_laplacian(const SimplicialComplex& x) {
    const std::vector<int> verts = x.vertices();
    std::map<int, std::size_t> index;
    for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
    IntegerMatrix m(verts.size(), verts.size());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        m.row_labels.push_back(Face{verts[i]});
        m.col_labels.push_back(Face{verts[i]});
    }
    for (const auto& e : x.faces(1)) {
        const std::size_t u = index.at(e.vertices()[0]);
        const std::size_t v = index.at(e.vertices()[1]);
        m.at(u, u) += 1;
        m.at(v, v) += 1;
        m.at(u, v) -= 1;
        m.at(v, u) -= 1;
    }
    return m;
}

/**
 * Second-smallest eigenvalue of the graph Laplacian of the 1-skeleton
 * (algebraic connectivity). Requires at least two vertices.
 */
inline double lambda_2(const SimplicialComplex& x) {
    if (x.vertex_count() < 2)
        throw std::domain_error("lambda_2: need at least two vertices");
    const auto evs = symmetric_eigenvalues(graph_laplacian(x));
    return evs[1];
}

/** Evaluate the λ_max bounds for L^ud_k(X,A). */
inline LambdaMaxReport lambda_max_bounds(const ComplexPair& pair, int k) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("lambda_max_bounds: k out of range");
    LambdaMaxReport rep;
    const auto evs = symmetric_eigenvalues(laplacian(pair, k, LaplacianKind::up_down).matrix);
    rep.lambda_max = evs.empty() ? 0.0 : evs.back();

    Int max_deg = 0;
    for (const auto& sigma : pair.complex().faces(k))
        max_deg = std::max(max_deg, Int(pair.complex().degree(sigma)));
    rep.upper_bound = Int(k + 2) * max_deg;
    const double tol = 1e-8 * std::max(1.0, rep.lambda_max);
    rep.upper_holds =
        rep.lambda_max <= static_cast<double>(rep.upper_bound) + tol;

    const long long chi_k = chi(pair, k + 1);
    if (chi_k > 0) {
        Int total_deg = 0;
        for (const auto& sigma : pair.relative_faces(k))
            total_deg += Int(pair.complex().degree(sigma));
        rep.lower_bound = Rational(total_deg, Int(chi_k));
        rep.lower_vacuous = false;
        rep.lower_holds =
            static_cast<double>(rep.lower_bound) <= rep.lambda_max + tol;
    }
    return rep;
}

} // namespace relap
