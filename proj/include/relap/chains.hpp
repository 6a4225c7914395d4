/**
 * Chain groups and boundary operators.
 *
 * Sign conventions (fixed by the increasing-vertex orientation):
 *   - boundary_sign(η, σ) = (-1)^i when η is σ with its i-th vertex deleted;
 *   - epsilon(σ, τ), for same-dimension faces meeting in codimension one,
 *     counts the shared vertices lying strictly between the two exchanged
 *     vertices; the Laplacian entry signs are (-1)^epsilon.
 *
 * Matrices:
 *   - boundary_matrix(X, k): absolute ∂_k, rows X_{k-1}, columns X_k. For
 *     k = 0 the single row is the empty face (augmented chain complex), so
 *     absolute homology computed from these matrices is reduced homology.
 *   - relative_boundary_matrix((X,A), k): rows X_{k-1} \ A_{k-1}, columns
 *     X_k \ A_k — the submatrix of the absolute operator. Since {} ∈ A for
 *     every subcomplex A, the relative ∂_0 always has zero rows.
 *   - boundary_submatrix(X, k, B, C): ∂_k[B, C] with chosen columns B ⊆ X_k
 *     and rows C ⊆ X_{k-1} (the empty face is allowed in C).
 *
 * All labels are attached to the matrices in lexicographic face order.
 */

#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "relap/integer_matrix.hpp"
#include "relap/simplicial_complex.hpp"

namespace relap {

/** (-1)^i for η = σ minus its i-th vertex; domain error unless η ⊂ σ in codimension 1. */
inline int boundary_sign(const Face& eta, const Face& sigma) {
    if (eta.dim() != sigma.dim() - 1 || !eta.is_subface_of(sigma))
        throw std::domain_error("boundary_sign: not a codimension-one subface");
    const Face diff = face_difference(sigma, eta);
    const int missing = diff.vertices()[0];
    int i = 0;
    for (int v : sigma.vertices()) {
        if (v == missing) break;
        ++i;
    }
    return (i % 2 == 0) ? 1 : -1;
}

/**
 * epsilon(σ, τ) for equal-dimension faces with |σ ∩ τ| = dim σ: the number of
 * shared vertices strictly between the two exchanged vertices.
 */
inline int epsilon(const Face& sigma, const Face& tau) {
    if (sigma.dim() != tau.dim())
        throw std::domain_error("epsilon: faces must have equal dimension");
    const Face shared = face_intersection(sigma, tau);
    if (static_cast<int>(shared.size()) + 1 != static_cast<int>(sigma.size()))
        throw std::domain_error("epsilon: faces must meet in codimension one");
    const int u = face_difference(sigma, tau).vertices()[0];
    const int v = face_difference(tau, sigma).vertices()[0];
    const int lo = std::min(u, v), hi = std::max(u, v);
    int count = 0;
    for (int w : shared.vertices())
        if (lo < w && w < hi) ++count;
    return count;
}

/** Absolute boundary matrix ∂_k; requires 0 <= k <= dim X. */
inline IntegerMatrix boundary_matrix(const SimplicialComplex& x, int k) {
    if (k < 0 || k > x.dim())
        throw std::domain_error("boundary_matrix: k out of range");
    const std::vector<Face> rows(x.faces(k - 1).begin(), x.faces(k - 1).end());
    const std::vector<Face> cols(x.faces(k).begin(), x.faces(k).end());
    IntegerMatrix m(rows.size(), cols.size());
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& eta : cols[j].boundary())
            m.at(row_index.at(eta), j) = boundary_sign(eta, cols[j]);
    m.row_labels = rows;
    m.col_labels = cols;
    return m;
}

/**
 * Relative boundary matrix ∂_k(X,A): the rows and columns of ∂_k(X) indexed
 * by faces outside A. Requires 0 <= k <= dim X.
 */
inline IntegerMatrix relative_boundary_matrix(const ComplexPair& pair, int k) {
    if (k < 0 || k > pair.complex().dim())
        throw std::domain_error("relative_boundary_matrix: k out of range");
    const std::vector<Face> rows = pair.relative_faces(k - 1);
    const std::vector<Face> cols = pair.relative_faces(k);
    IntegerMatrix m(rows.size(), cols.size());
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (const auto& eta : cols[j].boundary()) {
            auto it = row_index.find(eta);
            if (it != row_index.end()) m.at(it->second, j) = boundary_sign(eta, cols[j]);
        }
    m.row_labels = rows;
    m.col_labels = cols;
    return m;
}

/**
 * Boundary matrix of a pair under the reduced convention: when the subcomplex
 * is minimal ({∅}) the empty face keeps its row (so ∂_0 is the augmented
 * all-ones row and the chain complex computes reduced homology); otherwise
 * this is the strict relative matrix. The two conventions agree for k >= 1.
 */
inline IntegerMatrix reduced_relative_boundary_matrix(const ComplexPair& pair, int k) {
    if (pair.subcomplex_is_minimal()) return boundary_matrix(pair.complex(), k);
    return relative_boundary_matrix(pair, k);
}

/**
 * Square submatrix ∂_k[B, C] of the absolute boundary operator with columns
 * B ⊆ X_k and rows C ⊆ X_{k-1} (|B| = |C| required; both are sorted).
 */
inline IntegerMatrix boundary_submatrix(const SimplicialComplex& x, int k,
                                        std::vector<Face> B, std::vector<Face> C) {
    if (B.size() != C.size())
        throw std::domain_error("boundary_submatrix: |B| != |C|");
    std::sort(B.begin(), B.end());
    std::sort(C.begin(), C.end());
    for (const auto& f : B)
        if (f.dim() != k || !x.contains(f))
            throw std::domain_error("boundary_submatrix: B must consist of k-faces of X");
    for (const auto& f : C)
        if (f.dim() != k - 1 || !x.contains(f))
            throw std::domain_error("boundary_submatrix: C must consist of (k-1)-faces of X");
    IntegerMatrix m(C.size(), B.size());
    std::map<Face, std::size_t> row_index;
    for (std::size_t i = 0; i < C.size(); ++i) row_index[C[i]] = i;
    for (std::size_t j = 0; j < B.size(); ++j)
        for (const auto& eta : B[j].boundary()) {
            auto it = row_index.find(eta);
            if (it != row_index.end()) m.at(it->second, j) = boundary_sign(eta, B[j]);
        }
    m.row_labels = C;
    m.col_labels = B;
    return m;
}

} // namespace relap
