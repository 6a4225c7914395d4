/**
 * Generators for the named complex families used throughout the test suite
 * and CLI, plus the orientability check for d-circuits.
 *
 * Families:
 *   simplex(m)            full simplex Δ^m on vertices 0..m (m >= -1)
 *   skeleton_simplex(m,p) p-skeleton of Δ^m
 *   d_path(d,m)           m consecutive d-faces, σ_i = {i-1,...,i-1+d}
 *   d_circuit(d,m)        cyclic analogue; d=1: cycle C_m (m>=3); d=2:
 *                         orientable triangle strip on two vertex rows
 *                         (m = 2p, p >= 3)
 *   d_star(d,m)           m d-faces sharing a common (d-1)-face
 *   model_join(h,n,k)     (Δ^h_(h-1))^{*(n-k-1)} * Δ^{(h+1)(k+1)-hn-1},
 *                         the extremal complex for the degree-based gap bound
 */

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "relap/simplicial_complex.hpp"

namespace relap {

/** Full simplex Δ^m on m+1 vertices; m = -1 gives the minimal complex. */
inline SimplicialComplex generate_simplex(int m) {
    if (m < -1) throw std::invalid_argument("simplex: m must be >= -1");
    if (m == -1) return minimal_complex();
    std::vector<int> verts(m + 1);
    for (int i = 0; i <= m; ++i) verts[i] = i;
    return SimplicialComplex::from_facets({verts});
}

/** p-skeleton of Δ^m. */
inline SimplicialComplex generate_skeleton_simplex(int m, int p) {
    if (p < -1) throw std::invalid_argument("skeleton_simplex: p must be >= -1");
    return skeleton(generate_simplex(m), p);
}

/** d-path of length m: facets {i-1, ..., i-1+d}, i = 1..m. */
inline SimplicialComplex generate_d_path(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("d_path: requires d >= 1, m >= 1");
    std::vector<std::vector<int>> facets;
    for (int i = 0; i < m; ++i) {
        std::vector<int> f(d + 1);
        for (int j = 0; j <= d; ++j) f[j] = i + j;
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

/**
 * Orientable d-circuit of length m. d=1: the cycle graph C_m (m >= 3).
 * d=2: the cyclic triangle strip on vertex rows {0..p-1} and {p..2p-1}
 * with m = 2p triangles (even m >= 6); consecutive triangles share an edge
 * and the strip closes into an annulus, hence orientable.
 */
inline SimplicialComplex generate_d_circuit(int d, int m) {
    if (d == 1) {
        if (m < 3) throw std::invalid_argument("d_circuit: 1-circuits need m >= 3");
        std::vector<std::vector<int>> facets;
        for (int i = 0; i < m; ++i) facets.push_back({i, (i + 1) % m});
        return SimplicialComplex::from_facets(facets);
    }
    if (d == 2) {
        if (m < 6 || m % 2 != 0)
            throw std::invalid_argument("d_circuit: 2-circuits need even m >= 6");
        const int p = m / 2;
        auto u = [&](int i) { return i % p; };
        auto w = [&](int i) { return p + i % p; };
        std::vector<std::vector<int>> facets;
        for (int i = 0; i < p; ++i) {
            facets.push_back({u(i), w(i), u(i + 1)});
            facets.push_back({w(i), u(i + 1), w(i + 1)});
        }
        return SimplicialComplex::from_facets(facets);
    }
    throw std::invalid_argument("d_circuit: only d = 1 and d = 2 are constructed");
}

/** d-star with m facets: {0..d-1} ∪ {d-1+i}, i = 1..m (d >= 1, m >= 1). */
inline SimplicialComplex generate_d_star(int d, int m) {
    if (d < 1 || m < 1) throw std::invalid_argument("d_star: requires d >= 1, m >= 1");
    std::vector<std::vector<int>> facets;
    for (int i = 1; i <= m; ++i) {
        std::vector<int> f;
        for (int j = 0; j < d; ++j) f.push_back(j);
        f.push_back(d - 1 + i);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(facets);
}

/**
 * model_join(h, n, k): join of n-k-1 copies of the (h-1)-skeleton of Δ^h
 * with the simplex Δ^{(h+1)(k+1)-hn-1}. Requires h >= 1, 0 <= k <= n-1 and
 * (h+1)(k+1) - hn >= 0. The result has exactly n vertices.
 */
inline SimplicialComplex generate_model_join(int h, int n, int k) {
    if (h < 1) throw std::invalid_argument("model_join: h must be >= 1");
    if (k < 0 || k > n - 1) throw std::invalid_argument("model_join: requires 0 <= k <= n-1");
    const int tail = (h + 1) * (k + 1) - h * n;  // vertex count of the simplex factor
    if (tail < 0)
        throw std::invalid_argument("model_join: requires (h+1)(k+1) - hn >= 0");
    SimplicialComplex out = minimal_complex();
    const SimplicialComplex factor = generate_skeleton_simplex(h, h - 1);
    for (int i = 0; i < n - k - 1; ++i) out = join(out, factor);
    out = join(out, generate_simplex(tail - 1));
    if (out.vertex_count() != n)
        throw invariant_violation("model_join: vertex count mismatch");
    return out;
}

/**
 * Check that a pure d-complex is a d-circuit (facet adjacency graph, where
 * facets are adjacent when they share d vertices, is a single cycle through
 * all m >= 3 facets) and return whether it is orientable: facets can be
 * signed so that adjacent facets induce opposite orientations on their
 * shared (d-1)-face. Throws domain_error when X is not a d-circuit.
 */
inline bool is_orientable_circuit(const SimplicialComplex& x) {
    if (x.dim() < 1) throw std::domain_error("is_orientable_circuit: dimension must be >= 1");
    if (!x.is_pure()) throw std::domain_error("is_orientable_circuit: complex is not pure");
    const int d = x.dim();
    const std::vector<Face> fs(x.faces(d).begin(), x.faces(d).end());
    const int m = static_cast<int>(fs.size());
    if (m < 3) throw std::domain_error("is_orientable_circuit: needs at least 3 facets");

    // adjacency: facets sharing exactly d vertices
    std::vector<std::vector<int>> adj(m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (static_cast<int>(face_intersection(fs[i], fs[j]).size()) == d) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    for (int i = 0; i < m; ++i)
        if (adj[i].size() != 2)
            throw std::domain_error("is_orientable_circuit: facet adjacency is not a cycle");
    // walk the cycle and confirm it passes through every facet
    std::vector<int> order{0, adj[0][0]};
    while (static_cast<int>(order.size()) < m) {
        const int cur = order.back(), prev = order[order.size() - 2];
        const int nxt = (adj[cur][0] == prev) ? adj[cur][1] : adj[cur][0];
        if (nxt == 0) break;
        order.push_back(nxt);
    }
    if (static_cast<int>(order.size()) != m)
        throw std::domain_error("is_orientable_circuit: facet adjacency is not a single cycle");

    // propagate orientations around the cycle; orientable iff consistent
    auto orientation_sign = [](const Face& eta, const Face& sigma) {
        // sign of eta inside sigma: (-1)^i where sigma \ eta is the i-th vertex
        const Face diff = face_difference(sigma, eta);
        const int missing = diff.vertices()[0];
        int i = 0;
        for (int v : sigma.vertices()) {
            if (v == missing) break;
            ++i;
        }
        return (i % 2 == 0) ? 1 : -1;
    };
    std::vector<int> eps(m, 0);
    eps[order[0]] = 1;
    for (int t = 0; t < m; ++t) {
        const int a = order[t], b = order[(t + 1) % m];
        const Face shared = face_intersection(fs[a], fs[b]);
        const int induced = -eps[a] * orientation_sign(shared, fs[a]) *
                            orientation_sign(shared, fs[b]);
        if (eps[b] == 0) {
            eps[b] = induced;
        } else if (eps[b] != induced) {
            return false;  // closing edge inconsistent: non-orientable
        }
    }
    return true;
}

} // namespace relap
