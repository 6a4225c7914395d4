/**
 * Seeded random complexes, subcomplexes, and admissible pairs. All draws use
 * an explicit mt19937_64 seed and a fixed iteration order, so a given seed
 * reproduces the same complex on every run.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "relap/simplicial_complex.hpp"

namespace relap {

namespace detail {

/** Uniform double in [0,1) from the top 53 bits (stable across platforms). */
inline double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace detail

/**
 * Random complex on the vertex set {0..n-1}: every vertex is present; a
 * candidate face of dimension >= 1 whose boundary is already present is
 * included with probability `density`, sweeping dimensions bottom-up in
 * lexicographic order.
 */
inline SimplicialComplex random_complex(int n, double density, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random_complex: n must be >= 0");
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("random_complex: density must lie in [0,1]");
    std::mt19937_64 rng(seed);

    std::vector<Face> members;
    for (int v = 0; v < n; ++v) members.push_back(Face{v});
    std::vector<Face> current = members;  // faces of the previous dimension
    for (int d = 1; d < n && !current.empty(); ++d) {
        // candidates: lex-ordered (d+1)-subsets whose boundary is present
        std::set<Face> present(members.begin(), members.end());
        std::vector<Face> next;
        std::vector<int> idx(static_cast<std::size_t>(d) + 1);
        for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
        while (true) {
            Face cand(std::vector<int>(idx.begin(), idx.end()));
            bool closed = true;
            for (const auto& eta : cand.boundary())
                if (!present.count(eta)) { closed = false; break; }
            if (closed && detail::unit_draw(rng) < density) {
                members.push_back(cand);
                next.push_back(cand);
            }
            // next lex (d+1)-subset of {0..n-1}
            int i = static_cast<int>(idx.size());
            while (i > 0 && idx[i - 1] == n - static_cast<int>(idx.size()) + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = static_cast<std::size_t>(i); j < idx.size(); ++j)
                idx[j] = idx[j - 1] + 1;
        }
        current = std::move(next);
    }
    return SimplicialComplex::from_faces(members);
}

/**
 * Random subcomplex: sweeping faces bottom-up, a face whose boundary has been
 * kept is kept with probability `density`. May come out minimal ({∅}).
 */
inline SimplicialComplex random_subcomplex(const SimplicialComplex& x, double density,
                                           std::uint64_t seed) {
    if (density < 0.0 || density > 1.0)
        throw std::invalid_argument("random_subcomplex: density must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::set<Face> kept;
    kept.insert(Face());
    std::vector<Face> members;
    for (int d = 0; d <= x.dim(); ++d)
        for (const auto& f : x.faces(d)) {
            bool closed = true;
            for (const auto& eta : f.boundary())
                if (!kept.count(eta)) { closed = false; break; }
            if (closed && detail::unit_draw(rng) < density) {
                kept.insert(f);
                members.push_back(f);
            }
        }
    return SimplicialComplex::from_faces(members);
}

/**
 * Random subcomplex A making (X, A) a k-th discrete boundary: a random subset
 * of the (k-1)-faces of degree <= 1 (taken with their closures) together with
 * a random batch of faces of dimension <= k-2. For k = 0 only the minimal
 * subcomplex qualifies.
 */
inline SimplicialComplex random_discrete_boundary(const SimplicialComplex& x, int k,
                                                  double density, std::uint64_t seed) {
    if (k < 0) throw std::invalid_argument("random_discrete_boundary: k must be >= 0");
    if (k == 0) return minimal_complex();
    std::mt19937_64 rng(seed);
    std::vector<Face> members;
    for (const auto& f : x.faces(k - 1))
        if (x.degree(f) <= 1 && detail::unit_draw(rng) < density) members.push_back(f);
    for (int d = 0; d <= std::min(k - 2, x.dim()); ++d)
        for (const auto& f : x.faces(d))
            if (detail::unit_draw(rng) < density) members.push_back(f);
    return SimplicialComplex::from_faces(members);
}

} // namespace relap
