/**
 * SimplicialComplex / ComplexPair and the core combinatorial operations:
 * construction from facets, skeletons, degrees, links, joins, missing faces,
 * flag (clique) complexes, discrete boundaries and the derived complex X'.
 *
 * Conventions:
 *   - every complex contains the empty face {} (dimension -1); the complex
 *     whose only face is {} is the minimal complex, written {∅} in prose;
 *   - faces are stored per dimension in lexicographically ordered sets, so
 *     all iteration is deterministic;
 *   - dim(X) is the largest face dimension (-1 for the minimal complex).
 */

#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relap/errors.hpp"
#include "relap/face.hpp"

namespace relap {

class SimplicialComplex {
public:
    /** The minimal complex {∅}. */
    SimplicialComplex() : by_dim_(1) { by_dim_[0].insert(Face()); }

    /**
     * Build the downward closure of a facet list. Facet lists may contain
     * redundant (non-maximal) faces; vertex lists with duplicates are
     * rejected by the Face constructor. An empty list yields {∅}.
     */
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets) {
        SimplicialComplex x;
        for (const auto& f : facets) x.insert_closed(Face(f));
        return x;
    }

    /** Downward closure of a set of faces. */
    static SimplicialComplex from_faces(const std::vector<Face>& faces) {
        SimplicialComplex x;
        for (const auto& f : faces) x.insert_closed(f);
        return x;
    }

    /** Largest face dimension; -1 for {∅}. */
    int dim() const { return static_cast<int>(by_dim_.size()) - 2; }

    /** Faces of dimension k (empty set when k is out of range). */
    const std::set<Face>& faces(int k) const {
        static const std::set<Face> kEmpty;
        const int idx = k + 1;
        if (idx < 0 || idx >= static_cast<int>(by_dim_.size())) return kEmpty;
        return by_dim_[idx];
    }

    /** Number of k-dimensional faces. */
    long long face_count(int k) const { return static_cast<long long>(faces(k).size()); }

    bool contains(const Face& f) const {
        const auto& level = faces(f.dim());
        return level.find(f) != level.end();
    }

    /** All faces of every dimension >= -1, in (dimension, lex) order. */
    std::vector<Face> all_faces() const {
        std::vector<Face> out;
        for (const auto& level : by_dim_)
            for (const auto& f : level) out.push_back(f);
        return out;
    }

    /** Vertex labels present in the complex, increasing. */
    std::vector<int> vertices() const {
        std::vector<int> out;
        for (const auto& f : faces(0)) out.push_back(f.vertices()[0]);
        return out;
    }

    long long vertex_count() const { return face_count(0); }

    /** Maximal faces, in (dimension, lex) order. */
    std::vector<Face> facets() const {
        std::vector<Face> out;
        for (const auto& level : by_dim_)
            for (const auto& f : level)
                if (!has_proper_coface(f)) out.push_back(f);
        return out;
    }

    /** True when every facet has dimension dim(). */
    bool is_pure() const {
        for (const auto& f : facets())
            if (f.dim() != dim()) return false;
        return true;
    }

    /** Subcomplex test: every face of `other` is a face of this complex. */
    bool contains_complex(const SimplicialComplex& other) const {
        for (int k = 0; k <= other.dim(); ++k)
            for (const auto& f : other.faces(k))
                if (!contains(f)) return false;
        return true;
    }

    /** Number of (k+1)-dimensional cofaces of a face of dimension k. */
    long long degree(const Face& f) const {
        if (!contains(f)) throw std::domain_error("degree: face not in complex " + f.to_string());
        long long n = 0;
        for (const auto& g : faces(f.dim() + 1))
            if (f.is_subface_of(g)) ++n;
        return n;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.by_dim_ == b.by_dim_;
    }
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

private:
    // by_dim_[d + 1] holds the faces of dimension d; by_dim_[0] = { {} }.
    std::vector<std::set<Face>> by_dim_;

    bool has_proper_coface(const Face& f) const {
        for (const auto& g : faces(f.dim() + 1))
            if (f.is_subface_of(g)) return true;
        return false;
    }

    void insert_closed(const Face& f) {
        for (const auto& s : f.all_subfaces()) {
            const int idx = s.dim() + 1;
            if (idx >= static_cast<int>(by_dim_.size())) by_dim_.resize(idx + 1);
            by_dim_[idx].insert(s);
        }
    }

    friend SimplicialComplex skeleton(const SimplicialComplex&, int);
};

/** The minimal complex {∅}, the canonical subcomplex for absolute objects. */
inline SimplicialComplex minimal_complex() { return SimplicialComplex(); }

/** True iff X = {∅}. */
inline bool is_minimal(const SimplicialComplex& x) { return x.dim() == -1; }

/** p-skeleton X_(p): all faces of dimension <= p. Requires p >= -1. */
inline SimplicialComplex skeleton(const SimplicialComplex& x, int p) {
    if (p < -1) throw std::domain_error("skeleton: dimension must be >= -1");
    SimplicialComplex out;
    out.by_dim_ = std::vector<std::set<Face>>(
        x.by_dim_.begin(),
        x.by_dim_.begin() + std::min<std::size_t>(x.by_dim_.size(), p + 2));
    if (out.by_dim_.empty()) out.by_dim_.resize(1), out.by_dim_[0].insert(Face());
    return out;
}

/** lk_X(σ) = { τ ∈ X : τ ∪ σ ∈ X, τ ∩ σ = {} }. */
inline SimplicialComplex link(const SimplicialComplex& x, const Face& sigma) {
    if (!x.contains(sigma)) throw std::domain_error("link: face not in complex");
    std::vector<Face> members;
    for (const auto& tau : x.all_faces()) {
        if (!face_intersection(tau, sigma).empty()) continue;
        if (x.contains(face_union(tau, sigma))) members.push_back(tau);
    }
    // The link is closed under subsets, so from_faces only re-validates.
    return SimplicialComplex::from_faces(members);
}

/**
 * Join X * Y. The second operand's vertices are relabelled by shifting them
 * past the largest vertex of X (preserving their relative order), so the two
 * vertex sets are disjoint; faces are all unions σ ∪ τ'.
 */
inline SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
    int offset = 0;
    if (x.vertex_count() > 0) offset = x.vertices().back() + 1;
    std::vector<Face> members;
    for (const auto& sigma : x.all_faces()) {
        for (const auto& tau : y.all_faces()) {
            std::vector<int> verts = sigma.vertices();
            for (int v : tau.vertices()) verts.push_back(v + offset);
            members.push_back(Face(std::move(verts)));
        }
    }
    return SimplicialComplex::from_faces(members);
}

/**
 * Dimension h(X) of a largest missing face: a vertex subset that is not a
 * face although all of its proper subsets are. Returns nullopt when X is a
 * full simplex on its vertex set (no missing face). Requires a vertex.
 *
 * A missing face has at most dim(X)+2 vertices (its boundary lies in X), so
 * candidates are enumerated by size over the vertex set.
 */
inline std::optional<int> missing_face_dim(const SimplicialComplex& x) {
    if (x.vertex_count() == 0)
        throw std::domain_error("missing_face_dim: complex has no vertices");
    const std::vector<int> verts = x.vertices();
    const int n = static_cast<int>(verts.size());
    std::optional<int> best;
    const int max_size = std::min(n, x.dim() + 2);
    for (int s = 2; s <= max_size; ++s) {
        // enumerate s-subsets of verts lexicographically
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            std::vector<int> vs(s);
            for (int i = 0; i < s; ++i) vs[i] = verts[idx[i]];
            Face f(vs);
            if (!x.contains(f)) {
                bool all_proper_in = true;
                for (const auto& b : f.boundary())
                    if (!x.contains(b)) { all_proper_in = false; break; }
                if (all_proper_in) {
                    if (!best || f.dim() > *best) best = f.dim();
                }
            }
            int i = s - 1;
            while (i >= 0 && idx[i] == n - s + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return best;
}

/**
 * Flag (clique) complex of a simple undirected graph given as an edge list.
 * Self-loops are rejected; duplicate edges are merged. Cliques are grown
 * incrementally, so the 1-skeleton of the result is exactly the input graph.
 */
inline SimplicialComplex flag_complex(const std::vector<std::pair<int, int>>& edges) {
    std::set<Face> current;  // cliques of the size being extended
    std::set<int> verts;
    std::map<int, std::set<int>> adj;
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("flag_complex: self-loop at vertex " +
                                                std::to_string(a));
        if (a < 0 || b < 0) throw std::invalid_argument("flag_complex: negative vertex");
        adj[a].insert(b);
        adj[b].insert(a);
        verts.insert(a);
        verts.insert(b);
    }
    std::vector<Face> members;
    for (int v : verts) {
        members.push_back(Face{v});
        current.insert(Face{v});
    }
    while (!current.empty()) {
        std::set<Face> next;
        for (const auto& c : current) {
            const int last = c.vertices().back();
            for (int v : adj[last]) {
                if (v <= last) continue;
                bool adjacent_to_all = true;
                for (int u : c.vertices())
                    if (!adj[u].count(v)) { adjacent_to_all = false; break; }
                if (adjacent_to_all) {
                    std::vector<int> w = c.vertices();
                    w.push_back(v);
                    next.insert(Face(std::move(w)));
                }
            }
        }
        for (const auto& f : next) members.push_back(f);
        current = std::move(next);
    }
    return SimplicialComplex::from_faces(members);
}

/** Edge list of the 1-skeleton, in lex order. */
inline std::vector<std::pair<int, int>> graph_edges(const SimplicialComplex& x) {
    std::vector<std::pair<int, int>> out;
    for (const auto& e : x.faces(1)) out.emplace_back(e.vertices()[0], e.vertices()[1]);
    return out;
}

/**
 * True when X equals the flag complex of its own 1-skeleton, i.e. when every
 * minimal non-face is an edge (missing_face_dim none or 1).
 */
inline bool is_flag(const SimplicialComplex& x) {
    if (x.vertex_count() == 0) return true;
    const auto h = missing_face_dim(x);
    return !h || *h <= 1;
}

/** A pair (X, A) with A a validated subcomplex of X. */
class ComplexPair {
public:
    ComplexPair(SimplicialComplex complex, SimplicialComplex subcomplex)
        : x_(std::move(complex)), a_(std::move(subcomplex)) {
        if (!x_.contains_complex(a_))
            throw std::invalid_argument("ComplexPair: subcomplex not contained in the complex");
    }

    /** Absolute pair (X, {∅}). */
    explicit ComplexPair(SimplicialComplex complex)
        : x_(std::move(complex)), a_(minimal_complex()) {}

    const SimplicialComplex& complex() const { return x_; }
    const SimplicialComplex& subcomplex() const { return a_; }

    /** f_k(X,A) = |X_k \ A_k|. */
    long long relative_face_count(int k) const {
        return x_.face_count(k) - a_.face_count(k);
    }

    /** X_k \ A_k in lex order. */
    std::vector<Face> relative_faces(int k) const {
        std::vector<Face> out;
        for (const auto& f : x_.faces(k))
            if (!a_.contains(f)) out.push_back(f);
        return out;
    }

    /** Pair of skeletons (X_(p), A_(p)). */
    ComplexPair skeleton_pair(int p) const {
        return ComplexPair(skeleton(x_, p), skeleton(a_, p));
    }

    bool subcomplex_is_minimal() const { return is_minimal(a_); }

private:
    SimplicialComplex x_, a_;
};

/**
 * True when A is a k-th discrete boundary of X: deg_X(σ) <= 1 for every
 * σ ∈ A_{k-1}. (For k = 0 the condition reads deg_X({}) <= 1, i.e. at most
 * one vertex; subcomplexes of dimension <= k-2 qualify vacuously.)
 */
inline bool is_discrete_boundary(const ComplexPair& pair, int k) {
    if (k < 0) throw std::domain_error("is_discrete_boundary: k must be >= 0");
    const auto& x = pair.complex();
    if (k == 0) return x.vertex_count() <= 1;
    for (const auto& f : pair.subcomplex().faces(k - 1))
        if (x.degree(f) > 1) return false;
    return true;
}

/**
 * Discrete boundary B(X) of a pure d-complex (d >= 1): all faces contained
 * in some (d-1)-face of degree <= 1. Always contains {}; equals {∅} when no
 * (d-1)-face qualifies.
 */
inline SimplicialComplex discrete_boundary(const SimplicialComplex& x) {
    if (x.dim() < 1) throw std::domain_error("discrete_boundary: requires dimension >= 1");
    if (!x.is_pure()) throw std::domain_error("discrete_boundary: complex is not pure");
    std::vector<Face> members;
    for (const auto& f : x.faces(x.dim() - 1))
        if (x.degree(f) <= 1) members.push_back(f);
    return SimplicialComplex::from_faces(members);
}

/**
 * The derived complex X' of a pair (X, A) at level k: faces contained in some
 * τ ∈ (X_k \ A_k) ∪ X_{k+1} ∪ X_{k+2} ∪ ... Requires A to be a k-th discrete
 * boundary, which guarantees X'_k = X_k \ A_k and X'_{k+1} = X_{k+1}; both
 * facts are asserted.
 */
inline SimplicialComplex x_prime(const ComplexPair& pair, int k) {
    if (!is_discrete_boundary(pair, k))
        throw std::domain_error("x_prime: subcomplex is not a k-th discrete boundary");
    const auto& x = pair.complex();
    std::vector<Face> generators = pair.relative_faces(k);
    for (int j = k + 1; j <= x.dim(); ++j)
        for (const auto& f : x.faces(j)) generators.push_back(f);
    SimplicialComplex xp = SimplicialComplex::from_faces(generators);

    // Consequences of the discrete-boundary hypothesis (proved, so asserted).
    const auto rel_k = pair.relative_faces(k);
    if (std::vector<Face>(xp.faces(k).begin(), xp.faces(k).end()) != rel_k)
        throw invariant_violation("x_prime: X'_k != X_k \\ A_k");
    if (xp.faces(k + 1) != x.faces(k + 1))
        throw invariant_violation("x_prime: X'_{k+1} != X_{k+1}");
    return xp;
}

} // namespace relap
