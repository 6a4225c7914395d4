/**
 * Face: an oriented simplex stored as a strictly increasing vertex list.
 *
 * The empty face {} (dimension -1) is a valid Face and belongs to every
 * simplicial complex. The canonical orientation of a face is the increasing
 * order of its vertex labels; all boundary/Laplacian sign conventions in the
 * library are relative to this canonical orientation.
 *
 * Faces compare lexicographically on their vertex vectors, which within a
 * fixed dimension is the deterministic iteration order used everywhere.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace relap {

class Face {
public:
    /** The empty face (dimension -1). */
    Face() = default;

    /** Construct from a vertex list; sorts and rejects duplicates/negatives. */
    explicit Face(std::vector<int> vertices) : v_(std::move(vertices)) {
        std::sort(v_.begin(), v_.end());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (v_[i] < 0)
                throw std::invalid_argument("face vertex labels must be non-negative");
            if (i > 0 && v_[i] == v_[i - 1])
                throw std::invalid_argument("face contains a repeated vertex: " +
                                            std::to_string(v_[i]));
        }
    }

    Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return v_; }

    /** Geometric dimension: |vertices| - 1; the empty face has dimension -1. */
    int dim() const { return static_cast<int>(v_.size()) - 1; }

    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    bool contains_vertex(int v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    /** Subset test (as vertex sets). */
    bool is_subface_of(const Face& other) const {
        return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
    }

    /** All faces obtained by deleting one vertex, in deletion-index order. */
    std::vector<Face> boundary() const {
        std::vector<Face> out;
        out.reserve(v_.size());
        for (std::size_t i = 0; i < v_.size(); ++i) {
            std::vector<int> w;
            w.reserve(v_.size() - 1);
            for (std::size_t j = 0; j < v_.size(); ++j)
                if (j != i) w.push_back(v_[j]);
            out.push_back(Face(std::move(w)));
        }
        return out;
    }

    /** Every subset of this face (including {} and the face itself). */
    std::vector<Face> all_subfaces() const {
        const std::size_t n = v_.size();
        if (n > 24) throw std::invalid_argument("face too large to enumerate subsets");
        std::vector<Face> out;
        out.reserve(std::size_t(1) << n);
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            std::vector<int> w;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (std::size_t(1) << i)) w.push_back(v_[i]);
            out.push_back(Face(std::move(w)));
        }
        return out;
    }

    friend bool operator==(const Face& a, const Face& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Face& a, const Face& b) { return a.v_ != b.v_; }
    friend bool operator<(const Face& a, const Face& b) { return a.v_ < b.v_; }

    /** Rendered as {v0,v1,...}; the empty face as {}. */
    std::string to_string() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) os << ',';
            os << v_[i];
        }
        os << '}';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Face& f) {
        return os << f.to_string();
    }

private:
    std::vector<int> v_;
};

/** Union of two faces as vertex sets. */
inline Face face_union(const Face& a, const Face& b) {
    std::vector<int> out;
    std::set_union(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                   b.vertices().end(), std::back_inserter(out));
    return Face(std::move(out));
}

/** Intersection of two faces as vertex sets. */
inline Face face_intersection(const Face& a, const Face& b) {
    std::vector<int> out;
    std::set_intersection(a.vertices().begin(), a.vertices().end(),
                          b.vertices().begin(), b.vertices().end(),
                          std::back_inserter(out));
    return Face(std::move(out));
}

/** Set difference a \ b as vertex sets. */
inline Face face_difference(const Face& a, const Face& b) {
    std::vector<int> out;
    std::set_difference(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(out));
    return Face(std::move(out));
}

} // namespace relap
