/**
 * Exact linear algebra over the integers / rationals:
 *
 *   - exact_rank      fraction-free Bareiss elimination (rank over Q)
 *   - exact_det       Bareiss determinant (det of the 0x0 matrix is 1)
 *   - charpoly        Berkowitz's division-free algorithm; exact integer
 *                     coefficients of det(yI - M), ascending order
 *   - pseudo_det      product of the nonzero eigenvalues, read off the
 *                     characteristic polynomial at the exact rank
 *   - nullspace       basis of the rational kernel, scaled to integers
 *
 * These routines back every verification in the library; nothing here uses
 * floating point.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "relap/errors.hpp"
#include "relap/integer_matrix.hpp"

namespace relap {

using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

} // namespace detail

/**
 * Rank over the rationals via fraction-free Bareiss elimination with full
 * pivoting (smallest nonzero magnitude, to limit entry growth).
 */
inline int exact_rank(const IntegerMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = m.at(i, j);

    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; r < nr && c < nc; ++r, ++c) {
        // pick the nonzero pivot of least magnitude in the remaining block
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = r; i < nr; ++i)
            for (std::size_t j = c; j < nc; ++j)
                if (a[i][j] != 0 &&
                    (pi == nr || detail::abs_int(a[i][j]) < detail::abs_int(a[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr) break;  // remaining block is zero
        std::swap(a[r], a[pi]);
        if (pj != c)
            for (std::size_t i = 0; i < nr; ++i) std::swap(a[i][c], a[i][pj]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j)
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
            a[i][c] = 0;
        }
        prev = a[r][c];
    }
    return static_cast<int>(r);
}

/** Determinant via Bareiss; the empty (0x0) matrix has determinant 1. */
inline Int exact_det(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exact_det: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m.at(i, j);

    Int prev = 1;
    int sign = 1;
    for (std::size_t r = 0; r < n; ++r) {
        std::size_t pi = n;
        for (std::size_t i = r; i < n; ++i)
            if (a[i][r] != 0 && (pi == n || detail::abs_int(a[i][r]) < detail::abs_int(a[pi][r])))
                pi = i;
        if (pi == n) return 0;
        if (pi != r) {
            std::swap(a[r], a[pi]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = r + 1; j < n; ++j)
                a[i][j] = (a[r][r] * a[i][j] - a[i][r] * a[r][j]) / prev;
            a[i][r] = 0;
        }
        prev = a[r][r];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

/**
 * Characteristic polynomial det(yI - M) by Berkowitz's algorithm.
 * Returns coefficients c_0..c_n in ascending powers (c_n = 1). Division-free
 * and exact; O(n^4) integer operations.
 */
inline std::vector<Int> charpoly(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return {Int(1)};

    // V holds the coefficients in DESCENDING powers for the leading r x r block.
    std::vector<Int> V{Int(1), Int(-m.at(0, 0))};
    for (std::size_t r = 1; r < n; ++r) {
        // Toeplitz column: [1, -d, -R C, -R A C, ..., -R A^{r-1} C]
        std::vector<Int> t(r + 2);
        t[0] = 1;
        t[1] = -m.at(r, r);
        std::vector<Int> w(r);  // iterated A^j C
        for (std::size_t i = 0; i < r; ++i) w[i] = m.at(i, r);
        for (std::size_t j = 0; j + 2 <= r + 1; ++j) {
            Int dot = 0;
            for (std::size_t i = 0; i < r; ++i) dot += m.at(r, i) * w[i];
            t[j + 2] = -dot;
            if (j + 3 <= r + 1) {
                std::vector<Int> w2(r);
                for (std::size_t i = 0; i < r; ++i) {
                    Int s = 0;
                    for (std::size_t l = 0; l < r; ++l) s += m.at(i, l) * w[l];
                    w2[i] = s;
                }
                w = std::move(w2);
            }
        }
        // V_new = lower-triangular Toeplitz(t) * V
        std::vector<Int> Vn(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j <= i && j < V.size(); ++j) s += t[i - j] * V[j];
            Vn[i] = s;
        }
        V = std::move(Vn);
    }
    // convert to ascending order
    std::vector<Int> asc(V.rbegin(), V.rend());
    return asc;
}

/**
 * Product of the nonzero eigenvalues: up to sign the coefficient of
 * y^{n - rank} in det(yI - M). For a PSD matrix this is the positive
 * pseudo-determinant; the value 1 is returned for rank 0 (including the
 * 0x0 matrix).
 */
inline Int pseudo_det(const IntegerMatrix& m, int rank) {
    const auto cp = charpoly(m);
    if (rank < 0 || static_cast<std::size_t>(rank) >= cp.size())
        throw std::invalid_argument("pseudo_det: rank out of range");
    Int c = cp[cp.size() - 1 - static_cast<std::size_t>(rank)];
    if (c == 0)
        throw invariant_violation(
            "pseudo_det: charpoly coefficient at the exact rank vanishes");
    return detail::abs_int(c);
}

/**
 * Basis of the right kernel over Q, returned as integer vectors (each basis
 * vector scaled by the lcm of its denominators). Gauss-Jordan on rationals.
 */
inline std::vector<std::vector<Int>> nullspace(const IntegerMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc, Rational(0)));
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) a[i][j] = Rational(m.at(i, j));

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t pi = nr;
        for (std::size_t i = r; i < nr; ++i)
            if (a[i][c] != Rational(0)) { pi = i; break; }
        if (pi == nr) continue;
        std::swap(a[r], a[pi]);
        const Rational p = a[r][c];
        for (std::size_t j = c; j < nc; ++j) a[r][j] /= p;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || a[i][c] == Rational(0)) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j < nc; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }

    std::vector<bool> is_pivot(nc, false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Int>> basis;
    for (std::size_t free = 0; free < nc; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -a[i][free];
        Int lcm = 1;
        for (const auto& q : v) {
            const Int d = boost::multiprecision::denominator(q);
            lcm = lcm / boost::multiprecision::gcd(lcm, d) * d;
        }
        std::vector<Int> iv(nc);
        for (std::size_t j = 0; j < nc; ++j)
            iv[j] = boost::multiprecision::numerator(v[j]) *
                    (lcm / boost::multiprecision::denominator(v[j]));
        basis.push_back(std::move(iv));
    }
    return basis;
}

/** Binomial coefficient as an exact integer (for enumeration budgets). */
inline Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace relap
