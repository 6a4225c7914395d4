// Relative Laplacians, floating spectra with exact cross-checks, and the
// spectral accounting identities relating ranks, nullities, and face counts.
#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <relap/generators.hpp>
#include <relap/homology.hpp>
#include <relap/random_complex.hpp>
#include <relap/spectra.hpp>

using namespace relap;

namespace {

constexpr double kTol = 1e-8;

bool close(double a, double b, double tol = kTol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> nonzero_part(const std::vector<double>& evs, double tau) {
    std::vector<double> out;
    for (double v : evs)
        if (std::abs(v) >= tau) out.push_back(v);
    return out;
}

bool multisets_close(std::vector<double> a, std::vector<double> b, double tol) {
    if (a.size() != b.size()) return false;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!close(a[i], b[i], tol)) return false;
    return true;
}

} // namespace

TEST_CASE("Laplacian matrices of hand-checked pairs") {
    // full simplex on 3 vertices: L_1 is 3 times the identity
    const ComplexPair simplex2(generate_simplex(2));
    const auto l1 = laplacian(simplex2, 1, LaplacianKind::full).matrix;
    REQUIRE(l1.rows() == 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(l1.at(i, j) == (i == j ? 3 : 0));

    // full simplex on 4 vertices: every eigenvalue of L_1 is 4
    const ComplexPair simplex3(generate_simplex(3));
    for (double ev :
         symmetric_eigenvalues(laplacian(simplex3, 1, LaplacianKind::full).matrix))
        CHECK(close(ev, 4.0));

    // hollow triangle: eigenvalues {0, 3, 3}
    const ComplexPair hollow(skeleton(generate_simplex(2), 1));
    const auto evs =
        symmetric_eigenvalues(laplacian(hollow, 1, LaplacianKind::full).matrix);
    REQUIRE(evs.size() == 3);
    CHECK(close(evs[0], 0.0, 1e-12));
    CHECK(close(evs[1], 3.0));
    CHECK(close(evs[2], 3.0));

    // 2-edge path relative to its endpoints: [[1,-1],[-1,1]]
    const auto path = generate_d_path(1, 2);
    const ComplexPair rel_path(path, discrete_boundary(path));
    const auto lp = laplacian(rel_path, 1, LaplacianKind::full).matrix;
    REQUIRE(lp.rows() == 2);
    CHECK(lp.at(0, 0) == 1);
    CHECK(lp.at(0, 1) == -1);
    CHECK(lp.at(1, 0) == -1);
    CHECK(lp.at(1, 1) == 1);

    CHECK_THROWS_AS(laplacian(simplex2, 3, LaplacianKind::full), std::domain_error);
}

TEST_CASE("the degree-zero Laplacian of an absolute pair is the graph Laplacian") {
    const auto x = generate_skeleton_simplex(3, 1);
    const auto l0 = laplacian(ComplexPair(x), 0, LaplacianKind::full).matrix;
    CHECK(l0 == graph_laplacian(x));

    // Absolute full Laplacian in degree k >= 1 has diagonal deg(σ) + k + 1.
    const auto c = generate_d_path(2, 3);
    const auto l = laplacian(ComplexPair(c), 1, LaplacianKind::full).matrix;
    std::size_t i = 0;
    for (const auto& sigma : c.faces(1)) {
        CHECK(l.at(i, i) == Int(c.degree(sigma)) + 2);
        ++i;
    }
}

TEST_CASE("the full Laplacian is the entrywise sum of its two parts") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto x = random_complex(6, 0.6, 4200 + trial);
        if (x.dim() < 0) continue;
        const auto a = random_subcomplex(x, 0.45, 4300 + trial);
        const ComplexPair pair(x, a);
        for (int k = 0; k <= x.dim(); ++k) {
            const auto full = laplacian(pair, k, LaplacianKind::full).matrix;
            const auto ud = laplacian(pair, k, LaplacianKind::up_down).matrix;
            const auto du = laplacian(pair, k, LaplacianKind::down_up).matrix;
            CHECK(full == ud + du);
            CHECK(full.is_symmetric());
            const auto evs = symmetric_eigenvalues(full);
            if (!evs.empty()) CHECK(evs.front() >= -1e-9 * std::max(1.0, evs.back()));
        }
    }
}

TEST_CASE("spectrum couples floating eigenvalues with exact invariants") {
    LaplacianPart zero{LaplacianKind::full, 0, IntegerMatrix(4, 4)};
    const auto zrep = spectrum(zero);
    CHECK(zrep.exact_rank == 0);
    CHECK(zrep.pseudo_determinant == 1);
    CHECK(zrep.zero_multiplicity == 4);

    const ComplexPair k4(generate_skeleton_simplex(3, 1));
    const auto krep = spectrum(laplacian(k4, 0, LaplacianKind::up_down));
    CHECK(krep.exact_rank == 3);
    CHECK(krep.pseudo_determinant == 64);
    const auto nz = nonzero_part(krep.eigenvalues, krep.tau_zero);
    REQUIRE(nz.size() == 3);
    for (double v : nz) CHECK(close(v, 4.0));

    const ComplexPair hollow(skeleton(generate_simplex(2), 1));
    const auto hrep = spectrum(laplacian(hollow, 1, LaplacianKind::full));
    CHECK(hrep.exact_rank == 2);
    CHECK(hrep.pseudo_determinant == 9);
    CHECK(hrep.zero_multiplicity == 1);

    CHECK(std::is_sorted(krep.eigenvalues.begin(), krep.eigenvalues.end()));
}

TEST_CASE("pseudo-determinant tracks the floating product of nonzero eigenvalues") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 15; ++trial) {
        const auto x = random_complex(6, 0.65, 6000 + trial);
        if (x.dim() < 0) continue;
        const ComplexPair pair(x);
        for (int k = 0; k <= x.dim(); ++k) {
            const auto rep = spectrum(laplacian(pair, k, LaplacianKind::full));
            double prod = 1.0;
            for (double v : nonzero_part(rep.eigenvalues, rep.tau_zero)) prod *= v;
            const double exact = static_cast<double>(rep.pseudo_determinant);
            CHECK(std::abs(prod - exact) <= 1e-6 * std::max(1.0, exact));
        }
    }
}

TEST_CASE("spectral_gap reads the least eigenvalue and is infinite on empty levels") {
    CHECK(close(spectral_gap(ComplexPair(generate_simplex(2)), 1), 3.0));
    CHECK(std::abs(spectral_gap(ComplexPair(skeleton(generate_simplex(2), 1)), 1)) <
          1e-9);
    const auto path = generate_d_path(1, 2);
    CHECK(std::abs(spectral_gap(ComplexPair(path, discrete_boundary(path)), 1)) <
          1e-9);
    const auto x = generate_simplex(2);
    CHECK(std::isinf(spectral_gap(ComplexPair(x, x), 1)));
}

TEST_CASE("chi equals the exact rank of the relative boundary map") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    CHECK(chi(k3, 1) == 2);
    CHECK(chi(k3, 0) == 0);

    const ComplexPair d2(generate_simplex(2));
    CHECK(chi(d2, 2) == 1);

    const auto x = generate_simplex(2);
    const ComplexPair self(x, x);
    for (int k = 0; k <= x.dim() + 1; ++k) CHECK(chi(self, k) == 0);
}

TEST_CASE("zero multiplicities follow the face-count accounting") {
    const ComplexPair k3(generate_skeleton_simplex(2, 1));
    CHECK(zero_multiplicities(k3, 0) == std::pair<long long, long long>(1, 3));

    const ComplexPair d2(generate_simplex(2));
    CHECK(zero_multiplicities(d2, 1) == std::pair<long long, long long>(2, 1));

    const auto x = generate_simplex(2);
    const ComplexPair self(x, x);
    for (int k = 0; k <= x.dim(); ++k)
        CHECK(zero_multiplicities(self, k) == std::pair<long long, long long>(0, 0));
}

TEST_CASE("up-down and shifted down-up spectra agree off zero") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        const auto x = random_complex(6, 0.6, 7000 + trial);
        if (x.dim() < 1) continue;
        const auto a = random_subcomplex(x, 0.4, 7100 + trial);
        const ComplexPair pair(x, a);
        for (int k = 0; k < x.dim(); ++k) {
            const auto ud = spectrum(laplacian(pair, k, LaplacianKind::up_down));
            const auto du = spectrum(laplacian(pair, k + 1, LaplacianKind::down_up));
            CHECK(multisets_close(nonzero_part(ud.eigenvalues, ud.tau_zero),
                                  nonzero_part(du.eigenvalues, du.tau_zero), 1e-8));
        }
        // the nonzero spectrum of the full Laplacian splits into the parts
        for (int k = 0; k <= x.dim(); ++k) {
            const auto full = spectrum(laplacian(pair, k, LaplacianKind::full));
            const auto ud = spectrum(laplacian(pair, k, LaplacianKind::up_down));
            const auto du = spectrum(laplacian(pair, k, LaplacianKind::down_up));
            auto joined = nonzero_part(ud.eigenvalues, ud.tau_zero);
            for (double v : nonzero_part(du.eigenvalues, du.tau_zero))
                joined.push_back(v);
            CHECK(multisets_close(nonzero_part(full.eigenvalues, full.tau_zero),
                                  joined, 1e-7));
        }
    }
}

TEST_CASE("floating kernel dimension matches the exact Betti number") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 15; ++trial) {
        const auto x = random_complex(6, 0.55, 8000 + trial);
        if (x.dim() < 0) continue;
        const auto a = random_subcomplex(x, 0.5, 8100 + trial);
        const ComplexPair pair(x, a);
        for (int k = 0; k <= x.dim(); ++k) {
            const auto rep = spectrum(laplacian(pair, k, LaplacianKind::full));
            int zeros = 0;
            for (double v : rep.eigenvalues)
                if (std::abs(v) < rep.tau_zero) ++zeros;
            CHECK(zeros == relative_homology(pair, k).betti);
        }
    }
}

TEST_CASE("largest eigenvalue bounds from degrees and ranks") {
    const auto r1 = lambda_max_bounds(ComplexPair(generate_simplex(2)), 1);
    CHECK(r1.upper_bound == 3);
    CHECK(r1.upper_holds);
    CHECK_FALSE(r1.lower_vacuous);
    CHECK(r1.lower_bound == 3);
    CHECK(r1.lower_holds);
    CHECK(close(r1.lambda_max, 3.0));

    const auto hollow = skeleton(generate_simplex(2), 1);
    const auto r2 = lambda_max_bounds(ComplexPair(hollow), 1);
    CHECK(r2.upper_bound == 0);
    CHECK(r2.upper_holds);
    CHECK(r2.lower_vacuous);

    const auto r3 = lambda_max_bounds(ComplexPair(generate_skeleton_simplex(3, 1)), 0);
    CHECK(r3.upper_bound == 6);
    CHECK(r3.lower_bound == 4);
    CHECK(close(r3.lambda_max, 4.0));
    CHECK(r3.upper_holds);
    CHECK(r3.lower_holds);

    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 15; ++trial) {
        const auto x = random_complex(6, 0.6, 9000 + trial);
        if (x.dim() < 0) continue;
        const auto a = random_subcomplex(x, 0.4, 9100 + trial);
        const ComplexPair pair(x, a);
        for (int k = 0; k <= x.dim(); ++k) {
            const auto r = lambda_max_bounds(pair, k);
            CHECK(r.upper_holds);
            CHECK(r.lower_holds);
        }
    }
}

TEST_CASE("algebraic connectivity of standard graphs") {
    CHECK(close(lambda_2(generate_skeleton_simplex(3, 1)), 4.0));
    CHECK(close(lambda_2(generate_d_circuit(1, 4)), 2.0));
    CHECK(close(lambda_2(generate_d_path(1, 2)), 1.0));
    CHECK_THROWS_AS(lambda_2(SimplicialComplex::from_facets({{0}})),
                    std::domain_error);
}
