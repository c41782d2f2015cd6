#include <doctest.h>

#include <random>

#include "linsite/subspace.hpp"

using namespace linsite;

namespace {

Mat random_mat(std::mt19937_64& rng, Scalar p, std::size_t r, std::size_t c) {
    Mat m(p, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<Scalar>(rng() % p);
    return m;
}

/* Oracle: the literal solution set of A x = b, by enumerating F_p^cols. */
std::vector<Vec> brute_solutions(const Mat& a, const Vec& b) {
    std::vector<Vec> out;
    for (const Vec& v : all_vectors(a.modulus(), a.cols()))
        if (mat_apply(a, v) == b) out.push_back(v);
    return out;
}

bool in_affine_set(const LinearSolution& s, const Vec& v, Scalar p, std::size_t n) {
    if (!s.particular) return false;
    Vec d = vec_sub(v, *s.particular, p);
    return Subspace::span(p, n, s.kernel).contains(d);
}

}  // namespace

TEST_CASE("solve_linear matches the brute-force solution set") {
    std::mt19937_64 rng(20240811);
    for (Scalar p : {2u, 3u}) {
        for (int trial = 0; trial < 120; ++trial) {
            std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
            Mat a = random_mat(rng, p, r, c);
            Vec b(r);
            for (auto& x : b) x = static_cast<Scalar>(rng() % p);
            LinearSolution s = solve_linear(a, b);
            std::vector<Vec> oracle = brute_solutions(a, b);
            if (oracle.empty()) {
                CHECK(!s.particular);
            } else {
                REQUIRE(s.particular);
                CHECK(mat_apply(a, *s.particular) == b);
                std::size_t count = 1;
                for (std::size_t i = 0; i < s.kernel.size(); ++i) count *= p;
                CHECK(count == oracle.size());
                for (const Vec& v : oracle) CHECK(in_affine_set(s, v, p, c));
            }
            for (const Vec& k : s.kernel) CHECK(vec_is_zero(mat_apply(a, k)));
        }
    }
}

TEST_CASE("rank-nullity and kernel invariants") {
    std::mt19937_64 rng(7);
    for (Scalar p : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Mat a = random_mat(rng, p, r, c);
            CHECK(rank(a) + kernel_basis(a).size() == c);
            Echelon e = echelon_form(a);
            CHECK(echelon_form(e.reduced).reduced == e.reduced);  // canonical form is stable
        }
    }
}

TEST_CASE("image_and_quotient contracts") {
    std::mt19937_64 rng(99);
    for (Scalar p : {2u, 3u}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            Mat a = random_mat(rng, p, r, c);
            ImageQuotient iq = image_and_quotient(a);
            std::size_t rk = rank(a);
            CHECK(iq.image.size() == rk);
            CHECK(mat_mul(iq.projection, a).is_zero());
            CHECK(iq.projection.rows() == r - rk);
            CHECK(rank(iq.projection) == r - rk);
            // image basis really spans the column space
            Subspace im = Subspace::span(p, r, iq.image);
            for (std::size_t j = 0; j < c; ++j) CHECK(im.contains(a.col(j)));
        }
    }
}

TEST_CASE("inverse and section") {
    std::mt19937_64 rng(13);
    for (Scalar p : {2u, 3u}) {
        int invertible_seen = 0;
        for (int trial = 0; trial < 80; ++trial) {
            std::size_t n = 1 + rng() % 4;
            Mat a = random_mat(rng, p, n, n);
            auto inv = inverse(a);
            if (rank(a) == n) {
                REQUIRE(inv);
                CHECK(mat_mul(a, *inv) == Mat::identity(p, n));
                CHECK(mat_mul(*inv, a) == Mat::identity(p, n));
                ++invertible_seen;
            } else {
                CHECK(!inv);
            }
        }
        CHECK(invertible_seen > 0);
    }
}

TEST_CASE("subspace algebra") {
    std::mt19937_64 rng(4242);
    for (Scalar p : {2u, 3u}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t n = 1 + rng() % 4;
            Mat a = random_mat(rng, p, 1 + rng() % 3, n);
            Mat b = random_mat(rng, p, 1 + rng() % 3, n);
            std::vector<Vec> ar, br;
            for (std::size_t i = 0; i < a.rows(); ++i) ar.push_back(a.row(i));
            for (std::size_t i = 0; i < b.rows(); ++i) br.push_back(b.row(i));
            Subspace u = Subspace::span(p, n, ar), w = Subspace::span(p, n, br);
            Subspace s = u.sum(w), x = u.intersect(w);
            CHECK(u.dim() + w.dim() == s.dim() + x.dim());
            CHECK(s.contains(u));
            CHECK(s.contains(w));
            CHECK(u.contains(x));
            CHECK(w.contains(x));
            for (const Vec& v : all_vectors(p, n)) {
                bool in_both = u.contains(v) && w.contains(v);
                CHECK(x.contains(v) == in_both);
            }
            auto c = u.coords_of(u.dim() ? u.basis_vector(0) : Vec(n, 0));
            if (u.dim()) {
                REQUIRE(c);
                CHECK(u.element(*c) == u.basis_vector(0));
            }
        }
    }
}

TEST_CASE("subspace enumeration counts") {
    CHECK(all_subspaces(2, 2).size() == 5);
    CHECK(all_subspaces(2, 3).size() == 16);
    CHECK(all_subspaces(2, 4).size() == 67);
    CHECK(all_subspaces(3, 2).size() == 6);
    CHECK(all_subspaces(3, 3).size() == 28);
    CHECK(all_vectors(3, 3).size() == 27);
}
