#include "oracles.hpp"

#include "reflexorb/error.hpp"
#include "reflexorb/lattice.hpp"
#include "reflexorb/lattice_vector.hpp"

#include <doctest.h>

#include <random>

using namespace reflexorb;

namespace {

void check_hermite(const IntMatrix& m)
{
    const auto [h, u] = hermite_normal_form(m);
    CHECK(u * m == h);
    CHECK(is_unimodular(u));
    // Echelon shape with positive, reducing pivots.
    std::size_t last_pivot = 0;
    bool seen_zero_row = false;
    for (std::size_t i = 0; i < h.rows(); ++i) {
        std::size_t j = 0;
        while (j < h.cols() && sgn(h(i, j)) == 0)
            ++j;
        if (j == h.cols()) {
            seen_zero_row = true;
            continue;
        }
        CHECK_FALSE(seen_zero_row);
        if (i > 0)
            CHECK(j > last_pivot);
        last_pivot = j;
        CHECK(h(i, j) > 0);
        for (std::size_t k = 0; k < i; ++k) {
            CHECK(h(k, j) >= 0);
            CHECK(h(k, j) < h(i, j));
        }
    }
}

void check_smith(const IntMatrix& m)
{
    const auto s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    for (std::size_t i = 0; i < s.d.rows(); ++i)
        for (std::size_t j = 0; j < s.d.cols(); ++j)
            if (i != j)
                CHECK(sgn(s.d(i, j)) == 0);
    const std::size_t k = std::min(s.d.rows(), s.d.cols());
    for (std::size_t i = 0; i + 1 < k; ++i) {
        CHECK(s.d(i, i) >= 0);
        if (sgn(s.d(i, i)) != 0)
            CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        else
            CHECK(sgn(s.d(i + 1, i + 1)) == 0);
    }
}

}  // namespace

TEST_CASE("hermite normal form of small matrices")
{
    SUBCASE("identity is its own form")
    {
        const auto [h, u] = hermite_normal_form(IntMatrix::identity(3));
        CHECK(h == IntMatrix::identity(3));
        CHECK(u == IntMatrix::identity(3));
    }
    SUBCASE("2I stays diagonal")
    {
        const IntMatrix m{{2, 0}, {0, 2}};
        CHECK(hermite_normal_form(m).h == m);
    }
    SUBCASE("[[1,2],[3,4]] keeps |det| = 2")
    {
        const IntMatrix m{{1, 2}, {3, 4}};
        const auto [h, u] = hermite_normal_form(m);
        CHECK(abs(integer_determinant(h)) == 2);
        CHECK(h == IntMatrix{{1, 0}, {0, 2}});
        check_hermite(m);
    }
    SUBCASE("rank deficient and wide inputs")
    {
        check_hermite(IntMatrix{{2, 4, 6}, {1, 2, 3}});
        check_hermite(IntMatrix{{0, 0}, {0, 0}});
        check_hermite(IntMatrix{{0, 3, 5}, {0, 6, 1}, {4, 0, 0}});
    }
}

TEST_CASE("hermite normal form of random matrices")
{
    std::mt19937_64 rng(11);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        check_hermite(oracle::random_matrix(rng, r, c, -7, 7));
    }
}

TEST_CASE("smith normal form")
{
    SUBCASE("diag(2,3) becomes diag(1,6)")
    {
        const auto s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
        CHECK(s.d == IntMatrix{{1, 0}, {0, 6}});
        check_smith(IntMatrix{{2, 0}, {0, 3}});
    }
    SUBCASE("identity")
    {
        CHECK(smith_normal_form(IntMatrix::identity(4)).d == IntMatrix::identity(4));
    }
    SUBCASE("four rays spanning an index-two cone")
    {
        const IntMatrix m{{-1, -2, -2, -2}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
        const auto divs = elementary_divisors(m);
        REQUIRE(divs.size() == 4);
        Integer prod = 1;
        for (const auto& d : divs)
            prod *= d;
        CHECK(prod == 2);
        CHECK(divs == std::vector<Integer>{1, 1, 1, 2});
        check_smith(m);
    }
    SUBCASE("non-square and zero")
    {
        check_smith(IntMatrix{{2, 4, 4}, {-6, 6, 12}});
        check_smith(IntMatrix(3, 2));
        CHECK(elementary_divisors(IntMatrix(2, 2)).empty());
    }
}

TEST_CASE("smith form: product of divisors equals |det|")
{
    std::mt19937_64 rng(12);
    int nonsingular = 0;
    for (int t = 0; t < 80; ++t) {
        const std::size_t n = 1 + rng() % 5;
        const IntMatrix m = oracle::random_matrix(rng, n, n, -9, 9);
        check_smith(m);
        const Integer det = oracle::det_cofactor(m);
        const auto divs = elementary_divisors(m);
        if (sgn(det) == 0) {
            CHECK(divs.size() < n);
            continue;
        }
        ++nonsingular;
        Integer prod = 1;
        for (const auto& d : divs)
            prod *= d;
        CHECK(prod == abs(det));
    }
    CHECK(nonsingular > 50);
}

TEST_CASE("determinant")
{
    CHECK(integer_determinant(IntMatrix::identity(5)) == 1);
    CHECK(integer_determinant(IntMatrix(0, 0)) == 1);
    CHECK(integer_determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK_THROWS_AS(integer_determinant(IntMatrix(2, 3)), Error);

    // Maximal cones of the fan of P(1,1,2,2,2).
    const LatticeVector v1{-1, -2, -2, -2}, v2{1, 0, 0, 0}, v3{0, 1, 0, 0}, v4{0, 0, 1, 0}, v5{0, 0, 0, 1};
    const std::vector<LatticeVector> c1{v2, v3, v4, v5}, c2{v1, v3, v4, v5}, c3{v1, v2, v4, v5};
    CHECK(abs(integer_determinant(rows_matrix(c1))) == 1);
    CHECK(abs(integer_determinant(rows_matrix(c2))) == 1);
    CHECK(abs(integer_determinant(rows_matrix(c3))) == 2);

    std::mt19937_64 rng(13);
    for (int t = 0; t < 60; ++t) {
        const std::size_t n = 1 + rng() % 6;
        const IntMatrix m = oracle::random_matrix(rng, n, n, -20, 20);
        CHECK(integer_determinant(m) == oracle::det_cofactor(m));
    }
}

TEST_CASE("rank")
{
    CHECK(integer_rank(IntMatrix(3, 4)) == 0);
    CHECK(integer_rank(IntMatrix::identity(4)) == 4);
    CHECK(integer_rank(IntMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
    CHECK(rational_rank(RatMatrix(0, 3)) == 0);

    RatMatrix q(2, 2);
    q(0, 0) = Rational(1, 2);
    q(0, 1) = Rational(1, 3);
    q(1, 0) = Rational(3, 2);
    q(1, 1) = 1;
    CHECK(rational_rank(q) == 1);

    std::mt19937_64 rng(14);
    for (int t = 0; t < 60; ++t) {
        const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        IntMatrix m = oracle::random_matrix(rng, r, c, -2, 2);
        if (t % 3 == 0 && r > 1)
            for (std::size_t j = 0; j < c; ++j)
                m(r - 1, j) = m(0, j) * 2 - m(r / 2, j);  // force a dependency
        const std::size_t rank = integer_rank(m);
        CHECK(rank == integer_rank(m.transpose()));
        CHECK(rank == rational_rank(to_rational(m)));
        CHECK(rank == oracle::rank_by_minors(m));
    }
}

TEST_CASE("nullspace and solving")
{
    const IntMatrix m{{1, 1, 1}, {1, 2, 3}};
    const auto ns = nullspace(to_rational(m));
    REQUIRE(ns.size() == 1);
    for (std::size_t i = 0; i < 2; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < 3; ++j)
            s += Rational(m(i, j)) * ns[0][j];
        CHECK(s == 0);
    }

    const std::vector<Rational> b{3, 5};
    const IntMatrix sq{{2, 1}, {1, 3}};
    const auto x = solve_unique(to_rational(sq), b);
    REQUIRE(x);
    CHECK((*x)[0] == Rational(4, 5));
    CHECK((*x)[1] == Rational(7, 5));
    CHECK_FALSE(solve_unique(to_rational(m), b));  // underdetermined
    const IntMatrix bad{{1, 1}, {1, 1}};
    CHECK_FALSE(solve_unique(to_rational(bad), std::vector<Rational>{1, 2}));
}

TEST_CASE("lattice vectors")
{
    const LatticeVector a{2, -4, 6};
    CHECK(a.content() == 2);
    CHECK_FALSE(a.is_primitive());
    CHECK(LatticeVector{3, 5}.is_primitive());
    CHECK(LatticeVector(3).is_zero());
    CHECK(LatticeVector(3).content() == 0);
    CHECK(dot(a, LatticeVector{1, 1, 1}) == 4);
    CHECK(a - a == LatticeVector(3));
    CHECK(Integer(3) * LatticeVector{1, -1} == LatticeVector{3, -3});
    CHECK(LatticeVector{0, 5} < LatticeVector{1, -5});
    CHECK(a.str() == "(2,-4,6)");

    std::vector<LatticeVector> pts{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}};
    CHECK(affine_dimension(pts) == 1);
    pts.push_back({0, 1, 0});
    CHECK(affine_dimension(pts) == 2);
    CHECK(affine_dimension(std::vector<LatticeVector>{}) == -1);
    CHECK(gcd_of(std::vector<Integer>{12, 18, -30}) == 6);
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(2)) == "2");
}
