#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgrp/normal_form.hpp"
#include "tfgrp/rational.hpp"

using namespace tfgrp;

namespace {

std::mt19937 rng(20240811);

Int rnd_int(int lo, int hi) {
    return Int(std::uniform_int_distribution<int>(lo, hi)(rng));
}

IntMat rnd_mat(std::size_t r, std::size_t c, int lo, int hi) {
    IntMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = rnd_int(lo, hi);
    return m;
}

// reference determinant by cofactor expansion
Int det_ref(const IntMat& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Int acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
        IntMat minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != k) minor(i - 1, jj++) = m(i, j);
        Int term = m(0, k) * det_ref(minor);
        if (k % 2) term = -term;
        acc += term;
    }
    return acc;
}

}  // namespace

TEST_CASE("valuation") {
    CHECK(valuation(Int(8), 2) == 3);
    CHECK(valuation(Int(9), 2) == 0);
    CHECK(valuation(Int(-12), 2) == 2);
    CHECK(valuation(Rat(3, 8), 2) == -3);
    CHECK(valuation(Rat(4, 9), 3) == -2);
    CHECK(valuation(Rat(4, 9), 2) == 2);
}

TEST_CASE("primes") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(nth_prime(1) == 2);
    CHECK(nth_prime(2) == 3);
    CHECK(nth_prime(10) == 29);
    CHECK(prime_factors(Int(360)) == IntVec{2, 3, 5});
    CHECK(prime_factors(Int(-7)) == IntVec{7});
}

TEST_CASE("rational strings round trip") {
    for (int n = -20; n <= 20; ++n)
        for (int d = 1; d <= 9; ++d) {
            Rat q = make_rat(n, d);
            CHECK(parse_rat(rat_to_string(q)) == q);
        }
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_to_string(make_rat(-3, 6)) == "-1/2");
    CHECK(parse_rat("7/2") == make_rat(7, 2));
    CHECK_THROWS_AS(parse_rat("x"), ParseError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
}

TEST_CASE("hnf shape and row span") {
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t n = 1 + iter % 4;
        IntMat a = rnd_mat(n, n, -9, 9);
        auto res = hnf(a);
        CHECK(res.h == res.u * a);
        CHECK((det_ref(res.u) == 1 || det_ref(res.u) == -1));
        // echelon with positive pivots, entries above pivots reduced
        std::size_t prev = 0;
        bool started = false;
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = 0;
            while (j < n && res.h(i, j) == 0) ++j;
            if (j == n) continue;
            if (started) CHECK(j > prev);
            prev = j;
            started = true;
            CHECK(res.h(i, j) > 0);
            for (std::size_t k = 0; k < i; ++k) {
                CHECK(res.h(k, j) >= 0);
                CHECK(res.h(k, j) < res.h(i, j));
            }
        }
    }
}

TEST_CASE("hnf known values") {
    // 2x2 worked by hand: rows (2,4),(1,1) -> gcd elimination
    auto res = hnf(IntMat{{2, 4}, {1, 1}});
    CHECK(res.h == IntMat{{1, 1}, {0, 2}});
    res = hnf(IntMat{{6}, {4}});
    CHECK(res.h == IntMat{{2}, {0}});
}

TEST_CASE("snf diagonal and transforms") {
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t r = 1 + iter % 3, c = 1 + (iter / 3) % 3;
        IntMat a = rnd_mat(r, c, -9, 9);
        auto res = snf(a);
        IntMat prod = res.left * a * res.right;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) {
                if (i == j && i < res.diag.size())
                    CHECK(prod(i, j) == res.diag[i]);
                else
                    CHECK(prod(i, j) == 0);
            }
        for (std::size_t i = 0; i + 1 < res.diag.size(); ++i) {
            CHECK(res.diag[i] >= 0);
            if (res.diag[i] != 0) CHECK(res.diag[i + 1] % res.diag[i] == 0);
        }
        if (r == c) {
            Int d = 1;
            for (const auto& x : res.diag) d *= x;
            CHECK(abs(d) == abs(det_ref(a)));
        }
    }
}

TEST_CASE("snf known values") {
    auto res = snf(IntMat{{2, 0}, {0, 3}});
    CHECK(res.diag == IntVec{1, 6});
    res = snf(IntMat{{4, 0}, {0, 6}});
    CHECK(res.diag == IntVec{2, 12});
}

TEST_CASE("rational inverse and determinant") {
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n = 1 + iter % 3;
        IntMat a = rnd_mat(n, n, -6, 6);
        if (det_ref(a) == 0) {
            CHECK_THROWS_AS(rat_inverse(to_rat(a)), SingularMatrix);
            continue;
        }
        RatMat inv = rat_inverse(to_rat(a));
        CHECK(to_rat(a) * inv == RatMat::identity(n));
        CHECK(rat_det(to_rat(a)) == Rat(det_ref(a)));
        CHECK(int_det(a) == det_ref(a));
    }
}

TEST_CASE("solve_integer_linear exact") {
    // constructed solvable systems round trip
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t r = 1 + iter % 3, c = 1 + (iter / 3) % 3;
        IntMat a = rnd_mat(r, c, -5, 5);
        IntVec x(c);
        for (auto& e : x) e = rnd_int(-4, 4);
        IntVec b = a.apply_col(x);
        auto sol = solve_integer_linear(a, b);
        REQUIRE(sol.has_value());
        CHECK(a.apply_col(*sol) == b);
    }
    // 2x = 1 has no integer solution
    CHECK_FALSE(solve_integer_linear(IntMat{{2}}, IntVec{1}).has_value());
    // 3x = 6 does
    auto s = solve_integer_linear(IntMat{{3}}, IntVec{6});
    REQUIRE(s.has_value());
    CHECK((*s)[0] == 2);
}

TEST_CASE("solve_integer_linear with moduli") {
    // 2x = 1 mod 3 has x = 2; brute-force oracle
    auto s = solve_integer_linear(IntMat{{2}}, IntVec{1}, IntVec{3});
    REQUIRE(s.has_value());
    CHECK(((*s)[0] * 2 - 1) % 3 == 0);
    // 2x = 1 mod 4 is unsolvable (brute force over x in [0,4))
    CHECK_FALSE(solve_integer_linear(IntMat{{2}}, IntVec{1}, IntVec{4}).has_value());
    // random mixed systems vs exhaustive search over a small box
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t r = 2, c = 2;
        IntMat a = rnd_mat(r, c, -3, 3);
        IntVec b{rnd_int(-3, 3), rnd_int(-3, 3)};
        IntVec mods{rnd_int(0, 1) * rnd_int(2, 5), rnd_int(2, 5)};
        bool brute = false;
        for (int x0 = -10; x0 <= 10 && !brute; ++x0)
            for (int x1 = -10; x1 <= 10 && !brute; ++x1) {
                bool ok = true;
                for (std::size_t i = 0; i < r; ++i) {
                    Int lhs = a(i, 0) * x0 + a(i, 1) * x1 - b[i];
                    if (mods[i] != 0)
                        ok = ok && lhs % mods[i] == 0;
                    else
                        ok = ok && lhs == 0;
                }
                brute = ok;
            }
        auto sol = solve_integer_linear(a, b, mods);
        if (sol) {
            for (std::size_t i = 0; i < r; ++i) {
                Int lhs = a(i, 0) * (*sol)[0] + a(i, 1) * (*sol)[1] - b[i];
                if (mods[i] != 0)
                    CHECK(lhs % mods[i] == 0);
                else
                    CHECK(lhs == 0);
            }
        } else {
            CHECK_FALSE(brute);
        }
    }
}
