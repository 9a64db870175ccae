#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgrp/lim1.hpp"

using namespace tfgrp;

namespace {

std::mt19937 rng(321555);

int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Filtration dyadic(std::size_t depth) { return power_filtration(1, 2, depth); }

Filtration mixed(std::size_t depth) {
    std::vector<Lattice> levels;
    Int s = 1;
    for (std::size_t m = 0; m < depth; ++m) {
        levels.push_back(Lattice::from_rows(
            2, {{Rat(s), Rat(0)}, {Rat(0), Rat(s * s)}}));
        s *= 2;
    }
    return Filtration::from_levels(levels);
}

CochainVector rnd_cochain(const Filtration& f) {
    CochainVector b;
    b.tower = f;
    for (std::size_t m = 0; m < f.depth(); ++m) {
        RatVec coeff(f.dim());
        for (auto& c : coeff) c = Rat(rnd(-9, 9));
        b.entries.push_back(f.levels[m].basis().apply_row(coeff));
    }
    return b;
}

TruncatedCocycle rnd_cocycle(const Filtration& f) {
    TruncatedCocycle a;
    a.tower = f;
    for (std::size_t m = 0; m + 1 < f.depth(); ++m) {
        RatVec coeff(f.dim());
        for (auto& c : coeff) c = Rat(rnd(-9, 9));
        a.consecutive.push_back(f.levels[m].basis().apply_row(coeff));
    }
    return a;
}

}  // namespace

TEST_CASE("delta1 and full expansion satisfy the cocycle identity") {
    for (int iter = 0; iter < 250; ++iter) {
        Filtration f = iter % 2 ? dyadic(5) : mixed(4);
        auto b = rnd_cochain(f);
        auto a = delta1(b);
        validate_cocycle(a);
        // full table from consecutive entries passes the delta^2 = 0 check
        std::map<std::pair<std::size_t, std::size_t>, RatVec> full;
        for (std::size_t m0 = 0; m0 < f.depth(); ++m0)
            for (std::size_t m1 = m0; m1 < f.depth(); ++m1)
                full[{m0, m1}] = expand_entries(a, m0, m1);
        CHECK(validate_full(f, full));
        // and matches b_m - b_m1 directly
        for (std::size_t m0 = 0; m0 < f.depth(); ++m0)
            for (std::size_t m1 = m0; m1 < f.depth(); ++m1) {
                RatVec expect(f.dim());
                for (std::size_t i = 0; i < f.dim(); ++i)
                    expect[i] = b.entries[m0][i] - b.entries[m1][i];
                CHECK(full[{m0, m1}] == expect);
            }
    }
}

TEST_CASE("validate_full rejects corrupted tables") {
    Filtration f = dyadic(4);
    auto a = rnd_cocycle(f);
    std::map<std::pair<std::size_t, std::size_t>, RatVec> full;
    for (std::size_t m0 = 0; m0 < f.depth(); ++m0)
        for (std::size_t m1 = m0; m1 < f.depth(); ++m1) full[{m0, m1}] = expand_entries(a, m0, m1);
    CHECK(validate_full(f, full));
    auto bad = full;
    bad[{0, 3}][0] += 1;
    CHECK_FALSE(validate_full(f, bad));
    bad = full;
    bad[{1, 1}] = {Rat(2)};
    CHECK_FALSE(validate_full(f, bad));
    bad = full;
    bad[{2, 3}] = {make_rat(1, 2)};  // outside level 2
    CHECK_FALSE(validate_full(f, bad));
}

TEST_CASE("coboundary_solve inverts delta1 at truncation") {
    for (int iter = 0; iter < 250; ++iter) {
        Filtration f = iter % 2 ? dyadic(6) : mixed(4);
        auto a = rnd_cocycle(f);
        auto b = coboundary_solve(a);
        CHECK(delta1(b) == a);
    }
}

TEST_CASE("sigma on the dyadic generator chain") {
    // a_{m,m+1} = 2^m sums to 2^M - 1, i.e. the chain of -1
    auto f = dyadic(6);
    TruncatedCocycle a;
    a.tower = f;
    Int p = 1;
    for (std::size_t m = 0; m + 1 < f.depth(); ++m) {
        a.consecutive.push_back({Rat(p)});
        p *= 2;
    }
    auto x = sigma(a);
    CHECK(x == embed(f, {Rat(31)}));
    CHECK(x == embed(f, {Rat(-1 + 32)}));
    for (std::size_t m = 1; m < f.depth(); ++m) {
        Int pm = 1;
        for (std::size_t i = 0; i < m; ++i) pm *= 2;
        CHECK(x.chain[m] == RatVec{Rat(pm - 1)});
    }
}

TEST_CASE("sigma is additive and kills coboundaries up to the last level") {
    for (int iter = 0; iter < 100; ++iter) {
        Filtration f = mixed(4);
        auto a1 = rnd_cocycle(f), a2 = rnd_cocycle(f);
        CHECK(sigma(cocycle_add(a1, a2)) == pf_add(sigma(a1), sigma(a2)));
        // sigma of a coboundary is the embed of its leading entry
        auto b = rnd_cochain(f);
        CHECK(sigma(delta1(b)) == embed(f, b.entries[0]));
    }
}

TEST_CASE("sigma_section is a section of sigma") {
    for (int iter = 0; iter < 200; ++iter) {
        Filtration f = iter % 2 ? dyadic(7) : mixed(4);
        RatVec v(f.dim());
        for (auto& c : v) c = Rat(rnd(-500, 500));
        auto x = embed(f, v);
        auto a = sigma_section(x);
        validate_cocycle(a);
        CHECK(sigma(a) == x);
    }
}

TEST_CASE("cochain and cocycle validation") {
    Filtration f = dyadic(3);
    CochainVector b;
    b.tower = f;
    b.entries = {{Rat(1)}, {Rat(2)}, {Rat(4)}};
    validate_cochain(b);
    b.entries[2] = {Rat(2)};  // 2 is not in 4Z
    CHECK_THROWS(validate_cochain(b));
    TruncatedCocycle a;
    a.tower = f;
    a.consecutive = {{Rat(1)}, {Rat(3)}};  // 3 not in 2Z
    CHECK_THROWS(validate_cocycle(a));
    a.consecutive = {{Rat(1)}, {Rat(2)}};
    validate_cocycle(a);
}
