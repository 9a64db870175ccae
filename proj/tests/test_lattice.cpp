#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgrp/lattice.hpp"

using namespace tfgrp;

namespace {

std::mt19937 rng(77001);

int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

// random full-rank lattice in Q^d with entries n/den, |n| <= 9, den <= 12
Lattice rnd_lattice(std::size_t d) {
    for (;;) {
        const int den = rnd(1, 12);
        std::vector<RatVec> rows(d, RatVec(d));
        for (auto& r : rows)
            for (auto& q : r) q = make_rat(rnd(-9, 9), den);
        try {
            return Lattice::from_rows(d, rows);
        } catch (const NotFullRank&) {
        }
    }
}

RatVec rnd_member(const Lattice& l) {
    RatVec coeff(l.dim());
    for (auto& c : coeff) c = Rat(rnd(-6, 6));
    return l.basis().apply_row(coeff);
}

}  // namespace

TEST_CASE("canonical form") {
    // (1/2)*rows(2,0;0,2) is just Z^2
    CHECK(Lattice::from_rows(2, {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}) == Lattice::standard(2));
    auto l = Lattice::from_rows(2, {{make_rat(2, 2), Rat(0)}, {Rat(0), make_rat(2, 2)}});
    CHECK(l == Lattice::standard(2));
    CHECK(l.den() == 1);
    // non-canonical generators of the same lattice agree
    auto a = Lattice::from_rows(2, {{make_rat(1, 2), Rat(0)}, {Rat(0), Rat(1)}});
    auto b = Lattice::from_rows(2, {{make_rat(1, 2), Rat(1)}, {make_rat(-1, 2), Rat(0)}});
    CHECK(a == b);
    // redundant generating sets collapse
    auto c = Lattice::from_rows(2, {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}, {Rat(2), Rat(1)}});
    CHECK(c == Lattice::from_rows(2, {{Rat(2), Rat(0)}, {Rat(0), Rat(1)}}));
    CHECK_THROWS_AS(Lattice::from_rows(2, {{Rat(1), Rat(1)}}), NotFullRank);
}

TEST_CASE("membership brute force") {
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t d = 1 + iter % 3;
        Lattice l = rnd_lattice(d);
        for (int t = 0; t < 20; ++t) {
            RatVec v = rnd_member(l);
            CHECK(l.contains(v));
            // perturb off-lattice: add a vector with huge prime denominator
            RatVec w = v;
            w[rnd(0, static_cast<int>(d) - 1)] += make_rat(1, 9973);
            CHECK_FALSE(l.contains(w));
        }
    }
}

TEST_CASE("sum and intersection against membership") {
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t d = 1 + iter % 2;
        Lattice a = rnd_lattice(d), b = rnd_lattice(d);
        Lattice s = a.sum(b), i = a.intersect(b);
        CHECK(a.leq(s));
        CHECK(b.leq(s));
        CHECK(i.leq(a));
        CHECK(i.leq(b));
        for (int t = 0; t < 10; ++t) {
            CHECK(s.contains(rnd_member(a)));
            RatVec v = rnd_member(i);
            CHECK(a.contains(v));
            CHECK(b.contains(v));
        }
    }
    // 2Z + 3Z = Z, 2Z cap 3Z = 6Z
    auto z2 = Lattice::scaled(1, Rat(2)), z3 = Lattice::scaled(1, Rat(3));
    CHECK(z2.sum(z3) == Lattice::standard(1));
    CHECK(z2.intersect(z3) == Lattice::scaled(1, Rat(6)));
}

TEST_CASE("annihilator examples") {
    CHECK(Lattice::standard(3).annihilator() == Lattice::standard(3));
    CHECK(Lattice::scaled(1, Rat(2)).annihilator() == Lattice::scaled(1, make_rat(1, 2)));
    // dual of diag(2,3) is diag(1/2,1/3)
    auto l = Lattice::from_rows(2, {{Rat(2), Rat(0)}, {Rat(0), Rat(3)}});
    auto dual = Lattice::from_rows(2, {{make_rat(1, 2), Rat(0)}, {Rat(0), make_rat(1, 3)}});
    CHECK(l.annihilator() == dual);
}

TEST_CASE("annihilator pairing and involution") {
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t d = 1 + iter % 3;
        Lattice l = rnd_lattice(d);
        Lattice ann = l.annihilator();
        CHECK(ann.annihilator() == l);
        // the defining pairing: <x, y> in Z on basis vectors
        RatMat lb = l.basis(), ab = ann.basis();
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Rat dot = 0;
                for (std::size_t k = 0; k < d; ++k) dot += lb(i, k) * ab(j, k);
                CHECK(dot.get_den() == 1);
            }
    }
}

TEST_CASE("index and quotient invariants") {
    auto z = Lattice::standard(2);
    auto sub = Lattice::from_rows(2, {{Rat(2), Rat(0)}, {Rat(0), Rat(4)}});
    CHECK(z.index_of(sub) == 8);
    CHECK(z.quotient_invariants(sub) == IntVec{2, 4});
    auto sub2 = Lattice::from_rows(2, {{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}});
    CHECK(z.index_of(sub2) == 2);
    CHECK(z.quotient_invariants(sub2) == IntVec{2});
    CHECK_THROWS_AS(sub.index_of(z), NotSublattice);
    // multiplicativity [A:C] = [A:B][B:C] on random chains
    for (int iter = 0; iter < 30; ++iter) {
        Lattice a = rnd_lattice(2);
        Lattice b = a.intersect(rnd_lattice(2));
        Lattice c = b.intersect(rnd_lattice(2));
        CHECK(a.index_of(c) == a.index_of(b) * b.index_of(c));
    }
}

TEST_CASE("quotient invariants of power lattices") {
    // Z / 2^m Z
    for (int m = 1; m <= 6; ++m) {
        Int p2 = 1;
        for (int i = 0; i < m; ++i) p2 *= 2;
        CHECK(Lattice::standard(1).quotient_invariants(Lattice::scaled(1, Rat(p2))) == IntVec{p2});
    }
}

TEST_CASE("reduce_mod canonical representatives") {
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t d = 1 + iter % 3;
        Lattice l = rnd_lattice(d);
        RatVec v(d);
        for (auto& q : v) q = make_rat(rnd(-30, 30), rnd(1, 7));
        RatVec r = l.reduce_mod(v);
        // v - r in l, and reduction is idempotent
        RatVec diff(d);
        for (std::size_t k = 0; k < d; ++k) diff[k] = v[k] - r[k];
        CHECK(l.contains(diff));
        CHECK(l.reduce_mod(r) == r);
        // members reduce to zero
        CHECK(l.reduce_mod(rnd_member(l)) == RatVec(d, Rat(0)));
    }
    // dyadic chain of 11: 11 mod 2 = 1, mod 4 = 3, mod 8 = 3
    CHECK(Lattice::scaled(1, Rat(2)).reduce_mod({Rat(11)}) == RatVec{Rat(1)});
    CHECK(Lattice::scaled(1, Rat(4)).reduce_mod({Rat(11)}) == RatVec{Rat(3)});
    CHECK(Lattice::scaled(1, Rat(8)).reduce_mod({Rat(11)}) == RatVec{Rat(3)});
}
