#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tfgrp/towers.hpp"

using namespace tfgrp;

namespace {

std::mt19937 rng(550123);

int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BaerType zinvp(int p) { return BaerType::z_inv(p); }

// random cofiltration: Z^d followed by sums with scaled lattices
Cofiltration rnd_cofiltration(std::size_t d, std::size_t depth) {
    std::vector<Lattice> levels{Lattice::standard(d)};
    while (levels.size() < depth) {
        Lattice next = levels.back().sum(Lattice::scaled(d, make_rat(1, rnd(1, 6))));
        levels.push_back(next);
    }
    return Cofiltration::from_levels(levels);
}

// identity-coherent random cotower map: a fixed integer matrix applied at
// every index, valid when it maps each source level into the target level
std::optional<TowerMap> try_map(const Cofiltration& s, const Cofiltration& t, const IntMat& f) {
    TowerMap m;
    m.kind = TowerKind::Cofiltration;
    m.source = s.levels;
    m.target = t.levels;
    for (std::size_t k = 0; k < s.levels.size(); ++k) {
        m.indices.push_back(k);
        m.maps.push_back(to_rat(f));
    }
    try {
        validate_tower_map(m);
    } catch (const InvalidTowerMap&) {
        return std::nullopt;
    }
    return m;
}

}  // namespace

TEST_CASE("filtration and cofiltration construction") {
    auto f = power_filtration(2, 3, 4);
    CHECK(f.depth() == 4);
    CHECK(f.levels[0] == Lattice::standard(2));
    CHECK(f.levels[2] == Lattice::scaled(2, Rat(9)));
    CHECK_THROWS_AS(Filtration::from_levels({Lattice::scaled(1, Rat(2))}), Error);
    // increasing chains only
    CHECK_THROWS_AS(Cofiltration::from_levels(
                        {Lattice::standard(1), Lattice::scaled(1, Rat(2))}),
                    Error);
}

TEST_CASE("canonical cofiltration closed form") {
    // Z[1/2]: level m adds e/2^m (2 is the only prime below the bound with
    // positive type value)
    TypePresentation g{{zinvp(2)}};
    auto c = canonical_cofiltration(g, 4);
    CHECK(c.levels[0] == Lattice::standard(1));
    CHECK(c.levels[1] == Lattice::scaled(1, make_rat(1, 2)));
    CHECK(c.levels[2] == Lattice::scaled(1, make_rat(1, 4)));
    CHECK(c.levels[3] == Lattice::scaled(1, make_rat(1, 8)));
    CHECK_FALSE(c.free_summand_warning);

    // Q at depth 3: level m is generated by e / prod_{p <= p_m} p^m
    TypePresentation q{{BaerType::divisible()}};
    auto cq = canonical_cofiltration(q, 3);
    CHECK(cq.levels[0] == Lattice::standard(1));
    CHECK(cq.levels[1] == Lattice::scaled(1, make_rat(1, 2)));
    CHECK(cq.levels[2] == Lattice::scaled(1, make_rat(1, 36)));

    // finite exceptions saturate: type 2 -> 3
    TypePresentation e{{BaerType(false, {{Int(2), TypeVal::of(3)}})}};
    auto ce = canonical_cofiltration(e, 6);
    CHECK(ce.levels[5] == Lattice::scaled(1, make_rat(1, 8)));
    CHECK(ce.free_summand_warning);  // type is =* zero

    // rank 2 mixes coordinates independently
    TypePresentation g2{{zinvp(2), zinvp(3)}};
    auto c2 = canonical_cofiltration(g2, 3);
    CHECK(c2.levels[2] ==
          Lattice::from_rows(2, {{make_rat(1, 4), Rat(0)}, {Rat(0), make_rat(1, 9)}}));
}

TEST_CASE("dualize") {
    TypePresentation g{{zinvp(2)}};
    auto c = canonical_cofiltration(g, 4);
    auto f = dualize(c);
    CHECK(f.levels[3] == Lattice::scaled(1, Rat(8)));
    CHECK(f.trivial_intersection_certified);
    CHECK(dualize(f).levels == c.levels);
    // order reversal levelwise on random chains
    for (int iter = 0; iter < 30; ++iter) {
        auto rc = rnd_cofiltration(2, 4);
        auto rf = dualize(rc);
        for (std::size_t m = 0; m + 1 < rf.depth(); ++m) CHECK(rf.levels[m + 1].leq(rf.levels[m]));
        CHECK(dualize(rf).levels == rc.levels);
    }
}

TEST_CASE("tower map validation") {
    TypePresentation lam{{zinvp(2), BaerType(false, {{Int(2), TypeVal::infinite()},
                                                     {Int(3), TypeVal::infinite()}})}};
    auto c = canonical_cofiltration(lam, 4);
    // phi(x,y) = (x, 2x+y) acts on row vectors as the matrix with rows
    // (1,2),(0,1)
    auto phi = try_map(c, c, IntMat{{1, 2}, {0, 1}});
    REQUIRE(phi.has_value());
    // the transpose fails: (0,1/6) goes to (1/6, 1/6) which is outside
    auto phit = try_map(c, c, IntMat{{1, 0}, {2, 1}});
    CHECK_FALSE(phit.has_value());
    // incoherent matrices rejected
    TowerMap bad = *phi;
    bad.maps[2] = to_rat(IntMat{{1, 2}, {0, 2}});
    CHECK_THROWS_AS(validate_tower_map(bad), InvalidTowerMap);
}

TEST_CASE("adj transposes between duals") {
    TypePresentation lam{{zinvp(2), BaerType(false, {{Int(2), TypeVal::infinite()},
                                                     {Int(3), TypeVal::infinite()}})}};
    auto c = canonical_cofiltration(lam, 4);
    auto phi = try_map(c, c, IntMat{{1, 2}, {0, 1}});
    REQUIRE(phi.has_value());
    auto a = adj(*phi);
    CHECK(a.kind == TowerKind::Filtration);
    for (const auto& m : a.maps) CHECK(m == phi->maps[0].transpose());
    // involution up to congruence
    CHECK(congruent(adj(a), *phi));
}

TEST_CASE("compose and congruence") {
    auto c = rnd_cofiltration(2, 5);
    auto id = identity_tower_map(TowerKind::Cofiltration, c.levels);
    validate_tower_map(id);
    CHECK(congruent(compose(id, id), id));
    TypePresentation lam{{zinvp(2), BaerType(false, {{Int(2), TypeVal::infinite()},
                                                     {Int(3), TypeVal::infinite()}})}};
    auto cl = canonical_cofiltration(lam, 5);
    auto phi = try_map(cl, cl, IntMat{{1, 2}, {0, 1}});
    auto psi = try_map(cl, cl, IntMat{{1, 0}, {0, 1}});
    REQUIRE(phi.has_value());
    REQUIRE(psi.has_value());
    auto comp = compose(*phi, *psi);
    validate_tower_map(comp);
    CHECK(comp.maps[0] == phi->maps[0]);
    // adj contravariance: adj(psi o phi) congruent to adj(phi) o adj(psi)
    CHECK(congruent(adj(comp), compose(adj(*psi), adj(*phi))));
}

TEST_CASE("ml_check verdicts") {
    // identity bonding: stabilized at m for every level
    IntTower ident{1, {IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}},
                   {IntMat{{1}}, IntMat{{1}}, IntMat{{1}}}};
    auto v = ml_check(ident);
    for (std::size_t m = 0; m < v.size(); ++m) {
        CHECK(v[m].stabilized);
        CHECK(v[m].stabilized_at == m);
    }
    // multiplication by 2: images 2^{k-m} Z strictly shrink
    IntTower twos{1,
                  {IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}},
                  {IntMat{{2}}, IntMat{{2}}, IntMat{{2}}, IntMat{{2}}}};
    auto w = ml_check(twos);
    for (std::size_t m = 0; m + 1 < w.size(); ++m) CHECK_FALSE(w[m].stabilized);
    // eventually identity after level 2
    IntTower event{1,
                   {IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}},
                   {IntMat{{2}}, IntMat{{2}}, IntMat{{1}}, IntMat{{1}}, IntMat{{1}}}};
    auto e = ml_check(event);
    CHECK(e[0].stabilized);
    CHECK(e[0].stabilized_at == 2);
    CHECK(e[1].stabilized);
    CHECK(e[1].stabilized_at == 2);
    // rank 2 with a rank-deficient image chain stays exact
    IntTower r2{2,
                {IntMat{{1, 0}, {0, 1}}, IntMat{{1, 0}, {0, 1}}, IntMat{{1, 0}, {0, 1}},
                 IntMat{{1, 0}, {0, 1}}},
                {IntMat{{1, 0}, {0, 0}}, IntMat{{1, 0}, {0, 0}}, IntMat{{1, 0}, {0, 0}}}};
    auto rv = ml_check(r2);
    CHECK(rv[0].stabilized);
    CHECK(rv[0].stabilized_at == 1);
}

TEST_CASE("row_span_hnf canonicalizes") {
    CHECK(row_span_hnf(IntMat{{2, 0}, {0, 0}}) == IntMat{{2, 0}});
    CHECK(row_span_hnf(IntMat{{1, 1}, {2, 2}}) == IntMat{{1, 1}});
    CHECK(row_span_hnf(IntMat{{0, 2}, {2, 0}}) == IntMat{{2, 0}, {0, 2}});
}
