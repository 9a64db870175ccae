#include "tfgrp/towers.hpp"

namespace tfgrp {

Filtration Filtration::from_levels(std::vector<Lattice> levels, bool certified) {
    if (levels.empty()) throw Error("empty filtration");
    const std::size_t d = levels.front().dim();
    if (!(levels.front() == Lattice::standard(d))) throw Error("filtration must start at Z^d");
    for (std::size_t m = 0; m + 1 < levels.size(); ++m)
        if (!levels[m + 1].leq(levels[m])) throw Error("filtration levels must decrease");
    Filtration f;
    f.levels = std::move(levels);
    f.trivial_intersection_certified = certified;
    return f;
}

Cofiltration Cofiltration::from_levels(std::vector<Lattice> levels) {
    if (levels.empty()) throw Error("empty cofiltration");
    const std::size_t d = levels.front().dim();
    if (!(levels.front() == Lattice::standard(d))) throw Error("cofiltration must start at Z^d");
    for (std::size_t m = 0; m + 1 < levels.size(); ++m)
        if (!levels[m].leq(levels[m + 1])) throw Error("cofiltration levels must increase");
    Cofiltration c;
    c.levels = std::move(levels);
    return c;
}

Filtration power_filtration(std::size_t d, const Int& n, std::size_t depth) {
    std::vector<Lattice> levels;
    Int q = 1;
    for (std::size_t m = 0; m < depth; ++m) {
        levels.push_back(Lattice::scaled(d, Rat(q)));
        q *= n;
    }
    return Filtration::from_levels(std::move(levels));
}

Cofiltration canonical_cofiltration(const TypePresentation& g, std::size_t depth) {
    const std::size_t d = g.rank();
    if (d == 0 || depth == 0) throw Error("empty group or depth");
    std::vector<Lattice> levels;
    std::vector<Int> primes;
    for (std::size_t m = 0; m < depth; ++m) {
        if (m > 0) primes.push_back(nth_prime(static_cast<unsigned>(m)));
        std::vector<RatVec> rows;
        for (std::size_t i = 0; i < d; ++i) {
            RatVec e(d, Rat(0));
            e[i] = 1;
            rows.push_back(e);
        }
        for (std::size_t i = 0; i < d; ++i) {
            Int q = 1;
            for (const auto& p : primes) {
                TypeVal t = g.types[i].value(p);
                unsigned long e = t.inf ? m : std::min<unsigned long>(t.finite, m);
                for (unsigned long k = 0; k < e; ++k) q *= p;
            }
            RatVec gen(d, Rat(0));
            gen[i] = make_rat(1, q);
            rows.push_back(gen);
        }
        levels.push_back(Lattice::from_rows(d, rows));
    }
    Cofiltration c = Cofiltration::from_levels(std::move(levels));
    c.free_summand_warning = has_free_summand(g);
    return c;
}

Filtration dualize(const Cofiltration& c) {
    std::vector<Lattice> levels;
    for (const auto& l : c.levels) levels.push_back(l.annihilator());
    return Filtration::from_levels(std::move(levels), !c.free_summand_warning);
}

Cofiltration dualize(const Filtration& f) {
    std::vector<Lattice> levels;
    for (const auto& l : f.levels) levels.push_back(l.annihilator());
    return Cofiltration::from_levels(std::move(levels));
}

namespace {

bool maps_into(const RatMat& f, const Lattice& src, const Lattice& tgt) {
    RatMat b = src.basis();
    for (std::size_t i = 0; i < src.dim(); ++i)
        if (!tgt.contains(f.apply_row(b.row(i)))) return false;
    return true;
}

}  // namespace

void validate_tower_map(const TowerMap& t) {
    if (t.indices.size() != t.maps.size()) throw InvalidTowerMap("index/map count mismatch");
    if (t.maps.empty()) throw InvalidTowerMap("empty tower map");
    for (std::size_t k = 0; k + 1 < t.indices.size(); ++k)
        if (t.indices[k] > t.indices[k + 1]) throw InvalidTowerMap("indices must be nondecreasing");
    for (std::size_t k = 0; k < t.maps.size(); ++k) {
        const std::size_t mk = t.indices[k];
        if (t.kind == TowerKind::Filtration) {
            if (mk >= t.source.size() || k >= t.target.size())
                throw InvalidTowerMap("index beyond truncation");
            if (!maps_into(t.maps[k], t.source[mk], t.target[k]))
                throw InvalidTowerMap("image not contained in target level");
        } else {
            if (k >= t.source.size() || mk >= t.target.size())
                throw InvalidTowerMap("index beyond truncation");
            if (!maps_into(t.maps[k], t.source[k], t.target[mk]))
                throw InvalidTowerMap("image not contained in target level");
        }
        // inclusion bonding: coherence squares force a single linear map
        if (!(t.maps[k] == t.maps[0])) throw InvalidTowerMap("maps disagree as linear extensions");
    }
}

TowerMap adj(const TowerMap& t) {
    validate_tower_map(t);
    TowerMap out;
    out.kind = t.kind == TowerKind::Cofiltration ? TowerKind::Filtration : TowerKind::Cofiltration;
    const auto dual_levels = [](const std::vector<Lattice>& ls) {
        std::vector<Lattice> out;
        for (const auto& l : ls) out.push_back(l.annihilator());
        return out;
    };
    out.source = dual_levels(t.target);
    out.target = dual_levels(t.source);
    out.indices = t.indices;
    for (const auto& f : t.maps) out.maps.push_back(f.transpose());
    validate_tower_map(out);
    return out;
}

bool congruent(const TowerMap& t, const TowerMap& u) {
    validate_tower_map(t);
    validate_tower_map(u);
    if (t.kind != u.kind || t.source != u.source || t.target != u.target) throw Incompatible();
    // monomorphic lattice towers: congruence is equality of Q-linear extensions
    return t.maps[0] == u.maps[0];
}

TowerMap compose(const TowerMap& first, const TowerMap& second) {
    validate_tower_map(first);
    validate_tower_map(second);
    if (first.kind != second.kind || first.target != second.source) throw Incompatible();
    TowerMap out;
    out.kind = first.kind;
    out.source = first.source;
    out.target = second.target;
    if (first.kind == TowerKind::Filtration) {
        for (std::size_t l = 0; l < second.length(); ++l) {
            const std::size_t nl = second.indices[l];
            if (nl >= first.length()) break;  // truncate where data runs out
            out.indices.push_back(first.indices[nl]);
            out.maps.push_back(first.maps[nl] * second.maps[l]);
        }
    } else {
        for (std::size_t k = 0; k < first.length(); ++k) {
            const std::size_t mk = first.indices[k];
            if (mk >= second.length()) break;
            out.indices.push_back(second.indices[mk]);
            out.maps.push_back(first.maps[k] * second.maps[mk]);
        }
    }
    if (out.maps.empty()) throw Incompatible("composition is empty at this truncation");
    validate_tower_map(out);
    return out;
}

TowerMap identity_tower_map(TowerKind kind, const std::vector<Lattice>& levels) {
    TowerMap t;
    t.kind = kind;
    t.source = levels;
    t.target = levels;
    const std::size_t d = levels.empty() ? 0 : levels.front().dim();
    for (std::size_t k = 0; k < levels.size(); ++k) {
        t.indices.push_back(k);
        t.maps.push_back(to_rat(IntMat::identity(d)));
    }
    return t;
}

IntMat row_span_hnf(const IntMat& m) {
    HnfResult h = hnf(m);
    std::size_t rank = 0;
    for (std::size_t i = 0; i < h.h.rows(); ++i)
        for (std::size_t j = 0; j < h.h.cols(); ++j)
            if (h.h(i, j) != 0) {
                rank = i + 1;
                break;
            }
    IntMat out(rank, m.cols());
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = h.h(i, j);
    return out;
}

std::vector<MlVerdict> ml_check(const IntTower& tower) {
    const std::size_t depth = tower.levels.size();
    if (depth == 0) throw Error("empty tower");
    if (tower.bonding.size() + 1 != depth) throw DimensionMismatch("bonding count");
    for (const auto& g : tower.levels)
        if (g.cols() != tower.rank) throw DimensionMismatch("generator width");
    std::vector<MlVerdict> verdicts;
    for (std::size_t m = 0; m < depth; ++m) {
        // images p^(m,k)(A^(k)) for m <= k < depth, as canonical row spans
        std::vector<IntMat> images;
        IntMat descent = IntMat::identity(tower.rank);  // level k -> level m
        for (std::size_t k = m; k < depth; ++k) {
            if (k > m) descent = tower.bonding[k - 1] * descent;
            images.push_back(row_span_hnf(tower.levels[k] * descent));
        }
        std::size_t k0 = images.size();
        for (std::size_t s = images.size(); s-- > 0;) {
            if (images[s] == images.back())
                k0 = s;
            else
                break;
        }
        MlVerdict v;
        // a chain constant over its whole window is trivially stabilized;
        // a proper tail needs at least 2 confirming constant steps
        if (k0 == 0 || images.size() - k0 >= 3) {
            v.stabilized = true;
            v.stabilized_at = m + k0;
        }
        verdicts.push_back(v);
    }
    return verdicts;
}

}  // namespace tfgrp
