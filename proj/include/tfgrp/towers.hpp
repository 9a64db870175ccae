#pragma once

#include <optional>
#include <vector>

#include "tfgrp/baer.hpp"
#include "tfgrp/lattice.hpp"

namespace tfgrp {

/// Decreasing chain Z^d = L_0 >= L_1 >= ... of full-rank lattices
/// (a truncation of an infinite filtration).
struct Filtration {
    std::vector<Lattice> levels;
    /// set when the chain was produced by dualizing the canonical
    /// cofiltration of a group with no free summand (trivial intersection
    /// then holds for the untruncated scheme); unknown for raw input.
    bool trivial_intersection_certified = false;

    std::size_t dim() const { return levels.empty() ? 0 : levels.front().dim(); }
    std::size_t depth() const { return levels.size(); }

    static Filtration from_levels(std::vector<Lattice> levels, bool certified = false);

    friend bool operator==(const Filtration& a, const Filtration& b) {
        return a.levels == b.levels;
    }
};

/// Increasing chain Z^d = L_0 <= L_1 <= ... of full-rank subgroups of Q^d.
struct Cofiltration {
    std::vector<Lattice> levels;
    bool free_summand_warning = false;

    std::size_t dim() const { return levels.empty() ? 0 : levels.front().dim(); }
    std::size_t depth() const { return levels.size(); }

    static Cofiltration from_levels(std::vector<Lattice> levels);

    friend bool operator==(const Cofiltration& a, const Cofiltration& b) {
        return a.levels == b.levels;
    }
};

/// The dyadic-style filtration (n^m Z^d)_m for a scale n, depth M.
Filtration power_filtration(std::size_t d, const Int& n, std::size_t depth);

/// Closed-form scheme: level m is generated by Z^d together with
/// e_i / prod_{p <= p_m} p^{min(t_i(p), m)}, where p_m is the m-th prime.
Cofiltration canonical_cofiltration(const TypePresentation& g, std::size_t depth);

Filtration dualize(const Cofiltration& c);
Cofiltration dualize(const Filtration& f);

enum class TowerKind { Filtration, Cofiltration };

/// A truncated tower/cotower map [m_k, f^(k)] between chains of lattices.
/// All bonding maps are inclusions, so validity forces the matrices of a
/// coherent map to agree as Q-linear maps.
struct TowerMap {
    TowerKind kind = TowerKind::Cofiltration;
    std::vector<Lattice> source;  // levels of the source chain
    std::vector<Lattice> target;
    std::vector<std::size_t> indices;  // nondecreasing m_k, one per map
    std::vector<RatMat> maps;          // f^(k) acting on row vectors

    std::size_t length() const { return maps.size(); }
};

/// Levelwise containment and coherence; throws InvalidTowerMap on failure.
void validate_tower_map(const TowerMap& t);

/// Adj functor: transpose the maps of a valid cotower map, producing a
/// tower map between the dualized filtrations (and conversely).
TowerMap adj(const TowerMap& t);

/// Exact congruence for monomorphic lattice towers: per-index equality of
/// Q-linear extensions.
bool congruent(const TowerMap& t, const TowerMap& u);

/// second o first; merges index sequences. Throws Incompatible.
TowerMap compose(const TowerMap& first, const TowerMap& second);

TowerMap identity_tower_map(TowerKind kind, const std::vector<Lattice>& levels);

/// A tower of subgroups of Z^r with explicit bonding matrices
/// (bonding[k] maps level k+1 into level k, acting on row vectors).
struct IntTower {
    std::size_t rank = 0;
    std::vector<IntMat> levels;   // generator rows of A^(k), possibly rank-deficient
    std::vector<IntMat> bonding;  // size levels.size() - 1
};

struct MlVerdict {
    bool stabilized = false;
    std::size_t stabilized_at = 0;  // meaningful when stabilized
};

/// Window verdict per level m: image chain p^(m,k)(A^(k)) for m <= k < M,
/// compared as HNF row spans; stabilization requires at least 2 confirming
/// constant steps at the window end.
std::vector<MlVerdict> ml_check(const IntTower& tower);

/// HNF row span with zero rows dropped (canonical form for subgroup images).
IntMat row_span_hnf(const IntMat& m);

}  // namespace tfgrp
