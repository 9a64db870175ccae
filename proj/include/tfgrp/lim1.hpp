#pragma once

#include <map>

#include "tfgrp/completions.hpp"

namespace tfgrp {

/// Element of C^0 at truncation: one entry per level, entries[m] in levels[m].
struct CochainVector {
    Filtration tower;
    std::vector<RatVec> entries;  // size = tower.depth()
};

void validate_cochain(const CochainVector& b);

/// Cocycle stored by consecutive entries a_{m,m+1} in levels[m], m < M-1;
/// full entries are reconstructed by telescoping and automatically satisfy
/// the cocycle identity.
struct TruncatedCocycle {
    Filtration tower;
    std::vector<RatVec> consecutive;  // size = tower.depth() - 1

    friend bool operator==(const TruncatedCocycle& a, const TruncatedCocycle& b) {
        return a.tower == b.tower && a.consecutive == b.consecutive;
    }
};

void validate_cocycle(const TruncatedCocycle& a);

TruncatedCocycle cocycle_zero(const Filtration& f);
TruncatedCocycle cocycle_add(const TruncatedCocycle& a, const TruncatedCocycle& b);

/// (delta1 b)_{m,m+1} = b_m - b_{m+1} (inclusion bonding maps).
TruncatedCocycle delta1(const CochainVector& b);

/// x_{m0,m1} = a_{m0,m0+1} + ... + a_{m1-1,m1}; x_{m,m} = 0.
RatVec expand_entries(const TruncatedCocycle& a, std::size_t m0, std::size_t m1);

/// Checks the delta^2 identity x_{m0,m2} = x_{m0,m1} + x_{m1,m2}, the zero
/// diagonal, and level membership, on arbitrary full C^1 input.
bool validate_full(const Filtration& tower,
                   const std::map<std::pair<std::size_t, std::size_t>, RatVec>& entries);

/// Gauge z_{M-1} = 0: b_k = x_{k,M-1}. Always satisfies delta1(b) = a at
/// truncation.
CochainVector coboundary_solve(const TruncatedCocycle& a);

/// sigma(a) = lim_k a_{0,k} at truncation: chain[m] = a_{0,M-1} mod level m.
ProfiniteElement sigma(const TruncatedCocycle& a);

/// Surjectivity witness: a cocycle with sigma(sigma_section(x)) = x.
TruncatedCocycle sigma_section(const ProfiniteElement& x);

}  // namespace tfgrp
