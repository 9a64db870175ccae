#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tfgrp/matrix.hpp"

namespace tfgrp {

/// A value in N u {inf}.
struct TypeVal {
    bool inf = false;
    unsigned long finite = 0;  // meaningful only when !inf

    static TypeVal infinite() { return {true, 0}; }
    static TypeVal of(unsigned long v) { return {false, v}; }

    friend bool operator==(const TypeVal&, const TypeVal&) = default;
};

/// Baer characteristic p -> N u {inf} with default in {0, inf} and finitely
/// many exceptions. Denotes the rank-1 group
/// {a/b in Q : v_p(b) <= t(p) for all p}.
class BaerType {
public:
    BaerType() = default;
    BaerType(bool default_inf, std::map<Int, TypeVal> exceptions);

    static BaerType zero() { return BaerType(false, {}); }                  // Z
    static BaerType divisible() { return BaerType(true, {}); }              // Q
    static BaerType z_inv(const Int& p);                                    // Z[1/p]

    bool default_inf() const { return default_inf_; }
    const std::map<Int, TypeVal>& exceptions() const { return exceptions_; }

    /// t(p); throws NotPrime.
    TypeVal value(const Int& p) const;

    friend bool operator==(const BaerType&, const BaerType&) = default;

private:
    bool default_inf_ = false;
    std::map<Int, TypeVal> exceptions_;  // normalized: never maps to the default
};

/// true iff t and u differ at only finitely many primes and have the same
/// infinity set.
bool baer_equivalent(const BaerType& t, const BaerType& u);

/// Direct sum of rank-1 groups, Z^d <= Lambda <= Q^d.
struct TypePresentation {
    std::vector<BaerType> types;

    std::size_t rank() const { return types.size(); }

    friend bool operator==(const TypePresentation&, const TypePresentation&) = default;
};

bool has_free_summand(const TypePresentation& g);

/// dim over F_p of Lambda / p Lambda = #{i : t_i(p) < inf}.
std::size_t p_corank(const TypePresentation& g, const Int& p);

/// m is target.rank x source.rank and acts on column vectors.
bool is_homomorphism(const RatMat& m, const TypePresentation& source, const TypePresentation& target);

bool is_T_homomorphism(const RatMat& m, const TypePresentation& source,
                       const TypePresentation& target);

/// Witness permutation pi with types[i] ~ h.types[pi[i]], if one exists.
std::optional<std::vector<std::size_t>> group_isomorphic(const TypePresentation& g,
                                                         const TypePresentation& h);

}  // namespace tfgrp
