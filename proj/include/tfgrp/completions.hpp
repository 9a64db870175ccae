#pragma once

#include <optional>

#include "tfgrp/towers.hpp"

namespace tfgrp {

/// A truncated element of the profinite completion lim Z^d / L_m: one
/// canonical coset representative per level, compatible down the chain.
struct ProfiniteElement {
    Filtration filtration;
    std::vector<RatVec> chain;  // chain[m] = reduce_mod(levels[m], value)

    std::size_t depth() const { return chain.size(); }

    friend bool operator==(const ProfiniteElement& a, const ProfiniteElement& b) {
        return a.filtration == b.filtration && a.chain == b.chain;
    }
};

/// Canonical image of v; a homomorphism with kernel = deepest level at
/// this truncation.
ProfiniteElement embed(const Filtration& f, const RatVec& v);

ProfiniteElement pf_add(const ProfiniteElement& x, const ProfiniteElement& y);
ProfiniteElement pf_neg(const ProfiniteElement& x);
ProfiniteElement pf_sub(const ProfiniteElement& x, const ProfiniteElement& y);
ProfiniteElement pf_zero(const Filtration& f);

/// Checks representative canonicality and chain compatibility.
void validate_element(const ProfiniteElement& x);

struct DivideResult {
    ProfiniteElement quotient;
    IntVec correction;  // r with n * quotient = x + embed(r) at truncation
};

/// Division with integer correction: search r with |r|_inf <= bound, in the
/// order 0, 1, -1, 2, -2, ... per coordinate (lexicographic across
/// coordinates), for a y with n*y = x + embed(r) levelwise.
std::optional<DivideResult> divide_correct(const ProfiniteElement& x, const Int& n, const Int& bound);

enum class CosetVerdict { EqualAtDepth, Distinct, Inconclusive };

/// Truncated coset comparison of x and y modulo the dense subgroup given by
/// a type presentation. EqualAtDepth when x - y matches an embedded
/// subgroup element found by a denominator- and numerator-bounded search
/// (necessary condition for equality in the quotient); Distinct when the
/// search is exhaustive for the given bound and nothing matches.
CosetVerdict coset_equal(const ProfiniteElement& x, const ProfiniteElement& y,
                         const TypePresentation& dense_subgroup, const Int& numerator_bound);

/// A truncated element of the p-adic group Q_p^d: value = p^{-shift} * body
/// where body is an integer vector known modulo p^depth (entries kept in
/// [0, p^depth)). shift is kept minimal for the stored body.
struct PadicElement {
    Int p;
    std::size_t dim = 0;
    long shift = 0;
    std::size_t depth = 0;
    IntVec body;

    /// value known modulo p^(depth - shift)
    long abs_precision() const { return static_cast<long>(depth) - shift; }

    /// base-p digit j of coordinate i
    Int digit(std::size_t i, std::size_t j) const;
};

/// Build from base-p digit vectors: digits[j] in [0,p)^d, j < depth.
PadicElement padic_make(const Int& p, std::size_t d, const std::vector<IntVec>& digits, long shift = 0);

PadicElement padic_from_int(const Int& p, std::size_t d, const IntVec& v, std::size_t depth);

/// g*x + v for g over Z[1/p] invertible, v over Z[1/p]^d; consumes one level
/// of precision per power of p in the denominators of g and v. Throws
/// PrecisionExhausted / BadDenominator.
PadicElement padic_affine_apply(const RatMat& g, const RatVec& v, const PadicElement& x);

/// Equality at the common retained absolute precision.
bool padic_equal_at_common_precision(const PadicElement& x, const PadicElement& y);

}  // namespace tfgrp
