#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "tfgrp/baer.hpp"

namespace tfgrp {

/// Finitely generated abelian group (+) Z/n_i (+) Z^free_rank. Elements are
/// integer tuples with torsion coordinates reduced into [0, n_i).
struct FinAbGroup {
    std::vector<Int> orders;  // each >= 1
    std::size_t free_rank = 0;

    static FinAbGroup cyclic(const Int& n) { return {{n}, 0}; }
    static FinAbGroup free_group(std::size_t r) { return {{}, r}; }
    static FinAbGroup trivial() { return {{}, 0}; }

    std::size_t ngens() const { return orders.size() + free_rank; }
    bool finite() const { return free_rank == 0; }
    Int size() const;  // throws for infinite groups

    IntVec zero() const { return IntVec(ngens(), 0); }
    IntVec reduce(IntVec v) const;
    IntVec add(const IntVec& a, const IntVec& b) const;
    IntVec neg(const IntVec& a) const;
    IntVec scale(const Int& k, const IntVec& a) const;

    /// all elements, in a fixed canonical (odometer) enumeration; finite only
    std::vector<IntVec> elements() const;

    /// invariant factor normalization: n_1 | n_2 | ..., entries 1 dropped
    FinAbGroup normalized() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;
};

/// Symmetric normalized 2-cocycle c : B x B -> F for finite base B. The
/// table is indexed by the canonical enumeration of B.
struct ExtCocycle {
    FinAbGroup base;   // finite
    FinAbGroup fiber;  // finitely generated
    std::vector<IntVec> table;  // table[i * |B| + j] = c(b_i, b_j)

    const IntVec& at(std::size_t i, std::size_t j) const;
    IntVec& at(std::size_t i, std::size_t j);

    static ExtCocycle zero(FinAbGroup base, FinAbGroup fiber);
};

/// Normalization, cocycle identity, and symmetry, checked exhaustively.
bool validate(const ExtCocycle& c);

/// Exact coboundary decision; witness h indexed by the enumeration of B
/// (h[0] = 0) with c(x,y) = h(x)+h(y)-h(x+y). Throws InvalidCocycle.
std::optional<std::vector<IntVec>> coboundary_decide(const ExtCocycle& c);

/// c restricted to S x S is a coboundary for every subgroup S of B.
bool weak_coboundary_check(const ExtCocycle& c);

/// All subgroups of a finite group, each as a sorted list of element indices.
std::vector<std::vector<std::size_t>> subgroups(const FinAbGroup& b);

/// eta : F -> G as an integer matrix on generators (column action); must
/// respect the torsion relations of F. Throws BadHomomorphism.
ExtCocycle pushforward(const IntMat& eta, const FinAbGroup& g, const ExtCocycle& c);

struct BuiltExtension {
    FinAbGroup iso_type;  // invariant factors of the total group E
    /// E lives on fiber x base pairs (f, b) with the twisted addition
    /// (f1,b1)+(f2,b2) = (f1+f2+c(b1,b2), b1+b2).
    std::vector<std::pair<IntVec, IntVec>> elements;
};

/// Constructs E on F x B; verifies the group axioms exhaustively; requires
/// finite F. Throws InvalidCocycle.
BuiltExtension build_extension(const ExtCocycle& c);

std::pair<IntVec, IntVec> extension_add(const ExtCocycle& c, const std::pair<IntVec, IntVec>& x,
                                        const std::pair<IntVec, IntVec>& y);

/// F is pure in E: F cap (l E) = l F for every l up to the exponent of E.
bool purity_check(const ExtCocycle& c);

/// Ext((+)Z/n_i (+) Z^r, F) = (+)_i F/n_i F, in invariant factor form.
FinAbGroup ext_group(const FinAbGroup& b, const FinAbGroup& f);

/// Invariant record for Q^(2^aleph0) (+) (+)_p Z(p^infty)^{n_p}.
struct DivisibleType {
    bool continuum_free = false;
    std::size_t primary_default = 0;               // n_p at all but finitely many p
    std::map<Int, std::size_t> primary_exceptions;  // p -> n_p where it differs

    friend bool operator==(const DivisibleType&, const DivisibleType&) = default;
};

/// n_p = p-corank; free summands are stripped first (warning flag).
DivisibleType ext_invariant(const TypePresentation& g, bool* stripped_warning = nullptr);

/// Discrete-group isomorphism of Ext(.,Z): equality of divisible types.
bool ext_iso_discrete(const TypePresentation& g, const TypePresentation& h);

/// Definable isomorphism: Baer-type matching on the presentations.
std::optional<std::vector<std::size_t>> ext_iso_definable(const TypePresentation& g,
                                                          const TypePresentation& h);

}  // namespace tfgrp
