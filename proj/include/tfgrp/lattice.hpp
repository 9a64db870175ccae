#pragma once

#include <vector>

#include "tfgrp/matrix.hpp"
#include "tfgrp/normal_form.hpp"

namespace tfgrp {

/// A full-rank finitely generated subgroup of Q^d, stored canonically as
/// (1/den) times the integer row span of a d x d matrix in HNF, with den
/// minimal. Two Lattice values represent the same subgroup iff they are
/// structurally equal.
class Lattice {
public:
    /// Integer span of the given rows; throws NotFullRank if rank < d.
    static Lattice from_rows(std::size_t d, const std::vector<RatVec>& rows);

    static Lattice standard(std::size_t d);           // Z^d
    static Lattice scaled(std::size_t d, const Rat& c);  // c * Z^d

    std::size_t dim() const { return dim_; }
    const Int& den() const { return den_; }
    const IntMat& hmat() const { return hmat_; }

    /// Basis matrix (rows are a Z-basis): (1/den) * hmat.
    RatMat basis() const;
    RatMat basis_inverse() const;

    bool contains(const RatVec& v) const;
    bool leq(const Lattice& other) const;  // this subgroup of other

    Lattice sum(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;

    /// [this : sub]; throws NotSublattice.
    Int index_of(const Lattice& sub) const;

    /// Elementary divisors of this/sub with 1-entries dropped.
    std::vector<Int> quotient_invariants(const Lattice& sub) const;

    /// The dual lattice {x : <x,y> in Z for all y here}.
    Lattice annihilator() const;

    /// Canonical representative of v modulo this lattice, in the half-open
    /// fundamental parallelepiped of the HNF basis.
    RatVec reduce_mod(const RatVec& v) const;

    friend bool operator==(const Lattice& a, const Lattice& b) = default;

private:
    Lattice(std::size_t d, Int den, IntMat h) : dim_(d), den_(std::move(den)), hmat_(std::move(h)) {}

    std::size_t dim_;
    Int den_;
    IntMat hmat_;
};

}  // namespace tfgrp
