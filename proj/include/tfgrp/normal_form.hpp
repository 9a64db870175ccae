#pragma once

#include <optional>
#include <utility>

#include "tfgrp/matrix.hpp"

namespace tfgrp {

struct HnfResult {
    IntMat h;  // row-style HNF of the input
    IntMat u;  // unimodular, h = u * input
};

struct SnfResult {
    std::vector<Int> diag;  // nonnegative, diag[i] | diag[i+1], zeros trailing
    IntMat left;            // unimodular
    IntMat right;           // unimodular; left * input * right = diag
};

/// Row-style Hermite Normal Form: row echelon, positive pivots,
/// entries above a pivot reduced into [0, pivot).
HnfResult hnf(const IntMat& m);

SnfResult snf(const IntMat& m);

/// Exact inverse of a square rational matrix. Throws SingularMatrix.
RatMat rat_inverse(const RatMat& m);

Rat rat_det(const RatMat& m);
Int int_det(const IntMat& m);

/// Solve a*x = b over Z, row i taken modulo moduli[i] when moduli[i] > 0
/// (modulus 0 means an exact equation over Z). Decision via SNF.
std::optional<IntVec> solve_integer_linear(const IntMat& a, const IntVec& b,
                                           const IntVec& moduli = {});

}  // namespace tfgrp
