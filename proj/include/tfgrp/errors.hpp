#pragma once

#include <stdexcept>
#include <string>

namespace tfgrp {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "singular matrix") : Error(what) {}
};

struct NotFullRank : Error {
    explicit NotFullRank(const std::string& what = "rows do not span full rank") : Error(what) {}
};

struct NotSublattice : Error {
    explicit NotSublattice(const std::string& what = "not a sublattice") : Error(what) {}
};

struct NotMember : Error {
    explicit NotMember(const std::string& what = "vector not a member of the group") : Error(what) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& what = "argument is not prime") : Error(what) {}
};

struct InvalidTowerMap : Error {
    explicit InvalidTowerMap(const std::string& what = "invalid tower map") : Error(what) {}
};

struct Incompatible : Error {
    explicit Incompatible(const std::string& what = "incompatible tower maps") : Error(what) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& what = "index out of range") : Error(what) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what = "precision exhausted") : Error(what) {}
};

struct BadDenominator : Error {
    explicit BadDenominator(const std::string& what = "denominator has a forbidden prime factor")
        : Error(what) {}
};

struct InvalidCocycle : Error {
    explicit InvalidCocycle(const std::string& what = "table is not a valid cocycle") : Error(what) {}
};

struct BadHomomorphism : Error {
    explicit BadHomomorphism(const std::string& what = "matrix is not a well defined homomorphism")
        : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what = "malformed input") : Error(what) {}
};

}  // namespace tfgrp
