#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tfgrp {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// p-adic valuation of a nonzero integer.
long valuation(Int n, const Int& p);

/// p-adic valuation of a nonzero rational (v(num) - v(den)).
long valuation(const Rat& q, const Int& p);

bool is_prime(const Int& p);

/// n-th prime, 1-based (nth_prime(1) == 2).
Int nth_prime(unsigned n);

/// Primes dividing |n|, ascending. n must be nonzero.
std::vector<Int> prime_factors(const Int& n);

/// "p/q" with q omitted when 1; exact round trip with parse_rat.
std::string rat_to_string(const Rat& q);
Rat parse_rat(const std::string& s);

RatVec to_rat_vec(const IntVec& v);

}  // namespace tfgrp
