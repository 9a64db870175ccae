#include "tfgrp/rational.hpp"

#include "tfgrp/errors.hpp"

namespace tfgrp {

long valuation(Int n, const Int& p) {
    if (n == 0) throw Error("valuation of zero");
    long v = 0;
    Int r;
    while (true) {
        Int q;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        if (r != 0) break;
        n = q;
        ++v;
    }
    return v;
}

long valuation(const Rat& q, const Int& p) {
    if (q == 0) throw Error("valuation of zero");
    Int num = q.get_num(), den = q.get_den();
    long v = 0;
    if (mpz_divisible_p(num.get_mpz_t(), p.get_mpz_t()))
        v = valuation(num, p);
    else if (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t()))
        v = -valuation(den, p);
    return v;
}

bool is_prime(const Int& p) {
    if (p < 2) return false;
    return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

Int nth_prime(unsigned n) {
    if (n == 0) throw Error("nth_prime is 1-based");
    Int p = 1;
    for (unsigned i = 0; i < n; ++i) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    return p;
}

std::vector<Int> prime_factors(const Int& n) {
    Int m = abs(n);
    if (m == 0) throw Error("prime_factors of zero");
    std::vector<Int> out;
    Int p = 2;
    while (m > 1) {
        if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
            out.push_back(m);
            break;
        }
        while (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
        out.push_back(p);
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) m /= p;
    }
    return out;
}

std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        Rat q(s);
        if (q.get_den() <= 0) throw ParseError("nonpositive denominator: " + s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: " + s);
    }
}

RatVec to_rat_vec(const IntVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

}  // namespace tfgrp
