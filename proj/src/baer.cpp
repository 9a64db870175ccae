#include "tfgrp/baer.hpp"

#include <set>

#include "tfgrp/errors.hpp"

namespace tfgrp {

BaerType::BaerType(bool default_inf, std::map<Int, TypeVal> exceptions) : default_inf_(default_inf) {
    for (auto& [p, v] : exceptions) {
        if (!is_prime(p)) throw NotPrime("exception key " + p.get_str());
        if (v.inf == default_inf && (v.inf || v.finite == 0)) continue;  // equals default
        exceptions_.emplace(p, v);
    }
}

BaerType BaerType::z_inv(const Int& p) { return BaerType(false, {{p, TypeVal::infinite()}}); }

TypeVal BaerType::value(const Int& p) const {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    auto it = exceptions_.find(p);
    if (it != exceptions_.end()) return it->second;
    return default_inf_ ? TypeVal::infinite() : TypeVal::of(0);
}

bool baer_equivalent(const BaerType& t, const BaerType& u) {
    if (t.default_inf() != u.default_inf()) return false;
    std::set<Int> primes;
    for (const auto& [p, v] : t.exceptions()) primes.insert(p);
    for (const auto& [p, v] : u.exceptions()) primes.insert(p);
    for (const auto& p : primes)
        if (t.value(p).inf != u.value(p).inf) return false;
    return true;
}

bool has_free_summand(const TypePresentation& g) {
    for (const auto& t : g.types)
        if (baer_equivalent(t, BaerType::zero())) return true;
    return false;
}

std::size_t p_corank(const TypePresentation& g, const Int& p) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    std::size_t n = 0;
    for (const auto& t : g.types)
        if (!t.value(p).inf) ++n;
    return n;
}

namespace {

// m_{ji} * Lambda_{t_i} <= Lambda_{u_j} at prime p
bool entry_ok_at(const Rat& entry, const Int& p, const TypeVal& src, const TypeVal& tgt) {
    if (tgt.inf) return true;
    if (src.inf) return entry == 0;
    if (entry == 0) return true;
    long v = valuation(entry, p);
    return v + static_cast<long>(tgt.finite) >= static_cast<long>(src.finite);
}

}  // namespace

bool is_homomorphism(const RatMat& m, const TypePresentation& source,
                     const TypePresentation& target) {
    if (m.rows() != target.rank() || m.cols() != source.rank())
        throw DimensionMismatch("homomorphism matrix shape");
    for (std::size_t j = 0; j < target.rank(); ++j)
        for (std::size_t i = 0; i < source.rank(); ++i) {
            const Rat& entry = m(j, i);
            const BaerType& src = source.types[i];
            const BaerType& tgt = target.types[j];
            // generic primes: v_p(entry) = 0 and both types take their default
            if (entry != 0 && src.default_inf() && !tgt.default_inf()) return false;
            if (entry == 0) continue;
            std::set<Int> primes;
            for (const auto& [p, v] : src.exceptions()) primes.insert(p);
            for (const auto& [p, v] : tgt.exceptions()) primes.insert(p);
            if (entry.get_num() != 1 && entry.get_num() != -1)
                for (const auto& p : prime_factors(entry.get_num())) primes.insert(p);
            if (entry.get_den() != 1)
                for (const auto& p : prime_factors(entry.get_den())) primes.insert(p);
            for (const auto& p : primes)
                if (!entry_ok_at(entry, p, src.value(p), tgt.value(p))) return false;
        }
    return true;
}

bool is_T_homomorphism(const RatMat& m, const TypePresentation& source,
                       const TypePresentation& target) {
    return is_homomorphism(m, source, target) && is_homomorphism(m.transpose(), target, source);
}

std::optional<std::vector<std::size_t>> group_isomorphic(const TypePresentation& g,
                                                         const TypePresentation& h) {
    if (g.rank() != h.rank()) return std::nullopt;
    const std::size_t d = g.rank();
    std::vector<bool> used(d, false);
    std::vector<std::size_t> perm(d);
    // greedy matching suffices: baer equivalence is an equivalence relation
    for (std::size_t i = 0; i < d; ++i) {
        bool found = false;
        for (std::size_t j = 0; j < d && !found; ++j) {
            if (used[j]) continue;
            if (baer_equivalent(g.types[i], h.types[j])) {
                perm[i] = j;
                used[j] = true;
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return perm;
}

}  // namespace tfgrp
