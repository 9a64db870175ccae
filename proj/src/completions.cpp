#include "tfgrp/completions.hpp"

#include <set>

namespace tfgrp {

ProfiniteElement embed(const Filtration& f, const RatVec& v) {
    if (!f.levels.front().contains(v)) throw NotMember();
    ProfiniteElement x;
    x.filtration = f;
    for (const auto& level : f.levels) x.chain.push_back(level.reduce_mod(v));
    return x;
}

ProfiniteElement pf_zero(const Filtration& f) { return embed(f, RatVec(f.dim(), Rat(0))); }

namespace {

RatVec vec_add(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vec_sub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

ProfiniteElement pf_add(const ProfiniteElement& x, const ProfiniteElement& y) {
    if (!(x.filtration == y.filtration)) throw DimensionMismatch("different filtrations");
    ProfiniteElement z;
    z.filtration = x.filtration;
    for (std::size_t m = 0; m < x.depth(); ++m)
        z.chain.push_back(x.filtration.levels[m].reduce_mod(vec_add(x.chain[m], y.chain[m])));
    return z;
}

ProfiniteElement pf_neg(const ProfiniteElement& x) {
    ProfiniteElement z;
    z.filtration = x.filtration;
    for (std::size_t m = 0; m < x.depth(); ++m) {
        RatVec neg(x.chain[m].size());
        for (std::size_t i = 0; i < neg.size(); ++i) neg[i] = -x.chain[m][i];
        z.chain.push_back(x.filtration.levels[m].reduce_mod(neg));
    }
    return z;
}

ProfiniteElement pf_sub(const ProfiniteElement& x, const ProfiniteElement& y) {
    return pf_add(x, pf_neg(y));
}

void validate_element(const ProfiniteElement& x) {
    if (x.chain.size() != x.filtration.depth()) throw DimensionMismatch("chain length");
    for (std::size_t m = 0; m < x.depth(); ++m) {
        const Lattice& level = x.filtration.levels[m];
        if (!(level.reduce_mod(x.chain[m]) == x.chain[m])) throw Error("non-canonical representative");
        if (m + 1 < x.depth() && !level.contains(vec_sub(x.chain[m + 1], x.chain[m])))
            throw Error("incompatible chain");
    }
}

namespace {

// 0, 1, -1, 2, -2, ..., bound, -bound
std::vector<Int> signed_search_order(const Int& bound) {
    std::vector<Int> out{0};
    for (Int k = 1; k <= bound; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

}  // namespace

std::optional<DivideResult> divide_correct(const ProfiniteElement& x, const Int& n,
                                           const Int& bound) {
    if (n < 1) throw Error("n must be positive");
    const std::size_t d = x.filtration.dim();
    const std::size_t M = x.depth();
    const Lattice& deep = x.filtration.levels[M - 1];
    const RatVec& c = x.chain[M - 1];
    const std::vector<Int> order = signed_search_order(bound);
    std::vector<std::size_t> idx(d, 0);
    while (true) {
        IntVec r(d);
        for (std::size_t i = 0; i < d; ++i) r[i] = order[idx[i]];
        // integer w with n*w == c + r  (mod deepest level):
        // n*D*w_j - sum_i z_i H(i,j) = D*(c_j + r_j)
        const Int& D = deep.den();
        IntMat a(d, 2 * d);
        IntVec b(d);
        for (std::size_t j = 0; j < d; ++j) {
            a(j, j) = n * D;
            for (std::size_t i = 0; i < d; ++i) a(j, d + i) = -deep.hmat()(i, j);
            Rat rhs = (c[j] + r[j]) * D;
            if (rhs.get_den() != 1) throw Error("non-integral representative");
            b[j] = rhs.get_num();
        }
        if (auto sol = solve_integer_linear(a, b)) {
            RatVec w(d);
            for (std::size_t i = 0; i < d; ++i) w[i] = Rat((*sol)[i]);
            DivideResult res;
            res.correction = r;
            res.quotient = embed(x.filtration, w);
            return res;
        }
        // next r in lexicographic coordinate order
        std::size_t pos = d;
        while (pos-- > 0) {
            if (++idx[pos] < order.size()) break;
            idx[pos] = 0;
            if (pos == 0) return std::nullopt;
        }
        if (pos == static_cast<std::size_t>(-1)) return std::nullopt;
    }
}

CosetVerdict coset_equal(const ProfiniteElement& x, const ProfiniteElement& y,
                         const TypePresentation& dense_subgroup, const Int& numerator_bound) {
    if (!(x.filtration == y.filtration)) throw DimensionMismatch("different filtrations");
    const std::size_t d = x.filtration.dim();
    if (dense_subgroup.rank() != d) throw DimensionMismatch("subgroup rank");
    if (x.depth() < 2) return CosetVerdict::Inconclusive;
    const ProfiniteElement z = pf_sub(x, y);
    const Lattice& deep = z.filtration.levels[z.depth() - 1];
    const RatVec& rep = z.chain[z.depth() - 1];
    // any subgroup element matching z at every level is rep + k * basis(deep);
    // bound the coefficient box from the numerator bound
    RatMat basis = deep.basis();
    RatMat binv = deep.basis_inverse();
    Rat rep_norm = 0, binv_norm = 0;
    for (const auto& q : rep) rep_norm = std::max(rep_norm, Rat(abs(q)));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) binv_norm = std::max(binv_norm, Rat(abs(binv(i, j))));
    Rat kb = Rat(static_cast<long>(d)) * (Rat(numerator_bound) + rep_norm) * binv_norm;
    Int kmax = kb.get_num() / kb.get_den() + 1;
    const double budget = 2e6;
    double count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= 2.0 * kmax.get_d() + 1.0;
    if (count > budget) return CosetVerdict::Inconclusive;

    const auto in_subgroup = [&](const RatVec& w) {
        for (std::size_t j = 0; j < d; ++j) {
            if (abs(w[j]) > numerator_bound) return false;
            const Int& den = w[j].get_den();
            if (den == 1) continue;
            for (const auto& p : prime_factors(den)) {
                TypeVal t = dense_subgroup.types[j].value(p);
                if (!t.inf && valuation(den, p) > static_cast<long>(t.finite)) return false;
            }
        }
        return true;
    };

    IntVec k(d, -kmax);
    while (true) {
        RatVec offset(d, Rat(0));
        for (std::size_t i = 0; i < d; ++i)
            if (k[i] != 0)
                for (std::size_t j = 0; j < d; ++j) offset[j] += Rat(k[i]) * basis(i, j);
        RatVec w = vec_add(rep, offset);
        if (in_subgroup(w)) return CosetVerdict::EqualAtDepth;
        std::size_t pos = d;
        bool done = true;
        while (pos-- > 0) {
            if (++k[pos] <= kmax) {
                done = false;
                break;
            }
            k[pos] = -kmax;
        }
        if (done) break;
    }
    return CosetVerdict::Distinct;
}

Int PadicElement::digit(std::size_t i, std::size_t j) const {
    Int pj;
    mpz_pow_ui(pj.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(j));
    return (body[i] / pj) % p;
}

namespace {

Int pow_int(const Int& p, std::size_t e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

Int mod_pos(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

PadicElement normalize_shift(PadicElement x) {
    while (x.shift > 0 && x.depth > 1) {
        bool divisible = true;
        for (const auto& b : x.body)
            if (!mpz_divisible_p(b.get_mpz_t(), x.p.get_mpz_t())) divisible = false;
        if (!divisible) break;
        for (auto& b : x.body) b /= x.p;
        --x.shift;
        --x.depth;
        Int mod = pow_int(x.p, x.depth);
        for (auto& b : x.body) b = mod_pos(b, mod);
    }
    return x;
}

}  // namespace

PadicElement padic_make(const Int& p, std::size_t d, const std::vector<IntVec>& digits, long shift) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    if (shift < 0) throw Error("negative shift");
    PadicElement x;
    x.p = p;
    x.dim = d;
    x.shift = shift;
    x.depth = digits.size();
    if (x.depth == 0) throw Error("empty digit list");
    x.body.assign(d, 0);
    Int pj = 1;
    for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j].size() != d) throw DimensionMismatch("digit vector length");
        for (std::size_t i = 0; i < d; ++i) {
            if (digits[j][i] < 0 || digits[j][i] >= p) throw Error("digit out of range");
            x.body[i] += digits[j][i] * pj;
        }
        pj *= p;
    }
    return normalize_shift(x);
}

PadicElement padic_from_int(const Int& p, std::size_t d, const IntVec& v, std::size_t depth) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    if (v.size() != d) throw DimensionMismatch("vector length");
    PadicElement x;
    x.p = p;
    x.dim = d;
    x.shift = 0;
    x.depth = depth;
    Int mod = pow_int(p, depth);
    for (const auto& a : v) x.body.push_back(mod_pos(a, mod));
    return x;
}

namespace {

// p-exponent of the denominator; throws BadDenominator on other primes
std::size_t den_exponent(const Rat& q, const Int& p) {
    Int den = q.get_den();
    if (den == 1) return 0;
    std::size_t e = 0;
    while (mpz_divisible_p(den.get_mpz_t(), p.get_mpz_t())) {
        den /= p;
        ++e;
    }
    if (den != 1) throw BadDenominator("denominator of " + rat_to_string(q));
    return e;
}

}  // namespace

PadicElement padic_affine_apply(const RatMat& g, const RatVec& v, const PadicElement& x) {
    const std::size_t d = x.dim;
    if (g.rows() != d || g.cols() != d || v.size() != d)
        throw DimensionMismatch("affine action shape");
    std::size_t e = 0;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) e = std::max(e, den_exponent(g(i, j), x.p));
        e = std::max(e, den_exponent(v[i], x.p));
    }
    if (static_cast<long>(x.depth) <= static_cast<long>(e)) throw PrecisionExhausted();
    const Int pe = pow_int(x.p, e);
    // y = p^-(shift+e) * (G*body + p^(shift+e)*v) with G = p^e * g integral
    IntMat gi(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat s = g(i, j) * pe;
            gi(i, j) = s.get_num();
        }
    const Int pse = pe * pow_int(x.p, static_cast<std::size_t>(x.shift));
    IntVec vt(d);
    for (std::size_t i = 0; i < d; ++i) {
        Rat s = v[i] * pse;
        if (s.get_den() != 1) throw BadDenominator("shift cannot absorb denominator");
        vt[i] = s.get_num();
    }
    PadicElement y;
    y.p = x.p;
    y.dim = d;
    y.shift = x.shift + static_cast<long>(e);
    y.depth = x.depth - e;
    Int mod = pow_int(x.p, y.depth);
    IntVec body = gi.apply_col(x.body);
    for (std::size_t i = 0; i < d; ++i) y.body.push_back(mod_pos(body[i] + vt[i], mod));
    return normalize_shift(y);
}

bool padic_equal_at_common_precision(const PadicElement& x, const PadicElement& y) {
    if (x.p != y.p || x.dim != y.dim) throw DimensionMismatch("different ambient p-adic groups");
    const long s = std::max(x.shift, y.shift);
    const long tx = static_cast<long>(x.depth) + s - x.shift;
    const long ty = static_cast<long>(y.depth) + s - y.shift;
    const long t = std::min(tx, ty);
    if (t <= 0) return true;  // nothing retained to compare
    Int mod = pow_int(x.p, static_cast<std::size_t>(t));
    Int fx = pow_int(x.p, static_cast<std::size_t>(s - x.shift));
    Int fy = pow_int(x.p, static_cast<std::size_t>(s - y.shift));
    for (std::size_t i = 0; i < x.dim; ++i)
        if (mod_pos(x.body[i] * fx - y.body[i] * fy, mod) != 0) return false;
    return true;
}

}  // namespace tfgrp
