#include "tfgrp/lim1.hpp"

namespace tfgrp {

namespace {

RatVec vadd(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

RatVec vsub(const RatVec& a, const RatVec& b) {
    RatVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

}  // namespace

void validate_cochain(const CochainVector& b) {
    if (b.entries.size() != b.tower.depth()) throw DimensionMismatch("cochain length");
    for (std::size_t m = 0; m < b.entries.size(); ++m)
        if (!b.tower.levels[m].contains(b.entries[m]))
            throw Error("cochain entry outside its level");
}

void validate_cocycle(const TruncatedCocycle& a) {
    if (a.consecutive.size() + 1 != a.tower.depth()) throw DimensionMismatch("cocycle length");
    for (std::size_t m = 0; m < a.consecutive.size(); ++m)
        if (!a.tower.levels[m].contains(a.consecutive[m]))
            throw Error("cocycle entry outside its level");
}

TruncatedCocycle cocycle_zero(const Filtration& f) {
    TruncatedCocycle a;
    a.tower = f;
    a.consecutive.assign(f.depth() - 1, RatVec(f.dim(), Rat(0)));
    return a;
}

TruncatedCocycle cocycle_add(const TruncatedCocycle& a, const TruncatedCocycle& b) {
    if (!(a.tower == b.tower)) throw DimensionMismatch("different towers");
    TruncatedCocycle c;
    c.tower = a.tower;
    for (std::size_t m = 0; m < a.consecutive.size(); ++m)
        c.consecutive.push_back(vadd(a.consecutive[m], b.consecutive[m]));
    return c;
}

TruncatedCocycle delta1(const CochainVector& b) {
    validate_cochain(b);
    TruncatedCocycle a;
    a.tower = b.tower;
    for (std::size_t m = 0; m + 1 < b.entries.size(); ++m)
        a.consecutive.push_back(vsub(b.entries[m], b.entries[m + 1]));
    validate_cocycle(a);
    return a;
}

RatVec expand_entries(const TruncatedCocycle& a, std::size_t m0, std::size_t m1) {
    if (m0 > m1 || m1 >= a.tower.depth()) throw IndexOutOfRange();
    RatVec out(a.tower.dim(), Rat(0));
    for (std::size_t m = m0; m < m1; ++m) out = vadd(out, a.consecutive[m]);
    return out;
}

bool validate_full(const Filtration& tower,
                   const std::map<std::pair<std::size_t, std::size_t>, RatVec>& entries) {
    const std::size_t M = tower.depth();
    const RatVec zero(tower.dim(), Rat(0));
    const auto get = [&](std::size_t i, std::size_t j) -> const RatVec& {
        auto it = entries.find({i, j});
        if (it == entries.end()) throw IndexOutOfRange("missing entry");
        return it->second;
    };
    for (std::size_t m = 0; m < M; ++m)
        if (!(get(m, m) == zero)) return false;
    for (std::size_t m0 = 0; m0 < M; ++m0)
        for (std::size_t m1 = m0; m1 < M; ++m1) {
            if (!tower.levels[m0].contains(get(m0, m1))) return false;
            for (std::size_t m2 = m1; m2 < M; ++m2)
                if (!(get(m0, m2) == vadd(get(m0, m1), get(m1, m2)))) return false;
        }
    return true;
}

CochainVector coboundary_solve(const TruncatedCocycle& a) {
    validate_cocycle(a);
    const std::size_t M = a.tower.depth();
    CochainVector b;
    b.tower = a.tower;
    for (std::size_t k = 0; k < M; ++k) b.entries.push_back(expand_entries(a, k, M - 1));
    // b_k = x_{k,M-1} lies in levels[k] since every summand does
    validate_cochain(b);
    return b;
}

ProfiniteElement sigma(const TruncatedCocycle& a) {
    validate_cocycle(a);
    return embed(a.tower, expand_entries(a, 0, a.tower.depth() - 1));
}

TruncatedCocycle sigma_section(const ProfiniteElement& x) {
    TruncatedCocycle a;
    a.tower = x.filtration;
    for (std::size_t m = 0; m + 1 < x.depth(); ++m)
        a.consecutive.push_back(vsub(x.chain[m + 1], x.chain[m]));
    validate_cocycle(a);
    return a;
}

}  // namespace tfgrp
