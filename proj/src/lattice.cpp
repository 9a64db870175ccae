#include "tfgrp/lattice.hpp"

namespace tfgrp {

Lattice Lattice::from_rows(std::size_t d, const std::vector<RatVec>& rows) {
    if (d == 0) throw DimensionMismatch("dimension must be positive");
    Int den = 1;
    for (const auto& row : rows) {
        if (row.size() != d) throw DimensionMismatch("row length");
        for (const auto& q : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
    }
    IntMat b(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Rat scaled = rows[i][j] * den;
            b(i, j) = scaled.get_num();
        }
    HnfResult h = hnf(b);
    // count nonzero rows; full rank needs d of them with pivots on the diagonal
    std::size_t rank = 0;
    for (std::size_t i = 0; i < h.h.rows(); ++i) {
        bool nonzero = false;
        for (std::size_t j = 0; j < d; ++j)
            if (h.h(i, j) != 0) nonzero = true;
        if (nonzero) ++rank;
    }
    if (rank < d) throw NotFullRank();
    IntMat hm(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) hm(i, j) = h.h(i, j);
    // minimal denominator: strip common content shared with den
    Int content = 0;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), hm(i, j).get_mpz_t());
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), den.get_mpz_t());
    if (g > 1) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) hm(i, j) /= g;
        den /= g;
    }
    return Lattice(d, den, hm);
}

Lattice Lattice::standard(std::size_t d) { return Lattice(d, 1, IntMat::identity(d)); }

Lattice Lattice::scaled(std::size_t d, const Rat& c) {
    if (c <= 0) throw Error("scale must be positive");
    std::vector<RatVec> rows(d, RatVec(d, Rat(0)));
    for (std::size_t i = 0; i < d; ++i) rows[i][i] = c;
    return from_rows(d, rows);
}

RatMat Lattice::basis() const {
    RatMat b(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) b(i, j) = make_rat(hmat_(i, j), den_);
    return b;
}

RatMat Lattice::basis_inverse() const { return rat_inverse(basis()); }

bool Lattice::contains(const RatVec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length");
    RatVec x = basis_inverse().apply_row(v);
    for (const auto& q : x)
        if (q.get_den() != 1) return false;
    return true;
}

bool Lattice::leq(const Lattice& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("lattice dims");
    RatMat b = basis();
    for (std::size_t i = 0; i < dim_; ++i)
        if (!other.contains(b.row(i))) return false;
    return true;
}

Lattice Lattice::sum(const Lattice& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("lattice dims");
    std::vector<RatVec> rows;
    RatMat a = basis(), b = other.basis();
    for (std::size_t i = 0; i < dim_; ++i) rows.push_back(a.row(i));
    for (std::size_t i = 0; i < dim_; ++i) rows.push_back(b.row(i));
    return from_rows(dim_, rows);
}

Lattice Lattice::intersect(const Lattice& other) const {
    // duality: (A cap B)_perp = A_perp + B_perp
    return annihilator().sum(other.annihilator()).annihilator();
}

Int Lattice::index_of(const Lattice& sub) const {
    if (!sub.leq(*this)) throw NotSublattice();
    Rat q = abs(rat_det(sub.basis()) / rat_det(basis()));
    return q.get_num();  // integral since sub <= this
}

std::vector<Int> Lattice::quotient_invariants(const Lattice& sub) const {
    if (!sub.leq(*this)) throw NotSublattice();
    RatMat change = sub.basis() * basis_inverse();
    IntMat c(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) c(i, j) = change(i, j).get_num();
    SnfResult s = snf(c);
    std::vector<Int> out;
    for (const auto& e : s.diag)
        if (e != 1) out.push_back(e);
    return out;
}

Lattice Lattice::annihilator() const {
    RatMat dual = basis_inverse().transpose();
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < dim_; ++i) rows.push_back(dual.row(i));
    return from_rows(dim_, rows);
}

RatVec Lattice::reduce_mod(const RatVec& v) const {
    if (v.size() != dim_) throw DimensionMismatch("vector length");
    RatVec x = basis_inverse().apply_row(v);
    for (auto& q : x) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
        q -= Rat(fl);
    }
    return basis().apply_row(x);
}

}  // namespace tfgrp
