#include "tfgrp/normal_form.hpp"

namespace tfgrp {

HnfResult hnf(const IntMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMat a = m;
    IntMat u = IntMat::identity(r);
    std::size_t pivot_row = 0;
    for (std::size_t j = 0; j < c && pivot_row < r; ++j) {
        // gcd elimination below the pivot in column j
        while (true) {
            std::size_t best = r;
            for (std::size_t i = pivot_row; i < r; ++i) {
                if (a(i, j) == 0) continue;
                if (best == r || abs(a(i, j)) < abs(a(best, j))) best = i;
            }
            if (best == r) break;  // column clear below
            if (best != pivot_row) {
                a.swap_rows(pivot_row, best);
                u.swap_rows(pivot_row, best);
            }
            bool clean = true;
            for (std::size_t i = pivot_row + 1; i < r; ++i) {
                if (a(i, j) == 0) continue;
                Int q;
                // round-to-nearest quotient keeps entries small
                Int num = a(i, j), den = a(pivot_row, j);
                Int rdiv;
                mpz_fdiv_qr(q.get_mpz_t(), rdiv.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
                if (2 * rdiv > abs(den)) q += (den > 0 ? 1 : -1);
                if (q != 0)
                    for (std::size_t k = 0; k < c; ++k) a(i, k) -= q * a(pivot_row, k);
                if (q != 0)
                    for (std::size_t k = 0; k < r; ++k) u(i, k) -= q * u(pivot_row, k);
                if (a(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(pivot_row, j) == 0) continue;  // no pivot in this column
        if (a(pivot_row, j) < 0) {
            for (std::size_t k = 0; k < c; ++k) a(pivot_row, k) = -a(pivot_row, k);
            for (std::size_t k = 0; k < r; ++k) u(pivot_row, k) = -u(pivot_row, k);
        }
        // reduce entries above the pivot into [0, pivot)
        const Int& piv = a(pivot_row, j);
        for (std::size_t i = 0; i < pivot_row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a(i, j).get_mpz_t(), piv.get_mpz_t());
            if (q != 0) {
                for (std::size_t k = 0; k < c; ++k) a(i, k) -= q * a(pivot_row, k);
                for (std::size_t k = 0; k < r; ++k) u(i, k) -= q * u(pivot_row, k);
            }
        }
        ++pivot_row;
    }
    return {std::move(a), std::move(u)};
}

namespace {

// position of an entry of minimal absolute value in the submatrix [t..)x[t..), or nullopt
std::optional<std::pair<std::size_t, std::size_t>> min_nonzero(const IntMat& a, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            if (!best || abs(a(i, j)) < abs(a(best->first, best->second)))
                best = std::make_pair(i, j);
        }
    return best;
}

}  // namespace

SnfResult snf(const IntMat& m) {
    const std::size_t r = m.rows(), c = m.cols();
    IntMat a = m;
    IntMat left = IntMat::identity(r);
    IntMat right = IntMat::identity(c);
    const std::size_t n = std::min(r, c);
    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            auto pos = min_nonzero(a, t);
            if (!pos) break;
            if (pos->first != t) {
                a.swap_rows(t, pos->first);
                left.swap_rows(t, pos->first);
            }
            if (pos->second != t) {
                a.swap_cols(t, pos->second);
                right.swap_cols(t, pos->second);
            }
            bool done = true;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0) {
                    for (std::size_t k = 0; k < c; ++k) a(i, k) -= q * a(t, k);
                    for (std::size_t k = 0; k < r; ++k) left(i, k) -= q * left(t, k);
                }
                if (a(i, t) != 0) done = false;
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0) {
                    for (std::size_t k = 0; k < r; ++k) a(k, j) -= q * a(k, t);
                    for (std::size_t k = 0; k < c; ++k) right(k, j) -= q * right(k, t);
                }
                if (a(t, j) != 0) done = false;
            }
            if (!done) continue;
            // pivot must divide the rest of the submatrix
            bool divides = true;
            for (std::size_t i = t + 1; i < r && divides; ++i)
                for (std::size_t j = t + 1; j < c && divides; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
                        for (std::size_t k = 0; k < c; ++k) a(t, k) += a(i, k);
                        for (std::size_t k = 0; k < r; ++k) left(t, k) += left(i, k);
                        divides = false;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            for (std::size_t k = 0; k < c; ++k) a(t, k) = -a(t, k);
            for (std::size_t k = 0; k < r; ++k) left(t, k) = -left(t, k);
        }
        if (a(t, t) == 0) break;  // submatrix is zero, remaining diag entries are zero
    }
    std::vector<Int> diag(n);
    for (std::size_t t = 0; t < n; ++t) diag[t] = a(t, t);
    return {std::move(diag), std::move(left), std::move(right)};
}

RatMat rat_inverse(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMat a = m;
    RatMat inv = RatMat::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) throw SingularMatrix();
        if (piv != col) {
            a.swap_rows(col, piv);
            inv.swap_rows(col, piv);
        }
        Rat d = a(col, col);
        for (std::size_t k = 0; k < n; ++k) {
            a(col, k) /= d;
            inv(col, k) /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col) == 0) continue;
            Rat f = a(i, col);
            for (std::size_t k = 0; k < n; ++k) {
                a(i, k) -= f * a(col, k);
                inv(i, k) -= f * inv(col, k);
            }
        }
    }
    return inv;
}

Rat rat_det(const RatMat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    RatMat a = m;
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a(piv, col) == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            a.swap_rows(col, piv);
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a(i, col) == 0) continue;
            Rat f = a(i, col) / a(col, col);
            for (std::size_t k = col; k < n; ++k) a(i, k) -= f * a(col, k);
        }
    }
    return det;
}

Int int_det(const IntMat& m) {
    Rat d = rat_det(to_rat(m));
    return d.get_num();
}

std::optional<IntVec> solve_integer_linear(const IntMat& a, const IntVec& b, const IntVec& moduli) {
    const std::size_t rows = a.rows(), n = a.cols();
    if (b.size() != rows) throw DimensionMismatch("rhs size");
    if (!moduli.empty() && moduli.size() != rows) throw DimensionMismatch("moduli size");
    // auxiliary columns absorb the modular freedom row by row
    std::vector<std::size_t> mod_rows;
    for (std::size_t i = 0; i < moduli.size(); ++i) {
        if (moduli[i] < 0) throw Error("negative modulus");
        if (moduli[i] > 0) mod_rows.push_back(i);
    }
    IntMat big(rows, n + mod_rows.size());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < n; ++j) big(i, j) = a(i, j);
    for (std::size_t k = 0; k < mod_rows.size(); ++k) big(mod_rows[k], n + k) = moduli[mod_rows[k]];

    SnfResult s = snf(big);
    IntVec c = s.left.apply_col(b);
    const std::size_t len = s.diag.size();
    IntVec z(n + mod_rows.size());
    for (std::size_t i = 0; i < rows; ++i) {
        if (i < len && s.diag[i] != 0) {
            if (!mpz_divisible_p(c[i].get_mpz_t(), s.diag[i].get_mpz_t())) return std::nullopt;
            z[i] = c[i] / s.diag[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    IntVec y = s.right.apply_col(z);
    return IntVec(y.begin(), y.begin() + n);
}

}  // namespace tfgrp
