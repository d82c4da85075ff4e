#pragma once

#include <utility>
#include <vector>

#include "rational.hpp"

namespace latmat {

/// Dense exact-rational matrix. Sizes in this library stay around n <= 12,
/// so density and value semantics win over anything clever.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rat(0)) {
        if (rows < 0 || cols < 0) throw SizeError("negative matrix dimension");
    }

    static RationalMatrix identity(int n) {
        RationalMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int i, int j) { return a_[i * cols_ + j]; }
    const Rat& at(int i, int j) const { return a_[i * cols_ + j]; }
    const Rat& operator()(int i, int j) const { return at(i, j); }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    RationalMatrix operator*(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw ShapeError("matrix product dimension mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Rat& v = at(i, k);
                if (v == 0) continue;
                for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
            }
        return r;
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

/// Exact determinant: clear denominators column-wise to integers, then
/// fraction-free Bareiss elimination. Every intermediate division is exact,
/// zero is decided exactly, and rational gcd churn never happens.
inline Rat determinant(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant of a non-square matrix");
    int n = m.rows();
    if (n == 0) return Rat(1);

    Rat scale(1);
    std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
    for (int j = 0; j < n; ++j) {
        Int den_lcm(1);
        for (int i = 0; i < n; ++i) den_lcm = int_lcm(den_lcm, m.at(i, j).get_den());
        for (int i = 0; i < n; ++i) {
            const Rat& v = m.at(i, j);
            a[i][j] = v.get_num() * (den_lcm / v.get_den());
        }
        scale /= Rat(den_lcm);
    }

    int sign = 1;
    Int prev(1);
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return Rat(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign);
    return det * scale;
}

/// Exact inverse by Gauss-Jordan with nonzero pivoting.
/// Throws SingularError when no inverse exists.
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeError("inverse of a non-square matrix");
    int n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) throw SingularError("matrix is singular");
        if (pivot != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(k, j), a.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        Rat p = rat_inverse(a.at(k, k));
        for (int j = 0; j < n; ++j) {
            a.at(k, j) *= p;
            inv.at(k, j) *= p;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a.at(i, k) == 0) continue;
            Rat factor = a.at(i, k);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) -= factor * a.at(k, j);
                inv.at(i, j) -= factor * inv.at(k, j);
            }
        }
    }
    return inv;
}

}  // namespace latmat
