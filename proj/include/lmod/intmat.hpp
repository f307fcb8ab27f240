#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lmod {

// Dense integer matrix, row-major. Arithmetic is overflow-checked and throws
// std::overflow_error instead of wrapping.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * size_t(c), 0) {}

    static IntMatrix identity(int n);

    int64_t& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
    int64_t operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

    bool is_zero() const;
    bool operator==(const IntMatrix& o) const = default;

    IntMatrix block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
    IntMatrix transpose() const;
    std::string str() const;
};

int64_t ck_add(int64_t x, int64_t y);
int64_t ck_mul(int64_t x, int64_t y);

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator+(const IntMatrix& x, const IntMatrix& y);
IntMatrix operator-(const IntMatrix& x);
std::vector<int64_t> operator*(const IntMatrix& m, const std::vector<int64_t>& v);

// Column echelon form M*V = [B | 0] with V unimodular. B has full column rank.
// vinv holds V^{-1}, so M = [B | 0] * vinv.
struct ColumnEchelon {
    int rank = 0;
    IntMatrix B;     // rows x rank, basis of the column space (over Z)
    IntMatrix V;     // cols x cols
    IntMatrix vinv;  // cols x cols
    IntMatrix kernel() const;  // cols x (cols-rank), Z-basis of ker M
    IntMatrix coords() const;  // rank x cols, coordinates of the columns of M in B
};

ColumnEchelon column_echelon(const IntMatrix& m);

int rank(const IntMatrix& m);

// Nonzero invariant factors d1 | d2 | ... (all positive).
std::vector<int64_t> smith_invariants(IntMatrix m);

// Horizontal concatenation [x | y]; row counts must agree.
IntMatrix hcat(const IntMatrix& x, const IntMatrix& y);

}  // namespace lmod
