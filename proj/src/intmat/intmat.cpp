#include "lmod/intmat.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace lmod {

int64_t ck_add(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("integer overflow in add");
    return r;
}

int64_t ck_mul(int64_t x, int64_t y) {
    int64_t r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("integer overflow in mul");
    return r;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool IntMatrix::is_zero() const {
    for (auto v : a)
        if (v != 0) return false;
    return true;
}

IntMatrix IntMatrix::block(const std::vector<int>& ri, const std::vector<int>& ci) const {
    IntMatrix b(int(ri.size()), int(ci.size()));
    for (size_t i = 0; i < ri.size(); ++i)
        for (size_t j = 0; j < ci.size(); ++j) b(int(i), int(j)) = (*this)(ri[i], ci[j]);
    return b;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows; ++i) {
        os << '[';
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix r(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            int64_t v = x(i, k);
            if (v == 0) continue;
            for (int j = 0; j < y.cols; ++j)
                if (y(k, j) != 0) r(i, j) = ck_add(r(i, j), ck_mul(v, y(k, j)));
        }
    return r;
}

IntMatrix operator+(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix shape mismatch in sum");
    IntMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = ck_add(r.a[i], y.a[i]);
    return r;
}

IntMatrix operator-(const IntMatrix& x) {
    IntMatrix r = x;
    for (auto& v : r.a) v = -v;
    return r;
}

std::vector<int64_t> operator*(const IntMatrix& m, const std::vector<int64_t>& v) {
    if (int(v.size()) != m.cols) throw std::invalid_argument("matrix/vector shape mismatch");
    std::vector<int64_t> r(m.rows, 0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) && v[j]) r[i] = ck_add(r[i], ck_mul(m(i, j), v[j]));
    return r;
}

IntMatrix hcat(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows != y.rows) throw std::invalid_argument("row mismatch in hcat");
    IntMatrix r(x.rows, x.cols + y.cols);
    for (int i = 0; i < x.rows; ++i) {
        for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
        for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
    }
    return r;
}

namespace {

void col_axpy(IntMatrix& m, int dst, int src, int64_t q) {  // col dst -= q * col src
    for (int i = 0; i < m.rows; ++i)
        if (m(i, src)) m(i, dst) = ck_add(m(i, dst), -ck_mul(q, m(i, src)));
}
void row_axpy(IntMatrix& m, int dst, int src, int64_t q) {  // row dst += q * row src
    for (int j = 0; j < m.cols; ++j)
        if (m(src, j)) m(dst, j) = ck_add(m(dst, j), ck_mul(q, m(src, j)));
}
void col_swap(IntMatrix& m, int x, int y) {
    for (int i = 0; i < m.rows; ++i) std::swap(m(i, x), m(i, y));
}
void row_swap(IntMatrix& m, int x, int y) {
    for (int j = 0; j < m.cols; ++j) std::swap(m(x, j), m(y, j));
}

}  // namespace

ColumnEchelon column_echelon(const IntMatrix& in) {
    IntMatrix m = in;
    ColumnEchelon ce;
    ce.V = IntMatrix::identity(m.cols);
    ce.vinv = IntMatrix::identity(m.cols);
    int pc = 0;
    for (int i = 0; i < m.rows && pc < m.cols; ++i) {
        for (;;) {
            int best = -1;
            for (int j = pc; j < m.cols; ++j)
                if (m(i, j) != 0 && (best < 0 || std::llabs(m(i, j)) < std::llabs(m(i, best)))) best = j;
            if (best < 0) break;
            if (best != pc) {
                col_swap(m, best, pc);
                col_swap(ce.V, best, pc);
                row_swap(ce.vinv, best, pc);
            }
            bool clean = true;
            for (int k = pc + 1; k < m.cols; ++k) {
                if (m(i, k) == 0) continue;
                int64_t q = m(i, k) / m(i, pc);
                col_axpy(m, k, pc, q);
                col_axpy(ce.V, k, pc, q);
                row_axpy(ce.vinv, pc, k, q);
                if (m(i, k) != 0) clean = false;
            }
            if (clean) break;
        }
        if (pc < m.cols && m(i, pc) != 0) {
            if (m(i, pc) < 0) {
                for (int r = 0; r < m.rows; ++r) m(r, pc) = -m(r, pc);
                for (int r = 0; r < ce.V.rows; ++r) ce.V(r, pc) = -ce.V(r, pc);
                for (int c = 0; c < ce.vinv.cols; ++c) ce.vinv(pc, c) = -ce.vinv(pc, c);
            }
            ++pc;
        }
    }
    ce.rank = pc;
    ce.B = IntMatrix(m.rows, pc);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < pc; ++c) ce.B(r, c) = m(r, c);
    return ce;
}

IntMatrix ColumnEchelon::kernel() const {
    IntMatrix k(V.rows, V.cols - rank);
    for (int r = 0; r < V.rows; ++r)
        for (int c = rank; c < V.cols; ++c) k(r, c - rank) = V(r, c);
    return k;
}

IntMatrix ColumnEchelon::coords() const {
    IntMatrix k(rank, vinv.cols);
    for (int r = 0; r < rank; ++r)
        for (int c = 0; c < vinv.cols; ++c) k(r, c) = vinv(r, c);
    return k;
}

int rank(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return column_echelon(m).rank;
}

std::vector<int64_t> smith_invariants(IntMatrix m) {
    std::vector<int64_t> d;
    int t = 0;
    auto move_min = [&](bool whole) {
        int bi = -1, bj = -1;
        for (int i = t; i < m.rows; ++i)
            for (int j = t; j < m.cols; ++j) {
                if (!whole && i != t && j != t) continue;
                if (m(i, j) != 0 && (bi < 0 || std::llabs(m(i, j)) < std::llabs(m(bi, bj)))) bi = i, bj = j;
            }
        if (bi < 0) return false;
        row_swap(m, bi, t);
        col_swap(m, bj, t);
        return true;
    };
    while (t < m.rows && t < m.cols) {
        if (!move_min(true)) break;
        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                if (m(i, t) == 0) continue;
                row_axpy(m, i, t, -(m(i, t) / m(t, t)));
                if (m(i, t) != 0) clean = false;
            }
            for (int j = t + 1; j < m.cols; ++j) {
                if (m(t, j) == 0) continue;
                col_axpy(m, j, t, m(t, j) / m(t, t));
                if (m(t, j) != 0) clean = false;
            }
            if (!clean) {
                move_min(false);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m.rows && bad < 0; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (m(i, j) % m(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad < 0) break;
            row_axpy(m, t, bad, 1);
        }
        d.push_back(std::llabs(m(t, t)));
        ++t;
    }
    return d;
}

}  // namespace lmod
