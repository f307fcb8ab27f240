#include <doctest.h>

#include <boost/rational.hpp>
#include <functional>
#include <numeric>
#include <random>

#include "lmod/intmat.hpp"

using namespace lmod;

namespace {

using Q = boost::rational<int64_t>;

// rank over Q by plain Gaussian elimination
int rational_rank(const IntMatrix& m) {
    std::vector<std::vector<Q>> a(size_t(m.rows), std::vector<Q>(size_t(m.cols)));
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) a[size_t(i)][size_t(j)] = m(i, j);
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int piv = -1;
        for (int i = r; i < m.rows; ++i)
            if (a[size_t(i)][size_t(c)].numerator() != 0) piv = i;
        if (piv < 0) continue;
        std::swap(a[size_t(piv)], a[size_t(r)]);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || a[size_t(i)][size_t(c)].numerator() == 0) continue;
            Q f = a[size_t(i)][size_t(c)] / a[size_t(r)][size_t(c)];
            for (int j = 0; j < m.cols; ++j) a[size_t(i)][size_t(j)] -= f * a[size_t(r)][size_t(j)];
        }
        ++r;
    }
    return r;
}

int64_t det(std::vector<std::vector<int64_t>> a) {
    // Bareiss
    int n = int(a.size());
    if (n == 0) return 1;
    int64_t sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[size_t(k)][size_t(k)] == 0) {
            int s = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[size_t(i)][size_t(k)] != 0) s = i;
            if (s < 0) return 0;
            std::swap(a[size_t(s)], a[size_t(k)]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[size_t(i)][size_t(j)] =
                    (a[size_t(i)][size_t(j)] * a[size_t(k)][size_t(k)] - a[size_t(i)][size_t(k)] * a[size_t(k)][size_t(j)]) / prev;
        prev = a[size_t(k)][size_t(k)];
    }
    return sign * a[size_t(n - 1)][size_t(n - 1)];
}

// d_k = D_k / D_{k-1}, D_k = gcd of the k x k minors
std::vector<int64_t> minors_invariants(const IntMatrix& m) {
    std::vector<int64_t> out;
    int64_t prev = 1;
    for (int k = 1; k <= std::min(m.rows, m.cols); ++k) {
        int64_t g = 0;
        std::vector<int> rs(static_cast<size_t>(k)), cs(static_cast<size_t>(k));
        std::function<void(int, int)> pick_r, pick_c;
        pick_c = [&](int i, int start) {
            if (i == k) {
                std::vector<std::vector<int64_t>> a(static_cast<size_t>(k), std::vector<int64_t>(static_cast<size_t>(k)));
                for (int x = 0; x < k; ++x)
                    for (int y = 0; y < k; ++y) a[size_t(x)][size_t(y)] = m(rs[size_t(x)], cs[size_t(y)]);
                g = std::gcd(g, std::abs(det(a)));
                return;
            }
            for (int j = start; j < m.cols; ++j) {
                cs[size_t(i)] = j;
                pick_c(i + 1, j + 1);
            }
        };
        pick_r = [&](int i, int start) {
            if (i == k) {
                pick_c(0, 0);
                return;
            }
            for (int j = start; j < m.rows; ++j) {
                rs[size_t(i)] = j;
                pick_r(i + 1, j + 1);
            }
        };
        pick_r(0, 0);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (auto& x : m.a) x = d(rng);
    return m;
}

}  // namespace

TEST_CASE("smith invariants of small matrices") {
    IntMatrix m(2, 2);
    m(0, 0) = 2;
    m(1, 1) = 3;
    CHECK(smith_invariants(m) == std::vector<int64_t>{1, 6});
    IntMatrix z(3, 2);
    CHECK(smith_invariants(z).empty());
    IntMatrix t(1, 1);
    t(0, 0) = -4;
    CHECK(smith_invariants(t) == std::vector<int64_t>{4});
}

TEST_CASE("smith invariants agree with gcd of minors") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
        auto m = random_matrix(rng, r, c, -4, 4);
        if (trial % 3 == 0) {  // force low rank
            for (int j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);
        }
        INFO(m.str());
        CHECK(smith_invariants(m) == minors_invariants(m));
        CHECK(rank(m) == rational_rank(m));
    }
}

TEST_CASE("column echelon factorization") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        auto m = random_matrix(rng, r, c, -3, 3);
        auto ce = column_echelon(m);
        CHECK(ce.rank == rational_rank(m));
        CHECK(ce.V * ce.vinv == IntMatrix::identity(c));
        auto mv = m * ce.V;
        for (int j = 0; j < c; ++j)
            for (int i = 0; i < r; ++i) CHECK(mv(i, j) == (j < ce.rank ? ce.B(i, j) : 0));
        CHECK((m * ce.kernel()).is_zero());
        CHECK(ce.B * ce.coords() == m);
    }
}

TEST_CASE("overflow is reported") {
    CHECK_THROWS_AS(ck_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);
    CHECK_THROWS_AS(ck_add(INT64_MAX, 1), std::overflow_error);
}
