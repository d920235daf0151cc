#include <doctest.h>

#include "gj/rank.hpp"
#include "helpers.hpp"

using namespace gj;

namespace {

/// Plain dense Gaussian elimination over Q, the independent rank oracle.
long long dense_rank_oracle(std::vector<std::vector<Rat>> m) {
    if (m.empty()) return 0;
    const std::size_t nr = m.size(), nc = m[0].size();
    long long rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < nc && row < nr; ++col) {
        std::size_t piv = row;
        while (piv < nr && m[piv][col].is_zero()) ++piv;
        if (piv == nr) continue;
        std::swap(m[piv], m[row]);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == row || m[i][col].is_zero()) continue;
            Rat f = m[i][col] / m[row][col];
            for (std::size_t j = col; j < nc; ++j) m[i][j] -= f * m[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("sparse rank matches dense elimination on random matrices") {
    gjtest::Rng rng(41);
    for (int t = 0; t < 120; ++t) {
        const long long nr = gjtest::rand_in(rng, 1, 8);
        const long long nc = gjtest::rand_in(rng, 1, 8);
        std::vector<std::vector<Rat>> dense(static_cast<std::size_t>(nr),
                                            std::vector<Rat>(static_cast<std::size_t>(nc), Rat(0)));
        SparseRatMatrix sp(nr, nc);
        for (long long i = 0; i < nr; ++i)
            for (long long j = 0; j < nc; ++j) {
                if (gjtest::rand_in(rng, 0, 2) != 0) continue;
                Rat v = gjtest::rand_rat(rng, 5);
                dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
                sp.add(i, j, v);
            }
        CHECK(sparse_rank(sp) == dense_rank_oracle(dense));
    }
}

TEST_CASE("sparse rank on wide low-rank products") {
    // A (n x r) times B (r x m) keeps rank <= r; both orientations hit the
    // transpose path
    gjtest::Rng rng(42);
    for (int t = 0; t < 25; ++t) {
        const long long n = gjtest::rand_in(rng, 4, 12);
        const long long m = gjtest::rand_in(rng, 4, 30);
        const long long r = gjtest::rand_in(rng, 0, 3);
        std::vector<std::vector<Rat>> a(static_cast<std::size_t>(n),
                                        std::vector<Rat>(static_cast<std::size_t>(r), Rat(0)));
        std::vector<std::vector<Rat>> b(static_cast<std::size_t>(r),
                                        std::vector<Rat>(static_cast<std::size_t>(m), Rat(0)));
        for (auto& row : a)
            for (auto& v : row) v = gjtest::rand_rat(rng, 4);
        for (auto& row : b)
            for (auto& v : row) v = gjtest::rand_rat(rng, 4);
        std::vector<std::vector<Rat>> prod(static_cast<std::size_t>(n),
                                           std::vector<Rat>(static_cast<std::size_t>(m), Rat(0)));
        SparseRatMatrix sp(n, m);
        SparseRatMatrix spt(m, n);
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < m; ++j) {
                Rat acc(0);
                for (long long k = 0; k < r; ++k)
                    acc += a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                           b[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = acc;
                sp.add(i, j, acc);
                spt.add(j, i, acc);
            }
        const long long want = dense_rank_oracle(prod);
        CHECK(want <= r);
        CHECK(sparse_rank(sp) == want);
        CHECK(sparse_rank(spt) == want);
    }
}

TEST_CASE("rank of structured matrices") {
    // rank-1 outer product
    SparseRatMatrix m(6, 6);
    for (long long i = 0; i < 6; ++i)
        for (long long j = 0; j < 6; ++j) m.add(i, j, Rat(i + 1) * Rat(2 * j + 1));
    CHECK(sparse_rank(m) == 1);

    SparseRatMatrix zero(5, 9);
    CHECK(sparse_rank(zero) == 0);

    SparseRatMatrix id(7, 7);
    for (long long i = 0; i < 7; ++i) id.add(i, i, Rat(1, i + 2));
    CHECK(sparse_rank(id) == 7);

    // duplicate adds cancel exactly
    SparseRatMatrix cancel(2, 2);
    cancel.add(0, 0, Rat(1, 3));
    cancel.add(0, 0, Rat(-1, 3));
    cancel.add(1, 1, Rat(2));
    CHECK(sparse_rank(cancel) == 1);
}

TEST_CASE("polynomial matrix rank over the function field") {
    Poly t = Poly::x();
    Poly one(Rat(1));
    // [[1, t],[t, t^2]] has rank 1 over Q(t)
    CHECK(poly_matrix_rank({{one, t}, {t, t * t}}) == 1);
    // [[1, t],[t, 1]] has determinant 1 - t^2 != 0
    CHECK(poly_matrix_rank({{one, t}, {t, one}}) == 2);
    // generic rank can exceed the rank at particular evaluations
    CHECK(poly_matrix_rank({{t, Poly()}, {Poly(), t}}) == 2);
    CHECK(poly_matrix_rank({{Poly(), Poly()}, {Poly(), Poly()}}) == 0);
}

TEST_CASE("polynomial rank agrees with evaluation at a generic point") {
    gjtest::Rng rng(43);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gjtest::rand_in(rng, 1, 4));
        std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
        for (auto& row : m)
            for (auto& e : row) e = gjtest::rand_poly(rng, 2);
        long long pr = poly_matrix_rank(m);
        // evaluating at any rational point can only drop the rank; at a
        // point avoiding finitely many bad values it is equal, so take the
        // maximum over a spread of sample points as a lower-bound oracle
        long long best = 0;
        for (long long s = -8; s <= 8; ++s) {
            SparseRatMatrix sp(static_cast<long long>(n), static_cast<long long>(n));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) sp.add(static_cast<long long>(i), static_cast<long long>(j), m[i][j].eval_at(s));
            best = std::max(best, sparse_rank(sp));
        }
        CHECK(pr == best);
    }
}

TEST_CASE("span solvers recover coordinates") {
    std::vector<std::vector<Rat>> cols = {
        {Rat(1), Rat(0), Rat(2)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(1), Rat(3)}};
    ColumnSpanSolver solver(cols);
    CHECK(solver.rank() == 2);
    std::vector<Rat> v = {Rat(2), Rat(3), Rat(7)};
    auto coords = solver.solve(v);
    std::vector<Rat> rec(3, Rat(0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i) rec[i] += coords[j] * cols[j][i];
    CHECK(rec == v);
    CHECK_THROWS_AS(solver.solve({Rat(0), Rat(0), Rat(1)}), domain_error);

    SparseSpanSolver ssp;
    CHECK(ssp.add_column({{0, Rat(1)}, {2, Rat(2)}}));
    CHECK(ssp.add_column({{1, Rat(1)}, {2, Rat(1)}}));
    CHECK_FALSE(ssp.add_column({{0, Rat(2)}, {1, Rat(2)}, {2, Rat(6)}}));
    CHECK(ssp.rank() == 2);
    auto c = ssp.solve({{0, Rat(3)}, {1, Rat(-1)}, {2, Rat(5)}});
    CHECK(c == std::vector<Rat>{Rat(3), Rat(-1)});
    CHECK(ssp.contains({{0, Rat(1)}, {2, Rat(2)}}));
    CHECK_FALSE(ssp.contains({{2, Rat(1)}}));
    CHECK(ssp.reduce_mod({{0, Rat(1)}, {2, Rat(2)}}).empty());
}
