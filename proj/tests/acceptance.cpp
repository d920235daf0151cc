// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// throughout. Returns the number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "gj/central.hpp"
#include "gj/lie.hpp"
#include "gj/ranktrace.hpp"
#include "helpers.hpp"

using namespace gj;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
        body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (error.empty()) {
        std::cout << "[PASS] criterion " << number << ": " << label << " (" << ms << " ms)\n";
    } else {
        ++failures;
        std::cout << "[FAIL] criterion " << number << ": " << label << " (" << ms
                  << " ms) -- " << error << "\n";
    }
}

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

template <typename T>
std::string show(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

void expect_betti(const BettiReport& r, const std::vector<long long>& want, const std::string& what) {
    expect(r.betti == want, what + ": got " + show(r.betti) + ", want " + show(want));
}

} // namespace

int main() {
    criterion(1, "tQ.Q = I and PQ - QP = I as band-matrix equalities", [] {
        const BandMatrix P = BandMatrix::t_derivative();
        const BandMatrix Q = BandMatrix::t_multiplication();
        const BandMatrix I = BandMatrix::identity();
        expect(Q.involution(InvolutionSpec::transpose()) * Q == I, "tQ.Q != I");
        expect(P * Q - Q * P == I, "PQ - QP != I");
    });

    criterion(2, "cocycle antisymmetry and 3-term identity on 100 random triples", [] {
        gjtest::Rng rng(20240117);
        std::vector<BandMatrix> pool;
        for (int t = 0; t < 300; ++t) pool.push_back(gjtest::rand_band(rng, 3, 3, 2));
        for (int t = 0; t < 100; ++t) {
            const BandMatrix& x = pool[static_cast<std::size_t>(3 * t)];
            const BandMatrix& y = pool[static_cast<std::size_t>(3 * t + 1)];
            const BandMatrix& z = pool[static_cast<std::size_t>(3 * t + 2)];
            expect(japanese_cocycle(y, x) == -japanese_cocycle(x, y), "antisymmetry failed");
            Rat sum = japanese_cocycle(bracket(x, y), z) + japanese_cocycle(bracket(y, z), x) +
                      japanese_cocycle(bracket(z, x), y);
            expect(sum == Rat(0), "3-term cocycle identity failed");
        }
    });

    criterion(3, "affine transport: brackets and central terms a.delta exactly", [] {
        for (long long n = 2; n <= 3; ++n)
            for (long long i = 1; i <= n; ++i)
                for (long long j = 1; j <= n; ++j)
                    for (long long k = 1; k <= n; ++k)
                        for (long long l = 1; l <= n; ++l)
                            for (long long a = -3; a <= 3; ++a)
                                for (long long b = -3; b <= 3; ++b) {
                                    BandMatrix u = embed_affine(n, i, j, a);
                                    BandMatrix v = embed_affine(n, k, l, b);
                                    BandMatrix want;
                                    if (j == k) want = want + embed_affine(n, i, l, a + b);
                                    if (l == i) want = want - embed_affine(n, k, j, a + b);
                                    expect(bracket(u, v) == want, "bracket transport failed");
                                    Rat central = (a + b == 0 && j == k && i == l) ? Rat(a) : Rat(0);
                                    expect(japanese_cocycle(u, v) == central,
                                           "central term transport failed");
                                }
    });

    criterion(4, "symbol transport and a single cocycle constant sigma", [] {
        gjtest::Rng rng(77);
        int sigma = 0;
        for (long long r = -3; r <= 3; ++r)
            for (long long s = -3; s <= 3; ++s)
                for (int rep = 0; rep < 4; ++rep) {
                    Poly f = gjtest::rand_poly(rng, 3);
                    Poly g = gjtest::rand_poly(rng, 3);
                    BandMatrix u = embed_w1inf({r, f});
                    BandMatrix v = embed_w1inf({s, g});
                    auto [sym, psi] = w_reference(r, f, s, g);
                    expect(bracket(u, v) == embed_w1inf(sym), "bracket transport failed");
                    Rat lhs = japanese_cocycle(u, v);
                    if (psi.is_zero()) {
                        expect(lhs == Rat(0), "cocycle vanishing failed");
                    } else {
                        Rat ratio = lhs / psi;
                        expect(ratio == Rat(1) || ratio == Rat(-1), "cocycle ratio not a sign");
                        int this_sigma = ratio == Rat(1) ? 1 : -1;
                        if (sigma == 0) sigma = this_sigma;
                        expect(sigma == this_sigma, "sigma is not a single global constant");
                    }
                }
        expect(sigma != 0, "no nonzero cocycle value met in the sweep");
    });

    criterion(5, "block map: two-sided inverse and multiplicative on 50 random pairs", [] {
        gjtest::Rng rng(88);
        for (long long n = 2; n <= 3; ++n)
            for (int t = 0; t < 25; ++t) {
                BandMatrix x = gjtest::rand_band(rng, 2, 2, 1);
                BandMatrix y = gjtest::rand_band(rng, 2, 2, 1);
                expect(block_iso_inverse(n, block_iso_forward(n, x)) == x, "inverse failed");
                auto bx = block_iso_forward(n, x);
                auto by = block_iso_forward(n, y);
                auto bxy = block_iso_forward(n, x * y);
                for (long long i = 0; i < n; ++i)
                    for (long long j = 0; j < n; ++j) {
                        BandMatrix acc;
                        for (long long k = 0; k < n; ++k)
                            acc = acc + bx[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                                            by[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
                        expect(acc == bxy[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                               "block product mismatch");
                    }
            }
    });

    criterion(6, "Lie homology: sl2, gl2, gl3 vs predicted, gl over matrix algebra", [] {
        expect_betti(lie_homology(FinLieAlg::sl(2), 3), {1, 0, 0, 1}, "sl(2)");
        expect_betti(lie_homology(FinLieAlg::gl(2), 4), {1, 1, 0, 1, 1}, "gl(2)");
        std::vector<long long> predicted =
            predicted_stable_dims({{1, true}, {3, true}, {5, true}}, 5);
        BettiReport gl3 = lie_homology(FinLieAlg::gl(3), 5);
        expect(gl3.betti == predicted, "gl(3) vs predicted exterior table: got " + show(gl3.betti) +
                                            ", want " + show(predicted));
        BettiReport over = lie_homology(FinLieAlg::gl_over(1, FinAssocAlg::matrix_algebra(2)), 4);
        BettiReport gl2 = lie_homology(FinLieAlg::gl(2), 4);
        expect(over.betti == gl2.betti, "gl_1(M_2) differs from gl(2)");
    });

    criterion(7, "Hochschild/cyclic tables for the field and the 2x2 matrix algebra", [] {
        expect_betti(hochschild_homology(FinAssocAlg::field(), 3), {1, 0, 0, 0}, "HH(field)");
        expect_betti(cyclic_homology(FinAssocAlg::field(), 4), {1, 0, 1, 0, 1}, "HC(field)");
        expect_betti(hochschild_homology(FinAssocAlg::matrix_algebra(2), 3), {1, 0, 0, 0}, "HH(M2)");
        expect_betti(cyclic_homology(FinAssocAlg::matrix_algebra(2), 3), {1, 0, 1, 0}, "HC(M2)");
    });

    criterion(8, "dihedral pattern p = 0 mod 4 and skew pattern p = 2 mod 4", [] {
        expect_betti(dihedral_homology(FinAssocAlg::field(), +1, 6), {1, 0, 0, 0, 1, 0, 0}, "HD(field)");
        expect_betti(dihedral_homology(FinAssocAlg::field(), -1, 6), {0, 0, 1, 0, 0, 0, 1},
                     "skew HD(field)");
    });

    criterion(9, "periodicity windows for field and matrix algebra", [] {
        PeriodicityReport f = periodicity_check(FinAssocAlg::field(), 4);
        expect(f.all_hold, "field window failed");
        long long applicable = 0;
        for (const auto& w : f.windows) applicable += w.applicable ? 1 : 0;
        expect(applicable >= 2, "expected applicable windows for the field");
        PeriodicityReport m = periodicity_check(FinAssocAlg::matrix_algebra(2), 3);
        expect(m.all_hold, "matrix algebra window failed");
        bool m2_applicable = false;
        for (const auto& w : m.windows) m2_applicable |= w.applicable;
        expect(m2_applicable, "expected an applicable window for the matrix algebra");
    });

    criterion(10, "twisted product of split idempotents is the 2x2 matrix algebra", [] {
        FinAssocAlg tw = twisted_group_algebra(FinAssocAlg::product_field(2), GroupAction::cyclic_shift(2));
        FinAssocAlg m2 = FinAssocAlg::matrix_algebra(2);
        auto phi = twisted_cyclic_iso(2);
        expect(tw.dim() == m2.dim(), "dimension mismatch");
        std::vector<bool> hit(4, false);
        for (long long k = 0; k < 4; ++k) hit[static_cast<std::size_t>(phi[static_cast<std::size_t>(k)])] = true;
        for (bool h : hit) expect(h, "map is not bijective on the basis");
        for (long long u = 0; u < 4; ++u)
            for (long long v = 0; v < 4; ++v) {
                FinAssocAlg::SparseVec lhs;
                for (const auto& [k, c] : tw.mult(u, v))
                    lhs.emplace_back(phi[static_cast<std::size_t>(k)], c);
                std::sort(lhs.begin(), lhs.end());
                expect(lhs == m2.mult(phi[static_cast<std::size_t>(u)], phi[static_cast<std::size_t>(v)]),
                       "multiplication table is not transported");
            }
    });

    criterion(11, "rank functional: normalisation, alternating diagonal, axioms", [] {
        expect(rank_density_exact(BandMatrix::identity()).density == Rat(1), "Rank(I) != 1");
        BandMatrix alt = BandMatrix::from_diagonal(0, QuasiPolySeq::periodic_indicator(2, 0, Rat(1)));
        expect(rank_density_exact(alt).density == Rat(1, 2), "alternating diagonal density != 1/2");
        RankReport sweep = rank_density_truncated(alt, 200);
        for (const auto& ap : sweep.approximants) {
            Rat dev = (ap.density - Rat(1, 2)).abs();
            expect(dev < Rat(1, 2 * ap.n + 1), "approximant outside 1/(2n+1)");
        }
        gjtest::Rng rng(99);
        for (int t = 0; t < 20; ++t) {
            BandMatrix x = gjtest::rand_periodic_band(rng);
            BandMatrix y = gjtest::rand_periodic_band(rng);
            Rat rx = rank_density_exact(x).density;
            Rat ry = rank_density_exact(y).density;
            Rat rxy = rank_density_exact(x * y).density;
            expect(rxy <= rx && rxy <= ry, "submultiplicativity failed");
            expect((rx == Rat(0)) == x.is_zero(), "faithfulness failed");
        }
        for (int t = 0; t < 20; ++t) {
            long long m = gjtest::rand_in(rng, 2, 4);
            std::vector<Poly> pe(static_cast<std::size_t>(m)), pf(static_cast<std::size_t>(m));
            for (long long r = 0; r < m; ++r) {
                switch (gjtest::rand_in(rng, 0, 2)) {
                    case 0: pe[static_cast<std::size_t>(r)] = Poly(Rat(1)); break;
                    case 1: pf[static_cast<std::size_t>(r)] = Poly(Rat(1)); break;
                    default: break;
                }
            }
            QuasiPolyTail te = QuasiPolyTail::make(pe), tf = QuasiPolyTail::make(pf);
            BandMatrix e = BandMatrix::from_diagonal(0, QuasiPolySeq::make(te, te, 0, {}));
            BandMatrix f = BandMatrix::from_diagonal(0, QuasiPolySeq::make(tf, tf, 0, {}));
            expect(e * e == e && f * f == f && (e * f).is_zero(), "idempotent setup broken");
            expect(rank_density_exact(e + f).density ==
                       rank_density_exact(e).density + rank_density_exact(f).density,
                   "additivity on orthogonal idempotents failed");
        }
    });

    criterion(12, "constructed diagonals for sqrt(2)-1 and sqrt(2)/2 up to n = 200", [] {
        const QuadraticReal targets[2] = {QuadraticReal(Rat(-1), Rat(1), 2),
                                          QuadraticReal(Rat(0), Rat(1, 2), 2)};
        for (const auto& x : targets) {
            DiagonalConstruction c = construct_diagonal(x, 200);
            expect(c.r[0] == 1 && c.value_at(0) == 1, "r_0 or d_0 wrong");
            for (long long n = 0; n <= 200; ++n) {
                long long ones = 0;
                for (long long i = -n; i <= n; ++i) ones += c.value_at(i);
                expect(ones == c.r[static_cast<std::size_t>(n)], "window count != r_n");
                const long long rn = c.r[static_cast<std::size_t>(n)];
                expect(x.compare(Rat(rn - 1, 2 * n + 1)) > 0, "lower bracket failed");
                expect(x.compare(Rat(rn, 2 * n + 1)) < 0, "upper bracket failed");
            }
        }
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES: " + std::to_string(failures))
              << "\n";
    return failures;
}
