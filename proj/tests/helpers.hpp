#ifndef GJ_TEST_HELPERS_HPP
#define GJ_TEST_HELPERS_HPP

#include <random>

#include "gj/band.hpp"

namespace gjtest {

using Rng = std::mt19937_64;

inline long long rand_in(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<unsigned long long>(hi - lo + 1));
}

inline gj::Rat rand_rat(Rng& rng, long long span = 3) {
    long long num = rand_in(rng, -span, span);
    long long den = rand_in(rng, 1, 2);
    return gj::Rat(num, den);
}

inline gj::Poly rand_poly(Rng& rng, long long max_deg) {
    std::vector<gj::Rat> cs;
    long long deg = rand_in(rng, -1, max_deg); // -1 gives the zero polynomial
    for (long long k = 0; k <= deg; ++k) cs.push_back(rand_rat(rng));
    return gj::Poly::from_coeffs(std::move(cs));
}

inline gj::QuasiPolyTail rand_tail(Rng& rng, long long max_period, long long max_deg) {
    long long m = rand_in(rng, 1, max_period);
    std::vector<gj::Poly> ps;
    for (long long r = 0; r < m; ++r) ps.push_back(rand_poly(rng, max_deg));
    return gj::QuasiPolyTail::make(std::move(ps));
}

inline gj::QuasiPolySeq rand_seq(Rng& rng, long long max_period, long long max_deg,
                                 long long max_window = 3) {
    gj::QuasiPolyTail left = rand_tail(rng, max_period, max_deg);
    gj::QuasiPolyTail right = rand_tail(rng, max_period, max_deg);
    long long lo = rand_in(rng, -3, 3);
    std::vector<gj::Rat> window;
    long long len = rand_in(rng, 0, max_window);
    for (long long k = 0; k < len; ++k) window.push_back(rand_rat(rng));
    return gj::QuasiPolySeq::make(std::move(left), std::move(right), lo, std::move(window));
}

/// Random band matrix within the spec's random-test envelope
/// (bandwidth, tail period, polynomial degree all bounded).
inline gj::BandMatrix rand_band(Rng& rng, long long max_bw = 3, long long max_period = 3,
                                long long max_deg = 2) {
    gj::BandMatrix m;
    long long bw = rand_in(rng, 0, max_bw);
    for (long long d = -bw; d <= bw; ++d) {
        if (rand_in(rng, 0, 2) == 0) continue; // keep it sparse
        m.set_diagonal(d, rand_seq(rng, max_period, max_deg));
    }
    return m;
}

/// Purely periodic band matrix: constant diagonals, empty windows.
inline gj::BandMatrix rand_periodic_band(Rng& rng, long long max_bw = 2, long long max_period = 3) {
    gj::BandMatrix m;
    long long bw = rand_in(rng, 0, max_bw);
    for (long long d = -bw; d <= bw; ++d) {
        if (rand_in(rng, 0, 1) == 0) continue;
        long long period = rand_in(rng, 1, max_period);
        std::vector<gj::Poly> ps;
        for (long long r = 0; r < period; ++r) ps.push_back(gj::Poly(rand_rat(rng)));
        gj::QuasiPolyTail t = gj::QuasiPolyTail::make(std::move(ps));
        m.set_diagonal(d, gj::QuasiPolySeq::make(t, t, 0, {}));
    }
    return m;
}

/// Dense-window oracle for the J-conjugation involutions: computes the
/// reflected window directly from entries of X, independent of the
/// band-level implementation.
inline gj::DenseMat dense_involution(const gj::BandMatrix& x, const gj::InvolutionSpec& spec,
                                     long long n) {
    gj::DenseMat out(n);
    for (long long i = -n; i <= n; ++i)
        for (long long j = -n; j <= n; ++j) {
            gj::Rat v;
            switch (spec.kind) {
                case gj::InvolutionSpec::Kind::transpose:
                    v = x.entry(j, i);
                    break;
                case gj::InvolutionSpec::Kind::signed_antidiag:
                    v = x.entry(spec.l - j, spec.l - i);
                    if (gj::detail::floor_mod(i + j, 2) == 1) v = -v;
                    break;
                case gj::InvolutionSpec::Kind::plain_antidiag:
                    v = x.entry(spec.l - j, spec.l - i);
                    break;
            }
            out.at(i, j) = v;
        }
    return out;
}

/// Conjugation oracle built from the literal J-matrix products on a dense
/// window large enough that no truncation effects reach the centre.
inline gj::DenseMat dense_conjugation(const gj::BandMatrix& x, const gj::InvolutionSpec& spec,
                                      long long n) {
    using gj::DenseMat;
    using gj::InvolutionSpec;
    using gj::Rat;
    if (spec.kind == InvolutionSpec::Kind::transpose) return x.truncate(n).transposed();
    const long long m = n + (spec.l < 0 ? -spec.l : spec.l);
    DenseMat refl(m);
    for (long long i = -m; i <= m; ++i) {
        const long long a = spec.l - i;
        if (a < -m || a > m) continue;
        refl.at(i, a) = (spec.kind == InvolutionSpec::Kind::signed_antidiag &&
                         gj::detail::floor_mod(i, 2) == 1)
                            ? Rat(-1)
                            : Rat(1);
    }
    DenseMat prod = refl * x.truncate(m).transposed() * refl;
    const Rat pref = (spec.kind == InvolutionSpec::Kind::signed_antidiag &&
                      gj::detail::floor_mod(spec.l, 2) == 1)
                         ? Rat(-1)
                         : Rat(1);
    DenseMat out(n);
    for (long long i = -n; i <= n; ++i)
        for (long long j = -n; j <= n; ++j) out.at(i, j) = pref * prod.at(i, j);
    return out;
}

inline std::vector<gj::InvolutionSpec> all_involutions() {
    return {gj::InvolutionSpec::transpose(), gj::InvolutionSpec::tau(0), gj::InvolutionSpec::tau(2),
            gj::InvolutionSpec::tau(-1),     gj::InvolutionSpec::tau_s(0), gj::InvolutionSpec::tau_s(-3),
            gj::InvolutionSpec::tau_B(),     gj::InvolutionSpec::tau_C(),  gj::InvolutionSpec::tau_D()};
}

} // namespace gjtest

#endif
