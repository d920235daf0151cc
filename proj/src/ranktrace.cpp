#include "gj/ranktrace.hpp"

namespace gj {

namespace {

bool square_free(long long d) {
    for (long long f = 2; f * f <= d; ++f)
        if (d % (f * f) == 0) return false;
    return true;
}

} // namespace

QuadraticReal::QuadraticReal(Rat a, Rat b, long long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 0) throw domain_error("radicand must be nonnegative");
    if (!square_free(d_)) throw domain_error("radicand must be square-free");
    if (d_ <= 1) {
        // sqrt(0) = 0, sqrt(1) = 1: fold into the rational part
        if (d_ == 1) a_ += b_;
        b_ = Rat(0);
    }
}

int QuadraticReal::compare(const Rat& r) const {
    const Rat u = a_ - r; // value - r = u + b sqrt(d)
    if (b_.is_zero()) return u.sign();
    if (u.sign() >= 0 && b_.sign() > 0) return 1;
    if (u.sign() <= 0 && b_.sign() < 0) return -1;
    // opposite signs: compare u^2 against b^2 d on the correct side
    const Rat lhs = u * u;
    const Rat rhs = b_ * b_ * Rat(d_);
    if (b_.sign() > 0) {
        // u < 0: value - r > 0 iff b^2 d > u^2
        if (rhs > lhs) return 1;
        if (rhs < lhs) return -1;
        return 0;
    }
    // b < 0, u > 0: value - r > 0 iff u^2 > b^2 d
    if (lhs > rhs) return 1;
    if (lhs < rhs) return -1;
    return 0;
}

long long QuadraticReal::floor() const {
    // |value| <= |a| + |b| d for d >= 1 (sqrt(d) <= d), so binary search
    // over exact comparisons suffices
    Rat bound = a_.abs() + b_.abs() * Rat(d_ < 1 ? 1 : d_) + Rat(1);
    long long hi = 1;
    while (Rat(hi) < bound) hi *= 2;
    long long lo = -hi;
    // invariant: value >= lo, value < hi+1; shrink to floor
    while (lo < hi) {
        long long mid = lo + (hi - lo + 1) / 2;
        if (compare(Rat(mid)) >= 0)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

// ------------------------------------------------------------ rank / trace

namespace {

SparseRatMatrix truncation_matrix(const BandMatrix& x, long long n) {
    SparseRatMatrix m(2 * n + 1, 2 * n + 1);
    for (const auto& [i, j, v] : x.truncate_sparse(n)) m.add(i + n, j + n, v);
    return m;
}

} // namespace

RankReport rank_density_truncated(const BandMatrix& x, long long n_max) {
    if (n_max < 1) throw domain_error("truncation sweep needs n >= 1");
    RankReport rep;
    rep.exact = false;
    for (long long n = 1; n <= n_max; ++n) {
        long long r = sparse_rank(truncation_matrix(x, n));
        rep.approximants.push_back({n, r, Rat(r, 2 * n + 1)});
    }
    rep.density = rep.approximants.back().density;
    rep.stable_from = n_max;
    for (long long n0 = n_max; n0 >= 1; --n0) {
        const auto& ap = rep.approximants[static_cast<std::size_t>(n0 - 1)];
        Rat dev = (ap.density - rep.density).abs();
        if (dev <= Rat(1, 2 * ap.n + 1))
            rep.stable_from = n0;
        else
            break;
    }
    return rep;
}

std::vector<std::vector<Poly>> laurent_symbol(const BandMatrix& x, long long period) {
    if (period < 1) throw domain_error("period must be positive");
    // offsets d decompose as (j - i) + period * e over the section {0..period-1}
    long long min_e = 0;
    for (const auto& [d, seq] : x.diagonals()) {
        for (long long i = 0; i < period; ++i) {
            long long j = detail::floor_mod(i + d, period);
            min_e = std::min(min_e, (d - (j - i)) / period);
        }
    }
    std::vector<std::vector<Poly>> sym(static_cast<std::size_t>(period),
                                       std::vector<Poly>(static_cast<std::size_t>(period)));
    for (const auto& [d, seq] : x.diagonals()) {
        if (!seq.purely_periodic()) throw domain_error("exact mode needs a purely periodic matrix");
        for (long long i = 0; i < period; ++i) {
            long long j = detail::floor_mod(i + d, period);
            long long e = (d - (j - i)) / period;
            const Rat c = seq.at(i);
            if (c.is_zero()) continue;
            std::vector<Rat> mono(static_cast<std::size_t>(e - min_e) + 1, Rat(0));
            mono.back() = c;
            sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                sym[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +
                Poly::from_coeffs(std::move(mono));
        }
    }
    return sym;
}

RankReport rank_density_exact(const BandMatrix& x) {
    const auto cls = x.classify();
    if (!cls.period) throw domain_error("exact rank density needs a periodic matrix");
    const long long n0 = *cls.period;
    RankReport rep;
    rep.exact = true;
    rep.period = n0;
    if (x.is_zero()) {
        rep.symbol_rank = 0;
        rep.density = Rat(0);
        return rep;
    }
    // an n0-periodic matrix is an n0 x n0 matrix over Laurent polynomials
    // in the shift; generic rank over Q(t) gives the density
    rep.symbol_rank = poly_matrix_rank(laurent_symbol(x, n0));
    rep.density = Rat(rep.symbol_rank, n0);
    return rep;
}

Rat trace_density_truncated(const BandMatrix& x, long long n) {
    if (n < 0) throw domain_error("truncation size must be nonnegative");
    Rat sum(0);
    const QuasiPolySeq* diag = x.diagonal(0);
    if (diag)
        for (long long i = -n; i <= n; ++i) sum += diag->at(i);
    return sum / Rat(2 * n + 1);
}

Rat trace_density_exact(const BandMatrix& x) {
    const QuasiPolySeq* diag = x.diagonal(0);
    if (!diag) return Rat(0);
    if (!diag->purely_periodic()) throw domain_error("exact trace needs a purely periodic main diagonal");
    const long long m = diag->left().period();
    Rat sum(0);
    for (long long i = 0; i < m; ++i) sum += diag->at(i);
    return sum / Rat(m);
}

// -------------------------------------------------------- diagonal builder

BandMatrix DiagonalConstruction::diagonal_matrix() const {
    std::vector<Rat> w;
    w.reserve(values.size());
    for (int v : values) w.emplace_back(v);
    return BandMatrix::from_diagonal(0, QuasiPolySeq::window_only(-steps, std::move(w)));
}

DiagonalConstruction construct_diagonal(const QuadraticReal& x, long long steps) {
    if (x.is_rational()) throw domain_error("target must be irrational");
    if (x.compare(Rat(0)) <= 0 || x.compare(Rat(1)) >= 0) throw domain_error("target must lie in (0,1)");
    if (steps < 0) throw domain_error("steps must be nonnegative");

    DiagonalConstruction out;
    out.steps = steps;
    out.values.assign(static_cast<std::size_t>(2 * steps + 1), 0);
    out.r.push_back(1);
    out.values[static_cast<std::size_t>(steps)] = 1; // d_0 = 1
    for (long long n = 1; n <= steps; ++n) {
        // (r_n - 1)/(2n+1) < x < r_n/(2n+1), i.e. r_n = floor((2n+1)x) + 1
        const long long rn = x.scaled(Rat(2 * n + 1)).floor() + 1;
        const long long delta = rn - out.r.back();
        if (delta < 0 || delta > 2)
            throw internal_error("bracketing sequence stepped outside {0,1,2}");
        if (delta == 1) {
            out.values[static_cast<std::size_t>(steps + n)] = 1; // tie-break: +(n+1) side
        } else if (delta == 2) {
            out.values[static_cast<std::size_t>(steps + n)] = 1;
            out.values[static_cast<std::size_t>(steps - n)] = 1;
        }
        out.r.push_back(rn);
    }
    return out;
}

} // namespace gj
