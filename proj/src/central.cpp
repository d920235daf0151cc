#include "gj/central.hpp"

namespace gj {

BandMatrix compress(const BandMatrix& x) {
    BandMatrix r;
    for (const auto& [d, seq] : x.diagonals()) {
        // row i and column i + d both nonnegative
        r.set_diagonal(d, seq.restrict_ge(std::max<long long>(0, -d)));
    }
    return r;
}

Rat japanese_cocycle(const BandMatrix& x, const BandMatrix& y) {
    const BandMatrix cx = compress(x);
    const BandMatrix cy = compress(y);
    const BandMatrix z = bracket(cx, cy) - compress(bracket(x, y));
    for (const auto& [d, seq] : z.diagonals())
        if (!seq.finitely_supported())
            throw internal_error("cocycle argument is not finitely supported");
    const QuasiPolySeq* diag = z.diagonal(0);
    Rat tr(0);
    if (diag)
        for (const auto& v : diag->window()) tr += v;
    return tr;
}

ExtElement ext_bracket(const ExtElement& u, const ExtElement& v) {
    return {bracket(u.x, v.x), japanese_cocycle(u.x, v.x)};
}

BandMatrix embed_affine(long long n, long long i, long long j, long long a) {
    if (n <= 1) throw domain_error("affine embedding needs n > 1");
    if (i < 1 || i > n || j < 1 || j > n) throw domain_error("matrix-unit index out of 1..n");
    // unit (i,j) lands on rows (i-1) + rn, columns (j-1) + (r+a)n: one
    // diagonal at offset (j - i) + a n on the residue class i-1. The
    // section {0,...,n-1} keeps the pulled-back cocycle equal to the
    // affine one on the nose; a section through row 0 at another residue
    // shifts it by a coboundary.
    return BandMatrix::from_diagonal((j - i) + a * n,
                                     QuasiPolySeq::periodic_indicator(n, i - 1, Rat(1)));
}

BandMatrix embed_w1inf(const WSymbol& w) {
    if (w.f.is_zero()) return BandMatrix::zero();
    return BandMatrix::from_diagonal(-w.a,
                                     QuasiPolySeq::polynomial(w.f.compose_affine(Rat(1), Rat(-w.a))));
}

std::pair<WSymbol, Rat> w_reference(long long r, const Poly& f, long long s, const Poly& g) {
    WSymbol sym{r + s, f.shift_arg(s) * g - f * g.shift_arg(r)};
    Rat psi(0);
    if (r + s == 0) {
        if (r >= 0) {
            for (long long j = -r; j <= -1; ++j) psi += f.eval_at(j) * g.eval_at(j + r);
        } else {
            // antisymmetric extension of the displayed half
            for (long long j = -s; j <= -1; ++j) psi -= g.eval_at(j) * f.eval_at(j + s);
        }
    }
    return {sym, psi};
}

std::vector<std::vector<BandMatrix>> block_iso_forward(long long n, const BandMatrix& x) {
    if (n <= 1) throw domain_error("block decomposition needs n > 1");
    std::vector<std::vector<BandMatrix>> blocks(static_cast<std::size_t>(n),
                                                std::vector<BandMatrix>(static_cast<std::size_t>(n)));
    for (const auto& [d, seq] : x.diagonals()) {
        for (long long i = 0; i < n; ++i) {
            // block (i, j) with j = (i + d) mod n picks up block offset
            // e = (d - (j - i)) / n; its diagonal is X_d decimated to the
            // rows i + nk
            long long j = detail::floor_mod(i + d, n);
            long long e = (d - (j - i)) / n;
            auto& blk = blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            blk = blk + BandMatrix::from_diagonal(e, seq.decimate(n, i));
        }
    }
    return blocks;
}

BandMatrix block_iso_inverse(long long n, const std::vector<std::vector<BandMatrix>>& blocks) {
    if (n <= 1) throw domain_error("block decomposition needs n > 1");
    if (static_cast<long long>(blocks.size()) != n)
        throw domain_error("block array must be n x n");
    BandMatrix out;
    for (long long i = 0; i < n; ++i) {
        if (static_cast<long long>(blocks[static_cast<std::size_t>(i)].size()) != n)
            throw domain_error("block array must be n x n");
        for (long long j = 0; j < n; ++j) {
            const BandMatrix& blk = blocks[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            for (const auto& [e, seq] : blk.diagonals()) {
                long long d = (j - i) + n * e;
                out = out + BandMatrix::from_diagonal(d, seq.stretch(n, i));
            }
        }
    }
    return out;
}

} // namespace gj
