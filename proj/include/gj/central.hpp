#ifndef GJ_CENTRAL_HPP
#define GJ_CENTRAL_HPP

#include <utility>
#include <vector>

#include "gj/band.hpp"

namespace gj {

/// Element of the one-dimensional central extension: a band matrix plus
/// the coordinate of the central element.
struct ExtElement {
    BandMatrix x;
    Rat c;

    friend bool operator==(const ExtElement& a, const ExtElement& b) {
        return a.x == b.x && a.c == b.c;
    }
};

/// Symbol t^a f(D) of a differential operator, D = t d/dt.
struct WSymbol {
    long long a = 0;
    Poly f;

    friend bool operator==(const WSymbol& u, const WSymbol& v) {
        return (u.f.is_zero() && v.f.is_zero()) || (u.a == v.a && u.f == v.f);
    }
};

/// Compression X -> JXJ: zeroes every entry with a negative row or
/// column index.
BandMatrix compress(const BandMatrix& x);

/// tr([JXJ, JYJ] - J[X,Y]J). The inner matrix is finitely supported;
/// a failure of that assertion is an internal error.
Rat japanese_cocycle(const BandMatrix& x, const BandMatrix& y);

/// Extended bracket ([x,y], Psi(x,y)); central coordinates of the inputs
/// are ignored.
ExtElement ext_bracket(const ExtElement& u, const ExtElement& v);

/// Image of e_{i,j} (x) t^a under the loop-algebra embedding, with the
/// matrix unit placed on the residue classes (i-1, j-1) of the fixed
/// section {0,...,n-1}: ones at (i-1 + rn, j-1 + (r+a)n) for all integers
/// r. Requires n > 1, 1 <= i,j <= n.
BandMatrix embed_affine(long long n, long long i, long long j, long long a);

/// Image of t^a f(D): the single diagonal at offset -a carrying f(i - a)
/// at row i.
BandMatrix embed_w1inf(const WSymbol& w);

/// Reference bracket and cocycle of differential-operator symbols:
/// ([t^r f, t^s g], Psi_W). The displayed cocycle sum covers r = -s >= 0;
/// r = -s < 0 is filled in by antisymmetry; r + s != 0 gives 0.
std::pair<WSymbol, Rat> w_reference(long long r, const Poly& f, long long s, const Poly& g);

/// Block decomposition along the section {0,...,n-1} of Z -> Z/nZ:
/// block (i,j) holds (m[i+nk, j+nl])_{k,l}.
std::vector<std::vector<BandMatrix>> block_iso_forward(long long n, const BandMatrix& x);
BandMatrix block_iso_inverse(long long n, const std::vector<std::vector<BandMatrix>>& blocks);

} // namespace gj

#endif
