#ifndef GJ_RANKTRACE_HPP
#define GJ_RANKTRACE_HPP

#include <vector>

#include "gj/band.hpp"
#include "gj/central.hpp"
#include "gj/rank.hpp"

namespace gj {

/// Exact real of the form a + b*sqrt(d), d a square-free nonnegative
/// integer. Order comparisons against rationals are decided by integer
/// arithmetic only.
class QuadraticReal {
public:
    QuadraticReal(Rat a, Rat b, long long d);

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long long d() const { return d_; }

    bool is_rational() const { return b_.is_zero() || d_ <= 1; }
    /// -1, 0, +1 against a rational.
    int compare(const Rat& r) const;
    /// Scaled value (c*a, c*b, d).
    QuadraticReal scaled(const Rat& c) const { return QuadraticReal(c * a_, c * b_, d_); }
    /// Largest integer <= value.
    long long floor() const;

private:
    Rat a_, b_;
    long long d_;
};

struct RankApproximant {
    long long n = 0;
    long long rank = 0; // of the symmetric truncation A_n
    Rat density;        // rank / (2n+1)
};

struct RankReport {
    bool exact = false;
    // truncated mode
    std::vector<RankApproximant> approximants;
    long long stable_from = 0; // first n with every later approximant within 1/(2n+1) of the final
    // exact mode
    long long period = 0;      // n0
    long long symbol_rank = 0; // rank over Q(t) of the n0 x n0 Laurent symbol
    Rat density;               // the limit (exact) or the last approximant (truncated)
};

/// Truncated approximants rank(A_n)/(2n+1) for n = 1..n_max.
RankReport rank_density_truncated(const BandMatrix& x, long long n_max);
/// Exact density of a purely periodic matrix through its Laurent symbol.
RankReport rank_density_exact(const BandMatrix& x);

/// Mean of the main diagonal over the truncation window.
Rat trace_density_truncated(const BandMatrix& x, long long n);
/// Mean of one period of a purely periodic main diagonal.
Rat trace_density_exact(const BandMatrix& x);

/// Laurent symbol of an n-periodic band matrix: entry (i,j) is the
/// polynomial sum_e c_{i,j,e} t^(e + shift) with one global shift making
/// all exponents nonnegative (rank over Q(t) is unaffected).
std::vector<std::vector<Poly>> laurent_symbol(const BandMatrix& x, long long period);

struct DiagonalConstruction {
    long long steps = 0;
    std::vector<int> values;    // d_i for i = -N..N
    std::vector<long long> r;   // r_0..r_N
    int value_at(long long i) const { return values[static_cast<std::size_t>(i + steps)]; }
    BandMatrix diagonal_matrix() const;
};

/// The constructive 0/1 diagonal whose truncated rank densities bracket an
/// irrational target x in (0,1): r_n is the unique integer with
/// (r_n - 1)/(2n+1) < x < r_n/(2n+1), d_0 = 1, and new ones are placed at
/// +-(n+1) (a single new one goes to +(n+1)).
DiagonalConstruction construct_diagonal(const QuadraticReal& x, long long steps);

} // namespace gj

#endif
