#ifndef GJ_BAND_HPP
#define GJ_BAND_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gj/quasipoly.hpp"

namespace gj {

/// Anti-automorphisms of order 2 of the band algebra. The J-conjugation
/// forms reduce to entrywise reflections:
///   transpose            (i,j) -> X[j,i]
///   signed antidiag(l)   (i,j) -> (-1)^(i+j) X[l-j,l-i]   (tau_l)
///   plain antidiag(l)    (i,j) -> X[l-j,l-i]              (tau_l^s)
/// The B/C/D reflections are the l = 0 / -1 specialisations.
struct InvolutionSpec {
    enum class Kind { transpose, signed_antidiag, plain_antidiag };
    Kind kind = Kind::transpose;
    long long l = 0;

    static InvolutionSpec transpose() { return {Kind::transpose, 0}; }
    static InvolutionSpec tau(long long l) { return {Kind::signed_antidiag, l}; }
    static InvolutionSpec tau_s(long long l) { return {Kind::plain_antidiag, l}; }
    static InvolutionSpec tau_B() { return tau_s(0); }
    static InvolutionSpec tau_C() { return tau(-1); }
    static InvolutionSpec tau_D() { return tau_s(-1); }

    std::string name() const;
};

/// Dense rational matrix with rows/columns indexed -n..n, as produced by
/// symmetric truncation.
class DenseMat {
public:
    explicit DenseMat(long long half) : half_(half), a_(size() * size()) {}
    long long half() const { return half_; }
    long long size() const { return 2 * half_ + 1; }
    Rat& at(long long i, long long j) { return a_[idx(i, j)]; }
    const Rat& at(long long i, long long j) const { return a_[idx(i, j)]; }

    friend DenseMat operator*(const DenseMat& a, const DenseMat& b);
    friend DenseMat operator-(const DenseMat& a, const DenseMat& b);
    friend bool operator==(const DenseMat& a, const DenseMat& b) {
        return a.half_ == b.half_ && a.a_ == b.a_;
    }
    DenseMat transposed() const;

    /// Equality of the central (2m+1)x(2m+1) windows.
    static bool agree_on_window(const DenseMat& a, const DenseMat& b, long long m);

private:
    long long half_;
    std::vector<Rat> a_;
    std::size_t idx(long long i, long long j) const {
        if (i < -half_ || i > half_ || j < -half_ || j > half_)
            throw internal_error("dense index out of range");
        return static_cast<std::size_t>((i + half_) * size() + (j + half_));
    }
};

struct BandClassification {
    bool finitely_supported = false;
    /// Least n >= 1 with m[i+n,j+n] = m[i,j], when one exists.
    std::optional<long long> period;
};

/// Doubly-infinite matrix with finitely many nonzero diagonals, each a
/// quasi-polynomial sequence. Diagonal d stores i -> m[i, i+d].
class BandMatrix {
public:
    BandMatrix() = default; // zero
    static BandMatrix zero() { return {}; }
    static BandMatrix identity();
    /// c * E[i,j]
    static BandMatrix matrix_unit(long long i, long long j, const Rat& c);
    /// Matrix of multiplication by t on Laurent polynomials (ones on the
    /// subdiagonal): sum of E[i+1,i].
    static BandMatrix t_multiplication();
    /// Matrix of d/dt (entry i at (i-1, i)).
    static BandMatrix t_derivative();
    /// Diagonal projection onto nonnegative indices: sum of E[i,i], i >= 0.
    static BandMatrix nonneg_projection();
    /// Single diagonal at the given offset.
    static BandMatrix from_diagonal(long long offset, QuasiPolySeq seq);
    /// Named constructor: "P", "Q", "I", "J" (no params) or "E" with
    /// params {i, j} and an optional coefficient (default 1). Unknown
    /// names are a domain error.
    static BandMatrix builtin(const std::string& name, const std::vector<long long>& params = {},
                              const std::optional<Rat>& value = std::nullopt);

    const std::map<long long, QuasiPolySeq>& diagonals() const { return diags_; }
    const QuasiPolySeq* diagonal(long long offset) const;
    Rat entry(long long i, long long j) const;
    long long bandwidth() const;
    bool is_zero() const { return diags_.empty(); }

    BandMatrix scaled(const Rat& c) const;
    friend BandMatrix operator+(const BandMatrix& a, const BandMatrix& b);
    friend BandMatrix operator-(const BandMatrix& a, const BandMatrix& b);
    friend BandMatrix operator*(const BandMatrix& a, const BandMatrix& b);
    friend bool operator==(const BandMatrix& a, const BandMatrix& b) { return a.diags_ == b.diags_; }
    friend bool operator!=(const BandMatrix& a, const BandMatrix& b) { return !(a == b); }

    /// Entrywise reflection per the InvolutionSpec table.
    BandMatrix involution(const InvolutionSpec& spec) const;
    bool is_anti_fixed(const InvolutionSpec& spec) const;

    BandClassification classify() const;

    /// Symmetric truncation (a[i,j])_{-n<=i,j<=n}.
    DenseMat truncate(long long n) const;
    /// Nonzero truncation entries as (i, j, value) triplets, row-major.
    std::vector<std::tuple<long long, long long, Rat>> truncate_sparse(long long n) const;

    void set_diagonal(long long offset, QuasiPolySeq seq); // drops zero seqs

private:
    std::map<long long, QuasiPolySeq> diags_;
};

BandMatrix linear_combine(const std::vector<std::pair<Rat, BandMatrix>>& terms);

inline BandMatrix bracket(const BandMatrix& x, const BandMatrix& y) { return x * y - y * x; }

} // namespace gj

#endif
