#ifndef GJ_QUASIPOLY_HPP
#define GJ_QUASIPOLY_HPP

#include <vector>

#include "gj/poly.hpp"

namespace gj {

/// Eventually-periodic family of polynomials: value(i) = polys[i mod m](i)
/// with the representative of i mod m taken in {0,...,m-1}.
/// Canonical: every poly trimmed, period minimal.
class QuasiPolyTail {
public:
    QuasiPolyTail() : period_(1), polys_(1) {}
    static QuasiPolyTail zero() { return QuasiPolyTail(); }
    static QuasiPolyTail constant(const Rat& c);
    static QuasiPolyTail polynomial(const Poly& p);
    /// period = polys.size(); canonicalized on construction.
    static QuasiPolyTail make(std::vector<Poly> polys);

    long long period() const { return period_; }
    const std::vector<Poly>& polys() const { return polys_; }
    const Poly& poly_at(long long i) const { return polys_[static_cast<std::size_t>(detail::floor_mod(i, period_))]; }

    Rat eval(long long i) const { return poly_at(i).eval_at(i); }
    bool is_zero() const;
    /// All pieces constant (degree <= 0).
    bool is_constant() const;

    QuasiPolyTail scaled(const Rat& c) const;
    /// t'(i) = t(i + s)
    QuasiPolyTail arg_shift(long long s) const;
    /// t'(i) = t(c - i)
    QuasiPolyTail arg_reflect(long long c) const;
    /// t'(k) = t(n*k + c), n >= 1
    QuasiPolyTail decimate(long long n, long long c) const;
    /// t'(i0 + n*k) = t(k), zero off the residue class; n >= 1, 0 <= i0 < n
    QuasiPolyTail stretch(long long n, long long i0) const;

    friend QuasiPolyTail operator+(const QuasiPolyTail& a, const QuasiPolyTail& b);
    friend QuasiPolyTail operator*(const QuasiPolyTail& a, const QuasiPolyTail& b);
    friend bool operator==(const QuasiPolyTail& a, const QuasiPolyTail& b) {
        return a.period_ == b.period_ && a.polys_ == b.polys_;
    }
    friend bool operator!=(const QuasiPolyTail& a, const QuasiPolyTail& b) { return !(a == b); }

private:
    long long period_;
    std::vector<Poly> polys_; // size == period_
    void minimize();
};

/// A sequence Z -> Q with quasi-polynomial behaviour at both ends and a
/// finite exception window: left tail for i < lo, explicit values on
/// [lo, hi], right tail for i > hi.
///
/// Canonical form: tails canonical; window minimal (first value differs
/// from the left tail, last from the right tail); when the window is
/// empty, lo = 0 if the tails agree everywhere, otherwise lo is minimal
/// among the boundary positions describing the same sequence. Canonical
/// forms are equal exactly when the sequences are equal pointwise.
class QuasiPolySeq {
public:
    QuasiPolySeq() = default; // zero sequence
    static QuasiPolySeq zero() { return QuasiPolySeq(); }
    static QuasiPolySeq make(QuasiPolyTail left, QuasiPolyTail right, long long lo,
                             std::vector<Rat> window);
    static QuasiPolySeq constant(const Rat& c);
    static QuasiPolySeq polynomial(const Poly& p);
    /// Periodic 0/1 indicator of the residue class r mod m, scaled by c.
    static QuasiPolySeq periodic_indicator(long long m, long long r, const Rat& c);
    /// Finitely supported values starting at index lo.
    static QuasiPolySeq window_only(long long lo, std::vector<Rat> values);

    const QuasiPolyTail& left() const { return left_; }
    const QuasiPolyTail& right() const { return right_; }
    long long lo() const { return lo_; }
    long long hi() const { return lo_ + static_cast<long long>(window_.size()) - 1; }
    const std::vector<Rat>& window() const { return window_; }

    Rat at(long long i) const;
    bool is_zero() const;
    bool finitely_supported() const { return left_.is_zero() && right_.is_zero(); }
    /// Empty window, equal constant tails: invariant under some shift.
    bool purely_periodic() const;

    QuasiPolySeq scaled(const Rat& c) const;
    /// s'(i) = s(i + k)
    QuasiPolySeq shifted(long long k) const;
    /// s'(i) = s(c - i)
    QuasiPolySeq reflected(long long c) const;
    /// s'(i) = s(i) for i >= K, 0 below.
    QuasiPolySeq restrict_ge(long long K) const;
    /// s'(k) = s(n*k + c)
    QuasiPolySeq decimate(long long n, long long c) const;
    /// s'(i0 + n*k) = s(k), zero elsewhere.
    QuasiPolySeq stretch(long long n, long long i0) const;

    friend QuasiPolySeq operator+(const QuasiPolySeq& a, const QuasiPolySeq& b);
    /// Pointwise product.
    friend QuasiPolySeq operator*(const QuasiPolySeq& a, const QuasiPolySeq& b);
    friend bool operator==(const QuasiPolySeq& a, const QuasiPolySeq& b) {
        return a.lo_ == b.lo_ && a.window_ == b.window_ && a.left_ == b.left_ && a.right_ == b.right_;
    }
    friend bool operator!=(const QuasiPolySeq& a, const QuasiPolySeq& b) { return !(a == b); }

private:
    QuasiPolyTail left_, right_;
    long long lo_ = 0;
    std::vector<Rat> window_;
    void normalize();
};

} // namespace gj

#endif
