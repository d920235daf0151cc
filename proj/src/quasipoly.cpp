#include "gj/quasipoly.hpp"

#include <algorithm>

namespace gj {

using detail::ceil_div;
using detail::floor_div;
using detail::floor_mod;
using detail::lcm_ll;

// ---------------------------------------------------------------- tails

QuasiPolyTail QuasiPolyTail::constant(const Rat& c) {
    QuasiPolyTail t;
    t.polys_[0] = Poly(c);
    return t;
}

QuasiPolyTail QuasiPolyTail::polynomial(const Poly& p) {
    QuasiPolyTail t;
    t.polys_[0] = p;
    return t;
}

QuasiPolyTail QuasiPolyTail::make(std::vector<Poly> polys) {
    if (polys.empty()) throw internal_error("tail needs at least one poly");
    QuasiPolyTail t;
    t.period_ = static_cast<long long>(polys.size());
    t.polys_ = std::move(polys);
    t.minimize();
    return t;
}

void QuasiPolyTail::minimize() {
    for (long long d = 1; d < period_; ++d) {
        if (period_ % d != 0) continue;
        bool ok = true;
        for (long long r = d; r < period_ && ok; ++r)
            if (polys_[static_cast<std::size_t>(r)] != polys_[static_cast<std::size_t>(r % d)]) ok = false;
        if (ok) {
            polys_.resize(static_cast<std::size_t>(d));
            period_ = d;
            return;
        }
    }
}

bool QuasiPolyTail::is_zero() const {
    return period_ == 1 && polys_[0].is_zero();
}

bool QuasiPolyTail::is_constant() const {
    for (const auto& p : polys_)
        if (p.degree() > 0) return false;
    return true;
}

QuasiPolyTail QuasiPolyTail::scaled(const Rat& c) const {
    if (c.is_zero()) return zero();
    std::vector<Poly> ps;
    ps.reserve(polys_.size());
    for (const auto& p : polys_) ps.push_back(p.scaled(c));
    return make(std::move(ps));
}

QuasiPolyTail QuasiPolyTail::arg_shift(long long s) const {
    std::vector<Poly> ps(polys_.size());
    for (long long r = 0; r < period_; ++r)
        ps[static_cast<std::size_t>(r)] = poly_at(r + s).shift_arg(s);
    return make(std::move(ps));
}

QuasiPolyTail QuasiPolyTail::arg_reflect(long long c) const {
    std::vector<Poly> ps(polys_.size());
    for (long long r = 0; r < period_; ++r)
        ps[static_cast<std::size_t>(r)] = poly_at(c - r).compose_affine(Rat(-1), Rat(c));
    return make(std::move(ps));
}

QuasiPolyTail QuasiPolyTail::decimate(long long n, long long c) const {
    if (n < 1) throw internal_error("decimate needs n >= 1");
    long long m2 = period_ / detail::gcd_ll(period_, n);
    std::vector<Poly> ps(static_cast<std::size_t>(m2));
    for (long long r = 0; r < m2; ++r)
        ps[static_cast<std::size_t>(r)] = poly_at(n * r + c).compose_affine(Rat(n), Rat(c));
    return make(std::move(ps));
}

QuasiPolyTail QuasiPolyTail::stretch(long long n, long long i0) const {
    if (n < 1 || i0 < 0 || i0 >= n) throw internal_error("stretch needs 0 <= i0 < n");
    std::vector<Poly> ps(static_cast<std::size_t>(n * period_));
    for (long long rho = 0; rho < n * period_; ++rho) {
        if (floor_mod(rho - i0, n) != 0) continue; // off-class entries stay zero
        long long k = floor_div(rho - i0, n);
        // q(x) = p((x - i0)/n) evaluates to t(k) on the class x = i0 + n*k
        ps[static_cast<std::size_t>(rho)] =
            poly_at(k).compose_affine(Rat(1, n), Rat(-i0, n));
    }
    return make(std::move(ps));
}

QuasiPolyTail operator+(const QuasiPolyTail& a, const QuasiPolyTail& b) {
    long long m = lcm_ll(a.period_, b.period_);
    std::vector<Poly> ps(static_cast<std::size_t>(m));
    for (long long r = 0; r < m; ++r) ps[static_cast<std::size_t>(r)] = a.poly_at(r) + b.poly_at(r);
    return QuasiPolyTail::make(std::move(ps));
}

QuasiPolyTail operator*(const QuasiPolyTail& a, const QuasiPolyTail& b) {
    long long m = lcm_ll(a.period_, b.period_);
    std::vector<Poly> ps(static_cast<std::size_t>(m));
    for (long long r = 0; r < m; ++r) ps[static_cast<std::size_t>(r)] = a.poly_at(r) * b.poly_at(r);
    return QuasiPolyTail::make(std::move(ps));
}

// ------------------------------------------------------------- sequences

QuasiPolySeq QuasiPolySeq::make(QuasiPolyTail left, QuasiPolyTail right, long long lo,
                                std::vector<Rat> window) {
    QuasiPolySeq s;
    s.left_ = std::move(left);
    s.right_ = std::move(right);
    s.lo_ = lo;
    s.window_ = std::move(window);
    s.normalize();
    return s;
}

QuasiPolySeq QuasiPolySeq::constant(const Rat& c) {
    return make(QuasiPolyTail::constant(c), QuasiPolyTail::constant(c), 0, {});
}

QuasiPolySeq QuasiPolySeq::polynomial(const Poly& p) {
    return make(QuasiPolyTail::polynomial(p), QuasiPolyTail::polynomial(p), 0, {});
}

QuasiPolySeq QuasiPolySeq::periodic_indicator(long long m, long long r, const Rat& c) {
    if (m < 1) throw internal_error("periodic_indicator needs m >= 1");
    std::vector<Poly> ps(static_cast<std::size_t>(m));
    ps[static_cast<std::size_t>(floor_mod(r, m))] = Poly(c);
    QuasiPolyTail t = QuasiPolyTail::make(std::move(ps));
    return make(t, t, 0, {});
}

QuasiPolySeq QuasiPolySeq::window_only(long long lo, std::vector<Rat> values) {
    return make(QuasiPolyTail::zero(), QuasiPolyTail::zero(), lo, std::move(values));
}

Rat QuasiPolySeq::at(long long i) const {
    if (i < lo_) return left_.eval(i);
    if (i > hi()) return right_.eval(i);
    return window_[static_cast<std::size_t>(i - lo_)];
}

bool QuasiPolySeq::is_zero() const {
    return window_.empty() && left_.is_zero() && right_.is_zero();
}

bool QuasiPolySeq::purely_periodic() const {
    return window_.empty() && left_ == right_ && left_.is_constant();
}

void QuasiPolySeq::normalize() {
    // shrink the window onto the tails
    while (!window_.empty() && window_.front() == left_.eval(lo_)) {
        window_.erase(window_.begin());
        ++lo_;
    }
    while (!window_.empty() && window_.back() == right_.eval(hi())) window_.pop_back();
    if (!window_.empty()) return;

    if (left_ == right_) {
        lo_ = 0;
        return;
    }
    // minimal boundary: slide left while both tails agree just below it.
    // Distinct canonical tails disagree somewhere in every lower ray, so
    // this terminates; the guard only trips on broken invariants.
    long long steps = 0;
    while (left_.eval(lo_ - 1) == right_.eval(lo_ - 1)) {
        --lo_;
        if (++steps > 2'000'000) throw internal_error("empty-window boundary slide did not terminate");
    }
}

QuasiPolySeq QuasiPolySeq::scaled(const Rat& c) const {
    if (c.is_zero()) return zero();
    std::vector<Rat> w = window_;
    for (auto& v : w) v *= c;
    return make(left_.scaled(c), right_.scaled(c), lo_, std::move(w));
}

QuasiPolySeq QuasiPolySeq::shifted(long long k) const {
    return make(left_.arg_shift(k), right_.arg_shift(k), lo_ - k, window_);
}

QuasiPolySeq QuasiPolySeq::reflected(long long c) const {
    std::vector<Rat> w(window_.rbegin(), window_.rend());
    return make(right_.arg_reflect(c), left_.arg_reflect(c), c - hi(), std::move(w));
}

QuasiPolySeq QuasiPolySeq::restrict_ge(long long K) const {
    if (K > hi()) return make(QuasiPolyTail::zero(), right_, K, {});
    std::vector<Rat> w;
    w.reserve(static_cast<std::size_t>(hi() - K + 1));
    for (long long i = K; i <= hi(); ++i) w.push_back(at(i));
    return make(QuasiPolyTail::zero(), right_, K, std::move(w));
}

QuasiPolySeq QuasiPolySeq::decimate(long long n, long long c) const {
    long long new_lo = ceil_div(lo_ - c, n);
    long long new_hi = floor_div(hi() - c, n);
    std::vector<Rat> w;
    for (long long k = new_lo; k <= new_hi; ++k) w.push_back(at(n * k + c));
    return make(left_.decimate(n, c), right_.decimate(n, c), new_lo, std::move(w));
}

QuasiPolySeq QuasiPolySeq::stretch(long long n, long long i0) const {
    std::vector<Rat> w;
    if (!window_.empty()) {
        w.assign(static_cast<std::size_t>(n * (hi() - lo_) + 1), Rat(0));
        for (long long k = lo_; k <= hi(); ++k)
            w[static_cast<std::size_t>(n * (k - lo_))] = window_[static_cast<std::size_t>(k - lo_)];
    }
    return make(left_.stretch(n, i0), right_.stretch(n, i0), i0 + n * lo_, std::move(w));
}

namespace {

QuasiPolySeq seq_binop(const QuasiPolySeq& a, const QuasiPolySeq& b, bool multiply) {
    long long lo = std::min(a.lo(), b.lo());
    long long hi = std::max(a.hi(), b.hi());
    std::vector<Rat> w;
    w.reserve(static_cast<std::size_t>(std::max<long long>(0, hi - lo + 1)));
    for (long long i = lo; i <= hi; ++i)
        w.push_back(multiply ? a.at(i) * b.at(i) : a.at(i) + b.at(i));
    QuasiPolyTail l = multiply ? a.left() * b.left() : a.left() + b.left();
    QuasiPolyTail r = multiply ? a.right() * b.right() : a.right() + b.right();
    return QuasiPolySeq::make(std::move(l), std::move(r), lo, std::move(w));
}

} // namespace

QuasiPolySeq operator+(const QuasiPolySeq& a, const QuasiPolySeq& b) { return seq_binop(a, b, false); }
QuasiPolySeq operator*(const QuasiPolySeq& a, const QuasiPolySeq& b) { return seq_binop(a, b, true); }

} // namespace gj
