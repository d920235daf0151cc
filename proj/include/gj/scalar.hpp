#ifndef GJ_SCALAR_HPP
#define GJ_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "gj/errors.hpp"

namespace gj {

/// Exact rational scalar. Always canonical: reduced fraction, positive
/// denominator. Backed by GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(long long n) : v_(static_cast<long>(n)) {}
    Rat(int n) : v_(n) {}
    Rat(long long num, long long den);
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    explicit Rat(const mpz_class& n) : v_(n) {}

    /// Parses "p", "-p", "p/q" (reduced or not). Rejects anything else.
    static Rat parse(const std::string& s);

    /// Canonical text form: "p" when integral, "p/q" otherwise.
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    Rat abs() const { return Rat(mpq_class(::abs(v_))); }

    /// b^e for integer e (e < 0 requires b != 0).
    static Rat pow(const Rat& base, long long e);

private:
    mpq_class v_;
};

namespace detail {

/// Representative of i mod m in {0, ..., m-1}; m > 0.
inline long long floor_mod(long long i, long long m) {
    long long r = i % m;
    return r < 0 ? r + m : r;
}

/// floor(a / b) for b > 0.
inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// ceil(a / b) for b > 0.
inline long long ceil_div(long long a, long long b) {
    return -floor_div(-a, b);
}

long long gcd_ll(long long a, long long b);
long long lcm_ll(long long a, long long b);

} // namespace detail

} // namespace gj

#endif
