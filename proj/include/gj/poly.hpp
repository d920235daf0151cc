#ifndef GJ_POLY_HPP
#define GJ_POLY_HPP

#include <string>
#include <vector>

#include "gj/scalar.hpp"

namespace gj {

/// Univariate polynomial over Rat, coefficients ascending.
/// Canonical: no trailing zero coefficients; the zero polynomial has an
/// empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rat& constant);
    static Poly from_coeffs(std::vector<Rat> coeffs);
    static Poly x(); // the monomial t

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long long degree() const { return static_cast<long long>(c_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }

    Rat eval(const Rat& x) const;
    Rat eval_at(long long i) const { return eval(Rat(i)); }

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly scaled(const Rat& c) const;

    /// p(alpha*x + beta)
    Poly compose_affine(const Rat& alpha, const Rat& beta) const;
    /// p(x + s)
    Poly shift_arg(long long s) const { return compose_affine(Rat(1), Rat(s)); }

    /// Exact quotient; throws internal_error when the division leaves a
    /// remainder or the divisor is zero.
    Poly divexact(const Poly& d) const;

    std::string str() const; // debugging aid

private:
    std::vector<Rat> c_;
    void trim();
};

} // namespace gj

#endif
