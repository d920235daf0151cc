#include "gj/poly.hpp"

#include <sstream>

namespace gj {

Poly::Poly(const Rat& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Poly Poly::from_coeffs(std::vector<Rat> coeffs) {
    Poly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

Poly Poly::x() {
    Poly p;
    p.c_ = {Rat(0), Rat(1)};
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
    return Poly::from_coeffs(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly::from_coeffs(std::move(c));
}

Poly Poly::scaled(const Rat& s) const {
    if (s.is_zero()) return Poly();
    Poly r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

Poly Poly::compose_affine(const Rat& alpha, const Rat& beta) const {
    // Horner over the linear polynomial alpha*x + beta
    Poly lin = Poly::from_coeffs({beta, alpha});
    Poly acc;
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lin + Poly(c_[k]);
    return acc;
}

Poly Poly::divexact(const Poly& d) const {
    if (d.is_zero()) throw internal_error("polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < d.degree()) throw internal_error("inexact polynomial division");
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(static_cast<std::size_t>(degree() - d.degree()) + 1, Rat(0));
    const Rat lead = d.c_.back();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rat q = rem[k + d.c_.size() - 1] / lead;
        quo[k] = q;
        if (!q.is_zero())
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem[k + i] -= q * d.c_[i];
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw internal_error("inexact polynomial division");
    return Poly::from_coeffs(std::move(quo));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k].is_zero()) continue;
        if (os.tellp() > 0) os << " + ";
        os << c_[k].str();
        if (k >= 1) os << "*x";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

} // namespace gj
