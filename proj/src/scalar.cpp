#include "gj/scalar.hpp"

#include <cctype>

namespace gj {

Rat::Rat(long long num, long long den) {
    if (den == 0) throw domain_error("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::parse(const std::string& s) {
    // strict "[-]digits[/digits]"
    std::size_t i = 0;
    auto digits = [&](std::size_t& pos) {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos > start;
    };
    if (i < s.size() && s[i] == '-') ++i;
    if (!digits(i)) throw schema_error("bad rational literal: '" + s + "'");
    if (i < s.size()) {
        if (s[i] != '/') throw schema_error("bad rational literal: '" + s + "'");
        ++i;
        if (!digits(i) || i != s.size()) throw schema_error("bad rational literal: '" + s + "'");
        std::size_t slash = s.find('/');
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw schema_error("bad rational literal (zero denominator): '" + s + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return Rat(q);
    }
    return Rat(mpq_class(mpz_class(s)));
}

std::string Rat::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::pow(const Rat& base, long long e) {
    if (e == 0) return Rat(1);
    bool inv = e < 0;
    unsigned long long k = inv ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    if (inv && base.is_zero()) throw domain_error("0 raised to a negative power");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class q(inv ? den : num, inv ? num : den);
    q.canonicalize();
    return Rat(q);
}

namespace detail {

long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long lcm_ll(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_ll(a, b) * b;
}

} // namespace detail

} // namespace gj
