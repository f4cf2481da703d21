#include "lebnorm/numbers.hpp"

#include <mpfr.h>

#include <ostream>
#include <stdexcept>

namespace lebnorm {

namespace {

mpq_class make_canonical(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) : q_(make_canonical(num, den)) {}

Rational::Rational(long num, long den) : q_(make_canonical(Int(num), Int(den))) {}

Rational Rational::parse(std::string_view s) {
    const std::string text(s);
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int(text));
    const Int num(text.substr(0, slash));
    const Int den(text.substr(slash + 1));
    return Rational(num, den);
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    q_ += o.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    q_ -= o.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    q_ *= o.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational abs(const Rational& r) {
    return r.sign() < 0 ? -r : r;
}

double to_double(const Rational& r) {
    // mpq_get_d truncates toward zero; go through MPFR for round-to-nearest.
    mpfr_t t;
    mpfr_init2(t, 53);
    mpfr_set_q(t, r.mpq().get_mpq_t(), MPFR_RNDN);
    const double d = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return d;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

QuadInt quad_mul(const QuadInt& x, const QuadInt& y) {
    return QuadInt{x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt quad_pow(const QuadInt& x, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("quad_pow: negative exponent");
    QuadInt result{1, 0};
    QuadInt base = x;
    while (k > 0) {
        if (k & 1) result = quad_mul(result, base);
        base = quad_mul(base, base);
        k >>= 1;
    }
    return result;
}

QuadInt quad_conj(const QuadInt& x) {
    return QuadInt{x.a, -x.b};
}

Int quad_norm(const QuadInt& x) {
    return x.a * x.a - 3 * x.b * x.b;
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
    return os << "(" << x.a.get_str() << ", " << x.b.get_str() << ")";
}

}  // namespace lebnorm
