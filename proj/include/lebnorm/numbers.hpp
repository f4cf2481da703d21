#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lebnorm {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational number, kept in lowest terms with positive denominator.
/// All arithmetic is exact; division by zero throws std::domain_error.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit so integer literals mix into expressions
    Rational(const Int& v) : q_(v) {}
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "p" or "p/q" with an optional leading minus on the numerator.
    static Rational parse(std::string_view s);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }
    const mpq_class& mpq() const { return q_; }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }

    /// Serializes as "p" when the denominator is 1, else "p/q".
    std::string str() const { return q_.get_str(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational x, const Rational& y) { return x += y; }
    friend Rational operator-(Rational x, const Rational& y) { return x -= y; }
    friend Rational operator*(Rational x, const Rational& y) { return x *= y; }
    friend Rational operator/(Rational x, const Rational& y) { return x /= y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return mpq_equal(x.q_.get_mpq_t(), y.q_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const int c = mpq_cmp(x.q_.get_mpq_t(), y.q_.get_mpq_t());
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    mpq_class q_;
};

Rational abs(const Rational& r);

/// Nearest double of an exact rational (round to nearest, ties to even).
double to_double(const Rational& r);

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element a + b*sqrt(3) of the ring Z[sqrt(3)].
struct QuadInt {
    Int a;
    Int b;

    friend bool operator==(const QuadInt&, const QuadInt&) = default;
};

/// (a+b√3)(c+d√3) = (ac+3bd) + (ad+bc)√3, exactly.
QuadInt quad_mul(const QuadInt& x, const QuadInt& y);

/// k-th power by repeated squaring; k must be >= 0.
QuadInt quad_pow(const QuadInt& x, std::int64_t k);

QuadInt quad_conj(const QuadInt& x);

/// Ring norm a^2 - 3 b^2; multiplicative, and 1 on every power of lambda.
Int quad_norm(const QuadInt& x);

/// The unit lambda = 2 + sqrt(3). Its inverse is the conjugate 2 - sqrt(3).
inline QuadInt quad_lambda() { return QuadInt{2, 1}; }

std::ostream& operator<<(std::ostream& os, const QuadInt& x);

}  // namespace lebnorm
