#ifndef TRIRHOMBUS_RATIONAL_HPP
#define TRIRHOMBUS_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace trirhombus {

using Integer = mpz_class;

/// Raised when an operation is asked to leave its mathematical domain
/// (zero denominators, out-of-range parameters, off-curve points).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised by the text parsers on malformed input.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Arbitrary-precision fraction.
 *
 * The denominator is always positive and coprime to the numerator; every
 * constructor and arithmetic operator leaves the value in that form.
 */
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : q_(static_cast<long>(value)) {}
    Rational(const Integer& value) : q_(value) {}
    Rational(std::int64_t num, std::int64_t den);
    Rational(const Integer& num, const Integer& den);

    /// Accepts "n", "-n", "n/d" with d > 0. Non-canonical fractions such as
    /// "2/4" are rejected when `strict` is set, otherwise reduced.
    static Rational parse(std::string_view text, bool strict = false);

    Integer num() const { return q_.get_num(); }
    Integer den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Always "num/den", including for integers ("12/1").
    std::string str() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

Rational abs(const Rational& r);
Rational reciprocal(const Rational& r);
Rational pow(const Rational& base, unsigned exponent);

/// True when both numerator and denominator are perfect squares.
bool is_rational_square(const Rational& r);
/// Exact square root; throws DomainError unless is_rational_square(r).
Rational rational_sqrt(const Rational& r);

Integer parse_integer(std::string_view text);
std::string to_string(const Integer& z);

}  // namespace trirhombus

#endif  // TRIRHOMBUS_RATIONAL_HPP
