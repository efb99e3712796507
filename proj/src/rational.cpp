#include "trirhombus/rational.hpp"

#include <algorithm>
#include <cctype>

namespace trirhombus {

namespace {

bool is_decimal(std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && s.front() == '-') s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den))) {}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text, bool strict) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    if (!is_decimal(num_text, true)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) return Rational(parse_integer(num_text));

    const auto den_text = text.substr(slash + 1);
    if (!is_decimal(den_text, false)) {
        throw ParseError("not a rational: '" + std::string(text) + "'");
    }
    const Integer num = parse_integer(num_text);
    const Integer den = parse_integer(den_text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    if (strict && (r.num() != num || r.den() != den)) {
        throw ParseError("rational not in lowest terms: '" + std::string(text) + "'");
    }
    return r;
}

std::string Rational::str() const {
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational& Rational::operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("division by zero");
    q_ /= rhs.q_;
    return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational reciprocal(const Rational& r) { return Rational(1) / r; }

Rational pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

bool is_rational_square(const Rational& r) {
    if (r.sign() < 0) return false;
    return mpz_perfect_square_p(r.num().get_mpz_t()) != 0 &&
           mpz_perfect_square_p(r.den().get_mpz_t()) != 0;
}

Rational rational_sqrt(const Rational& r) {
    if (!is_rational_square(r)) throw DomainError("not a rational square: " + r.str());
    return Rational(Integer(sqrt(r.num())), Integer(sqrt(r.den())));
}

Integer parse_integer(std::string_view text) {
    if (!is_decimal(text, true)) throw ParseError("not an integer: '" + std::string(text) + "'");
    return Integer(std::string(text), 10);
}

std::string to_string(const Integer& z) { return z.get_str(); }

}  // namespace trirhombus
