#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace jackkerov {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense univariate polynomial with rational coefficients, stored by
/// increasing degree. The zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(long c);  // NOLINT(google-explicit-constructor)
    Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial monomial(const Rational& c, int degree);
    static Polynomial variable() { return monomial(Rational(1), 1); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    /// True for c * x^k.
    bool is_monomial() const;
    /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
    int valuation() const;

    const Rational& coefficient(int i) const;
    const Rational& leading() const { return c_.back(); }
    const std::vector<Rational>& coefficients() const { return c_; }

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& s);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    /// Multiplies by x^k; for k < 0 the valuation must be at least -k.
    Polynomial shifted(int k) const;
    Polynomial monic() const;
    /// p(x) -> p(x^2).
    Polynomial substitute_square() const;
    /// Quotient and remainder of Euclidean division; throws on zero divisor.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
    /// Division known to be exact.
    Polynomial exact_div(const Polynomial& b) const;

    /// Monic greatest common divisor (zero only when both inputs are zero).
    friend Polynomial gcd(const Polynomial& a, const Polynomial& b);

    Rational evaluate(const Rational& x) const;
    double evaluate(double x) const;

    /// Ascending-order rendering, e.g. "1 - 2*t + t^3".
    std::string to_string(std::string_view var = "t") const;

private:
    void trim();
    std::vector<Rational> c_;
};

}  // namespace jackkerov
