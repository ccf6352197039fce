#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jackkerov/errors.hpp"
#include "jackkerov/polynomial.hpp"

namespace jackkerov {

/// Element of Q(t), t = sqrt(alpha), kept as num/den with den monic and
/// gcd(num, den) = 1.
class FieldElement {
public:
    FieldElement() : den_(1L) {}
    FieldElement(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    FieldElement(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    FieldElement(Polynomial p) : num_(std::move(p)), den_(1L) {}  // NOLINT(google-explicit-constructor)
    /// Reduces num/den; throws DivisionByZero when den is zero.
    FieldElement(const Polynomial& num, const Polynomial& den);

    static FieldElement t() { return FieldElement(Polynomial::variable()); }
    /// gamma = (1 - t^2) / t.
    static FieldElement gamma();
    /// t^k for any integer k.
    static FieldElement t_power(int k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    /// den is a power of t.
    bool is_laurent() const { return den_.is_monomial(); }
    /// Constant rational value, when the element is one.
    std::optional<Rational> as_rational() const;
    /// Total degree deg(num) + deg(den); used as a pivot-size heuristic.
    int weight() const { return num_.degree() + den_.degree(); }

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;
    FieldElement inverse() const;
    FieldElement pow(int e) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    /// f(t) -> f(t^2); lets callers compute in the variable alpha and lift to t.
    FieldElement substitute_square() const;
    /// Throws DivisionByZero if the denominator vanishes at t.
    Rational evaluate(const Rational& t) const;
    double evaluate(double t) const;

    /// "(1 - t^2)/t" style rendering; polynomials render without a denominator.
    std::string to_string() const;

private:
    struct Unreduced {};
    FieldElement(Polynomial num, Polynomial den, Unreduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize_den();

    Polynomial num_;
    Polynomial den_;
};

/// Parses rational constants, "t", and simple expressions such as "1/2", "t^2",
/// "3*t^2 - 1" or "(1 - t^2)/t".
FieldElement parse_field_element(const std::string& text);

/// Polynomial in gamma with rational coefficients, index j = coefficient of gamma^j.
class GammaPolynomial {
public:
    GammaPolynomial() = default;
    GammaPolynomial(long c);  // NOLINT(google-explicit-constructor)
    explicit GammaPolynomial(std::vector<Rational> coeffs);
    static GammaPolynomial gamma_power(int j, const Rational& c = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coefficient(int j) const;
    const std::vector<Rational>& coefficients() const { return c_; }
    /// Exponents j with a nonzero coefficient.
    std::vector<int> support() const;

    GammaPolynomial& operator+=(const GammaPolynomial& o);
    GammaPolynomial& operator-=(const GammaPolynomial& o);
    friend GammaPolynomial operator+(GammaPolynomial a, const GammaPolynomial& b) { return a += b; }
    friend GammaPolynomial operator-(GammaPolynomial a, const GammaPolynomial& b) { return a -= b; }
    friend GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b);
    friend GammaPolynomial operator*(GammaPolynomial a, const Rational& s);
    GammaPolynomial operator-() const;
    friend bool operator==(const GammaPolynomial& a, const GammaPolynomial& b) { return a.c_ == b.c_; }

    /// q((1 - t^2)/t) as an element of Q(t).
    FieldElement to_field() const;
    double evaluate(double gamma) const;
    /// "1 + 2*g^2".
    std::string to_string(std::string_view var = "g") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// One coefficient*monomial summand prepared for printing.
struct RenderedTerm {
    bool negative = false;
    std::string magnitude;  // "1" is elided
    bool atomic = true;     // false -> parenthesised
    std::string monomial;   // empty for a constant term
};
RenderedTerm make_term(const FieldElement& c, std::string monomial);
RenderedTerm make_term(const GammaPolynomial& c, std::string monomial);
/// "p[1,1] + t^2*p[2]", "R3 - (2 + g^2)*R2"; "0" for no terms.
std::string render_sum(const std::vector<RenderedTerm>& terms);

/// Returns q with q(gamma(t)) = c(t) identically, or nullopt when c is not a
/// polynomial in gamma.
std::optional<GammaPolynomial> to_gamma(const FieldElement& c);

}  // namespace jackkerov
