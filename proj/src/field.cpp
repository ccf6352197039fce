#include "jackkerov/field.hpp"

#include <cctype>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace jackkerov {

FieldElement::FieldElement(const Polynomial& num, const Polynomial& den)
{
    if (den.is_zero()) throw DivisionByZero();
    if (num.is_zero()) {
        den_ = Polynomial(1L);
        return;
    }
    Polynomial g = gcd(num, den);
    if (g.is_one()) {
        num_ = num;
        den_ = den;
    } else {
        num_ = num.exact_div(g);
        den_ = den.exact_div(g);
    }
    normalize_den();
}

void FieldElement::normalize_den()
{
    if (den_.leading() == 1) return;
    Rational inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
}

FieldElement FieldElement::gamma()
{
    return FieldElement(Polynomial(std::vector<Rational>{1, 0, -1}), Polynomial::variable());
}

FieldElement FieldElement::t_power(int k)
{
    if (k >= 0) return FieldElement(Polynomial::monomial(1, k));
    return FieldElement(Polynomial(1L), Polynomial::monomial(1, -k), Unreduced{});
}

std::optional<Rational> FieldElement::as_rational() const
{
    if (!den_.is_one() || !num_.is_constant()) return std::nullopt;
    return num_.coefficient(0);
}

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = Polynomial(1L);
        } else if (!den_.is_one()) {
            Polynomial g = gcd(num_, den_);
            if (!g.is_one()) {
                num_ = num_.exact_div(g);
                den_ = den_.exact_div(g);
            }
        }
        return *this;
    }
    Polynomial g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = Polynomial(1L);
        return *this;
    }
    Polynomial b1 = den_.exact_div(g);
    Polynomial d1 = o.den_.exact_div(g);
    num_ = num_ * d1 + o.num_ * b1;
    if (num_.is_zero()) {
        den_ = Polynomial(1L);
        return *this;
    }
    den_ = b1 * o.den_;
    Polynomial g2 = gcd(num_, g);
    if (!g2.is_one()) {
        num_ = num_.exact_div(g2);
        den_ = den_.exact_div(g2);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    return *this += -o;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = FieldElement();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    Polynomial a = num_;
    Polynomial c = o.num_;
    Polynomial b = den_;
    Polynomial d = o.den_;
    if (!d.is_one()) {
        Polynomial g1 = gcd(a, d);
        if (!g1.is_one()) {
            a = a.exact_div(g1);
            d = d.exact_div(g1);
        }
    }
    if (!b.is_one()) {
        Polynomial g2 = gcd(c, b);
        if (!g2.is_one()) {
            c = c.exact_div(g2);
            b = b.exact_div(g2);
        }
    }
    num_ = a * c;
    den_ = b * d;
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    return *this *= o.inverse();
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    r.num_ = -r.num_;
    return r;
}

FieldElement FieldElement::inverse() const
{
    if (is_zero()) throw DivisionByZero();
    FieldElement r(den_, num_, Unreduced{});
    r.normalize_den();
    return r;
}

FieldElement FieldElement::pow(int e) const
{
    if (e < 0) return inverse().pow(-e);
    FieldElement result(1L);
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

FieldElement FieldElement::substitute_square() const
{
    return FieldElement(num_.substitute_square(), den_.substitute_square(), Unreduced{});
}

Rational FieldElement::evaluate(const Rational& t) const
{
    Rational d = den_.evaluate(t);
    if (d == 0) throw DivisionByZero();
    return num_.evaluate(t) / d;
}

double FieldElement::evaluate(double t) const
{
    return num_.evaluate(t) / den_.evaluate(t);
}

namespace {

bool single_term(const Polynomial& p)
{
    int n = 0;
    for (const auto& c : p.coefficients())
        if (c != 0) ++n;
    return n <= 1;
}

}  // namespace

std::string FieldElement::to_string() const
{
    if (den_.is_one()) return num_.to_string("t");
    std::string n = num_.to_string("t");
    std::string d = den_.to_string("t");
    if (!single_term(num_)) n = "(" + n + ")";
    if (!single_term(den_)) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class ExprParser {
public:
    explicit ExprParser(const std::string& s) : s_(s) {}

    FieldElement parse()
    {
        FieldElement v = expr();
        skip();
        if (pos_ != s_.size()) fail();
        return v;
    }

private:
    [[noreturn]] void fail() const { throw std::invalid_argument("cannot parse field element: " + s_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    FieldElement expr()
    {
        FieldElement v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    FieldElement term()
    {
        FieldElement v = factor();
        for (;;) {
            if (accept('*')) v *= factor();
            else if (accept('/')) v /= factor();
            else return v;
        }
    }

    FieldElement factor()
    {
        if (accept('-')) return -factor();
        FieldElement base = primary();
        if (accept('^')) {
            skip();
            bool neg = accept('-');
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail();
            int e = std::atoi(s_.substr(start, pos_ - start).c_str());
            return base.pow(neg ? -e : e);
        }
        return base;
    }

    FieldElement primary()
    {
        skip();
        if (accept('(')) {
            FieldElement v = expr();
            if (!accept(')')) fail();
            return v;
        }
        if (accept('t')) return FieldElement::t();
        if (accept('g')) return FieldElement::gamma();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail();
        return FieldElement(Rational(Integer(s_.substr(start, pos_ - start))));
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace

FieldElement parse_field_element(const std::string& text)
{
    return ExprParser(text).parse();
}

// ---------------------------------------------------------------------------
// GammaPolynomial

GammaPolynomial::GammaPolynomial(long c)
{
    if (c != 0) c_.emplace_back(c);
}

GammaPolynomial::GammaPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    trim();
}

GammaPolynomial GammaPolynomial::gamma_power(int j, const Rational& c)
{
    std::vector<Rational> v(static_cast<std::size_t>(j) + 1, Rational(0));
    v.back() = c;
    return GammaPolynomial(std::move(v));
}

void GammaPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& GammaPolynomial::coefficient(int j) const
{
    static const Rational zero(0);
    if (j < 0 || j >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(j)];
}

std::vector<int> GammaPolynomial::support() const
{
    std::vector<int> s;
    for (std::size_t j = 0; j < c_.size(); ++j)
        if (c_[j] != 0) s.push_back(static_cast<int>(j));
    return s;
}

GammaPolynomial& GammaPolynomial::operator+=(const GammaPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

GammaPolynomial& GammaPolynomial::operator-=(const GammaPolynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

GammaPolynomial operator*(const GammaPolynomial& a, const GammaPolynomial& b)
{
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    return GammaPolynomial(std::move(v));
}

GammaPolynomial operator*(GammaPolynomial a, const Rational& s)
{
    for (auto& q : a.c_) q *= s;
    a.trim();
    return a;
}

GammaPolynomial GammaPolynomial::operator-() const
{
    GammaPolynomial r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

FieldElement GammaPolynomial::to_field() const
{
    const FieldElement g = FieldElement::gamma();
    FieldElement acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + FieldElement(*it);
    return acc;
}

double GammaPolynomial::evaluate(double gamma) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * gamma + it->get_d();
    return acc;
}

std::string GammaPolynomial::to_string(std::string_view var) const
{
    return Polynomial(c_).to_string(var);
}

std::optional<GammaPolynomial> to_gamma(const FieldElement& c)
{
    if (c.is_zero()) return GammaPolynomial();
    if (!c.is_laurent()) return std::nullopt;
    // c = sum_e coeff[e] t^e with e = i - shift.
    const int shift = c.den().degree();
    std::map<int, Rational> laurent;
    const auto& nc = c.num().coefficients();
    for (std::size_t i = 0; i < nc.size(); ++i)
        if (nc[i] != 0) laurent[static_cast<int>(i) - shift] = nc[i];
    int top = 0;
    for (const auto& [e, q] : laurent) top = std::max(top, std::abs(e));

    // gamma^j contributes t^{-j} with coefficient 1 and nothing below it, so
    // peel off the lowest power first.
    std::vector<Rational> q(static_cast<std::size_t>(top) + 1, Rational(0));
    for (int j = top; j >= 0; --j) {
        auto it = laurent.find(-j);
        if (it == laurent.end() || it->second == 0) continue;
        Rational coef = it->second;
        q[static_cast<std::size_t>(j)] = coef;
        // subtract coef * sum_i binom(j,i) (-1)^i t^{2i-j}
        Integer binom = 1;
        for (int i = 0; i <= j; ++i) {
            Rational term = coef * Rational(binom);
            if (i % 2) term = -term;
            laurent[2 * i - j] -= term;
            binom = binom * (j - i) / (i + 1);
        }
    }
    for (const auto& [e, r] : laurent)
        if (r != 0) return std::nullopt;
    return GammaPolynomial(std::move(q));
}

}  // namespace jackkerov

namespace jackkerov {

namespace {

RenderedTerm term_from_polynomial(const Polynomial& p, std::string_view var, std::string monomial)
{
    RenderedTerm term;
    term.monomial = std::move(monomial);
    if (single_term(p) && !p.is_zero()) {
        const int deg = p.degree();
        const Rational& c = p.leading();
        term.negative = c < 0;
        term.magnitude = Polynomial::monomial(abs(c), deg).to_string(var);
        return term;
    }
    term.magnitude = p.to_string(var);
    term.atomic = false;
    return term;
}

}  // namespace

RenderedTerm make_term(const FieldElement& c, std::string monomial)
{
    if (c.is_polynomial()) return term_from_polynomial(c.num(), "t", std::move(monomial));
    RenderedTerm term;
    term.monomial = std::move(monomial);
    term.magnitude = c.to_string();
    term.atomic = false;
    return term;
}

RenderedTerm make_term(const GammaPolynomial& c, std::string monomial)
{
    return term_from_polynomial(Polynomial(c.coefficients()), "g", std::move(monomial));
}

std::string render_sum(const std::vector<RenderedTerm>& terms)
{
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& t = terms[i];
        if (i == 0) {
            if (t.negative) out += "-";
        } else {
            out += t.negative ? " - " : " + ";
        }
        if (t.monomial.empty()) {
            out += t.atomic ? t.magnitude : "(" + t.magnitude + ")";
        } else if (t.magnitude == "1") {
            out += t.monomial;
        } else {
            out += (t.atomic ? t.magnitude : "(" + t.magnitude + ")") + "*" + t.monomial;
        }
    }
    return out;
}

}  // namespace jackkerov
