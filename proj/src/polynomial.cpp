#include "jackkerov/polynomial.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

#include "jackkerov/errors.hpp"

namespace jackkerov {

Rational parse_rational(std::string_view text)
{
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    for (char ch : s) {
        if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '+' || ch == '/'))
            throw std::invalid_argument("malformed rational literal: " + s);
    }
    if (s.front() == '+') s.erase(s.begin());
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal: " + std::string(text));
    if (q.get_den() == 0) throw DivisionByZero();
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

namespace {

const Rational kZero(0);

using IntPoly = std::vector<Integer>;

IntPoly primitive_integer(const std::vector<Rational>& c)
{
    Integer den = 1;
    for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    IntPoly out(c.size());
    Integer content = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        out[i] = c[i].get_num() * (den / c[i].get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), out[i].get_mpz_t());
    }
    if (content != 0 && content != 1)
        for (auto& z : out) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
    return out;
}

void make_primitive(IntPoly& p)
{
    Integer content = 0;
    for (const auto& z : p) {
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
        if (content == 1) return;
    }
    if (content == 0) return;
    for (auto& z : p) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
}

void trim_int(IntPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Degree of gcd(a, b) over F_p, or -1 when p divides a leading coefficient.
int modular_gcd_degree(const IntPoly& a, const IntPoly& b, std::uint64_t p)
{
    auto reduce = [p](const IntPoly& src) {
        std::vector<std::uint64_t> out(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) out[i] = mpz_fdiv_ui(src[i].get_mpz_t(), p);
        return out;
    };
    auto x = reduce(a);
    auto y = reduce(b);
    if (x.back() == 0 || y.back() == 0) return -1;
    auto pow_mod = [p](std::uint64_t base, std::uint64_t e) {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = r * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r;
    };
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        std::uint64_t inv = pow_mod(y.back(), p - 2);
        while (x.size() >= y.size()) {
            std::uint64_t f = x.back() * inv % p;
            std::size_t shift = x.size() - y.size();
            for (std::size_t i = 0; i < y.size(); ++i) x[i + shift] = (x[i + shift] + p - f * y[i] % p) % p;
            trim(x);
            if (x.empty()) break;
        }
        std::swap(x, y);
    }
    return static_cast<int>(x.size()) - 1;
}

IntPoly pseudo_remainder(IntPoly r, const IntPoly& b)
{
    const Integer& lb = b.back();
    const std::size_t db = b.size() - 1;
    Integer lr;
    while (!r.empty() && r.size() - 1 >= db) {
        lr = r.back();
        std::size_t shift = r.size() - 1 - db;
        for (auto& z : r) z *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= lr * b[i];
        trim_int(r);
    }
    return r;
}

IntPoly primitive_prs_gcd(IntPoly a, IntPoly b)
{
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        IntPoly r = pseudo_remainder(a, b);
        make_primitive(r);
        a = std::move(b);
        b = std::move(r);
        if (!b.empty() && b.size() == 1) return IntPoly{Integer(1)};
    }
    return a;
}

}  // namespace

Polynomial::Polynomial(long c)
{
    if (c != 0) c_.emplace_back(c);
}

Polynomial::Polynomial(const Rational& c)
{
    if (c != 0) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs))
{
    for (auto& q : c_) q.canonicalize();
    trim();
}

Polynomial Polynomial::monomial(const Rational& c, int degree)
{
    if (degree < 0) throw std::invalid_argument("negative monomial degree");
    Polynomial p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

void Polynomial::trim()
{
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool Polynomial::is_monomial() const
{
    if (c_.empty()) return false;
    for (std::size_t i = 0; i + 1 < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

int Polynomial::valuation() const
{
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return 0;
}

const Rational& Polynomial::coefficient(int i) const
{
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    Polynomial p;
    if (a.is_zero() || b.is_zero()) return p;
    p.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
    Rational tmp;
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].get_mpq_t(), b.c_[j].get_mpq_t());
            p.c_[i + j] += tmp;
        }
    }
    p.trim();
    return p;
}

Polynomial& Polynomial::operator*=(const Polynomial& o)
{
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s)
{
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& q : p.c_) q = -q;
    return p;
}

Polynomial Polynomial::shifted(int k) const
{
    if (is_zero() || k == 0) return *this;
    Polynomial p;
    if (k > 0) {
        p.c_.assign(static_cast<std::size_t>(k), Rational(0));
        p.c_.insert(p.c_.end(), c_.begin(), c_.end());
        return p;
    }
    if (valuation() < -k) throw std::domain_error("shift would create negative powers");
    p.c_.assign(c_.begin() + (-k), c_.end());
    return p;
}

Polynomial Polynomial::monic() const
{
    if (is_zero() || leading() == 1) return *this;
    Polynomial p = *this;
    Rational inv = 1 / leading();
    p *= inv;
    return p;
}

Polynomial Polynomial::substitute_square() const
{
    Polynomial p;
    if (is_zero()) return p;
    p.c_.assign(2 * c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) p.c_[2 * i] = c_[i];
    return p;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r)
{
    if (b.is_zero()) throw DivisionByZero();
    r = a;
    q = Polynomial();
    if (a.degree() < b.degree()) return;
    q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rational(0));
    Rational inv = 1 / b.leading();
    Rational f, tmp;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int shift = r.degree() - b.degree();
        f = r.leading() * inv;
        q.c_[static_cast<std::size_t>(shift)] = f;
        for (std::size_t i = 0; i < b.c_.size(); ++i) {
            mpq_mul(tmp.get_mpq_t(), f.get_mpq_t(), b.c_[i].get_mpq_t());
            r.c_[i + static_cast<std::size_t>(shift)] -= tmp;
        }
        r.trim();
    }
    q.trim();
}

Polynomial Polynomial::exact_div(const Polynomial& b) const
{
    if (b.is_constant()) {
        if (b.is_zero()) throw DivisionByZero();
        Polynomial p = *this;
        p *= Rational(1 / b.c_[0]);
        return p;
    }
    Polynomial q, r;
    divmod(*this, b, q, r);
    if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
    return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    const int va = a.valuation();
    const int vb = b.valuation();
    const int v = std::min(va, vb);
    Polynomial x = a.shifted(-va);
    Polynomial y = b.shifted(-vb);
    if (x.is_constant() || y.is_constant()) return Polynomial::monomial(Rational(1), v);

    IntPoly ix = primitive_integer(x.coefficients());
    IntPoly iy = primitive_integer(y.coefficients());
    static constexpr std::array<std::uint64_t, 3> kPrimes{2147483647ULL, 2147483629ULL, 2147483587ULL};
    for (auto p : kPrimes) {
        int d = modular_gcd_degree(ix, iy, p);
        if (d == 0) return Polynomial::monomial(Rational(1), v);
        if (d > 0) break;
    }
    IntPoly g = primitive_prs_gcd(std::move(ix), std::move(iy));
    std::vector<Rational> coeffs(g.begin(), g.end());
    return Polynomial(std::move(coeffs)).monic().shifted(v);
}

Rational Polynomial::evaluate(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double Polynomial::evaluate(double x) const
{
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
    return acc;
}

std::string Polynomial::to_string(std::string_view var) const
{
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& q = c_[i];
        if (q == 0) continue;
        Rational mag = abs(q);
        if (first) {
            if (q < 0) out += "-";
        } else {
            out += q < 0 ? " - " : " + ";
        }
        first = false;
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (mag != 1) out += mag.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace jackkerov
