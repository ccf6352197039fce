#include "doctest.h"

#include "jackkerov/errors.hpp"
#include "jackkerov/field.hpp"
#include "jackkerov/linsolve.hpp"

using namespace jackkerov;

namespace {
FieldElement F(const char* s) { return parse_field_element(s); }
}

TEST_CASE("polynomial arithmetic and rendering")
{
    const Polynomial x = Polynomial::variable();
    const Polynomial p = (x + Polynomial(1)) * (x - Polynomial(1));
    CHECK(p.to_string("t") == "-1 + t^2");
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == -1);
    Polynomial q, r;
    Polynomial::divmod(p, x - Polynomial(1), q, r);
    CHECK(q == x + Polynomial(1));
    CHECK(r.is_zero());
    CHECK(gcd(p, x * x - x) == x - Polynomial(1));
    CHECK(Polynomial(std::vector<Rational>{0, Rational(1, 2)}).to_string("t") == "1/2*t");
    CHECK(p.substitute_square().to_string("t") == "-1 + t^4");
}

TEST_CASE("field arithmetic examples")
{
    const FieldElement t = FieldElement::t();
    CHECK(t * t == F("t^2"));
    CHECK((FieldElement(1L) - t * t) / t == F("(1 - t^2)/t"));
    CHECK((FieldElement(1L) - t * t).to_string() == "1 - t^2");
    CHECK(((FieldElement(1L) - t * t) / t).to_string() == "(1 - t^2)/t");
    const FieldElement g = (t * t - FieldElement(1L)) / t;
    CHECK((g - g).is_zero());
    CHECK(FieldElement::gamma() == -g);
    CHECK_THROWS_AS(t / FieldElement(), DivisionByZero);
}

TEST_CASE("field elements are kept reduced")
{
    const FieldElement t = FieldElement::t();
    const FieldElement a = (t * t - FieldElement(1L)) / (t - FieldElement(1L));
    CHECK(a == t + FieldElement(1L));
    CHECK(a.is_polynomial());
    CHECK(FieldElement::t_power(-3).is_laurent());
    CHECK(FieldElement::t_power(-3) * FieldElement::t_power(3) == FieldElement(1L));
    CHECK(F("(2*t + 2)/(4*t^2 - 4)") == F("1/(2*t - 2)"));
    CHECK(F("t").evaluate(Rational(3)) == 3);
    CHECK(F("1/t").pow(-2) == F("t^2"));
}

TEST_CASE("to_gamma examples")
{
    const auto one = to_gamma(FieldElement(1L));
    REQUIRE(one);
    CHECK(*one == GammaPolynomial(1));
    const auto g = to_gamma(F("1/t - t"));
    REQUIRE(g);
    CHECK(*g == GammaPolynomial::gamma_power(1));
    CHECK(g->to_string() == "g");
    CHECK_FALSE(to_gamma(FieldElement::t()));
    CHECK_FALSE(to_gamma(F("1/(1 + t^2)")));
    const auto q = to_gamma(F("1 + 2*(1 - t^2)^2/t^2"));
    REQUIRE(q);
    CHECK(q->to_string() == "1 + 2*g^2");
}

TEST_CASE("solve_exact examples")
{
    const FieldElement t = FieldElement::t();
    Matrix<FieldElement> id{{1L, 0L}, {0L, 1L}};
    auto s = solve_exact(id, {1L, t});
    CHECK(s.x[0] == FieldElement(1L));
    CHECK(s.x[1] == t);

    Matrix<FieldElement> dup{{1L, 0L}, {1L, 0L}, {0L, 1L}};
    s = solve_exact(dup, {1L, 1L, t});
    CHECK(s.rank == 2);
    CHECK(s.x[1] == t);

    Matrix<FieldElement> col{{1L}, {1L}};
    CHECK_THROWS_AS(solve_exact(col, {1L, 2L}), Inconsistent);
    Matrix<FieldElement> deficient{{1L, 1L}, {2L, 2L}};
    CHECK_THROWS_AS(solve_exact(deficient, {1L, 2L}), RankDeficient);
}

TEST_CASE("inconsistent witness row and rational inverse")
{
    Matrix<FieldElement> a{{1L}, {1L}, {1L}};
    try {
        solve_exact(a, {1L, 1L, 5L});
        FAIL("expected Inconsistent");
    } catch (const Inconsistent& e) {
        CHECK(e.row == 2);
    }
    Matrix<Rational> m{{2, 1}, {1, 1}};
    const auto inv = inverse(m);
    CHECK(inv(0, 0) == 1);
    CHECK(inv(0, 1) == -1);
    CHECK(inv(1, 1) == 2);
}

TEST_CASE("parser and renderer agree")
{
    for (const char* s : {"t", "1 - t^2", "(1 - t^2)/t", "-3/2*t^3", "(2 + t^2)/(1 + t^2)"})
        CHECK(F(s).to_string() == s);
    CHECK_THROWS(F("t^"));
    CHECK_THROWS(F("(t"));
    CHECK(F("g") == FieldElement::gamma());
}
