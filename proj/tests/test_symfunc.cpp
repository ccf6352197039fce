#include "doctest.h"

#include "jackkerov/symfunc.hpp"
#include "oracles.hpp"

using namespace jackkerov;

TEST_CASE("basis conversion examples")
{
    const SymFun p2 = SymFun::basis_element(Basis::p, {2});
    CHECK(convert(p2, Basis::m) == SymFun::basis_element(Basis::m, {2}));

    SymFun m11_in_p(Basis::p, 2);
    m11_in_p.add({1, 1}, FieldElement(Rational(1, 2)));
    m11_in_p.add({2}, FieldElement(Rational(-1, 2)));
    CHECK(convert(SymFun::basis_element(Basis::m, {1, 1}), Basis::p) == m11_in_p);

    SymFun h2_in_p(Basis::p, 2);
    h2_in_p.add({1, 1}, FieldElement(Rational(1, 2)));
    h2_in_p.add({2}, FieldElement(Rational(1, 2)));
    CHECK(convert(SymFun::basis_element(Basis::h, {2}), Basis::p) == h2_in_p);
    CHECK(convert(SymFun::basis_element(Basis::e, {2}), Basis::p).to_string() == "1/2*p[1,1] - 1/2*p[2]");
}

TEST_CASE("monomial to power-sum conversion evaluates correctly in enough variables")
{
    const std::vector<Rational> x{Rational(1, 2), 2, -3, Rational(5, 7), 1, -1};
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            const SymFun f = convert(SymFun::basis_element(Basis::m, lambda), Basis::p);
            Rational lhs = 0;
            for (const auto& [rho, c] : f.coeffs()) lhs += *c.as_rational() * oracle::power_sum_value(rho, x);
            CHECK(lhs == oracle::monomial_value(lambda, x));
        }
}

TEST_CASE("power-sum to monomial coefficients")
{
    CHECK(power_sum_monomial_coefficient({1, 1}, {2}) == 1);
    CHECK(power_sum_monomial_coefficient({1, 1}, {1, 1}) == 2);
    CHECK(power_sum_monomial_coefficient({2, 1, 1}, {2, 2}) == 2);
    CHECK(power_sum_monomial_coefficient({3}, {2, 1}) == 0);
}

TEST_CASE("hall inner product examples")
{
    const SymFun p2 = SymFun::basis_element(Basis::p, {2});
    const SymFun p11 = SymFun::basis_element(Basis::p, {1, 1});
    CHECK(hall_inner(p2, p2) == parse_field_element("2*t^2"));
    CHECK(hall_inner(p11, p2).is_zero());
    SymFun a = p11, b = p11;
    a.add({2}, FieldElement::t() * FieldElement::t());
    b.add({2}, FieldElement(-1L));
    CHECK(hall_inner(a, b).is_zero());
    CHECK_THROWS(hall_inner(p2, SymFun::basis_element(Basis::p, {3})));
}

TEST_CASE("symfun rendering and parsing of bases")
{
    SymFun f(Basis::p, 2);
    CHECK(f.to_string() == "0");
    f.add({1, 1}, FieldElement(1L));
    f.add({2}, FieldElement::t() * FieldElement::t());
    CHECK(f.to_string() == "p[1,1] + t^2*p[2]");
    CHECK(parse_basis("h") == Basis::h);
    CHECK(basis_letter(Basis::e) == 'e');
    CHECK_THROWS(parse_basis("x"));
    CHECK_THROWS(f.add({3}, FieldElement(1L)));
}
