#include "doctest.h"

#include "jackkerov/errors.hpp"
#include "jackkerov/jack.hpp"
#include "oracles.hpp"

using namespace jackkerov;

TEST_CASE("small Jack polynomials")
{
    CHECK(jack({1}).in_p.to_string() == "p[1]");
    CHECK(jack({2}).in_p.to_string() == "p[1,1] + t^2*p[2]");
    CHECK(jack({1, 1}).in_p.to_string() == "p[1,1] - p[2]");
    CHECK(jack({1}).in_m.to_string() == "m[1]");
    CHECK(jack({2, 1}).in_m.to_string() == "6*m[1,1,1] + (2 + t^2)*m[2,1]");
    CHECK(jack(Partition()).in_p.to_string() == "1");
}

TEST_CASE("theta examples")
{
    CHECK(theta({2}, {2}) == parse_field_element("t^2"));
    CHECK(theta({2}, {1, 1}) == FieldElement(1L));
    CHECK(theta({1, 1}, {2}) == FieldElement(-1L));
    CHECK_THROWS_AS(theta({2}, {1}), std::invalid_argument);
}

TEST_CASE("ch examples")
{
    CHECK(ch({1}, {1}) == FieldElement(1L));
    CHECK(ch({2}, {2}) == parse_field_element("2*t"));
    CHECK(ch({2}, {1}).is_zero());
}

TEST_CASE("Jack polynomials at alpha = 1 are hook-scaled Schur functions")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const auto& rho : enumerate_partitions(n))
                CHECK(theta(lambda, rho).evaluate(Rational(1)) == oracle::theta_alpha_one(lambda, rho));
}

TEST_CASE("principal specialisation of J_lambda")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& lambda : enumerate_partitions(n))
            for (const Rational& t_value : {Rational(2), Rational(1, 3), Rational(5, 2)}) {
                const Rational alpha = t_value * t_value;
                for (int nvars : {1, 3, 8}) {
                    Rational lhs = 0;
                    for (const auto& [rho, c] : jack(lambda).in_p.coeffs()) {
                        Rational pw = 1;
                        for (int i = 0; i < rho.length(); ++i) pw *= nvars;
                        lhs += c.evaluate(t_value) * pw;
                    }
                    CHECK(lhs == oracle::jack_principal(lambda, nvars, alpha));
                }
            }
}

TEST_CASE("characters at alpha = 1 are normalised symmetric-group characters")
{
    for (int n = 1; n <= 6; ++n)
        for (int k = 1; k <= n; ++k)
            for (const auto& mu : enumerate_partitions(k))
                for (const auto& lambda : enumerate_partitions(n)) {
                    const Rational v = ch(mu, lambda).evaluate(Rational(1));
                    CHECK(v == oracle::ch_alpha_one(mu, lambda));
                    CHECK(v.get_den() == 1);
                }
}

TEST_CASE("J normalisation and dominance triangularity")
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) {
            CHECK(theta(lambda, Partition::rectangle(1, n)) == FieldElement(1L));
            for (const auto& [mu, c] : jack(lambda).in_m.coeffs())
                if (!c.is_zero()) CHECK(dominance_leq(mu, lambda));
        }
}

TEST_CASE("ch of a single box is the size")
{
    for (int n = 0; n <= 8; ++n)
        for (const auto& lambda : enumerate_partitions(n)) CHECK(ch({1}, lambda) == FieldElement(static_cast<long>(n)));
}

TEST_CASE("Jack family is orthogonal for the deformed Hall product")
{
    for (int n = 2; n <= 5; ++n) {
        const auto all = enumerate_partitions(n);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i + 1; j < all.size(); ++j) CHECK(hall_inner(jack(all[i]).in_p, jack(all[j]).in_p).is_zero());
    }
}

TEST_CASE("degree cap and disk cache")
{
    JackCache small(3);
    CHECK_NOTHROW(small.jack({2, 1}));
    CHECK_THROWS_AS(small.jack({2, 2}), CapExceeded);

    const auto dir = std::filesystem::temp_directory_path() / "jackkerov_cache_test";
    std::filesystem::remove_all(dir);
    {
        JackCache writer(6, dir);
        writer.degree(5);
    }
    CHECK(std::filesystem::exists(dir / "jack_degree_5.json"));
    JackCache reader(6, dir);
    CHECK(reader.jack({3, 2}).in_p == jack({3, 2}).in_p);
    CHECK(reader.jack({3, 2}).in_m == jack({3, 2}).in_m);
    std::filesystem::remove_all(dir);
}
