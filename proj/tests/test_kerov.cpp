#include "doctest.h"

#include "json.hpp"

#include "jackkerov/errors.hpp"
#include "jackkerov/jack.hpp"
#include "jackkerov/kerov.hpp"
#include "jackkerov/linsolve.hpp"
#include "oracles.hpp"

using namespace jackkerov;

namespace {

GammaPolynomial gp(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return GammaPolynomial(r);
}

using Terms = std::map<Partition, GammaPolynomial>;

// The five rows of the published table, coefficient by coefficient.
std::vector<std::pair<Partition, Terms>> table()
{
    return {
        {{1}, {{{2}, gp({1})}}},
        {{2}, {{{3}, gp({1})}, {{2}, gp({0, 1})}}},
        {{3}, {{{4}, gp({1})}, {{3}, gp({0, 3})}, {{2}, gp({1, 0, 2})}}},
        {{4},
         {{{5}, gp({1})},
          {{4}, gp({0, 6})},
          {{2, 2}, gp({0, 1})},
          {{3}, gp({5, 0, 11})},
          {{2}, gp({0, 7, 0, 6})}}},
        {{2, 2},
         {{{3, 3}, gp({1})},
          {{3, 2}, gp({0, 2})},
          {{4}, gp({-4})},
          {{2, 2}, gp({-2, 0, 1})},
          {{3}, gp({0, -10})},
          {{2}, gp({-2, 0, -6})}}},
    };
}

std::vector<Partition> within_cap(int cap)
{
    std::vector<Partition> out;
    for (int n = 1; n <= cap; ++n)
        for (const auto& mu : enumerate_partitions(n))
            if (mu.size() + mu.length() <= cap) out.push_back(mu);
    return out;
}

}  // namespace

TEST_CASE("published table of K polynomials")
{
    for (const auto& [mu, terms] : table()) {
        const auto k = compute_K(mu);
        CHECK(k.basis == KerovBasis::R);
        CHECK(k.terms == terms);
        CHECK(compute_K_direct(mu).terms == terms);
    }
    CHECK(compute_K({1}).to_string() == "R2");
    CHECK(compute_K({2}).to_string() == "R3 + g*R2");
    CHECK(compute_K({3}).to_string() == "R4 + 3g*R3 + (1 + 2g^2)*R2");
    CHECK(compute_K({4}).to_string() == "R5 + 6g*R4 + g*R2^2 + (5 + 11g^2)*R3 + (7g + 6g^3)*R2");
    CHECK(compute_K({2, 2}).to_string() == "R3^2 + 2g*R3*R2 - 4R4 + (-2 + g^2)*R2^2 - 10g*R3 - (2 + 6g^2)*R2");
}

TEST_CASE("L polynomials in moments")
{
    CHECK(compute_L({1}).terms == Terms{{{2}, gp({1})}});
    CHECK(compute_L({2}).terms == Terms{{{3}, gp({1})}, {{2}, gp({0, 1})}});
    CHECK(compute_L({3}).terms ==
          Terms{{{4}, gp({1})}, {{2, 2}, gp({-2})}, {{3}, gp({0, 3})}, {{2}, gp({1, 0, 2})}});
    CHECK(compute_L({3}).display() == "L[3] = M4 - 2M2^2 + 3g*M3 + (1 + 2g^2)*M2");
    CHECK(moments_to_cumulants(compute_L({3})).terms == compute_K({3}).terms);
}

TEST_CASE("free-cumulant expansion of moments matches non-crossing partitions")
{
    for (int k = 0; k <= 8; ++k) CHECK(moment_in_cumulants(k) == oracle::noncrossing_moment(k));
}

TEST_CASE("degree report examples")
{
    const auto k2 = compute_K({2});
    const auto rec2 = degree_records(k2);
    bool seen = false;
    for (const auto& r : rec2)
        if (r.rho == Partition{2}) {
            seen = true;
            CHECK(r.degree == 1);
            CHECK(r.bound == 1);
            CHECK(r.parity_ok);
        }
    CHECK(seen);

    for (const auto& r : degree_records(compute_K({4})))
        if (r.rho == Partition{2, 2}) {
            CHECK(r.degree == 1);
            CHECK(r.bound == 1);
        }
    for (const auto& r : degree_records(compute_K({3})))
        if (r.rho == Partition{2}) {
            CHECK(r.degree == 2);
            CHECK(r.bound == 2);
            CHECK(r.parity_ok);
        }

    const auto report = verify_degree_bounds(Partition{3});
    CHECK(report.passed());
    CHECK(report.to_string().find("R[2] degree 2 bound 2 parity ok") != std::string::npos);
}

TEST_CASE("degree violations are reported")
{
    auto k = compute_K({2});
    k.terms[{2}] = gp({0, 0, 0, 1});
    CHECK_THROWS_AS(verify_degree_bounds(compute_L({2}), k), TheoremViolation);
    k = compute_K({2});
    k.terms[{2}] = gp({1, 1});
    CHECK_THROWS_AS(verify_degree_bounds(compute_L({2}), k), TheoremViolation);
}

TEST_CASE("gradation degree")
{
    CHECK(gradation_degree(compute_K({2})) == 3);
    KerovPolynomial m32;
    m32.basis = KerovBasis::M;
    m32.terms[{3, 2}] = gp({1});
    CHECK(gradation_degree(m32) == 5);
    CHECK(gradation_degree(std::map<Partition, FieldElement>{{{1}, FieldElement(1L)}, {{2, 1}, FieldElement(1L)}}) == 5);
    CHECK(gradation_degree(KerovPolynomial{}) == -1);
}

TEST_CASE("top term")
{
    auto r = top_term_check(compute_K({3}));
    CHECK(r.top == Partition{4});
    CHECK(r.top_coefficient_is_one);
    CHECK(r.passed);
    r = top_term_check(compute_K({2, 2}));
    CHECK(r.top == Partition{3, 3});
    CHECK(r.remainder_degree <= 5);
    CHECK(top_term_check(compute_K({1})).top == Partition{2});

    auto k = compute_K({2});
    k.terms[{3}] = gp({2});
    CHECK_THROWS_AS(top_term_check(k), TheoremViolation);
}

TEST_CASE("K reproduces Ch one size beyond the fitting set")
{
    for (const auto& mu : within_cap(7)) {
        const auto k = compute_K(mu);
        const int d = mu.size() + mu.length();
        for (int n = 0; n <= d + 1; ++n)
            for (const auto& lambda : enumerate_partitions(n))
                CHECK(evaluate(k, cached_cumulants(lambda, d).values) == ch(mu, lambda));
    }
}

TEST_CASE("every K and L within the cap satisfies the degree and top-term bounds")
{
    for (const auto& mu : within_cap(8)) {
        const auto l = compute_L(mu);
        const auto k = compute_K(mu);
        CHECK(verify_degree_bounds(l, k).passed());
        CHECK(top_term_check(k).passed);
        CHECK_FALSE(k.terms.count(Partition()));
    }
}

TEST_CASE("one-row K polynomials have non-negative integer coefficients")
{
    for (int r = 1; r <= 5; ++r) CHECK(has_nonnegative_integer_coefficients(compute_K({r})));
    CHECK_FALSE(has_nonnegative_integer_coefficients(compute_K({2, 2})));
}

TEST_CASE("Ch_mu are linearly independent")
{
    std::vector<Partition> mus;
    for (const auto& mu : within_cap(6)) mus.push_back(mu);
    std::vector<Partition> lambdas;
    for (int n = 0; n <= 6; ++n)
        for (const auto& l : enumerate_partitions(n)) lambdas.push_back(l);
    Matrix<FieldElement> a(lambdas.size(), mus.size());
    for (std::size_t i = 0; i < lambdas.size(); ++i)
        for (std::size_t j = 0; j < mus.size(); ++j) a(i, j) = ch(mus[j], lambdas[i]);
    const auto sol = solve_exact(a, std::vector<FieldElement>(lambdas.size()));
    CHECK(sol.rank == mus.size());
}

TEST_CASE("z theta rebuilt from L is a polynomial in alpha")
{
    for (const auto& mu : within_cap(8)) {
        const auto l = compute_L(mu);
        for (const auto& lambda : enumerate_partitions(mu.size())) {
            const FieldElement v = assemble_z_theta(l, lambda);
            CHECK(v == FieldElement(Rational(z_mu(mu))) * theta(lambda, mu));
            CHECK(v.is_polynomial());
            const auto& c = v.num().coefficients();
            for (std::size_t e = 1; e < c.size(); e += 2) CHECK(c[e] == 0);
        }
    }
}

TEST_CASE("degree cap")
{
    CHECK_THROWS_AS(compute_K({3, 3, 1}), CapExceeded);
    KerovOptions wide;
    wide.degree_cap = 9;
    CHECK(compute_K({2, 2, 2}, wide).coefficient({3, 3, 3}) == gp({1}));
}

TEST_CASE("output formats")
{
    const auto k = compute_K({2});
    CHECK(k.display() == "K[2] = R3 + g*R2");
    const auto j = nlohmann::json::parse(k.to_json());
    CHECK(j["mu"] == "2");
    CHECK(j["basis"] == "R");
    CHECK(j["terms"]["3"] == "1");
    CHECK(j["terms"]["2"] == "g");
    CHECK(kerov_letter(KerovBasis::M) == 'M');
}
