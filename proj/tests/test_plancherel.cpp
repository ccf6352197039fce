#include "doctest.h"

#include <cmath>
#include <map>
#include <sstream>

#include "jackkerov/errors.hpp"
#include "jackkerov/jack.hpp"
#include "jackkerov/kerov.hpp"
#include "jackkerov/plancherel.hpp"
#include "oracles.hpp"

using namespace jackkerov;

namespace {

Polynomial poly(std::vector<long> c)
{
    std::vector<Rational> r;
    for (long v : c) r.emplace_back(v);
    return Polynomial(r);
}

const FieldElement alpha = FieldElement::t() * FieldElement::t();

}  // namespace

TEST_CASE("jack hook values")
{
    CHECK(jack_hook({1}).value == poly({0, 1}));
    CHECK(jack_hook({2}).value == poly({0, 0, 2, 2}));
    CHECK(jack_hook({1, 1}).value == poly({0, 2, 2}));
}

TEST_CASE("small Plancherel distributions")
{
    const auto one = plancherel_dist_symbolic(1);
    REQUIRE(one.probs.size() == 1);
    CHECK(one.at({1}) == FieldElement(1L));

    const auto two = plancherel_dist_symbolic(2);
    CHECK(two.at({2}) == FieldElement(1L) / (FieldElement(1L) + alpha));
    CHECK(two.at({1, 1}) == alpha / (FieldElement(1L) + alpha));

    const auto at_one = plancherel_dist(2, Rational(1));
    CHECK(at_one.at({2}) == Rational(1, 2));
    CHECK(at_one.at({1, 1}) == Rational(1, 2));
}

TEST_CASE("alpha = 1 recovers the classical Plancherel measure")
{
    for (int n = 1; n <= 10; ++n)
        for (const auto& [lambda, p] : plancherel_dist(n, Rational(1)).probs)
            CHECK(p == oracle::plancherel_alpha_one(lambda));
}

TEST_CASE("distributions sum to one")
{
    for (int n = 0; n <= 10; ++n) {
        FieldElement s;
        for (const auto& [lambda, p] : plancherel_dist_symbolic(n).probs) s += p;
        CHECK(s == FieldElement(1L));
    }
    for (const Rational& a : {Rational(1, 3), Rational(7, 2)}) {
        Rational s = 0;
        for (const auto& [lambda, p] : plancherel_dist(9, a).probs) s += p;
        CHECK(s == 1);
    }
    double s = 0;
    for (const auto& [lambda, p] : plancherel_dist(40, 0.7).probs) s += p;
    CHECK(std::abs(s - 1) < 1e-9);
}

TEST_CASE("enumeration caps")
{
    EnumerationCaps caps;
    caps.exact = 5;
    caps.floating = 6;
    CHECK_THROWS_AS(plancherel_dist_symbolic(6, caps), CapExceeded);
    CHECK_THROWS_AS(plancherel_dist(6, Rational(2), caps), CapExceeded);
    CHECK_THROWS_AS(plancherel_dist(7, 2.0, caps), CapExceeded);
}

TEST_CASE("expectations of characters")
{
    auto e = [](const Partition& mu, int n) {
        return exact_expectation([&](const Partition& l) { return ch(mu, l); }, n);
    };
    CHECK(e({1}, 2) == FieldElement(2L));
    CHECK(e({2}, 2).is_zero());
    CHECK(exact_expectation([](const Partition& l) { return theta(l, {2}); }, 2).is_zero());
    for (int n = 1; n <= 7; ++n) {
        CHECK(e({1, 1, 1}, n) == FieldElement(static_cast<long>(n * (n - 1) * (n - 2))));
        CHECK(e({2, 1}, n).is_zero());
        CHECK(e({3}, n).is_zero());
    }
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate_partitions(n)) {
            const auto v = exact_expectation([&](const Partition& l) { return theta(l, mu); }, n);
            CHECK(v == FieldElement(mu == Partition::rectangle(1, n) ? 1L : 0L));
        }
}

TEST_CASE("expectations of moment products are low-degree polynomials in n")
{
    const auto r2 = expectation_degree_check({2}, 2, 6);
    CHECK(r2.passed);
    for (std::size_t i = 0; i < r2.ns.size(); ++i) CHECK(r2.values[i] == FieldElement(static_cast<long>(r2.ns[i])));
    CHECK(expectation_degree_check({3}, 3, 6).passed);
    const auto r22 = expectation_degree_check({2, 2}, 4, 8);
    CHECK(r22.degree_bound == 2);
    CHECK(r22.passed);
}

TEST_CASE("growth kernel")
{
    const auto k = growth_kernel_symbolic({1});
    REQUIRE(k.size() == 2);
    std::map<int, FieldElement> by_row(k.begin(), k.end());
    CHECK(by_row[0] == FieldElement(1L) / (FieldElement(1L) + alpha));
    CHECK(by_row[1] == alpha / (FieldElement(1L) + alpha));

    for (const Partition& base : {Partition{2, 1}, Partition{3, 3, 1}, Partition{1, 1, 1}})
        for (const auto& [row, p] : growth_kernel(base, Rational(1)))
            CHECK(p == Rational(oracle::hook_product(base)) / Rational(oracle::hook_product(base.with_box_in_row(row))));

    const Partition lambda{4, 2, 2, 1};
    const auto exact = growth_kernel(lambda, Rational(3, 2));
    const auto approx = growth_kernel(lambda, 1.5);
    REQUIRE(exact.size() == approx.size());
    for (std::size_t i = 0; i < exact.size(); ++i) {
        CHECK(exact[i].first == approx[i].first);
        CHECK(std::abs(exact[i].second.get_d() - approx[i].second) < 1e-12);
    }
    for (int m = 0; m <= 6; ++m) CHECK(kernel_consistency_check(m));
}

TEST_CASE("sampler basics")
{
    const auto s = grow_sample(1, 0.5, 3);
    REQUIRE(s.trajectory.size() == 2);
    CHECK(s.trajectory[0] == Partition());
    CHECK(s.trajectory[1] == Partition{1});

    const auto long_run = grow_sample(300, 2.0, 11);
    for (std::size_t i = 1; i < long_run.trajectory.size(); ++i) {
        CHECK(long_run.trajectory[i].size() == static_cast<int>(i));
        const auto& prev = long_run.trajectory[i - 1];
        const auto& next = long_run.trajectory[i];
        int grown = 0;
        for (int r = 0; r < next.length(); ++r) grown += next.part(r) - prev.part(r);
        CHECK(grown == 1);
        for (int r = 0; r < prev.length(); ++r) CHECK(prev.part(r) <= next.part(r));
    }
    CHECK(grow_partition(300, 2.0, 11) == long_run.trajectory.back());
    CHECK(grow_partition(500, 0.5, 42) == grow_partition(500, 0.5, 42));
    CHECK(substream_seed(1, 0) != substream_seed(1, 1));
}

TEST_CASE("sampler marginals at n = 3")
{
    const int samples = 100000;
    const double a = 2.0;
    std::map<Partition, int> counts;
    for (int i = 0; i < samples; ++i) ++counts[grow_partition(3, a, substream_seed(7, static_cast<std::uint64_t>(i)))];
    for (const auto& [lambda, p] : plancherel_dist(3, a).probs) {
        const double sigma = std::sqrt(p * (1 - p) / samples);
        CHECK(std::abs(counts[lambda] / static_cast<double>(samples) - p) < 3 * sigma);
    }
}

TEST_CASE("limit shape report")
{
    const auto r1 = limit_shape_report(400, 1.0, 6, 5, 1);
    const auto r3 = limit_shape_report(400, 1.0, 6, 5, 3);
    CHECK(r1.to_json() == r3.to_json());
    REQUIRE(r1.samples.size() == 6);
    for (const auto& s : r1.samples) {
        CHECK(s.r.size() == 5);
        CHECK(std::abs(s.r[0] - 1.0) < 1e-9);
        CHECK(s.sup_distance < 0.3);
    }
    CHECK(r1.sup_distance.min <= r1.sup_distance.median);
    CHECK(r1.sup_distance.median <= r1.sup_distance.max);
    std::ostringstream csv;
    r1.write_csv(csv);
    CHECK(csv.str().rfind("n,alpha,seed,sup_dist,R2,R3,R4,R5,R6,rows_scaled,cols_scaled\n", 0) == 0);

    const auto st = summarize({4, 1, 3, 2});
    CHECK(st.mean == doctest::Approx(2.5));
    CHECK(st.median == doctest::Approx(2.5));
    CHECK(st.min == 1);
    CHECK(st.max == 4);
}
