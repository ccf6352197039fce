#include "doctest.h"

#include "jackkerov/cumulants.hpp"

using namespace jackkerov;

namespace {
const FieldElement t = FieldElement::t();
const FieldElement g = FieldElement::gamma();
}

TEST_CASE("transition measure examples")
{
    auto atoms = transition_measure(corners({1}));
    REQUIRE(atoms.size() == 2);
    CHECK(atoms[0].location == -1);
    CHECK(atoms[0].mass == Rational(1, 2));
    CHECK(atoms[1].location == 1);
    CHECK(atoms[1].mass == Rational(1, 2));

    atoms = transition_measure(corners(Partition()));
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].location == 0);
    CHECK(atoms[0].mass == 1);

    const auto an = transition_measure(anisotropic_symbolic({1}));
    REQUIRE(an.size() == 2);
    const FieldElement alpha = t * t;
    CHECK(an[0].location == -t.inverse());
    CHECK(an[0].mass == alpha / (FieldElement(1L) + alpha));
    CHECK(an[1].location == t);
    CHECK(an[1].mass == FieldElement(1L) / (FieldElement(1L) + alpha));
}

TEST_CASE("moment examples")
{
    CHECK(moments(corners({1}), 3).values == std::vector<Rational>{1, 0, 1, 0});
    const auto m = moments(anisotropic_symbolic({1}), 3);
    CHECK(m[2] == FieldElement(1L));
    CHECK(m[3] == -g);
    const auto e = moments(corners(Partition()), 5);
    CHECK(e.values == std::vector<Rational>{1, 0, 0, 0, 0, 0});
}

TEST_CASE("free cumulant examples")
{
    CHECK(free_cumulants(MomentSequence<Rational>{{1, 0, 1, 0}}).values == std::vector<Rational>{0, 0, 1, 0});
    CHECK(free_cumulants(MomentSequence<Rational>{{1, 0, 0, 0}}).values == std::vector<Rational>{0, 0, 0, 0});
    const auto mr = anisotropic_MR({2}, 3);
    CHECK(mr.moments[3] == FieldElement(4L) * t - FieldElement(2L) / t);
    CHECK(mr.cumulants[2] == FieldElement(2L));
    CHECK(mr.cumulants[3] == FieldElement(4L) * t - FieldElement(2L) / t);
    CHECK_THROWS(mr.cumulants[0]);
    CHECK_THROWS(free_cumulants(MomentSequence<Rational>{{2, 0}}));
}

TEST_CASE("anisotropic moments of small diagrams")
{
    const auto one = anisotropic_MR({1}, 3);
    CHECK(one.moments[2] == FieldElement(1L));
    CHECK(one.moments[3] == -g);
    const auto empty = anisotropic_MR(Partition(), 4);
    for (int k = 1; k <= 4; ++k) {
        CHECK(empty.moments[k].is_zero());
        CHECK(empty.cumulants[k].is_zero());
    }
}

TEST_CASE("moments from cumulants inverts free_cumulants")
{
    const auto mr = anisotropic_MR({3, 2, 2}, 7);
    CHECK(moments_from_cumulants(mr.cumulants).values == mr.moments.values);
}

TEST_CASE("box-adding update")
{
    MomentSequence<FieldElement> empty{{FieldElement(1L), FieldElement(), FieldElement(), FieldElement()}};
    const auto one = add_box_update(empty, FieldElement(), g, 3);
    CHECK(one[2] == FieldElement(1L));
    CHECK(one[3] == -g);

    const Partition lambda{2, 1};
    const auto base = moments(anisotropic_symbolic(lambda), 6);
    for (int row : lambda.addable_rows()) {
        const int col = lambda.part(row);
        const FieldElement z = FieldElement(static_cast<long>(col)) * t - FieldElement(static_cast<long>(row)) / t;
        const auto updated = add_box_update(base, z, g, 6);
        CHECK(updated.values == moments(anisotropic_symbolic(lambda.with_box_in_row(row)), 6).values);
    }
    CHECK_THROWS(add_box_update(base, FieldElement(), g, 7));
}

TEST_CASE("integrality of rescaled moments")
{
    const auto one = integrality_check({1}, 3);
    CHECK(one.all_passed());
    CHECK(one.records.back().scaled == t * t - FieldElement(1L));
    for (const auto& r : integrality_check(Partition(), 6).records) CHECK(r.scaled.is_zero());
    CHECK(integrality_check({2, 1}, 6).all_passed());
    CHECK_FALSE(is_integer_polynomial_in_alpha(t));
    CHECK_FALSE(is_integer_polynomial_in_alpha(FieldElement(Rational(1, 2))));
}

TEST_CASE("moments csv")
{
    const auto csv = moments_csv(anisotropic_MR({1}, 3));
    CHECK(csv == "k,M_k,R_k\n1,0,0\n2,1,1\n3,(-1 + t^2)/t,(-1 + t^2)/t\n");
}
