#include "doctest.h"

#include "jackkerov/partition.hpp"
#include "oracles.hpp"

using namespace jackkerov;

TEST_CASE("enumeration examples")
{
    CHECK(enumerate_partitions(0) == std::vector<Partition>{Partition()});
    const auto four = enumerate_partitions(4);
    CHECK(four == std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(enumerate_partitions(9).size() == 30);
}

TEST_CASE("partition counts match the pentagonal recurrence")
{
    const auto p = oracle::partition_counts(40);
    for (int n = 0; n <= 40; ++n) CHECK(Integer(enumerate_partitions(n).size()) == p[static_cast<std::size_t>(n)]);
}

TEST_CASE("z_mu examples")
{
    CHECK(z_mu({1}) == 1);
    CHECK(z_mu({2, 1}) == 2);
    CHECK(z_mu({3, 1, 1}) == 6);
    CHECK(z_mu(Partition()) == 1);
}

TEST_CASE("arm and leg")
{
    CHECK(arm_leg({3, 1}, 1, 1) == std::pair{2, 1});
    CHECK(arm_leg({3, 1}, 1, 3) == std::pair{0, 0});
    CHECK(arm_leg({2, 2}, 1, 1) == std::pair{1, 1});
    CHECK_THROWS(arm_leg({2, 2}, 3, 1));
}

TEST_CASE("dominance")
{
    CHECK(dominance_leq({1, 1}, {2}));
    CHECK_FALSE(dominance_leq({3, 3}, {4, 1, 1}));
    CHECK_FALSE(dominance_leq({4, 1, 1}, {3, 3}));
    CHECK(dominance_leq({3, 2}, {3, 2}));
    CHECK_THROWS(dominance_leq({2}, {2, 1}));
}

TEST_CASE("partition helpers")
{
    const Partition p = Partition::parse("3,1,1");
    CHECK(p.to_string() == "3,1,1");
    CHECK(Partition::parse("-").empty());
    CHECK(Partition::parse("1,3") == Partition{3, 1});
    CHECK_THROWS(Partition::parse("a"));
    CHECK(p.conjugate() == Partition{3, 1, 1});
    CHECK(Partition{4, 2}.conjugate() == Partition{2, 2, 1, 1});
    CHECK(p.multiplicity(1) == 2);
    CHECK((Partition{2} + Partition{3, 1}) == Partition{3, 2, 1});
    CHECK(Partition{2}.with_ones(2) == Partition{2, 1, 1});
    CHECK(p.addable_rows() == std::vector<int>{0, 1, 3});
    CHECK(p.removable_rows() == std::vector<int>{0, 2});
    CHECK(p.with_box_in_row(1) == Partition{3, 2, 1});
    CHECK_THROWS(p.with_box_in_row(2));
    CHECK(Partition::rectangle(2, 3) == Partition{2, 2, 2});
    CHECK(Partition{1} < Partition{2});
    CHECK(partitions_up_to(4, 2).size() == 5);
    CHECK(binomial(5, 2) == 10);
    CHECK(factorial(6) == 720);
}
