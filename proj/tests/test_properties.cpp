#include "doctest.h"

#include "properties.hpp"

TEST_CASE("property suite")
{
    std::uint64_t seed = 20240601;
    for (const auto& p : props::all_properties()) {
        const auto r = props::run_property(p, 1000, seed++);
        INFO(r.name << ": " << r.first_failure);
        CHECK(r.failures == 0);
        CHECK(r.cases >= 1000);
    }
}
