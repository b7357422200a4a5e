#include <doctest.h>

#include "ebfs/distance.hpp"

using ebfs::Distance;
using ebfs::DistanceVector;

TEST_CASE("infinity arithmetic") {
    const Distance inf = Distance::infinite();
    CHECK_FALSE(inf.is_finite());
    CHECK(inf.successor() == inf);
    CHECK(Distance(0).successor() == Distance(1));
    CHECK(std::min(inf, Distance(7)) == Distance(7));
    CHECK(Distance(3) < inf);
    CHECK(inf.to_string() == "inf");
    CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("relaxed takes componentwise min of current and parent + 1") {
    const Distance inf;
    CHECK(ebfs::relaxed({inf, Distance(3)}, {Distance(2), Distance(5)}) == DistanceVector{Distance(3), Distance(3)});
    CHECK(ebfs::relaxed({Distance(0), inf}, {inf, inf}) == DistanceVector{Distance(0), inf});
    CHECK_THROWS(ebfs::relaxed({inf}, {inf, inf}));
}

TEST_CASE("min entry and formatting") {
    CHECK(ebfs::min_entry({Distance(4), Distance(1), Distance()}) == Distance(1));
    CHECK_FALSE(ebfs::min_entry(ebfs::all_infinite(3)).is_finite());
    CHECK(ebfs::to_string({Distance(0), Distance()}) == "(0,inf)");
}
