#include <doctest.h>

#include <stdexcept>

#include "dtv/serialize.hpp"
#include "dtv/vertex.hpp"

using namespace dtv;

TEST_CASE("partition round trip") {
    for (auto& p : partitions_up_to(5)) CHECK(partition_from_json(to_json(p)) == p);
    CHECK(to_json(Partition{3, 1}).dump() == "[3,1]");
    CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("series round trip") {
    Series s = closed_z2z2_nolegs(4);
    json j = to_json(s, variable_names(Group::z2z2));
    CHECK(series_from_json(j) == s);
    CHECK(series_from_json(json::parse(j.dump())) == s);
    CHECK(j["vars"] == json({"q0", "qa", "qb", "qc"}));
    CHECK(variable_names(Group::zn, 3) == std::vector<std::string>{"q0", "q1", "q2"});
    CHECK_THROWS_AS(to_json(s, variable_names(Group::zn, 3)), std::invalid_argument);
    // big coefficients survive as strings
    Series big = Series::constant(1, 0, mpz_class("123456789012345678901234567890"));
    CHECK(series_from_json(to_json(big, {"q"})) == big);
}

TEST_CASE("csv") {
    Series s = Series::one(2, 2) + Series::monomial(2, 2, unit_mono(1, 2), -3);
    CHECK(to_csv(s, {"x", "y"}) == "x,y,coef\n0,0,1\n0,2,-3\n");
}

TEST_CASE("pyramid round trip") {
    for (auto& p : enumerate_pyramids(5)) CHECK(pyramid_from_json(to_json(p)) == p);
}

TEST_CASE("frames") {
    CHECK(parse_frame(frame_name(Frame::diagonal)) == Frame::diagonal);
    CHECK(parse_frame("antidiagonal") == Frame::antidiagonal);
    CHECK_THROWS_AS(parse_frame("sideways"), std::invalid_argument);
    auto c = restrict_config(PyramidPartition(SliceMap{{0, Partition{1}}}), Partition{}, 0, Frame::diagonal);
    json j = to_json(c);
    CHECK(j["frame"] == "diagonal");
}
