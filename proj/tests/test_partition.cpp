#include "doctest.h"
#include "support/oracle.hpp"
#include "unref/checked.hpp"
#include "unref/partition.hpp"

using namespace unref;

namespace {

Errc error_of(std::vector<Part> parts)
{
    try {
        make_partition(std::move(parts));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::parse_error;
}

} // namespace

TEST_CASE("make_partition validates")
{
    const Partition p = make_partition({1, 2, 3});
    CHECK(p.total() == 6);
    CHECK(p.last_part() == 3);
    CHECK(p.length() == 3);

    CHECK(error_of({1, 3, 3}) == Errc::duplicate_part);
    CHECK(error_of({5}) == Errc::too_few_parts);
    CHECK(error_of({}) == Errc::too_few_parts);
    CHECK(error_of({0, 2}) == Errc::non_positive_part);
    CHECK(error_of({-1, 2}) == Errc::non_positive_part);
    CHECK(error_of({3, 2}) == Errc::unsorted_parts);
    CHECK_FALSE(partition_defect(std::vector<Part>{1, 4}).has_value());
}

TEST_CASE("ordering is lexicographic on the ascending list")
{
    CHECK(make_partition({1, 2, 3}) < make_partition({1, 5}));
    CHECK(make_partition({1, 5}) < make_partition({2, 4}));
    CHECK(make_partition({2, 4}) == make_partition({2, 4}));
    CHECK(to_string(make_partition({1, 2, 3})) == "(1,2,3)");
}

TEST_CASE("missing parts")
{
    CHECK(missing_parts(make_partition({1, 2, 3})).count() == 0);
    CHECK(missing_parts(make_partition({1, 2, 4, 5, 8})).values == std::vector<Part>{3, 6, 7});
    CHECK(missing_parts(make_partition({2, 4})).values == std::vector<Part>{1, 3});
}

TEST_CASE("refinability witness")
{
    const auto w = refinability_witness(make_partition({2, 4}));
    REQUIRE(w.has_value());
    CHECK(*w == RefinabilityWitness{2, 1, 2});
    CHECK_FALSE(refinability_witness(make_partition({1, 2, 3})).has_value());
    CHECK_FALSE(refinability_witness(make_partition({1, 2, 4, 5, 8})).has_value());

    CHECK(is_unrefinable(make_partition({1, 2, 3})));
    CHECK_FALSE(is_unrefinable(make_partition({1, 5})));
    CHECK(is_unrefinable(make_partition(oracle::cat(oracle::range(1, 9), {20}))));
}

TEST_CASE("unrefinability agrees with the naive pair check on every distinct partition of N <= 30")
{
    for (Part total = 3; total <= 30; ++total)
        for (const auto& l : oracle::distinct(total)) {
            const Partition p = make_partition(l);
            CHECK(is_unrefinable(p) == oracle::unrefinable(l));
            CHECK(parts_unrefinable(p.parts()) == oracle::unrefinable(l));
            CHECK(missing_parts(p).values == oracle::missing(l));
            if (auto w = refinability_witness(p)) {
                const auto m = oracle::missing(l);
                CHECK(m[w->first_missing - 1] + m[w->second_missing - 1] == l[w->part_index - 1]);
                CHECK(w->first_missing < w->second_missing);
            }
        }
}

TEST_CASE("triangular numbers and forms")
{
    CHECK(triangular_number(11) == 66);
    CHECK(triangular_number(16) == 136);
    CHECK(triangular_form(66) == TriangularForm{11, 0});
    CHECK(triangular_form(65) == TriangularForm{11, 1});
    CHECK(triangular_form(60) == TriangularForm{11, 6});
    CHECK(triangular_form(60).total() == 60);
    CHECK(triangular_form(66).is_triangular());
    for (Part total = 3; total <= 500; ++total) {
        const auto f = triangular_form(total);
        CHECK(f.total() == total);
        CHECK(f.d >= 0);
        CHECK(f.d <= f.n - 1);
    }
    CHECK_THROWS_AS(triangular_form(2), Error);
    CHECK_THROWS_AS(triangular_number(Part{1} << 40), Error);
}

TEST_CASE("canonical pi")
{
    CHECK(canonical_pi(5, 2).vec() == std::vector<Part>{1, 3, 4, 5});
    CHECK(canonical_pi(5, 2).total() == 13);
    CHECK(canonical_pi(11, 5).vec() == oracle::pi(11, 5));
    CHECK(canonical_pi(11, 5).total() == 61);
    CHECK_THROWS_AS(canonical_pi(3, 3), Error);
    CHECK_THROWS_AS(canonical_pi(5, 0), Error);
}

TEST_CASE("apply_delta")
{
    const Partition base = canonical_pi(11, 5);
    CHECK(apply_delta(base, DeltaRecord{{6, 7, 9}, {5, 17}}).vec() ==
          std::vector<Part>{1, 2, 3, 4, 5, 8, 10, 11, 17});
    const Partition second = apply_delta(base, DeltaRecord{{8, 10, 11}, {12, 17}});
    CHECK(second.vec() == std::vector<Part>{1, 2, 3, 4, 6, 7, 9, 12, 17});
    CHECK(second.total() == 61);
    CHECK(apply_delta(base, DeltaRecord{}) == base);

    auto code = [&](DeltaRecord d) {
        try {
            apply_delta(base, d);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::parse_error;
    };
    CHECK(code({{5}, {}}) == Errc::removed_part_absent);
    CHECK(code({{6}, {7}}) == Errc::added_part_present);
    CHECK(code({{6}, {20}}) == Errc::delta_sum_mismatch);

    const DeltaRecord back = delta_between(base, second);
    CHECK(back == DeltaRecord{{8, 10, 11}, {12, 17}});
    CHECK(apply_delta(base, back) == second);
}

TEST_CASE("areas")
{
    CHECK(area_of(1, 20, 11) == Area::first);
    CHECK(area_of(8, 20, 11) == Area::first);
    CHECK(area_of(9, 20, 11) == Area::free);
    CHECK(area_of(11, 20, 11) == Area::free);
    CHECK(area_of(12, 20, 11) == Area::last);
    CHECK(std::string(to_string(Area::free)) == "free");
}

TEST_CASE("checked arithmetic")
{
    CHECK(checked_add<Part>(2, 3) == 5);
    CHECK_THROWS_AS(checked_add<std::uint64_t>(~std::uint64_t{0}, 1), Error);
    CHECK_THROWS_AS(checked_mul<Part>(Part{1} << 62, 4), Error);
}
