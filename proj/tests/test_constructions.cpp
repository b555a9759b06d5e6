#include "doctest.h"
#include "support/helpers.hpp"
#include "unref/constructions.hpp"

using namespace unref;
using oracle::List;

namespace {

bool has(const PartitionSet& s, const List& l)
{
    return s.count(make_partition(l)) == 1;
}

Errc error_of(auto fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::parse_error;
}

} // namespace

TEST_CASE("predicted largest part")
{
    CHECK(predicted_max_last_part(11, 1) == 20);
    CHECK(predicted_max_last_part(11, 2) == 19);
    CHECK(predicted_max_last_part(11, 3) == 18);
    CHECK(predicted_max_last_part(11, 4) == 18);
    CHECK(predicted_max_last_part(12, 4) == 19);
    CHECK(predicted_max_last_part(12, 3) == 20);
    CHECK(error_of([] { predicted_max_last_part(11, 0); }) == Errc::out_of_range);
    CHECK(error_of([] { predicted_max_last_part(11, 11); }) == Errc::out_of_range);
}

TEST_CASE("small d and the last few d")
{
    CHECK(lists(construct_all_maximal(11, 1)) == std::vector<List>{oracle::cat(oracle::range(1, 9), {20})});
    CHECK(lists(construct_all_maximal(11, 2)) == std::vector<List>{oracle::cat(oracle::range(1, 9), {19})});
    CHECK(lists(construct_all_maximal(11, 5)) ==
          std::vector<List>{{1, 2, 3, 4, 5, 8, 10, 11, 17}, {1, 2, 3, 4, 6, 7, 9, 12, 17}});
    CHECK(has(construct_all_maximal(11, 6), {1, 2, 3, 4, 5, 7, 8, 12, 18}));
    CHECK(has(construct_all_maximal(12, 6), {1, 2, 3, 4, 5, 7, 8, 10, 13, 19}));
    CHECK(construct_all_maximal(11, 3).size() == 1);
    CHECK(construct_all_maximal(11, 6).size() == 2);
}

TEST_CASE("family examples")
{
    const auto d3 = construct_all_maximal(12, 3);
    CHECK(d3.size() == 3);
    CHECK(has(d3, oracle::cat(oracle::range(1, 10), {20})));
    CHECK(family_2n4(12, 3) == d3);
    CHECK(construct_all_maximal(13, 6).size() == 2);
    CHECK(construct_all_maximal(14, 7).size() == 2);
    CHECK(family_2n5(14, 6).size() == 2);
    CHECK(family_2n5(13, 5).size() == 2);
    CHECK(has(family_2n5(12, 4), oracle::cat(oracle::range(1, 10), {19})));
}

TEST_CASE("regime errors")
{
    CHECK(error_of([] { special_cases(12, 5); }) == Errc::regime_mismatch);
    CHECK(error_of([] { family_2n5(12, 5); }) == Errc::regime_mismatch);
    CHECK(error_of([] { family_2n4(12, 4); }) == Errc::regime_mismatch);
    CHECK(error_of([] { family_2n4(13, 8); }) == Errc::regime_mismatch);
    CHECK(error_of([] { construct_all_maximal(10, 3); }) == Errc::out_of_range);
    CHECK(error_of([] { construct_all_maximal(12, 12); }) == Errc::out_of_range);
}

TEST_CASE("constructions equal the naive maximal set for n in [11, 13]")
{
    for (Part n = 11; n <= 13; ++n)
        for (Part d = 1; d <= n - 1; ++d) {
            CAPTURE(n);
            CAPTURE(d);
            const auto expect = oracle::maximal_of(oracle::tri(n) - d);
            CHECK(lists(construct_all_maximal(n, d)) == expect);
            CHECK(expect.front().back() == predicted_max_last_part(n, d));
        }
}

TEST_CASE("every construction record is self-consistent")
{
    for (Part n = 11; n <= 18; ++n)
        for (Part d = 1; d <= n - 1; ++d)
            for (const Construction& c : all_constructions(n, d)) {
                CHECK(apply_delta(canonical_pi(n, d), c.delta) == c.partition);
                CHECK(oracle::unrefinable(c.partition.vec()));
                CHECK(c.partition.total() == oracle::tri(n) - d);
                CHECK(c.partition.last_part() == predicted_max_last_part(n, d));
                if (!c.fixed) {
                    CHECK(c.h >= 4);
                    CHECK(c.delta.removed.size() == static_cast<std::size_t>(c.h));
                    CHECK(family_row_admits(family_rows(c.source)[c.row], n, d, c.h));
                }
            }
}

TEST_CASE("row data shape")
{
    CHECK(family_rows(Source::rows_2n4).size() == 4);
    CHECK(family_rows(Source::rows_2n5).size() == 8);
    CHECK(family_rows(Source::small_d).empty());
    for (const FixedRow& r : fixed_rows())
        CHECK(r.last_offset < 0);
}
