#include <filesystem>

#include "doctest.h"
#include "support/oracle.hpp"
#include "unref/count_table.hpp"
#include "unref/serialize.hpp"

using namespace unref;

TEST_CASE("partition json round trip")
{
    const Partition p = make_partition({1, 2, 3, 4, 5, 8, 10, 11, 17});
    CHECK(to_json(p) == "[1,2,3,4,5,8,10,11,17]");
    CHECK(partition_from_json(to_json(p)) == p);
    CHECK(partition_from_json(" [ 1 , 5 ] ").vec() == std::vector<Part>{1, 5});
}

TEST_CASE("partition json errors")
{
    auto code = [](std::string_view text) {
        try {
            partition_from_json(text);
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::overflow;
    };
    CHECK(code("[1,2") == Errc::parse_error);
    CHECK(code("{\"a\":1}") == Errc::parse_error);
    CHECK(code("[1,\"x\"]") == Errc::parse_error);
    CHECK(code("[1.5,2]") == Errc::parse_error);
    CHECK(code("[3,3]") == Errc::duplicate_part);
    CHECK(code("[4]") == Errc::too_few_parts);
}

TEST_CASE("delta json round trip")
{
    const DeltaRecord d{{6, 7, 9}, {5, 17}};
    CHECK(to_json(d) == R"({"removed":[6,7,9],"added":[5,17]})");
    CHECK(delta_from_json(to_json(d)) == d);
    CHECK_THROWS_AS(delta_from_json(R"({"removed":[1]})"), Error);
    CHECK(parts_to_json({}) == "[]");
}

TEST_CASE("count table csv")
{
    CountTable t;
    t.set(Family::unrefinable, 6, 1);
    t.set(Family::distinct, 7, 4);
    CHECK(t.to_csv() == "family,N,count\ndistinct,7,4\nunrefinable,6,1\n");
    const CountTable back = CountTable::from_csv(t.to_csv());
    CHECK(back.rows() == t.rows());
    CHECK(*back.get(Family::distinct, 7) == 4);
    CHECK_FALSE(back.get(Family::distinct, 8).has_value());

    CHECK_THROWS_AS(CountTable::from_csv("family,N,count\nbogus,1,2\n"), Error);
    CHECK_THROWS_AS(CountTable::from_csv("distinct,1\n"), Error);
    CHECK_THROWS_AS(CountTable::from_csv("distinct,x,1\n"), Error);
    CHECK_THROWS_AS(CountTable::from_csv("distinct,3,-1\n"), Error);

    for (Family f : {Family::distinct, Family::odd_distinct, Family::unrefinable, Family::maximal_unrefinable})
        CHECK(family_from_string(to_string(f)) == f);
}

TEST_CASE("count table save and load")
{
    const auto path = std::filesystem::temp_directory_path() / "unref_count_table_test.csv";
    const Family fams[] = {Family::distinct, Family::odd_distinct, Family::unrefinable,
                           Family::maximal_unrefinable};
    const CountTable t = build_count_table(1, 30, fams, 2);
    t.save(path);
    CHECK(CountTable::load(path).rows() == t.rows());
    std::filesystem::remove(path);
    CHECK_THROWS_AS(CountTable::load(path), Error);

    for (Part total = 3; total <= 30; ++total) {
        CHECK(*t.get(Family::distinct, total) == oracle::distinct(total).size());
        CHECK(*t.get(Family::odd_distinct, total) == oracle::distinct_odd(total).size());
        CHECK(*t.get(Family::unrefinable, total) == oracle::unrefinable_of(total).size());
        CHECK(*t.get(Family::maximal_unrefinable, total) == oracle::maximal_of(total).size());
    }
}
