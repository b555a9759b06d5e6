#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "unref/partition.hpp"

namespace unref {

using PartitionSet = std::set<Partition>;

// 2n-2, 2n-3, 2n-4 for d = 1, 2, 3; beyond that 2n-5 if n-d is even, else 2n-4.
Part predicted_max_last_part(Part n, Part d);

enum class Source { small_d, rows_2n4, rows_2n5 };
enum class HParity { any, odd, even };

// Explicit partition (a_1..a_h) -> (first, last) for one value of d.
// d = d_n * n + d_const; removed values are n + offset; the first added
// value is d or n+1; the last part is 2n + last_offset.
struct FixedRow {
    Source source;
    Part d_n;
    Part d_const;
    std::vector<Part> removed_offsets;
    bool adds_d;
    Part last_offset;

    Part d_value(Part n) const { return d_n * n + d_const; }
};

// h^2 + lin*h + c
struct HPoly {
    Part lin;
    Part c;
    Part at(Part h) const { return h * h + lin * h + c; }
};

struct H4Bound {
    Part lower;
    bool strict;
    Part upper_offset;  // d <= n - upper_offset
};

// One parametrised row of a table, covering every h it admits:
//   a_1 = (n + a1(h) + d)/2 + i, then a_2 - i_1 < ... < a_{h-3} - i_{h-4},
//   then the free triple; added (d, n+1+i_{h-4}, ..., n-4+h+i_1,
//   (3n - alpha(h) - d)/2 - i, last).
struct FamilyRow {
    Source table;
    std::array<Part, 3> free_offsets;
    HPoly a1;
    HPoly alpha;
    HPoly upper;  // h >= 5: d <= n - upper(h)
    Part lower;   // h >= 5: d >= lower
    HParity parity;
    std::optional<H4Bound> h4;
};

struct ParamVector {
    Part i = 0;
    std::vector<Part> offsets;  // i_1 .. i_{h-4}
    bool operator==(const ParamVector&) const = default;
};

struct Construction {
    Source source;
    bool fixed;              // from a FixedRow rather than a FamilyRow
    std::size_t row;         // index into fixed_rows() or family_rows(source)
    Part h;                  // number of removed parts
    ParamVector params;
    DeltaRecord delta;       // against canonical_pi(n, d)
    Partition partition;
};

std::span<const FixedRow> fixed_rows();
std::span<const FamilyRow> family_rows(Source table);

// the d-constraint column of a FamilyRow, read literally
bool family_row_admits(const FamilyRow& row, Part n, Part d, Part h);

// Every construction the given table produces for (n, d), fixed rows
// included, after the safety-net checks. Hard error on any inconsistency.
std::vector<Construction> table_constructions(Source table, Part n, Part d);

PartitionSet special_cases(Part n, Part d);
PartitionSet family_2n4(Part n, Part d);
PartitionSet family_2n5(Part n, Part d);
PartitionSet construct_all_maximal(Part n, Part d);

// all Construction records behind construct_all_maximal (for audits)
std::vector<Construction> all_constructions(Part n, Part d);

} // namespace unref
