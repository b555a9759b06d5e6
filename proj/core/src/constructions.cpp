#include "unref/constructions.hpp"

#include <algorithm>
#include <string>

namespace unref {

namespace {

void check_nd(Part n, Part d)
{
    if (n < 11)
        throw Error(Errc::out_of_range, "constructions assume n >= 11 (use the oracle below that)");
    if (d < 1 || d > n - 1)
        throw Error(Errc::out_of_range, "need 1 <= d <= n-1");
}

const std::vector<FixedRow> kFixed = {
    // largest part 2n-2 and 2n-3
    {Source::small_d, 0, 1, {-1, 0}, true, -2},
    {Source::small_d, 0, 2, {-1, 0}, true, -3},
    // 2n-4 family, explicit rows
    {Source::rows_2n4, 0, 3, {-1, 0}, true, -4},
    {Source::rows_2n4, 1, -1, {-3, -2, 0}, true, -4},
    {Source::rows_2n4, 1, -3, {-4, -2, -1}, true, -4},
    {Source::rows_2n4, 1, -5, {-4, -3, -2}, true, -4},
    {Source::rows_2n4, 1, -5, {-2, -1, 0}, false, -4},
    // 2n-5 family, explicit rows
    {Source::rows_2n5, 0, 4, {-1, 0}, true, -5},
    {Source::rows_2n5, 1, -2, {-4, -3, 0}, true, -5},
    {Source::rows_2n5, 1, -4, {-5, -3, -1}, true, -5},
    {Source::rows_2n5, 1, -6, {-5, -4, -2}, true, -5},
    {Source::rows_2n5, 1, -6, {-3, -1, 0}, false, -5},
};

// transcribed row by row; the h = 4 bounds come from the h = 4 lines
const std::vector<FamilyRow> kRows2n4 = {
    {Source::rows_2n4, {-2, -1, 0}, {-3, -9}, {-3, -1}, {-1, -7}, 3, HParity::any, H4Bound{3, true, 7}},
    {Source::rows_2n4, {-3, -2, 0}, {-3, -7}, {-3, 1}, {-1, -5}, 3, HParity::any, H4Bound{3, false, 7}},
    {Source::rows_2n4, {-4, -2, -1}, {-3, -5}, {-3, 3}, {-1, -3}, 3, HParity::any, H4Bound{3, false, 9}},
    {Source::rows_2n4, {-4, -3, -2}, {-3, -3}, {-3, 5}, {-1, -1}, 3, HParity::any, H4Bound{3, false, 11}},
};

const std::vector<FamilyRow> kRows2n5 = {
    {Source::rows_2n5, {-2, -1, 0}, {-2, -15}, {-2, -5}, {0, -11}, 4, HParity::odd, std::nullopt},
    {Source::rows_2n5, {-3, -1, 0}, {-2, -14}, {-2, -4}, {0, -10}, 4, HParity::even, H4Bound{4, true, 8}},
    {Source::rows_2n5, {-4, -2, 0}, {-2, -12}, {-2, -2}, {0, -8}, 4, HParity::even, H4Bound{4, false, 8}},
    {Source::rows_2n5, {-4, -3, 0}, {-2, -11}, {-2, -1}, {0, -7}, 4, HParity::odd, std::nullopt},
    {Source::rows_2n5, {-5, -2, -1}, {-2, -10}, {-2, 0}, {0, -6}, 4, HParity::even, H4Bound{4, false, 10}},
    {Source::rows_2n5, {-5, -3, -1}, {-2, -9}, {-2, 1}, {0, -5}, 4, HParity::odd, std::nullopt},
    {Source::rows_2n5, {-5, -4, -2}, {-2, -7}, {-2, 3}, {0, -3}, 4, HParity::odd, std::nullopt},
    {Source::rows_2n5, {-5, -4, -3}, {-2, -6}, {-2, 4}, {0, -2}, 4, HParity::even, H4Bound{4, false, 14}},
};

Part last_part_of(Source table, Part n)
{
    return table == Source::rows_2n4 ? 2 * n - 4 : 2 * n - 5;
}

[[noreturn]] void mismatch(const std::string& what, Part n, Part d)
{
    throw Error(Errc::construction_mismatch,
                what + " (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
}

// apply the delta and run the safety net
Partition realise(const DeltaRecord& delta, Part n, Part d, Part last)
{
    Partition p = [&] {
        try {
            return apply_delta(canonical_pi(n, d), delta);
        } catch (const Error& e) {
            mismatch(std::string("invalid delta: ") + e.what(), n, d);
        }
    }();
    if (!is_unrefinable(p))
        mismatch("constructed partition " + to_string(p) + " is refinable", n, d);
    if (p.last_part() != last)
        mismatch("constructed partition " + to_string(p) + " has the wrong largest part", n, d);
    if (p.total() != triangular_number(n) - d)
        mismatch("constructed partition " + to_string(p) + " has the wrong total", n, d);
    return p;
}

Construction build_fixed(std::size_t index, Part n, Part d)
{
    const FixedRow& row = kFixed[index];
    DeltaRecord delta;
    for (Part off : row.removed_offsets)
        delta.removed.push_back(n + off);
    const Part last = 2 * n + row.last_offset;
    delta.added = {row.adds_d ? d : n + 1, last};
    std::sort(delta.removed.begin(), delta.removed.end());
    std::sort(delta.added.begin(), delta.added.end());
    Partition p = realise(delta, n, d, last);
    return Construction{row.source, true, index, static_cast<Part>(row.removed_offsets.size()), {},
                        std::move(delta), std::move(p)};
}

bool parity_ok(HParity parity, Part h)
{
    switch (parity) {
    case HParity::any: return true;
    case HParity::odd: return h % 2 != 0;
    case HParity::even: return h % 2 == 0;
    }
    return false;
}

class FamilyBuilder {
  public:
    FamilyBuilder(const FamilyRow& row, std::size_t index, Part n, Part d, Part h)
        : row_(row), index_(index), n_(n), d_(d), h_(h), last_(last_part_of(row.table, n))
    {
        const Part num = n + row.a1.at(h) + d;
        if (num % 2 != 0)
            mismatch("a_1 is not integral for an admitted row", n, d);
        a1_ = num / 2;
        // a_2 .. a_{h-3} are consecutive, ending just below the free area
        a2_ = (row.table == Source::rows_2n4 ? n - h : n - h - 1);
        for (Part off : row.free_offsets)
            free_.push_back(n + off);

        // the smallest ParamVector must be a valid removal list whenever the row admits (n,d,h)
        const bool ok = h == 4 ? (a1_ >= 1 && a1_ < free_.front()) : (a1_ >= 1 && a1_ < a2_);
        if (!ok)
            mismatch("row admits h=" + std::to_string(h) + " but its minimal ParamVector is invalid", n, d);
    }

    void run(std::vector<Construction>& out)
    {
        if (h_ == 4) {
            emit(ParamVector{}, out);
            return;
        }
        std::vector<Part> offsets(static_cast<std::size_t>(h_ - 4), 0);
        choose(offsets.size(), 0, 0, offsets, out);
    }

  private:
    // colex: i_{h-4} is the outermost loop. Consecutive a_r force
    // i_1 >= i_2 >= ... and a_1 + i < a_2 - i_1 bounds everything.
    void choose(std::size_t r, Part partial, Part floor, std::vector<Part>& offsets,
                std::vector<Construction>& out)
    {
        if (r == 0) {
            ParamVector pv{partial, offsets};
            emit(pv, out);
            return;
        }
        const Part gap = a2_ - a1_;
        for (Part v = floor; partial + v * static_cast<Part>(r + 1) <= gap - 1; ++v) {
            offsets[r - 1] = v;
            choose(r - 1, partial + v, v, offsets, out);
        }
        offsets[r - 1] = 0;
    }

    void emit(const ParamVector& pv, std::vector<Construction>& out)
    {
        std::vector<Part> firsts{a1_ + pv.i};
        for (std::size_t s = 0; s < pv.offsets.size(); ++s)
            firsts.push_back(a2_ + static_cast<Part>(s) - pv.offsets[s]);
        for (std::size_t s = 1; s < firsts.size(); ++s)
            if (firsts[s] <= firsts[s - 1])
                mismatch("adjusted removal list is not strictly increasing", n_, d_);

        DeltaRecord delta;
        delta.removed = firsts;
        delta.removed.insert(delta.removed.end(), free_.begin(), free_.end());

        // the added column as printed: d, n+1+i_{h-4}, ..., n-4+h+i_1, alpha, last
        delta.added.push_back(d_);
        for (std::size_t s = pv.offsets.size(); s >= 1; --s)
            delta.added.push_back(n_ + h_ - 3 - static_cast<Part>(s) + pv.offsets[s - 1]);
        const Part alpha_num = 3 * n_ - row_.alpha.at(h_) - d_;
        if (alpha_num % 2 != 0)
            mismatch("alpha is not integral", n_, d_);
        delta.added.push_back(alpha_num / 2 - pv.i);
        delta.added.push_back(last_);

        // each last-area part must mirror a first-area removal
        std::vector<Part> mirror{d_, last_};
        for (Part a : firsts)
            mirror.push_back(last_ - a);
        std::sort(mirror.begin(), mirror.end());
        std::sort(delta.removed.begin(), delta.removed.end());
        std::sort(delta.added.begin(), delta.added.end());
        if (mirror != delta.added)
            mismatch("added column does not mirror the removed first-area parts", n_, d_);

        Partition p = realise(delta, n_, d_, last_);
        out.push_back(Construction{row_.table, false, index_, h_, pv, std::move(delta), std::move(p)});
    }

    const FamilyRow& row_;
    std::size_t index_;
    Part n_, d_, h_, last_;
    Part a1_ = 0, a2_ = 0;
    std::vector<Part> free_;
};

void assert_no_duplicates(const std::vector<Construction>& cs, Part n, Part d)
{
    PartitionSet seen;
    for (const auto& c : cs)
        if (!seen.insert(c.partition).second)
            mismatch("two constructions produced " + to_string(c.partition), n, d);
}

PartitionSet to_set(const std::vector<Construction>& cs)
{
    PartitionSet out;
    for (const auto& c : cs)
        out.insert(c.partition);
    return out;
}

bool special_regime(Part n, Part d)
{
    return d == 1 || d == 2 || (d == 3 && n % 2 == 1) || d >= n - 6;
}

std::vector<Construction> special_constructions(Part n, Part d)
{
    check_nd(n, d);
    if (!special_regime(n, d))
        throw Error(Errc::regime_mismatch, "d is not one of the special cases");
    std::vector<Construction> out;
    for (std::size_t i = 0; i < kFixed.size(); ++i)
        if (kFixed[i].d_value(n) == d)
            out.push_back(build_fixed(i, n, d));
    assert_no_duplicates(out, n, d);
    return out;
}

} // namespace

Part predicted_max_last_part(Part n, Part d)
{
    if (n < 11 || d < 1 || d > n - 1)
        throw Error(Errc::out_of_range, "predicted_max_last_part needs n >= 11 and 1 <= d <= n-1");
    if (d == 1)
        return 2 * n - 2;
    if (d == 2)
        return 2 * n - 3;
    if (d == 3)
        return 2 * n - 4;
    return (n - d) % 2 == 0 ? 2 * n - 5 : 2 * n - 4;
}

std::span<const FixedRow> fixed_rows()
{
    return kFixed;
}

std::span<const FamilyRow> family_rows(Source table)
{
    if (table == Source::rows_2n4)
        return kRows2n4;
    if (table == Source::rows_2n5)
        return kRows2n5;
    return {};
}

bool family_row_admits(const FamilyRow& row, Part n, Part d, Part h)
{
    // the 2n-4 family reads d = n-(2k-1), the 2n-5 family reads d = n-2k
    const bool regime = row.table == Source::rows_2n4 ? (n - d) % 2 != 0 : (n - d) % 2 == 0;
    if (!regime || h < 4)
        return false;
    if (h == 4) {
        if (!row.h4)
            return false;
        const bool low = row.h4->strict ? d > row.h4->lower : d >= row.h4->lower;
        return low && d <= n - row.h4->upper_offset;
    }
    return parity_ok(row.parity, h) && d >= row.lower && d <= n - row.upper.at(h);
}

std::vector<Construction> table_constructions(Source table, Part n, Part d)
{
    check_nd(n, d);
    if (table == Source::small_d)
        throw Error(Errc::regime_mismatch, "not a table");
    std::vector<Construction> out;
    for (std::size_t i = 0; i < kFixed.size(); ++i)
        if (kFixed[i].source == table && kFixed[i].d_value(n) == d)
            out.push_back(build_fixed(i, n, d));

    const auto rows = family_rows(table);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const FamilyRow& row = rows[r];
        if (family_row_admits(row, n, d, 4))
            FamilyBuilder(row, r, n, d, 4).run(out);
        // the upper bound n - upper(h) only shrinks as h grows
        for (Part h = 5; d <= n - row.upper.at(h); ++h)
            if (family_row_admits(row, n, d, h))
                FamilyBuilder(row, r, n, d, h).run(out);
    }
    assert_no_duplicates(out, n, d);
    return out;
}

PartitionSet special_cases(Part n, Part d)
{
    return to_set(special_constructions(n, d));
}

PartitionSet family_2n4(Part n, Part d)
{
    check_nd(n, d);
    // the d = 3 row carries no parity condition
    if (!(d == 3 || ((n - d) % 2 != 0 && d >= 3 && d <= n - 7)))
        throw Error(Errc::regime_mismatch, "the 2n-4 family needs d = 3 or d = n-(2k-1) with 3 <= d <= n-7");
    return to_set(table_constructions(Source::rows_2n4, n, d));
}

PartitionSet family_2n5(Part n, Part d)
{
    check_nd(n, d);
    if (!((n - d) % 2 == 0 && d >= 4 && d <= n - 8))
        throw Error(Errc::regime_mismatch, "the 2n-5 family needs d = n-2k with 4 <= d <= n-8");
    return to_set(table_constructions(Source::rows_2n5, n, d));
}

std::vector<Construction> all_constructions(Part n, Part d)
{
    check_nd(n, d);
    if (special_regime(n, d))
        return special_constructions(n, d);
    if (d == 3 || (n - d) % 2 != 0)
        return table_constructions(Source::rows_2n4, n, d);
    return table_constructions(Source::rows_2n5, n, d);
}

PartitionSet construct_all_maximal(Part n, Part d)
{
    return to_set(all_constructions(n, d));
}

} // namespace unref
