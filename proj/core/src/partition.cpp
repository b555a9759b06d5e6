#include "unref/partition.hpp"

#include <algorithm>
#include <numeric>

#include "unref/checked.hpp"

namespace unref {

bool Partition::contains(Part x) const noexcept
{
    return std::binary_search(parts_.begin(), parts_.end(), x);
}

std::optional<Errc> partition_defect(std::span<const Part> parts)
{
    // order of checks matters: [1,3,3] is a duplicate, not "unsorted"
    for (Part x : parts)
        if (x <= 0)
            return Errc::non_positive_part;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] == parts[i - 1])
            return Errc::duplicate_part;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] < parts[i - 1])
            return Errc::unsorted_parts;
    if (parts.size() < 2)
        return Errc::too_few_parts;
    return std::nullopt;
}

Partition make_partition(std::vector<Part> parts)
{
    if (auto e = partition_defect(parts)) {
        std::string msg;
        switch (*e) {
        case Errc::non_positive_part: msg = "parts must be positive"; break;
        case Errc::duplicate_part: msg = "duplicate part"; break;
        case Errc::unsorted_parts: msg = "parts must be strictly increasing"; break;
        default: msg = "a partition needs at least two parts"; break;
        }
        throw Error(*e, msg);
    }
    Part total = 0;
    for (Part x : parts)
        total = checked_add(total, x);
    return Partition(std::move(parts), total);
}

std::string to_string(const Partition& p)
{
    std::string s = "(";
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            s += ',';
        s += std::to_string(p[i]);
    }
    return s + ")";
}

MissingSet missing_parts(const Partition& p)
{
    MissingSet m;
    Part next = 1;
    for (Part x : p.parts()) {
        for (; next < x; ++next)
            m.values.push_back(next);
        next = x + 1;
    }
    return m;
}

std::optional<RefinabilityWitness> refinability_witness(const Partition& p)
{
    const MissingSet m = missing_parts(p);
    // index of each missing value, 0 if it is a part
    std::vector<std::size_t> where(static_cast<std::size_t>(p.last_part()) + 1, 0);
    for (std::size_t i = 0; i < m.count(); ++i)
        where[static_cast<std::size_t>(m.values[i])] = i + 1;

    for (std::size_t l = 0; l < p.length(); ++l) {
        const Part target = p[l];
        for (std::size_t i = 0; i < m.count(); ++i) {
            const Part a = m.values[i];
            const Part b = target - a;
            if (b <= a)
                break;
            if (where[static_cast<std::size_t>(b)])
                return RefinabilityWitness{l + 1, i + 1, where[static_cast<std::size_t>(b)]};
        }
    }
    return std::nullopt;
}

bool is_unrefinable(const Partition& p)
{
    return parts_unrefinable(p.parts());
}

bool parts_unrefinable(std::span<const Part> parts)
{
    if (parts.empty())
        return true;
    const Part top = parts.back();
    std::vector<char> present(static_cast<std::size_t>(top) + 1, 0);
    for (Part x : parts)
        present[static_cast<std::size_t>(x)] = 1;
    for (Part p : parts)
        for (Part a = 1; 2 * a < p; ++a)
            if (!present[static_cast<std::size_t>(a)] && !present[static_cast<std::size_t>(p - a)])
                return false;
    return true;
}

Part triangular_number(Part n)
{
    if (n < 0)
        throw Error(Errc::out_of_range, "triangular number of a negative index");
    return checked_mul(n, checked_add(n, Part{1})) / 2;
}

TriangularForm triangular_form(Part total)
{
    if (total < 3)
        throw Error(Errc::out_of_range, "triangular_form needs N >= 3");
    Part n = 1;
    while (triangular_number(n) < total)
        ++n;
    return TriangularForm{n, triangular_number(n) - total};
}

Partition canonical_pi(Part n, Part d)
{
    if (n < 3 || d < 1 || d > n - 1)
        throw Error(Errc::out_of_range, "canonical_pi needs n >= 3 and 1 <= d <= n-1");
    std::vector<Part> parts;
    parts.reserve(static_cast<std::size_t>(n - 1));
    for (Part x = 1; x <= n; ++x)
        if (x != d)
            parts.push_back(x);
    return make_partition(std::move(parts));
}

namespace {

std::vector<Part> sorted_copy(std::vector<Part> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

Part sum_of(const std::vector<Part>& v)
{
    Part s = 0;
    for (Part x : v)
        s = checked_add(s, x);
    return s;
}

} // namespace

Partition apply_delta(const Partition& base, const DeltaRecord& delta)
{
    const auto removed = sorted_copy(delta.removed);
    const auto added = sorted_copy(delta.added);
    for (Part x : removed)
        if (!base.contains(x))
            throw Error(Errc::removed_part_absent,
                        "removed value " + std::to_string(x) + " is not a part of " + to_string(base));
    for (Part x : added)
        if (base.contains(x))
            throw Error(Errc::added_part_present,
                        "added value " + std::to_string(x) + " is already a part of " + to_string(base));
    if (sum_of(removed) != sum_of(added))
        throw Error(Errc::delta_sum_mismatch, "removed and added parts have different sums");

    std::vector<Part> kept;
    std::set_difference(base.vec().begin(), base.vec().end(), removed.begin(), removed.end(),
                        std::back_inserter(kept));
    std::vector<Part> out;
    std::merge(kept.begin(), kept.end(), added.begin(), added.end(), std::back_inserter(out));
    return make_partition(std::move(out));
}

DeltaRecord delta_between(const Partition& base, const Partition& target)
{
    DeltaRecord d;
    std::set_difference(base.vec().begin(), base.vec().end(), target.vec().begin(), target.vec().end(),
                        std::back_inserter(d.removed));
    std::set_difference(target.vec().begin(), target.vec().end(), base.vec().begin(), base.vec().end(),
                        std::back_inserter(d.added));
    return d;
}

Area area_of(Part value, Part last_part, Part n)
{
    if (value < 1 || value > last_part - 1 || last_part <= n || last_part > 2 * n - 2)
        throw Error(Errc::out_of_range, "area_of needs 1 <= value < last_part and n < last_part <= 2n-2");
    if (value <= last_part - n - 1)
        return Area::first;
    if (value <= n)
        return Area::free;
    return Area::last;
}

const char* to_string(Area a) noexcept
{
    switch (a) {
    case Area::first: return "first";
    case Area::free: return "free";
    case Area::last: return "last";
    }
    return "?";
}

} // namespace unref
