#include "unref/count_table.hpp"

#include <fstream>
#include <sstream>

#include "unref/enumeration.hpp"
#include "unref/parallel.hpp"

namespace unref {

const char* to_string(Family f) noexcept
{
    switch (f) {
    case Family::distinct: return "distinct";
    case Family::odd_distinct: return "odd_distinct";
    case Family::unrefinable: return "unrefinable";
    case Family::maximal_unrefinable: return "maximal_unrefinable";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view s)
{
    for (Family f : {Family::distinct, Family::odd_distinct, Family::unrefinable,
                     Family::maximal_unrefinable})
        if (s == to_string(f))
            return f;
    return std::nullopt;
}

std::optional<std::uint64_t> CountTable::get(Family f, Part total) const
{
    auto it = rows_.find({f, total});
    if (it == rows_.end())
        return std::nullopt;
    return it->second;
}

std::string CountTable::to_csv() const
{
    std::string out = "family,N,count\n";
    for (const auto& [key, count] : rows_)
        out += std::string(to_string(key.first)) + "," + std::to_string(key.second) + "," +
               std::to_string(count) + "\n";
    return out;
}

CountTable CountTable::from_csv(std::string_view text)
{
    CountTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line == "family,N,count")
            continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        const auto fam = family_from_string(line.substr(0, c1));
        if (c2 == std::string::npos || !fam)
            throw Error(Errc::parse_error, "count table line " + std::to_string(lineno) + ": " + line);
        try {
            std::size_t used = 0;
            const std::string n_text = line.substr(c1 + 1, c2 - c1 - 1);
            const std::string c_text = line.substr(c2 + 1);
            const Part n = std::stoll(n_text, &used);
            if (used != n_text.size())
                throw std::invalid_argument("N");
            const std::uint64_t c = std::stoull(c_text, &used);
            if (used != c_text.size() || c_text.front() == '-')
                throw std::invalid_argument("count");
            table.set(*fam, n, c);
        } catch (const std::logic_error&) {
            throw Error(Errc::parse_error, "count table line " + std::to_string(lineno) + ": " + line);
        }
    }
    return table;
}

void CountTable::save(const std::filesystem::path& path) const
{
    std::ofstream out(path);
    out << to_csv();
    if (!out)
        throw Error(Errc::parse_error, "cannot write " + path.string());
}

CountTable CountTable::load(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse_error, "cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv(buf.str());
}

std::uint64_t count_family(Family f, Part total)
{
    switch (f) {
    case Family::distinct: return count_distinct(total);
    case Family::odd_distinct: return count_distinct_odd(total);
    case Family::unrefinable:
        if (total < 3)
            return 0;
        return gen_unrefinable(total, Strategy::pruned_search, [](const Partition&) { return true; },
                               EnumConfig{2, Order::colex, std::nullopt});
    case Family::maximal_unrefinable:
        if (total < 3)
            return 0;
        return gen_maximal_unrefinable(total, [](const Partition&) { return true; });
    }
    return 0;
}

CountTable build_count_table(Part from, Part to, std::span<const Family> families, unsigned jobs)
{
    if (from < 1 || to < from)
        throw Error(Errc::out_of_range, "count range must satisfy 1 <= from <= to");
    const auto width = static_cast<std::size_t>(to - from + 1);
    const auto counts = parallel_map<std::uint64_t>(width * families.size(), jobs, [&](std::size_t i) {
        return count_family(families[i / width], from + static_cast<Part>(i % width));
    });
    CountTable table;
    for (std::size_t i = 0; i < counts.size(); ++i)
        table.set(families[i / width], from + static_cast<Part>(i % width), counts[i]);
    return table;
}

} // namespace unref
