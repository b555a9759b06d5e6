#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "unref/partition.hpp"

namespace unref {

// All families use the t >= 2 convention.
enum class Family { distinct, odd_distinct, unrefinable, maximal_unrefinable };

const char* to_string(Family f) noexcept;
std::optional<Family> family_from_string(std::string_view s);

// #D_N, #D^odd_N, #U_N, #MU_N by family and N. Stored as CSV rows
// `family,N,count` under a header line; the cache is advisory.
class CountTable {
  public:
    using Key = std::pair<Family, Part>;

    void set(Family f, Part total, std::uint64_t count) { rows_[{f, total}] = count; }
    std::optional<std::uint64_t> get(Family f, Part total) const;
    const std::map<Key, std::uint64_t>& rows() const noexcept { return rows_; }
    std::size_t size() const noexcept { return rows_.size(); }

    std::string to_csv() const;
    static CountTable from_csv(std::string_view text);
    void save(const std::filesystem::path& path) const;
    static CountTable load(const std::filesystem::path& path);

  private:
    std::map<Key, std::uint64_t> rows_;
};

// DP for distinct/odd, generator cardinality for the unrefinable families.
std::uint64_t count_family(Family f, Part total);

CountTable build_count_table(Part from, Part to, std::span<const Family> families, unsigned jobs = 1);

} // namespace unref
