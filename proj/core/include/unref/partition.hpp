#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unref/error.hpp"

namespace unref {

using Part = std::int64_t;

// A partition into distinct parts, stored ascending, with at least two parts.
// Immutable once built; the only way in is make_partition().
class Partition {
  public:
    std::span<const Part> parts() const noexcept { return parts_; }
    const std::vector<Part>& vec() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    Part last_part() const noexcept { return parts_.back(); }
    Part total() const noexcept { return total_; }
    Part operator[](std::size_t i) const { return parts_[i]; }
    bool contains(Part x) const noexcept;

    // lexicographic on the ascending part list
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

  private:
    Partition(std::vector<Part> parts, Part total) : parts_(std::move(parts)), total_(total) {}
    friend Partition make_partition(std::vector<Part> parts);

    std::vector<Part> parts_;
    Part total_;
};

// throws Error with duplicate_part / non_positive_part / unsorted_parts / too_few_parts
Partition make_partition(std::vector<Part> parts);

// non-throwing validation; empty optional means valid
std::optional<Errc> partition_defect(std::span<const Part> parts);

std::string to_string(const Partition& p);

struct MissingSet {
    std::vector<Part> values;
    std::size_t count() const noexcept { return values.size(); }
};

MissingSet missing_parts(const Partition& p);

// 1-based indices, as in the definition: mu_i + mu_j = lambda_l with i < j
struct RefinabilityWitness {
    std::size_t part_index;
    std::size_t first_missing;
    std::size_t second_missing;
    bool operator==(const RefinabilityWitness&) const = default;
};

std::optional<RefinabilityWitness> refinability_witness(const Partition& p);
bool is_unrefinable(const Partition& p);

// Same predicate on a raw ascending list of distinct positive parts; used by
// the generators so they can test before paying for a Partition.
bool parts_unrefinable(std::span<const Part> parts);

Part triangular_number(Part n);

struct TriangularForm {
    Part n;
    Part d;
    Part total() const { return triangular_number(n) - d; }
    bool is_triangular() const noexcept { return d == 0; }
    bool operator==(const TriangularForm&) const = default;
};

TriangularForm triangular_form(Part total);

// (1, ..., n) with d removed
Partition canonical_pi(Part n, Part d);

struct DeltaRecord {
    std::vector<Part> removed;
    std::vector<Part> added;
    bool operator==(const DeltaRecord&) const = default;
};

Partition apply_delta(const Partition& base, const DeltaRecord& delta);

// removed = base \ target, added = target \ base
DeltaRecord delta_between(const Partition& base, const Partition& target);

enum class Area { first, free, last };

Area area_of(Part value, Part last_part, Part n);
const char* to_string(Area a) noexcept;

} // namespace unref
