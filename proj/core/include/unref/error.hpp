#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unref {

enum class Errc {
    duplicate_part,
    non_positive_part,
    unsorted_parts,
    too_few_parts,
    out_of_range,
    removed_part_absent,
    added_part_present,
    delta_sum_mismatch,
    empty_unrefinable_set,
    regime_mismatch,
    malformed_form,
    not_maximal,
    invalid_odd_partition,
    outside_star_classes,
    construction_mismatch,
    bfile_unreadable,
    bfile_malformed,
    parse_error,
    overflow,
};

std::string_view to_string(Errc code) noexcept;

// every failure raised by the library carries one of the codes above
class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace unref
