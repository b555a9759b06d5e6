#include "unref/error.hpp"

namespace unref {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::duplicate_part: return "duplicate_part";
    case Errc::non_positive_part: return "non_positive_part";
    case Errc::unsorted_parts: return "unsorted_parts";
    case Errc::too_few_parts: return "too_few_parts";
    case Errc::out_of_range: return "out_of_range";
    case Errc::removed_part_absent: return "removed_part_absent";
    case Errc::added_part_present: return "added_part_present";
    case Errc::delta_sum_mismatch: return "delta_sum_mismatch";
    case Errc::empty_unrefinable_set: return "empty_unrefinable_set";
    case Errc::regime_mismatch: return "regime_mismatch";
    case Errc::malformed_form: return "malformed_form";
    case Errc::not_maximal: return "not_maximal";
    case Errc::invalid_odd_partition: return "invalid_odd_partition";
    case Errc::outside_star_classes: return "outside_star_classes";
    case Errc::construction_mismatch: return "construction_mismatch";
    case Errc::bfile_unreadable: return "bfile_unreadable";
    case Errc::bfile_malformed: return "bfile_malformed";
    case Errc::parse_error: return "parse_error";
    case Errc::overflow: return "overflow";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(what), code_(code)
{
}

} // namespace unref
