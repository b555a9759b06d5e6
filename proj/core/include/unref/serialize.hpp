#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "unref/partition.hpp"

namespace unref {

// Partition <-> `[1,2,3]`, DeltaRecord <-> `{"removed":[..],"added":[..]}`.
// Parse failures throw Error(Errc::parse_error); invalid partitions keep
// their own make_partition error code.

std::string to_json(const Partition& p);
std::string to_json(const DeltaRecord& d);
std::string parts_to_json(const std::vector<Part>& parts);

Partition partition_from_json(std::string_view text);
DeltaRecord delta_from_json(std::string_view text);

} // namespace unref
