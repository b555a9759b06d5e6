#pragma once

#include <vector>

#include "oracle.hpp"
#include "unref/constructions.hpp"
#include "unref/partition.hpp"

inline std::vector<oracle::List> lists(const std::vector<unref::Partition>& ps)
{
    std::vector<oracle::List> out;
    for (const auto& p : ps)
        out.push_back(p.vec());
    return out;
}

inline std::vector<oracle::List> lists(const unref::PartitionSet& ps)
{
    std::vector<oracle::List> out;
    for (const auto& p : ps)
        out.push_back(p.vec());
    return out;
}
