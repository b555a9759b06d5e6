#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "unref/partition.hpp"

namespace unref {

enum class Order { lex, colex };
enum class Strategy { brute_filter, pruned_search };

struct EnumConfig {
    int min_parts = 2;  // 1 or 2; 1 also admits the single-part list (N)
    Order order = Order::lex;
    std::optional<std::size_t> max_items;
};

// A single-part list is not a Partition (t >= 2), so it travels separately.
struct SinglePart {
    Part value;
    bool operator==(const SinglePart&) const = default;
};
using DistinctItem = std::variant<Partition, SinglePart>;

// Sinks return false to stop the stream early. Every generator returns the
// number of items it emitted and may be called again to restart.
template <typename T> using Sink = std::function<bool(const T&)>;
using RawSink = std::function<bool(std::span<const Part>)>;

// Ascending distinct part lists summing to total, no Partition objects built.
std::size_t visit_distinct(Part total, const EnumConfig& cfg, const RawSink& sink);

std::size_t gen_distinct(Part total, const EnumConfig& cfg, const Sink<DistinctItem>& sink);
std::size_t gen_distinct_len(Part total, std::size_t s, const Sink<Partition>& sink);
std::size_t gen_distinct_odd(Part total, const Sink<Partition>& sink);

// Brute filter follows cfg.order. The pruned search walks colex natively;
// asking it for lex buffers the whole set and sorts it.
std::size_t gen_unrefinable(Part total, Strategy strategy, const Sink<Partition>& sink,
                            const EnumConfig& cfg = {});

// Throws Errc::empty_unrefinable_set when U_N has no element.
Part max_last_part(Part total);
std::size_t gen_maximal_unrefinable(Part total, const Sink<Partition>& sink);

// Collecting helpers; all return lex order.
std::vector<DistinctItem> distinct_items(Part total, const EnumConfig& cfg = {});
std::vector<Partition> distinct_partitions(Part total);
std::vector<Partition> distinct_partitions_len(Part total, std::size_t s);
std::vector<Partition> odd_distinct_partitions(Part total);
std::vector<Partition> unrefinable_partitions(Part total, Strategy strategy = Strategy::pruned_search);
std::vector<Partition> maximal_unrefinable_partitions(Part total);

// Dynamic-programming counts.
std::uint64_t count_distinct(Part total, const EnumConfig& cfg = {});
std::uint64_t count_distinct_odd(Part total, int min_parts = 2);
std::uint64_t count_distinct_len(Part total, std::size_t s);

} // namespace unref
