#include "unref/enumeration.hpp"

#include <algorithm>

#include "unref/checked.hpp"

namespace unref {

namespace {

void check_config(const EnumConfig& cfg)
{
    if (cfg.min_parts != 1 && cfg.min_parts != 2)
        throw Error(Errc::out_of_range, "min_parts must be 1 or 2");
}

void check_total(Part total)
{
    if (total < 1)
        throw Error(Errc::out_of_range, "N must be positive");
}

// Emission counter shared by the DFS walkers below.
struct Emitter {
    const RawSink& sink;
    std::optional<std::size_t> cap;
    std::size_t emitted = 0;
    bool stopped = false;

    void operator()(std::span<const Part> parts)
    {
        if (stopped)
            return;
        ++emitted;
        if (!sink(parts) || (cap && emitted >= *cap))
            stopped = true;
    }
};

// lex on ascending lists: extend with the smallest next part first, and the
// list that ends here (largest possible final part) comes last
void walk_lex(std::vector<Part>& buf, Part start, Part rem, int min_parts, Emitter& out)
{
    for (Part x = start; 2 * x + 1 <= rem && !out.stopped; ++x) {
        buf.push_back(x);
        walk_lex(buf, x + 1, rem - x, min_parts, out);
        buf.pop_back();
    }
    if (out.stopped || rem < start)
        return;
    if (static_cast<int>(buf.size()) + 1 >= min_parts) {
        buf.push_back(rem);
        out(buf);
        buf.pop_back();
    }
}

// colex = lex on the descending list: choose the largest part first, smallest
// candidates first. desc holds the descending prefix, asc is the emit buffer.
void walk_colex(std::vector<Part>& desc, std::vector<Part>& asc, Part below, Part rem, int min_parts,
                Emitter& out)
{
    if (rem == 0) {
        if (static_cast<int>(desc.size()) >= min_parts) {
            asc.assign(desc.rbegin(), desc.rend());
            out(asc);
        }
        return;
    }
    for (Part y = 1; y < below && y <= rem && !out.stopped; ++y) {
        if (rem - y > y * (y - 1) / 2)
            continue;
        desc.push_back(y);
        walk_colex(desc, asc, y, rem - y, min_parts, out);
        desc.pop_back();
    }
}

void walk_len(std::vector<Part>& buf, Part start, Part rem, std::size_t left, Emitter& out)
{
    if (left == 1) {
        if (rem >= start) {
            buf.push_back(rem);
            out(buf);
            buf.pop_back();
        }
        return;
    }
    const Part l = static_cast<Part>(left);
    for (Part x = start; x * l + l * (l - 1) / 2 <= rem && !out.stopped; ++x) {
        buf.push_back(x);
        walk_len(buf, x + 1, rem - x, left - 1, out);
        buf.pop_back();
    }
}

void walk_odd(std::vector<Part>& buf, Part start, Part rem, Emitter& out)
{
    // next odd part x, then at least one more odd part > x
    for (Part x = start; x + (x + 2) <= rem && !out.stopped; x += 2) {
        buf.push_back(x);
        walk_odd(buf, x + 2, rem - x, out);
        buf.pop_back();
    }
    if (out.stopped || rem < start || rem % 2 == 0 || buf.empty())
        return;
    buf.push_back(rem);
    out(buf);
    buf.pop_back();
}

// Backtracking over x = L-1, L-2, ..., 1 deciding "missing" or "part".
// Deciding x missing is refused when some committed part p has p-x > x
// already missing; when 0 < p-x < x the value p-x is forced to become a part.
class PrunedSearch {
  public:
    explicit PrunedSearch(Part total) : total_(total) {}

    // colex over all unrefinable partitions with last part L;
    // returns false if the emitter stopped
    bool run(Part last, Emitter& out)
    {
        const auto size = static_cast<std::size_t>(last) + 1;
        missing_.assign(size, 0);
        forced_.assign(size, 0);
        forced_sum_ = 0;
        desc_.assign(1, last);
        out_ = &out;
        rec(last - 1, total_ - last);
        return !out.stopped;
    }

  private:
    void rec(Part x, Part rem)
    {
        if (out_->stopped)
            return;
        if (rem == 0) {
            finish(x);
            return;
        }
        if (x == 0 || rem > x * (x + 1) / 2 || rem < forced_sum_)
            return;

        // missing first: keeps the descending lists in lex order
        if (!forced_[idx(x)] && can_be_missing(x)) {
            missing_[idx(x)] = 1;
            for (Part p : desc_) {
                const Part b = p - x;
                if (b > 0 && b < x && forced_[idx(b)]++ == 0)
                    forced_sum_ += b;
            }
            rec(x - 1, rem);
            for (Part p : desc_) {
                const Part b = p - x;
                if (b > 0 && b < x && --forced_[idx(b)] == 0)
                    forced_sum_ -= b;
            }
            missing_[idx(x)] = 0;
        }
        if (rem >= x) {
            const bool was_forced = forced_[idx(x)] > 0;
            if (was_forced)
                forced_sum_ -= x;
            desc_.push_back(x);
            rec(x - 1, rem - x);
            desc_.pop_back();
            if (was_forced)
                forced_sum_ += x;
        }
    }

    bool can_be_missing(Part x) const
    {
        for (Part p : desc_) {
            const Part b = p - x;
            if (b > x && missing_[idx(b)])
                return false;
        }
        return true;
    }

    // everything in 1..x becomes missing
    void finish(Part x)
    {
        if (forced_sum_ != 0 || desc_.size() < 2)
            return;
        for (Part p : desc_) {
            for (Part a = 1; a <= x && a < p; ++a) {
                const Part b = p - a;
                if (b != a && (b <= x || missing_[idx(b)]))
                    return;
            }
        }
        asc_.assign(desc_.rbegin(), desc_.rend());
        (*out_)(asc_);
    }

    static std::size_t idx(Part v) { return static_cast<std::size_t>(v); }

    Part total_;
    std::vector<char> missing_;
    std::vector<int> forced_;
    Part forced_sum_ = 0;
    std::vector<Part> desc_;
    std::vector<Part> asc_;
    Emitter* out_ = nullptr;
};

RawSink partition_adapter(const Sink<Partition>& sink)
{
    return [&sink](std::span<const Part> parts) {
        return sink(make_partition(std::vector<Part>(parts.begin(), parts.end())));
    };
}

template <typename F> std::vector<Partition> collect(F&& gen)
{
    std::vector<Partition> out;
    gen([&out](const Partition& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

} // namespace

std::size_t visit_distinct(Part total, const EnumConfig& cfg, const RawSink& sink)
{
    check_config(cfg);
    check_total(total);
    Emitter out{sink, cfg.max_items};
    if (cfg.max_items && *cfg.max_items == 0)
        return 0;
    std::vector<Part> buf;
    if (cfg.order == Order::lex) {
        walk_lex(buf, 1, total, cfg.min_parts, out);
    } else {
        std::vector<Part> asc;
        walk_colex(buf, asc, total + 1, total, cfg.min_parts, out);
    }
    return out.emitted;
}

std::size_t gen_distinct(Part total, const EnumConfig& cfg, const Sink<DistinctItem>& sink)
{
    return visit_distinct(total, cfg, [&sink](std::span<const Part> parts) {
        if (parts.size() == 1)
            return sink(DistinctItem{SinglePart{parts[0]}});
        return sink(DistinctItem{make_partition(std::vector<Part>(parts.begin(), parts.end()))});
    });
}

std::size_t gen_distinct_len(Part total, std::size_t s, const Sink<Partition>& sink)
{
    check_total(total);
    if (s < 2)
        throw Error(Errc::out_of_range, "gen_distinct_len needs s >= 2");
    const RawSink raw = partition_adapter(sink);
    Emitter out{raw, std::nullopt};
    std::vector<Part> buf;
    walk_len(buf, 1, total, s, out);
    return out.emitted;
}

std::size_t gen_distinct_odd(Part total, const Sink<Partition>& sink)
{
    check_total(total);
    const RawSink raw = partition_adapter(sink);
    Emitter out{raw, std::nullopt};
    std::vector<Part> buf;
    walk_odd(buf, 1, total, out);
    return out.emitted;
}

std::size_t gen_unrefinable(Part total, Strategy strategy, const Sink<Partition>& sink,
                            const EnumConfig& cfg)
{
    check_config(cfg);
    check_total(total);
    if (cfg.max_items && *cfg.max_items == 0)
        return 0;

    if (strategy == Strategy::brute_filter) {
        EnumConfig walk = cfg;
        walk.max_items.reset();
        std::size_t emitted = 0;
        visit_distinct(total, walk, [&](std::span<const Part> parts) {
            if (!parts_unrefinable(parts))
                return true;
            ++emitted;
            const bool more = sink(make_partition(std::vector<Part>(parts.begin(), parts.end())));
            return more && !(cfg.max_items && emitted >= *cfg.max_items);
        });
        return emitted;
    }

    if (cfg.order == Order::colex) {
        const RawSink raw = partition_adapter(sink);
        Emitter out{raw, cfg.max_items};
        PrunedSearch search(total);
        for (Part last = 2; last < total && search.run(last, out); ++last) {
        }
        return out.emitted;
    }

    EnumConfig colex = cfg;
    colex.order = Order::colex;
    colex.max_items.reset();
    std::vector<Partition> all;
    gen_unrefinable(total, strategy, [&all](const Partition& p) {
        all.push_back(p);
        return true;
    }, colex);
    std::sort(all.begin(), all.end());
    std::size_t emitted = 0;
    for (const auto& p : all) {
        ++emitted;
        if (!sink(p) || (cfg.max_items && emitted >= *cfg.max_items))
            break;
    }
    return emitted;
}

Part max_last_part(Part total)
{
    check_total(total);
    const RawSink stop_at_first = [](std::span<const Part>) { return false; };
    PrunedSearch search(total);
    for (Part last = total - 1; last >= 2; --last) {
        Emitter out{stop_at_first, std::nullopt};
        search.run(last, out);
        if (out.emitted)
            return last;
    }
    throw Error(Errc::empty_unrefinable_set, "no unrefinable partition of " + std::to_string(total));
}

std::size_t gen_maximal_unrefinable(Part total, const Sink<Partition>& sink)
{
    const Part last = max_last_part(total);
    const RawSink raw = partition_adapter(sink);
    Emitter out{raw, std::nullopt};
    PrunedSearch(total).run(last, out);
    return out.emitted;
}

std::vector<DistinctItem> distinct_items(Part total, const EnumConfig& cfg)
{
    std::vector<DistinctItem> out;
    gen_distinct(total, cfg, [&out](const DistinctItem& item) {
        out.push_back(item);
        return true;
    });
    return out;
}

std::vector<Partition> distinct_partitions(Part total)
{
    std::vector<Partition> out;
    visit_distinct(total, {}, [&out](std::span<const Part> parts) {
        out.push_back(make_partition(std::vector<Part>(parts.begin(), parts.end())));
        return true;
    });
    return out;
}

std::vector<Partition> distinct_partitions_len(Part total, std::size_t s)
{
    return collect([&](const Sink<Partition>& sink) { gen_distinct_len(total, s, sink); });
}

std::vector<Partition> odd_distinct_partitions(Part total)
{
    return collect([&](const Sink<Partition>& sink) { gen_distinct_odd(total, sink); });
}

std::vector<Partition> unrefinable_partitions(Part total, Strategy strategy)
{
    return collect([&](const Sink<Partition>& sink) { gen_unrefinable(total, strategy, sink); });
}

std::vector<Partition> maximal_unrefinable_partitions(Part total)
{
    auto out = collect([&](const Sink<Partition>& sink) { gen_maximal_unrefinable(total, sink); });
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// 0/1 knapsack over the allowed parts; q[s] = #distinct-part lists of s
std::vector<std::uint64_t> knapsack(Part total, Part first, Part step)
{
    std::vector<std::uint64_t> q(static_cast<std::size_t>(total) + 1, 0);
    q[0] = 1;
    for (Part k = first; k <= total; k += step)
        for (Part s = total; s >= k; --s)
            q[static_cast<std::size_t>(s)] =
                checked_add(q[static_cast<std::size_t>(s)], q[static_cast<std::size_t>(s - k)]);
    return q;
}

} // namespace

std::uint64_t count_distinct(Part total, const EnumConfig& cfg)
{
    check_config(cfg);
    check_total(total);
    const std::uint64_t all = knapsack(total, 1, 1).back();
    return cfg.min_parts == 2 ? all - 1 : all;
}

std::uint64_t count_distinct_odd(Part total, int min_parts)
{
    check_config(EnumConfig{min_parts});
    check_total(total);
    const std::uint64_t all = knapsack(total, 1, 2).back();
    return (min_parts == 2 && total % 2 == 1) ? all - 1 : all;
}

std::uint64_t count_distinct_len(Part total, std::size_t s)
{
    check_total(total);
    const auto n = static_cast<std::size_t>(total);
    // dp[j][v]: lists of j distinct parts from those seen so far summing to v
    std::vector<std::vector<std::uint64_t>> dp(s + 1, std::vector<std::uint64_t>(n + 1, 0));
    dp[0][0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        for (std::size_t j = s; j >= 1; --j)
            for (std::size_t v = n; v >= k; --v)
                dp[j][v] = checked_add(dp[j][v], dp[j - 1][v - k]);
    return dp[s][n];
}

} // namespace unref
