#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "unref/count_table.hpp"
#include "unref/verify.hpp"

namespace unref {

namespace {

template <typename T> bool parse_int(const std::string& s, T& out)
{
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

// offsets tried when lining the b-file up against our N
constexpr std::int64_t kMaxShift = 10;

} // namespace

BFile parse_bfile(const std::string& text)
{
    BFile b;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream fields(line);
        std::string idx, val, extra;
        if (!(fields >> idx))
            continue;
        std::int64_t i = 0;
        std::uint64_t v = 0;
        if (!(fields >> val) || (fields >> extra) || !parse_int(idx, i) || !parse_int(val, v))
            throw Error(Errc::bfile_malformed, "b-file line " + std::to_string(lineno) + " is not `index value`");
        b.entries.emplace_back(i, v);
    }
    return b;
}

BFile read_bfile(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::bfile_unreadable, "cannot read b-file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bfile(buf.str());
}

VerificationReport oeis_compare(const std::filesystem::path& bfile, Part n_max, unsigned jobs)
{
    return oeis_compare(read_bfile(bfile), n_max, jobs);
}

VerificationReport oeis_compare(const BFile& bfile, Part n_max, unsigned jobs)
{
    if (n_max < 3)
        throw Error(Errc::out_of_range, "oeis comparison needs N_max >= 3");
    const Family fam[] = {Family::unrefinable};
    const CountTable ours = build_count_table(3, n_max, fam, jobs);

    std::map<std::int64_t, std::uint64_t> theirs;
    for (const auto& [i, v] : bfile.entries)
        theirs[i] = v;

    // best shift: most agreements, then the smallest |shift|, then positive
    std::int64_t best = 0;
    std::size_t best_hits = 0, best_overlap = 0;
    bool found = false;
    for (std::int64_t mag = 0; mag <= kMaxShift; ++mag) {
        for (std::int64_t shift : {mag, -mag}) {
            if (mag == 0 && shift < 0)
                continue;
            std::size_t hits = 0, overlap = 0;
            for (Part total = 3; total <= n_max; ++total) {
                auto it = theirs.find(total + shift);
                if (it == theirs.end())
                    continue;
                ++overlap;
                hits += *ours.get(Family::unrefinable, total) == it->second;
            }
            if (overlap && (!found || hits > best_hits)) {
                found = true;
                best = shift;
                best_hits = hits;
                best_overlap = overlap;
            }
        }
    }

    VerificationReport r;
    r.suite = "oeis";
    r.scope = "N in [3," + std::to_string(n_max) + "]";
    r.notes.push_back("#U_N under the t>=2 convention; N < 3 has no such partition and is left out");
    if (!found) {
        CaseRecord c{"alignment", "b-file"};
        c.ok = false;
        c.detail = "no b-file index overlaps N in [3, N_max] for any shift in [-10, 10]";
        r.cases.push_back(std::move(c));
        return r;
    }
    r.notes.push_back("auto-detected alignment: b-file index = N " +
                      std::string(best < 0 ? "- " : "+ ") + std::to_string(best < 0 ? -best : best) +
                      " (" + std::to_string(best_hits) + "/" + std::to_string(best_overlap) + " agree)");

    for (Part total = 3; total <= n_max; ++total) {
        CaseRecord c{"oeis", "N=" + std::to_string(total)};
        c.total = total;
        c.oracle_count = *ours.get(Family::unrefinable, total);
        auto it = theirs.find(total + best);
        if (it == theirs.end()) {
            c.detail = "not covered by the b-file";
        } else {
            c.formula_count = it->second;
            c.ok = c.oracle_count == c.formula_count;
            if (!c.ok)
                c.detail = "ours " + std::to_string(*c.oracle_count) + ", b-file " + std::to_string(it->second);
        }
        r.cases.push_back(std::move(c));
    }
    return r;
}

} // namespace unref
