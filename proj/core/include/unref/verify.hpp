#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "unref/partition.hpp"

namespace unref {

// How #D_k is read: without the single part (t >= 2) or with it (t >= 1).
enum class Convention { at_least_two, at_least_one };
const char* to_string(Convention c) noexcept;

std::uint64_t count_d(Part k, Convention c);
std::uint64_t count_d_odd(Part k, Convention c);

struct CaseRecord {
    std::string check;  // which statement or invariant this case belongs to
    std::string label;  // e.g. T_{12,3}
    Part n = 0;
    Part d = 0;
    Part total = 0;
    std::optional<std::uint64_t> oracle_count;
    std::optional<std::uint64_t> formula_count;
    std::optional<Part> bound_predicted;
    std::optional<Part> bound_observed;
    bool ok = true;
    std::string detail;  // witness on failure: offending partition or both counts
};

struct VerificationReport {
    std::string suite;
    std::string scope;
    std::vector<CaseRecord> cases;
    std::vector<std::string> notes;

    bool passed() const;
    std::size_t failures() const;
};

std::string to_json(const VerificationReport& r);
VerificationReport combine(const std::string& suite, const std::vector<VerificationReport>& parts);

// One counting statement checked under both #D conventions.
struct StatementResult {
    std::string name;
    std::string formula;
    std::vector<Convention> matching;  // conventions under which every instance agrees
    std::vector<CaseRecord> cases;     // evaluated with the selected convention
    bool passed() const { return !matching.empty(); }
};

// Statements: "singleton", "count_2n4", "count_2n5",
// "main_d3_even", "triangular"; instances n in [11, n_max].
std::vector<StatementResult> count_statements(Part n_max, unsigned jobs = 1);

VerificationReport verify_bounds(Part n_max, unsigned jobs = 1);
VerificationReport verify_counts(Part n_max, unsigned jobs = 1);
VerificationReport verify_equivalence(Part n_max, unsigned jobs = 1);

struct Fig3Row {
    std::string column;      // "left" or "right"
    std::string label;       // as printed, e.g. T_{n,n-5}
    std::string instance;    // e.g. T_{12,7}
    Part m = 0;              // triangular index of the row
    Part d = 0;
    Part total = 0;
    std::string lambda_expr; // in the row's own index
    Part lambda_value = 0;
    std::string count_expr;
    std::optional<std::uint64_t> count_value;
    std::string convention;  // how a #D template was read
    std::optional<Part> oracle_lambda;
    std::optional<std::uint64_t> oracle_count;
    bool ok = true;
};

struct Fig3Table {
    Part n = 0;
    std::vector<Fig3Row> rows;
    std::vector<std::string> notes;
    bool passed() const;
};

Fig3Table fig3_table(Part n, bool check_oracle = true, unsigned jobs = 1);
std::string to_json(const Fig3Table& t);
VerificationReport fig3_report(const Fig3Table& t);

struct BFile {
    std::vector<std::pair<std::int64_t, std::uint64_t>> entries;
};

BFile parse_bfile(const std::string& text);
BFile read_bfile(const std::filesystem::path& path);

VerificationReport oeis_compare(const std::filesystem::path& bfile, Part n_max, unsigned jobs = 1);
VerificationReport oeis_compare(const BFile& bfile, Part n_max, unsigned jobs = 1);

} // namespace unref
