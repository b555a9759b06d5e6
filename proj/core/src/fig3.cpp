// Reproduction of the table of #MU(N) for T_{n-1} <= N <= T_{n+1}, n even.
//
// The largest-part column is read in each row's own triangular index: the
// T_{n-1} row and the whole right column (T_{n+1,*}) only agree with the
// oracle that way. Count expressions are read with the literal n.

#include <map>

#include "json.hpp"
#include "unref/enumeration.hpp"
#include "unref/parallel.hpp"
#include "unref/verify.hpp"

namespace unref {

namespace {

enum class CountKind { constant, distinct, odd_distinct };

struct RowSpec {
    std::string column;
    std::string label;
    Part m;
    Part d;
    Part lambda_c;  // largest part 2m - lambda_c
    CountKind kind;
    Part arg;       // the constant, or the index of #D / #D^odd
    std::string count_expr;
};

RowSpec constant(std::string column, std::string label, Part m, Part d, Part c, Part value)
{
    return {std::move(column), std::move(label), m, d, c, CountKind::constant, value, std::to_string(value)};
}

void generic_rows(std::vector<RowSpec>& out, const std::string& column, Part m, Part d_hi, Part d_lo)
{
    const std::string top = column == "left" ? "n" : "n+1";
    const std::string sub = column == "left" ? "T_{n," : "T_{n+1,";
    for (Part d = d_hi; d >= d_lo; --d) {
        if ((m - d) % 2 != 0) {
            const Part k = (m - d + 1) / 2;
            out.push_back({column, sub + top + "-(2k-1)}", m, d, 4, CountKind::distinct, k + 1, "D_{k+1}"});
        } else {
            const Part k = (m - d) / 2;
            out.push_back({column, sub + top + "-2k}", m, d, 5, CountKind::odd_distinct, 2 * k + 2,
                           "D^odd_{2k+2}"});
        }
    }
}

std::vector<RowSpec> layout(Part n)
{
    std::vector<RowSpec> rows;
    const std::string L = "left", R = "right";

    rows.push_back({L, "T_{n-1}", n - 1, 0, 4, CountKind::distinct, n / 2, "D_{n/2}"});
    rows.push_back(constant(L, "T_{n,n-1}", n, n - 1, 4, 1));
    rows.push_back(constant(L, "T_{n,n-2}", n, n - 2, 5, 1));
    rows.push_back(constant(L, "T_{n,n-3}", n, n - 3, 4, 1));
    rows.push_back(constant(L, "T_{n,n-4}", n, n - 4, 5, 1));
    rows.push_back(constant(L, "T_{n,n-5}", n, n - 5, 4, 2));
    rows.push_back(constant(L, "T_{n,n-6}", n, n - 6, 5, 2));
    generic_rows(rows, L, n, n - 7, 5);
    rows.push_back({L, "T_{n,4}", n, 4, 5, CountKind::odd_distinct, n - 2, "D^odd_{n-2}"});
    rows.push_back({L, "T_{n,3}", n, 3, 4, CountKind::distinct, (n - 2) / 2, "D_{(n-2)/2}"});
    rows.push_back(constant(L, "T_{n,2}", n, 2, 3, 1));
    rows.push_back(constant(L, "T_{n,1}", n, 1, 2, 1));
    rows.push_back(constant(L, "T_n", n, 0, 4, 1));

    const Part m = n + 1;
    rows.push_back(constant(R, "T_n", n, 0, 4, 1));
    rows.push_back(constant(R, "T_{n+1,n}", m, n, 4, 1));
    rows.push_back(constant(R, "T_{n+1,n-1}", m, n - 1, 5, 1));
    rows.push_back(constant(R, "T_{n+1,n-2}", m, n - 2, 4, 1));
    rows.push_back(constant(R, "T_{n+1,n-3}", m, n - 3, 5, 1));
    rows.push_back(constant(R, "T_{n+1,n-4}", m, n - 4, 4, 2));
    rows.push_back(constant(R, "T_{n+1,n-5}", m, n - 5, 5, 2));
    generic_rows(rows, R, m, n - 6, 6);
    rows.push_back({R, "T_{n+1,5}", m, 5, 5, CountKind::odd_distinct, n - 2, "D^odd_{n-2}"});
    rows.push_back({R, "T_{n+1,4}", m, 4, 4, CountKind::distinct, (n - 2) / 2, "D_{(n-2)/2}"});
    rows.push_back(constant(R, "T_{n+1,3}", m, 3, 4, 1));
    rows.push_back(constant(R, "T_{n+1,2}", m, 2, 3, 1));
    rows.push_back(constant(R, "T_{n+1,1}", m, 1, 2, 1));
    rows.push_back({R, "T_{n+1}", m, 0, 4, CountKind::distinct, 1 + n / 2, "D_{1+n/2}"});
    return rows;
}

std::uint64_t evaluate(const RowSpec& s, Convention c)
{
    switch (s.kind) {
    case CountKind::constant: return static_cast<std::uint64_t>(s.arg);
    case CountKind::distinct: return count_d(s.arg, c);
    case CountKind::odd_distinct: return count_d_odd(s.arg, c);
    }
    return 0;
}

std::string instance_label(Part m, Part d)
{
    if (d == 0)
        return "T_{" + std::to_string(m) + "}";
    return "T_{" + std::to_string(m) + "," + std::to_string(d) + "}";
}

} // namespace

bool Fig3Table::passed() const
{
    for (const auto& r : rows)
        if (!r.ok)
            return false;
    return true;
}

Fig3Table fig3_table(Part n, bool check_oracle, unsigned jobs)
{
    if (n < 12 || n % 2 != 0)
        throw Error(Errc::out_of_range, "the table is defined for even n >= 12");
    const auto specs = layout(n);

    struct Observed {
        Part lambda;
        std::uint64_t count;
    };
    std::vector<Observed> seen;
    if (check_oracle) {
        seen = parallel_map<Observed>(specs.size(), jobs, [&](std::size_t i) {
            const Part total = triangular_number(specs[i].m) - specs[i].d;
            const Part lambda = max_last_part(total);
            const auto count = gen_maximal_unrefinable(total, [](const Partition&) { return true; });
            return Observed{lambda, static_cast<std::uint64_t>(count)};
        });
    }

    Fig3Table t;
    t.n = n;

    // #D templates are read per template, under whichever convention matches
    std::map<std::string, std::vector<Convention>> matching;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& key = specs[i].count_expr;
        if (!matching.count(key)) {
            std::vector<Convention> ok;
            for (Convention c : {Convention::at_least_two, Convention::at_least_one}) {
                bool all = true;
                for (std::size_t j = 0; j < specs.size() && check_oracle; ++j)
                    if (specs[j].count_expr == key && evaluate(specs[j], c) != seen[j].count)
                        all = false;
                if (all)
                    ok.push_back(c);
            }
            matching[key] = ok;
        }
    }

    for (std::size_t i = 0; i < specs.size(); ++i) {
        const RowSpec& s = specs[i];
        Fig3Row row;
        row.column = s.column;
        row.label = s.label;
        row.instance = instance_label(s.m, s.d);
        row.m = s.m;
        row.d = s.d;
        row.total = triangular_number(s.m) - s.d;
        row.lambda_expr = "2n-" + std::to_string(s.lambda_c);
        row.lambda_value = 2 * s.m - s.lambda_c;
        row.count_expr = s.count_expr;

        const auto& ok = matching[s.count_expr];
        const Convention used = ok.empty() ? Convention::at_least_two : ok.front();
        row.count_value = evaluate(s, used);
        if (s.kind == CountKind::distinct) {
            row.convention = to_string(used);
            if (!check_oracle)
                row.convention += " (unchecked)";
        }
        if (check_oracle) {
            row.oracle_lambda = seen[i].lambda;
            row.oracle_count = seen[i].count;
            row.ok = row.lambda_value == seen[i].lambda && row.count_value == seen[i].count;
        }
        t.rows.push_back(std::move(row));
    }

    t.notes.push_back("largest part read in each row's own triangular index (T_{n-1}: 2(n-1)-4; right column: 2(n+1)-c)");
    for (const auto& [key, ok] : matching) {
        if (key.rfind("D_", 0) != 0 || !check_oracle)
            continue;
        std::string note = key + ": ";
        if (ok.empty())
            note += "no convention matches the oracle";
        else if (ok.size() == 2)
            note += "both conventions match";
        else
            note += std::string("matches with #D read as ") + to_string(ok.front());
        t.notes.push_back(note);
    }
    return t;
}

std::string to_json(const Fig3Table& t)
{
    nlohmann::ordered_json j;
    j["n"] = t.n;
    j["verdict"] = t.passed() ? "pass" : "fail";
    j["notes"] = t.notes;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : t.rows) {
        nlohmann::ordered_json o;
        o["column"] = r.column;
        o["label"] = r.label;
        o["instance"] = r.instance;
        o["N"] = r.total;
        o["lambda_expr"] = r.lambda_expr;
        o["lambda_max"] = r.lambda_value;
        o["count_expr"] = r.count_expr;
        o["count"] = r.count_value ? nlohmann::ordered_json(*r.count_value) : nlohmann::ordered_json();
        if (!r.convention.empty())
            o["convention"] = r.convention;
        o["oracle_lambda_max"] = r.oracle_lambda ? nlohmann::ordered_json(*r.oracle_lambda) : nlohmann::ordered_json();
        o["oracle_count"] = r.oracle_count ? nlohmann::ordered_json(*r.oracle_count) : nlohmann::ordered_json();
        o["ok"] = r.ok;
        rows.push_back(std::move(o));
    }
    j["rows"] = std::move(rows);
    return j.dump(2);
}

VerificationReport fig3_report(const Fig3Table& t)
{
    VerificationReport r;
    r.suite = "fig3";
    r.scope = "n = " + std::to_string(t.n);
    r.notes = t.notes;
    for (const auto& row : t.rows) {
        CaseRecord c{"fig3:" + row.column, row.label, row.m, row.d, row.total};
        c.oracle_count = row.oracle_count;
        c.formula_count = row.count_value;
        c.bound_predicted = row.lambda_value;
        c.bound_observed = row.oracle_lambda;
        c.ok = row.ok;
        if (!c.ok)
            c.detail = row.instance + ": expected (" + std::to_string(row.lambda_value) + ", " +
                       std::to_string(row.count_value.value_or(0)) + ")";
        r.cases.push_back(std::move(c));
    }
    return r;
}

} // namespace unref
