#include "unref/verify.hpp"

#include <algorithm>

#include "json.hpp"
#include "unref/bijections.hpp"
#include "unref/constructions.hpp"
#include "unref/enumeration.hpp"
#include "unref/parallel.hpp"

namespace unref {

const char* to_string(Convention c) noexcept
{
    return c == Convention::at_least_two ? "t>=2" : "t>=1";
}

std::uint64_t count_d(Part k, Convention c)
{
    if (k < 1)
        return 0;
    return count_distinct(k, EnumConfig{c == Convention::at_least_two ? 2 : 1});
}

std::uint64_t count_d_odd(Part k, Convention c)
{
    if (k < 1)
        return 0;
    return count_distinct_odd(k, c == Convention::at_least_two ? 2 : 1);
}

bool VerificationReport::passed() const
{
    return failures() == 0;
}

std::size_t VerificationReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.ok; }));
}

namespace {

using nlohmann::ordered_json;

std::string t_label(Part n, Part d)
{
    if (d == 0)
        return "T_{" + std::to_string(n) + "}";
    return "T_{" + std::to_string(n) + "," + std::to_string(d) + "}";
}

template <typename T> void put_opt(ordered_json& j, const char* key, const std::optional<T>& v)
{
    if (v)
        j[key] = *v;
    else
        j[key] = nullptr;
}

ordered_json case_json(const CaseRecord& c)
{
    ordered_json j;
    j["check"] = c.check;
    j["label"] = c.label;
    j["n"] = c.n;
    j["d"] = c.d;
    j["N"] = c.total;
    put_opt(j, "oracle_count", c.oracle_count);
    put_opt(j, "formula_count", c.formula_count);
    put_opt(j, "bound_predicted", c.bound_predicted);
    put_opt(j, "bound_observed", c.bound_observed);
    j["ok"] = c.ok;
    if (!c.detail.empty())
        j["detail"] = c.detail;
    return j;
}

std::vector<std::pair<Part, Part>> sweep(Part n_max, Part d_min)
{
    if (n_max < 11)
        throw Error(Errc::out_of_range, "sweeps start at n = 11; n_max must be >= 11");
    std::vector<std::pair<Part, Part>> out;
    for (Part n = 11; n <= n_max; ++n)
        for (Part d = d_min; d <= n - 1; ++d)
            out.emplace_back(n, d);
    return out;
}

std::string scope_text(Part n_max, const char* d_range)
{
    return "n in [11," + std::to_string(n_max) + "], d in " + d_range;
}

std::string first_difference(const PartitionSet& a, const PartitionSet& b, const char* a_name,
                             const char* b_name)
{
    for (const auto& p : a)
        if (!b.count(p))
            return to_string(p) + " in " + a_name + " only";
    for (const auto& p : b)
        if (!a.count(p))
            return to_string(p) + " in " + b_name + " only";
    return {};
}

} // namespace

std::string to_json(const VerificationReport& r)
{
    ordered_json j;
    j["suite"] = r.suite;
    j["scope"] = r.scope;
    j["verdict"] = r.passed() ? "pass" : "fail";
    j["failures"] = r.failures();
    j["notes"] = r.notes;
    ordered_json cases = ordered_json::array();
    for (const auto& c : r.cases)
        cases.push_back(case_json(c));
    j["cases"] = std::move(cases);
    return j.dump(2);
}

VerificationReport combine(const std::string& suite, const std::vector<VerificationReport>& parts)
{
    VerificationReport out;
    out.suite = suite;
    for (const auto& p : parts) {
        out.scope += (out.scope.empty() ? "" : "; ") + p.suite + ": " + p.scope;
        out.cases.insert(out.cases.end(), p.cases.begin(), p.cases.end());
        for (const auto& note : p.notes)
            out.notes.push_back(p.suite + ": " + note);
    }
    return out;
}

VerificationReport verify_bounds(Part n_max, unsigned jobs)
{
    const auto cells = sweep(n_max, 1);
    auto per_cell = parallel_map<std::vector<CaseRecord>>(cells.size(), jobs, [&](std::size_t i) {
        const auto [n, d] = cells[i];
        const Part total = triangular_number(n) - d;

        CaseRecord bound{"bound", t_label(n, d), n, d, total};
        bound.bound_predicted = predicted_max_last_part(n, d);
        bound.bound_observed = max_last_part(total);
        bound.ok = bound.bound_predicted == bound.bound_observed;
        if (!bound.ok)
            bound.detail = "predicted " + std::to_string(*bound.bound_predicted) + ", observed " +
                           std::to_string(*bound.bound_observed);

        // m <= floor(lambda_t/2) and anti-symmetry over all of U_N
        CaseRecord inv{"missing_bound_and_antisymmetry", t_label(n, d), n, d, total};
        std::uint64_t seen = 0;
        gen_unrefinable(total, Strategy::pruned_search, [&](const Partition& p) {
            ++seen;
            const Part last = p.last_part();
            const auto m = static_cast<Part>(missing_parts(p).count());
            bool good = m <= last / 2;
            for (Part x = 1; good && x < last; ++x)
                if (2 * x != last && !p.contains(x) && !p.contains(last - x))
                    good = false;
            if (!good) {
                inv.ok = false;
                inv.detail = "violated by " + to_string(p);
                return false;
            }
            return true;
        }, EnumConfig{2, Order::colex, std::nullopt});
        inv.oracle_count = seen;
        return std::vector<CaseRecord>{bound, inv};
    });

    VerificationReport r;
    r.suite = "bounds";
    r.scope = scope_text(n_max, "[1,n-1]");
    for (auto& v : per_cell)
        for (auto& c : v)
            r.cases.push_back(std::move(c));
    r.notes.push_back("oracle: pruned search over U_N, largest part scanned downward");
    return r;
}

std::vector<StatementResult> count_statements(Part n_max, unsigned jobs)
{
    const auto cells = sweep(n_max, 0);
    const auto oracle = parallel_map<std::uint64_t>(cells.size(), jobs, [&](std::size_t i) {
        const auto [n, d] = cells[i];
        return static_cast<std::uint64_t>(
            gen_maximal_unrefinable(triangular_number(n) - d, [](const Partition&) { return true; }));
    });

    struct Spec {
        const char* name;
        const char* formula;
        bool (*applies)(Part n, Part d);
        std::uint64_t (*eval)(Part n, Part d, Convention c);
    };
    static const Spec specs[] = {
        {"singleton", "1 for d in {1,2}, and for d = 3 with n odd",
         [](Part n, Part d) { return d == 1 || d == 2 || (d == 3 && n % 2 == 1); },
         [](Part, Part, Convention) -> std::uint64_t { return 1; }},
        {"count_2n4", "1 + #D_{(n-d+1)/2} for n-d odd, d >= 3",
         [](Part n, Part d) { return d >= 3 && (n - d) % 2 != 0; },
         [](Part n, Part d, Convention c) { return 1 + count_d((n - d + 1) / 2, c); }},
        {"count_2n5", "#D^odd_{n-d+2} for n-d even, d >= 4",
         [](Part n, Part d) { return d >= 4 && (n - d) % 2 == 0; },
         [](Part n, Part d, Convention c) { return count_d_odd(n - d + 2, c); }},
        {"main_d3_even", "#D_{(n-2)/2} for d = 3, n even",
         [](Part n, Part d) { return d == 3 && n % 2 == 0; },
         [](Part n, Part, Convention c) { return count_d((n - 2) / 2, c); }},
        {"triangular", "#MU(T_n) = 1 for n even, #D_{(n+1)/2} for n odd",
         [](Part, Part d) { return d == 0; },
         [](Part n, Part, Convention c) -> std::uint64_t {
             return n % 2 == 0 ? 1 : count_d((n + 1) / 2, c);
         }},
    };

    std::vector<StatementResult> out;
    for (const Spec& s : specs) {
        StatementResult res{s.name, s.formula, {}, {}};
        for (Convention c : {Convention::at_least_two, Convention::at_least_one}) {
            bool all = true;
            for (std::size_t i = 0; i < cells.size() && all; ++i)
                if (s.applies(cells[i].first, cells[i].second))
                    all = s.eval(cells[i].first, cells[i].second, c) == oracle[i];
            if (all)
                res.matching.push_back(c);
        }
        const Convention used = res.matching.empty() ? Convention::at_least_two : res.matching.front();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto [n, d] = cells[i];
            if (!s.applies(n, d))
                continue;
            CaseRecord c{s.name, t_label(n, d), n, d, triangular_number(n) - d};
            c.oracle_count = oracle[i];
            c.formula_count = s.eval(n, d, used);
            c.ok = c.oracle_count == c.formula_count;
            if (!c.ok)
                c.detail = "oracle " + std::to_string(oracle[i]) + "; formula " +
                           std::to_string(s.eval(n, d, Convention::at_least_two)) + " (t>=2), " +
                           std::to_string(s.eval(n, d, Convention::at_least_one)) + " (t>=1)";
            res.cases.push_back(std::move(c));
        }
        out.push_back(std::move(res));
    }
    return out;
}

VerificationReport verify_counts(Part n_max, unsigned jobs)
{
    VerificationReport r;
    r.suite = "counts";
    r.scope = scope_text(n_max, "[0,n-1]");
    for (auto& s : count_statements(n_max, jobs)) {
        std::string note = s.name + " [" + s.formula + "]: ";
        if (s.matching.empty()) {
            note += "no #D convention matches the oracle";
        } else {
            note += "#D read as " + std::string(to_string(s.matching.front()));
            if (s.matching.size() == 2)
                note += " (both conventions agree on this range)";
        }
        r.notes.push_back(note);
        for (auto& c : s.cases)
            r.cases.push_back(std::move(c));
    }
    return r;
}

VerificationReport verify_equivalence(Part n_max, unsigned jobs)
{
    const auto cells = sweep(n_max, 1);
    auto cases = parallel_map<CaseRecord>(cells.size(), jobs, [&](std::size_t i) {
        const auto [n, d] = cells[i];
        const Part total = triangular_number(n) - d;
        CaseRecord c{"equivalence", t_label(n, d), n, d, total};
        try {
            const auto oracle_vec = maximal_unrefinable_partitions(total);
            const PartitionSet oracle(oracle_vec.begin(), oracle_vec.end());
            const PartitionSet built = construct_all_maximal(n, d);
            c.oracle_count = oracle.size();
            c.formula_count = built.size();
            c.detail = first_difference(oracle, built, "oracle", "construction");
            if (c.detail.empty() && table_regime(n, d)) {
                const PartitionSet via = generate_via_bijection(n, d);
                c.detail = first_difference(oracle, via, "oracle", "bijection");
            }
            c.ok = c.detail.empty();
        } catch (const Error& e) {
            c.ok = false;
            c.detail = std::string(to_string(e.code())) + ": " + e.what();
        }
        return c;
    });
    VerificationReport r;
    r.suite = "equivalence";
    r.scope = scope_text(n_max, "[1,n-1]");
    r.cases = std::move(cases);
    r.notes.push_back("bijection generation is compared only where (n,d) lies in a table regime");
    return r;
}

} // namespace unref
