#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "unref/bijections.hpp"
#include "unref/constructions.hpp"
#include "unref/count_table.hpp"
#include "unref/enumeration.hpp"
#include "unref/parallel.hpp"
#include "unref/serialize.hpp"
#include "unref/verify.hpp"

namespace unref::cli {

namespace {

// thrown for range violations detected after CLI11 has parsed the flags
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void print_partitions(const std::vector<Partition>& ps, const std::string& format, std::ostream& out)
{
    for (const auto& p : ps) {
        if (format == "json") {
            out << to_json(p) << '\n';
        } else if (format == "csv") {
            for (std::size_t i = 0; i < p.length(); ++i)
                out << (i ? "," : "") << p[i];
            out << '\n';
        } else {
            out << to_string(p) << "  t=" << p.length() << "  last=" << p.last_part() << '\n';
        }
    }
}

std::vector<Partition> capped(std::vector<Partition> ps, std::optional<std::size_t> limit)
{
    if (limit && ps.size() > *limit)
        ps.erase(ps.begin() + static_cast<std::ptrdiff_t>(*limit), ps.end());
    return ps;
}

int verdict(bool pass)
{
    return pass ? 0 : 1;
}

void print_report(const VerificationReport& r, const std::string& format, std::ostream& out)
{
    if (format == "json") {
        out << to_json(r) << '\n';
        return;
    }
    out << "suite " << r.suite << " (" << r.scope << "): " << (r.passed() ? "PASS" : "FAIL") << ", "
        << r.cases.size() << " cases, " << r.failures() << " failing\n";
    for (const auto& note : r.notes)
        out << "  note: " << note << '\n';
    for (const auto& c : r.cases)
        if (!c.ok)
            out << "  FAIL " << c.check << " " << c.label << ": " << c.detail << '\n';
}

void print_counts(const CountTable& table, const std::string& format, std::ostream& out)
{
    if (format == "csv") {
        out << table.to_csv();
    } else if (format == "json") {
        for (const auto& [key, count] : table.rows()) {
            nlohmann::ordered_json j;
            j["family"] = to_string(key.first);
            j["N"] = key.second;
            j["count"] = count;
            out << j.dump() << '\n';
        }
    } else {
        out << std::left << std::setw(22) << "family" << std::right << std::setw(6) << "N" << std::setw(14)
            << "count" << '\n';
        for (const auto& [key, count] : table.rows())
            out << std::left << std::setw(22) << to_string(key.first) << std::right << std::setw(6)
                << key.second << std::setw(14) << count << '\n';
    }
}

void print_fig3(const Fig3Table& t, const std::string& format, std::ostream& out)
{
    auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
    if (format == "json") {
        out << to_json(t) << '\n';
    } else if (format == "csv") {
        out << "column,label,instance,N,lambda_expr,lambda_max,count_expr,count,convention,oracle_lambda_max,"
               "oracle_count,ok\n";
        for (const auto& r : t.rows)
            out << r.column << ',' << r.label << ',' << r.instance << ',' << r.total << ',' << r.lambda_expr << ','
                << r.lambda_value << ',' << r.count_expr << ',' << opt(r.count_value) << ',' << r.convention
                << ',' << opt(r.oracle_lambda) << ',' << opt(r.oracle_count) << ',' << (r.ok ? "true" : "false")
                << '\n';
    } else {
        out << std::left << std::setw(7) << "column" << std::setw(22) << "row" << std::setw(10) << "instance"
            << std::setw(8) << "lambda" << std::setw(15) << "#MU" << std::setw(8) << "value" << "oracle\n";
        for (const auto& r : t.rows)
            out << std::left << std::setw(7) << r.column << std::setw(22) << r.label << std::setw(10) << r.instance
                << std::setw(8) << (r.lambda_expr + "") << std::setw(15) << r.count_expr << std::setw(8)
                << opt(r.count_value) << opt(r.oracle_lambda) << "/" << opt(r.oracle_count)
                << (r.ok ? "" : "  MISMATCH") << '\n';
        for (const auto& note : t.notes)
            out << "note: " << note << '\n';
    }
}

CountTable counts_with_cache(Part from, Part to, const std::vector<Family>& families, unsigned jobs,
                             const std::string& cache_path)
{
    CountTable cache;
    if (!cache_path.empty() && std::filesystem::exists(cache_path))
        cache = CountTable::load(cache_path);

    std::vector<CountTable::Key> missing;
    for (Family f : families)
        for (Part total = from; total <= to; ++total)
            if (!cache.get(f, total))
                missing.emplace_back(f, total);
    const auto fresh = parallel_map<std::uint64_t>(missing.size(), jobs, [&](std::size_t i) {
        return count_family(missing[i].first, missing[i].second);
    });
    for (std::size_t i = 0; i < missing.size(); ++i)
        cache.set(missing[i].first, missing[i].second, fresh[i]);
    if (!cache_path.empty() && !missing.empty())
        cache.save(cache_path);

    CountTable out;
    for (Family f : families)
        for (Part total = from; total <= to; ++total)
            out.set(f, total, *cache.get(f, total));
    return out;
}

} // namespace

unsigned default_jobs()
{
    if (const char* env = std::getenv("UNREF_JOBS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024)
            return static_cast<unsigned>(v);
    }
    return 1;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Unrefinable and maximal unrefinable partitions into distinct parts", "unref"};
    app.require_subcommand(1, 1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    const unsigned jobs_default = default_jobs();
    std::string format;
    unsigned jobs = jobs_default;
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", jobs, "Worker threads (default: $UNREF_JOBS or 1)")
            ->check(CLI::Range(1u, 1024u));
    };

    // enum
    Part e_n = 0, e_d = 0;
    std::string e_method = "oracle";
    std::optional<std::size_t> e_limit;
    auto* c_enum = app.add_subcommand("enum", "List MU(T_{n,d}), one partition per line");
    c_enum->add_option("--n", e_n, "Triangular index n")->required();
    c_enum->add_option("--d", e_d, "Offset d, N = n(n+1)/2 - d")->required();
    c_enum->add_option("--method", e_method, "oracle | table | bijection")
        ->check(CLI::IsMember({"oracle", "table", "bijection"}));
    c_enum->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    c_enum->add_option("--limit", e_limit, "Emit at most this many partitions");

    // unref
    Part u_total = 0;
    std::string u_strategy = "pruned", u_order = "lex";
    std::optional<std::size_t> u_limit;
    auto* c_unref = app.add_subcommand("unref", "List U_N, the unrefinable partitions of N");
    c_unref->add_option("--N", u_total, "N >= 3")->required();
    c_unref->add_option("--strategy", u_strategy, "pruned | brute")->check(CLI::IsMember({"pruned", "brute"}));
    c_unref->add_option("--order", u_order, "lex | colex")->check(CLI::IsMember({"lex", "colex"}));
    c_unref->add_option("--limit", u_limit, "Emit at most this many partitions");
    c_unref->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));

    // count
    Part k_from = 0, k_to = 0;
    std::string k_what, k_cache;
    auto* c_count = app.add_subcommand("count", "Count table rows family,N,count");
    c_count->add_option("--from", k_from, "First N (>= 1)")->required();
    c_count->add_option("--to", k_to, "Last N")->required();
    c_count->add_option("--what", k_what, "distinct | odd | unrefinable | maximal | all")
        ->required()
        ->check(CLI::IsMember({"distinct", "odd", "unrefinable", "maximal", "all"}));
    c_count->add_option("--format", format, "csv | json | pretty")->check(CLI::IsMember({"csv", "json", "pretty"}));
    c_count->add_option("--cache", k_cache, "CSV cache file, read and refreshed");
    add_jobs(c_count);

    // verify
    std::string v_suite;
    Part v_nmax = 0;
    auto* c_verify = app.add_subcommand("verify", "Run verification suites; exit 1 on any failure");
    c_verify->add_option("--suite", v_suite, "bounds | counts | equivalence | fig3 | all")
        ->required()
        ->check(CLI::IsMember({"bounds", "counts", "equivalence", "fig3", "all"}));
    c_verify->add_option("--n-max", v_nmax, "Sweep n over [11, n-max]")->required();
    c_verify->add_option("--format", format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));
    add_jobs(c_verify);

    // table
    Part t_n = 0;
    bool t_no_oracle = false;
    auto* c_table = app.add_subcommand("table", "Counts between T_{n-1} and T_{n+1} (n even)");
    c_table->add_option("--n", t_n, "Even n >= 12")->required();
    c_table->add_option("--format", format, "json | csv | pretty")->check(CLI::IsMember({"json", "csv", "pretty"}));
    c_table->add_flag("--no-oracle", t_no_oracle, "Skip the oracle check");
    add_jobs(c_table);

    // oeis
    std::string o_bfile;
    Part o_max = 0;
    auto* c_oeis = app.add_subcommand("oeis", "Compare #U_N against an OEIS b-file");
    c_oeis->add_option("--bfile", o_bfile, "b-file path (`index value` lines, # comments)")->required();
    c_oeis->add_option("--max", o_max, "Largest N to compare")->required();
    c_oeis->add_option("--format", format, "json | pretty")->check(CLI::IsMember({"json", "pretty"}));
    add_jobs(c_oeis);

    auto usage = [&](const std::string& msg) {
        err << "error: " << msg << "\n\n";
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return 2;
    };

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        return usage(e.what());
    }

    try {
        if (c_enum->parsed()) {
            const std::string fmt = format.empty() ? "json" : format;
            if (e_n < 3 || e_d < 0 || e_d > e_n - 1)
                throw UsageError("need n >= 3 and 0 <= d <= n-1");
            std::vector<Partition> ps;
            if (e_method == "oracle") {
                ps = maximal_unrefinable_partitions(triangular_number(e_n) - e_d);
            } else if (e_method == "table") {
                const auto s = construct_all_maximal(e_n, e_d);
                ps.assign(s.begin(), s.end());
            } else {
                const auto s = generate_via_bijection(e_n, e_d);
                ps.assign(s.begin(), s.end());
            }
            print_partitions(capped(std::move(ps), e_limit), fmt, out);
            return 0;
        }
        if (c_unref->parsed()) {
            if (u_total < 3)
                throw UsageError("need N >= 3");
            EnumConfig cfg{2, u_order == "lex" ? Order::lex : Order::colex, u_limit};
            std::vector<Partition> ps;
            gen_unrefinable(u_total, u_strategy == "brute" ? Strategy::brute_filter : Strategy::pruned_search,
                            [&ps](const Partition& p) {
                                ps.push_back(p);
                                return true;
                            },
                            cfg);
            print_partitions(ps, format.empty() ? "json" : format, out);
            return 0;
        }
        if (c_count->parsed()) {
            if (k_from < 1 || k_to < k_from)
                throw UsageError("need 1 <= from <= to");
            std::vector<Family> fams;
            if (k_what == "distinct" || k_what == "all")
                fams.push_back(Family::distinct);
            if (k_what == "odd" || k_what == "all")
                fams.push_back(Family::odd_distinct);
            if (k_what == "unrefinable" || k_what == "all")
                fams.push_back(Family::unrefinable);
            if (k_what == "maximal" || k_what == "all")
                fams.push_back(Family::maximal_unrefinable);
            print_counts(counts_with_cache(k_from, k_to, fams, jobs, k_cache), format.empty() ? "csv" : format,
                         out);
            return 0;
        }
        if (c_verify->parsed()) {
            if (v_nmax < 11)
                throw UsageError("--n-max must be >= 11");
            std::vector<VerificationReport> parts;
            if (v_suite == "bounds" || v_suite == "all")
                parts.push_back(verify_bounds(v_nmax, jobs));
            if (v_suite == "counts" || v_suite == "all")
                parts.push_back(verify_counts(v_nmax, jobs));
            if (v_suite == "equivalence" || v_suite == "all")
                parts.push_back(verify_equivalence(v_nmax, jobs));
            if (v_suite == "fig3" || v_suite == "all")
                parts.push_back(fig3_report(fig3_table(12, true, jobs)));
            const VerificationReport r = parts.size() == 1 ? parts.front() : combine(v_suite, parts);
            print_report(r, format.empty() ? "json" : format, out);
            return verdict(r.passed());
        }
        if (c_table->parsed()) {
            if (t_n < 12 || t_n % 2 != 0)
                throw UsageError("--n must be even and >= 12");
            const Fig3Table t = fig3_table(t_n, !t_no_oracle, jobs);
            print_fig3(t, format.empty() ? "json" : format, out);
            return verdict(t.passed());
        }
        if (c_oeis->parsed()) {
            if (o_max < 3)
                throw UsageError("--max must be >= 3");
            const VerificationReport r = oeis_compare(std::filesystem::path(o_bfile), o_max, jobs);
            print_report(r, format.empty() ? "json" : format, out);
            return verdict(r.passed());
        }
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const Error& e) {
        switch (e.code()) {
        case Errc::out_of_range:
        case Errc::regime_mismatch:
        case Errc::bfile_unreadable:
        case Errc::bfile_malformed:
        case Errc::parse_error: return usage(e.what());
        default: err << "error (" << to_string(e.code()) << "): " << e.what() << '\n'; return 1;
        }
    }
    return 2;
}

} // namespace unref::cli
