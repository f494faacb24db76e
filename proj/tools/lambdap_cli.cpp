// lambdap: command-line front end over the liblambdap C interface.
//
// Exit codes: 0 all asserted checks hold, 1 a mathematical check failed,
// 2 usage or configuration error.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lambdap/lambdap.h"
#include "worker_pool.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

constexpr unsigned kRatioDigits = 12;
constexpr std::uint64_t kMaxPartsPrime = 300;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Maps a failed C call to the CLI's error categories.
[[noreturn]] void raise(lp_status st, const std::string& context)
{
    const std::string message = context + ": " + lp_last_error();
    if (st == LP_ERR_VERIFICATION) throw ViolationError(message);
    if (st == LP_ERR_INVALID_ARGUMENT || st == LP_ERR_LIMIT_EXCEEDED) throw UsageError(message);
    throw std::runtime_error(message);
}

void check(lp_status st, const std::string& context)
{
    if (st != LP_OK) raise(st, context);
}

// Two-call pattern for the C string getters.
template <typename F>
std::string fetch_string(F&& getter, const std::string& context)
{
    size_t needed = 0;
    lp_status st = getter(nullptr, 0, &needed);
    if (st != LP_OK && st != LP_ERR_BUFFER_TOO_SMALL) raise(st, context);
    std::string out(needed, '\0');
    check(getter(out.data(), out.size(), &needed), context);
    out.resize(needed - 1);
    return out;
}

struct ProfileDeleter {
    void operator()(lp_profile* p) const { lp_profile_destroy(p); }
};
struct BoundsDeleter {
    void operator()(lp_bounds* b) const { lp_bounds_destroy(b); }
};
using ProfilePtr = std::unique_ptr<lp_profile, ProfileDeleter>;
using BoundsPtr = std::unique_ptr<lp_bounds, BoundsDeleter>;

ProfilePtr make_profile(std::uint64_t p)
{
    lp_profile* raw = nullptr;
    check(lp_profile_create(p, &raw), "p=" + std::to_string(p));
    return ProfilePtr(raw);
}

BoundsPtr make_bounds(const lp_profile* profile)
{
    lp_bounds* raw = nullptr;
    check(lp_bounds_create(profile, &raw), "bounds");
    return BoundsPtr(raw);
}

std::vector<std::int64_t> sequence(const lp_profile* prof, lp_sequence which)
{
    std::vector<std::int64_t> out(lp_profile_length(prof));
    check(lp_profile_sequence(prof, which, out.data(), out.size()), "sequence");
    return out;
}

std::string size_of(const lp_profile* prof)
{
    return fetch_string([&](char* b, size_t l, size_t* n) { return lp_profile_size(prof, b, l, n); }, "size");
}

std::string ratio_of(const lp_profile* prof)
{
    return fetch_string([&](char* b, size_t l, size_t* n) { return lp_profile_ratio(prof, kRatioDigits, b, l, n); },
                        "ratio");
}

std::string closed_form(lp_closed_form which, std::uint64_t p)
{
    return fetch_string([&](char* b, size_t l, size_t* n) { return lp_closed_form_value(which, p, b, l, n); },
                        "closed form");
}

std::vector<std::int64_t> values_of(const std::function<lp_status(int64_t*, size_t, size_t*)>& getter,
                                    const std::string& context)
{
    size_t count = 0;
    lp_status st = getter(nullptr, 0, &count);
    if (st != LP_OK && st != LP_ERR_BUFFER_TOO_SMALL) raise(st, context);
    std::vector<std::int64_t> out(count);
    check(getter(out.data(), out.size(), &count), context);
    return out;
}

std::string join(const std::vector<std::int64_t>& values)
{
    std::string out;
    for (size_t k = 0; k < values.size(); ++k) {
        if (k) out.push_back(',');
        out += std::to_string(values[k]);
    }
    return out;
}

std::vector<std::uint64_t> primes_between(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = lo; n <= hi; ++n) {
        if (lp_is_prime(n)) out.push_back(n);
        if (n == UINT64_MAX) break;
    }
    return out;
}

void require_range(std::uint64_t lo, std::uint64_t hi)
{
    if (lo > hi) throw UsageError("empty range: --min " + std::to_string(lo) + " exceeds --max " + std::to_string(hi));
}

void require_lambda_prime(std::uint64_t p)
{
    if (!lp_is_prime(p) || p < 3) throw UsageError("p must be an odd prime, got " + std::to_string(p));
}

// Writes to --output when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path, std::ios::out | std::ios::trunc | std::ios::binary);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }
    void finish()
    {
        out().flush();
        if (!out()) throw UsageError("write to output failed");
    }

private:
    std::ofstream file_;
};

unsigned default_workers()
{
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// ---- lambda -----------------------------------------------------------

struct LambdaConfig {
    std::uint64_t p = 0;
    std::vector<std::string> emit;
    std::string format = "text";
    std::string output;
};

int cmd_lambda(const LambdaConfig& cfg)
{
    require_lambda_prime(cfg.p);
    const std::set<std::string> emit(cfg.emit.begin(), cfg.emit.end());
    if (emit.count("parts") && cfg.p > kMaxPartsPrime) {
        throw UsageError("--emit parts is limited to p <= " + std::to_string(kMaxPartsPrime));
    }
    Sink sink(cfg.output);
    const ProfilePtr prof = make_profile(cfg.p);
    const lp_profile* h = prof.get();

    ordered_json doc;
    doc["p"] = cfg.p;
    doc["size"] = size_of(h);
    doc["c"] = lp_profile_c(h);
    doc["ratio_24size_p6"] = ratio_of(h);
    if (emit.count("m")) doc["m"] = sequence(h, LP_SEQ_M);
    if (emit.count("b")) doc["b"] = sequence(h, LP_SEQ_B);
    if (emit.count("d")) doc["d"] = sequence(h, LP_SEQ_D);
    if (emit.count("c")) doc["c_prefix"] = sequence(h, LP_SEQ_C_PREFIX);
    if (emit.count("walk")) {
        doc["walk"] = values_of(
            [&](int64_t* o, size_t l, size_t* n) { return lp_profile_walk(h, 1'000'000, o, l, n); }, "walk");
    }
    if (emit.count("parts")) {
        doc["parts"] = values_of([&](int64_t* o, size_t l, size_t* n) { return lp_profile_parts(h, 0, o, l, n); },
                                 "parts");
    }

    auto& out = sink.out();
    if (cfg.format == "json") {
        out << doc.dump(2) << '\n';
    } else {
        for (const auto& [key, value] : doc.items()) {
            out << key << ": ";
            if (value.is_array()) {
                out << join(value.get<std::vector<std::int64_t>>());
            } else if (value.is_string()) {
                out << value.get<std::string>();
            } else {
                out << value.dump();
            }
            out << '\n';
        }
    }
    sink.finish();
    return kExitOk;
}

// ---- verify -----------------------------------------------------------

const std::vector<std::string> kCheckGroups{"theorem", "eq1", "c-bounds", "symmetry", "identity", "structure", "lemmas"};

struct VerifyConfig {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::vector<std::string> checks;
    unsigned workers = default_workers();
    std::string format = "text";
    std::string output;
};

struct VerifyRow {
    std::uint64_t p = 0;
    std::string size;
    std::vector<std::pair<std::string, std::string>> cells;
    bool failed = false;
    std::string failure;
};

const std::vector<std::pair<lp_bound_check, std::string>> kBoundColumns{
    {LP_BOUND_THEOREM_LOWER, "theorem"},        {LP_BOUND_THEOREM_UPPER, "theorem"},
    {LP_BOUND_EQ1_UPPER, "eq1"},                {LP_BOUND_MCSPIRIT_ONO_UPPER, "eq1"},
    {LP_BOUND_CONSTRUCTION_COMPARISON, "eq1"},  {LP_BOUND_C_UPPER, "c-bounds"},
    {LP_BOUND_C_LOWER, "c-bounds"},             {LP_BOUND_C18, "c-bounds"},
};

const std::vector<std::pair<lp_profile_check, std::string>> kProfileColumns{
    {LP_CHECK_SYMMETRY, "symmetry"},
    {LP_CHECK_IDENTITY, "identity"},
    {LP_CHECK_STRUCTURE, "structure"},
    {LP_CHECK_LEMMAS, "lemmas"},
};

std::vector<std::string> verify_columns()
{
    std::vector<std::string> cols;
    for (const auto& [check, group] : kBoundColumns) cols.emplace_back(lp_bound_check_name(check));
    for (const auto& [check, group] : kProfileColumns) cols.push_back(group);
    return cols;
}

std::string verdict_cell(const lp_verdict& v)
{
    switch (v.applicability) {
    case LP_ASSERTED: return v.holds ? "pass" : "FAIL";
    case LP_OUTSIDE_STATED_RANGE: return v.holds ? "pass(outside-range)" : "fail(outside-range)";
    case LP_NOT_APPLICABLE: return "n/a";
    case LP_REPORT_ONLY: return v.holds ? "report:size>=value" : "report:size<value";
    }
    return "?";
}

VerifyRow verify_prime(std::uint64_t p, const std::set<std::string>& groups)
{
    VerifyRow row;
    row.p = p;
    try {
        const ProfilePtr prof = make_profile(p);
        row.size = size_of(prof.get());
        const BoundsPtr bounds = make_bounds(prof.get());
        for (const auto& [check, group] : kBoundColumns) {
            const std::string name = lp_bound_check_name(check);
            if (!groups.count(group)) {
                row.cells.emplace_back(name, "-");
                continue;
            }
            lp_verdict v{};
            ::check(lp_bounds_verdict(bounds.get(), check, &v), name);
            row.cells.emplace_back(name, verdict_cell(v));
            if (v.violated && !row.failed) {
                row.failed = true;
                row.failure = name;
            }
        }
        for (const auto& [check, group] : kProfileColumns) {
            if (!groups.count(group)) {
                row.cells.emplace_back(group, "-");
                continue;
            }
            lp_check_outcome outcome{};
            char message[512] = {0};
            ::check(lp_profile_check_run(prof.get(), check, &outcome, message, sizeof message), group);
            row.cells.emplace_back(group, outcome.holds ? "pass" : "FAIL");
            if (!outcome.holds && !row.failed) {
                row.failed = true;
                row.failure = group + ": " + message;
            }
        }
    } catch (const std::exception& e) {
        row.failed = true;
        row.failure = e.what();
        row.cells.clear();
        for (const auto& col : verify_columns()) row.cells.emplace_back(col, "error");
    }
    return row;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char ch : s) {
        if (ch == '"') out.push_back('"');
        out.push_back(ch);
    }
    return out + "\"";
}

int cmd_verify(const VerifyConfig& cfg)
{
    require_range(cfg.min, cfg.max);
    if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
    std::set<std::string> groups;
    if (cfg.checks.empty()) {
        groups.insert(kCheckGroups.begin(), kCheckGroups.end());
    } else {
        for (const auto& c : cfg.checks) {
            if (std::find(kCheckGroups.begin(), kCheckGroups.end(), c) == kCheckGroups.end()) {
                throw UsageError("unknown check '" + c + "'");
            }
            groups.insert(c);
        }
    }
    Sink sink(cfg.output);
    auto& out = sink.out();

    std::vector<std::uint64_t> primes;
    for (const auto p : primes_between(cfg.min, cfg.max)) {
        if (p >= 3) primes.push_back(p);
    }
    const auto columns = verify_columns();

    ordered_json rows = ordered_json::array();
    if (cfg.format == "csv") {
        out << "p,size";
        for (const auto& col : columns) out << ',' << col;
        out << ",status,failure\n";
    }

    std::uint64_t failures = 0;
    lambdap::cli::ordered_parallel<VerifyRow>(
        primes.size(), cfg.workers, [&](std::size_t k) { return verify_prime(primes[k], groups); },
        [&](VerifyRow&& row) {
            failures += row.failed ? 1 : 0;
            const std::string status = row.failed ? "FAIL" : "ok";
            if (cfg.format == "csv") {
                out << row.p << ',' << row.size;
                for (const auto& [name, cell] : row.cells) out << ',' << cell;
                out << ',' << status << ',' << csv_escape(row.failure) << '\n';
            } else if (cfg.format == "json") {
                ordered_json r;
                r["p"] = row.p;
                r["size"] = row.size;
                ordered_json checks = ordered_json::object();
                for (const auto& [name, cell] : row.cells) checks[name] = cell;
                r["checks"] = checks;
                r["status"] = status;
                r["failure"] = row.failure;
                rows.push_back(std::move(r));
            } else {
                out << "p=" << row.p << " size=" << row.size;
                for (const auto& [name, cell] : row.cells) {
                    if (cell != "-") out << ' ' << name << '=' << cell;
                }
                out << " status=" << status;
                if (row.failed) out << " failure=\"" << row.failure << '"';
                out << '\n';
            }
            out.flush();
        });

    if (cfg.format == "json") {
        ordered_json doc;
        doc["meta"] = {{"range", {cfg.min, cfg.max}},
                       {"checks", std::vector<std::string>(groups.begin(), groups.end())},
                       {"version", lp_version()}};
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    } else if (cfg.format == "text") {
        out << "primes: " << primes.size() << " failed: " << failures << '\n';
    }
    sink.finish();
    return failures == 0 ? kExitOk : kExitViolation;
}

// ---- oracle -----------------------------------------------------------

struct OracleConfig {
    std::uint64_t p = 0;
    std::string mode = "walks";
    std::int64_t cap = -1;
    std::string output;
};

int cmd_oracle(const OracleConfig& cfg)
{
    if (!lp_is_prime(cfg.p)) throw UsageError("p must be prime, got " + std::to_string(cfg.p));
    Sink sink(cfg.output);
    auto& out = sink.out();
    out << "mode: " << cfg.mode << '\n' << "p: " << cfg.p << '\n';

    bool agree = false;
    if (cfg.mode == "walks" || cfg.mode == "longest-dp") {
        const std::size_t len = cfg.p - 1;
        std::vector<std::int64_t> m(len);
        lp_walk_summary summary{};
        std::string oracle_size;
        if (cfg.mode == "walks") {
            char size[64] = {0};
            check(lp_oracle_max_size_walk(cfg.p, m.data(), m.size(), size, sizeof size, &summary), "walk oracle");
            oracle_size = size;
            out << "walks_visited: " << summary.visited << '\n' << "oracle_size: " << oracle_size << '\n';
        } else {
            check(lp_oracle_longest_walk(cfg.p, m.data(), m.size(), &summary), "longest-walk oracle");
        }
        out << "oracle_m: " << join(m) << '\n'
            << "oracle_length: " << summary.length << '\n'
            << "unique: " << (summary.unique ? "true" : "false") << '\n';
        require_lambda_prime(cfg.p);
        const ProfilePtr prof = make_profile(cfg.p);
        const auto profile_m = sequence(prof.get(), LP_SEQ_M);
        const std::string profile_size = size_of(prof.get());
        out << "profile_m: " << join(profile_m) << '\n' << "profile_size: " << profile_size << '\n';
        agree = summary.unique && profile_m == m && (cfg.mode != "walks" || oracle_size == profile_size);
    } else if (cfg.mode == "partitions") {
        require_lambda_prime(cfg.p);
        std::int64_t cap = cfg.cap;
        if (cap < 0) cap = std::stoll(closed_form(LP_FORM_MCSPIRIT_ONO, cfg.p));
        std::uint64_t searched = 0;
        // a partition of size <= cap has at most cap parts; one call suffices
        std::vector<std::int64_t> best(static_cast<std::size_t>(std::max<std::int64_t>(cap, 1)));
        size_t count = 0;
        check(lp_oracle_partition_search(cfg.p, cap, best.data(), best.size(), &count, &searched), "partition search");
        best.resize(count);
        std::int64_t best_size = 0;
        for (const auto part : best) best_size += part;
        out << "size_cap: " << cap << '\n'
            << "searched: " << searched << '\n'
            << "oracle_partition: " << join(best) << '\n'
            << "oracle_size: " << best_size << '\n';
        const ProfilePtr prof = make_profile(cfg.p);
        const auto parts = values_of(
            [&](int64_t* o, size_t l, size_t* n) { return lp_profile_parts(prof.get(), 0, o, l, n); }, "parts");
        out << "profile_partition: " << join(parts) << '\n';
        agree = parts == best;
    } else {
        throw UsageError("unknown oracle mode '" + cfg.mode + "'");
    }
    out << "agree: " << (agree ? "true" : "false") << '\n';
    sink.finish();
    return agree ? kExitOk : kExitViolation;
}

// ---- table ------------------------------------------------------------

struct TableConfig {
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    std::string format = "csv";
    unsigned workers = default_workers();
    std::string output;
};

struct TableRow {
    std::uint64_t p = 0;
    std::string size;
    std::int64_t c = 0;
    std::string mcdowell_upper;
    std::string mcspirit_ono;
    bool theorem_lower_ok = false;
    bool theorem_upper_ok = false;
    std::string ratio;
    std::string error;
};

TableRow table_row(std::uint64_t p)
{
    TableRow row;
    row.p = p;
    try {
        const ProfilePtr prof = make_profile(p);
        row.size = size_of(prof.get());
        row.c = lp_profile_c(prof.get());
        row.mcdowell_upper = closed_form(LP_FORM_MCDOWELL_UPPER, p);
        row.mcspirit_ono = closed_form(LP_FORM_MCSPIRIT_ONO, p);
        lp_verdict lower{}, upper{};
        check(lp_theorem_interval(p, row.size.c_str(), &lower, &upper), "theorem interval");
        row.theorem_lower_ok = lower.holds != 0;
        row.theorem_upper_ok = upper.holds != 0;
        row.ratio = ratio_of(prof.get());
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    return row;
}

int cmd_table(const TableConfig& cfg)
{
    require_range(cfg.min, cfg.max);
    if (cfg.workers < 1) throw UsageError("--workers must be at least 1");
    Sink sink(cfg.output);
    auto& out = sink.out();

    std::vector<std::uint64_t> primes;
    for (const auto p : primes_between(cfg.min, cfg.max)) {
        if (p >= 3) primes.push_back(p);
    }

    const bool csv = cfg.format == "csv";
    if (csv) out << "p,size,c,mcdowell_upper,mcspirit_ono,theorem_lower_ok,theorem_upper_ok,ratio_24size_p6\n";
    ordered_json rows = ordered_json::array();
    std::string error;
    lambdap::cli::ordered_parallel<TableRow>(
        primes.size(), cfg.workers, [&](std::size_t k) { return table_row(primes[k]); },
        [&](TableRow&& row) {
            if (!row.error.empty()) {
                if (error.empty()) error = row.error;
                return;
            }
            if (csv) {
                out << row.p << ',' << row.size << ',' << row.c << ',' << row.mcdowell_upper << ','
                    << row.mcspirit_ono << ',' << (row.theorem_lower_ok ? "true" : "false") << ','
                    << (row.theorem_upper_ok ? "true" : "false") << ',' << row.ratio << '\n';
            } else {
                ordered_json r;
                r["p"] = row.p;
                r["size"] = row.size;
                r["c"] = row.c;
                r["mcdowell_upper"] = row.mcdowell_upper;
                r["mcspirit_ono"] = row.mcspirit_ono;
                r["theorem_lower_ok"] = row.theorem_lower_ok;
                r["theorem_upper_ok"] = row.theorem_upper_ok;
                r["ratio_24size_p6"] = row.ratio;
                rows.push_back(std::move(r));
            }
        });
    if (!csv) {
        ordered_json doc;
        doc["meta"] = {{"range", {cfg.min, cfg.max}}, {"version", lp_version()}};
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    }
    sink.finish();
    if (!error.empty()) {
        std::cerr << "lambdap: " << error << '\n';
        return kExitViolation;
    }
    return kExitOk;
}

// ---- totient-check ----------------------------------------------------

int cmd_totient(std::uint64_t n_max, const std::string& output)
{
    if (n_max < 1 || n_max > UINT32_MAX) throw UsageError("--n-max must be in 1..2^32-1");
    Sink sink(output);
    lp_totient_result res{};
    char slack[256] = {0};
    check(lp_totient_check(static_cast<uint32_t>(n_max), &res, slack, sizeof slack), "totient check");
    auto& out = sink.out();
    out << "n_max: " << res.n_max << '\n' << "holds: " << (res.holds ? "true" : "false") << '\n';
    if (!res.holds) out << "first_violation: " << res.first_violation << '\n';
    out << "min_slack: " << slack << '\n' << "min_slack_at: " << res.min_slack_at << '\n';
    sink.finish();
    return res.holds ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computation of the maximal p-core p'-partition and its size bounds"};
    app.set_version_flag("--version", lp_version());
    app.require_subcommand(1);

    LambdaConfig lambda_cfg;
    auto* lambda = app.add_subcommand("lambda", "Compute |Lambda_p|, c and the walk profile");
    lambda->add_option("-p,--prime", lambda_cfg.p, "odd prime p")->required();
    lambda->add_option("--emit", lambda_cfg.emit, "extra output: m, b, d, c, walk, parts")
        ->delimiter(',')
        ->check(CLI::IsMember({"m", "b", "d", "c", "walk", "parts"}));
    lambda->add_option("--format", lambda_cfg.format)->check(CLI::IsMember({"text", "json"}));
    lambda->add_option("-o,--output", lambda_cfg.output);

    VerifyConfig verify_cfg;
    auto* verify = app.add_subcommand("verify", "Run bound and structure checks over a prime range");
    verify->add_option("--min", verify_cfg.min)->required();
    verify->add_option("--max", verify_cfg.max)->required();
    verify->add_option("--checks", verify_cfg.checks, "subset of theorem,eq1,c-bounds,symmetry,identity,structure,lemmas")
        ->delimiter(',');
    verify->add_option("-j,--workers", verify_cfg.workers);
    verify->add_option("--format", verify_cfg.format)->check(CLI::IsMember({"text", "csv", "json"}));
    verify->add_option("-o,--output", verify_cfg.output);

    OracleConfig oracle_cfg;
    auto* oracle = app.add_subcommand("oracle", "Compare the construction with a brute-force oracle");
    oracle->add_option("-p,--prime", oracle_cfg.p)->required();
    oracle->add_option("--mode", oracle_cfg.mode)->check(CLI::IsMember({"walks", "longest-dp", "partitions"}));
    oracle->add_option("--cap", oracle_cfg.cap, "size cap for --mode partitions (default: McSpirit-Ono bound)");
    oracle->add_option("-o,--output", oracle_cfg.output);

    TableConfig table_cfg;
    auto* table = app.add_subcommand("table", "Emit the size/ratio table for a prime range");
    table->add_option("--min", table_cfg.min)->required();
    table->add_option("--max", table_cfg.max)->required();
    table->add_option("--format", table_cfg.format)->check(CLI::IsMember({"csv", "json"}));
    table->add_option("-j,--workers", table_cfg.workers);
    table->add_option("-o,--output", table_cfg.output);

    std::uint64_t n_max = 0;
    std::string totient_output;
    auto* totient = app.add_subcommand("totient-check", "Check the totient partial-sum lower bound");
    totient->add_option("--n-max", n_max)->required();
    totient->add_option("-o,--output", totient_output);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*lambda) return cmd_lambda(lambda_cfg);
        if (*verify) return cmd_verify(verify_cfg);
        if (*oracle) return cmd_oracle(oracle_cfg);
        if (*table) return cmd_table(table_cfg);
        if (*totient) return cmd_totient(n_max, totient_output);
    } catch (const UsageError& e) {
        std::cerr << "lambdap: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ViolationError& e) {
        std::cerr << "lambdap: " << e.what() << '\n';
        return kExitViolation;
    } catch (const std::exception& e) {
        std::cerr << "lambdap: internal error: " << e.what() << '\n';
        return kExitViolation;
    }
    return kExitUsage;
}
