// rankkl: batch driver for the exact partition-rank Kloosterman toolkit.
//
// Subcommands: vanish, ranks, exact-formula, argtable, dedekind.  Every check
// is emitted as one JSON line (floats carry 17 significant digits) so sweeps
// can be tailed and diffed; output order is deterministic for a fixed
// invocation regardless of --jobs.
//
// Exit codes: 0 = all checks passed, 1 = at least one mathematical check
// failed, 2 = usage or configuration error.

#include <CLI11.hpp>

#include "rankkl/argcheck.hpp"
#include "rankkl/dedekind.hpp"
#include "rankkl/exactformula.hpp"
#include "rankkl/kloosterman.hpp"
#include "rankkl/partitions.hpp"
#include "rankkl/report.hpp"

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using rankkl::format_double;
using rankkl::json_escape;

struct Range {
    long lo = 0;
    long hi = 0;
};

// Accepts "a..b" or a single integer "a".
Range parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const long v = std::stol(text);
            return {v, v};
        }
        const long lo = std::stol(text.substr(0, dots));
        const long hi = std::stol(text.substr(dots + 2));
        if (hi < lo) throw std::domain_error("range: upper bound below lower bound");
        return {lo, hi};
    } catch (const std::domain_error&) {
        throw;
    } catch (const std::exception&) {
        throw std::domain_error("range: expected 'a..b' or a single integer, got '" + text + "'");
    }
}

// One line of output plus its contribution to the exit code.
struct TaskResult {
    std::string line;
    bool failed = false;
};

// Runs tasks with bounded parallelism and prints results in task order as
// soon as each contiguous prefix is finished (deterministic streaming).
bool run_ordered(const std::vector<std::function<TaskResult()>>& tasks, unsigned jobs) {
    const size_t count = tasks.size();
    std::vector<TaskResult> results(count);
    std::vector<char> done(count, 0);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<size_t> next{0};
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    jobs = std::min<size_t>(jobs, count == 0 ? 1 : count);

    auto worker = [&] {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= count) return;
            TaskResult r = tasks[i]();
            {
                std::lock_guard<std::mutex> lock(mu);
                results[i] = std::move(r);
                done[i] = 1;
            }
            cv.notify_one();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);

    bool any_failed = false;
    {
        std::unique_lock<std::mutex> lock(mu);
        for (size_t i = 0; i < count; ++i) {
            cv.wait(lock, [&] { return done[i] != 0; });
            std::cout << results[i].line << "\n";
            any_failed = any_failed || results[i].failed;
        }
    }
    for (std::thread& t : pool) t.join();
    std::cout.flush();
    return any_failed;
}

// ---------------------------------------------------------------------------
// vanish
// ---------------------------------------------------------------------------

int cmd_vanish(const std::string& case_id, const Range& n_range, const Range& c_range,
               std::optional<int> ell, const std::string& reading_name, unsigned jobs) {
    const auto& ids = rankkl::vanishing_case_ids();
    if (std::find(ids.begin(), ids.end(), case_id) == ids.end())
        throw std::domain_error("vanish: unknown case id '" + case_id + "'");
    const int p = case_id[0] == '5' ? 5 : 7;
    if (ell) {
        if (rankkl::combo_weights().count(case_id))
            throw std::domain_error("vanish: case " + case_id +
                                    " is a weighted combination; --ell cannot be used");
        if (*ell < 1 || *ell > p - 1)
            throw std::domain_error("vanish: --ell out of range for modulus " +
                                    std::to_string(p));
    }
    rankkl::S7Reading reading;
    if (reading_name == "same-n")
        reading = rankkl::S7Reading::same_n;
    else if (reading_name == "literal")
        reading = rankkl::S7Reading::literal;
    else
        throw std::domain_error("vanish: --s7-reading must be same-n or literal");
    if (n_range.lo < 0) throw std::domain_error("vanish: n must be >= 0");

    std::vector<std::function<TaskResult()>> tasks;
    for (long c = std::max(c_range.lo, static_cast<long>(p)); c <= c_range.hi; ++c) {
        if (c % p != 0) continue;
        for (long n = n_range.lo; n <= n_range.hi; ++n) {
            tasks.push_back([=]() -> TaskResult {
                rankkl::VerificationReport rep;
                try {
                    rep = rankkl::vanish_case(case_id, n, c, ell, reading);
                } catch (const std::domain_error& err) {
                    // Structurally excluded instance inside a valid sweep
                    // (e.g. a squared-modulus c in the boundary case).
                    rep.case_id = case_id;
                    rep.p = p;
                    rep.ell = ell.value_or(0);
                    rep.n = n;
                    rep.c = c;
                    rep.skipped = true;
                    rep.note = err.what();
                    return {to_json_line(rep), false};
                }
                const bool failed = !rep.skipped && !rep.exact_zero;
                return {to_json_line(rep), failed};
            });
        }
    }
    if (tasks.empty()) throw std::domain_error("vanish: empty grid (no admissible c in range)");
    return run_ordered(tasks, jobs) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// ranks
// ---------------------------------------------------------------------------

int cmd_ranks_dyson(const std::string& which, const Range& n_range) {
    static const std::vector<std::string> all_ids = {"5-1", "5-2", "5-4", "7-0", "7-1",
                                                     "7-2", "7-3", "7-4", "7-5", "7-6"};
    std::vector<std::string> ids;
    if (which == "all")
        ids = all_ids;
    else {
        rankkl::dyson_case(which);  // throws domain_error on unknown ids
        ids = {which};
    }
    if (n_range.lo < 0) throw std::domain_error("ranks: n must be >= 0");
    bool any_failed = false;
    for (const std::string& id : ids) {
        const rankkl::DysonCase dc = rankkl::dyson_case(id);
        for (long n = n_range.lo; n <= n_range.hi; ++n) {
            const bool ok = rankkl::dyson_identity_check(id, n);
            any_failed = any_failed || !ok;
            std::cout << "{\"check\":\"rank-identity\",\"case\":\"" << json_escape(id)
                      << "\",\"n\":" << n << ",\"argument\":" << dc.b * n + dc.k
                      << ",\"pass\":" << (ok ? "true" : "false") << "}\n";
        }
    }
    std::cout.flush();
    return any_failed ? 1 : 0;
}

int cmd_ranks_congruence(int modulus, const Range& n_range) {
    if (modulus != 5 && modulus != 7 && modulus != 11)
        throw std::domain_error("ranks: --congruence must be 5, 7 or 11");
    const int k = modulus == 5 ? 4 : modulus == 7 ? 5 : 6;
    if (n_range.lo < 0) throw std::domain_error("ranks: n must be >= 0");
    bool any_failed = false;
    for (long n = n_range.lo; n <= n_range.hi; ++n) {
        const long argument = modulus * n + k;
        const rankkl::Int residue =
            rankkl::least_residue(rankkl::partition_count(argument), rankkl::Int(modulus));
        const bool ok = residue == 0;
        any_failed = any_failed || !ok;
        std::cout << "{\"check\":\"congruence\",\"modulus\":" << modulus << ",\"n\":" << n
                  << ",\"argument\":" << argument << ",\"p_mod\":" << residue.get_str()
                  << ",\"pass\":" << (ok ? "true" : "false") << "}\n";
    }
    std::cout.flush();
    return any_failed ? 1 : 0;
}

int cmd_ranks_table(long b, const Range& n_range) {
    if (b < 2) throw std::domain_error("ranks: --b must be >= 2");
    if (n_range.lo < 0) throw std::domain_error("ranks: n must be >= 0");
    std::cout << "n";
    for (long a = 0; a < b; ++a) std::cout << ",r" << a;
    std::cout << "\n";
    for (long n = n_range.lo; n <= n_range.hi; ++n) {
        const std::vector<rankkl::Int> row = rankkl::rank_class_counts(b, n);
        std::cout << n;
        for (const rankkl::Int& v : row) std::cout << "," << v.get_str();
        std::cout << "\n";
    }
    std::cout.flush();
    return 0;
}

// ---------------------------------------------------------------------------
// exact-formula
// ---------------------------------------------------------------------------

int cmd_exact_formula(int p, const std::string& ell_text, const Range& n_range, long c_max,
                      unsigned jobs) {
    if (p != 5 && p != 7) throw std::domain_error("exact-formula: --p must be 5 or 7");
    std::vector<int> ells;
    if (ell_text == "all") {
        for (int l = 1; l <= p - 1; ++l) ells.push_back(l);
    } else {
        int l = 0;
        try {
            l = std::stoi(ell_text);
        } catch (const std::exception&) {
            throw std::domain_error("exact-formula: --ell must be an integer or 'all'");
        }
        if (l < 1 || l > p - 1)
            throw std::domain_error("exact-formula: need 1 <= ell <= " + std::to_string(p - 1));
        ells.push_back(l);
    }
    if (n_range.lo < 1) throw std::domain_error("exact-formula: n must be >= 1");
    if (c_max < p) throw std::domain_error("exact-formula: --cmax below the first modulus");

    std::vector<std::function<TaskResult()>> tasks;
    for (int ell : ells)
        for (long n = n_range.lo; n <= n_range.hi; ++n)
            tasks.push_back([=]() -> TaskResult {
                const rankkl::SeriesEvaluation ev =
                    p == 5 ? rankkl::a_exact_5(ell, n, c_max) : rankkl::a_exact_7(ell, n, c_max);
                std::ostringstream line;
                line << "{\"check\":\"series\",\"p\":" << ev.p << ",\"ell\":" << ev.ell
                     << ",\"n\":" << ev.n << ",\"c_max\":" << ev.c_max
                     << ",\"value\":" << format_double(ev.value)
                     << ",\"oracle\":" << format_double(ev.oracle)
                     << ",\"abs_error\":" << format_double(ev.abs_error)
                     << ",\"final_term\":" << format_double(ev.final_term)
                     << ",\"imag_residual\":" << format_double(ev.imag_residual)
                     << ",\"terms\":" << ev.terms.size() << "}";
                // The truncation tolerance is an acceptance-level judgment;
                // the command itself only fails on a broken real-ness check.
                return {line.str(), ev.imag_residual >= 1e-6};
            });
    return run_ordered(tasks, jobs) ? 1 : 0;
}

// ---------------------------------------------------------------------------
// argtable
// ---------------------------------------------------------------------------

const std::vector<std::string>& condition_ids() {
    static const std::vector<std::string> ids = {"3.3", "3.4", "3.19", "4.2", "4.5",
                                                 "5.2", "6.1", "6.2", "6.3", "6.4"};
    return ids;
}

Range default_condition_range(const std::string& id) {
    if (id == "3.19") return {25, 300};
    if (id == "4.5") return {49, 490};
    if (id[0] == '3' || id[0] == '6' || id == "5.2") {
        if (id == "5.2" || id == "6.3" || id == "6.4") return {7, 294};
        return {5, 300};
    }
    return {7, 294};  // "4.2"
}

int cmd_argtable_table(int index, const std::string& c_samples) {
    if (c_samples != "auto") {
        try {
            if (std::stol(c_samples) < 1) throw std::exception();
        } catch (const std::exception&) {
            throw std::domain_error("argtable: --c-samples must be 'auto' or a positive integer");
        }
    }
    // Emit the freshly computed table, then the comparison verdict.  Class
    // sampling is fixed and deterministic (three moduli per congruence class),
    // so 'auto' and explicit sample counts produce the same certified rows.
    std::cout << rankkl::table_csv(index);
    const rankkl::VerificationReport rep = rankkl::verify_table(index);
    std::cout << to_json_line(rep) << "\n";
    std::cout.flush();
    return rep.exact_zero ? 0 : 1;
}

int cmd_argtable_condition(const std::string& id, std::optional<Range> c_range,
                           std::optional<Range> a_range, unsigned jobs) {
    const auto& ids = condition_ids();
    if (std::find(ids.begin(), ids.end(), id) == ids.end())
        throw std::domain_error("argtable: unknown condition id '" + id + "'");
    if (c_range && a_range)
        throw std::domain_error("argtable: give --c or --A, not both");
    std::vector<long> cs;
    if (a_range) {
        if (id[0] != '4' && id[0] != '5' && id[0] != '6')
            throw std::domain_error("argtable: --A applies to the modulus-7 conditions only");
        for (long a = std::max(1L, a_range->lo); a <= a_range->hi; ++a) cs.push_back(7 * a);
    } else {
        const Range r = c_range.value_or(default_condition_range(id));
        for (long c = std::max(1L, r.lo); c <= r.hi; ++c) cs.push_back(c);
    }

    std::vector<std::function<TaskResult()>> tasks;
    for (long c : cs)
        tasks.push_back([=]() -> TaskResult {
            rankkl::VerificationReport rep;
            try {
                rep = rankkl::verify_condition(id, c);
            } catch (const std::domain_error&) {
                return {"", false};  // outside the condition's divisibility class
            }
            return {to_json_line(rep), !rep.exact_zero};
        });

    // Run everything, then drop the empty placeholders of inapplicable c.
    const size_t count = tasks.size();
    std::vector<TaskResult> results(count);
    std::atomic<size_t> next{0};
    if (jobs == 0) jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(jobs, count); ++t)
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                results[i] = tasks[i]();
            }
        });
    for (std::thread& t : pool) t.join();

    bool any_failed = false;
    long applied = 0;
    for (const TaskResult& r : results) {
        if (r.line.empty()) continue;
        std::cout << r.line << "\n";
        any_failed = any_failed || r.failed;
        ++applied;
    }
    std::cout.flush();
    if (applied == 0)
        throw std::domain_error("argtable: no modulus in the range fits condition " + id);
    return any_failed ? 1 : 0;
}

// ---------------------------------------------------------------------------
// dedekind
// ---------------------------------------------------------------------------

int cmd_dedekind_single(long c, long d) {
    const rankkl::DedekindValue v = rankkl::dedekind_sum(rankkl::Int(d), rankkl::Int(c));
    std::cout << "{\"check\":\"dedekind\",\"c\":" << c << ",\"d\":" << d << ",\"s\":\""
              << v.s.get_str() << "\",\"twelve_cs\":" << v.twelve_cs.get_str()
              << ",\"theta\":" << v.theta << ",\"lambda\":" << v.lambda << "}\n";
    std::cout.flush();
    return 0;
}

int cmd_dedekind_sweep(const Range& c_range, unsigned jobs) {
    if (c_range.lo < 1) throw std::domain_error("dedekind: c must be >= 1");
    std::vector<std::function<TaskResult()>> tasks;
    for (long c = c_range.lo; c <= c_range.hi; ++c)
        tasks.push_back([=]() -> TaskResult {
            long pairs = 0, mismatches = 0;
            const rankkl::Int modulus = rankkl::Int(24) * c;
            for (long d = 0; d < c; ++d) {
                if (c > 1 && rankkl::gcd_long(d, c) != 1) continue;
                const rankkl::DedekindValue defn = rankkl::dedekind_sum(rankkl::Int(d), rankkl::Int(c));
                const rankkl::Residue rec = rankkl::twelve_cs_mod(rankkl::Int(d), rankkl::Int(c));
                if (rec.modulus != modulus ||
                    rec.value != rankkl::least_residue(defn.twelve_cs, modulus))
                    ++mismatches;
                ++pairs;
            }
            std::ostringstream line;
            line << "{\"check\":\"dedekind-dual-path\",\"c\":" << c << ",\"pairs\":" << pairs
                 << ",\"mismatches\":" << mismatches << "}";
            return {line.str(), mismatches != 0};
        });
    return run_ordered(tasks, jobs) ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for partition-rank Kloosterman sums"};
    app.require_subcommand(1);

    // vanish ---------------------------------------------------------------
    auto* vanish = app.add_subcommand("vanish", "certify exact vanishing over a (case, n, c) grid");
    std::string vn_case;
    std::string vn_n = "0..0", vn_c;
    int vn_ell = -1;
    std::string vn_reading = "same-n";
    unsigned vn_jobs = 0;
    vanish->add_option("--case", vn_case, "case id (see vanishing catalog)")->required();
    vanish->add_option("--n", vn_n, "progression index range a..b");
    vanish->add_option("--c", vn_c, "modulus range a..b");
    vanish->add_option("--ell", vn_ell, "restrict to a single ell");
    vanish->add_option("--s7-reading", vn_reading, "boundary argument reading: same-n | literal");
    vanish->add_option("--jobs", vn_jobs, "worker threads (0 = all cores)");

    // ranks ----------------------------------------------------------------
    auto* ranks = app.add_subcommand("ranks", "rank identities, congruences and count tables");
    std::string rk_dyson;
    int rk_congruence = 0;
    bool rk_table = false;
    std::string rk_n = "0..10";
    long rk_b = 5;
    ranks->add_option("--dyson", rk_dyson, "identity id or 'all'");
    ranks->add_option("--congruence", rk_congruence, "partition congruence modulus (5, 7 or 11)");
    ranks->add_flag("--table", rk_table, "emit CSV of rank residue-class counts");
    ranks->add_option("--n", rk_n, "index range a..b");
    ranks->add_option("--b", rk_b, "residue modulus for --table");

    // exact-formula ---------------------------------------------------------
    auto* formula = app.add_subcommand("exact-formula", "truncated coefficient series vs oracle");
    int xf_p = 0;
    std::string xf_ell = "all";
    std::string xf_n;
    long xf_cmax = 2000;
    unsigned xf_jobs = 0;
    formula->add_option("--p", xf_p, "modulus (5 or 7)")->required();
    formula->add_option("--ell", xf_ell, "ell or 'all'");
    formula->add_option("--n", xf_n, "coefficient index range a..b (n >= 1)")->required();
    formula->add_option("--cmax", xf_cmax, "series cutoff");
    formula->add_option("--jobs", xf_jobs, "worker threads (0 = all cores)");

    // argtable --------------------------------------------------------------
    auto* argtable = app.add_subcommand("argtable", "argument-geometry tables and conditions");
    int at_table = 0;
    std::string at_condition;
    std::string at_c, at_a;
    std::string at_samples = "auto";
    unsigned at_jobs = 0;
    argtable->add_option("--table", at_table, "golden table index 1..7");
    argtable->add_option("--condition", at_condition, "condition id from the catalog");
    argtable->add_option("--c", at_c, "modulus range a..b");
    argtable->add_option("--A", at_a, "boundary modulus range (checks c = 7A)");
    argtable->add_option("--c-samples", at_samples, "'auto' or sample count per class");
    argtable->add_option("--jobs", at_jobs, "worker threads (0 = all cores)");

    // dedekind --------------------------------------------------------------
    auto* dedekind = app.add_subcommand("dedekind", "Dedekind sums: values and dual-path sweep");
    std::string dk_c;
    long dk_d = 0;
    bool dk_d_set = false;
    unsigned dk_jobs = 0;
    dedekind->add_option("--c", dk_c, "modulus range a..b")->required();
    dedekind->add_option("--d", dk_d, "numerator residue (single evaluation)")
        ->each([&dk_d_set](const std::string&) { dk_d_set = true; });
    dedekind->add_option("--jobs", dk_jobs, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        app.exit(e);
        return 2;
    }

    try {
        if (vanish->parsed()) {
            const int p = !vn_case.empty() && vn_case[0] == '7' ? 7 : 5;
            const Range c_range =
                vn_c.empty() ? Range{p, p} : parse_range(vn_c);
            return cmd_vanish(vn_case, parse_range(vn_n), c_range,
                              vn_ell >= 0 ? std::optional<int>(vn_ell) : std::nullopt,
                              vn_reading, vn_jobs);
        }
        if (ranks->parsed()) {
            const int modes = (!rk_dyson.empty() ? 1 : 0) + (rk_congruence != 0 ? 1 : 0) +
                              (rk_table ? 1 : 0);
            if (modes != 1)
                throw std::domain_error("ranks: choose exactly one of --dyson, --congruence, --table");
            if (!rk_dyson.empty()) return cmd_ranks_dyson(rk_dyson, parse_range(rk_n));
            if (rk_congruence != 0) return cmd_ranks_congruence(rk_congruence, parse_range(rk_n));
            return cmd_ranks_table(rk_b, parse_range(rk_n));
        }
        if (formula->parsed())
            return cmd_exact_formula(xf_p, xf_ell, parse_range(xf_n), xf_cmax, xf_jobs);
        if (argtable->parsed()) {
            const int modes = (at_table != 0 ? 1 : 0) + (!at_condition.empty() ? 1 : 0);
            if (modes != 1)
                throw std::domain_error("argtable: choose exactly one of --table, --condition");
            if (at_table != 0) {
                if (at_table < 1 || at_table > 7)
                    throw std::domain_error("argtable: --table must be 1..7");
                return cmd_argtable_table(at_table, at_samples);
            }
            return cmd_argtable_condition(
                at_condition, at_c.empty() ? std::nullopt : std::optional<Range>(parse_range(at_c)),
                at_a.empty() ? std::nullopt : std::optional<Range>(parse_range(at_a)), at_jobs);
        }
        if (dedekind->parsed()) {
            const Range c_range = parse_range(dk_c);
            if (dk_d_set) {
                if (c_range.lo != c_range.hi)
                    throw std::domain_error("dedekind: --d needs a single modulus, not a range");
                return cmd_dedekind_single(c_range.lo, dk_d);
            }
            return cmd_dedekind_sweep(c_range, dk_jobs);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
