// Acceptance harness: eight certification criteria, each printed as a single
// [PASS]/[FAIL] line with its elapsed time and a short account of what was
// checked.  Exit status is 0 only when every criterion passes.
//
// All tolerances and time budgets are pinned here as constexpr values; the
// checks themselves call the library exactly as the command-line driver does.

#include "rankkl/argcheck.hpp"
#include "rankkl/arith.hpp"
#include "rankkl/cyclotomic.hpp"
#include "rankkl/dedekind.hpp"
#include "rankkl/exactformula.hpp"
#include "rankkl/kloosterman.hpp"
#include "rankkl/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using namespace rankkl;
using Clock = std::chrono::steady_clock;

// Pinned budgets (seconds) and tolerances.
constexpr double kBudgetQuinticSec = 300.0;   // criterion 1
constexpr double kBudgetSepticSec = 600.0;    // criterion 2
constexpr double kBudgetDedekindSec = 120.0;  // criterion 4
constexpr long kSeriesCutoff = 2000;          // criterion 6
constexpr double kSeriesAbsFloor = 1e-2;      // criterion 6: error < max(floor, 5|final|)
constexpr double kSeriesFinalFactor = 5.0;
constexpr double kSeriesImagTol = 1e-6;
constexpr double kEmbedTol = 1e-9;     // exact-vs-embedding agreement
constexpr double kFloatPathTol = 1e-6; // exact-vs-floating cross-checks

unsigned hw_jobs() {
    const unsigned j = std::thread::hardware_concurrency();
    return j == 0 ? 1 : j;
}

void parallel_for(long count, const std::function<void(long)>& body) {
    if (count <= 0) return;
    const unsigned jobs = static_cast<unsigned>(
        std::min<long>(static_cast<long>(hw_jobs()), count));
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const long i = next.fetch_add(1);
                if (i >= count) return;
                body(i);
            }
        });
    for (std::thread& t : pool) t.join();
}

// Thread-safe failure collector keeping the first few descriptions.
class FailureLog {
public:
    void add(const std::string& what) {
        std::lock_guard<std::mutex> lock(mu_);
        ++count_;
        if (messages_.size() < 3) messages_.push_back(what);
    }
    bool empty() const { return count_ == 0; }
    std::string brief() const {
        std::ostringstream out;
        out << count_ << " failed check(s): ";
        for (size_t i = 0; i < messages_.size(); ++i) out << (i ? "; " : "") << messages_[i];
        if (static_cast<size_t>(count_) > messages_.size()) out << "; ...";
        return out.str();
    }

private:
    mutable std::mutex mu_;
    long count_ = 0;
    std::vector<std::string> messages_;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

bool run_criterion(int index, const char* name, double budget_seconds,
                   const std::function<bool(std::string&)>& body) {
    const auto t0 = Clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        pass = false;
        detail = std::string("unexpected exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (pass && budget_seconds > 0 && secs > budget_seconds) {
        pass = false;
        std::ostringstream over;
        over << detail << " [time budget exceeded: " << secs << " s > " << budget_seconds
             << " s allowed]";
        detail = over.str();
    }
    std::printf("[%s] %d. %s (%.1f s)%s%s\n", pass ? "PASS" : "FAIL", index, name, secs,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    return pass;
}

// ---------------------------------------------------------------------------
// 1. Quintic vanishing: full sums and every orbit partial, exactly zero.
// ---------------------------------------------------------------------------

bool criterion_quintic(std::string& detail) {
    FailureLog log;
    std::atomic<long> full_checks{0}, orbit_checks{0};
    std::vector<long> cs;
    for (long c = 5; c <= 100; c += 5) cs.push_back(c);
    parallel_for(static_cast<long>(cs.size()), [&](long i) {
        const long c = cs[i];
        for (long n = 0; n <= 9; ++n) {
            const VerificationReport rep = vanish_case("5-4", n, c);
            if (rep.skipped || !rep.exact_zero)
                log.add("full sum not certified at c=" + std::to_string(c) +
                        " n=" + std::to_string(n));
            ++full_checks;
        }
        const long cp = c / 5;
        const long M = exact_conductor(c);
        long covered = 0;
        for (long r = 1; r <= cp; ++r) {
            if (gcd_long(r, cp) != 1) continue;
            const OrbitChoice orbit = build_orbit(5, c, r);
            covered += static_cast<long>(orbit.d_list.size());
            for (int ell = 1; ell <= 4; ++ell)
                for (long n = 0; n <= 9; ++n) {
                    if (!exact_term_sum(5, c, orbit.d_list, ell, 5 * n + 4, M).is_zero())
                        log.add("orbit partial not zero at c=" + std::to_string(c) +
                                " r=" + std::to_string(r) + " ell=" + std::to_string(ell) +
                                " n=" + std::to_string(n));
                    ++orbit_checks;
                }
        }
        if (covered != euler_phi(c))
            log.add("orbit partition incomplete at c=" + std::to_string(c));
    });
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << full_checks.load() << " full sums (all ell at once) and " << orbit_checks.load()
        << " orbit partial sums certified exactly zero over 5 | c <= 100, n = 0..9, ell = 1..4";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 2. Septic vanishing: side-condition classes plus the boundary case in both
//    display forms.
// ---------------------------------------------------------------------------

bool criterion_septic(std::string& detail) {
    FailureLog log;
    std::atomic<long> plain{0}, boundary{0};
    std::vector<long> cs;
    for (long c = 7; c <= 98; c += 7) cs.push_back(c);
    parallel_for(static_cast<long>(cs.size()), [&](long i) {
        const long c = cs[i];
        for (long n = 0; n <= 4; ++n) {
            // The report certifies every ell off the excluded boundary classes
            // and names the certified ell in its note; a skip here would mean
            // no admissible ell at all, which cannot happen.
            const VerificationReport rep = vanish_case("7-5-1", n, c);
            if (rep.skipped || !rep.exact_zero)
                log.add("side-condition sum not certified at c=" + std::to_string(c) +
                        " n=" + std::to_string(n));
            else
                ++plain;
        }
    });
    std::vector<long> as;
    for (long a = 1; a <= 20; ++a)
        if (a % 7 != 0) as.push_back(a);
    parallel_for(static_cast<long>(as.size()), [&](long i) {
        const long c = 7 * as[i];
        for (long n = 0; n <= 4; ++n) {
            // Both display forms of the combined sum are certified inside the
            // case evaluation (their exact quarter-turn relation is asserted).
            const VerificationReport rep = vanish_case("7-5-2", n, c);
            if (rep.skipped || !rep.exact_zero)
                log.add("boundary sum not certified at c=" + std::to_string(c) +
                        " n=" + std::to_string(n));
            else
                ++boundary;
        }
    });
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << plain.load()
        << " side-condition instances (7 | c <= 98, n = 0..4, boundary classes excluded "
           "per-instance in the report notes) and "
        << boundary.load()
        << " boundary instances (c = 7a, a <= 20, 7 coprime to a, both display forms) certified";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 3. Eleven cosine-weighted combinations, recording which reading works.
// ---------------------------------------------------------------------------

bool criterion_combos(std::string& detail) {
    FailureLog log;
    std::atomic<long> certified{0};
    std::vector<std::pair<std::string, long>> grid;
    for (const auto& [id, w] : combo_weights()) {
        const long c_max = w.p == 5 ? 100 : 98;
        for (long c = w.p; c <= c_max; c += w.p) grid.emplace_back(id, c);
    }
    parallel_for(static_cast<long>(grid.size()), [&](long i) {
        const auto& [id, c] = grid[i];
        for (long n = 0; n <= 4; ++n) {
            const VerificationReport rep =
                vanish_case(id, n, c, std::nullopt, S7Reading::same_n);
            if (rep.skipped || !rep.exact_zero)
                log.add("combination " + id + " not certified at c=" + std::to_string(c) +
                        " n=" + std::to_string(n));
            else
                ++certified;
        }
    });
    // The alternative reading of the boundary summand must demonstrably fail.
    const VerificationReport literal =
        vanish_case("7-0", 0, 14, std::nullopt, S7Reading::literal);
    if (literal.exact_zero || literal.float_abs < 1e-3)
        log.add("literal-reading witness unexpectedly vanished");
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << certified.load()
        << " weighted-combination instances certified exactly zero across all eleven cases "
           "(qualifying c up to 98/100, n = 0..4); reading=same-n succeeds, the literal "
           "reading fails on its witness (|sum| = "
        << fmt(literal.float_abs) << " at c=14)";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 4. Dedekind sums: definitional, reciprocity-backed, and congruence paths.
// ---------------------------------------------------------------------------

bool criterion_dedekind(std::string& detail) {
    FailureLog log;
    std::atomic<long> pairs{0};
    parallel_for(300, [&](long i) {
        const long c = i + 1;
        const Int modulus = Int(24) * Int(c);
        for (long d = 0; d < std::max(c, 1L); ++d) {
            if (c > 1 && gcd_long(d, c) != 1) continue;
            if (c == 1 && d > 0) break;
            const DedekindValue defn = dedekind_sum(Int(d), Int(c));
            const Residue dual = twelve_cs_mod(Int(d), Int(c));
            const bool ok = dual.modulus == modulus &&
                            dual.value == least_residue(defn.twelve_cs, modulus) &&
                            dedekind_sum_recursive(Int(d), Int(c)) == defn.s;
            if (!ok)
                log.add("mismatch at (d, c) = (" + std::to_string(d) + ", " +
                        std::to_string(c) + ")");
            ++pairs;
        }
    });
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << pairs.load()
        << " coprime pairs with c <= 300: congruence path = definitional sums mod 24c, "
           "reciprocity recursion = definitional values, 0 mismatches";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 5. Rank oracles: enumeration vs generating function, identities,
//    congruences.
// ---------------------------------------------------------------------------

bool criterion_oracles(std::string& detail) {
    FailureLog log;
    parallel_for(46, [&](long n) {
        if (rank_counts(n, RankMethod::enumerate) != rank_counts(n, RankMethod::qseries))
            log.add("rank-count oracle mismatch at n=" + std::to_string(n));
    });
    static const char* ids[] = {"5-1", "5-2", "5-4", "7-0", "7-1",
                                "7-2", "7-3", "7-4", "7-5", "7-6"};
    long identity_checks = 0;
    for (const char* id : ids) {
        const DysonCase dc = dyson_case(id);
        for (long n = 0; dc.b * n + dc.k <= 45; ++n) {
            if (!dyson_identity_check(id, n))
                log.add(std::string("rank identity ") + id + " fails at n=" + std::to_string(n));
            ++identity_checks;
        }
    }
    long congruence_checks = 0;
    for (long m = 0; m <= 200; ++m) {
        const bool c5 = m % 5 == 4 && least_residue(partition_count(m), Int(5)) != 0;
        const bool c7 = m % 7 == 5 && least_residue(partition_count(m), Int(7)) != 0;
        const bool c11 = m % 11 == 6 && least_residue(partition_count(m), Int(11)) != 0;
        if (c5 || c7 || c11) log.add("partition congruence fails at m=" + std::to_string(m));
        if (m % 5 == 4) ++congruence_checks;
        if (m % 7 == 5) ++congruence_checks;
        if (m % 11 == 6) ++congruence_checks;
    }
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << "enumeration and generating-function rank tables agree for n <= 45; "
        << identity_checks << " rank-identity instances with argument <= 45 hold; "
        << congruence_checks << " partition congruences with argument <= 200 hold";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 6. Truncated coefficient series against the exact rank oracle.
// ---------------------------------------------------------------------------

bool criterion_series(std::string& detail) {
    struct Cell {
        int p;
        int ell;
        long n;
    };
    std::vector<Cell> cells;
    for (int p : {5, 7})
        for (int ell = 1; ell <= p - 1; ++ell)
            for (long n = 1; n <= 6; ++n) cells.push_back({p, ell, n});
    std::vector<char> ok(cells.size(), 0);
    std::vector<double> errs(cells.size(), 0.0), imags(cells.size(), 0.0);
    parallel_for(static_cast<long>(cells.size()), [&](long i) {
        const Cell& cell = cells[i];
        const SeriesEvaluation ev = cell.p == 5 ? a_exact_5(cell.ell, cell.n, kSeriesCutoff)
                                                : a_exact_7(cell.ell, cell.n, kSeriesCutoff);
        errs[i] = ev.abs_error;
        imags[i] = ev.imag_residual;
        const double allowed =
            std::max(kSeriesAbsFloor, kSeriesFinalFactor * std::abs(ev.final_term));
        ok[i] = (ev.abs_error < allowed && ev.imag_residual < kSeriesImagTol) ? 1 : 0;
    });
    long failing = 0;
    double max_err = 0.0, max_imag = 0.0;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (!ok[i]) ++failing;
        max_err = std::max(max_err, errs[i]);
        max_imag = std::max(max_imag, imags[i]);
    }
    std::ostringstream out;
    if (failing == 0) {
        out << cells.size() << " cells (p in {5,7}, all ell, n = 1..6) within tolerance at "
            << "cutoff " << kSeriesCutoff << "; max abs error " << fmt(max_err);
    } else {
        out << failing << "/" << cells.size() << " cells exceed the truncation tolerance "
            << "max(1e-2, 5|final term|) at cutoff " << kSeriesCutoff << " (max abs error "
            << fmt(max_err) << ", max imaginary residual " << fmt(max_imag)
            << "); the tail of the modified-Bessel series decays too slowly at this cutoff "
               "for these cells, while the unit-test convergence witness shows the error "
               "shrinking as the cutoff grows";
    }
    detail = out.str();
    return failing == 0;
}

// ---------------------------------------------------------------------------
// 7. Golden argument tables, named conditions, rotation laws.
// ---------------------------------------------------------------------------

bool criterion_argtables(std::string& detail) {
    FailureLog log;
    for (int index = 1; index <= 7; ++index) {
        const VerificationReport rep = verify_table(index);
        if (!rep.exact_zero) log.add("golden table " + std::to_string(index) + " differs");
    }
    struct Sweep {
        const char* id;
        int class_mod;       // congruence classes recorded as c mod this
        long base, lo, hi;   // moduli base*lo .. base*hi
        bool need_all_six;   // must certify every class of c mod class_mod
    };
    const std::vector<Sweep> sweeps = {
        {"3.3", 30, 5, 1, 60, true},   {"3.4", 30, 5, 1, 60, true},
        {"6.1", 30, 5, 1, 60, true},   {"6.2", 30, 5, 1, 60, true},
        {"3.19", 30, 25, 1, 12, true}, {"4.2", 42, 7, 1, 60, true},
        {"4.5", 42, 49, 1, 10, true},  {"5.2", 42, 7, 1, 60, false},
        {"6.3", 42, 7, 1, 60, false},  {"6.4", 42, 7, 1, 60, false},
    };
    std::atomic<long> green_total{0};
    std::mutex classes_mu;
    std::vector<std::set<long>> classes(sweeps.size());
    std::vector<long> greens(sweeps.size(), 0);
    parallel_for(static_cast<long>(sweeps.size()), [&](long i) {
        const Sweep& s = sweeps[i];
        long green = 0;
        std::set<long> seen;
        for (long k = s.lo; k <= s.hi; ++k) {
            const long c = s.base * k;
            VerificationReport rep;
            try {
                rep = verify_condition(s.id, c);
            } catch (const std::domain_error&) {
                continue;  // modulus outside this condition's divisibility class
            }
            if (!rep.exact_zero) {
                log.add(std::string(s.id) + " fails at c=" + std::to_string(c));
                continue;
            }
            ++green;
            seen.insert(c % s.class_mod);
        }
        {
            std::lock_guard<std::mutex> lock(classes_mu);
            classes[i] = std::move(seen);
            greens[i] = green;
        }
        green_total += green;
    });
    for (size_t i = 0; i < sweeps.size(); ++i) {
        if (greens[i] == 0)
            log.add(std::string(sweeps[i].id) + ": no applicable modulus in its sweep");
        else if (sweeps[i].need_all_six && classes[i].size() != 6)
            log.add(std::string(sweeps[i].id) + ": only " + std::to_string(classes[i].size()) +
                    "/6 congruence classes certified");
    }
    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << "7 golden tables byte-identical to the freshly computed CSV; " << green_total.load()
        << " condition instances green across the catalog, covering every congruence class "
           "mod 30 (plain and squared quintic moduli) and mod 42 (plain and squared septic "
           "moduli), rotation laws included";
    detail = out.str();
    return true;
}

// ---------------------------------------------------------------------------
// 8. Property suites: a compact rerun of the per-module invariants.
// ---------------------------------------------------------------------------

bool criterion_properties(std::string& detail) {
    FailureLog log;
    long checks = 0;
    std::mt19937_64 rng(20260823);
    auto expect = [&](bool ok, const char* what) {
        if (!ok) log.add(what);
        ++checks;
    };

    // Integer layer: Kronecker multiplicativity and quadratic reciprocity.
    auto odd_part_sign = [](long v) {
        while (v % 2 == 0) v /= 2;
        return v;
    };
    for (int trial = 0; trial < 1500; ++trial) {
        const long a = static_cast<long>(rng() % 201) - 100;
        const long b = static_cast<long>(rng() % 201) - 100;
        const long n = static_cast<long>(rng() % 201) - 100;
        if (n != 0)
            expect(kronecker(a * b, n) == kronecker(a, n) * kronecker(b, n),
                   "Kronecker top multiplicativity");
        if (a != 0 && b != 0)
            expect(kronecker(n, a * b) == kronecker(n, a) * kronecker(n, b),
                   "Kronecker bottom multiplicativity");
        if (a != 0 && n != 0 && gcd_long(std::abs(a), std::abs(n)) == 1) {
            const long ap = odd_part_sign(a), np = odd_part_sign(n);
            int expected = (least_residue(ap, 4) == 3 && least_residue(np, 4) == 3) ? -1 : 1;
            if (a < 0 && n < 0) expected = -expected;
            expect(kronecker(a, n) * kronecker(n, a) == expected, "Kronecker reciprocity");
        }
    }
    // Sawtooth: odd, bounded, zero at integers.
    for (long den = 1; den <= 24; ++den)
        for (long num = -49; num <= 49; ++num) {
            const Rat x = make_rat(num, den);
            expect(sawtooth(x) == -sawtooth(-x), "sawtooth oddness");
            expect(sawtooth(x) <= Rat(1, 2) && sawtooth(x) >= -Rat(1, 2), "sawtooth bound");
        }

    // Cyclotomic layer: ring axioms and the embedding homomorphism.
    auto random_element = [&rng](long M) {
        std::vector<Rat> powers(static_cast<size_t>(M), Rat(0));
        for (int k = 0; k < 6; ++k)
            powers[rng() % M] += Rat(static_cast<long>(rng() % 11) - 5);
        return CycElement::from_powers(M, powers);
    };
    for (long M : {24L, 40L, 84L}) {
        for (int trial = 0; trial < 10; ++trial) {
            const CycElement a = random_element(M), b = random_element(M), c = random_element(M);
            expect((a + b) * c == a * c + b * c, "distributivity");
            expect(a * b == b * a, "commutativity");
            const std::complex<double> lhs = embed(a * b), rhs = embed(a) * embed(b);
            expect(std::abs(lhs - rhs) < kEmbedTol, "embedding homomorphism");
        }
        expect(sqrt7(168) * sqrt7(168) == CycElement::from_rat(168, Rat(7)),
               "sqrt(7) squares to 7");
    }

    // Dedekind layer: reciprocity on random coprime pairs.
    for (int trial = 0; trial < 300; ++trial) {
        const long c = 2 + static_cast<long>(rng() % 399);
        long d = 1 + static_cast<long>(rng() % (c - 1));
        if (gcd_long(d, c) != 1) continue;
        const Rat lhs = dedekind_sum(Int(d), Int(c)).s + dedekind_sum(Int(c), Int(d)).s;
        const Rat rhs = Rat(-1, 4) + (make_rat(d, c) + make_rat(1, d * c) + make_rat(c, d)) / 12;
        expect(lhs == rhs, "Dedekind reciprocity");
    }

    // Partition layer: row sums and rank symmetry.
    const RankTable& table = rank_table(120);
    for (long n = 0; n <= 120; ++n) {
        Int total = 0;
        for (long m = -n; m <= n; ++m) total += table.rank_count(m, n);
        expect(total == partition_count(n), "rank row sums to p(n)");
    }
    for (long n = 0; n <= 40; ++n) {
        const auto counts = rank_counts(n, RankMethod::enumerate);
        bool symmetric = true;
        for (const auto& [m, cnt] : counts) {
            const auto it = counts.find(-m);
            symmetric = symmetric && it != counts.end() && it->second == cnt;
        }
        expect(symmetric, "rank symmetry m <-> -m");
    }

    // Kloosterman layer: exact/floating duality and the orbit regrouping.
    for (const auto& [p, c] : std::vector<std::pair<int, long>>{{5, 30}, {5, 25}, {7, 21}, {7, 49}}) {
        for (int ell = 1; ell <= p - 1; ++ell) {
            const KloostermanValue ex = s_inf_inf(p, ell, 3, c, EvalMode::exact);
            const KloostermanValue fl = s_inf_inf(p, ell, 3, c, EvalMode::floating);
            expect(ex.exact.has_value(), "exact mode carries the field element");
            expect(std::abs(embed(*ex.exact) - ex.approx) < kEmbedTol,
                   "exact-mode approximation is the embedding");
            expect(std::abs(ex.approx - fl.approx) < kFloatPathTol, "exact/floating duality");
            expect(ex.terms == fl.terms, "term counts agree across paths");
        }
    }
    {
        const long c = 30, M = exact_conductor(c);
        const KloostermanValue whole = s_inf_inf(5, 2, 4, c, EvalMode::exact);
        CycElement sum = CycElement::zero(M);
        for (long r = 1; r <= c / 5; ++r) {
            if (gcd_long(r, c / 5) != 1) continue;
            sum += exact_term_sum(5, c, build_orbit(5, c, r).d_list, 2, 4, M);
        }
        expect(whole.exact.has_value() &&
                   *whole.exact == mul_phase(sum, {SparsePhase{-M / 8, Rat(1)}}),
               "whole sum equals phased orbit regrouping");
    }

    // Series layer: the half-order Bessel closed form and term bookkeeping.
    for (int trial = 0; trial < 50; ++trial) {
        const double x = 0.05 + 0.25 * static_cast<double>(rng() % 100);
        const double closed = std::sqrt(2.0 / (M_PI * x)) * std::sinh(x);
        expect(std::abs(bessel_i_half(x) - closed) < 1e-12 * std::max(1.0, closed),
               "half-order Bessel closed form");
    }
    {
        const SeriesEvaluation ev = a_exact_5(1, 1, 300);
        expect(!ev.terms.empty() && ev.terms.back().partial == ev.value,
               "series partials chain to the value");
        expect(std::abs(ev.oracle - 1.0) == 0.0, "series oracle pins the exact coefficient");
    }

    // Argument-geometry layer: exact cosecant identities, canonical factors,
    // and the paired-move cancellation.
    expect(csc_identities_hold(), "cosecant identities in the cyclotomic fields");
    {
        const OrbitChoice orbit = build_orbit(5, 35, 3);
        for (int j = 1; j <= 4; ++j)
            for (int ell = 1; ell <= 2; ++ell) {
                const FactoredTerm t = factor_term(orbit, j, ell, 4);
                expect(t.total_arg == fold_turns(t.f1.arg_turns + t.f2.arg_turns + t.f3.arg_turns),
                       "factored arguments sum to the total");
            }
    }
    for (long r : {1L, 5L}) {
        const OrbitChoice orbit = build_orbit(5, 30, r);
        for (int ell = 1; ell <= 2; ++ell) {
            expect(fold_turns(arg_diff(orbit, 0, 1, 2, ell) + arg_diff(orbit, 0, 4, 3, ell)) == Rat(0),
                   "paired moves cancel (outer)");
            expect(fold_turns(arg_diff(orbit, 0, 1, 3, ell) + arg_diff(orbit, 0, 4, 2, ell)) == Rat(0),
                   "paired moves cancel (crossed)");
        }
    }

    if (!log.empty()) {
        detail = log.brief();
        return false;
    }
    std::ostringstream out;
    out << checks << " property checks green across all eight modules (fixed seed 20260823)";
    detail = out.str();
    return true;
}

}  // namespace

int main() {
    std::printf("rankkl acceptance harness\n");
    bool all = true;
    all &= run_criterion(1, "quintic progression sums vanish exactly (full and per-orbit)",
                         kBudgetQuinticSec, criterion_quintic);
    all &= run_criterion(2, "septic progression sums vanish exactly (side conditions and boundary)",
                         kBudgetSepticSec, criterion_septic);
    all &= run_criterion(3, "cosine-weighted combinations vanish exactly (reading recorded)", 0,
                         criterion_combos);
    all &= run_criterion(4, "Dedekind sums agree across independent evaluation paths",
                         kBudgetDedekindSec, criterion_dedekind);
    all &= run_criterion(5, "rank oracles, identities and congruences agree", 0, criterion_oracles);
    all &= run_criterion(6, "truncated coefficient series meets its error tolerance", 0,
                         criterion_series);
    all &= run_criterion(7, "golden argument tables and named conditions certified", 0,
                         criterion_argtables);
    all &= run_criterion(8, "module property suites hold", 0, criterion_properties);
    std::printf("%s\n", all ? "ACCEPTANCE: PASS (8/8)" : "ACCEPTANCE: FAIL");
    return all ? 0 : 1;
}
