#include "rankkl/argcheck.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <sstream>
#include <stdexcept>

#include "rankkl/dedekind.hpp"
#include "rankkl/kloosterman.hpp"

namespace rankkl {

namespace {

constexpr unsigned long kSampleSeed = 20260823UL;

double elapsed_ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

long long checked_exponent(const Rat& turns, long M) {
    Rat scaled = fold_turns(turns) * M;
    scaled.canonicalize();
    if (scaled.get_den() != 1)
        throw std::logic_error("argcheck: phase denominator does not divide the conductor");
    return scaled.get_num().get_si();
}

std::string rat_str(const Rat& x) {
    Rat f = fold_turns(x);
    std::string s = f.get_num().get_str();
    if (f.get_den() != 1) s += "/" + f.get_den().get_str();
    return s;
}

// The unreduced inverse representative paired with term j: the chain entry
// a_{jbar} with jbar = j^{-1} mod p, or the plain inverse on progressions.
long inverse_rep(const OrbitChoice& orbit, int j) {
    if (!orbit.a_list.empty()) {
        const long jbar = mod_inverse(static_cast<long>(j), static_cast<long>(orbit.p));
        return orbit.a_list[static_cast<size_t>(jbar - 1)];
    }
    return mod_inverse(least_residue(orbit.d_list[static_cast<size_t>(j - 1)], orbit.c), orbit.c);
}

Rat pick_component(const FactoredTerm& t, int component) {
    switch (component) {
        case 0: return t.total_arg;
        case 1: return t.f1.arg_turns;
        case 2: return t.f2.arg_turns;
        case 3: return t.f3.arg_turns;
    }
    throw std::domain_error("argcheck: component must be 0 (total) or 1..3");
}

// Residue classes to verify: every coprime class when c' is small, otherwise
// a fixed-seed sample of 10 (recorded in the report note).
std::vector<long> residue_samples(long c_prime, std::string& note) {
    std::vector<long> rs;
    if (c_prime <= 60) {
        for (long r = 1; r <= c_prime; ++r) {
            const long rm = least_residue(r, c_prime);
            if (gcd_long(rm, c_prime) == 1) rs.push_back(rm);
        }
        note = "sample=all";
        return rs;
    }
    std::mt19937_64 rng(kSampleSeed);
    while (rs.size() < 10) {
        const long r = 1 + static_cast<long>(rng() % static_cast<unsigned long>(c_prime - 1));
        if (gcd_long(r, c_prime) != 1) continue;
        if (std::find(rs.begin(), rs.end(), r) == rs.end()) rs.push_back(r);
    }
    std::sort(rs.begin(), rs.end());
    note = "sample=10;seed=" + std::to_string(kSampleSeed);
    return rs;
}

// Total-argument differences between consecutive orbit terms, including the
// wrap-around step back to the first term.
std::vector<Rat> consecutive_totals(const OrbitChoice& orbit, int ell, long k) {
    const size_t n = orbit.d_list.size();
    std::vector<Rat> args(n);
    for (size_t i = 0; i < n; ++i)
        args[i] = factor_term(orbit, static_cast<int>(i) + 1, ell, k).total_arg;
    std::vector<Rat> diffs(n);
    for (size_t i = 0; i < n; ++i) diffs[i] = fold_turns(args[(i + 1) % n] - args[i]);
    return diffs;
}

// Collects cell comparisons and keeps a bounded list of mismatch messages.
struct CellChecker {
    long cells = 0;
    long mismatches = 0;
    std::vector<std::string> bad;

    void expect(const std::string& label, const Rat& got, const Rat& want) {
        ++cells;
        if (fold_turns(got) != fold_turns(want)) {
            ++mismatches;
            if (bad.size() < 5)
                bad.push_back(label + " got " + rat_str(got) + " want " + rat_str(want));
        }
    }

    std::string summary() const {
        if (mismatches == 0) return "";
        std::string s = "; mismatches=" + std::to_string(mismatches);
        for (const std::string& b : bad) s += "; " + b;
        if (mismatches > static_cast<long>(bad.size())) s += "; ...";
        return s;
    }
};

template <typename Map, typename Key>
const typename Map::mapped_type& lookup(const Map& map, const Key& key, const char* what) {
    auto it = map.find(key);
    if (it == map.end()) throw std::logic_error(std::string("argcheck: no table row for ") + what);
    return it->second;
}

int folded_class(long value, int p) {
    const int m = static_cast<int>(least_residue(value, static_cast<long>(p)));
    if (m == 0) throw std::logic_error("argcheck: residue class collapses");
    return std::min(m, p - m);
}

}  // namespace

OrbitChoice build_orbit(int p, long c, long r) {
    if (p != 5 && p != 7) throw std::domain_error("build_orbit: modulus must be 5 or 7");
    if (c < p || c % p != 0)
        throw std::domain_error("build_orbit: c must be a positive multiple of the modulus");
    OrbitChoice o;
    o.p = p;
    o.c = c;
    o.c_prime = c / p;
    o.r = least_residue(r, o.c_prime);
    if (gcd_long(o.r, o.c_prime) != 1)
        throw std::domain_error("build_orbit: r must be coprime to c': gcd(" + std::to_string(o.r) +
                                ", " + std::to_string(o.c_prime) + ") != 1");
    if (o.c_prime % p != 0) {
        o.beta = mod_inverse(least_residue(o.c_prime, static_cast<long>(p)), static_cast<long>(p));
        const long k0 =
            least_residue(o.beta * least_residue(1 - o.r, static_cast<long>(p)), static_cast<long>(p));
        const long d1 = o.r + k0 * o.c_prime;
        if (d1 <= 0 || d1 >= c || gcd_long(d1, c) != 1)
            throw std::logic_error("build_orbit: anchor residue construction failed");
        const long a1 = mod_inverse(d1, c);
        o.d_list.resize(static_cast<size_t>(p - 1));
        o.a_list.resize(static_cast<size_t>(p - 1));
        for (int j = 0; j < p - 1; ++j) {
            o.d_list[static_cast<size_t>(j)] = d1 + static_cast<long>(j) * o.beta * o.c_prime;
            o.a_list[static_cast<size_t>(j)] = a1 + static_cast<long>(j) * o.beta * o.c_prime;
        }
        for (int j = 1; j <= p - 1; ++j) {
            const long jbar = mod_inverse(static_cast<long>(j), static_cast<long>(p));
            const long dj = o.d_list[static_cast<size_t>(j - 1)];
            const long aj = o.a_list[static_cast<size_t>(jbar - 1)];
            if (least_residue(Int(aj) * dj - 1, Int(c)) != 0)
                throw std::logic_error("build_orbit: inverse pairing failed");
            if (least_residue(dj, static_cast<long>(p)) != j ||
                least_residue(o.a_list[static_cast<size_t>(j - 1)], static_cast<long>(p)) != j)
                throw std::logic_error("build_orbit: residue alignment failed");
        }
    } else {
        o.beta = 0;
        long d = -1;
        for (long t = 0; t < p; ++t) {
            const long x = o.r + t * o.c_prime;
            if (gcd_long(x, c) == 1) {
                d = x;
                break;
            }
        }
        if (d <= 0) throw std::logic_error("build_orbit: no coprime representative in progression");
        o.d_list.resize(static_cast<size_t>(p));
        for (int j = 0; j < p; ++j)
            o.d_list[static_cast<size_t>(j)] = d + static_cast<long>(j) * o.c_prime;
    }
    return o;
}

FactoredTerm factor_term(const OrbitChoice& orbit, int j, int ell, long k) {
    const int p = orbit.p;
    if (j < 1 || j > static_cast<int>(orbit.d_list.size()))
        throw std::domain_error("factor_term: term index out of range");
    if (ell < 1 || ell > p - 1)
        throw std::domain_error("factor_term: need 1 <= ell <= " + std::to_string(p - 1));
    if (k < 0) throw std::domain_error("factor_term: character multiplier must be >= 0");
    const long c = orbit.c;
    const long d = orbit.d_list[static_cast<size_t>(j - 1)];
    const long a = inverse_rep(orbit, j);
    FactoredTerm t;
    // Quadratic phase on the chosen representative, cosecant sign, and the
    // uniform (-1)^{ell c} half-turn.
    Rat arg1 = make_rat(Int(-3) * orbit.c_prime * a * ell * ell, Int(2) * p);
    const long s = least_residue((a % (2L * p)) * ell, 2L * p);
    if (s % p == 0) throw std::logic_error("factor_term: cosecant argument collapses");
    if (s > p) arg1 += make_rat(1, 2);
    if ((static_cast<long long>(ell) * c) % 2 != 0) arg1 += make_rat(1, 2);
    const int m0 = static_cast<int>(s % p);
    t.f1.radius_class = std::min(m0, p - m0);
    t.f1.scale = Rat(1);
    t.f1.arg_turns = fold_turns(arg1);
    const long dm = least_residue(d, c);
    t.f2.radius_class = 0;
    t.f2.scale = Rat(1);
    t.f2.arg_turns =
        fold_turns(make_rat(Int(-static_cast<long>(twelve_cs_row(c)[static_cast<size_t>(dm)])),
                            Int(24) * c));
    t.f3.radius_class = 0;
    t.f3.scale = Rat(1);
    t.f3.arg_turns = fold_turns(make_rat(Int(k) * dm, Int(c)));
    t.total_arg = fold_turns(t.f1.arg_turns + t.f2.arg_turns + t.f3.arg_turns);
    return t;
}

Rat arg_diff(const OrbitChoice& orbit, int component, int u, int v, int ell, long k) {
    if (k < 0) k = orbit.p == 5 ? 4 : 5;
    const FactoredTerm from = factor_term(orbit, u, ell, k);
    const FactoredTerm to = factor_term(orbit, v, ell, k);
    return fold_turns(pick_component(to, component) - pick_component(from, component));
}

QPoint build_q_point(const OrbitChoice& orbit, int ell, long k) {
    if (orbit.p != 7) throw std::domain_error("build_q_point: orbit modulus must be 7");
    if (orbit.a_list.empty())
        throw std::domain_error("build_q_point: no boundary point when 7 divides c'");
    const long A = orbit.c_prime;
    const long d1 = least_residue(orbit.d_list[0], orbit.c);
    const QTermData qd = q_term_data(A, ell, d1, k);
    QPoint q;
    q.T = qd.T;
    q.B = qd.B;
    q.C = qd.C;
    q.bracket = qd.bracket;
    // The overall magnitude is 2*sqrt(7); the rational part rides on f1 and
    // the sqrt(7) enters only the exact reconstruction.
    q.f1 = {0, Rat(2), fold_turns(qd.q1)};
    q.f2 = {0, Rat(1), qd.q2};
    q.f3 = {0, Rat(1), qd.q3};
    q.total_arg = fold_turns(qd.q1 + qd.q2 + qd.q3);
    return q;
}

Rat q_to_p_diff(const OrbitChoice& orbit, int component, int ell, long k) {
    const QPoint q = build_q_point(orbit, ell, k);
    const FactoredTerm anchor = factor_term(orbit, 1, ell, k);
    Rat q_arg;
    switch (component) {
        case 0: q_arg = q.total_arg; break;
        case 1: q_arg = q.f1.arg_turns; break;
        case 2: q_arg = q.f2.arg_turns; break;
        case 3: q_arg = q.f3.arg_turns; break;
        default: throw std::domain_error("q_to_p_diff: component must be 0 (total) or 1..3");
    }
    return fold_turns(pick_component(anchor, component) - q_arg);
}

// ---------------------------------------------------------------------------
// Named argument-difference checks
// ---------------------------------------------------------------------------

namespace {

// Conditions on chained orbits (p coprime to c'): compare every consecutive
// total difference against the class table for the given shift.
void check_step_table(CellChecker& ck, const OrbitChoice& o, int ell, long shift,
                      const argdata::StepTable& table, const std::string& label) {
    const int cls = static_cast<int>(least_residue(o.c_prime, static_cast<long>(o.p)));
    const std::vector<Rat>& want = lookup(table, std::make_pair(ell, cls), label.c_str());
    const std::vector<Rat> got = consecutive_totals(o, ell, shift);
    if (got.size() != want.size()) throw std::logic_error("argcheck: step-count mismatch");
    for (size_t i = 0; i < got.size(); ++i)
        ck.expect(label + " r=" + std::to_string(o.r) + " ell=" + std::to_string(ell) + " step" +
                      std::to_string(i + 1),
                  got[i], want[i]);
}

// Progression orbits (p | c'): every step, including the wrap-around, turns
// by the same class-determined amount.
void check_rotation(CellChecker& ck, const OrbitChoice& o, int ell, long shift,
                    const argdata::RotationTable& table, const std::string& label) {
    const int cls = folded_class(o.d_list[0], o.p);
    const Rat& want =
        lookup(table, std::make_pair(static_cast<int>(shift), cls), label.c_str());
    const std::vector<Rat> got = consecutive_totals(o, ell, shift);
    for (size_t i = 0; i < got.size(); ++i)
        ck.expect(label + " r=" + std::to_string(o.r) + " ell=" + std::to_string(ell) + " step" +
                      std::to_string(i + 1),
                  got[i], want);
}

bool is_boundary(long c_prime, int ell) {
    const long b = least_residue(c_prime * ell, 7L);
    return b == 1 || b == 6;
}

}  // namespace

VerificationReport verify_condition(const std::string& id, long c, std::optional<long> r) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = id;
    rep.c = c;

    enum class Family { chain5, rot5, chain7, rot7 };
    Family family;
    if (id == "3.3" || id == "3.4" || id == "6.1" || id == "6.2")
        family = Family::chain5;
    else if (id == "3.19")
        family = Family::rot5;
    else if (id == "4.2" || id == "5.2" || id == "6.3" || id == "6.4")
        family = Family::chain7;
    else if (id == "4.5")
        family = Family::rot7;
    else
        throw std::domain_error("verify_condition: unknown condition id '" + id + "'");

    const int p = (family == Family::chain5 || family == Family::rot5) ? 5 : 7;
    rep.p = p;
    if (c < p || c % p != 0)
        throw std::domain_error("verify_condition: condition " + id + " needs c divisible by " +
                                std::to_string(p));
    const long c_prime = c / p;
    const bool progression = family == Family::rot5 || family == Family::rot7;
    if (progression && c_prime % p != 0)
        throw std::domain_error("verify_condition: condition " + id + " needs c divisible by " +
                                std::to_string(p * p));
    if (!progression && c_prime % p == 0)
        throw std::domain_error("verify_condition: condition " + id +
                                " needs c' = c/" + std::to_string(p) + " coprime to " +
                                std::to_string(p));

    std::string sample_note;
    std::vector<long> rs;
    if (r) {
        const long rm = least_residue(*r, c_prime);
        if (gcd_long(rm, c_prime) != 1)
            throw std::domain_error("verify_condition: r must be coprime to c'");
        rs = {rm};
        sample_note = "sample=r:" + std::to_string(rm);
    } else {
        rs = residue_samples(c_prime, sample_note);
    }

    CellChecker ck;
    std::string extra;
    const int cls7 = static_cast<int>(least_residue(c_prime, 7L));
    for (long rv : rs) {
        const OrbitChoice o = build_orbit(p, c, rv);
        if (id == "3.3") {
            for (int ell : {1, 2})
                check_step_table(ck, o, ell, 4, argdata::consecutive5_shift4(), id);
        } else if (id == "3.4") {
            for (int ell : {1, 2}) {
                const std::string base = id + " r=" + std::to_string(rv) + " ell=" +
                                         std::to_string(ell);
                ck.expect(base + " (1->2)+(4->3)",
                          arg_diff(o, 0, 1, 2, ell, 4) + arg_diff(o, 0, 4, 3, ell, 4), Rat(0));
                ck.expect(base + " (1->3)+(4->2)",
                          arg_diff(o, 0, 1, 3, ell, 4) + arg_diff(o, 0, 4, 2, ell, 4), Rat(0));
            }
        } else if (id == "6.1") {
            for (int ell : {1, 2})
                check_step_table(ck, o, ell, 1, argdata::consecutive5_shift1(), id);
        } else if (id == "6.2") {
            for (int ell : {1, 2})
                check_step_table(ck, o, ell, 2, argdata::consecutive5_shift2(), id);
        } else if (id == "3.19") {
            for (long sh : {4L, 1L, 2L})
                for (int ell : {1, 2})
                    check_rotation(ck, o, ell, sh, argdata::step_rotation5(),
                                   id + " shift" + std::to_string(sh));
        } else if (id == "4.5") {
            for (long sh : {5L, 0L})
                for (int ell : {1, 2, 3})
                    check_rotation(ck, o, ell, sh, argdata::step_rotation7(),
                                   id + " shift" + std::to_string(sh));
        } else if (id == "4.2") {
            for (int ell : {1, 2, 3})
                if (!is_boundary(c_prime, ell))
                    check_step_table(ck, o, ell, 5, argdata::consecutive7_shift5_plain(), id);
        } else if (id == "5.2") {
            const argdata::BoundaryTotal& bt =
                lookup(argdata::boundary_totals_shift5(), cls7, "boundary class");
            check_step_table(ck, o, bt.ell, 5, argdata::consecutive7_shift5_boundary(), id);
            const int bracket = static_cast<int>(least_residue(c_prime * bt.ell, 7L));
            const int even = c_prime % 2 == 0 ? 1 : 0;
            const std::vector<Rat>& fd = lookup(
                argdata::boundary_factor_diffs(), std::make_tuple(bracket, even, bt.ell),
                "boundary factor row");
            const std::string base = id + " r=" + std::to_string(rv) + " boundary ell=" +
                                     std::to_string(bt.ell);
            for (int comp = 1; comp <= 3; ++comp)
                ck.expect(base + " f" + std::to_string(comp), q_to_p_diff(o, comp, bt.ell, 5),
                          fd[static_cast<size_t>(comp - 1)]);
            ck.expect(base + " total", q_to_p_diff(o, 0, bt.ell, 5), fd[3]);
        } else if (id == "6.3") {
            for (int ell : {1, 2, 3}) {
                const bool boundary = is_boundary(c_prime, ell);
                check_step_table(ck, o, ell, 5,
                                 boundary ? argdata::consecutive7_shift5_boundary()
                                          : argdata::consecutive7_shift5_plain(),
                                 id);
            }
            const argdata::BoundaryTotal& bt =
                lookup(argdata::boundary_totals_shift5(), cls7, "boundary class");
            ck.expect(id + " r=" + std::to_string(rv) + " boundary total",
                      q_to_p_diff(o, 0, bt.ell, 5), bt.total);
        } else if (id == "6.4") {
            for (int ell : {1, 2, 3})
                check_step_table(ck, o, ell, 0, argdata::consecutive7_shift0(), id);
            const argdata::BoundaryTotal& bt =
                lookup(argdata::boundary_totals_shift0(), cls7, "boundary class");
            ck.expect(id + " r=" + std::to_string(rv) + " boundary total",
                      q_to_p_diff(o, 0, bt.ell, 0), bt.total);
            const int printed = lookup(argdata::printed_beta_shift0(), cls7, "printed beta");
            const long expected_beta = mod_inverse(static_cast<long>(cls7), 7L);
            ck.expect(id + " r=" + std::to_string(rv) + " beta", Rat(static_cast<long>(o.beta)),
                      Rat(expected_beta));
            if (printed != -1)
                ck.expect(id + " r=" + std::to_string(rv) + " beta printed",
                          Rat(static_cast<long>(printed)), Rat(expected_beta));
        }
    }

    if (id == "3.19")
        extra += "; two-class law: the single printed turn covers only d=+-1 (mod 5)";
    if (id == "6.3" && cls7 == 4)
        extra += "; step-6 cell for this class uses the cycle-closure value 3/7";
    if (id == "6.4" && cls7 == 3) extra += "; beta for this class recomputed (not printed)";

    rep.exact_zero = ck.mismatches == 0;
    rep.terms = ck.cells;
    rep.note = sample_note + extra + ck.summary();
    rep.elapsed_ms = elapsed_ms_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Golden argument tables
// ---------------------------------------------------------------------------

namespace {

const std::vector<int>& table_classes(int index) {
    static const std::vector<int> odd_plain = {1, 7, 11, 13, 17, 19, 23, 29};
    static const std::vector<int> odd_three = {3, 9, 21, 27};
    static const std::vector<int> even = {2, 4, 6, 8, 12, 14, 16, 18, 22, 24, 26, 28};
    switch (index) {
        case 1:
        case 2: return odd_plain;
        case 3:
        case 4: return odd_three;
        case 5:
        case 6: return even;
    }
    throw std::domain_error("argcheck: table index must be 1..7");
}

// Computes one row of tables 1..6 (per-factor and total differences from the
// first orbit term to the target term at shift 4, for ell = 1 and 2; the
// middle factors print merged in some layouts) and verifies that it is
// identical across several c' representatives of the class and across
// residue choices r (the tables claim class-only dependence); returns the
// stable row or throws on instability.
std::vector<std::string> stable_class_row(int cls, int target, bool merged) {
    std::vector<std::string> row;
    for (long c_prime : {static_cast<long>(cls), cls + 30L, cls + 60L}) {
        int tried = 0;
        for (long rv = 1; rv <= c_prime && tried < 3; ++rv) {
            if (gcd_long(least_residue(rv, c_prime), c_prime) != 1) continue;
            ++tried;
            const OrbitChoice o = build_orbit(5, 5 * c_prime, rv);
            std::vector<Rat> vals;
            const Rat f1l1 = arg_diff(o, 1, 1, target, 1, 4);
            const Rat f2 = arg_diff(o, 2, 1, target, 1, 4);
            const Rat f3 = arg_diff(o, 3, 1, target, 1, 4);
            if (merged)
                vals = {f1l1, fold_turns(f2 + f3), arg_diff(o, 0, 1, target, 1, 4),
                        arg_diff(o, 1, 1, target, 2, 4), arg_diff(o, 0, 1, target, 2, 4)};
            else
                vals = {f1l1,
                        f2,
                        f3,
                        arg_diff(o, 0, 1, target, 1, 4),
                        arg_diff(o, 1, 1, target, 2, 4),
                        arg_diff(o, 0, 1, target, 2, 4)};
            std::vector<std::string> cells = {std::to_string(cls), std::to_string(o.beta)};
            for (const Rat& v : vals) cells.push_back(rat_str(v));
            if (row.empty())
                row = cells;
            else if (row != cells)
                throw std::logic_error("argcheck: table row depends on the representative");
        }
    }
    return row;
}

std::vector<std::vector<std::string>> boundary_table_rows() {
    std::vector<std::vector<std::string>> rows;
    for (int bracket : {1, 6}) {
        for (int even = 0; even <= 1; ++even) {
            for (int ell = 1; ell <= 3; ++ell) {
                std::vector<std::string> row = {std::to_string(bracket), even ? "even" : "odd",
                                                std::to_string(ell)};
                std::vector<std::string> cells;
                int found = 0;
                for (long A = 1; A <= 200 && found < 2; ++A) {
                    if (A % 7 == 0) continue;
                    if ((A % 2 == 0) != (even == 1)) continue;
                    if (least_residue(A * ell, 7L) != bracket) continue;
                    ++found;
                    int tried = 0;
                    for (long rv = 1; rv <= A && tried < 2; ++rv) {
                        if (gcd_long(least_residue(rv, A), A) != 1) continue;
                        ++tried;
                        const OrbitChoice o = build_orbit(7, 7 * A, rv);
                        std::vector<std::string> sample;
                        for (int comp : {1, 2, 3})
                            sample.push_back(rat_str(q_to_p_diff(o, comp, ell, 5)));
                        sample.push_back(rat_str(q_to_p_diff(o, 0, ell, 5)));
                        if (cells.empty())
                            cells = sample;
                        else if (cells != sample)
                            throw std::logic_error(
                                "argcheck: boundary row depends on the representative");
                    }
                }
                if (found == 0) throw std::logic_error("argcheck: no sample for boundary row");
                row.insert(row.end(), cells.begin(), cells.end());
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string join_cells(const std::vector<std::string>& cells) {
    std::string line;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ",";
        line += cells[i];
    }
    return line;
}

}  // namespace

const char* expected_table_csv(int index) {
    if (index < 1 || index > 7) throw std::domain_error("argcheck: table index must be 1..7");
    return argdata::golden_table_csv()[static_cast<size_t>(index - 1)];
}

std::string table_csv(int index) {
    const char* embedded = expected_table_csv(index);
    std::istringstream in(embedded);
    std::ostringstream out;
    std::string line;
    // Keep the documentation header verbatim; recompute every data row.
    while (std::getline(in, line)) {
        out << line << "\n";
        if (!line.empty() && line[0] != '#') break;
    }
    if (index == 7) {
        for (const std::vector<std::string>& row : boundary_table_rows())
            out << join_cells(row) << "\n";
        return out.str();
    }
    const int target = (index == 2 || index == 4 || index == 6) ? 2 : 4;
    const bool merged = index == 3 || index == 5;
    for (int cls : table_classes(index)) out << join_cells(stable_class_row(cls, target, merged)) << "\n";
    return out.str();
}

VerificationReport verify_table(int index) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = "table" + std::to_string(index);
    rep.p = index == 7 ? 7 : 5;
    const std::string computed = table_csv(index);
    const std::string expected = expected_table_csv(index);
    CellChecker ck;
    std::istringstream ca(computed), cb(expected);
    std::string la, lb;
    int line_no = 0;
    while (true) {
        const bool ga = static_cast<bool>(std::getline(ca, la));
        const bool gb = static_cast<bool>(std::getline(cb, lb));
        if (!ga && !gb) break;
        ++line_no;
        ++ck.cells;
        if (!ga || !gb || la != lb) {
            ++ck.mismatches;
            if (ck.bad.size() < 5)
                ck.bad.push_back("line " + std::to_string(line_no) + ": computed '" +
                                 (ga ? la : "<missing>") + "' expected '" + (gb ? lb : "<missing>") +
                                 "'");
        }
    }
    rep.exact_zero = ck.mismatches == 0 && computed == expected;
    rep.terms = ck.cells;
    rep.note = ck.summary().empty() ? "byte-identical" : ck.summary();
    rep.elapsed_ms = elapsed_ms_since(start);
    return rep;
}

// ---------------------------------------------------------------------------
// Exact orbit cancellation
// ---------------------------------------------------------------------------

namespace {

// Rebuilds one orbit term from its polar data: the cosecant radius times the
// unit phase of the folded total argument, inside Q(zeta_M).
CycElement rebuild_term(const OrbitChoice& orbit, const FactoredTerm& t, long M) {
    const long e = static_cast<long>(checked_exponent(t.total_arg, M));
    return mul_phase(CycElement::root_of_unity(M, e), csc_phases(orbit.p, t.f1.radius_class, M));
}

// The geometric orbit sum with per-term agreement against the summation
// code's own term values; disagreements are reported, not assumed away.
CycElement geometric_orbit_sum(const OrbitChoice& orbit, int ell, long k, long M,
                               long& checked_terms, std::string& mismatch) {
    CycElement sum = CycElement::zero(M);
    for (int j = 1; j <= static_cast<int>(orbit.d_list.size()); ++j) {
        const FactoredTerm t = factor_term(orbit, j, ell, k);
        const CycElement geo = rebuild_term(orbit, t, M);
        const CycElement alg = exact_term(orbit.p, orbit.c,
                                          least_residue(orbit.d_list[static_cast<size_t>(j - 1)],
                                                        orbit.c),
                                          inverse_rep(orbit, j), ell, k, M);
        ++checked_terms;
        if (!(geo == alg) && mismatch.empty())
            mismatch = "geometric rebuild differs from summed term at j=" + std::to_string(j);
        sum += geo;
    }
    return sum;
}

}  // namespace

VerificationReport verify_orbit_cancellation(const OrbitChoice& orbit, int ell,
                                             const std::string& case_id) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = case_id;
    rep.p = orbit.p;
    rep.ell = ell;
    rep.c = orbit.c;
    const long M = exact_conductor(orbit.c);
    std::string mismatch;
    CycElement total = CycElement::zero(M);

    if (case_id == "5-4" || case_id == "7-5-1" || case_id == "7-5-2") {
        const int want_p = case_id == "5-4" ? 5 : 7;
        if (orbit.p != want_p)
            throw std::domain_error("verify_orbit_cancellation: case " + case_id +
                                    " needs an orbit modulo " + std::to_string(want_p));
        const long k = want_p == 5 ? 4 : 5;
        const bool chain = !orbit.a_list.empty();
        const bool boundary = chain && orbit.p == 7 && is_boundary(orbit.c_prime, ell);
        if (case_id == "7-5-1" && boundary)
            throw std::domain_error(
                "verify_orbit_cancellation: boundary orbit; use case 7-5-2");
        if (case_id == "7-5-2") {
            if (!chain || !boundary)
                throw std::domain_error(
                    "verify_orbit_cancellation: case 7-5-2 needs c' coprime to 7 and "
                    "c'*ell = +-1 (mod 7)");
        }
        total = geometric_orbit_sum(orbit, ell, k, M, rep.terms, mismatch);
        if (case_id == "7-5-2") {
            const QPoint qp = build_q_point(orbit, ell, k);
            const CycElement geo_q =
                mul_phase(CycElement::root_of_unity(
                              M, static_cast<long>(checked_exponent(qp.total_arg, M))),
                          sqrt7_phases(M, qp.f1.scale));
            const CycElement alg_q = q_term_exact(
                q_term_data(orbit.c_prime, ell, least_residue(orbit.d_list[0], orbit.c), k), M);
            ++rep.terms;
            if (!(geo_q == alg_q) && mismatch.empty())
                mismatch = "geometric rebuild differs from the boundary point";
            total += geo_q;
        }
    } else {
        auto it = combo_weights().find(case_id);
        if (it == combo_weights().end())
            throw std::domain_error("verify_orbit_cancellation: unknown case id '" + case_id +
                                    "'");
        const ComboWeights& spec = it->second;
        if (orbit.p != spec.p)
            throw std::domain_error("verify_orbit_cancellation: case " + case_id +
                                    " needs an orbit modulo " + std::to_string(spec.p));
        if (orbit.a_list.empty())
            throw std::domain_error("verify_orbit_cancellation: weighted cases need c' coprime " +
                                    std::to_string(spec.p));
        rep.ell = 0;
        for (int l = 1; l <= (spec.p - 1) / 2; ++l) {
            CycElement s = geometric_orbit_sum(orbit, l, spec.k, M, rep.terms, mismatch);
            if (spec.p == 7 && is_boundary(orbit.c_prime, l)) {
                s += q_term_exact(q_term_data(orbit.c_prime, l,
                                              least_residue(orbit.d_list[0], orbit.c), spec.k),
                                  M);
                ++rep.terms;
            }
            std::vector<SparsePhase> weight;
            for (auto [wa, wb] : spec.weights[static_cast<size_t>(l - 1)]) {
                auto part = cos_diff_phases(wa, wb, spec.p, M);
                weight.insert(weight.end(), part.begin(), part.end());
            }
            total += mul_phase(mul_phase(s, weight), sin_phases(l, spec.p, M));
        }
    }

    rep.exact_zero = mismatch.empty() && total.is_zero();
    rep.float_abs = std::abs(embed(total));
    rep.note = "r=" + std::to_string(orbit.r) + (mismatch.empty() ? "" : "; " + mismatch);
    rep.elapsed_ms = elapsed_ms_since(start);
    return rep;
}

bool csc_identities_hold() {
    const auto cos_pi_frac = [](long num, long den, long M) {
        const long e = least_residue(num * (M / (2 * den)), M);
        return (CycElement::root_of_unity(M, e) +
                CycElement::root_of_unity(M, least_residue(-e, M)))
            .scaled(make_rat(1, 2));
    };
    // Alternating cosecant-weighted cosine sum vanishes in Q(zeta_28).
    const CycElement alt = cos_pi_frac(3, 7, 28) * invert(sin_pi_frac(1, 7, 28)) -
                           cos_pi_frac(1, 7, 28) * invert(sin_pi_frac(2, 7, 28)) +
                           cos_pi_frac(2, 7, 28) * invert(sin_pi_frac(3, 7, 28));
    if (!alt.is_zero()) return false;
    // Same-sign cotangent-style sum equals sqrt(7).
    const CycElement cot = cos_pi_frac(1, 7, 28) * invert(sin_pi_frac(1, 7, 28)) +
                           cos_pi_frac(2, 7, 28) * invert(sin_pi_frac(2, 7, 28)) -
                           cos_pi_frac(3, 7, 28) * invert(sin_pi_frac(3, 7, 28));
    if (!(cot == sqrt7(28))) return false;
    // Complementary-angle identities in Q(zeta_20).
    if (!(cos_pi_frac(1, 10, 20) == sin_pi_frac(2, 5, 20))) return false;
    if (!(cos_pi_frac(3, 10, 20) == sin_pi_frac(1, 5, 20))) return false;
    return true;
}

}  // namespace rankkl
