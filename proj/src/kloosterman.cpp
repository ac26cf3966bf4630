#include "rankkl/kloosterman.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace rankkl {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

long long checked_exponent(const Rat& turns, long M) {
    Rat scaled = fold_turns(turns) * M;
    scaled.canonicalize();
    if (scaled.get_den() != 1)
        throw std::logic_error("phase denominator does not divide the conductor");
    return scaled.get_num().get_si();
}

// ---------------------------------------------------------------------------
// Per-summand phase data (shared by the exact and floating paths)
// ---------------------------------------------------------------------------

struct TermPhase {
    int radius;  // csc class in [1, (p-1)/2]
    long exp;    // exponent of zeta_{24c}
};

// The d-summand of S_oo,oo is (+-)csc(pi m/p) e(x) with
//   x = -3 c' a ell^2/(2p) - 12cs(d,c)/(24c) + k d/c   (+ 1/2 per sign flip),
// folded exactly over the common denominator M = 24c.
TermPhase term_phase(int p, long c, long d, long a_rep, int ell, long k, long long twelve_cs) {
    const long M = 24 * c;
    const long cp = c / p;
    long long e = 0;
    // -3 c' a ell^2 / (2p), in units of 1/M: multiplier M/(2p) = 12c/p.
    e -= 3LL * cp * a_rep * ell * ell % (2 * p) * (12 * c / p);
    // (-1)^{ell c}
    if ((static_cast<long long>(ell) * c) % 2 != 0) e += M / 2;
    // cosecant sign and radius class
    const long s = least_residue(static_cast<long long>(a_rep % (2 * p)) * ell, 2L * p);
    if (s % p == 0) throw std::logic_error("term_phase: cosecant argument is an integer multiple of pi");
    if (s > p) e += M / 2;  // sin(pi a ell / p) < 0
    const int m0 = static_cast<int>(s % p);
    // Dedekind factor e^{-pi i s(d,c)} = e(-12cs/(24c))
    e -= twelve_cs;
    // additive character e(k d / c)
    e += 24LL * (least_residue(static_cast<long long>(k) * d % c, c));
    TermPhase out;
    out.radius = std::min(m0, p - m0);
    out.exp = static_cast<long>(((e % M) + M) % M);
    return out;
}

// Accumulates integer counts of unit/cosecant phases per exponent and
// assembles the exact field element with one reduction at the end.
struct PhaseAccum {
    int p;
    long M;
    std::vector<std::vector<long long>> buckets;  // [radius class][exponent]; class 0 = unit

    PhaseAccum(int p_, long M_) : p(p_), M(M_), buckets((p_ - 1) / 2 + 1) {
        for (auto& b : buckets) b.assign(M, 0);
    }
    void add_unit(long exp) { buckets[0][exp] += 1; }
    void add_csc(int radius, long exp) { buckets[radius][exp] += 1; }

    CycElement finish() const {
        std::vector<Rat> dense(M, Rat(0));
        for (long e = 0; e < M; ++e)
            if (buckets[0][e] != 0) dense[e] += Rat(Int(static_cast<long>(buckets[0][e])));
        for (int m = 1; m < static_cast<int>(buckets.size()); ++m) {
            const std::vector<SparsePhase>& phases = csc_phases(p, m, M);
            for (long e = 0; e < M; ++e) {
                if (buckets[m][e] == 0) continue;
                Rat cnt{Int(static_cast<long>(buckets[m][e]))};
                for (const SparsePhase& ph : phases) dense[(e + ph.exp) % M] += cnt * ph.coeff;
            }
        }
        return CycElement::from_powers(M, dense);
    }
};

// Reciprocity-backed 12*c*s(d,c) rows for the floating path (the exact path
// uses the definitional rows; keeping the two paths on independent Dedekind
// evaluations turns every exact/float comparison into a cross-check).
std::mutex fast_row_mutex;
std::map<long, std::vector<long long>> fast_row_cache;

const std::vector<long long>& twelve_cs_fast_row(long c) {
    {
        std::lock_guard<std::mutex> lock(fast_row_mutex);
        auto it = fast_row_cache.find(c);
        if (it != fast_row_cache.end()) return it->second;
    }
    std::vector<long long> row(static_cast<size_t>(c), 0);
    for (long d = 0; d < c; ++d) {
        if (gcd_long(d, c) != 1) continue;
        Rat v = dedekind_sum_recursive(Int(d), Int(c)) * 12 * Int(c);
        v.canonicalize();
        if (v.get_den() != 1) throw std::logic_error("twelve_cs_fast_row: 12cs not an integer");
        row[d] = static_cast<long long>(v.get_num().get_si());
    }
    std::lock_guard<std::mutex> lock(fast_row_mutex);
    return fast_row_cache.emplace(c, std::move(row)).first->second;
}

std::complex<double> unit_phase(long exp, long M) {
    return std::polar(1.0, kTau * static_cast<double>(exp) / static_cast<double>(M));
}

void validate_s_inf_inf_args(int p, int ell, long c) {
    if (p != 5 && p != 7) throw std::domain_error("s_inf_inf: p must be 5 or 7");
    if (ell < 1 || ell > p - 1) throw std::domain_error("s_inf_inf: need 1 <= ell <= p-1");
    if (c < p || c % p != 0) throw std::domain_error("s_inf_inf: c must be a positive multiple of p");
}

}  // namespace

long exact_conductor(long c) { return 24 * c; }

const std::vector<SparsePhase>& csc_phases(int p, int m, long M) {
    if (m < 1 || m > p - 1) throw std::domain_error("csc_phases: class out of range");
    if (M % (4L * p) != 0) throw std::domain_error("csc_phases: conductor must be divisible by 4p");
    static std::mutex mutex;
    static std::map<std::tuple<int, int, long>, std::vector<SparsePhase>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_tuple(p, m, M);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    // Invert sin(pi m/p) in the small field Q(zeta_{4p}), then rescale the
    // exponents to conductor M.
    CycElement csc = invert(sin_pi_frac(m, p, 4L * p));
    const long stretch = M / (4 * p);
    std::vector<SparsePhase> phases;
    for (size_t j = 0; j < csc.coeffs().size(); ++j)
        if (mpq_sgn(csc.coeffs()[j].get_mpq_t()) != 0)
            phases.push_back({static_cast<long>(j) * stretch, csc.coeffs()[j]});
    return cache.emplace(key, std::move(phases)).first->second;
}

std::vector<SparsePhase> sqrt7_phases(long M, const Rat& scale) {
    if (M % 28 != 0) throw std::domain_error("sqrt7_phases: conductor must be divisible by 28");
    std::vector<SparsePhase> phases;
    const long seventh = M / 7;
    const long quarter = M / 4;
    for (long t = 1; t < 7; ++t)
        phases.push_back({t * seventh - quarter, scale * kronecker(t, 7L)});
    return phases;
}

std::vector<SparsePhase> sin_phases(long k, long m, long M) {
    if (m <= 0 || M % (4 * m) != 0)
        throw std::domain_error("sin_phases: conductor must be divisible by 4m");
    const long half = M / (2 * m);
    const long quarter = M / 4;
    return {SparsePhase{k * half - quarter, make_rat(1, 2)},
            SparsePhase{-k * half - quarter, make_rat(-1, 2)}};
}

CycElement exact_term(int p, long c, long d, long a_rep, int ell, long k, long M) {
    validate_s_inf_inf_args(p, ell, c);
    if (M != exact_conductor(c)) throw std::domain_error("exact_term: conductor must be 24c");
    const long dm = least_residue(d, c);
    if ((static_cast<long long>(dm) * least_residue(a_rep, c)) % c != 1 % c)
        throw std::domain_error("exact_term: a_rep is not an inverse of d mod c");
    TermPhase ph = term_phase(p, c, dm, a_rep, ell, k, twelve_cs_row(c)[dm]);
    return mul_phase(CycElement::root_of_unity(M, ph.exp), csc_phases(p, ph.radius, M));
}

CycElement exact_term_sum(int p, long c, const std::vector<long>& d_list, int ell, long k, long M) {
    validate_s_inf_inf_args(p, ell, c);
    if (M != exact_conductor(c)) throw std::domain_error("exact_term_sum: conductor must be 24c");
    PhaseAccum acc(p, M);
    const std::vector<long long>& row = twelve_cs_row(c);
    for (long d : d_list) {
        const long dm = least_residue(d, c);
        const long a = mod_inverse(dm, c);
        TermPhase ph = term_phase(p, c, dm, a, ell, k, row[dm]);
        acc.add_csc(ph.radius, ph.exp);
    }
    return acc.finish();
}

KloostermanValue s_inf_inf(int p, int ell, long n, long c, EvalMode mode) {
    validate_s_inf_inf_args(p, ell, c);
    KloostermanValue out;
    const long M = exact_conductor(c);
    if (mode == EvalMode::exact) {
        PhaseAccum acc(p, M);
        const std::vector<long long>& row = twelve_cs_row(c);
        for (long d = 1; d < c; ++d) {
            if (gcd_long(d, c) != 1) continue;
            const long a = mod_inverse(d, c);
            TermPhase ph = term_phase(p, c, d, a, ell, n, row[d]);
            acc.add_csc(ph.radius, ph.exp);
            ++out.terms;
        }
        CycElement value = mul_phase(acc.finish(), {SparsePhase{-M / 8, Rat(1)}});
        out.approx = embed(value);
        out.exact = std::move(value);
    } else {
        const std::vector<long long>& row = twelve_cs_fast_row(c);
        std::complex<double> total = 0.0;
        for (long d = 1; d < c; ++d) {
            if (gcd_long(d, c) != 1) continue;
            const long a = mod_inverse(d, c);
            TermPhase ph = term_phase(p, c, d, a, ell, n, row[d]);
            total += unit_phase(ph.exp, M) / std::sin(M_PI * ph.radius / p);
            ++out.terms;
        }
        out.approx = total * unit_phase(-M / 8, M);
    }
    return out;
}

namespace {

void validate_s_zero_inf_args(int ell, long A) {
    if (ell < 1 || ell > 6) throw std::domain_error("s_zero_inf: need 1 <= ell <= 6");
    if (A < 1 || A % 7 == 0) throw std::domain_error("s_zero_inf: A must be positive and coprime to 7");
}

// Quadratic exponent and sign data shared by s_zero_inf and q_term_data.
struct BoundaryShape {
    int bracket;   // [A ell] in {1, 6}
    long T;        // (A ell -+ 1)/7
    Int quad;      // integer quadratic exponent
    bool half_turn;  // (-1)^{A ell - [A ell]} == -1
};

BoundaryShape boundary_shape(long A, int ell) {
    const long Al = A * ell;
    const int br = static_cast<int>(Al % 7);
    BoundaryShape sh;
    sh.bracket = br;
    if (br == 1) {
        sh.T = (Al - 1) / 7;
        sh.quad = Int(sh.T) * (3 * sh.T + 1) / 2;
    } else if (br == 6) {
        sh.T = (Al + 1) / 7;
        const long Tm = sh.T - 1;
        sh.quad = (Int(3) * Tm * Tm + 5 * Tm + 2) / 2;
    } else {
        throw std::domain_error("boundary_shape: A*ell is not +-1 mod 7");
    }
    sh.half_turn = ((Al - sh.bracket) % 2) != 0;
    return sh;
}

}  // namespace

KloostermanValue s_zero_inf(int ell, long n, long A, EvalMode mode) {
    validate_s_zero_inf_args(ell, A);
    KloostermanValue out;
    const long M = exact_conductor(7 * A);
    const int br = static_cast<int>((A * ell) % 7);
    if (br != 1 && br != 6) {
        if (mode == EvalMode::exact) out.exact = CycElement::zero(M);
        out.approx = 0.0;
        return out;
    }
    if (A == 1) {
        if (mode == EvalMode::exact) out.exact = CycElement::one(M);
        out.approx = 1.0;
        out.terms = 1;
        return out;
    }
    const BoundaryShape sh = boundary_shape(A, ell);
    const std::vector<long long>& row =
        mode == EvalMode::exact ? twelve_cs_row(A) : twelve_cs_fast_row(A);
    PhaseAccum acc(7, M);
    std::complex<double> total = 0.0;
    for (long B = 1; B < A; ++B) {
        if (gcd_long(B, A) != 1) continue;
        // C: the unique residue with 7 | C and B*C = -1 (mod A); only C mod A
        // enters the phase.
        const long C = least_residue(-7 * mod_inverse(least_residue(7 * B, A), A), A);
        Rat x = make_rat(sh.quad * C, Int(A)) +
                make_rat(Int(static_cast<long>(-row[B])), Int(24) * A) +
                make_rat(Int(n) * B, Int(A));
        if (sh.half_turn) x += make_rat(1, 2);
        const long e = static_cast<long>(checked_exponent(x, M));
        if (mode == EvalMode::exact)
            acc.add_unit(e);
        else
            total += unit_phase(e, M);
        ++out.terms;
    }
    if (mode == EvalMode::exact) {
        CycElement value = acc.finish();
        out.approx = embed(value);
        out.exact = std::move(value);
    } else {
        out.approx = total;
    }
    return out;
}

KloostermanValue s7(int ell, long n, long c, S7Reading reading) {
    if (c < 7 || c % 7 != 0) throw std::domain_error("s7: c must be a positive multiple of 7");
    if (ell < 1 || ell > 6) throw std::domain_error("s7: need 1 <= ell <= 6");
    const long M = exact_conductor(c);
    const long a = c / 7;
    KloostermanValue first = s_inf_inf(7, ell, n, c, EvalMode::exact);
    // The bracket applies a further e(-1/8) on top of the e(-1/8) already
    // inside s_inf_inf (so the first summand carries e(-1/4) total).
    CycElement bracket = mul_phase(*first.exact, {SparsePhase{-M / 8, Rat(1)}});
    long terms = first.terms;
    const bool boundary = (a % 7 != 0) && ((a * ell) % 7 == 1 || (a * ell) % 7 == 6);
    if (boundary) {
        const long n_second = reading == S7Reading::same_n ? n : 7 * n + 5;
        KloostermanValue second = s_zero_inf(ell, n_second, a, EvalMode::exact);
        bracket += mul_phase(*second.exact, sqrt7_phases(M, Rat(2)));
        terms += second.terms;
    }
    KloostermanValue out;
    CycElement value = mul_phase(bracket, sin_phases(ell, 7, M));
    out.approx = embed(value);
    out.exact = std::move(value);
    out.terms = terms;
    return out;
}

CycElement c_coeff_exact(int p, int a, int b) {
    if (p != 5 && p != 7) throw std::domain_error("c_coeff: p must be 5 or 7");
    std::vector<Rat> powers(2 * p, Rat(0));
    const Rat half = make_rat(1, 2);
    powers[least_residue(a, 2 * p)] += half;
    powers[least_residue(-a, 2 * p)] += half;
    powers[least_residue(b, 2 * p)] -= half;
    powers[least_residue(-b, 2 * p)] -= half;
    return CycElement::from_powers(2 * p, powers);
}

double c_coeff(int p, int a, int b) {
    return std::cos(M_PI * a / p) - std::cos(M_PI * b / p);
}

// ---------------------------------------------------------------------------
// Vanishing certification
// ---------------------------------------------------------------------------

const std::map<std::string, ComboWeights>& combo_weights() {
    static const std::map<std::string, ComboWeights> table = {
        {"5-1", {5, 1, {{{2, 4}}, {{4, 2}}}}},
        {"5-2", {5, 2, {{{0, 4}}, {{0, 2}}}}},
        {"7-0", {7, 0, {{{4, 6}}, {{6, 2}}, {{2, 4}}}}},
        {"7-1-1", {7, 1, {{{2, 4}}, {{4, 6}}, {{6, 2}}}}},
        {"7-1-2", {7, 1, {{{4, 6}}, {{6, 2}}, {{2, 4}}}}},
        {"7-2", {7, 2, {{{0, 6}}, {{0, 2}}, {{0, 4}}}}},
        {"7-3-1", {7, 3, {{{0, 4}}, {{0, 6}}, {{0, 2}}}}},
        {"7-3-2", {7, 3, {{{2, 6}}, {{4, 2}}, {{6, 4}}}}},
        {"7-4-1", {7, 4, {{{0, 2}}, {{0, 4}}, {{0, 6}}}}},
        {"7-4-2", {7, 4, {{{2, 6}}, {{4, 2}}, {{6, 4}}}}},
        {"7-6", {7, 6, {{{0, 4}, {2, 6}}, {{0, 6}, {4, 2}}, {{0, 2}, {6, 4}}}}},
    };
    return table;
}

namespace {

double elapsed_ms_since(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

VerificationReport certify_combo(const std::string& case_id, const ComboWeights& spec, long n,
                                 long c, S7Reading reading) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.case_id = case_id;
    rep.p = spec.p;
    rep.n = n;
    rep.c = c;
    if (c < spec.p || c % spec.p != 0)
        throw std::domain_error("vanish_case: c must be a positive multiple of " +
                                std::to_string(spec.p));
    const long M = exact_conductor(c);
    const long big_n = static_cast<long>(spec.p) * n + spec.k;
    CycElement total = CycElement::zero(M);
    for (int ell = 1; ell <= (spec.p - 1) / 2; ++ell) {
        CycElement piece;
        if (spec.p == 5) {
            KloostermanValue v = s_inf_inf(5, ell, big_n, c, EvalMode::exact);
            piece = mul_phase(*v.exact, sin_phases(ell, 5, M));
            rep.terms += v.terms;
        } else {
            KloostermanValue v = s7(ell, big_n, c, reading);
            piece = *v.exact;
            rep.terms += v.terms;
        }
        std::vector<SparsePhase> weight;
        for (auto [wa, wb] : spec.weights[ell - 1]) {
            auto part = cos_diff_phases(wa, wb, spec.p, M);
            weight.insert(weight.end(), part.begin(), part.end());
        }
        total += mul_phase(piece, weight);
    }
    rep.exact_zero = total.is_zero();
    rep.float_abs = std::abs(embed(total));
    if (spec.p == 7)
        rep.note = reading == S7Reading::same_n ? "reading=same-n" : "reading=literal";
    rep.elapsed_ms = elapsed_ms_since(start);
    return rep;
}

}  // namespace

const std::vector<std::string>& vanishing_case_ids() {
    static const std::vector<std::string> ids = {"5-1", "5-2", "5-4", "7-0", "7-1-1", "7-1-2",
                                                 "7-2", "7-3-1", "7-3-2", "7-4-1", "7-4-2",
                                                 "7-5-1", "7-5-2", "7-6"};
    return ids;
}

VerificationReport vanish_case(const std::string& case_id, long n, long c, std::optional<int> ell,
                               S7Reading reading) {
    if (n < 0) throw std::domain_error("vanish_case: n must be >= 0");
    const auto start = std::chrono::steady_clock::now();

    if (case_id == "5-4") {
        if (c < 5 || c % 5 != 0) throw std::domain_error("vanish_case: c must be a positive multiple of 5");
        if (ell && (*ell < 1 || *ell > 4)) throw std::domain_error("vanish_case: need 1 <= ell <= 4");
        VerificationReport rep;
        rep.case_id = case_id;
        rep.p = 5;
        rep.ell = ell.value_or(0);
        rep.n = n;
        rep.c = c;
        rep.exact_zero = true;
        for (int l = ell.value_or(1); l <= ell.value_or(4); ++l) {
            KloostermanValue v = s_inf_inf(5, l, 5 * n + 4, c, EvalMode::exact);
            rep.exact_zero = rep.exact_zero && v.exact->is_zero();
            rep.float_abs = std::max(rep.float_abs, std::abs(v.approx));
            rep.terms += v.terms;
        }
        if (!ell) rep.note = "ell=1..4";
        rep.elapsed_ms = elapsed_ms_since(start);
        return rep;
    }

    if (case_id == "7-5-1") {
        if (c < 7 || c % 7 != 0) throw std::domain_error("vanish_case: c must be a positive multiple of 7");
        if (ell && (*ell < 1 || *ell > 6)) throw std::domain_error("vanish_case: need 1 <= ell <= 6");
        const long cp = c / 7;
        VerificationReport rep;
        rep.case_id = case_id;
        rep.p = 7;
        rep.ell = ell.value_or(0);
        rep.n = n;
        rep.c = c;
        rep.exact_zero = true;
        bool any = false;
        std::string checked;
        for (int l = ell.value_or(1); l <= ell.value_or(6); ++l) {
            const int r = static_cast<int>((cp % 7) * l % 7);
            if (r == 1 || r == 6) {
                if (ell) {
                    rep.skipped = true;
                    rep.exact_zero = false;
                    rep.note = "side condition violated: c'*ell = +-1 (mod 7) is the boundary class";
                    rep.elapsed_ms = elapsed_ms_since(start);
                    return rep;
                }
                continue;
            }
            any = true;
            checked += (checked.empty() ? "ell=" : ",") + std::to_string(l);
            KloostermanValue v = s_inf_inf(7, l, 7 * n + 5, c, EvalMode::exact);
            rep.exact_zero = rep.exact_zero && v.exact->is_zero();
            rep.float_abs = std::max(rep.float_abs, std::abs(v.approx));
            rep.terms += v.terms;
        }
        if (!ell) {
            if (!any) {
                rep.skipped = true;
                rep.exact_zero = false;
                rep.note = "side condition violated: every ell has c'*ell = +-1 (mod 7)";
            } else {
                rep.note = checked;
            }
        }
        rep.elapsed_ms = elapsed_ms_since(start);
        return rep;
    }

    if (case_id == "7-5-2") {
        if (c < 7 || c % 7 != 0) throw std::domain_error("vanish_case: c must be a positive multiple of 7");
        const long a = c / 7;
        if (a % 7 == 0)
            throw std::domain_error("vanish_case: 7-5-2 requires c = 7a with a coprime to 7");
        if (ell && (*ell < 1 || *ell > 6)) throw std::domain_error("vanish_case: need 1 <= ell <= 6");
        const long M = exact_conductor(c);
        VerificationReport rep;
        rep.case_id = case_id;
        rep.p = 7;
        rep.ell = ell.value_or(0);
        rep.n = n;
        rep.c = c;
        rep.exact_zero = true;
        bool any = false;
        std::string checked;
        for (int l = ell.value_or(1); l <= ell.value_or(6); ++l) {
            const int r = static_cast<int>((a % 7) * l % 7);
            if (r != 1 && r != 6) {
                if (ell) {
                    rep.skipped = true;
                    rep.exact_zero = false;
                    rep.note = "side condition violated: a*ell must be +-1 (mod 7)";
                    rep.elapsed_ms = elapsed_ms_since(start);
                    return rep;
                }
                continue;
            }
            any = true;
            checked += (checked.empty() ? "ell=" : ",") + std::to_string(l);
            KloostermanValue first = s_inf_inf(7, l, 7 * n + 5, c, EvalMode::exact);
            KloostermanValue second = s_zero_inf(l, 7 * n + 5, a, EvalMode::exact);
            const CycElement boundary = mul_phase(*second.exact, sqrt7_phases(M, Rat(2)));
            // Display form 1: e(-1/8) S_oo,oo + 2 sqrt7 S_0,oo, where the
            // S_oo,oo value already carries its own global e(-1/8).
            CycElement form1 =
                mul_phase(*first.exact, {SparsePhase{-M / 8, Rat(1)}}) + boundary;
            // Display form 2: e(1/8) S_oo,oo + 2 i sqrt7 S_0,oo; it must
            // equal i times form 1.
            const std::vector<SparsePhase> quarter = {SparsePhase{M / 4, Rat(1)}};
            CycElement form2 = mul_phase(*first.exact, {SparsePhase{M / 8, Rat(1)}}) +
                               mul_phase(boundary, quarter);
            if (!(form2 == mul_phase(form1, quarter)))
                throw std::logic_error("vanish_case: form 2 is not i times form 1");
            rep.exact_zero = rep.exact_zero && form1.is_zero() && form2.is_zero();
            rep.float_abs = std::max(rep.float_abs, std::abs(embed(form1)));
            rep.terms += first.terms + second.terms;
        }
        if (!ell) {
            if (!any) {
                rep.skipped = true;
                rep.exact_zero = false;
                rep.note = "side condition violated: no ell has a*ell = +-1 (mod 7)";
            } else {
                rep.note = checked + " (both display forms)";
            }
        } else if (any) {
            rep.note = "both display forms";
        }
        rep.elapsed_ms = elapsed_ms_since(start);
        return rep;
    }

    auto combo = combo_weights().find(case_id);
    if (combo == combo_weights().end())
        throw std::domain_error("vanish_case: unknown case id '" + case_id + "'");
    if (ell)
        throw std::domain_error("vanish_case: case " + case_id +
                                " is a weighted combination; ell cannot be selected");
    return certify_combo(case_id, combo->second, n, c, reading);
}

// ---------------------------------------------------------------------------
// Boundary points attached to orbits
// ---------------------------------------------------------------------------

QTermData q_term_data(long A, int ell, long d1, long k) {
    validate_s_zero_inf_args(ell, A);
    const BoundaryShape sh = boundary_shape(A, ell);  // throws unless A ell = +-1 (7)
    QTermData q;
    q.T = sh.T;
    q.bracket = sh.bracket;
    q.quad = sh.quad;
    const long dm = least_residue(d1, A);
    q.B = sh.bracket == 1 ? least_residue(-Int(dm) * sh.T, Int(A)).get_si()
                          : least_residue(Int(dm) * sh.T, Int(A)).get_si();
    if (least_residue(7 * q.B - dm, A) != 0)
        throw std::logic_error("q_term_data: 7B != d1 (mod A)");
    if (A == 1) {
        q.C = 7;
    } else {
        q.C = least_residue(Int(-7) * mod_inverse(Int(dm), Int(A)), Int(7) * A).get_si();
        if (q.C == 0) q.C = 7 * A;
        if (least_residue(Int(q.B) * q.C + 1, Int(A)) != 0)
            throw std::logic_error("q_term_data: B*C != -1 (mod A)");
    }
    q.q1 = make_rat(1, 4) + (sh.half_turn ? make_rat(1, 2) : Rat(0));
    q.q2 = fold_turns(make_rat(q.quad * q.C, Int(A)) -
                      make_rat(Int(static_cast<long>(twelve_cs_row(A)[q.B])), Int(24) * A));
    q.q3 = fold_turns(make_rat(Int(k) * q.B, Int(A)));
    return q;
}

CycElement q_term_exact(const QTermData& q, long M) {
    const long e = static_cast<long>(checked_exponent(q.q1 + q.q2 + q.q3, M));
    return mul_phase(CycElement::root_of_unity(M, e), sqrt7_phases(M, Rat(2)));
}

}  // namespace rankkl
