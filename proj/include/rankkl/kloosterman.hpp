#pragma once
// Kloosterman-type exponential sums attached to partition ranks in arithmetic
// progressions modulo 5 and 7, with two evaluation paths:
//
//   * exact: every summand is a unit times a cosecant, assembled as an
//     element of the cyclotomic field Q(zeta_{24c}); vanishing is certified
//     by reduction to the zero vector on the power basis.
//   * floating: direct complex summation (cross-check only, never authority).
//
// The certified identities: for c divisible by 5, the full sum at 5n+4
// vanishes for every ell; for c divisible by 7 the sum at 7n+5 vanishes away
// from the boundary classes, and on the boundary classes c = 7a it cancels
// against a second sum attached to the cusp 0; and eleven cosine-weighted
// combinations covering the remaining residues vanish for every admissible c.

#include "rankkl/cyclotomic.hpp"
#include "rankkl/dedekind.hpp"
#include "rankkl/report.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankkl {

enum class EvalMode { exact, floating };

// How the combined modulus-7 sum evaluates its boundary summand: with the
// same argument n as the first summand, or with 7n+5 substituted literally.
// Only same_n makes the combined vanishing identities hold; the option exists
// so the alternative can be demonstrated to fail.
enum class S7Reading { same_n, literal };

struct KloostermanValue {
    std::optional<CycElement> exact;  // present in exact mode
    std::complex<double> approx;      // numeric value (embedding / direct sum)
    long terms = 0;
};

// S_oo,oo(0, n, c; ell) for p in {5, 7}: requires p | c and 1 <= ell <= p-1.
// Includes the global e(-1/8) prefactor and the (-1)^{ell c} term signs.
KloostermanValue s_inf_inf(int p, int ell, long n, long c, EvalMode mode);

// S_0,oo(0, n, A; ell) for the modulus-7 boundary, 7 coprime to A: zero unless
// A*ell = +-1 (mod 7); equals 1 when A = 1.  1 <= ell <= 6.
KloostermanValue s_zero_inf(int ell, long n, long A, EvalMode mode);

// Combined modulus-7 sum for 7 | c:
//   sin(pi ell/7) * ( e(-1/8) S_oo,oo + [c = 7a, a*ell = +-1 (7)] 2 sqrt7 S_0,oo )
// where S_oo,oo is the value returned by s_inf_inf (which already includes its
// own global e(-1/8); the bracket applies a second one, for e(-1/4) in total).
// Evaluated exactly (the approx field is the numeric embedding).
KloostermanValue s7(int ell, long n, long c, S7Reading reading = S7Reading::same_n);

// cos(a pi/p) - cos(b pi/p): exact element of Q(zeta_{2p}) and double value.
CycElement c_coeff_exact(int p, int a, int b);
double c_coeff(int p, int a, int b);

// ---------------------------------------------------------------------------
// Vanishing certification
// ---------------------------------------------------------------------------

// Case ids: "5-4", "7-5-1", "7-5-2" certify single sums per ell; the rest
// ("5-1", "5-2", "7-0", "7-1-1", "7-1-2", "7-2", "7-3-1", "7-3-2", "7-4-1",
// "7-4-2", "7-6") certify cosine-weighted combinations across ell.
const std::vector<std::string>& vanishing_case_ids();

// Weight data for the combination cases: the weight attached to ell is the
// sum of cos(a pi/p) - cos(b pi/p) over weights[ell-1], and the sums run in
// the progression p*n + k.  Keyed by case id; the single-sum ids are absent.
struct ComboWeights {
    int p = 0;
    int k = 0;
    std::vector<std::vector<std::pair<int, int>>> weights;
};
const std::map<std::string, ComboWeights>& combo_weights();

// Certify one instance.  n is the progression index (the sums run at b*n+k
// for the case's modulus b and residue k).  For the per-ell cases, pass ell
// to certify a single ell (instances excluded by a side condition come back
// with skipped=true and the reason in note); omit it to certify every
// admissible ell in one report.  For the weighted combinations ell must be
// omitted.  Structural misuse (wrong divisibility of c, unknown id, bad n)
// throws std::domain_error naming the violated requirement.
VerificationReport vanish_case(const std::string& case_id, long n, long c,
                               std::optional<int> ell = std::nullopt,
                               S7Reading reading = S7Reading::same_n);

// Exact rank-identity check at p*n + k combined with a numeric consistency
// check of the same identity through the truncated series for A(j/p; .):
// the weighted series difference must be below 1e-6 in absolute value.
bool corollary_consistency(int p, int k, long n);

// ---------------------------------------------------------------------------
// Building blocks shared with the argument-geometry verifier
// ---------------------------------------------------------------------------

// Conductor for exact work at level c: 24c (divisible by 8, by 4p for p | c,
// and by every phase denominator that occurs).
long exact_conductor(long c);

// csc(pi m / p) as a sparse phase list at conductor M (4p | M); m in [1, p-1].
const std::vector<SparsePhase>& csc_phases(int p, int m, long M);

// 2*sqrt(7) (or any rational multiple of sqrt 7) as a sparse phase list.
std::vector<SparsePhase> sqrt7_phases(long M, const Rat& scale);

// sin(pi k / m) as a two-term phase list (4m | M).
std::vector<SparsePhase> sin_phases(long k, long m, long M);

// The single d-summand of S_oo,oo without the global e(-1/8) factor but with
// the (-1)^{ell c} sign, at conductor M: a_rep is any representative of the
// inverse of d mod c (the value is representative-independent); k is the
// additive character's multiplier e(k d / c).
CycElement exact_term(int p, long c, long d, long a_rep, int ell, long k, long M);

// Sum of exact_term over (possibly unreduced) residues d, each with its true
// least-positive inverse as representative.
CycElement exact_term_sum(int p, long c, const std::vector<long>& d_list, int ell, long k, long M);

// Data for the boundary point attached to an orbit anchored at d1 (modulus 7,
// A coprime to 7, A*ell = +-1 mod 7): the translation T, the residue B with
// 7B = d1 (mod A), the companion C with 7 | C and BC = -1 (mod A), the
// quadratic exponent, and the three argument contributions in turns
// (q1 = unit, q2 = quadratic + Dedekind phase, q3 = additive character).
struct QTermData {
    long T = 0;
    long B = 0;
    long C = 0;
    Int quad;     // T(3T+1)/2 resp. (3(T-1)^2 + 5(T-1) + 2)/2; an integer
    int bracket;  // [A*ell] in {1, 6}
    Rat q1, q2, q3;
};
QTermData q_term_data(long A, int ell, long d1, long k);

// 2*sqrt(7) * e(q1+q2+q3) as an exact element.
CycElement q_term_exact(const QTermData& q, long M);

}  // namespace rankkl
