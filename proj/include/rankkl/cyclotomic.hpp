#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_M), zeta_M = e^{2 pi i / M}.
//
// Elements are stored on the power basis 1, z, ..., z^{phi(M)-1} with exact
// rational coefficients, reduced modulo the M-th cyclotomic polynomial.
// Besides ring/field operations the module provides the specific algebraic
// constants used by the Kloosterman-sum kernels: roots of unity, sin(pi k/m),
// cosecants (via inversion), sqrt(7), and cosine differences.

#include "rankkl/arith.hpp"

#include <complex>
#include <vector>

namespace rankkl {

long euler_phi(long m);
long radical(long m);  // product of the distinct primes dividing m

// Dense coefficients of the m-th cyclotomic polynomial, index = degree,
// degree phi(m), monic.  Results are cached; safe for concurrent use.
const std::vector<Int>& cyclotomic_polynomial(long m);

// One term of a sparse phase combination: coeff * zeta_M^exp.
struct SparsePhase {
    long exp;
    Rat coeff;
};

class CycElement {
public:
    CycElement() : conductor_(1), coeffs_(1, Rat(0)) {}

    static CycElement zero(long conductor);
    static CycElement one(long conductor);
    static CycElement from_rat(long conductor, const Rat& value);
    // zeta_M^k; k may be any integer (reduced mod M).
    static CycElement root_of_unity(long conductor, long k);
    // sum_j powers[j] * zeta_M^j for an arbitrary-length power list (indices
    // are folded mod M, then reduced modulo the cyclotomic polynomial).
    static CycElement from_powers(long conductor, const std::vector<Rat>& powers);
    // Adopt an already-reduced coefficient vector of length phi(conductor).
    static CycElement from_reduced(long conductor, std::vector<Rat> reduced);

    long conductor() const { return conductor_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool operator==(const CycElement& o) const;
    bool operator!=(const CycElement& o) const { return !(*this == o); }

    // Arithmetic requires matching conductors (use promote() first).
    CycElement operator+(const CycElement& o) const;
    CycElement operator-(const CycElement& o) const;
    CycElement operator-() const;
    CycElement operator*(const CycElement& o) const;
    CycElement& operator+=(const CycElement& o);
    CycElement& operator-=(const CycElement& o);

    CycElement scaled(const Rat& f) const;

private:
    long conductor_;
    std::vector<Rat> coeffs_;  // size phi(conductor_)
};

// Re-express a in Q(zeta_M2); requires conductor(a) | M2.
CycElement promote(const CycElement& a, long new_conductor);

// Multiplicative inverse; throws std::domain_error on zero.
CycElement invert(const CycElement& a);

// a * sum_i coeff_i zeta^{exp_i}; cheaper than operator* when the phase list
// is short (every csc / sin / cos multiplication in the kernels is sparse).
CycElement mul_phase(const CycElement& a, const std::vector<SparsePhase>& phases);

// Numeric embedding with zeta_M -> e^{2 pi i/M}, evaluated in MPFR at the
// given working precision and rounded to double.  The result is a cross-check
// only, never an authority: with p bits the roundoff is bounded by roughly
// phi(M) * max|coeff| * 2^{1-p}, plus the final rounding to double.
std::complex<double> embed(const CycElement& a, int precision_bits = 96);

// sin(pi k / m) as an exact element; requires 4m | M.
CycElement sin_pi_frac(long k, long m, long M);

// sqrt(7) (positive root) as an exact element; requires 28 | M.  The first
// call verifies the construction numerically against 2.6457513... and throws
// std::logic_error if that self-check ever fails.
CycElement sqrt7(long M);

// Phase list for cos(a pi / m) - cos(b pi / m); requires 2m | M.
std::vector<SparsePhase> cos_diff_phases(long a, long b, long m, long M);

}  // namespace rankkl
