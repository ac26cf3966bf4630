#pragma once
// Exact integer and rational helpers shared by every module: modular
// inverses, CRT, Kronecker symbols, and sawtooth / fractional-part utilities
// on exact rationals.

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

namespace rankkl {

using Int = mpz_class;
using Rat = mpq_class;

// num/den in lowest terms; den != 0.
Rat make_rat(const Int& num, const Int& den);
Rat make_rat(long num, long den);

// Least nonnegative residue of a modulo m; requires m > 0.
Int least_residue(const Int& a, const Int& m);
long least_residue(long a, long m);

// A residue class: 0 <= value < modulus.
struct Residue {
    Int value;
    Int modulus;
};

// Inverse of a modulo m, in [1, m) (m >= 1; the inverse modulo 1 is 0).
// Throws std::domain_error when gcd(a, m) != 1.
Int mod_inverse(const Int& a, const Int& m);
long mod_inverse(long a, long m);

// Simultaneous solution of pairwise coprime congruences.  The result modulus
// is the product of the input moduli.  Throws std::domain_error if two moduli
// share a factor or the list is empty.
Residue crt(const std::vector<Residue>& congruences);

// Kronecker symbol (a|n), i.e. the Jacobi symbol extended to all integers n.
int kronecker(const Int& a, const Int& n);
int kronecker(long a, long n);

// Sawtooth ((x)): x - floor(x) - 1/2 for x not an integer, 0 otherwise.
Rat sawtooth(const Rat& x);

// Fractional part of an exact rational, in [0, 1).
Rat fold_turns(const Rat& x);

// floor(x) for an exact rational.
Int floor_rat(const Rat& x);

// gcd helper for machine integers (nonnegative result).
long gcd_long(long a, long b);

}  // namespace rankkl
