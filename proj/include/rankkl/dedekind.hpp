#pragma once
// Dedekind sums s(d, c) = sum_{r mod c} ((r/c)) ((dr/c)) and the integer
// 12*c*s(d, c), computed three independent ways:
//   * definitional O(c) summation (the authority for every certification),
//   * the reciprocity law, O(log c), used by the large floating-point series,
//   * a congruence/CRT reconstruction of 12cs mod 24c that never forms the sum.

#include "rankkl/arith.hpp"

namespace rankkl {

struct DedekindValue {
    Rat s;          // s(d, c)
    Int twelve_cs;  // 12 * c * s(d, c); always an integer
    int theta;      // gcd(c, 3)
    int lambda;     // exponent of the exact power of 2 dividing c
};

// Definitional evaluation.  Requires c >= 1 and gcd(d, c) = 1; d may be any
// integer (only d mod c matters).  Throws std::domain_error otherwise.
DedekindValue dedekind_sum(const Int& d, const Int& c);

// Same value via reciprocity: s(d,c) + s(c,d) = -1/4 + (d/c + c/d + 1/(dc))/12
// together with s(d mod c, c) periodicity.  Exact, O(log c).
Rat dedekind_sum_recursive(const Int& d, const Int& c);

// 12*c*s(d,c) modulo 24c assembled by CRT from arithmetic congruences
// (conditions modulo 8*2^lambda and modulo theta*c plus a mod-3 condition),
// without evaluating the sum.
Residue twelve_cs_mod(const Int& d, const Int& c);

// 12*c*s(d, c) for all d in [0, c), definitional path; entries for d with
// gcd(d, c) != 1 are unused and left 0.  Cached per c; safe for concurrent
// use.  Values fit comfortably in long long for any c this library handles.
const std::vector<long long>& twelve_cs_row(long c);

}  // namespace rankkl
