#pragma once
// Convergent Bessel series for the rank Fourier coefficients A(ell/5; n) and
// A(ell/7; n), truncated at a configurable cutoff and compared against the
// exact partition-counting oracle.  The series use the floating Kloosterman
// path; their authority is the oracle comparison, not exactness.

#include "rankkl/kloosterman.hpp"
#include "rankkl/partitions.hpp"

#include <vector>

namespace rankkl {

// Modified Bessel function I_{1/2}(x) = sqrt(2/(pi x)) * sinh(x); x > 0.
double bessel_i_half(double x);

// One series summand: component 0 is the sum over moduli c at the cusp at
// infinity, component 1 (modulus-7 only) the boundary sum over moduli a at the
// cusp 0; c is the modulus, term its (real) contribution after the global
// prefactor, partial the running total.
struct SeriesTerm {
    int component;
    long c;
    double term;
    double partial;
};

struct SeriesEvaluation {
    int p = 0;
    int ell = 0;
    long n = 0;
    long c_max = 0;
    double value = 0.0;          // real part of the truncated series
    double imag_residual = 0.0;  // |imaginary part| (must stay < 1e-6)
    double final_term = 0.0;     // largest |last summand| over the components
    double oracle = 0.0;         // exact A(ell/p; n) via the rank table
    double abs_error = 0.0;      // |value - oracle|
    std::vector<SeriesTerm> terms;
};

// A(ell/5; n) =~ (2 pi e(-1/8) sin(pi ell/5) / (24n-1)^{1/4})
//               * sum_{5|c<=c_max} S_oo,oo(0,n,c)/c * I_{1/2}(4 pi sqrt(24n-1)/(24c)).
// Requires 1 <= ell <= 4, n >= 1, c_max >= 5.
SeriesEvaluation a_exact_5(int ell, long n, long c_max = 2000);

// A(ell/7; n): the analogous sum over 7 | c plus a boundary sum
//   (4 pi sin(pi ell/7) / (24n-1)^{1/4})
//   * sum_{7 coprime a <= c_max/7, a*ell = +-1 (7)}
//         S_0,oo(0,n,a)/(sqrt7 a) * I_{1/2}(4 pi sqrt(24n-1)/(168a)).
// Requires 1 <= ell <= 6, n >= 1, c_max >= 7.
SeriesEvaluation a_exact_7(int ell, long n, long c_max = 2000);

}  // namespace rankkl
