#include "rankkl/exactformula.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace rankkl {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

// Compensated (Kahan) accumulator for one real component.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;
    void add(double x) {
        const double y = x - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct KahanC {
    Kahan re, im;
    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.sum, im.sum}; }
};

void validate_series_args(int p, int ell, long n, long c_max) {
    if (ell < 1 || ell > p - 1)
        throw std::domain_error("series: need 1 <= ell <= " + std::to_string(p - 1));
    if (n < 1) throw std::domain_error("series: need n >= 1");
    if (c_max < p) throw std::domain_error("series: c_max below the first modulus");
}

void finish_evaluation(SeriesEvaluation& ev, std::complex<double> total) {
    ev.value = total.real();
    ev.imag_residual = std::abs(total.imag());
    ev.oracle = a_coefficient(ev.ell, ev.p, ev.n);
    ev.abs_error = std::abs(ev.value - ev.oracle);
}

}  // namespace

double bessel_i_half(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_i_half: need x > 0");
    return std::sqrt(2.0 / (kPi * x)) * std::sinh(x);
}

SeriesEvaluation a_exact_5(int ell, long n, long c_max) {
    validate_series_args(5, ell, n, c_max);
    SeriesEvaluation ev;
    ev.p = 5;
    ev.ell = ell;
    ev.n = n;
    ev.c_max = c_max;
    const double root = std::sqrt(24.0 * n - 1.0);
    const std::complex<double> prefactor =
        2.0 * kPi * std::polar(1.0, -kPi / 4.0) * std::sin(kPi * ell / 5.0) / std::sqrt(root);
    KahanC acc;
    for (long c = 5; c <= c_max; c += 5) {
        const std::complex<double> s = s_inf_inf(5, ell, n, c, EvalMode::floating).approx;
        const std::complex<double> term =
            prefactor * s / static_cast<double>(c) * bessel_i_half(4.0 * kPi * root / (24.0 * c));
        acc.add(term);
        ev.terms.push_back({0, c, term.real(), acc.value().real()});
    }
    if (!ev.terms.empty()) ev.final_term = std::abs(ev.terms.back().term);
    finish_evaluation(ev, acc.value());
    return ev;
}

SeriesEvaluation a_exact_7(int ell, long n, long c_max) {
    validate_series_args(7, ell, n, c_max);
    SeriesEvaluation ev;
    ev.p = 7;
    ev.ell = ell;
    ev.n = n;
    ev.c_max = c_max;
    const double root = std::sqrt(24.0 * n - 1.0);
    const std::complex<double> prefactor1 =
        2.0 * kPi * std::polar(1.0, -kPi / 4.0) * std::sin(kPi * ell / 7.0) / std::sqrt(root);
    KahanC acc;
    double last1 = 0.0, last2 = 0.0;
    for (long c = 7; c <= c_max; c += 7) {
        const std::complex<double> s = s_inf_inf(7, ell, n, c, EvalMode::floating).approx;
        const std::complex<double> term =
            prefactor1 * s / static_cast<double>(c) * bessel_i_half(4.0 * kPi * root / (24.0 * c));
        acc.add(term);
        last1 = std::abs(term);
        ev.terms.push_back({0, c, term.real(), acc.value().real()});
    }
    const double prefactor2 = 4.0 * kPi * std::sin(kPi * ell / 7.0) / std::sqrt(root);
    for (long a = 1; 7 * a <= c_max; ++a) {
        if (a % 7 == 0) continue;
        const int br = static_cast<int>((a % 7) * ell % 7);
        if (br != 1 && br != 6) continue;
        const std::complex<double> s = s_zero_inf(ell, n, a, EvalMode::floating).approx;
        const std::complex<double> term = prefactor2 * s /
                                          (std::sqrt(7.0) * static_cast<double>(a)) *
                                          bessel_i_half(4.0 * kPi * root / (168.0 * a));
        acc.add(term);
        last2 = std::abs(term);
        ev.terms.push_back({1, a, term.real(), acc.value().real()});
    }
    ev.final_term = std::max(last1, last2);
    finish_evaluation(ev, acc.value());
    return ev;
}

bool corollary_consistency(int p, int k, long n) {
    if (p != 5 && p != 7) throw std::domain_error("corollary_consistency: p must be 5 or 7");
    if (n < 0) throw std::domain_error("corollary_consistency: n must be >= 0");
    const std::string id = std::to_string(p) + "-" + std::to_string(k);
    const DysonCase dc = dyson_case(id);  // rejects residues with no identity
    if (!dyson_identity_check(id, n)) return false;

    // Series side: the same rank-class differences expressed through the
    // coefficients A(j/p; m).  The weighted combinations cancel termwise, so a
    // modest cutoff already drives the truncated difference below 1e-6.
    const long m = p * n + k;
    if (m < 1) return true;  // series defined for arguments >= 1 only
    const long c_max = 700;
    std::vector<double> A(p, 0.0);
    for (int j = 1; j <= p - 1; ++j)
        A[j] = (p == 5 ? a_exact_5(j, m, c_max) : a_exact_7(j, m, c_max)).value;
    double worst = 0.0;
    for (auto [a, a2] : dc.equal_pairs) {
        double delta = 0.0;
        for (int j = 1; j <= p - 1; ++j)
            delta += (std::cos(2.0 * kPi * a * j / p) - std::cos(2.0 * kPi * a2 * j / p)) * A[j];
        worst = std::max(worst, std::abs(delta / p));
    }
    if (dc.sum_relation) {
        double delta = 0.0;
        for (int j = 1; j <= p - 1; ++j)
            delta += (1.0 + std::cos(2.0 * kPi * j / p) - std::cos(4.0 * kPi * j / p) -
                      std::cos(6.0 * kPi * j / p)) *
                     A[j];
        worst = std::max(worst, std::abs(delta / p));
    }
    return worst < 1e-6;
}

}  // namespace rankkl
