#include "rankkl/cyclotomic.hpp"

#include <mpfr.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace rankkl {

long euler_phi(long m) {
    if (m <= 0) throw std::domain_error("euler_phi: argument must be positive");
    long result = m;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

long radical(long m) {
    if (m <= 0) throw std::domain_error("radical: argument must be positive");
    long result = 1;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result *= p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result *= m;
    return result;
}

namespace {

// Exact division of a by a monic divisor, both with Int coefficients (index =
// degree).  Remainder must vanish; used only to build cyclotomic polynomials.
std::vector<Int> poly_div_exact_monic(std::vector<Int> a, const std::vector<Int>& b) {
    const long db = static_cast<long>(b.size()) - 1;
    const long da = static_cast<long>(a.size()) - 1;
    if (da < db) throw std::logic_error("poly_div_exact_monic: degree underflow");
    std::vector<Int> q(da - db + 1, Int(0));
    for (long i = da; i >= db; --i) {
        if (a[i] == 0) continue;
        Int f = a[i];
        q[i - db] = f;
        for (long t = 0; t <= db; ++t) a[i - db + t] -= f * b[t];
    }
    for (long i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("poly_div_exact_monic: nonzero remainder");
    return q;
}

std::mutex phi_poly_mutex;
std::map<long, std::vector<Int>> phi_poly_cache;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long m) {
    if (m <= 0) throw std::domain_error("cyclotomic_polynomial: argument must be positive");
    {
        std::lock_guard<std::mutex> lock(phi_poly_mutex);
        auto it = phi_poly_cache.find(m);
        if (it != phi_poly_cache.end()) return it->second;
    }
    // (x^m - 1) divided by the cyclotomic polynomials of all proper divisors.
    std::vector<Int> num(m + 1, Int(0));
    num[0] = -1;
    num[m] = 1;
    for (long d = 1; d < m; ++d)
        if (m % d == 0) num = poly_div_exact_monic(std::move(num), cyclotomic_polynomial(d));
    std::lock_guard<std::mutex> lock(phi_poly_mutex);
    return phi_poly_cache.emplace(m, std::move(num)).first->second;
}

namespace {

// Reduce a dense power vector (degrees 0..M-1) modulo the M-th cyclotomic
// polynomial, written as Phi_R(x^s) with R = radical(M), s = M/R.  Top-down
// synthetic division touches only the sparse exponents s*t, so one pass costs
// O(M * phi(R)) small-rational operations.
void reduce_dense(long M, std::vector<Rat>& c) {
    const long R = radical(M);
    const long s = M / R;
    const std::vector<Int>& phiR = cyclotomic_polynomial(R);
    const long degR = static_cast<long>(phiR.size()) - 1;
    const long phiM = s * degR;  // = euler_phi(M)
    for (long i = static_cast<long>(c.size()) - 1; i >= phiM; --i) {
        if (mpq_sgn(c[i].get_mpq_t()) == 0) continue;
        Rat f;
        mpq_swap(f.get_mpq_t(), c[i].get_mpq_t());
        for (long t = 0; t < degR; ++t) {
            if (phiR[t] == 0) continue;
            c[i - phiM + s * t] -= f * Rat(phiR[t]);
        }
    }
    c.resize(phiM);
}

}  // namespace

CycElement CycElement::zero(long conductor) {
    if (conductor <= 0) throw std::domain_error("CycElement: conductor must be positive");
    CycElement e;
    e.conductor_ = conductor;
    e.coeffs_.assign(euler_phi(conductor), Rat(0));
    return e;
}

CycElement CycElement::one(long conductor) { return from_rat(conductor, Rat(1)); }

CycElement CycElement::from_rat(long conductor, const Rat& value) {
    CycElement e = zero(conductor);
    e.coeffs_[0] = value;
    return e;
}

CycElement CycElement::root_of_unity(long conductor, long k) {
    std::vector<Rat> powers(least_residue(k, conductor) + 1, Rat(0));
    powers.back() = 1;
    return from_powers(conductor, powers);
}

CycElement CycElement::from_powers(long conductor, const std::vector<Rat>& powers) {
    std::vector<Rat> dense(conductor, Rat(0));
    for (size_t j = 0; j < powers.size(); ++j) {
        if (mpq_sgn(powers[j].get_mpq_t()) == 0) continue;
        dense[j % conductor] += powers[j];
    }
    reduce_dense(conductor, dense);
    return from_reduced(conductor, std::move(dense));
}

CycElement CycElement::from_reduced(long conductor, std::vector<Rat> reduced) {
    CycElement e;
    e.conductor_ = conductor;
    if (static_cast<long>(reduced.size()) != euler_phi(conductor))
        throw std::logic_error("from_reduced: wrong coefficient count");
    e.coeffs_ = std::move(reduced);
    return e;
}

bool CycElement::is_zero() const {
    for (const Rat& c : coeffs_)
        if (mpq_sgn(c.get_mpq_t()) != 0) return false;
    return true;
}

bool CycElement::operator==(const CycElement& o) const {
    return conductor_ == o.conductor_ && coeffs_ == o.coeffs_;
}

namespace {

void require_same_conductor(const CycElement& a, const CycElement& b) {
    if (a.conductor() != b.conductor())
        throw std::domain_error("CycElement: conductor mismatch (promote first)");
}

}  // namespace

CycElement CycElement::operator+(const CycElement& o) const {
    CycElement r = *this;
    r += o;
    return r;
}

CycElement CycElement::operator-(const CycElement& o) const {
    CycElement r = *this;
    r -= o;
    return r;
}

CycElement& CycElement::operator+=(const CycElement& o) {
    require_same_conductor(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycElement& CycElement::operator-=(const CycElement& o) {
    require_same_conductor(*this, o);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycElement CycElement::operator-() const {
    CycElement r = *this;
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

CycElement CycElement::scaled(const Rat& f) const {
    CycElement r = *this;
    for (Rat& c : r.coeffs_) c *= f;
    return r;
}

CycElement CycElement::operator*(const CycElement& o) const {
    require_same_conductor(*this, o);
    const long n = static_cast<long>(coeffs_.size());
    std::vector<Rat> prod(2 * n - 1, Rat(0));
    for (long i = 0; i < n; ++i) {
        if (mpq_sgn(coeffs_[i].get_mpq_t()) == 0) continue;
        for (long j = 0; j < n; ++j) {
            if (mpq_sgn(o.coeffs_[j].get_mpq_t()) == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return from_powers(conductor_, prod);
}

CycElement promote(const CycElement& a, long new_conductor) {
    if (new_conductor % a.conductor() != 0)
        throw std::domain_error("promote: old conductor must divide new conductor");
    if (new_conductor == a.conductor()) return a;
    const long stretch = new_conductor / a.conductor();
    std::vector<Rat> powers(static_cast<size_t>(a.coeffs().size() - 1) * stretch + 1, Rat(0));
    for (size_t j = 0; j < a.coeffs().size(); ++j) powers[j * stretch] = a.coeffs()[j];
    return CycElement::from_powers(new_conductor, powers);
}

CycElement mul_phase(const CycElement& a, const std::vector<SparsePhase>& phases) {
    const long M = a.conductor();
    std::vector<Rat> dense(M, Rat(0));
    const std::vector<Rat>& c = a.coeffs();
    for (const SparsePhase& ph : phases) {
        if (mpq_sgn(ph.coeff.get_mpq_t()) == 0) continue;
        const long shift = least_residue(ph.exp, M);
        for (size_t j = 0; j < c.size(); ++j) {
            if (mpq_sgn(c[j].get_mpq_t()) == 0) continue;
            dense[(j + shift) % M] += c[j] * ph.coeff;
        }
    }
    reduce_dense(M, dense);
    return CycElement::from_reduced(M, std::move(dense));
}

namespace {

// Polynomials over Q, index = degree, trailing zeros trimmed.
using QPoly = std::vector<Rat>;

long degree(const QPoly& p) {
    for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
        if (mpq_sgn(p[i].get_mpq_t()) != 0) return i;
    return -1;
}

void trim(QPoly& p) { p.resize(degree(p) + 1); }

QPoly poly_rem(QPoly a, const QPoly& b, QPoly* quotient) {
    const long db = degree(b);
    if (quotient) quotient->assign(std::max<long>(degree(a) - db + 1, 1), Rat(0));
    for (long i = degree(a); i >= db; --i) {
        if (mpq_sgn(a[i].get_mpq_t()) == 0) continue;
        Rat f = a[i] / b[db];
        if (quotient) (*quotient)[i - db] = f;
        for (long t = 0; t <= db; ++t) a[i - db + t] -= f * b[t];
    }
    trim(a);
    return a;
}

}  // namespace

CycElement invert(const CycElement& a) {
    if (a.is_zero()) throw std::domain_error("invert: division by zero");
    const long M = a.conductor();
    // Extended Euclid for gcd(a, Phi_M) over Q[x]; the cyclotomic polynomial
    // is irreducible, so the gcd is a nonzero constant and u satisfies
    // u * a == gcd (mod Phi_M).
    const std::vector<Int>& phi_int = cyclotomic_polynomial(M);
    QPoly r0(phi_int.size());
    for (size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    QPoly r1 = a.coeffs();
    trim(r1);
    QPoly u0{Rat(0)}, u1{Rat(1)};
    while (degree(r1) > 0) {
        QPoly q;
        QPoly r2 = poly_rem(std::move(r0), r1, &q);
        // u2 = u0 - q * u1
        QPoly u2(std::max(u0.size(), q.size() + u1.size()), Rat(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (mpq_sgn(q[i].get_mpq_t()) == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        trim(u2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (degree(r1) != 0) throw std::logic_error("invert: gcd with cyclotomic polynomial not constant");
    Rat g = r1[0];
    QPoly inv_coeffs = u1;
    for (Rat& c : inv_coeffs) c /= g;
    inv_coeffs.resize(static_cast<size_t>(degree(inv_coeffs)) + 1);
    std::vector<Rat> powers(inv_coeffs.begin(), inv_coeffs.end());
    return CycElement::from_powers(M, powers);
}

std::complex<double> embed(const CycElement& a, int precision_bits) {
    const long M = a.conductor();
    mpfr_t re, im, angle, s, c, coeff, two_pi;
    mpfr_inits2(precision_bits, re, im, angle, s, c, coeff, two_pi, (mpfr_ptr) nullptr);
    mpfr_const_pi(two_pi, MPFR_RNDN);
    mpfr_mul_ui(two_pi, two_pi, 2, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    const std::vector<Rat>& cs = a.coeffs();
    for (size_t j = 0; j < cs.size(); ++j) {
        if (mpq_sgn(cs[j].get_mpq_t()) == 0) continue;
        mpfr_mul_ui(angle, two_pi, static_cast<unsigned long>(j), MPFR_RNDN);
        mpfr_div_ui(angle, angle, static_cast<unsigned long>(M), MPFR_RNDN);
        mpfr_sin_cos(s, c, angle, MPFR_RNDN);
        mpfr_set_q(coeff, cs[j].get_mpq_t(), MPFR_RNDN);
        mpfr_fma(re, coeff, c, re, MPFR_RNDN);
        mpfr_fma(im, coeff, s, im, MPFR_RNDN);
    }
    std::complex<double> result(mpfr_get_d(re, MPFR_RNDN), mpfr_get_d(im, MPFR_RNDN));
    mpfr_clears(re, im, angle, s, c, coeff, two_pi, (mpfr_ptr) nullptr);
    return result;
}

CycElement sin_pi_frac(long k, long m, long M) {
    if (m <= 0 || M % (4 * m) != 0)
        throw std::domain_error("sin_pi_frac: conductor must be divisible by 4m");
    // sin(pi k/m) = (zeta_{2m}^k - zeta_{2m}^{-k}) / (2i),  1/(2i) = -zeta_4/2.
    const long half = M / (2 * m);  // zeta_{2m} = zeta_M^half
    const long quarter = M / 4;     // i = zeta_M^quarter
    std::vector<Rat> powers(M, Rat(0));
    powers[least_residue(k * half - quarter, M)] += make_rat(1, 2);
    powers[least_residue(-k * half - quarter, M)] -= make_rat(1, 2);
    return CycElement::from_powers(M, powers);
}

namespace {

std::once_flag sqrt7_checked;

}  // namespace

CycElement sqrt7(long M) {
    if (M % 28 != 0) throw std::domain_error("sqrt7: conductor must be divisible by 28");
    // Quadratic-residue-weighted sum of 7th roots of unity: the Gauss sum
    // sum_t (t|7) zeta_7^t equals i*sqrt(7), so sqrt(7) = -i times it.
    std::vector<Rat> powers(M, Rat(0));
    const long seventh = M / 7;
    const long quarter = M / 4;
    for (long t = 1; t < 7; ++t) {
        long e = least_residue(t * seventh - quarter, M);
        powers[e] += Rat(kronecker(t, 7L));
    }
    CycElement root = CycElement::from_powers(M, powers);
    std::call_once(sqrt7_checked, [&]() {
        std::complex<double> v = embed(root, 96);
        if (std::abs(v - std::complex<double>(2.6457513110645906, 0.0)) > 1e-9)
            throw std::logic_error("sqrt7: numeric self-check failed");
    });
    return root;
}

std::vector<SparsePhase> cos_diff_phases(long a, long b, long m, long M) {
    if (m <= 0 || M % (2 * m) != 0)
        throw std::domain_error("cos_diff_phases: conductor must be divisible by 2m");
    // cos(x pi/m) = (zeta_{2m}^x + zeta_{2m}^{-x}) / 2.
    const long half = M / (2 * m);
    Rat h = make_rat(1, 2);
    return {SparsePhase{a * half, h}, SparsePhase{-a * half, h},
            SparsePhase{b * half, -h}, SparsePhase{-b * half, -h}};
}

}  // namespace rankkl
