#include "rankkl/arith.hpp"

namespace rankkl {

Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

Int least_residue(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("least_residue: modulus must be positive");
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

long least_residue(long a, long m) {
    if (m <= 0) throw std::domain_error("least_residue: modulus must be positive");
    long r = a % m;
    return r < 0 ? r + m : r;
}

Int mod_inverse(const Int& a, const Int& m) {
    if (m <= 0) throw std::domain_error("mod_inverse: modulus must be positive");
    if (m == 1) return 0;
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("mod_inverse: argument not invertible");
    return r;
}

long mod_inverse(long a, long m) { return mod_inverse(Int(a), Int(m)).get_si(); }

Residue crt(const std::vector<Residue>& congruences) {
    if (congruences.empty()) throw std::domain_error("crt: empty congruence list");
    Int value = 0, modulus = 1;
    for (const Residue& part : congruences) {
        if (part.modulus <= 0) throw std::domain_error("crt: modulus must be positive");
        Int g;
        mpz_gcd(g.get_mpz_t(), modulus.get_mpz_t(), part.modulus.get_mpz_t());
        if (g != 1) throw std::domain_error("crt: moduli are not pairwise coprime");
        // value + modulus * t  ==  part.value (mod part.modulus)
        Int t = least_residue((part.value - value) * mod_inverse(modulus, part.modulus),
                              part.modulus);
        value += modulus * t;
        modulus *= part.modulus;
    }
    return Residue{least_residue(value, modulus), modulus};
}

int kronecker(const Int& a, const Int& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

int kronecker(long a, long n) { return kronecker(Int(a), Int(n)); }

Int floor_rat(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
    return q;
}

Rat fold_turns(const Rat& x) {
    Rat r = x - Rat(floor_rat(x));
    r.canonicalize();
    return r;
}

Rat sawtooth(const Rat& x) {
    if (x.get_den() == 1) return Rat(0);
    return fold_turns(x) - make_rat(1, 2);
}

long gcd_long(long a, long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace rankkl
