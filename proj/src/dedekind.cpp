#include "rankkl/dedekind.hpp"

#include <map>
#include <mutex>

namespace rankkl {

namespace {

void check_args(const Int& d, const Int& c) {
    if (c < 1) throw std::domain_error("dedekind_sum: c must be >= 1");
    Int g;
    mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    if (g != 1) throw std::domain_error("dedekind_sum: d and c must be coprime");
}

}  // namespace

DedekindValue dedekind_sum(const Int& d, const Int& c) {
    check_args(d, c);
    DedekindValue out;
    {
        Int g;
        mpz_gcd_ui(g.get_mpz_t(), c.get_mpz_t(), 3);
        out.theta = static_cast<int>(g.get_si());
    }
    out.lambda = static_cast<int>(mpz_scan1(c.get_mpz_t(), 0));
    if (c == 1) {
        out.s = 0;
        out.twelve_cs = 0;
        out.lambda = 0;
        return out;
    }
    // s = S1/c^2 - (c-1)/4 with S1 = sum_{r=1}^{c-1} r * (d*r mod c); the
    // half-integer cross terms cancel because r -> d*r permutes [1, c-1].
    Int dm = least_residue(d, c);
    Int S1 = 0, m = 0;
    for (Int r = 1; r < c; ++r) {
        m += dm;
        if (m >= c) m -= c;
        S1 += r * m;
    }
    Int twelve_S1_over_c = 12 * S1;
    if (twelve_S1_over_c % c != 0) throw std::logic_error("dedekind_sum: 12*S1 not divisible by c");
    twelve_S1_over_c /= c;
    out.twelve_cs = twelve_S1_over_c - 3 * c * (c - 1);
    out.s = make_rat(S1, c * c) - make_rat(c - 1, Int(4));
    if (out.s * 12 * c != Rat(out.twelve_cs)) throw std::logic_error("dedekind_sum: internal mismatch");
    return out;
}

Rat dedekind_sum_recursive(const Int& d, const Int& c) {
    check_args(d, c);
    if (c == 1) return Rat(0);
    Int dm = least_residue(d, c);
    if (dm == 0) return Rat(0);  // unreachable for c > 1 with gcd(d, c) = 1
    // s(d, c) = -1/4 + (d/c + c/d + 1/(cd))/12 - s(c mod d, d)
    Rat acc(0);
    Int a = c, b = dm;
    int sign = 1;
    while (b > 1) {
        Rat recip = make_rat(b, a) + make_rat(a, b) + make_rat(Int(1), a * b);
        acc += Rat(sign) * (recip / 12 - make_rat(1, 4));
        Int next = least_residue(a, b);
        a = b;
        b = next;
        sign = -sign;
    }
    // Termination: s(1, a) = sum ((r/a))^2 = (a-1)(a-2)/(12a).
    acc += Rat(sign) * make_rat((a - 1) * (a - 2), 12 * a);
    return acc;
}

Residue twelve_cs_mod(const Int& d, const Int& c) {
    check_args(d, c);
    Int dm = least_residue(d, c);
    Int theta;
    mpz_gcd_ui(theta.get_mpz_t(), c.get_mpz_t(), 3);
    std::vector<Residue> parts;
    if (c % 2 != 0) {
        // Odd c: 12cs == c + 1 - 2*(d|c) (mod 8).
        parts.push_back({least_residue(c + 1 - 2 * kronecker(dm, c), Int(8)), Int(8)});
        if (theta * c > 1)
            parts.push_back({least_residue(dm + mod_inverse(dm, theta * c), theta * c), theta * c});
        if (theta == 1) parts.push_back({Int(0), Int(3)});
    } else {
        // Even c = 2^lambda * c_odd: one condition modulo 8*2^lambda, one
        // modulo theta*c_odd, and (when 3 does not divide c) one modulo 3.
        long lambda = static_cast<long>(mpz_scan1(c.get_mpz_t(), 0));
        Int m2 = Int(8) << lambda;
        Int rhs = dm + (c * c + 3 * c + 1 + 2 * c * kronecker(c, dm)) * mod_inverse(dm, m2);
        parts.push_back({least_residue(rhs, m2), m2});
        Int c_odd = c >> lambda;
        if (theta * c_odd > 1) {
            Int big = least_residue(dm + mod_inverse(dm, theta * c), theta * c);
            parts.push_back({least_residue(big, theta * c_odd), theta * c_odd});
        }
        if (theta == 1) parts.push_back({Int(0), Int(3)});
    }
    Residue out = crt(parts);
    if (out.modulus != 24 * c) throw std::logic_error("twelve_cs_mod: modulus mismatch");
    return out;
}

namespace {

std::mutex row_mutex;
std::map<long, std::vector<long long>> row_cache;

}  // namespace

const std::vector<long long>& twelve_cs_row(long c) {
    {
        std::lock_guard<std::mutex> lock(row_mutex);
        auto it = row_cache.find(c);
        if (it != row_cache.end()) return it->second;
    }
    std::vector<long long> row(static_cast<size_t>(c), 0);
    for (long d = 0; d < c; ++d) {
        if (gcd_long(d, c) != 1) continue;
        // Inline definitional loop with machine integers (values stay far
        // below 2^63 for the conductors this library works with).
        long long S1 = 0;
        long m = 0;
        for (long r = 1; r < c; ++r) {
            m += d;
            if (m >= c) m -= c;
            S1 += static_cast<long long>(r) * m;
        }
        long long twelve_S1 = 12 * S1;
        if (twelve_S1 % c != 0) throw std::logic_error("twelve_cs_row: 12*S1 not divisible by c");
        row[d] = twelve_S1 / c - 3LL * c * (c - 1);
    }
    std::lock_guard<std::mutex> lock(row_mutex);
    return row_cache.emplace(c, std::move(row)).first->second;
}

}  // namespace rankkl
