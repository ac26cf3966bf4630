#include <doctest.h>

#include "rankkl/dedekind.hpp"

#include <random>

using namespace rankkl;

TEST_SUITE("dedekind") {

TEST_CASE("closed form for d = 1: s(1,c) = (c-1)(c-2)/(12c)") {
    for (long c = 1; c <= 40; ++c) {
        const DedekindValue v = dedekind_sum(Int(1), Int(c));
        CHECK(v.s == make_rat(Int(c - 1) * (c - 2), Int(12) * c));
    }
    // The worked example used by the command-line interface.
    const DedekindValue v5 = dedekind_sum(Int(1), Int(5));
    CHECK(v5.s == make_rat(1, 5));
    CHECK(v5.twelve_cs == 12);
}

TEST_CASE("pinned small values") {
    // s(2,5): r/5 -> 2r/5 sawtooth products, computed by hand.
    CHECK(dedekind_sum(Int(2), Int(5)).s == Rat(0));
    CHECK(dedekind_sum(Int(3), Int(7)).s == make_rat(-1, 14));
    CHECK(dedekind_sum(Int(5), Int(12)).s == make_rat(-1, 72));
    CHECK(dedekind_sum(Int(0), Int(1)).s == Rat(0));
    CHECK(dedekind_sum(Int(7), Int(1)).s == Rat(0));
}

TEST_CASE("theta and lambda classify c") {
    const DedekindValue a = dedekind_sum(Int(1), Int(24));
    CHECK(a.theta == 3);
    CHECK(a.lambda == 3);
    const DedekindValue b = dedekind_sum(Int(1), Int(35));
    CHECK(b.theta == 1);
    CHECK(b.lambda == 0);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(dedekind_sum(Int(2), Int(4)), std::domain_error);
    CHECK_THROWS_AS(dedekind_sum(Int(3), Int(0)), std::domain_error);
    CHECK_THROWS_AS(dedekind_sum(Int(5), Int(-5)), std::domain_error);
}

TEST_CASE("periodicity and oddness in d") {
    for (long c : {5L, 7L, 12L, 30L, 49L})
        for (long d = 1; d < c; ++d) {
            if (gcd_long(d, c) != 1) continue;
            CHECK(dedekind_sum(Int(d + c), Int(c)).s == dedekind_sum(Int(d), Int(c)).s);
            CHECK(dedekind_sum(Int(d - c), Int(c)).s == dedekind_sum(Int(d), Int(c)).s);
            CHECK(dedekind_sum(Int(c - d), Int(c)).s == -dedekind_sum(Int(d), Int(c)).s);
        }
}

TEST_CASE("2 * gcd(c,3) * c * s(d,c) is always an integer") {
    for (long c = 1; c <= 60; ++c)
        for (long d = 0; d < c; ++d) {
            if (gcd_long(d, c) != 1 && !(c == 1 && d == 0)) continue;
            const DedekindValue v = dedekind_sum(Int(d), Int(c));
            const Rat scaled = Rat(2 * v.theta) * Rat(static_cast<long>(c)) * v.s;
            CHECK(scaled.get_den() == 1);
            // And 12 c s is the integer the struct reports.
            CHECK(Rat(12) * Rat(static_cast<long>(c)) * v.s == Rat(v.twelve_cs));
        }
}

TEST_CASE("odd c: 12cs = c + 1 - 2(d|c) (mod 8)") {
    for (long c = 1; c <= 301; c += 2)
        for (long d = 1; d < c || (c == 1 && d == 1); ++d) {
            if (c > 1 && gcd_long(d, c) != 1) continue;
            const Int lhs = least_residue(dedekind_sum(Int(d % c), Int(c)).twelve_cs, Int(8));
            const Int rhs = least_residue(Int(c) + 1 - 2 * kronecker(d % c, c), Int(8));
            CHECK(lhs == rhs);
            if (c == 1) break;
        }
}

TEST_CASE("reciprocity evaluation equals the definitional sum") {
    std::mt19937_64 rng(20260823);
    std::uniform_int_distribution<long> cs(2, 400);
    for (int trial = 0; trial < 300; ++trial) {
        const long c = cs(rng);
        std::uniform_int_distribution<long> ds(1, c - 1);
        long d = ds(rng);
        if (gcd_long(d, c) != 1) continue;
        CHECK(dedekind_sum_recursive(Int(d), Int(c)) == dedekind_sum(Int(d), Int(c)).s);
    }
    // Exercise the explicit reciprocity statement too.
    for (long c : {5L, 8L, 13L, 55L})
        for (long d = 1; d < c; ++d) {
            if (gcd_long(d, c) != 1) continue;
            const Rat lhs = dedekind_sum(Int(d), Int(c)).s + dedekind_sum(Int(c), Int(d)).s;
            const Rat rhs = make_rat(-1, 4) +
                            (make_rat(d, c) + make_rat(c, d) + make_rat(1, d * c)) / 12;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("congruence reconstruction matches the definitional value mod 24c") {
    // The unit-level slice of the dual-path sweep (the acceptance run covers
    // every c <= 300).
    for (long c = 1; c <= 120; ++c) {
        const Int modulus = Int(24) * c;
        for (long d = 0; d < c || (c == 1 && d == 0); ++d) {
            if (c > 1 && gcd_long(d, c) != 1) continue;
            const Residue rec = twelve_cs_mod(Int(d), Int(c));
            CHECK(rec.modulus == modulus);
            CHECK(rec.value == least_residue(dedekind_sum(Int(d), Int(c)).twelve_cs, modulus));
            if (c == 1) break;
        }
    }
}

TEST_CASE("twelve_cs_row matches per-pair evaluation") {
    for (long c : {1L, 2L, 12L, 35L, 98L}) {
        const auto& row = twelve_cs_row(c);
        CHECK(static_cast<long>(row.size()) == c);
        for (long d = 0; d < c; ++d) {
            if (gcd_long(d, c) != 1 && !(c == 1 && d == 0)) continue;
            CHECK(Int(static_cast<long>(row[d])) == dedekind_sum(Int(d), Int(c)).twelve_cs);
        }
    }
}

}  // TEST_SUITE
