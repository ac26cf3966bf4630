#include <doctest.h>

#include "rankkl/partitions.hpp"

#include <complex>
#include <cstdlib>
#include <filesystem>

using namespace rankkl;

TEST_SUITE("partitions") {

TEST_CASE("partition counts match the classical table") {
    const long expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 0; n <= 10; ++n) CHECK(partition_count(n) == expected[n]);
    CHECK(partition_count(-3) == 0);
    CHECK(partition_count(45) == 89134);
    CHECK(partition_count(100) == Int("190569292"));
    CHECK(partition_count(200) == Int("3972999029388"));
}

TEST_CASE("rank counts for n = 4, both methods") {
    // Partitions of 4 and their ranks (largest part minus number of parts):
    // 4 -> 3, 3+1 -> 1, 2+2 -> 0, 2+1+1 -> -1, 1+1+1+1 -> -3.
    for (RankMethod m : {RankMethod::qseries, RankMethod::enumerate}) {
        const auto counts = rank_counts(4, m);
        CHECK(counts.at(3) == 1);
        CHECK(counts.at(1) == 1);
        CHECK(counts.at(0) == 1);
        CHECK(counts.at(-1) == 1);
        CHECK(counts.at(-3) == 1);
        CHECK(counts.size() == 5);
    }
}

TEST_CASE("empty partition has rank zero") {
    const auto counts = rank_counts(0);
    CHECK(counts.size() == 1);
    CHECK(counts.at(0) == 1);
}

TEST_CASE("dual-oracle agreement and symmetry up to n = 45") {
    for (long n = 0; n <= 45; ++n) {
        const auto fast = rank_counts(n, RankMethod::qseries);
        const auto slow = rank_counts(n, RankMethod::enumerate);
        CHECK(fast == slow);
        Int total = 0;
        for (const auto& [m, cnt] : fast) {
            total += cnt;
            const auto neg = fast.find(-m);
            REQUIRE(neg != fast.end());
            CHECK(neg->second == cnt);  // N(m, n) = N(-m, n)
        }
        CHECK(total == partition_count(n));
    }
}

TEST_CASE("q-series row sums match p(n) up to n = 200") {
    const RankTable& table = rank_table(200);
    for (long n = 0; n <= 200; ++n) {
        Int total = 0;
        for (long m = -n; m <= n; ++m) total += table.rank_count(m, n);
        CHECK(total == partition_count(n));
        CHECK(table.p_of(n) == partition_count(n));
    }
    // Outside the stored rank range the count is zero.
    CHECK(table.rank_count(201, 10) == 0);
    CHECK(table.rank_count(-400, 40) == 0);
}

TEST_CASE("residue-class counts are consistent with rank counts") {
    for (long b : {5L, 7L, 12L})
        for (long n : {0L, 1L, 9L, 25L}) {
            const auto classes = rank_class_counts(b, n);
            REQUIRE(static_cast<long>(classes.size()) == b);
            Int total = 0;
            for (const Int& v : classes) total += v;
            CHECK(total == partition_count(n));
            const auto by_rank = rank_counts(n);
            std::vector<Int> regrouped(b, 0);
            for (const auto& [m, cnt] : by_rank)
                regrouped[least_residue(m, b)] += cnt;
            CHECK(classes == regrouped);
        }
}

TEST_CASE("A(ell/b; n) is real and symmetric under ell -> b - ell") {
    for (long b : {5L, 7L})
        for (long n : {1L, 6L, 19L})
            for (long ell = 1; ell < b; ++ell) {
                const CycElement exact = a_coefficient_exact(ell, b, n);
                CHECK(exact == a_coefficient_exact(b - ell, b, n));
                const std::complex<double> z = embed(exact);
                CHECK(std::abs(z.imag()) < 1e-9);
                CHECK(std::abs(z.real() - a_coefficient(ell, b, n)) < 1e-9);
            }
    // A(j/5; 1) = 1: the only partition of 1 has rank 0.
    CHECK(a_coefficient(1, 5, 1) == doctest::Approx(1.0).epsilon(1e-12));
    // A(1/5; 4) = p-class combination that must vanish (all residue classes
    // of 4 = 5*0+4 are equal).
    CHECK(std::abs(a_coefficient(1, 5, 4)) < 1e-12);
}

TEST_CASE("b N(a,b;n) = p(n) + sum_j zeta^{-aj} A(j/b;n) exactly") {
    for (long b : {5L, 7L, 9L})
        for (long n : {0L, 3L, 14L, 30L})
            for (long a = 0; a < b; ++a) CHECK(relation_check(a, b, n));
}

TEST_CASE("rank-difference identities in progressions") {
    const char* ids[] = {"5-1", "5-2", "5-4", "7-0", "7-1", "7-2",
                         "7-3", "7-4", "7-5", "7-6"};
    for (const char* id : ids)
        for (long n = 0; n <= 6; ++n) CHECK(dyson_identity_check(id, n));
    CHECK_THROWS_AS(dyson_identity_check("5-3", 0), std::domain_error);
    CHECK_THROWS_AS(dyson_identity_check("junk", 0), std::domain_error);
}

TEST_CASE("identity case data") {
    const DysonCase c54 = dyson_case("5-4");
    CHECK(c54.b == 5);
    CHECK(c54.k == 4);
    CHECK(c54.equal_pairs.size() == 2);
    CHECK(!c54.sum_relation);
    const DysonCase c76 = dyson_case("7-6");
    CHECK(c76.b == 7);
    CHECK(c76.k == 6);
    CHECK(c76.sum_relation);
}

TEST_CASE("Ramanujan congruences for arguments up to 204") {
    for (long n = 0; 5 * n + 4 <= 204; ++n)
        CHECK(partition_count(5 * n + 4) % 5 == 0);
    for (long n = 0; 7 * n + 5 <= 201; ++n)
        CHECK(partition_count(7 * n + 5) % 7 == 0);
    // The third classical congruence as a bonus sanity check.
    for (long n = 0; 11 * n + 6 <= 204; ++n)
        CHECK(partition_count(11 * n + 6) % 11 == 0);
}

TEST_CASE("rank table cache round-trip") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "rankkl_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    setenv("RANKKL_CACHE_DIR", dir.c_str(), 1);
    {
        RankTable table(24);
        table.store_to_cache();
        auto loaded = RankTable::load_from_cache(24);
        REQUIRE(loaded != nullptr);
        CHECK(loaded->n_max() == 24);
        for (long n = 0; n <= 24; ++n) {
            CHECK(loaded->p_of(n) == partition_count(n));
            for (long m = -n; m <= n; ++m)
                CHECK(loaded->rank_count(m, n) == table.rank_count(m, n));
        }
        // A larger request must miss rather than truncate.
        CHECK(RankTable::load_from_cache(25) == nullptr);
    }
    unsetenv("RANKKL_CACHE_DIR");
    fs::remove_all(dir);
}

}  // TEST_SUITE
