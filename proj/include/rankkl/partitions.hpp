#pragma once
// Partition counts p(n), rank counts N(m, n) (rank = largest part minus
// number of parts), residue-class counts N(a, b; n), and the real numbers
// A(ell/b; n) = sum_m N(m, n) zeta_b^{ell*m} together with the identities
// linking them.  Rank tables are built from the rank generating function
//   R(w; q) = 1 + sum_{k>=1} q^{k^2} / ((w q; q)_k (w^{-1} q; q)_k)
// and cross-checked against direct partition enumeration.

#include "rankkl/arith.hpp"
#include "rankkl/cyclotomic.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace rankkl {

// p(n); returns 0 for n < 0.  Pentagonal-number recurrence, cached.
Int partition_count(long n);

enum class RankMethod {
    qseries,    // generating-function table (the workhorse)
    enumerate,  // direct enumeration of partitions (independent oracle)
};

// N(m, n) for all m with a nonzero count.
std::map<long, Int> rank_counts(long n, RankMethod method = RankMethod::qseries);

// N(a, b; n) for a = 0..b-1 (counts of partitions of n with rank = a mod b).
std::vector<Int> rank_class_counts(long b, long n);

// A(ell/b; n) as an exact element of Q(zeta_b).
CycElement a_coefficient_exact(long ell, long b, long n);

// Numeric value of A(ell/b; n); the imaginary part of the embedding is
// checked to be negligible (the value is real since N(m,n) = N(-m,n)).
double a_coefficient(long ell, long b, long n);

// Exact check of b*N(a, b; n) = p(n) + sum_{j=1}^{b-1} zeta_b^{-a j} A(j/b; n)
// in Q(zeta_b).
bool relation_check(long a, long b, long n);

// Rank-difference identities in arithmetic progressions.  case_id selects the
// modulus b in {5, 7} and the residue k of the progression b*n + k:
//   "5-1"  N(1,5) = N(2,5)                     at 5n+1
//   "5-2"  N(0,5) = N(2,5)                     at 5n+2
//   "5-4"  N(0,5) = N(1,5) = N(2,5)            at 5n+4
//   "7-0"  N(2,7) = N(3,7)                     at 7n
//   "7-1"  N(1,7) = N(2,7) = N(3,7)            at 7n+1
//   "7-2"  N(0,7) = N(3,7)                     at 7n+2
//   "7-3"  N(0,7) = N(2,7) and N(1,7) = N(3,7) at 7n+3
//   "7-4"  N(0,7) = N(1,7) = N(3,7)            at 7n+4
//   "7-5"  N(0,7) = N(1,7) = N(2,7) = N(3,7)   at 7n+5
//   "7-6"  N(0,7) + N(1,7) = N(2,7) + N(3,7)   at 7n+6
// n is the progression index (the rank counts are taken at b*n + k).
bool dyson_identity_check(const std::string& case_id, long n);

// Equality patterns behind dyson_identity_check, as index pairs (a, a') with
// N(a, b; bn+k) = N(a', b; bn+k) -- or the single four-term relation for
// "7-6".  Exposed for the series-consistency driver.
struct DysonCase {
    long b = 0;
    long k = 0;
    std::vector<std::pair<int, int>> equal_pairs;
    bool sum_relation = false;  // "7-6": N0 + N1 = N2 + N3
};
DysonCase dyson_case(const std::string& case_id);

// Shared rank table; built once per process (and loaded/stored via the
// directory in $RANKKL_CACHE_DIR when that variable is set).  Requests above
// the current capacity rebuild the table, so do not hold the reference across
// calls with a larger n_max.
class RankTable {
public:
    explicit RankTable(long n_max);
    long n_max() const { return n_max_; }
    const Int& rank_count(long m, long n) const;  // N(m, n); 0 outside range
    const Int& p_of(long n) const;

    // Cache round-trip (no-ops when RANKKL_CACHE_DIR is unset; loaded data is
    // validated row-by-row against the pentagonal recurrence).
    static std::unique_ptr<RankTable> load_from_cache(long n_max);
    void store_to_cache() const;

private:
    long n_max_;
    std::vector<std::vector<Int>> counts_;  // counts_[n][m + n]
    std::vector<Int> totals_;
    RankTable() : n_max_(-1) {}
};

const RankTable& rank_table(long n_max = 200);

}  // namespace rankkl
