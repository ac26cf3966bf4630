#include "rankkl/partitions.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>

namespace rankkl {

namespace {

std::mutex pcount_mutex;
std::vector<Int> pcount_cache{Int(1)};  // p(0) = 1

}  // namespace

Int partition_count(long n) {
    if (n < 0) return 0;
    std::lock_guard<std::mutex> lock(pcount_mutex);
    while (static_cast<long>(pcount_cache.size()) <= n) {
        const long v = static_cast<long>(pcount_cache.size());
        Int total = 0;
        // p(v) = sum_{j>=1} (-1)^{j-1} [p(v - j(3j-1)/2) + p(v - j(3j+1)/2)]
        for (long j = 1;; ++j) {
            const long g1 = j * (3 * j - 1) / 2;
            const long g2 = j * (3 * j + 1) / 2;
            if (g1 > v) break;
            const Int& t1 = pcount_cache[v - g1];
            if (j % 2 == 1)
                total += t1;
            else
                total -= t1;
            if (g2 <= v) {
                const Int& t2 = pcount_cache[v - g2];
                if (j % 2 == 1)
                    total += t2;
                else
                    total -= t2;
            }
        }
        pcount_cache.push_back(total);
    }
    return pcount_cache[n];
}

// ---------------------------------------------------------------------------
// Rank table
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kCacheHeader = "rankkl rank table v1";

// Dense rectangle indexed [n][m + n_max].
struct Grid {
    long n_max;
    long width;
    std::vector<std::vector<Int>> rows;
    explicit Grid(long nm) : n_max(nm), width(2 * nm + 1), rows(nm + 1) {
        for (auto& r : rows) r.assign(width, Int(0));
    }
};

}  // namespace

RankTable::RankTable(long n_max) : n_max_(n_max) {
    if (n_max < 0) throw std::domain_error("RankTable: n_max must be >= 0");
    Grid result(n_max), term(n_max);
    const long off = n_max;
    result.rows[0][off] = 1;  // empty partition: rank 0
    term.rows[0][off] = 1;    // running term, k = 0
    long shifted = 0;
    for (long k = 1; k * k <= n_max; ++k) {
        // term *= q^{2k-1}  (brings the exponent from (k-1)^2 to k^2)
        const long s = 2 * k - 1;
        for (long n = n_max; n >= shifted + s; --n) term.rows[n] = std::move(term.rows[n - s]);
        for (long n = std::min(n_max, shifted + s - 1); n >= shifted; --n)
            term.rows[n].assign(result.width, Int(0));
        shifted += s;
        // term *= 1/(1 - w q^k) then 1/(1 - w^{-1} q^k): geometric expansion,
        // ascending in n so each addition reuses the already-updated rows.
        for (int dir = 0; dir < 2; ++dir) {
            const long dm = dir == 0 ? 1 : -1;
            for (long n = k; n <= n_max; ++n)
                for (long m = std::max(0L, dm); m < result.width + std::min(0L, dm); ++m)
                    term.rows[n][m] += term.rows[n - k][m - dm];
        }
        for (long n = shifted; n <= n_max; ++n)
            for (long m = 0; m < result.width; ++m) result.rows[n][m] += term.rows[n][m];
    }
    counts_.assign(n_max + 1, {});
    totals_.assign(n_max + 1, Int(0));
    for (long n = 0; n <= n_max; ++n) {
        counts_[n].assign(2 * n + 1, Int(0));
        for (long m = -n; m <= n; ++m) {
            counts_[n][m + n] = result.rows[n][m + off];
            totals_[n] += counts_[n][m + n];
        }
        if (totals_[n] != partition_count(n))
            throw std::logic_error("RankTable: ranks do not sum to p(n)");
    }
}

const Int& RankTable::rank_count(long m, long n) const {
    static const Int zero(0);
    if (n < 0 || n > n_max_ || m < -n || m > n) return zero;
    return counts_[n][m + n];
}

const Int& RankTable::p_of(long n) const {
    static const Int zero(0);
    if (n < 0 || n > n_max_) return zero;
    return totals_[n];
}

namespace {

std::mutex table_mutex;
std::unique_ptr<RankTable> table_instance;

std::string cache_file_path(long n_max) {
    const char* dir = std::getenv("RANKKL_CACHE_DIR");
    if (!dir || !*dir) return {};
    return std::string(dir) + "/v1/rank_table_" + std::to_string(n_max) + ".txt";
}

}  // namespace

std::unique_ptr<RankTable> RankTable::load_from_cache(long n_max) {
    const std::string path = cache_file_path(n_max);
    if (path.empty()) return nullptr;
    std::ifstream in(path);
    if (!in) return nullptr;
    std::string header;
    std::getline(in, header);
    long stored = -1;
    in >> stored;
    if (header != kCacheHeader || stored != n_max) return nullptr;
    auto table = std::unique_ptr<RankTable>(new RankTable());
    table->n_max_ = n_max;
    table->counts_.assign(n_max + 1, {});
    table->totals_.assign(n_max + 1, Int(0));
    for (long n = 0; n <= n_max; ++n) {
        table->counts_[n].assign(2 * n + 1, Int(0));
        for (long i = 0; i < 2 * n + 1; ++i) {
            std::string word;
            if (!(in >> word)) return nullptr;
            table->counts_[n][i] = Int(word.c_str());
            table->totals_[n] += table->counts_[n][i];
        }
        // Integrity: every cached row must sum to p(n) from the independent
        // pentagonal recurrence, else fall back to a fresh build.
        if (table->totals_[n] != partition_count(n)) return nullptr;
    }
    return table;
}

void RankTable::store_to_cache() const {
    const std::string path = cache_file_path(n_max());
    if (path.empty()) return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path).parent_path(), ec);
    if (ec) return;
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << kCacheHeader << "\n" << n_max() << "\n";
        for (long n = 0; n <= n_max(); ++n)
            for (long m = -n; m <= n; ++m) out << rank_count(m, n) << (m == n ? '\n' : ' ');
    }
    std::rename(tmp.c_str(), path.c_str());
}

const RankTable& rank_table(long n_max) {
    std::lock_guard<std::mutex> lock(table_mutex);
    if (table_instance && table_instance->n_max() >= n_max) return *table_instance;
    const long build_max = std::max(n_max, 200L);
    auto cached = RankTable::load_from_cache(build_max);
    if (cached) {
        table_instance = std::move(cached);
        return *table_instance;
    }
    table_instance = std::make_unique<RankTable>(build_max);
    table_instance->store_to_cache();
    return *table_instance;
}

// ---------------------------------------------------------------------------
// Queries
// ---------------------------------------------------------------------------

namespace {

void enumerate_ranks(long remaining, long cap, long count, long largest, std::map<long, Int>& acc) {
    if (remaining == 0) {
        acc[largest - count] += 1;
        return;
    }
    for (long f = std::min(remaining, cap); f >= 1; --f)
        enumerate_ranks(remaining - f, f, count + 1, count == 0 ? f : largest, acc);
}

}  // namespace

std::map<long, Int> rank_counts(long n, RankMethod method) {
    std::map<long, Int> out;
    if (n < 0) return out;
    if (method == RankMethod::enumerate) {
        enumerate_ranks(n, n == 0 ? 1 : n, 0, 0, out);
        return out;
    }
    const RankTable& table = rank_table(std::max(n, 200L));
    for (long m = -n; m <= n; ++m) {
        const Int& v = table.rank_count(m, n);
        if (v != 0) out[m] = v;
    }
    return out;
}

std::vector<Int> rank_class_counts(long b, long n) {
    if (b < 1) throw std::domain_error("rank_class_counts: b must be >= 1");
    std::vector<Int> out(b, Int(0));
    if (n < 0) return out;
    const RankTable& table = rank_table(std::max(n, 200L));
    for (long m = -n; m <= n; ++m) out[least_residue(m, b)] += table.rank_count(m, n);
    return out;
}

CycElement a_coefficient_exact(long ell, long b, long n) {
    if (b < 2) throw std::domain_error("a_coefficient_exact: b must be >= 2");
    std::vector<Rat> powers(b, Rat(0));
    if (n >= 0) {
        const RankTable& table = rank_table(std::max(n, 200L));
        for (long m = -n; m <= n; ++m) {
            const Int& v = table.rank_count(m, n);
            if (v != 0) powers[least_residue(ell * m, b)] += Rat(v);
        }
    }
    return CycElement::from_powers(b, powers);
}

double a_coefficient(long ell, long b, long n) {
    std::complex<double> v = embed(a_coefficient_exact(ell, b, n));
    if (std::abs(v.imag()) > 1e-6)
        throw std::logic_error("a_coefficient: imaginary residue exceeds tolerance");
    return v.real();
}

bool relation_check(long a, long b, long n) {
    if (b < 2 || a < 0 || a >= b) throw std::domain_error("relation_check: need b >= 2, 0 <= a < b");
    std::vector<Int> classes = rank_class_counts(b, n);
    CycElement rhs = CycElement::from_rat(b, Rat(partition_count(n)));
    for (long j = 1; j < b; ++j)
        rhs += mul_phase(a_coefficient_exact(j, b, n), {SparsePhase{-a * j, Rat(1)}});
    CycElement lhs = CycElement::from_rat(b, Rat(b * classes[a]));
    return lhs == rhs;
}

DysonCase dyson_case(const std::string& case_id) {
    DysonCase d;
    if (case_id == "5-1") {
        d = {5, 1, {{1, 2}}, false};
    } else if (case_id == "5-2") {
        d = {5, 2, {{0, 2}}, false};
    } else if (case_id == "5-4") {
        d = {5, 4, {{0, 1}, {1, 2}}, false};
    } else if (case_id == "7-0") {
        d = {7, 0, {{2, 3}}, false};
    } else if (case_id == "7-1") {
        d = {7, 1, {{1, 2}, {2, 3}}, false};
    } else if (case_id == "7-2") {
        d = {7, 2, {{0, 3}}, false};
    } else if (case_id == "7-3") {
        d = {7, 3, {{0, 2}, {1, 3}}, false};
    } else if (case_id == "7-4") {
        d = {7, 4, {{0, 1}, {1, 3}}, false};
    } else if (case_id == "7-5") {
        d = {7, 5, {{0, 1}, {1, 2}, {2, 3}}, false};
    } else if (case_id == "7-6") {
        d = {7, 6, {}, true};
    } else {
        throw std::domain_error("dyson_case: unknown case id '" + case_id + "'");
    }
    return d;
}

bool dyson_identity_check(const std::string& case_id, long n) {
    const DysonCase d = dyson_case(case_id);
    if (n < 0) throw std::domain_error("dyson_identity_check: n must be >= 0");
    std::vector<Int> cls = rank_class_counts(d.b, d.b * n + d.k);
    if (d.sum_relation) return cls[0] + cls[1] == cls[2] + cls[3];
    for (auto [a, b] : d.equal_pairs)
        if (cls[a] != cls[b]) return false;
    return true;
}

}  // namespace rankkl
