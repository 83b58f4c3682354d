#pragma once

// Shape analyses of the record tables: log-concavity, peak locations and
// their growth law, the large-n ratio between the tree closed form and its
// power approximation, the Borel–Tanner distribution the k-record counts
// normalize to, and two finer record statistics with exhaustive oracles
// (sum of record positions over permutations; sum of record depths over
// rooted trees).

#include "treerec/bigmath.hpp"
#include "treerec/counting.hpp"
#include "treerec/prufer.hpp"
#include "treerec/tree.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treerec {

// a is log-concave when a_k^2 >= a_{k-1} a_{k+1} at every interior index.
// Intended for positive sequences (a full row's k = 1..n segment).
inline bool is_log_concave(const std::vector<Integer>& a) {
    for (std::size_t k = 1; k + 1 < a.size(); ++k)
        if (a[k] * a[k] < a[k - 1] * a[k + 1]) return false;
    return true;
}

// Weak unimodality: non-decreasing up to some peak, non-increasing after.
inline bool is_unimodal(const std::vector<Integer>& a) {
    std::size_t i = 1;
    while (i < a.size() && a[i] >= a[i - 1]) ++i;
    while (i < a.size() && a[i] <= a[i - 1]) ++i;
    return i == a.size();
}

// Position (1-based) of the last maximum among values for k = 1, 2, ...
inline int greatest_argmax(const std::vector<Integer>& values_from_k1) {
    if (values_from_k1.empty()) throw std::invalid_argument("greatest_argmax: empty row");
    int best = 1;
    for (std::size_t i = 1; i < values_from_k1.size(); ++i)
        if (values_from_k1[i] >= values_from_k1[static_cast<std::size_t>(best) - 1])
            best = static_cast<int>(i) + 1;
    return best;
}

// Row n of the tree table as exact integers for k = 1..n, built incrementally
// from T(n,1) = n^(n-2) via the exact ratio
//     T(n,k+1) / T(n,k) = (k+1)(n-k) / (k n).
inline std::vector<Integer> tree_row_exact(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("tree_row_exact: need n >= 1");
    std::vector<Integer> row;
    row.reserve(static_cast<std::size_t>(n));
    Integer value = cayley_unrooted_count(n);
    row.push_back(value);
    for (std::int64_t k = 1; k < n; ++k) {
        value *= (k + 1) * (n - k);
        Integer d = k * n;
        if (value % d != 0) throw ConsistencyError("tree_row_exact: ratio not integral");
        value /= d;
        row.push_back(value);
    }
    return row;
}

// Greatest k maximizing T(n, .): the closed form rises while k(k-1) <= n and
// falls after, so the greatest argmax is floor((1 + sqrt(1+4n)) / 2), clamped
// to n. Exact integer arithmetic.
inline std::int64_t tree_peak_index(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("tree_peak_index: need n >= 1");
    std::int64_t k = (1 + isqrt_floor(1 + 4 * n)) / 2;
    return std::min(k, n);
}

// Greatest k maximizing F(n, .), read off an exact forest table.
inline int forest_peak_index(const RecordTable& forest_table, int n) {
    if (forest_table.kind() != TableKind::forest)
        throw std::invalid_argument("forest_peak_index: need a forest table");
    if (n < 1 || n > forest_table.n_max()) throw std::out_of_range("forest_peak_index: n outside table");
    const auto& row = forest_table.row(n);
    return greatest_argmax(std::vector<Integer>(row.begin() + 1, row.end()));
}

inline int forest_peak_index(int n) {
    return forest_peak_index(forest_record_table_recurrence(n), n);
}

// Ordinary least squares of k*(n)^2 against n over n_min <= n <= n_max.
struct PeakFitResult {
    double slope = 0.0;
    double intercept = 0.0;
    int n_min = 0;
    int n_max = 0;
    std::vector<std::pair<int, int>> samples;  // (n, k_star)
};

inline PeakFitResult peak_fit(const RecordTable& forest_table, int n_min, int n_max) {
    if (n_min < 1 || n_max < n_min || n_max > forest_table.n_max())
        throw std::invalid_argument("peak_fit: bad range");
    PeakFitResult fit;
    fit.n_min = n_min;
    fit.n_max = n_max;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (int n = n_min; n <= n_max; ++n) {
        int k = forest_peak_index(forest_table, n);
        fit.samples.emplace_back(n, k);
        double x = n;
        double y = static_cast<double>(k) * k;
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    double m = static_cast<double>(fit.samples.size());
    double denom = m * sxx - sx * sx;
    if (denom == 0) throw std::invalid_argument("peak_fit: degenerate range");
    fit.slope = (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    return fit;
}

// log of the exact-to-approximate ratio of the tree closed form:
//     T(n,k) = k (n-1)...(n-k+1) n^(n-k-1)  vs  k n^(k-1) n^(n-k-1)
// gives log ratio = sum_{j=1}^{k-1} log(1 - j/n), which tends to 0 from
// below as n grows with k fixed.
inline double asymptotic_log_ratio(std::int64_t n, std::int64_t k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("asymptotic_log_ratio: need 1 <= k <= n");
    double s = 0.0;
    for (std::int64_t j = 1; j <= k - 1; ++j)
        s += std::log1p(-static_cast<double>(j) / static_cast<double>(n));
    return s;
}

// Borel-Tanner probability mass: for k initial customers and offspring rate
// rho in (0, 1], the busy period serves n customers with probability
//     P(n) = k n^(n-k-1) rho^(n-k) e^(-rho n) / (n-k)!,   n >= k.
// Evaluated in log space (lgamma) to survive n in the thousands.
inline double borel_tanner_pmf(int k, double rho, std::int64_t n) {
    if (k < 1) throw std::invalid_argument("borel_tanner_pmf: need k >= 1");
    if (!(rho > 0.0) || rho > 1.0) throw std::invalid_argument("borel_tanner_pmf: need rho in (0, 1]");
    if (n < k) return 0.0;
    double nd = static_cast<double>(n);
    double log_p = std::log(static_cast<double>(k)) + (nd - k) * (std::log(rho) + std::log(nd)) -
                   std::log(nd) - rho * nd - std::lgamma(nd - k + 1);
    return std::exp(log_p);
}

// Sum of the pmf over n = k..n_max. Equals 1 in the limit; the truncation
// deficit decays like e^(-(rho - 1 - log rho) n), which is painfully slow for
// rho near 1.
inline double borel_tanner_truncated_sum(int k, double rho, std::int64_t n_max) {
    double s = 0.0;
    for (std::int64_t n = k; n <= n_max; ++n) s += borel_tanner_pmf(k, rho, n);
    return s;
}

// ---------------------------------------------------------------------------
// Record-position polynomial over permutations:
//     P_n(q) = q (q^2 + 1)(q^3 + 2) ... (q^n + n-1),
// whose q^s coefficient counts permutations of 1..n whose record (left-to-
// right maximum) positions sum to s. Coefficient sum is n!.
inline std::vector<Integer> record_position_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("record_position_polynomial: need n >= 1");
    std::vector<Integer> p{Integer(0), Integer(1)};  // q
    for (int i = 2; i <= n; ++i) {
        // multiply by (q^i + (i-1))
        std::vector<Integer> next(p.size() + static_cast<std::size_t>(i), Integer(0));
        for (std::size_t s = 0; s < p.size(); ++s) {
            if (p[s] == 0) continue;
            next[s + static_cast<std::size_t>(i)] += p[s];
            next[s] += p[s] * (i - 1);
        }
        p = std::move(next);
    }
    return p;
}

// ---------------------------------------------------------------------------
// Sum-of-record-depths polynomial over rooted trees on 1..n:
//     coeffs[s] = #{ rooted trees on [n] : sum over records of depth = s },
// depth measured from the tree's own root (the root is always a record, at
// depth 0). Exhaustive by construction, hence hard-capped. Provable anchors:
// coeffs[0] = n^(n-2) (root must be n) and the coefficient sum is n^(n-1).
struct SrecPolynomial {
    int n = 0;
    std::vector<Integer> coeffs;  // index s, size n(n-1)/2 + 1
};

inline SrecPolynomial srec_polynomial(int n, int cap = kBruteForceCap) {
    if (n < 1) throw std::invalid_argument("srec_polynomial: need n >= 1");
    SrecPolynomial p;
    p.n = n;
    p.coeffs.assign(static_cast<std::size_t>(n) * (static_cast<std::size_t>(n) - 1) / 2 + 1, Integer(0));
    for_each_rooted_tree(
        n,
        [&](const RootedTree& t) {
            int srec = 0;
            for (int l : t.labels())
                if (t.is_record(l)) srec += t.depth(l);
            ++p.coeffs[static_cast<std::size_t>(srec)];
        },
        cap);
    return p;
}

// Forests made of two unrooted labelled trees on 1..n:
//     (1/2) sum_{a=1}^{n-1} binom(n,a) a^(a-2) (n-a)^(n-a-2).
inline Integer two_component_unrooted_forest_count(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("two_component_unrooted_forest_count: need n >= 2");
    Integer sum = 0;
    for (std::int64_t a = 1; a <= n - 1; ++a)
        sum += binomial(n, a) * cayley_unrooted_count(a) * cayley_unrooted_count(n - a);
    if (sum % 2 != 0) throw ConsistencyError("two_component_unrooted_forest_count: odd pair sum");
    return sum / 2;
}

// Observational report comparing two readings of the srec polynomial's
// "second column" against the two-component forest count: the q^1
// coefficient, and the first nonzero coefficient after s = 0. They agree
// with each other and with the forest count on every feasible n; reported,
// not asserted, because no proof backs the pattern here.
struct SrecColumnRow {
    int n = 0;
    Integer q1_coeff;
    Integer second_nonzero;
    Integer two_component;
    bool match = false;
};

inline std::vector<SrecColumnRow> srec_second_column_report(int n_min, int n_max,
                                                            int cap = kBruteForceCap) {
    if (n_min < 2) throw std::invalid_argument("srec_second_column_report: need n_min >= 2");
    std::vector<SrecColumnRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        SrecPolynomial p = srec_polynomial(n, cap);
        SrecColumnRow row;
        row.n = n;
        row.q1_coeff = p.coeffs.size() > 1 ? p.coeffs[1] : Integer(0);
        for (std::size_t s = 1; s < p.coeffs.size(); ++s)
            if (p.coeffs[s] != 0) {
                row.second_nonzero = p.coeffs[s];
                break;
            }
        row.two_component = two_component_unrooted_forest_count(n);
        row.match = (row.q1_coeff == row.two_component) && (row.second_nonzero == row.two_component);
        rows.push_back(std::move(row));
    }
    return rows;
}

// First n whose row k = 1..n fails log-concavity, if any.
inline std::optional<int> first_log_concavity_failure(const RecordTable& table) {
    for (int n = 1; n <= table.n_max(); ++n) {
        const auto& row = table.row(n);
        if (!is_log_concave(std::vector<Integer>(row.begin() + 1, row.end()))) return n;
    }
    return std::nullopt;
}

}  // namespace treerec
