#pragma once

// Exact record-count tables for rooted trees and rooted forests.
//
// Notation: T(n,k) = number of rooted trees on labels 1..n with exactly k
// records; F(n,k) = number of rooted forests on 1..n (0-rooted trees) with
// exactly k records. Both live in triangles 1 <= k <= n, plus the anchor
// F(0,0) = 1 for the empty forest.
//
// Four independent routes to the same numbers are implemented —
//
//   closed form      T(n,k) = k * (n-1)(n-2)...(n-k+1) * n^(n-k-1)
//   alternating form F(n,k) = sum over m of signed binomial/Stirling terms
//   recurrences      peel off the last (largest-rooted) record component
//   brute force      exhaustive enumeration over the Prüfer streams
//
// — and the verification suites confront them with each other.

#include "treerec/bigmath.hpp"
#include "treerec/prufer.hpp"
#include "treerec/tree.hpp"

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace treerec {

inline constexpr int kBruteForceCap = 8;  // exhaustive enumeration refuses n beyond this
inline constexpr int kTableCap = 400;     // table builders refuse n_max beyond this

enum class TableKind { tree, forest };

inline const char* table_kind_name(TableKind k) { return k == TableKind::tree ? "tree" : "forest"; }

// A filled triangle of record counts: entry(n, k) for 0 <= k <= n <= n_max.
class RecordTable {
  public:
    RecordTable(TableKind kind, int n_max)
        : kind_(kind), rows_(static_cast<std::size_t>(check_n_max(n_max)) + 1) {
        for (int n = 0; n <= n_max; ++n)
            rows_[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, Integer(0));
    }

    TableKind kind() const { return kind_; }
    int n_max() const { return static_cast<int>(rows_.size()) - 1; }

    const Integer& entry(int n, int k) const {
        static const Integer zero = 0;
        if (n < 0 || n > n_max() || k < 0 || k > n) return zero;
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    void set_entry(int n, int k, Integer value) {
        if (n < 0 || n > n_max() || k < 0 || k > n)
            throw std::out_of_range("RecordTable::set_entry");
        rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
    }

    // Full row n as indices 0..n.
    const std::vector<Integer>& row(int n) const {
        if (n < 0 || n > n_max()) throw std::out_of_range("RecordTable::row");
        return rows_[static_cast<std::size_t>(n)];
    }

    Integer row_sum(int n) const {
        Integer s = 0;
        for (const Integer& v : row(n)) s += v;
        return s;
    }

    bool operator==(const RecordTable& other) const {
        return kind_ == other.kind_ && rows_ == other.rows_;
    }

  private:
    static int check_n_max(int n_max) {
        if (n_max < 0) throw std::invalid_argument("RecordTable: negative n_max");
        if (n_max > kTableCap) throw CapExceeded("RecordTable: n_max exceeds table cap");
        return n_max;
    }

    TableKind kind_;
    std::vector<std::vector<Integer>> rows_;
};

// ---------------------------------------------------------------------------
// Closed forms.

// T(n,k) = k * (n-1)(n-2)...(n-k+1) * n^(n-k-1) for 1 <= k <= n. At k = n the
// power reads n^(-1), cancelling against the falling product to give
// T(n,n) = (n-1)!; computed in rationals, integrality checked.
inline Integer tree_record_number(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("tree_record_number: negative n");
    if (k < 1 || k > n) return 0;
    Rational q(k);
    for (std::int64_t j = 1; j <= k - 1; ++j) q *= (n - j);
    if (n - k - 1 >= 0)
        q *= Rational(int_pow(n, n - k - 1));
    else
        q /= n;  // k = n: the n^(n-k-1) factor is 1/n
    return require_integer(q, "tree_record_number");
}

// Unsigned Stirling numbers of the first kind c(m, j): permutations of m
// elements with j cycles. Rows built once by the usual triangle recurrence.
class StirlingTable {
  public:
    explicit StirlingTable(int m_max) : rows_(static_cast<std::size_t>(check(m_max)) + 1) {
        rows_[0] = {Integer(1)};  // c(0,0) = 1
        for (int m = 1; m <= m_max; ++m) {
            auto& row = rows_[static_cast<std::size_t>(m)];
            const auto& prev = rows_[static_cast<std::size_t>(m - 1)];
            row.assign(static_cast<std::size_t>(m) + 1, Integer(0));
            for (int j = 1; j <= m; ++j) {
                row[static_cast<std::size_t>(j)] = prev[static_cast<std::size_t>(j - 1)];
                if (j < m) row[static_cast<std::size_t>(j)] += Integer(m - 1) * prev[static_cast<std::size_t>(j)];
            }
        }
    }

    int m_max() const { return static_cast<int>(rows_.size()) - 1; }

    const Integer& value(int m, int j) const {
        static const Integer zero = 0;
        if (m < 0 || m > m_max() || j < 0 || j > m) return zero;
        return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)];
    }

  private:
    static int check(int m_max) {
        if (m_max < 0) throw std::invalid_argument("StirlingTable: negative m_max");
        return m_max;
    }

    std::vector<std::vector<Integer>> rows_;
};

inline Integer stirling_first_unsigned(int m, int j) { return StirlingTable(m).value(m, j); }

// F(n,k) by the alternating Stirling-number formula
//
//   F(n,k) = sum_{m=k+1}^{n+1} (-1)^(m+k-1) binom(n, m-1) * m * (n+1)^(n-m) * c(m, m-k),
//
// where the last term (m = n+1) reads m * (n+1)^(n-m) = 1. Computed in exact
// rationals so that the (n+1)^(n-m) = 1/(n+1) boundary case needs no special
// handling beyond arithmetic; integrality checked.
inline Integer forest_record_number(std::int64_t n, std::int64_t k, const StirlingTable& stirling) {
    if (n < 0) throw std::invalid_argument("forest_record_number: negative n");
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    if (stirling.m_max() < n + 1)
        throw std::invalid_argument("forest_record_number: Stirling table too small");
    Rational sum(0);
    Rational np1_power = Rational(1) / (n + 1);  // (n+1)^(n-m) at m = n+1
    for (std::int64_t m = n + 1; m >= k + 1; --m) {
        Rational term = np1_power * m;
        term *= Rational(binomial(n, m - 1));
        term *= Rational(stirling.value(static_cast<int>(m), static_cast<int>(m - k)));
        if ((m + k - 1) % 2 == 0)
            sum += term;
        else
            sum -= term;
        np1_power *= (n + 1);
    }
    return require_integer(sum, "forest_record_number");
}

inline Integer forest_record_number(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("forest_record_number: negative n");
    return forest_record_number(n, k, StirlingTable(static_cast<int>(n) + 1));
}

// Rooted forests on 1..n with exactly k components (for cross-checks):
// binom(n,k) * k * n^(n-k-1), read as binom(n,k) * k/n * n^(n-k).
inline Integer cayley_forest_count(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("cayley_forest_count: negative n");
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    Rational q(binomial(n, k));
    q *= k;
    q /= n;
    q *= Rational(int_pow(n, n - k));
    return require_integer(q, "cayley_forest_count");
}

// ---------------------------------------------------------------------------
// Recurrences. Both peel off the record component containing the largest
// label n: if the remaining forest lives on an i-subset of 1..n-1, the peeled
// component is a tree on the other n-i vertices rooted at its maximum
// (cayley_unrooted_count(n-i) shapes), and its root re-attaches to one of the
// i remaining vertices (tree case: i choices... times the component count
// recursion) or to any of i+1 places including the auxiliary root (forests).

namespace detail {

// binom_row[i] = binomial(n-1, i) for i = 0..n-1, built once per n so the
// recurrence loops below don't recompute binomials from scratch.
inline std::vector<Integer> binomial_row(int n_minus_1) {
    std::vector<Integer> row(static_cast<std::size_t>(n_minus_1) + 1);
    row[0] = 1;
    for (int i = 0; i < n_minus_1; ++i) {
        row[static_cast<std::size_t>(i + 1)] = row[static_cast<std::size_t>(i)] * (n_minus_1 - i);
        row[static_cast<std::size_t>(i + 1)] /= (i + 1);
    }
    return row;
}

}  // namespace detail

inline RecordTable tree_record_table_recurrence(int n_max) {
    RecordTable table(TableKind::tree, n_max);
    // Base k = 1: exactly one record forces the root to be the vertex n, and
    // trees rooted at a fixed vertex number n^(n-2).
    for (int n = 1; n <= n_max; ++n) table.set_entry(n, 1, cayley_unrooted_count(n));
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Integer> binom = detail::binomial_row(n - 1);
        std::vector<Integer> unrooted(static_cast<std::size_t>(n) + 1);
        for (int m = 1; m <= n; ++m) unrooted[static_cast<std::size_t>(m)] = cayley_unrooted_count(m);
        for (int k = 2; k <= n; ++k) {
            Integer sum = 0;
            for (int i = k - 1; i <= n - 1; ++i) {
                Integer term = binom[static_cast<std::size_t>(i)];
                term *= table.entry(i, k - 1);
                term *= unrooted[static_cast<std::size_t>(n - i)];
                term *= i;
                sum += term;
            }
            table.set_entry(n, k, std::move(sum));
        }
    }
    return table;
}

inline RecordTable forest_record_table_recurrence(int n_max) {
    RecordTable table(TableKind::forest, n_max);
    table.set_entry(0, 0, 1);
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Integer> binom = detail::binomial_row(n - 1);
        std::vector<Integer> unrooted(static_cast<std::size_t>(n) + 1);
        for (int m = 1; m <= n; ++m) unrooted[static_cast<std::size_t>(m)] = cayley_unrooted_count(m);
        for (int k = 1; k <= n; ++k) {
            Integer sum = 0;
            for (int i = k - 1; i <= n - 1; ++i) {
                Integer term = binom[static_cast<std::size_t>(i)];
                term *= table.entry(i, k - 1);
                term *= unrooted[static_cast<std::size_t>(n - i)];
                term *= (i + 1);
                sum += term;
            }
            table.set_entry(n, k, std::move(sum));
        }
    }
    return table;
}

inline RecordTable tree_record_table_formula(int n_max) {
    RecordTable table(TableKind::tree, n_max);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) table.set_entry(n, k, tree_record_number(n, k));
    return table;
}

inline RecordTable forest_record_table_formula(int n_max) {
    RecordTable table(TableKind::forest, n_max);
    table.set_entry(0, 0, 1);
    StirlingTable stirling(n_max + 1);
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k) table.set_entry(n, k, forest_record_number(n, k, stirling));
    return table;
}

// ---------------------------------------------------------------------------
// Brute force rows (exhaustive enumeration; hard-capped).

inline std::vector<Integer> brute_force_tree_row(int n, int cap = kBruteForceCap) {
    if (n < 0) throw std::invalid_argument("brute_force_tree_row: negative n");
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
    for_each_rooted_tree(
        n, [&](const RootedTree& t) { ++row[static_cast<std::size_t>(t.record_count())]; }, cap);
    return row;
}

inline std::vector<Integer> brute_force_forest_row(int n, int cap = kBruteForceCap) {
    if (n < 0) throw std::invalid_argument("brute_force_forest_row: negative n");
    std::vector<Integer> row(static_cast<std::size_t>(n) + 1, Integer(0));
    for_each_rooted_forest(
        n, [&](const RootedTree& f) { ++row[static_cast<std::size_t>(f.record_count())]; }, cap);
    return row;
}

inline RecordTable brute_force_table(TableKind kind, int n_max, int cap = kBruteForceCap) {
    if (n_max > cap) throw CapExceeded("brute_force_table: n_max exceeds brute-force cap");
    RecordTable table(kind, n_max);
    if (kind == TableKind::forest && n_max >= 0) table.set_entry(0, 0, 1);
    for (int n = 1; n <= n_max; ++n) {
        auto row = kind == TableKind::tree ? brute_force_tree_row(n, cap) : brute_force_forest_row(n, cap);
        for (int k = 0; k <= n; ++k) table.set_entry(n, k, std::move(row[static_cast<std::size_t>(k)]));
    }
    return table;
}

// ---------------------------------------------------------------------------
// Forest numbers out of tree numbers: the two triangles are linearly related,
//
//   F(n,k) = sum_{m>=k} (-1)^(m+k-1) / (m-1)! * c(m, m-k) * T(n+1, m),
//
// summing over m = k..n+1 (the m = k term vanishes for k >= 1 since
// c(k, 0) = 0). Exact rationals, integrality checked.
inline Integer forest_from_tree_numbers(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("forest_from_tree_numbers: negative n");
    if (n == 0) return k == 0 ? 1 : 0;
    if (k < 1 || k > n) return 0;
    StirlingTable stirling(static_cast<int>(n) + 1);
    Rational sum(0);
    for (std::int64_t m = k; m <= n + 1; ++m) {
        const Integer& c = stirling.value(static_cast<int>(m), static_cast<int>(m - k));
        if (c == 0) continue;
        Rational term(tree_record_number(n + 1, m));
        term *= Rational(c);
        term /= Rational(factorial(m - 1));
        if ((m + k - 1) % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return require_integer(sum, "forest_from_tree_numbers");
}

// ---------------------------------------------------------------------------
// Exports.

// CSV: header line "n,k,value", then one line per nonzero entry in row-major
// order (n ascending, k ascending).
inline void write_csv(const RecordTable& table, std::ostream& out) {
    out << "n,k,value\n";
    for (int n = 0; n <= table.n_max(); ++n)
        for (int k = 0; k <= n; ++k)
            if (table.entry(n, k) != 0)
                out << n << ',' << k << ',' << table.entry(n, k).str() << '\n';
}

// OEIS-style b-file: "index value" pairs, indices from 1, triangle read by
// rows with k = 1..n for n = 1..n_max (the forest anchor entry F(0,0) = 1 is
// not part of the triangle proper and is omitted).
inline void write_bfile(const RecordTable& table, std::ostream& out) {
    std::int64_t index = 1;
    for (int n = 1; n <= table.n_max(); ++n)
        for (int k = 1; k <= n; ++k)
            out << index++ << ' ' << table.entry(n, k).str() << '\n';
}

}  // namespace treerec
