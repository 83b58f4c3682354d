#pragma once

// Cross-validation suites: every counting result is computed by independent
// routes and confronted with hand-checked reference rows. Each check appends
// one line to a report; a suite passes only if every check passes.

#include "treerec/analysis.hpp"
#include "treerec/bigmath.hpp"
#include "treerec/composition.hpp"
#include "treerec/counting.hpp"
#include "treerec/decomposition.hpp"
#include "treerec/prufer.hpp"
#include "treerec/series.hpp"
#include "treerec/tree.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace treerec {

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> lines;

    void check(bool condition, const std::string& what) {
        lines.push_back(std::string(condition ? "ok   " : "FAIL ") + what);
        ok = ok && condition;
    }

    void note(const std::string& what) { lines.push_back("note " + what); }
};

namespace detail {

// Reference triangles, transcribed by hand and independently re-derived;
// the anchor that catches a systematic error shared by the code paths.
inline const std::vector<std::vector<std::int64_t>>& reference_tree_rows() {
    static const std::vector<std::vector<std::int64_t>> rows = {
        {1},
        {1, 1},
        {3, 4, 2},
        {16, 24, 18, 6},
        {125, 200, 180, 96, 24},
        {1296, 2160, 2160, 1440, 600, 120},
        {16807, 28812, 30870, 23520, 12600, 4320, 720},
        {262144, 458752, 516096, 430080, 268800, 120960, 35280, 5040},
    };
    return rows;
}

inline const std::vector<std::vector<std::int64_t>>& reference_forest_rows() {
    static const std::vector<std::vector<std::int64_t>> rows = {
        {1},
        {1, 2},
        {3, 7, 6},
        {16, 39, 46, 24},
        {125, 310, 415, 326, 120},
        {1296, 3240, 4635, 4360, 2556, 720},
        {16807, 42189, 62825, 65415, 47656, 22212, 5040},
        {262144, 659456, 1008448, 1120385, 927388, 551852, 212976, 40320},
    };
    return rows;
}

inline bool table_matches_reference(const RecordTable& table,
                                    const std::vector<std::vector<std::int64_t>>& reference,
                                    int n_limit) {
    for (int n = 1; n <= n_limit; ++n) {
        const auto& row = reference[static_cast<std::size_t>(n - 1)];
        for (int k = 1; k <= n; ++k)
            if (table.entry(n, k) != row[static_cast<std::size_t>(k - 1)]) return false;
    }
    return true;
}

}  // namespace detail

// Four independent routes to both triangles, plus the hand-checked rows.
inline bool verify_tables(int n_max, VerifyReport& report) {
    if (n_max < 1) throw std::invalid_argument("verify_tables: need n_max >= 1");
    int brute_n = std::min(n_max, kBruteForceCap);
    int series_n = std::min(n_max, kSeriesOrderCap);

    RecordTable tree_formula = tree_record_table_formula(n_max);
    RecordTable forest_formula = forest_record_table_formula(n_max);

    int ref_n = std::min(n_max, 8);
    report.check(detail::table_matches_reference(tree_formula, detail::reference_tree_rows(), ref_n),
                 "tree formula table reproduces the reference rows (n <= " + std::to_string(ref_n) + ")");
    report.check(
        detail::table_matches_reference(forest_formula, detail::reference_forest_rows(), ref_n),
        "forest formula table reproduces the reference rows (n <= " + std::to_string(ref_n) + ")");

    report.check(tree_formula == tree_record_table_recurrence(n_max),
                 "tree table: closed form == recurrence (n <= " + std::to_string(n_max) + ")");
    report.check(forest_formula == forest_record_table_recurrence(n_max),
                 "forest table: alternating formula == recurrence (n <= " + std::to_string(n_max) + ")");

    {
        RecordTable tree_series = record_table_from_series(TableKind::tree, series_n);
        RecordTable forest_series = record_table_from_series(TableKind::forest, series_n);
        bool tree_ok = true, forest_ok = true;
        for (int n = 0; n <= series_n; ++n)
            for (int k = 0; k <= n; ++k) {
                tree_ok = tree_ok && tree_series.entry(n, k) == tree_formula.entry(n, k);
                forest_ok = forest_ok && forest_series.entry(n, k) == forest_formula.entry(n, k);
            }
        report.check(tree_ok, "tree table: series coefficients == closed form (n <= " +
                                  std::to_string(series_n) + ")");
        report.check(forest_ok, "forest table: series coefficients == alternating formula (n <= " +
                                    std::to_string(series_n) + ")");
    }

    {
        RecordTable tree_brute = brute_force_table(TableKind::tree, brute_n);
        RecordTable forest_brute = brute_force_table(TableKind::forest, brute_n);
        bool tree_ok = true, forest_ok = true;
        for (int n = 0; n <= brute_n; ++n)
            for (int k = 0; k <= n; ++k) {
                tree_ok = tree_ok && tree_brute.entry(n, k) == tree_formula.entry(n, k);
                forest_ok = forest_ok && forest_brute.entry(n, k) == forest_formula.entry(n, k);
            }
        report.check(tree_ok,
                     "tree table: exhaustive enumeration == closed form (n <= " + std::to_string(brute_n) + ")");
        report.check(forest_ok, "forest table: exhaustive enumeration == alternating formula (n <= " +
                                    std::to_string(brute_n) + ")");
    }
    return report.ok;
}

// Decompose every forest, rebuild it, and check the induced structures.
inline bool verify_bijection(int n_max, VerifyReport& report) {
    int limit = std::min(n_max, 6);
    bool all_ok = true;
    Integer seen_total = 0;
    for (int n = 1; n <= limit; ++n) {
        Integer count = 0;
        bool round_trip = true, structure = true;
        for_each_rooted_forest(n, [&](const RootedTree& f) {
            ++count;
            RecordDecomposition d = decompose(f);
            round_trip = round_trip && reconstruct(d) == f;
            RestrictedFlag flag = restricted_flag_of(d);
            flag.validate();
            structure = structure && d.component_count() == f.record_count() &&
                        d.type().total() == n && flag.type() == d.type();
        });
        bool n_ok = round_trip && structure && count == rooted_forest_stream_size(n);
        all_ok = all_ok && n_ok;
        seen_total += count;
    }
    report.check(all_ok, "reconstruct(decompose(f)) == f with consistent type/flag for every forest (n <= " +
                             std::to_string(limit) + ", " + seen_total.str() + " forests)");
    report.note("decompose is injective and the stream sizes match, so the correspondence is a bijection");
    return report.ok;
}

// Product structure of the per-type counts, and their sums against the tables.
inline bool verify_identities(int n_max, VerifyReport& report) {
    if (n_max < 1) throw std::invalid_argument("verify_identities: need n_max >= 1");
    int type_n = std::min(n_max, kBruteForceCap);

    {
        bool forests_factor = true, trees_factor = true, sums = true;
        for (int n = 1; n <= type_n; ++n) {
            std::vector<Integer> forest_sums(static_cast<std::size_t>(n) + 1, Integer(0));
            std::vector<Integer> tree_sums(static_cast<std::size_t>(n) + 1, Integer(0));
            for_each_composition(n, [&](const Composition& t) {
                Integer flags = count_restricted_flags(t);
                Integer fillings = count_bonsai_fillings(t);
                Integer forests = count_forests_of_type(t);
                Integer trees = count_trees_of_type(t);
                forests_factor = forests_factor && forests == flags * fillings * count_attachments_forest(t);
                trees_factor = trees_factor && trees == flags * fillings * count_attachments_tree(t);
                forest_sums[static_cast<std::size_t>(t.length())] += forests;
                tree_sums[static_cast<std::size_t>(t.length())] += trees;
            });
            for (int k = 1; k <= n; ++k) {
                sums = sums && forest_sums[static_cast<std::size_t>(k)] == forest_record_number(n, k);
                sums = sums && tree_sums[static_cast<std::size_t>(k)] == tree_record_number(n, k);
            }
        }
        report.check(forests_factor,
                     "per-type forest count == flags * fillings * attachments (n <= " + std::to_string(type_n) + ")");
        report.check(trees_factor,
                     "per-type tree count == flags * fillings * planted attachments (n <= " + std::to_string(type_n) + ")");
        report.check(sums, "type counts sum to the table entries (n <= " + std::to_string(type_n) + ")");
    }

    {
        int hist_n = std::min(n_max, 6);
        bool hist_ok = true;
        for (int n = 1; n <= hist_n; ++n) {
            std::map<std::vector<int>, Integer> histogram;
            for_each_rooted_forest(n, [&](const RootedTree& f) { ++histogram[decompose(f).type().parts()]; });
            for_each_composition(n, [&](const Composition& t) {
                auto it = histogram.find(t.parts());
                Integer observed = it == histogram.end() ? Integer(0) : it->second;
                hist_ok = hist_ok && observed == count_forests_of_type(t);
                if (it != histogram.end()) histogram.erase(it);
            });
            hist_ok = hist_ok && histogram.empty();
        }
        report.check(hist_ok, "enumerated type histogram == per-type counts (n <= " + std::to_string(hist_n) + ")");
    }

    report.check(count_restricted_flags(Composition({1, 2})) == 2 &&
                     count_restricted_flags(Composition({2, 1})) == 1,
                 "restricted flags distinguish (1,2) from (2,1)");

    {
        bool rows_ok = true, diag_ok = true;
        RecordTable tree_table = tree_record_table_formula(n_max);
        RecordTable forest_table = forest_record_table_formula(n_max);
        for (int n = 1; n <= n_max; ++n) {
            rows_ok = rows_ok && tree_table.row_sum(n) == cayley_rooted_count(n);
            rows_ok = rows_ok && forest_table.row_sum(n) == int_pow(n + 1, n - 1);
            diag_ok = diag_ok && tree_table.entry(n, n) == factorial(n - 1) &&
                      forest_table.entry(n, n) == factorial(n) &&
                      tree_table.entry(n, 1) == cayley_unrooted_count(n) &&
                      forest_table.entry(n, 1) == cayley_unrooted_count(n);
        }
        report.check(rows_ok, "row sums: trees n^(n-1), forests (n+1)^(n-1) (n <= " + std::to_string(n_max) + ")");
        report.check(diag_ok, "edges of the triangles: k=1 gives n^(n-2), k=n gives (n-1)! / n!");
    }

    {
        int m_limit = std::min(n_max, 50);
        StirlingTable stirling(m_limit);
        bool stirling_ok = true;
        for (int m = 1; m <= m_limit; ++m) {
            Integer sum = 0;
            for (int j = 0; j <= m; ++j) sum += stirling.value(m, j);
            stirling_ok = stirling_ok && sum == factorial(m) && stirling.value(m, 1) == factorial(m - 1);
        }
        report.check(stirling_ok, "Stirling rows sum to m! and c(m,1) = (m-1)! (m <= " + std::to_string(m_limit) + ")");
    }

    {
        int link_n = std::min(n_max, 30);
        bool link_ok = true;
        for (int n = 0; n <= link_n; ++n)
            for (int k = 0; k <= n; ++k)
                link_ok = link_ok && forest_from_tree_numbers(n, k) == forest_record_number(n, k);
        report.check(link_ok, "forest numbers recovered from the tree triangle one size up (n <= " +
                                  std::to_string(link_n) + ")");
    }

    {
        int cf_n = std::min(n_max, 40);
        bool cf_ok = true;
        for (int n = 1; n <= cf_n; ++n) {
            Integer sum = 0;
            for (int k = 1; k <= n; ++k) sum += cayley_forest_count(n, k);
            cf_ok = cf_ok && sum == int_pow(n + 1, n - 1);
        }
        report.check(cf_ok, "component-count forest numbers sum to (n+1)^(n-1) (n <= " + std::to_string(cf_n) + ")");
    }
    return report.ok;
}

// Generating-function identities, all exact at the stored order.
inline bool verify_series(int order, VerifyReport& report) {
    if (order < 1) throw std::invalid_argument("verify_series: need order >= 1");
    detail::check_series_order(order);

    report.check(tree_functional_equation_holds(order),
                 "T = z exp(T) (order " + std::to_string(order) + ")");
    report.check(unrooted_integral_identity_holds(order),
                 "integral of T/s == T - T^2/2 with coefficients n^(n-2)");

    BivariateSeries tree_series = tree_record_egf(order);
    BivariateSeries forest_series = exp_series(tree_series);

    report.check(tree_series == tree_record_egf_integral(order),
                 "tree-record series: logarithmic construction == integral construction");

    {
        bool cols_ok = true;
        int k_limit = std::min(order, 6);
        for (int k = 1; k <= k_limit; ++k) {
            std::vector<Rational> column = tree_record_column(order, k);
            for (int n = 0; n <= order; ++n)
                cols_ok = cols_ok && column[static_cast<std::size_t>(n)] == tree_series.coeff(n, k);
        }
        report.check(cols_ok, "per-k columns T^k/k - T^(k+1)/(k+1) match the bivariate series (k <= " +
                                  std::to_string(k_limit) + ")");
    }

    report.check(forest_series == forest_record_egf_product(order),
                 "forest-record series: exp of planted series == product form");
    report.check(record_pde_holds(forest_series, cayley_tree_egf(order)),
                 "forest-record series satisfies the cleared record equation z R_z (1 - tT) = tT R");

    {
        // Sensitivity: a single perturbed coefficient must be caught.
        BivariateSeries perturbed = forest_series;
        perturbed.set_coeff(std::min(3, order), 1, perturbed.coeff(std::min(3, order), 1) + 1);
        report.check(!record_pde_holds(perturbed, cayley_tree_egf(order)),
                     "record equation check rejects a perturbed series");
    }

    {
        bool tables_ok = true;
        RecordTable tree_table = tree_record_table_formula(order);
        RecordTable forest_table = forest_record_table_formula(order);
        for (int n = 0; n <= order; ++n)
            for (int k = 0; k <= n; ++k) {
                tables_ok = tables_ok && tree_series.coeff(n, k) == Rational(tree_table.entry(n, k));
                tables_ok = tables_ok && forest_series.coeff(n, k) == Rational(forest_table.entry(n, k));
            }
        report.check(tables_ok, "series coefficients equal both closed-form tables (n <= " +
                                    std::to_string(order) + ")");
    }

    {
        bool t1_ok = true;
        std::vector<Rational> tree_t1 = eval_t1(tree_series);
        std::vector<Rational> forest_t1 = eval_t1(forest_series);
        for (int n = 1; n <= order; ++n) {
            t1_ok = t1_ok && tree_t1[static_cast<std::size_t>(n)] == Rational(cayley_rooted_count(n));
            t1_ok = t1_ok && forest_t1[static_cast<std::size_t>(n)] == Rational(int_pow(n + 1, n - 1));
        }
        report.check(t1_ok, "t = 1 slices: trees give n^(n-1), forests give (n+1)^(n-1)");
    }

    {
        bool fixed_ok = true;
        int n_limit = std::min(50, std::max(order, 8));
        for (int n = 1; n <= n_limit; ++n) {
            Polynomial poly = record_polynomial_fixed_n(n);
            Rational kfact(1);
            for (int k = 1; k <= n; ++k) {
                kfact *= k;
                fixed_ok = fixed_ok &&
                           poly[static_cast<std::size_t>(k)] * kfact == Rational(tree_record_number(n, k));
            }
        }
        report.check(fixed_ok, "fixed-n polynomial (t/n)(n+t)^(n-1): k! times t^k coefficient == tree count (n <= " +
                                   std::to_string(n_limit) + ")");
    }
    return report.ok;
}

inline bool verify_all(int n_max, int order, VerifyReport& report) {
    verify_tables(n_max, report);
    verify_bijection(n_max, report);
    verify_identities(n_max, report);
    verify_series(order, report);
    return report.ok;
}

}  // namespace treerec
