#pragma once

// Command-line front end. run_cli is a pure function of its argument vector
// and output streams, so the entire surface is testable in-process; the
// binary in tools/ is a two-line wrapper around it.
//
// Verbs:
//   table        print a record-count table (csv, bfile, or json)
//   decompose    record decomposition of a 0-rooted tree (JSON in/out)
//   reconstruct  rebuild the tree from a decomposition (JSON in/out)
//   series       truncated generating series coefficients (json)
//   verify       run cross-validation suites
//   peaks        peak positions of table rows, optionally with an OLS fit
//   srec         sum-of-record-depths polynomial rows (exhaustive)
//   pmf          Borel-Tanner probabilities and truncated normalization
//
// Exit codes: 0 success; 1 a verification suite reported a failure; 2 usage
// or input errors (including malformed files and internal consistency
// failures); 3 a hard cap refused the computation (brute force n > 8, series
// order > 60, table n_max > 400).
//
// All output is byte-deterministic: ordered JSON objects, integer values as
// decimal strings where they can exceed double precision, no locale use, and
// single-threaded evaluation.

#include "treerec/analysis.hpp"
#include "treerec/bigmath.hpp"
#include "treerec/counting.hpp"
#include "treerec/json_io.hpp"
#include "treerec/series.hpp"
#include "treerec/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace treerec {

namespace detail {

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    Json j = Json::parse(in, nullptr, true, false);  // exceptions on, comments off
    return j;
}

inline RecordTable build_table(TableKind kind, int n_max, const std::string& method) {
    if (method == "formula")
        return kind == TableKind::tree ? tree_record_table_formula(n_max)
                                       : forest_record_table_formula(n_max);
    if (method == "recurrence")
        return kind == TableKind::tree ? tree_record_table_recurrence(n_max)
                                       : forest_record_table_recurrence(n_max);
    if (method == "series") return record_table_from_series(kind, n_max);
    if (method == "brute") return brute_force_table(kind, n_max);
    throw std::invalid_argument("unknown table method: " + method);
}

inline void write_table_json(const RecordTable& table, std::ostream& out) {
    Json j;
    j["kind"] = table_kind_name(table.kind());
    j["n_max"] = table.n_max();
    Json rows = Json::array();
    for (int n = 0; n <= table.n_max(); ++n) {
        Json row = Json::array();
        for (int k = 0; k <= n; ++k) row.push_back(table.entry(n, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    out << j.dump(2) << '\n';
}

}  // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"record statistics of rooted labelled trees and rooted forests"};
    app.name("treerec");
    app.require_subcommand(1);

    // --- table ---------------------------------------------------------
    std::string table_kind = "tree";
    int table_n_max = 8;
    std::string table_method = "formula";
    std::string table_format = "csv";
    auto* table_cmd = app.add_subcommand("table", "print a record-count table");
    table_cmd->add_option("--kind", table_kind, "tree or forest")
        ->check(CLI::IsMember({"tree", "forest"}));
    table_cmd->add_option("--n-max", table_n_max, "largest row (cap 400; brute 8, series 60)");
    table_cmd->add_option("--method", table_method, "formula, recurrence, series, or brute")
        ->check(CLI::IsMember({"formula", "recurrence", "series", "brute"}));
    table_cmd->add_option("--format", table_format, "csv, bfile, or json")
        ->check(CLI::IsMember({"csv", "bfile", "json"}));

    // --- decompose / reconstruct ----------------------------------------
    std::string decompose_in;
    auto* decompose_cmd =
        app.add_subcommand("decompose", "record decomposition of a 0-rooted tree (JSON)");
    decompose_cmd->add_option("--in", decompose_in, "tree JSON file")->required();

    std::string reconstruct_in;
    auto* reconstruct_cmd =
        app.add_subcommand("reconstruct", "rebuild the 0-rooted tree from a decomposition (JSON)");
    reconstruct_cmd->add_option("--in", reconstruct_in, "decomposition JSON file")->required();

    // --- series ----------------------------------------------------------
    int series_order = 8;
    std::string series_which = "tree";
    auto* series_cmd = app.add_subcommand("series", "truncated generating series (JSON)");
    series_cmd->add_option("--order", series_order, "truncation order in z (cap 60)");
    series_cmd->add_option("--which", series_which, "T, tree, or forest")
        ->check(CLI::IsMember({"T", "tree", "forest"}));

    // --- verify ----------------------------------------------------------
    std::string verify_suite = "all";
    int verify_n_max = 8;
    int verify_order = 30;
    auto* verify_cmd = app.add_subcommand("verify", "run cross-validation suites");
    verify_cmd->add_option("--suite", verify_suite, "tables, bijection, identities, series, or all")
        ->check(CLI::IsMember({"tables", "bijection", "identities", "series", "all"}));
    verify_cmd->add_option("--n-max", verify_n_max,
                           "table/identity scale (enumeration legs clamp to 8 / 6)");
    verify_cmd->add_option("--order", verify_order, "series suite truncation order (cap 60)");

    // --- peaks -----------------------------------------------------------
    std::string peaks_kind = "forest";
    int peaks_n_max = 200;
    bool peaks_fit = false;
    int peaks_fit_min = 50;
    int peaks_fit_max = 0;
    auto* peaks_cmd = app.add_subcommand("peaks", "row peak positions, optionally with an OLS fit");
    peaks_cmd->add_option("--kind", peaks_kind, "tree or forest")
        ->check(CLI::IsMember({"tree", "forest"}));
    peaks_cmd->add_option("--n-max", peaks_n_max, "largest n (forest tables cap at 400)");
    peaks_cmd->add_flag("--fit", peaks_fit, "append an OLS fit of k*(n)^2 against n");
    peaks_cmd->add_option("--fit-min", peaks_fit_min, "first n of the fit window (default 50)");
    peaks_cmd->add_option("--fit-max", peaks_fit_max, "last n of the fit window (default n-max)");

    // --- srec ------------------------------------------------------------
    int srec_n_max = 6;
    auto* srec_cmd =
        app.add_subcommand("srec", "sum-of-record-depths polynomial rows (exhaustive, cap 8)");
    srec_cmd->add_option("--n-max", srec_n_max, "largest n (cap 8)");

    // --- pmf -------------------------------------------------------------
    int pmf_k = 1;
    double pmf_rho = 0.5;
    std::int64_t pmf_n_max = 400;
    auto* pmf_cmd = app.add_subcommand("pmf", "Borel-Tanner probabilities and truncated sum (JSON)");
    pmf_cmd->add_option("--k", pmf_k, "initial component count (k >= 1)");
    pmf_cmd->add_option("--rho", pmf_rho, "rate in (0, 1]")->required();
    pmf_cmd->add_option("--n-max", pmf_n_max, "truncation point of the sum");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table_cmd) {
            TableKind kind = table_kind == "tree" ? TableKind::tree : TableKind::forest;
            RecordTable table = detail::build_table(kind, table_n_max, table_method);
            if (table_format == "csv")
                write_csv(table, out);
            else if (table_format == "bfile")
                write_bfile(table, out);
            else
                detail::write_table_json(table, out);
            return 0;
        }

        if (*decompose_cmd) {
            RootedTree tree = tree_from_json(detail::read_json_file(decompose_in));
            tree.validate();
            out << decomposition_to_json(decompose(tree)).dump(2) << '\n';
            return 0;
        }

        if (*reconstruct_cmd) {
            RecordDecomposition d = decomposition_from_json(detail::read_json_file(reconstruct_in));
            out << tree_to_json(reconstruct(d)).dump(2) << '\n';
            return 0;
        }

        if (*series_cmd) {
            BivariateSeries s = series_which == "T"      ? cayley_tree_egf(series_order)
                                : series_which == "tree" ? tree_record_egf(series_order)
                                                         : forest_record_egf(series_order);
            Json j;
            j["which"] = series_which;
            j["order"] = series_order;
            j["scaling"] = "entry [n][k] = n! * [z^n t^k]";
            Json rows = Json::array();
            for (int n = 0; n <= series_order; ++n) {
                Json row = Json::array();
                for (int k = 0; k <= n; ++k) row.push_back(s.coeff(n, k).str());
                rows.push_back(std::move(row));
            }
            j["rows"] = std::move(rows);
            out << j.dump(2) << '\n';
            return 0;
        }

        if (*verify_cmd) {
            VerifyReport report;
            if (verify_suite == "tables")
                verify_tables(verify_n_max, report);
            else if (verify_suite == "bijection")
                verify_bijection(verify_n_max, report);
            else if (verify_suite == "identities")
                verify_identities(verify_n_max, report);
            else if (verify_suite == "series")
                verify_series(verify_order, report);
            else
                verify_all(verify_n_max, verify_order, report);
            for (const auto& line : report.lines) out << line << '\n';
            out << (report.ok ? "PASS" : "FAIL") << " suite " << verify_suite << '\n';
            return report.ok ? 0 : 1;
        }

        if (*peaks_cmd) {
            if (peaks_kind == "tree" && peaks_fit)
                throw std::invalid_argument("peaks: --fit applies to the forest kind");
            out << "n,k_star,k_star_squared\n";
            if (peaks_kind == "tree") {
                for (int n = 1; n <= peaks_n_max; ++n) {
                    std::int64_t k = tree_peak_index(n);
                    out << n << ',' << k << ',' << k * k << '\n';
                }
                return 0;
            }
            RecordTable table = forest_record_table_recurrence(peaks_n_max);
            for (int n = 1; n <= peaks_n_max; ++n) {
                std::int64_t k = forest_peak_index(table, n);
                out << n << ',' << k << ',' << k * k << '\n';
            }
            if (peaks_fit) {
                int hi = peaks_fit_max == 0 ? peaks_n_max : peaks_fit_max;
                PeakFitResult fit = peak_fit(table, peaks_fit_min, hi);
                Json j;
                j["slope"] = fit.slope;
                j["intercept"] = fit.intercept;
                j["n_min"] = fit.n_min;
                j["n_max"] = fit.n_max;
                out << j.dump() << '\n';
            }
            return 0;
        }

        if (*srec_cmd) {
            out << "n,s,count\n";
            std::vector<SrecPolynomial> polys;
            for (int n = 1; n <= srec_n_max; ++n) {
                polys.push_back(srec_polynomial(n));
                const auto& p = polys.back();
                for (std::size_t s = 0; s < p.coeffs.size(); ++s)
                    if (p.coeffs[s] != 0) out << n << ',' << s << ',' << p.coeffs[s].str() << '\n';
            }
            if (srec_n_max >= 2) {
                for (const auto& row : srec_second_column_report(2, srec_n_max))
                    out << "# n=" << row.n << " q1=" << row.q1_coeff.str()
                        << " second_nonzero=" << row.second_nonzero.str()
                        << " two_component_forests=" << row.two_component.str()
                        << " match=" << (row.match ? "yes" : "no") << '\n';
            }
            return 0;
        }

        if (*pmf_cmd) {
            if (pmf_n_max < pmf_k) throw std::invalid_argument("pmf: need n-max >= k");
            Json j;
            j["k"] = pmf_k;
            j["rho"] = pmf_rho;
            j["n_max"] = pmf_n_max;
            Json values = Json::array();
            double sum = 0.0;
            for (std::int64_t n = pmf_k; n <= pmf_n_max; ++n) {
                double p = borel_tanner_pmf(pmf_k, pmf_rho, n);
                sum += p;
                values.push_back(p);
            }
            j["sum"] = sum;
            j["deficit"] = 1.0 - sum;
            j["values"] = std::move(values);
            out << j.dump(2) << '\n';
            return 0;
        }
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    err << "error: no subcommand executed\n";
    return 2;
}

}  // namespace treerec
