#pragma once

// Truncated bivariate exponential generating functions over exact rationals,
// and the generating-function constructions for record counts.
//
// A series F(z,t) truncated at z-order N is stored as rows n = 0..N of
// polynomials in t, with the *n!-scaled* convention
//
//     stored(n, k)  =  n! * [z^n t^k] F(z, t),
//
// so that counting series carry their counts directly: the tree-record series
// has stored(n, k) = T(n,k) and the forest-record series stored(n, k) =
// F(n,k). Under this scaling the ring operations read
//
//     (f*g)_n = sum_i binom(n,i) f_i g_{n-i}        (rows multiply as t-polys)
//     (z f)_n = n f_{n-1}        (z d/dz f)_n = n f_n
//     (integral of f/z)_n = f_n / n                 (needs f_0 = 0)
//
// and exp/log go through their differential-equation recurrences, which stay
// exact and need no divisions beyond the scheme above.
//
// Everything here is exact; tolerances never appear. Truncation order is
// hard-capped (kSeriesOrderCap) in the named constructions because cost grows
// like order^4 rational multiplications.

#include "treerec/bigmath.hpp"
#include "treerec/counting.hpp"

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace treerec {

inline constexpr int kSeriesOrderCap = 60;

using Polynomial = std::vector<Rational>;  // coefficients in t, index = power

namespace detail {

inline void poly_add_scaled(Polynomial& dst, const Polynomial& src, const Rational& factor) {
    if (src.size() > dst.size()) dst.resize(src.size(), Rational(0));
    for (std::size_t k = 0; k < src.size(); ++k) dst[k] += src[k] * factor;
}

inline Polynomial poly_mul(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) return {};
    Polynomial out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

inline bool poly_is_zero(const Polynomial& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

}  // namespace detail

class BivariateSeries {
  public:
    explicit BivariateSeries(int order) : rows_(static_cast<std::size_t>(check_order(order)) + 1) {}

    static BivariateSeries constant(int order, const Rational& c) {
        BivariateSeries s(order);
        if (c != 0) s.set_coeff(0, 0, c);
        return s;
    }

    int order() const { return static_cast<int>(rows_.size()) - 1; }

    // stored(n,k) = n! [z^n t^k]; zero outside the stored (ragged) width.
    const Rational& coeff(int n, int k) const {
        static const Rational zero = 0;
        if (n < 0 || n > order() || k < 0) return zero;
        const auto& row = rows_[static_cast<std::size_t>(n)];
        if (static_cast<std::size_t>(k) >= row.size()) return zero;
        return row[static_cast<std::size_t>(k)];
    }

    void set_coeff(int n, int k, Rational v) {
        if (n < 0 || n > order() || k < 0) throw std::out_of_range("BivariateSeries::set_coeff");
        auto& row = rows_[static_cast<std::size_t>(n)];
        if (static_cast<std::size_t>(k) >= row.size()) row.resize(static_cast<std::size_t>(k) + 1, Rational(0));
        row[static_cast<std::size_t>(k)] = std::move(v);
    }

    const Polynomial& row(int n) const {
        if (n < 0 || n > order()) throw std::out_of_range("BivariateSeries::row");
        return rows_[static_cast<std::size_t>(n)];
    }

    void set_row(int n, Polynomial p) {
        if (n < 0 || n > order()) throw std::out_of_range("BivariateSeries::set_row");
        rows_[static_cast<std::size_t>(n)] = std::move(p);
    }

    // Value equality up to zero-padding; series of different order are never
    // considered equal.
    bool operator==(const BivariateSeries& other) const {
        if (order() != other.order()) return false;
        for (int n = 0; n <= order(); ++n) {
            std::size_t width =
                std::max(rows_[static_cast<std::size_t>(n)].size(), other.rows_[static_cast<std::size_t>(n)].size());
            for (std::size_t k = 0; k < width; ++k)
                if (coeff(n, static_cast<int>(k)) != other.coeff(n, static_cast<int>(k))) return false;
        }
        return true;
    }

  private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("BivariateSeries: negative order");
        return order;
    }

    std::vector<Polynomial> rows_;
};

// ---------------------------------------------------------------------------
// Ring operations.

inline BivariateSeries add(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series add: order mismatch");
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Polynomial row = a.row(n);
        detail::poly_add_scaled(row, b.row(n), Rational(1));
        out.set_row(n, std::move(row));
    }
    return out;
}

inline BivariateSeries sub(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series sub: order mismatch");
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Polynomial row = a.row(n);
        detail::poly_add_scaled(row, b.row(n), Rational(-1));
        out.set_row(n, std::move(row));
    }
    return out;
}

inline BivariateSeries scale(const BivariateSeries& a, const Rational& factor) {
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Polynomial row = a.row(n);
        for (auto& c : row) c *= factor;
        out.set_row(n, std::move(row));
    }
    return out;
}

inline BivariateSeries mul(const BivariateSeries& a, const BivariateSeries& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series mul: order mismatch");
    int order = a.order();
    BivariateSeries out(order);
    for (int n = 0; n <= order; ++n) {
        Polynomial row;
        for (int i = 0; i <= n; ++i) {
            if (a.row(i).empty() || b.row(n - i).empty()) continue;
            Polynomial term = detail::poly_mul(a.row(i), b.row(n - i));
            detail::poly_add_scaled(row, term, Rational(binomial(n, i)));
        }
        out.set_row(n, std::move(row));
    }
    return out;
}

// Multiply by t: shifts every t-power up by one.
inline BivariateSeries mul_t(const BivariateSeries& a) {
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        const Polynomial& row = a.row(n);
        if (row.empty()) continue;
        Polynomial shifted(row.size() + 1, Rational(0));
        for (std::size_t k = 0; k < row.size(); ++k) shifted[k + 1] = row[k];
        out.set_row(n, std::move(shifted));
    }
    return out;
}

// Divide by t: requires every row's constant-in-t coefficient to vanish.
inline BivariateSeries div_by_t(const BivariateSeries& a) {
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        const Polynomial& row = a.row(n);
        if (row.empty()) continue;
        if (row[0] != 0) throw std::invalid_argument("div_by_t: series is not divisible by t");
        Polynomial shifted(row.begin() + 1, row.end());
        out.set_row(n, std::move(shifted));
    }
    return out;
}

// Multiply by z: (z f)_n = n f_{n-1}; the old top coefficient falls off the
// truncation.
inline BivariateSeries mul_z(const BivariateSeries& a) {
    BivariateSeries out(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        Polynomial row = a.row(n - 1);
        for (auto& c : row) c *= n;
        out.set_row(n, std::move(row));
    }
    return out;
}

// Euler operator z d/dz: multiplies row n by n.
inline BivariateSeries z_times_ddz(const BivariateSeries& a) {
    BivariateSeries out(a.order());
    for (int n = 0; n <= a.order(); ++n) {
        Polynomial row = a.row(n);
        for (auto& c : row) c *= n;
        out.set_row(n, std::move(row));
    }
    return out;
}

// integral of f(s,t)/s ds from 0 to z: row n picks up 1/n; needs f_0 = 0.
inline BivariateSeries integrate_div_z(const BivariateSeries& a) {
    if (!detail::poly_is_zero(a.row(0)))
        throw std::invalid_argument("integrate_div_z: constant z-term must vanish");
    BivariateSeries out(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        Polynomial row = a.row(n);
        for (auto& c : row) c /= n;
        out.set_row(n, std::move(row));
    }
    return out;
}

inline BivariateSeries pow(const BivariateSeries& a, unsigned exponent) {
    BivariateSeries result = BivariateSeries::constant(a.order(), 1);
    BivariateSeries base = a;
    while (exponent != 0) {
        if (exponent & 1u) result = mul(result, base);
        exponent >>= 1u;
        if (exponent != 0) base = mul(base, base);
    }
    return result;
}

// exp(a) for a with vanishing z^0 row, via E' = a' E:
//     E_{n+1} = sum_{i=0}^{n} binom(n,i) a_{i+1} E_{n-i},   E_0 = 1.
inline BivariateSeries exp_series(const BivariateSeries& a) {
    if (!detail::poly_is_zero(a.row(0)))
        throw std::invalid_argument("exp_series: constant z-term must vanish");
    int order = a.order();
    BivariateSeries e(order);
    e.set_coeff(0, 0, 1);
    for (int n = 0; n < order; ++n) {
        Polynomial row;
        for (int i = 0; i <= n; ++i) {
            if (a.row(i + 1).empty() || e.row(n - i).empty()) continue;
            Polynomial term = detail::poly_mul(a.row(i + 1), e.row(n - i));
            detail::poly_add_scaled(row, term, Rational(binomial(n, i)));
        }
        e.set_row(n + 1, std::move(row));
    }
    return e;
}

// log(1 + a) for a with vanishing z^0 row, via L'(1+a) = a':
//     L_{n+1} = a_{n+1} - sum_{i=1}^{n} binom(n,i) a_i L_{n+1-i},   L_0 = 0.
inline BivariateSeries log1p_series(const BivariateSeries& a) {
    if (!detail::poly_is_zero(a.row(0)))
        throw std::invalid_argument("log1p_series: constant z-term must vanish");
    int order = a.order();
    BivariateSeries l(order);
    for (int n = 0; n < order; ++n) {
        Polynomial row = a.row(n + 1);
        for (int i = 1; i <= n; ++i) {
            if (a.row(i).empty() || l.row(n + 1 - i).empty()) continue;
            Polynomial term = detail::poly_mul(a.row(i), l.row(n + 1 - i));
            detail::poly_add_scaled(row, term, Rational(-binomial(n, i)));
        }
        l.set_row(n + 1, std::move(row));
    }
    return l;
}

// Substitute t = 1: returns the univariate n!-scaled coefficients.
inline std::vector<Rational> eval_t1(const BivariateSeries& a) {
    std::vector<Rational> out(static_cast<std::size_t>(a.order()) + 1, Rational(0));
    for (int n = 0; n <= a.order(); ++n)
        for (const auto& c : a.row(n)) out[static_cast<std::size_t>(n)] += c;
    return out;
}

// ---------------------------------------------------------------------------
// Named constructions.

namespace detail {
inline int check_series_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    if (order > kSeriesOrderCap) throw CapExceeded("series order exceeds cap");
    return order;
}
}  // namespace detail

// The rooted-tree EGF T(z) = sum_n n^(n-1) z^n / n!, i.e. stored(n,0) = n^(n-1).
inline BivariateSeries cayley_tree_egf(int order) {
    detail::check_series_order(order);
    BivariateSeries t(order);
    for (int n = 1; n <= order; ++n) t.set_coeff(n, 0, Rational(cayley_rooted_count(n)));
    return t;
}

// T satisfies T = z exp(T); exact at every stored order.
inline bool tree_functional_equation_holds(int order) {
    BivariateSeries t = cayley_tree_egf(order);
    return t == mul_z(exp_series(t));
}

// The unrooted-tree EGF equals the integral of T/s: both sides come out to
// T - T^2/2 (stored(n,0) = n^(n-2)).
inline bool unrooted_integral_identity_holds(int order) {
    BivariateSeries t = cayley_tree_egf(order);
    BivariateSeries lhs = integrate_div_z(t);
    BivariateSeries rhs = sub(t, scale(mul(t, t), Rational(1, 2)));
    for (int n = 1; n <= order; ++n)
        if (lhs.coeff(n, 0) != Rational(cayley_unrooted_count(n))) return false;
    return lhs == rhs;
}

// Tree-record EGF R(z,t) with stored(n,k) = T(n,k), built from the closed
// form R = T + (1/t - 1) * M where M = log(1 - t T) (every coefficient of M
// is divisible by t, so the 1/t is exact):
inline BivariateSeries tree_record_egf(int order) {
    detail::check_series_order(order);
    BivariateSeries t = cayley_tree_egf(order);
    BivariateSeries m = log1p_series(scale(mul_t(t), Rational(-1)));  // log(1 - tT)
    return sub(add(t, div_by_t(m)), m);
}

// Same series by the integral route: R = integral of (1/s) tT/(1-tT) ds,
// with the geometric part summed as tT + (tT)^2 + ... (self-truncating).
inline BivariateSeries tree_record_egf_integral(int order) {
    detail::check_series_order(order);
    BivariateSeries tt = mul_t(cayley_tree_egf(order));
    BivariateSeries geo = tt;
    BivariateSeries power = tt;
    for (int j = 2; j <= order; ++j) {
        power = mul(power, tt);
        geo = add(geo, power);
    }
    return integrate_div_z(geo);
}

// The t^k column of the tree-record EGF in closed form: T^k/k - T^(k+1)/(k+1),
// returned as univariate n!-scaled coefficients.
inline std::vector<Rational> tree_record_column(int order, int k) {
    detail::check_series_order(order);
    if (k < 1) throw std::invalid_argument("tree_record_column: need k >= 1");
    BivariateSeries t = cayley_tree_egf(order);
    BivariateSeries tk = pow(t, static_cast<unsigned>(k));
    BivariateSeries col = sub(scale(tk, Rational(1, k)), scale(mul(tk, t), Rational(1, k + 1)));
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int n = 0; n <= order; ++n) out[static_cast<std::size_t>(n)] = col.coeff(n, 0);
    return out;
}

// Forest-record EGF: the record decomposition makes it exp of the planted
// series, stored(n,k) = F(n,k).
inline BivariateSeries forest_record_egf(int order) {
    return exp_series(tree_record_egf(order));
}

// Same series as the product exp(T) * exp((t-1) L) with
// L = sum_{j>=1} t^(j-1) T^j / j.
inline BivariateSeries forest_record_egf_product(int order) {
    detail::check_series_order(order);
    BivariateSeries t = cayley_tree_egf(order);
    BivariateSeries l(order);
    BivariateSeries power = t;
    for (int j = 1; j <= order; ++j) {
        if (j > 1) power = mul(power, t);
        // add t^(j-1) * power / j  row by row
        for (int n = 0; n <= order; ++n) {
            const Rational& c = power.coeff(n, 0);
            if (c != 0) l.set_coeff(n, j - 1, l.coeff(n, j - 1) + c / j);
        }
    }
    BivariateSeries a = sub(mul_t(l), l);  // (t - 1) L
    return mul(exp_series(t), exp_series(a));
}

// Cleared form of the record PDE: z R_z (1 - tT) = tT R, i.e.
//     z R_z = tT R + (z R_z) tT.
inline bool record_pde_holds(const BivariateSeries& r, const BivariateSeries& tree_egf) {
    BivariateSeries tt = mul_t(tree_egf);
    BivariateSeries lhs = z_times_ddz(r);
    return lhs == add(mul(tt, r), mul(lhs, tt));
}

inline bool record_pde_holds(int order) {
    return record_pde_holds(forest_record_egf(order), cayley_tree_egf(order));
}

// The fixed-n record polynomial (t/n) (n + t)^(n-1): its t^k coefficient is
// binom(n-1, k-1) n^(n-k-1), and k! times it recovers T(n,k). Coefficients
// are rational (the top one is 1/n).
inline Polynomial record_polynomial_fixed_n(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("record_polynomial_fixed_n: need n >= 1");
    // (n + t)^(n-1) by the binomial theorem, then shift by t and divide by n.
    Polynomial out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (std::int64_t j = 0; j <= n - 1; ++j) {
        // coefficient of t^j in (n+t)^(n-1)
        Rational c(binomial(n - 1, j));
        c *= Rational(int_pow(n, n - 1 - j));
        out[static_cast<std::size_t>(j + 1)] = c / n;
    }
    return out;
}

// Extracts a RecordTable from the generating series (tree or forest); every
// stored coefficient must be a non-negative integer.
inline RecordTable record_table_from_series(TableKind kind, int n_max) {
    detail::check_series_order(n_max);
    BivariateSeries s = kind == TableKind::tree ? tree_record_egf(n_max) : forest_record_egf(n_max);
    RecordTable table(kind, n_max);
    for (int n = 0; n <= n_max; ++n)
        for (int k = 0; k <= n; ++k) {
            Integer v = require_integer(s.coeff(n, k), "record_table_from_series");
            if (v < 0) throw ConsistencyError("record_table_from_series: negative count");
            table.set_entry(n, k, std::move(v));
        }
    return table;
}

}  // namespace treerec
