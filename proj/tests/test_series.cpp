#include "treerec/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace treerec;

namespace {

// Deterministic pseudo-random series with vanishing z^0 row, small rational
// coefficients, bounded t-width.
BivariateSeries random_series(int order, unsigned seed) {
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> num(-3, 3);
    std::uniform_int_distribution<int> den(1, 3);
    BivariateSeries s(order);
    for (int n = 1; n <= order; ++n)
        for (int k = 0; k <= std::min(n, 3); ++k)
            s.set_coeff(n, k, Rational(num(gen), den(gen)));
    return s;
}

BivariateSeries z_series(int order) {
    BivariateSeries z(order);
    z.set_coeff(1, 0, 1);
    return z;
}

}  // namespace

TEST_CASE("elementary calculus on exp(z)") {
    const int order = 8;
    BivariateSeries e = exp_series(z_series(order));
    for (int n = 0; n <= order; ++n) CHECK(e.coeff(n, 0) == 1);  // n! [z^n] e^z = 1

    CHECK(log1p_series(sub(e, BivariateSeries::constant(order, 1))) == z_series(order));
    CHECK(pow(z_series(order), 3).coeff(3, 0) == 6);
    CHECK(mul_z(e).coeff(4, 0) == 4);          // n! [z^n] z e^z = n
    CHECK(z_times_ddz(e).coeff(5, 0) == 5);
    CHECK(integrate_div_z(mul_z(e)).coeff(4, 0) == 1);  // back to e^z - 1
}

TEST_CASE("exp and log satisfy the ring laws on random series") {
    const int order = 8;
    BivariateSeries a = random_series(order, 12345);
    BivariateSeries b = random_series(order, 67890);

    CHECK(exp_series(add(a, b)) == mul(exp_series(a), exp_series(b)));

    // log((1+a)(1+b)) = log(1+a) + log(1+b); the product is 1 + (a+b+ab).
    BivariateSeries c = add(add(a, b), mul(a, b));
    CHECK(log1p_series(c) == add(log1p_series(a), log1p_series(b)));

    CHECK(exp_series(log1p_series(a)) == add(BivariateSeries::constant(order, 1), a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(div_by_t(mul_t(a)) == a);
}

TEST_CASE("series equality semantics") {
    BivariateSeries a(3), b(3);
    a.set_coeff(2, 1, 5);
    b.set_coeff(2, 1, 5);
    b.set_coeff(3, 2, 0);  // explicit zero-padding must not matter
    CHECK(a == b);
    CHECK_FALSE(a == BivariateSeries(4));
}

TEST_CASE("rooted-tree series") {
    BivariateSeries t = cayley_tree_egf(15);
    CHECK(t.coeff(1, 0) == 1);
    CHECK(t.coeff(2, 0) == 2);
    CHECK(t.coeff(3, 0) == 9);
    CHECK(t.coeff(5, 0) == 625);
    CHECK(tree_functional_equation_holds(15));
    CHECK(unrooted_integral_identity_holds(15));
}

TEST_CASE("record series carry the record counts") {
    const int order = 14;
    BivariateSeries r = tree_record_egf(order);
    CHECK(r.coeff(5, 2) == 200);
    CHECK(r.coeff(1, 1) == 1);
    CHECK(r.coeff(2, 0) == 0);

    CHECK(r == tree_record_egf_integral(order));

    BivariateSeries f = forest_record_egf(order);
    CHECK(f.coeff(0, 0) == 1);
    CHECK(f.coeff(3, 2) == 7);
    CHECK(f == forest_record_egf_product(order));

    RecordTable tree_table = record_table_from_series(TableKind::tree, order);
    RecordTable forest_table = record_table_from_series(TableKind::forest, order);
    CHECK(tree_table == tree_record_table_formula(order));
    CHECK(forest_table == forest_record_table_formula(order));

    // t = 1 slices return the plain counting series.
    std::vector<Rational> tree_totals = eval_t1(r);
    std::vector<Rational> forest_totals = eval_t1(f);
    for (int n = 1; n <= order; ++n) {
        CHECK(tree_totals[static_cast<std::size_t>(n)] == Rational(cayley_rooted_count(n)));
        CHECK(forest_totals[static_cast<std::size_t>(n)] == Rational(int_pow(n + 1, n - 1)));
    }
}

TEST_CASE("per-column closed form") {
    const int order = 12;
    for (int k = 1; k <= 5; ++k) {
        std::vector<Rational> column = tree_record_column(order, k);
        for (int n = 0; n <= order; ++n)
            CHECK(column[static_cast<std::size_t>(n)] == Rational(tree_record_number(n, k)));
    }
}

TEST_CASE("the record series solves its differential equation") {
    const int order = 12;
    CHECK(record_pde_holds(order));
    CHECK(record_pde_holds(forest_record_egf(order), cayley_tree_egf(order)));

    // The planted (tree) series satisfies the simpler cleared form
    // z R_z (1 - tT) = tT, with no R on the right.
    BivariateSeries tt = mul_t(cayley_tree_egf(order));
    BivariateSeries lhs = z_times_ddz(tree_record_egf(order));
    CHECK(lhs == add(tt, mul(lhs, tt)));

    // ...and the check is sensitive: poke one coefficient and it must fail.
    BivariateSeries f = forest_record_egf(order);
    f.set_coeff(3, 1, f.coeff(3, 1) + 1);
    CHECK_FALSE(record_pde_holds(f, cayley_tree_egf(order)));
}

TEST_CASE("fixed-n record polynomials") {
    for (int n = 1; n <= 12; ++n) {
        Polynomial p = record_polynomial_fixed_n(n);
        REQUIRE(static_cast<int>(p.size()) == n + 1);
        CHECK(p[0] == 0);
        for (int k = 1; k <= n; ++k)
            CHECK(p[static_cast<std::size_t>(k)] * Rational(factorial(k)) ==
                  Rational(tree_record_number(n, k)));
    }
    CHECK_THROWS_AS(record_polynomial_fixed_n(0), std::invalid_argument);
}

TEST_CASE("series caps and preconditions") {
    CHECK_THROWS_AS(cayley_tree_egf(kSeriesOrderCap + 1), CapExceeded);
    CHECK_THROWS_AS(tree_record_egf(61), CapExceeded);
    CHECK_THROWS_AS(record_table_from_series(TableKind::tree, 61), CapExceeded);

    BivariateSeries one = BivariateSeries::constant(5, 1);
    CHECK_THROWS_AS(div_by_t(one), std::invalid_argument);
    CHECK_THROWS_AS(exp_series(one), std::invalid_argument);
    CHECK_THROWS_AS(log1p_series(one), std::invalid_argument);
    CHECK_THROWS_AS(integrate_div_z(one), std::invalid_argument);
    CHECK_THROWS_AS(add(BivariateSeries(3), BivariateSeries(4)), std::invalid_argument);
}
