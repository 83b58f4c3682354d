#include "treerec/counting.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace treerec;

TEST_CASE("closed-form record numbers match pinned values") {
    CHECK(tree_record_number(1, 1) == 1);
    CHECK(tree_record_number(3, 2) == 4);
    CHECK(tree_record_number(5, 3) == 180);
    CHECK(tree_record_number(8, 7) == 35280);
    CHECK(tree_record_number(8, 8) == 5040);  // (n-1)! on the diagonal
    CHECK(tree_record_number(6, 1) == 1296);

    CHECK(forest_record_number(0, 0) == 1);
    CHECK(forest_record_number(1, 1) == 1);
    CHECK(forest_record_number(3, 2) == 7);
    CHECK(forest_record_number(5, 4) == 326);
    CHECK(forest_record_number(6, 3) == 4635);
    CHECK(forest_record_number(8, 8) == 40320);  // n! on the diagonal

    CHECK(tree_record_number(5, 0) == 0);
    CHECK(tree_record_number(5, 6) == 0);
    CHECK(forest_record_number(5, 0) == 0);
    CHECK(forest_record_number(5, 6) == 0);
}

TEST_CASE("stirling cycle numbers") {
    StirlingTable s(8);
    CHECK(s.value(0, 0) == 1);
    CHECK(s.value(4, 2) == 11);
    CHECK(s.value(6, 3) == 225);
    CHECK(s.value(5, 1) == 24);   // (m-1)! cycles of length one
    CHECK(s.value(5, 5) == 1);
    CHECK(s.value(5, 0) == 0);
    CHECK(stirling_first_unsigned(6, 3) == 225);
    Integer row_sum = 0;
    for (int j = 0; j <= 7; ++j) row_sum += s.value(7, j);
    CHECK(row_sum == factorial(7));  // rows sum to m!
}

TEST_CASE("four construction methods agree on small tables") {
    for (auto kind : {TableKind::tree, TableKind::forest}) {
        RecordTable formula = (kind == TableKind::tree) ? tree_record_table_formula(6)
                                                        : forest_record_table_formula(6);
        RecordTable recurrence = (kind == TableKind::tree) ? tree_record_table_recurrence(6)
                                                           : forest_record_table_recurrence(6);
        RecordTable brute = brute_force_table(kind, 6);
        CHECK(formula == recurrence);
        CHECK(formula == brute);
    }
}

TEST_CASE("formula and recurrence agree well past the brute-force range") {
    CHECK(tree_record_table_formula(25) == tree_record_table_recurrence(25));
    CHECK(forest_record_table_formula(25) == forest_record_table_recurrence(25));
}

TEST_CASE("row sums and diagonals") {
    RecordTable trees = tree_record_table_formula(20);
    RecordTable forests = forest_record_table_formula(20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(trees.row_sum(n) == cayley_rooted_count(n));        // n^(n-1)
        CHECK(forests.row_sum(n) == int_pow(n + 1, n - 1));
        CHECK(trees.entry(n, n) == factorial(n - 1));
        CHECK(forests.entry(n, n) == factorial(n));
        CHECK(trees.entry(n, 1) == cayley_unrooted_count(n));     // n^(n-2)
    }
    CHECK(forests.row_sum(0) == 1);
}

TEST_CASE("brute-force rows") {
    CHECK(brute_force_tree_row(3) == std::vector<Integer>{0, 3, 4, 2});
    CHECK(brute_force_forest_row(3) == std::vector<Integer>{0, 3, 7, 6});
    CHECK(brute_force_forest_row(0) == std::vector<Integer>{1});
    CHECK(brute_force_tree_row(1) == std::vector<Integer>{0, 1});
    CHECK_THROWS_AS(brute_force_tree_row(9), CapExceeded);
    CHECK_THROWS_AS(brute_force_table(TableKind::forest, 9), CapExceeded);
}

TEST_CASE("forest numbers follow from tree numbers by sieving") {
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(forest_from_tree_numbers(n, k) == forest_record_number(n, k));
}

TEST_CASE("forests counted by component number sum to all forests") {
    for (int n = 1; n <= 10; ++n) {
        Integer total = 0;
        for (int k = 1; k <= n; ++k) total += cayley_forest_count(n, k);
        CHECK(total == int_pow(n + 1, n - 1));
    }
    CHECK(cayley_forest_count(3, 1) == 9);
    CHECK(cayley_forest_count(4, 2) == 48);
}

TEST_CASE("csv serialization") {
    RecordTable t = tree_record_table_formula(3);
    std::ostringstream out;
    write_csv(t, out);
    CHECK(out.str() == "n,k,value\n1,1,1\n2,1,1\n2,2,1\n3,1,3\n3,2,4\n3,3,2\n");

    RecordTable f = forest_record_table_formula(2);
    std::ostringstream fout;
    write_csv(f, fout);
    CHECK(fout.str() == "n,k,value\n0,0,1\n1,1,1\n2,1,1\n2,2,2\n");
}

TEST_CASE("b-file serialization flattens rows in reading order") {
    RecordTable t = tree_record_table_formula(3);
    std::ostringstream out;
    write_bfile(t, out);
    CHECK(out.str() == "1 1\n2 1\n3 1\n4 3\n5 4\n6 2\n");
}

TEST_CASE("table caps") {
    CHECK_THROWS_AS(RecordTable(TableKind::tree, 401), CapExceeded);
    CHECK_THROWS_AS(tree_record_table_formula(401), CapExceeded);
    CHECK(table_kind_name(TableKind::tree) == std::string("tree"));
    CHECK(table_kind_name(TableKind::forest) == std::string("forest"));
}

TEST_CASE("record table accessors") {
    RecordTable t = tree_record_table_formula(4);
    CHECK(t.n_max() == 4);
    CHECK(t.kind() == TableKind::tree);
    CHECK(t.entry(3, 2) == 4);
    CHECK(t.entry(3, 7) == 0);   // out-of-range k reads as zero
    CHECK(t.entry(17, 1) == 0);  // rows beyond n_max read as zero
    CHECK(t.row(3) == std::vector<Integer>{0, 3, 4, 2});
}
