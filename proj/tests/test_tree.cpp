#include "treerec/prufer.hpp"
#include "treerec/tree.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <vector>

using namespace treerec;

TEST_CASE("records of the running example") {
    RootedTree t = fixtures::running_example();
    t.validate();
    CHECK(t.node_count() == 14);
    CHECK(t.circ_rooted());
    CHECK_FALSE(t.planted());  // three children hang off the auxiliary root
    CHECK(t.records() == std::vector<int>{4, 5, 7, 10, 13, 14});
    CHECK(t.record_count() == 6);
    CHECK(t.canonical_labels());
}

TEST_CASE("records of small shapes") {
    RootedTree single({{1, 0}}, 0);
    CHECK(single.planted());
    CHECK(single.records() == std::vector<int>{1});

    // decreasing path under the auxiliary root: only the top vertex records
    RootedTree path({{3, 0}, {2, 3}, {1, 2}}, 0);
    CHECK(path.records() == std::vector<int>{3});

    // increasing path rooted at its own smallest vertex: everything records
    RootedTree increasing({{2, 1}, {3, 2}}, 1);
    CHECK(increasing.records() == std::vector<int>{1, 2, 3});

    // a labelled root is always a record
    RootedTree rooted({{1, 3}, {2, 3}}, 3);
    CHECK(rooted.records() == std::vector<int>{3});
    CHECK_FALSE(rooted.circ_rooted());
}

TEST_CASE("depth is measured from the root") {
    RootedTree t = fixtures::running_example();
    CHECK(t.depth(4) == 1);
    CHECK(t.depth(14) == 3);
    CHECK(t.depth(9) == 3);

    RootedTree own({{2, 1}, {3, 2}}, 1);
    CHECK(own.depth(1) == 0);
    CHECK(own.depth(3) == 2);
}

TEST_CASE("structural validation rejects malformed input") {
    CHECK_THROWS_AS(RootedTree({{1, 2}, {2, 1}}, 0), std::invalid_argument);  // cycle
    CHECK_THROWS_AS(RootedTree({{1, 5}}, 0), std::invalid_argument);          // unknown parent
    CHECK_THROWS_AS(RootedTree({{1, 0}, {1, 0}}, 0), std::invalid_argument);  // duplicate label
    CHECK_THROWS_AS(RootedTree({{1, 0}}, 2), std::invalid_argument);  // parent 0 without 0-root
    CHECK_THROWS_AS(RootedTree({{-1, 0}}, 0), std::invalid_argument);  // negative label
    CHECK_THROWS(fixtures::running_example().parent_of(99));
}

TEST_CASE("prufer codec round trips exhaustively") {
    // code (0) over three vertices is the star centred at 0
    auto star = prufer_decode({0}, 3);
    REQUIRE(star.size() == 2);
    for (auto [a, b] : star) CHECK((a == 0 || b == 0));
    CHECK(prufer_encode(3, star) == std::vector<int>{0});

    for (int m = 2; m <= 6; ++m) {
        std::vector<int> code(static_cast<std::size_t>(m - 2), 0);
        bool all_ok = true;
        do {
            all_ok = all_ok && prufer_encode(m, prufer_decode(code, m)) == code;
        } while (treerec::detail::next_code(code, m));
        CHECK(all_ok);
    }

    CHECK_THROWS_AS(prufer_decode({0, 1}, 3), std::invalid_argument);  // wrong length
    CHECK_THROWS_AS(prufer_decode({5}, 3), std::invalid_argument);     // entry out of range
    CHECK_THROWS_AS(prufer_encode(4, {{0, 1}, {2, 3}, {0, 1}}), std::invalid_argument);
}

TEST_CASE("enumeration stream sizes match the closed counts") {
    CHECK(rooted_tree_stream_size(3) == 9);
    CHECK(rooted_forest_stream_size(3) == 16);
    CHECK(rooted_forest_stream_size(6) == 16807);
    for (int n = 0; n <= 6; ++n) {
        Integer trees = 0, forests = 0;
        for_each_rooted_tree(n, [&](const RootedTree&) { ++trees; });
        for_each_rooted_forest(n, [&](const RootedTree&) { ++forests; });
        CHECK(trees == rooted_tree_stream_size(n));
        CHECK(forests == rooted_forest_stream_size(n));
    }
}

TEST_CASE("enumeration yields distinct valid canonical trees") {
    std::set<std::vector<int>> seen;
    bool all_valid = true;
    for_each_rooted_tree(4, [&](const RootedTree& t) {
        t.validate();
        all_valid = all_valid && t.canonical_labels() && !t.circ_rooted();
        std::vector<int> key{t.root()};
        for (int l : t.labels()) key.push_back(l == t.root() ? -1 : t.parent_of(l));
        seen.insert(std::move(key));
    });
    CHECK(all_valid);
    CHECK(seen.size() == 64);  // 4 * 4^2 distinct rooted trees

    std::set<std::vector<int>> forests;
    for_each_rooted_forest(3, [&](const RootedTree& f) {
        f.validate();
        std::vector<int> key;
        for (int l : f.labels()) key.push_back(f.parent_of(l));
        forests.insert(std::move(key));
    });
    CHECK(forests.size() == 16);
}

TEST_CASE("forest record histogram at n = 3") {
    std::map<int, int> histogram;
    for_each_rooted_forest(3, [&](const RootedTree& f) { ++histogram[f.record_count()]; });
    CHECK(histogram == std::map<int, int>{{1, 3}, {2, 7}, {3, 6}});
}

TEST_CASE("planted forests are exactly the single-child ones") {
    int planted = 0;
    for_each_rooted_forest(2, [&](const RootedTree& f) {
        if (f.planted()) ++planted;
    });
    CHECK(planted == 2);  // the two rooted trees on two vertices
}

TEST_CASE("brute-force caps refuse large n") {
    CHECK_THROWS_AS(for_each_rooted_tree(9, [](const RootedTree&) {}), CapExceeded);
    CHECK_THROWS_AS(for_each_rooted_forest(9, [](const RootedTree&) {}), CapExceeded);
}
