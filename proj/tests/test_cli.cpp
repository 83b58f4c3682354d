#include "treerec/cli.hpp"

#include "fixtures.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace treerec;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    CliResult r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Scoped temp file under the build tree's working directory.
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content)
        : path("cli_test_" + name) {
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("table verb") {
    CliResult csv = run({"table", "--kind", "tree", "--n-max", "8"});
    CHECK(csv.code == 0);
    CHECK(csv.out.rfind("n,k,value\n", 0) == 0);
    CHECK(contains(csv.out, "8,1,262144\n"));
    CHECK(contains(csv.out, "8,2,458752\n"));
    CHECK(run({"table", "--kind", "tree", "--n-max", "8"}).out == csv.out);  // byte-stable

    std::vector<std::string> methods = {"formula", "recurrence", "series", "brute"};
    std::string reference;
    for (const auto& method : methods) {
        CliResult r = run({"table", "--kind", "forest", "--n-max", "6", "--method", method});
        REQUIRE(r.code == 0);
        if (reference.empty())
            reference = r.out;
        else
            CHECK(r.out == reference);
    }

    CliResult bfile = run({"table", "--n-max", "3", "--format", "bfile"});
    CHECK(bfile.code == 0);
    CHECK(bfile.out == "1 1\n2 1\n3 1\n4 3\n5 4\n6 2\n");

    CliResult json = run({"table", "--kind", "tree", "--n-max", "4", "--format", "json"});
    REQUIRE(json.code == 0);
    Json j = Json::parse(json.out);
    CHECK(j["kind"] == "tree");
    CHECK(j["n_max"] == 4);
    CHECK(j["rows"][3] == Json::array({"0", "3", "4", "2"}));
}

TEST_CASE("caps and usage errors") {
    CHECK(run({"table", "--n-max", "401"}).code == 3);
    CHECK(run({"table", "--n-max", "9", "--method", "brute"}).code == 3);
    CHECK(run({"table", "--n-max", "61", "--method", "series"}).code == 3);
    CHECK(run({"table", "--method", "sorcery"}).code == 2);
    CHECK(run({"conjure"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "treerec"));
}

TEST_CASE("decompose and reconstruct round trip through files") {
    std::string tree_json = tree_to_json(fixtures::running_example()).dump();
    TempFile tree_file("tree.json", tree_json);

    CliResult d = run({"decompose", "--in", tree_file.path});
    REQUIRE(d.code == 0);
    Json jd = Json::parse(d.out);
    CHECK(jd["type"] == Json::array({4, 1, 1, 2, 5, 1}));
    CHECK(jd["records"] == Json::array({4, 5, 7, 10, 13, 14}));

    TempFile decomp_file("decomp.json", d.out);
    CliResult r = run({"reconstruct", "--in", decomp_file.path});
    REQUIRE(r.code == 0);
    CHECK(tree_from_json(Json::parse(r.out)) == fixtures::running_example());

    CHECK(run({"decompose", "--in", "no_such_file.json"}).code == 2);
    TempFile junk("junk.json", "{not json");
    CHECK(run({"decompose", "--in", junk.path}).code == 2);
    TempFile rooted("rooted.json", tree_to_json(RootedTree({{2, 1}}, 1)).dump());
    CHECK(run({"decompose", "--in", rooted.path}).code == 2);
    CHECK(run({"decompose"}).code == 2);  // --in is required
}

TEST_CASE("series verb") {
    CliResult tree = run({"series", "--order", "8", "--which", "tree"});
    REQUIRE(tree.code == 0);
    Json j = Json::parse(tree.out);
    CHECK(j["order"] == 8);
    CHECK(j["scaling"] == "entry [n][k] = n! * [z^n t^k]");
    CHECK(j["rows"][5] == Json::array({"0", "125", "200", "180", "96", "24"}));

    CliResult plain = run({"series", "--order", "3", "--which", "T"});
    REQUIRE(plain.code == 0);
    CHECK(Json::parse(plain.out)["rows"][3] == Json::array({"9", "0", "0", "0"}));

    CliResult forest = run({"series", "--order", "3", "--which", "forest"});
    REQUIRE(forest.code == 0);
    CHECK(Json::parse(forest.out)["rows"][3] == Json::array({"0", "3", "7", "6"}));

    CHECK(run({"series", "--order", "61"}).code == 3);
}

TEST_CASE("verify verb") {
    CliResult ok = run({"verify", "--suite", "all", "--n-max", "6", "--order", "10"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "PASS suite all"));
    CHECK(contains(ok.out, "ok   "));
    CHECK_FALSE(contains(ok.out, "FAIL "));

    CliResult tables = run({"verify", "--suite", "tables", "--n-max", "6"});
    CHECK(tables.code == 0);
    CHECK(contains(tables.out, "PASS suite tables"));

    CHECK(run({"verify", "--suite", "tables", "--n-max", "500"}).code == 3);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("peaks verb") {
    CliResult forest = run({"peaks", "--kind", "forest", "--n-max", "20", "--fit", "--fit-min",
                            "5", "--fit-max", "20"});
    REQUIRE(forest.code == 0);
    CHECK(forest.out.rfind("n,k_star,k_star_squared\n", 0) == 0);
    CHECK(contains(forest.out, "\n1,1,1\n"));
    CHECK(contains(forest.out, "\n8,4,16\n"));
    std::string last_line = forest.out.substr(forest.out.rfind("{"));
    Json fit = Json::parse(last_line);
    CHECK(fit["n_min"] == 5);
    CHECK(fit["n_max"] == 20);
    CHECK(fit["slope"].get<double>() > 0.0);

    CliResult tree = run({"peaks", "--kind", "tree", "--n-max", "10"});
    REQUIRE(tree.code == 0);
    CHECK(contains(tree.out, "\n8,3,9\n"));

    CHECK(run({"peaks", "--kind", "tree", "--fit"}).code == 2);
}

TEST_CASE("srec verb") {
    CliResult r = run({"srec", "--n-max", "4"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("n,s,count\n", 0) == 0);
    CHECK(contains(r.out, "\n3,0,3\n"));
    CHECK(contains(r.out, "\n4,0,16\n"));
    CHECK(contains(r.out, "\n4,6,1\n"));
    CHECK(contains(r.out,
                   "# n=4 q1=15 second_nonzero=15 two_component_forests=15 match=yes\n"));
    CHECK(run({"srec", "--n-max", "9"}).code == 3);
}

TEST_CASE("pmf verb") {
    CliResult r = run({"pmf", "--k", "1", "--rho", "0.5", "--n-max", "200"});
    REQUIRE(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["k"] == 1);
    CHECK(j["n_max"] == 200);
    CHECK(j["values"].size() == 200);
    CHECK(std::fabs(j["deficit"].get<double>()) < 1e-9);

    CHECK(run({"pmf", "--rho", "1.5"}).code == 2);
    CHECK(run({"pmf", "--k", "3", "--rho", "0.5", "--n-max", "2"}).code == 2);
    CHECK(run({"pmf"}).code == 2);  // --rho is required
}
