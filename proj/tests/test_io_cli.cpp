// JSON serialization round-trips, input validation, and end-to-end checks of
// the command-line tool (located through the RELAP_CLI environment variable).
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <relap/relap.hpp>

using namespace relap;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& stem) {
    return fs::temp_directory_path() / ("relap-test-" + stem + ".json");
}

void write_file(const fs::path& p, const std::string& text) {
    std::ofstream out(p);
    REQUIRE(out.good());
    out << text;
}

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const char* cli = std::getenv("RELAP_CLI");
    REQUIRE(cli != nullptr);
    const std::string cmd = std::string(cli) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string rp2_json = R"({
  "facets": [[0,1,2],[0,1,3],[0,2,4],[0,3,5],[0,4,5],[1,2,5],[1,3,4],[1,4,5],[2,3,4],[2,3,5]]
})";

} // namespace

TEST_CASE("complex serialization round-trips over generated families") {
    std::vector<SimplicialComplex> xs;
    xs.push_back(minimal_complex());
    for (int n = 0; n <= 3; ++n) xs.push_back(generate_simplex(n));
    xs.push_back(generate_skeleton_simplex(4, 2));
    xs.push_back(generate_d_path(2, 3));
    xs.push_back(generate_d_circuit(2, 6));
    xs.push_back(generate_d_star(2, 3));
    xs.push_back(generate_model_join(1, 3, 1));
    for (unsigned t = 0; t < 10; ++t)
        xs.push_back(random_complex(6, 0.5, 500 + t));

    for (const auto& x : xs) {
        const Json j = complex_to_json(x, "roundtrip");
        const SimplicialComplex back = complex_from_json(j);
        CHECK(back == x);
    }
}

TEST_CASE("pair serialization round-trips and keeps the subcomplex") {
    for (unsigned t = 0; t < 10; ++t) {
        const SimplicialComplex x = random_complex(6, 0.6, 600 + t);
        const SimplicialComplex a = random_subcomplex(x, 0.5, 700 + t);
        const ComplexPair pair(x, a);
        const ComplexPair back = pair_from_json(pair_to_json(pair));
        CHECK(back.complex() == x);
        CHECK(back.subcomplex() == a);
    }
}

TEST_CASE("bare complexes and missing subcomplex keys parse as absolute pairs") {
    const Json bare = Json::parse(R"({"facets": [[0,1],[1,2]]})");
    const ComplexPair p1 = pair_from_json(bare);
    CHECK(p1.complex() == generate_d_path(1, 2));
    CHECK(p1.subcomplex() == minimal_complex());

    const Json wrapped = Json::parse(R"({"complex": {"facets": [[0,1],[1,2]]}})");
    const ComplexPair p2 = pair_from_json(wrapped);
    CHECK(p2.complex() == generate_d_path(1, 2));
    CHECK(p2.subcomplex() == minimal_complex());
}

TEST_CASE("malformed documents are rejected with invalid_argument") {
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"faces": [[0,1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": "oops"})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [[0,"a"]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"facets": [0]})")),
                    std::invalid_argument);

    // subcomplex sticking outside the complex
    const Json bad = Json::parse(
        R"({"complex": {"facets": [[0,1]]}, "subcomplex": {"facets": [[2,3]]}})");
    CHECK_THROWS_WITH(pair_from_json(bad),
                      Catch::Matchers::ContainsSubstring("subcomplex not contained"));
}

TEST_CASE("file save and load round-trips through disk") {
    const fs::path path = temp_file("file-roundtrip");
    const SimplicialComplex x = generate_skeleton_simplex(4, 2);
    save_json_file(path.string(), complex_to_json(x));
    const ComplexPair pair = load_pair_or_complex(path.string());
    CHECK(pair.complex() == x);
    CHECK(pair.subcomplex() == minimal_complex());
    fs::remove(path);

    CHECK_THROWS_AS(load_pair_or_complex("/nonexistent/deeply/missing.json"),
                    std::invalid_argument);
}

TEST_CASE("shipped fixture files parse and carry their pinned invariants") {
    const std::string dir = RELAP_DATA_DIR;

    const ComplexPair triangle = load_pair_or_complex(dir + "/triangle_pair.json");
    CHECK(triangle.complex() == generate_simplex(2));
    CHECK(triangle.subcomplex() == SimplicialComplex::from_facets({{0, 1}}));
    CHECK(interference_bound(triangle, 1).bound == 2.0);

    const ComplexPair rp2 = load_pair_or_complex(dir + "/projective_plane_6.json");
    CHECK(rp2.subcomplex() == minimal_complex());
    const auto h1 = relative_homology(rp2, 1);
    CHECK(h1.betti == 0);
    CHECK(h1.torsion_order == 2);

    const ComplexPair k4 = load_pair_or_complex(dir + "/k4.json");
    CHECK(verify_matrix_tree_i(k4, 1).lhs == 64);
}

TEST_CASE("cli: gen emits the expected facet lists") {
    auto r = run_cli("gen simplex 2");
    REQUIRE(r.exit_code == 0);
    const Json j = Json::parse(r.output);
    CHECK(j["facets"] == Json::parse("[[0,1,2]]"));

    r = run_cli("gen d_path 1 2");
    REQUIRE(r.exit_code == 0);
    CHECK(Json::parse(r.output)["facets"] == Json::parse("[[0,1],[1,2]]"));

    // bad parameters are input errors
    CHECK(run_cli("gen simplex").exit_code == 1);
    CHECK(run_cli("gen no_such_family 1").exit_code == 1);
}

TEST_CASE("cli: random generation is byte-identical for a fixed seed") {
    const auto a = run_cli("--seed 7 gen random --vertices 6 --density 0.5");
    const auto b = run_cli("--seed 7 gen random --vertices 6 --density 0.5");
    const auto c = run_cli("--seed 8 gen random --vertices 6 --density 0.5");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output != c.output);
}

TEST_CASE("cli: homology output names the groups") {
    const fs::path path = temp_file("rp2");
    write_file(path, rp2_json);

    auto r = run_cli("homology " + path.string() + " -k 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "H_1 = Z/2"));

    r = run_cli("homology " + path.string() + " --all");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "H_0 = Z"));
    CHECK(contains(r.output, "H_1 = Z/2"));
    CHECK(contains(r.output, "H_2 = 0"));
    fs::remove(path);
}

TEST_CASE("cli: trees verification prints the counting identity") {
    const fs::path path = temp_file("k4");
    write_file(path, R"({"facets": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");

    auto r = run_cli("trees " + path.string() + " -k 1 --verify-i");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "LHS=64 RHS=64 VERIFIED"));

    r = run_cli("trees " + path.string() + " -k 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "trees: 16"));

    r = run_cli("--quiet trees " + path.string() + " -k 1 --verify-ii");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "VERIFIED"));

    // enumeration over budget is an input-style resource error
    r = run_cli("--budget 10 trees " + path.string() + " -k 1");
    CHECK(r.exit_code == 1);
    fs::remove(path);
}

TEST_CASE("cli: bounds report holds/equality and map inapplicability correctly") {
    const fs::path path = temp_file("d2edge");
    write_file(path,
               R"({"complex": {"facets": [[0,1,2]]}, "subcomplex": {"facets": [[0,1]]}})");

    auto r = run_cli("bounds " + path.string() + " -k 1 --theorem 4.5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "bound=2 gap=2 holds equality"));

    // all-mode reports inapplicable rows instead of failing outright
    r = run_cli("bounds " + path.string() + " -k 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "4.2: not applicable"));
    CHECK(contains(r.output, "4.5: bound=2"));

    // a directly requested inapplicable theorem is an input error
    r = run_cli("bounds " + path.string() + " -k 1 --theorem 4.2");
    CHECK(r.exit_code == 1);

    r = run_cli("bounds " + path.string() + " -k 1 --theorem 9.9");
    CHECK(r.exit_code == 1);
    fs::remove(path);
}

TEST_CASE("cli: check exit codes distinguish inputs from violations") {
    const fs::path good = temp_file("good-pair");
    write_file(good,
               R"({"complex": {"facets": [[0,1,2]]}, "subcomplex": {"facets": [[0,1]]}})");
    auto r = run_cli("check " + good.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "all checks passed"));

    r = run_cli("check " + good.string() + " --inject-fault");
    CHECK(r.exit_code == 2);
    CHECK(contains(r.output, "FAIL"));
    fs::remove(good);

    const fs::path bad = temp_file("bad-pair");
    write_file(bad,
               R"({"complex": {"facets": [[0,1]]}, "subcomplex": {"facets": [[2,3]]}})");
    r = run_cli("check " + bad.string());
    CHECK(r.exit_code == 1);
    CHECK(contains(r.output, "subcomplex not contained"));
    fs::remove(bad);

    const fs::path mal = temp_file("malformed");
    write_file(mal, "{ this is not json");
    r = run_cli("check " + mal.string());
    CHECK(r.exit_code == 1);
    fs::remove(mal);

    CHECK(run_cli("check /nonexistent/missing.json").exit_code == 1);
}

TEST_CASE("cli: spectrum prints exact invariants and dumps matrices") {
    const fs::path path = temp_file("k4-spectrum");
    write_file(path, R"({"facets": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");

    auto r = run_cli("spectrum " + path.string() + " -k 0 --part ud --exact");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "exact rank: 3"));
    CHECK(contains(r.output, "pseudo-determinant: 64"));
    CHECK(contains(r.output, "0 -64 48 -12 1"));  // characteristic polynomial

    const fs::path dump = temp_file("k4-matrix");
    r = run_cli("spectrum " + path.string() + " -k 0 --part ud --dump-matrix " +
                dump.string());
    CHECK(r.exit_code == 0);
    std::ifstream in(dump);
    int rows = 0, cols = 0;
    REQUIRE(in >> rows >> cols);
    CHECK(rows == 4);
    CHECK(cols == 4);
    IntegerMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            long long v = 0;
            REQUIRE(in >> v);
            m.at(i, j) = v;
        }
    CHECK(m == graph_laplacian(generate_skeleton_simplex(3, 1)));
    fs::remove(dump);

    CHECK(run_cli("spectrum " + path.string() + " -k 0 --part sideways").exit_code == 1);
    fs::remove(path);
}

TEST_CASE("cli: gap handles empty Laplacians and json mode is stable") {
    const fs::path path = temp_file("xx-pair");
    write_file(path,
               R"({"complex": {"facets": [[0,1]]}, "subcomplex": {"facets": [[0,1]]}})");
    auto r = run_cli("gap " + path.string() + " -k 1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "inf"));
    fs::remove(path);

    const fs::path rp2 = temp_file("rp2-json");
    write_file(rp2, rp2_json);
    const auto a = run_cli("--json homology " + rp2.string() + " --all");
    const auto b = run_cli("--json homology " + rp2.string() + " --all");
    REQUIRE(a.exit_code == 0);
    CHECK(a.output == b.output);
    const Json j = Json::parse(a.output);
    REQUIRE(j.contains("groups"));
    REQUIRE(j["groups"].size() == 3);
    CHECK(j["groups"][1]["group"] == "Z/2");
    CHECK(j["groups"][1]["torsion"] == Json::parse(R"(["2"])"));
    fs::remove(rp2);
}
