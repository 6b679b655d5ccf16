#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"

using namespace toric;
using namespace toric::cli;

namespace {

Errc code_of(auto fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return Errc::inconsistent_theorems;
}

const char* kF3Json =
    R"({"q": 3, "n": 8, "edges": [[1,6],[1,2],[1,8],[3,2],[3,4],[5,6],[5,4],[5,8],[7,2],[7,4]]})";

const Verdict* find(const Report& r, const std::string& quantity, const std::string& theorem) {
    for (const auto& v : r.verdicts)
        if (v.quantity == quantity && v.theorem == theorem) return &v;
    return nullptr;
}

int run_main(std::vector<std::string> args) {
    args.insert(args.begin(), "toric");
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    return main_entry(int(argv.size()), argv.data());
}

std::string read_file(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("edge-list input") {
    auto p = parse_input("3 3 5\n1 2\n2 3\n1 3\n");
    CHECK(p.q == 5);
    CHECK(p.clutter.num_vertices() == 3);
    CHECK(p.clutter.edges() == std::vector<std::vector<int>>{{0, 1}, {1, 2}, {0, 2}});
    auto c = parse_input("# comment\n\n4 2 4\n1 2 3  # hyperedge\n3 4\n");
    CHECK(c.clutter.num_edges() == 2);
}

TEST_CASE("JSON input") {
    auto p = parse_input(kF3Json);
    CHECK(p.q == 3);
    CHECK(p.clutter.num_edges() == 10);
    CHECK(p.clutter.num_vertices() == 8);
}

TEST_CASE("input errors") {
    CHECK(code_of([] { parse_input("3 2 5\n1 2\n1 2 3\n"); }) == Errc::clutter_axiom_violation);
    CHECK(code_of([] { parse_input("3 1 2\n1 2\n"); }) == Errc::field_too_small);
    CHECK(code_of([] { parse_input("3 1 6\n1 2\n"); }) == Errc::not_prime_power);
    CHECK(code_of([] { parse_input("3 1 5\n1 x\n"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_input("3 2 5\n1 2\n"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_input("3 1 5\n1 4\n"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_input("{\"q\": 5, \"n\": 3}"); }) == Errc::parse_error);
    CHECK(code_of([] { parse_input("{\"q\": 5, \"n\": 3, \"edges\": [[1,2],]}"); }) == Errc::parse_error);
    try {
        parse_input("3 2 5\n1 2\n2 z\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3, column 3") != std::string::npos);
    }
    try {
        parse_input("{\"q\": 5,\n \"n\": 3,\n \"edges\": [[1,2]] ]}");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("degree ranges") {
    CHECK(parse_degree_range("2") == std::pair<std::uint32_t, std::uint32_t>{2, 2});
    CHECK(parse_degree_range("1..3") == std::pair<std::uint32_t, std::uint32_t>{1, 3});
    CHECK(code_of([] { parse_degree_range("3..1"); }) == Errc::invalid_degree);
    CHECK(code_of([] { parse_degree_range("a..b"); }) == Errc::parse_error);
}

TEST_CASE("analyze reports the worked regularity") {
    auto in = parse_input(kF3Json);
    JobSpec job;
    job.command = "analyze";
    auto r = run(job, in.clutter, in.q);
    CHECK(r.invariants["X"]["regularity"] == 4);
    CHECK(r.invariants["|X|"] == 64);
    CHECK(r.invariants["reg(X) predicted"] == nlohmann::ordered_json::array({3, 4}));
    CHECK(r.mismatches() == 0);
    auto v = find(r, "reg(X)", "largest-cycle-reg-bound");
    REQUIRE(v);
    CHECK(v->verdict == "match");
    for (const auto& x : r.verdicts) CHECK(x.verdict != "unchecked");
}

TEST_CASE("verify on C6 over GF(5)") {
    auto in = parse_input("6 6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n");
    JobSpec job;
    job.command = "verify";
    auto r = run(job, in.clutter, in.q);
    auto v = find(r, "delta_X(1)", "bipartite-distance-bounds");
    REQUIRE(v);
    CHECK(v->lo == 144);
    CHECK(v->hi == 192);
    CHECK(v->computed == 186);
    CHECK(v->verdict == "match");
    CHECK(r.mismatches() == 0);
    CHECK(run_main({"verify", "--inline", "6 6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n", "--format", "json"}) == 0);
}

TEST_CASE("ci on the triangle") {
    JobSpec job;
    job.command = "ci";
    auto t = parse_input("3 3 5\n1 2\n2 3\n1 3\n");
    auto r5 = run(job, t.clutter, 5);
    CHECK(r5.invariants["ci(X)"] == true);
    CHECK(r5.invariants["ci(Y)"] == false);
    auto r4 = run(job, t.clutter, 4);
    CHECK(r4.invariants["ci(X)"] == true);
    CHECK(r4.invariants["ci(Y)"] == true);
    CHECK(r4.mismatches() == 0);
}

TEST_CASE("predict does not enumerate points") {
    auto in = parse_input(kF3Json);
    JobSpec job;
    job.command = "predict";
    job.degree_hi = 2;
    const auto before = points_enumerated();
    auto r = run(job, in.clutter, in.q);
    CHECK(points_enumerated() == before);
    CHECK(r.invariants["points_enumerated"] == 0);
    CHECK(r.invariants["reg(X)"]["lo"] == 3);
    CHECK(r.invariants["reg(X)"]["hi"] == 4);
    for (const auto& v : r.verdicts) CHECK((v.verdict == "unchecked" || v.verdict == "inapplicable"));
}

TEST_CASE("reports round-trip through JSON") {
    auto in = parse_input("4 4 4\n1 2\n2 3\n3 4\n4 1\n");
    for (const char* cmd : {"analyze", "hilbert", "code", "ci", "verify", "predict"}) {
        JobSpec job;
        job.command = cmd;
        job.degree_hi = 2;
        auto r = run(job, in.clutter, in.q);
        auto j = to_json(r);
        const auto text = j.dump(2);
        auto back = report_from_json(nlohmann::ordered_json::parse(text));
        CHECK(back == r);
        CHECK(to_json(back).dump(2) == text);
        CHECK(!render_table(r).empty());
    }
}

TEST_CASE("code parameters serialize with the documented keys") {
    auto in = parse_input("4 4 3\n1 2\n2 3\n3 4\n4 1\n");
    JobSpec job;
    job.command = "code";
    auto r = run(job, in.clutter, in.q);
    auto j = to_json(r);
    const auto& p = j["codes"][0]["parameters"];
    for (const char* key : {"n", "k", "d", "exact", "bounds"}) CHECK(p.contains(key));
    CHECK(p["bounds"].size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run_main({"analyze", "--inline", "3 3 5\n1 2\n2 3\n1 3\n"}) == 0);
    CHECK(run_main({"analyze", "--inline", "3 2 5\n1 2\n1 2 3\n"}) == 2);
    CHECK(run_main({"analyze", "--inline", "3 3 2\n1 2\n2 3\n1 3\n"}) == 2);
    CHECK(run_main({"bogus"}) == 2);
    CHECK(run_main({"analyze", "/nonexistent/file.txt"}) == 2);
    CHECK(run_main({"analyze", "--inline", "9 9 5\n1 2\n2 3\n3 4\n4 5\n5 6\n6 7\n7 8\n8 9\n9 1\n", "--budget", "100"}) == 3);
    CHECK(run_main({"code", "--inline", "6 6 5\n1 2\n2 3\n3 4\n4 5\n5 6\n6 1\n", "--degree", "2", "--budget", "1000"}) == 3);
    CHECK(exit_code_for(Errc::size_limit) == 3);
    CHECK(exit_code_for(Errc::parse_error) == 2);
}

TEST_CASE("--q overrides the input field and --out writes the report") {
    const auto path = (std::filesystem::temp_directory_path() / "toric_cli_test.json").string();
    CHECK(run_main({"ci", "--inline", "3 3 5\n1 2\n2 3\n1 3\n", "--q", "4", "--out", path, "--format", "json"}) == 0);
    auto j = nlohmann::ordered_json::parse(read_file(path));
    CHECK(j["input"]["q"] == 4);
    CHECK(j["invariants"]["ci(Y)"] == true);
    std::filesystem::remove(path);
}

TEST_CASE("fixtures are reproducible") {
    const auto dir = (std::filesystem::temp_directory_path() / "toric_fixture_test").string();
    std::filesystem::remove_all(dir);
    auto files = write_fixtures(dir);
    CHECK(files.size() == 8);
    // the checked-in copies match a fresh generation
    for (const auto& f : files) {
        const auto name = std::filesystem::path(f).filename().string();
        const auto stored = "tests/fixtures/" + name;
        REQUIRE_MESSAGE(std::filesystem::exists(stored), name);
        CHECK_MESSAGE(read_file(stored) == read_file(f), name);
    }
    std::filesystem::remove_all(dir);
}

TEST_CASE("point set dumps round-trip") {
    auto t = parse_input("3 3 4\n1 2\n2 3\n1 3\n");
    const Field f4(4);
    for (const auto& x : {projective_toric_set(t.clutter, f4), projective_closure_points(t.clutter, f4),
                          affine_toric_set(t.clutter, f4)}) {
        auto j = points_to_json(x);
        CHECK(j["points"].size() == x.size());
        CHECK(j.contains("raw") == (x.kind() == PointKind::closure));
        auto back = points_from_json(nlohmann::ordered_json::parse(j.dump()));
        CHECK(back == x);
        for (std::size_t i = 0; i < x.size(); ++i) {
            auto a = back.raw(i), b = x.raw(i);
            CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        }
    }
    CHECK(code_of([] { points_from_json(nlohmann::ordered_json::parse(R"({"q": 4, "kind": "affine", "dim": 2, "points": [[1]]})")); }) ==
          Errc::parse_error);
    CHECK(code_of([] { points_from_json(nlohmann::ordered_json::parse(R"({"q": 4, "kind": "affine"})")); }) ==
          Errc::parse_error);

    const auto path = (std::filesystem::temp_directory_path() / "toric_points_test.json").string();
    CHECK(run_main({"ci", "--inline", "3 3 5\n1 2\n2 3\n1 3\n", "--dump-points", path}) == 0);
    auto j = nlohmann::ordered_json::parse(read_file(path));
    CHECK(j["X"]["points"].size() == 16);
    CHECK(j["Y"]["points"].size() == 32);
    CHECK(j["X*"]["kind"] == "affine");
    std::filesystem::remove(path);
}
