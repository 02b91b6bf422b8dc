#include <doctest.h>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "pleth/cli.hpp"
#include "pleth/io.hpp"

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int status;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "pleth");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = pleth::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / "pleth_cli_test") { fs::create_directories(path); }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& body) const {
        pleth::io::write_file_atomic(path / name, body);
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("plethysm of the one-variable example") {
    TempDir dir;
    // G = x_1^2 / 2, F = x_1 + x_1^2 / 2
    const auto g = dir.file("g.json", R"({"truncation":4,"terms":[{"lambda":[2],"coeff":"1"}]})");
    const auto f = dir.file("f.json", R"({"truncation":4,"terms":[{"lambda":[1],"coeff":"1"},{"lambda":[2],"coeff":"1"}]})");
    const auto r = run({"plethysm", g, f, "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out.find("f(2) = 1\n") != std::string::npos);
    CHECK(r.out.find("f(3) = 3\n") != std::string::npos);
    CHECK(r.out.find("f(4) = 3\n") != std::string::npos);

    const auto c = run({"compose1", g, f});
    CHECK(c.status == 0);
    const auto j = pleth::io::parse_json(c.out);
    CHECK(j["coefficients"] == pleth::io::parse_json(R"(["0","1","3","3"])"));

    const auto lowered = run({"-W", "3", "plethysm", g, f, "--format", "text"});
    CHECK(lowered.status == 0);
    CHECK(lowered.out.find("f(4)") == std::string::npos);
    CHECK(run({"-W", "5", "plethysm", g, f}).status == 3);

    const auto with_constant = dir.file("c.json", R"({"truncation":4,"terms":[{"lambda":[],"coeff":"1"}]})");
    CHECK(run({"plethysm", g, with_constant}).status == 3);
    CHECK(run({"plethysm", g, dir.file("bad.json", "{")}).status == 2);
    CHECK(run({"plethysm", g, (dir.path / "missing.json").string()}).status == 2);
}

TEST_CASE("delta, bell and placements") {
    auto r = run({"delta", "1", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "1 * A(1) (x) A(1)\n");
    r = run({"delta", "0,1"});
    CHECK(r.status == 0);
    CHECK(pleth::io::parse_json(r.out)["terms"].size() == 2);
    CHECK(run({"delta", "0"}).status == 3);
    CHECK(run({"delta", "1,x"}).status == 2);
    CHECK(run({"delta"}).status == 2);

    r = run({"bell", "3", "2", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "3 * A(1) A(2)\n");

    r = run({"placements", "3", "2", "{(1),(2)}"});
    CHECK(r.status == 0);
    CHECK(pleth::io::parse_json(r.out)["count"] == 2);
    CHECK(run({"placements", "3", "2", "{(1),"}).status == 2);
}

TEST_CASE("green") {
    auto r = run({"-W", "2", "green"});
    CHECK(r.status == 0);
    CHECK(pleth::io::parse_json(r.out)["equal"] == true);
    r = run({"green", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out.find("equal to Delta(A)") != std::string::npos);
}

TEST_CASE("partition dictionary") {
    auto r = run({"partition", "commute", "[[1,2],[3]]", "[[1,3],[2]]", "--format", "text"});
    CHECK(r.status == 0);
    CHECK(r.out == "false\n");
    r = run({"partition", "independent", "[[1,2],[3,4]]", "[[1,3],[2,4]]", "--format", "text"});
    CHECK(r.out == "true\n");
    r = run({"partition", "join", "[[1,2],[3]]", "[[1,3],[2]]"});
    CHECK(pleth::io::parse_json(r.out)["result"] == pleth::io::parse_json("[[1,2,3]]"));
    r = run({"partition", "meet", "[[1,2],[3]]", "[[1,3],[2]]"});
    CHECK(pleth::io::parse_json(r.out)["result"] == pleth::io::parse_json("[[1],[2],[3]]"));
    r = run({"partition", "transversal", "[[1,2,3,4]]", "[[1,2],[3,4]]", "[[1,3],[2,4]]", "--format", "text"});
    CHECK(r.out == "true\n");
    CHECK(run({"partition", "transversal", "[[1,2,3,4]]", "[[1,2],[3,4]]"}).status == 2);
    CHECK(run({"partition", "join", "[[1,2],[3]]", "[[1,2],[4]]"}).status == 3);
    CHECK(run({"partition", "join", "[[1,2],[2]]", "[[1,2]]"}).status == 3);
    CHECK(run({"partition", "split", "[[1]]", "[[1]]"}).status == 2);
}

TEST_CASE("verify suites") {
    CHECK(run({"-W", "3", "--seed", "1", "verify", "duality"}).status == 0);
    CHECK(run({"-n", "3", "verify", "objective"}).status == 0);
    CHECK(run({"-n", "4", "verify", "simplicial"}).status == 0);
    const auto r = run({"-n", "3", "verify", "partitions"});
    CHECK(r.status == 0);
    CHECK(pleth::io::parse_json(r.out)["passed"] == true);
    CHECK(run({"verify", "nothing"}).status == 2);
}

TEST_CASE("determinism and output files") {
    const auto a = run({"--seed", "7", "verify", "duality"});
    const auto b = run({"--seed", "7", "verify", "duality"});
    CHECK(a.out == b.out);
    CHECK(run({"delta", "2,1"}).out == run({"delta", "2,1"}).out);

    TempDir dir;
    const auto path = (dir.path / "delta.json").string();
    const auto r = run({"delta", "2,1", "-o", path});
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(pleth::io::read_file(path) == run({"delta", "2,1"}).out);
}

TEST_CASE("usage") {
    CHECK(run({"--help"}).status == 0);
    CHECK(run({}).status == 2);
    CHECK(run({"--format", "xml", "delta", "1"}).status == 2);
}
