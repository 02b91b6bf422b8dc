#include <doctest.h>

#include <filesystem>
#include <random>

#include "pleth/errors.hpp"
#include "pleth/io.hpp"
#include "pleth/verify.hpp"

using namespace pleth;

namespace {
PartitionVector pv(std::initializer_list<std::uint32_t> raw) { return PartitionVector::canonical(raw); }
}  // namespace

TEST_CASE("series JSON") {
    const auto s = TruncatedSeries::from_f_coefficients({{pv({}), 1}, {pv({1}), 1}, {pv({2}), Rational(-3, 2)}}, 4);
    const auto j = io::to_json(s);
    CHECK(io::dump(j) == "{\n  \"truncation\": 4,\n  \"normalization\": \"f\",\n  \"terms\": [\n    {\n      \"lambda\": [],\n"
                         "      \"coeff\": \"1\"\n    },\n    {\n      \"lambda\": [\n        1\n      ],\n      \"coeff\": \"1\"\n"
                         "    },\n    {\n      \"lambda\": [\n        2\n      ],\n      \"coeff\": \"-3/2\"\n    }\n  ]\n}\n");
    CHECK(io::series_from_json(j) == s);
    const auto raw = io::parse_json(R"({"truncation":4,"normalization":"raw","terms":[{"lambda":[2],"coeff":"1/2"}]})");
    CHECK(io::series_from_json(raw).coefficient(pv({2})) == 1);
    std::mt19937_64 rng(4);
    for (int i = 0; i < 10; ++i) {
        const auto r = verify::random_series(rng, 5, true);
        CHECK(io::series_from_json(io::parse_json(io::dump(io::to_json(r)))) == r);
    }
}

TEST_CASE("series JSON errors") {
    CHECK_THROWS_AS(io::parse_json("{"), FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"terms":[]})")), FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":0,"terms":[]})")), FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":2,"normalization":"g","terms":[]})")),
                    FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":2,"terms":[{"lambda":[-1],"coeff":"1"}]})")),
                    FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":2,"terms":[{"lambda":[1],"coeff":"1/0"}]})")),
                    FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":2,"terms":[{"lambda":[3],"coeff":"1"}]})")),
                    FormatError);
    CHECK_THROWS_AS(io::series_from_json(io::parse_json(R"({"truncation":2,"terms":[{"lambda":[1]}]})")), FormatError);
}

TEST_CASE("tensor and element JSON round trip") {
    for (const auto& sigma : enumerate_vectors(4, WeightMode::upto)) {
        const auto t = delta_generator(sigma);
        CHECK(io::tensor_from_json(io::parse_json(io::dump(io::to_json(t)))) == t);
        const auto b = bell(sigma, pv({1}));
        CHECK(io::element_from_json(io::parse_json(io::dump(io::to_json(b)))) == b);
    }
    const auto j = io::to_json(delta_generator(pv({0, 1})));
    CHECK(j.dump() == R"({"terms":[{"left":["1"],"right":["0,1"],"coeff":"1"},{"left":["0,1"],"right":["1"],"coeff":"1"}]})");
    CHECK_THROWS_AS(io::tensor_from_json(io::parse_json(R"({"terms":[{"left":["0"],"right":[],"coeff":"1"}]})")),
                    FormatError);
}

TEST_CASE("diagram JSON") {
    const auto j = io::parse_json(R"({"t01": 3, "t00": 2, "down": [0,0,1], "t11": 1, "right": [0,0,0]})");
    const auto c = io::t1_from_json(j);
    CHECK(c.t01() == 3);
    CHECK(c.connected());
    CHECK(io::t1_from_json(io::to_json(c)) == c);
    CHECK_THROWS_AS(io::t1_from_json(io::parse_json(R"({"t01": 2, "t00": 2, "down": [0,0,1], "t11": 1, "right": [0,0,0]})")),
                    FormatError);
    CHECK_THROWS_AS(io::t1_from_json(io::parse_json(R"({"t01": 3, "t00": 3, "down": [0,0,1], "t11": 1, "right": [0,0,0]})")),
                    PreconditionError);
}

TEST_CASE("partition JSON") {
    std::vector<std::int64_t> labels;
    const auto p = io::partition_from_json(io::parse_json("[[1,2],[3]]"), &labels);
    CHECK(p == Partition(3, {{0, 1}, {2}}));
    CHECK(labels == std::vector<std::int64_t>{1, 2, 3});
    CHECK(io::to_json(p).dump() == "[[0,1],[2]]");
    CHECK(io::to_json(p, labels).dump() == "[[1,2],[3]]");
    CHECK(io::partition_from_json(io::to_json(p)) == p);
    CHECK_THROWS_AS(io::partition_from_json(io::parse_json("[[1,2],[2]]")), PreconditionError);
    CHECK_THROWS_AS(io::partition_from_json(io::parse_json("[1,2]")), FormatError);
    CHECK_THROWS_AS(io::partition_from_json(io::parse_json("[[1,\"a\"]]")), FormatError);
    CHECK(io::to_text(p) == "{{0,1},{2}}");
}

TEST_CASE("multiset text") {
    CHECK(io::parse_multiset("{(1),(2)}") == VectorMultiset{pv({1}), pv({2})});
    CHECK(io::parse_multiset("{ (0,1) , (1) }") == VectorMultiset{pv({1}), pv({0, 1})});
    CHECK(io::parse_multiset("{}") == VectorMultiset{});
    CHECK_THROWS_AS(io::parse_multiset("(1)"), FormatError);
    CHECK_THROWS_AS(io::parse_multiset("{(1),}"), FormatError);
    CHECK_THROWS_AS(io::parse_multiset("{(0)}"), FormatError);
    CHECK_THROWS_AS(io::parse_multiset("{(1)(2)}"), FormatError);
    CHECK_THROWS_AS(io::parse_multiset("{(1}"), FormatError);
}

TEST_CASE("text rendering") {
    CHECK(io::to_text(bell(pv({3}), pv({2}))) == "3 * A(1) A(2)\n");
    CHECK(io::to_text(PTensor::one()) == "1 * 1 (x) 1\n");
    CHECK(io::to_text(PTensor()) == "0\n");
    CHECK(io::to_text(TruncatedSeries::variable(2, 3)) == "truncation 3\nf(0,1) = 2\n");
}

TEST_CASE("atomic file writes") {
    const auto dir = std::filesystem::temp_directory_path() / "pleth_io_test";
    std::filesystem::create_directories(dir);
    const auto path = dir / "out.json";
    io::write_file_atomic(path, "first\n");
    io::write_file_atomic(path, "second\n");
    CHECK(io::read_file(path) == "second\n");
    CHECK_FALSE(std::filesystem::exists(dir / "out.json.tmp"));
    CHECK_THROWS_AS(io::read_file(dir / "missing.json"), FormatError);
    CHECK_THROWS_AS(io::write_file_atomic(dir / "no_such_dir" / "x.json", "x"), FormatError);
    std::filesystem::remove_all(dir);
}
