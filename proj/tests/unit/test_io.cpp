#include <doctest.h>

#include <filesystem>

#include "generators.hpp"
#include "polyknot/polyknot.hpp"

using namespace polyknot;
using polyknot::testing::random_knot;
using polyknot::testing::random_sequence;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_knot(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError(0, "", "");
}

}  // namespace

TEST_CASE("knot documents round trip byte for byte") {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    PolynomialKnot k = random_knot(rng, 4, 6, 5);
    std::string text = serialize_knot(k);
    PolynomialKnot back = parse_knot(text);
    CHECK(back == k);
    CHECK(serialize_knot(back) == text);
  }
  PolynomialKnot iv = make_knot(1, {{Index(1, 1), Scalar(Interval(Rational(1, 3), Rational(1, 2)))}});
  CHECK(parse_knot(serialize_knot(iv)) == iv);
}

TEST_CASE("knot documents accept exact decimals and integers") {
  PolynomialKnot k = parse_knot(R"({"dimension": 2, "coefficients": [
    {"i": 1, "j": 1, "value": "0.25"},
    {"i": 2, "j": 3, "value": 7}
  ]})");
  CHECK(k.table().at(Index(1, 1)) == Scalar(Rational(1, 4)));
  CHECK(k.table().at(Index(2, 3)) == Scalar(7));
}

TEST_CASE("parse errors carry the line and the field") {
  ParseError e = parse_error("{\n  \"dimension\": 2,\n  \"coefficients\": [\n    {\"i\": 3, \"j\": 1, \"value\": \"1\"}\n  ]\n}\n");
  CHECK(e.line() == 4);
  CHECK(e.field() == "/coefficients/0/i");

  e = parse_error("{\"dimension\": 1, \"coefficients\": [{\"i\": 1, \"j\": 1, \"value\": 0.5}]}");
  CHECK(e.field() == "/coefficients/0/value");

  e = parse_error("{\"dimension\": 1, \"coefficients\": []}");
  CHECK(e.field() == "/coefficients");

  e = parse_error("{\"dimension\": 1,\n \"coefficients\": [{\"i\": 1, \"j\": 1, \"value\": \"1\"},\n {\"i\": 1, \"j\": 1, \"value\": \"2\"}]}");
  CHECK(e.line() == 3);
  CHECK(e.field() == "/coefficients/1");

  e = parse_error("{\"dimension\": 1, \"coefficients\": [{\"i\": 1, \"j\": -1, \"value\": \"1\"}]}");
  CHECK(e.field() == "/coefficients/0/j");

  e = parse_error("{\"coefficients\": []}");
  CHECK(e.field() == "document");

  e = parse_error("{\"dimension\": 1,\n\n \"coefficients\": [");
  CHECK(e.line() == 3);

  e = parse_error("{\"dimension\": 1, \"coefficients\": [{\"i\": 1, \"j\": 1, \"value\": \"1/0\"}]}");
  CHECK(e.field() == "/coefficients/0/value");
}

TEST_CASE("sequence documents") {
  Rng rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    SequencePoint x = random_sequence(rng, 8);
    std::string text = serialize_sequence(x);
    CHECK(parse_sequence(text) == x);
    CHECK(serialize_sequence(parse_sequence(text)) == text);
  }
  CHECK_THROWS_AS(parse_sequence("{\"entries\": [{\"i\": 1, \"value\": \"0\"}]}"), ParseError);
  CHECK_THROWS_AS(parse_sequence("{\"entries\": [{\"i\": 1, \"value\": \"1\"}, {\"i\": 1, \"value\": \"2\"}]}"), ParseError);
}

TEST_CASE("trace documents") {
  PolynomialKnot k = certify(make_knot(2, {{Index(1, 3), Scalar(1)}, {Index(1, 1), Scalar(1)}, {Index(2, 2), Scalar(1)}}));
  HomotopyTrace tr = trace_linearization(k, 4);
  std::string text = serialize_trace(tr);
  HomotopyTrace back = parse_trace(text);
  CHECK(back.samples.size() == 4);
  CHECK(serialize_trace(back) == text);

  HomotopyTrace ct = contract_trace(SequencePoint({Scalar(1), Scalar(2)}), 3);
  CHECK(serialize_trace(parse_trace(serialize_trace(ct))) == serialize_trace(ct));
}

TEST_CASE("certificate documents") {
  CertCertificate c = certify_embedding(make_knot(2, {{Index(1, 3), Scalar(1)}}));
  std::string text = serialize_certificate(c);
  CHECK(text.find("\"verdict\": \"Refuted\"") != std::string::npos);
  CHECK(text.find("\"s\": \"0\"") != std::string::npos);
}

TEST_CASE("atomic file writes") {
  auto dir = std::filesystem::temp_directory_path() / "polyknot_io_test";
  std::filesystem::create_directories(dir);
  std::string path = (dir / "k.json").string();
  write_text_file_atomic(path, "abc\n");
  CHECK(read_text_file(path) == "abc\n");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK_THROWS_AS(write_text_file_atomic((dir / "missing" / "k.json").string(), "x"), Error);
  CHECK_THROWS_AS(read_text_file((dir / "nope.json").string()), Error);
  std::filesystem::remove_all(dir);
}
