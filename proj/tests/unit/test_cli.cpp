#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "polyknot/polyknot.hpp"

namespace fs = std::filesystem;
using namespace polyknot;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "polyknot");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return (fs::path(POLYKNOT_FIXTURES) / name).string(); }

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("polyknot_cli_" + std::to_string(std::rand()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const char* name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("verify exit codes") {
  CHECK(run({"verify", fixture("line3.json")}).code == cli::kOk);

  Result sq = run({"verify", fixture("square.json")});
  CHECK(sq.code == cli::kFailure);
  CHECK(has(sq.out, "witness: s = "));

  Result tref = run({"verify", fixture("trefoil.json"), "--oracle"});
  CHECK(tref.code == cli::kOk);
  CHECK(has(tref.out, "oracle: no failure found"));
  CHECK(has(tref.out, "consistent"));

  Result wig = run({"verify", fixture("wiggly_interval.json")});
  CHECK(wig.code == cli::kInconclusive);
  CHECK(has(wig.out, "Inconclusive (depth"));
}

TEST_CASE("verify errors") {
  Result bad = run({"verify", fixture("bad_dimension.json")});
  CHECK(bad.code == cli::kDataError);
  CHECK(has(bad.err, "line 4"));
  CHECK(has(bad.err, "/coefficients/0/i"));
  CHECK(run({"verify", fixture("truncated.json")}).code == cli::kDataError);
  CHECK(run({"verify", fixture("no_such_file.json")}).code == cli::kNoInput);
  CHECK(run({"verify"}).code == cli::kUsage);
  CHECK(run({"verify", fixture("line3.json"), "--depth", "0"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify writes a certificate") {
  TempDir tmp;
  CHECK(run({"verify", fixture("cube.json"), "--out", tmp / "c.json"}).code == cli::kFailure);
  std::string cert = read_text_file(tmp / "c.json");
  CHECK(has(cert, "\"verdict\": \"Refuted\""));
}

TEST_CASE("distance") {
  Result r = run({"distance", fixture("line1.json"), fixture("psi.json"), "--metric", "inf"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "1\n");
  CHECK(run({"distance", fixture("psi.json"), fixture("psi.json")}).out == "0\n");
  Result s5 = run({"distance", fixture("shifted.json"), fixture("plain.json"), "--metric", "2"});
  CHECK(s5.code == cli::kOk);
  CHECK(has(s5.out, "[2.2360679"));
  CHECK(run({"distance", fixture("seq.json"), fixture("seq_far.json"), "--metric", "1"}).out == "12\n");
  CHECK(run({"distance", fixture("psi.json"), fixture("psi.json"), "--metric", "0.5"}).code == cli::kUsage);
  CHECK(run({"distance", fixture("psi.json"), fixture("seq.json")}).code == cli::kUsage);
}

TEST_CASE("project and embed-linear") {
  Result p = run({"project", fixture("trefoil.json")});
  CHECK(p.code == cli::kOk);
  CHECK(parse_sequence(p.out) == SequencePoint({Scalar(-3), Scalar(0), Scalar(-10)}));
  CHECK(run({"project", fixture("square.json")}).code == cli::kFailure);
  Result e = run({"embed-linear", fixture("seq.json")});
  CHECK(e.code == cli::kOk);
  CHECK(parse_knot(e.out) == make_knot(2, {{Index(1, 1), Scalar(2)}, {Index(2, 1), Scalar(5)}}));
}

TEST_CASE("linearize and contract") {
  TempDir tmp;
  CHECK(run({"linearize", fixture("trefoil.json"), "--steps", "11", "--out", tmp / "t.json"}).code == cli::kOk);
  HomotopyTrace tr = parse_trace(read_text_file(tmp / "t.json"));
  REQUIRE(tr.samples.size() == 11);
  for (const auto& s : tr.samples) CHECK(s.verdict == "Certified");
  CHECK(run({"linearize", fixture("square.json")}).code == cli::kFailure);
  CHECK(run({"linearize", fixture("trefoil.json"), "--steps", "1"}).code == cli::kUsage);

  Result c = run({"contract", fixture("seq_far.json"), "--steps", "5"});
  CHECK(c.code == cli::kOk);
  HomotopyTrace ct = parse_trace(c.out);
  CHECK(std::get<SequencePoint>(ct.samples.back().state) == SequencePoint({Scalar(1)}));
}

TEST_CASE("witness reports") {
  Result a = run({"witness", "--kind", "inf-r", "--r", "2", "--delta", "0.3"});
  CHECK(a.code == cli::kOk);
  CHECK(has(a.out, "\"k\": 12"));
  CHECK(has(a.out, "\"ok\": true"));

  Result p = run({"witness", "--kind", "p-inf", "--constraint", "1,1,0,2"});
  CHECK(p.code == cli::kOk);
  CHECK(has(p.out, "\"delta\": \"1/2\""));
  CHECK(has(p.out, "\"passed\": 50"));

  Result b = run({"witness", "--kind", "s-box", "--epsilon", "1"});
  CHECK(b.code == cli::kOk);
  CHECK(has(b.out, "\"delta\": \"1/2\""));
  CHECK(has(b.out, "symmetric-power"));

  CHECK(run({"witness", "--kind", "p-inf", "--k", "4"}).code == cli::kUsage);
  CHECK(run({"witness", "--kind", "r-s", "--epsilon", "1", "--r", "1", "--s", "2"}).code == cli::kUsage);
  CHECK(run({"witness", "--kind", "nope"}).code == cli::kUsage);
  CHECK(run({"witness", "--kind", "p-inf", "--constraint", "1,1,3,2"}).code == cli::kUsage);
  CHECK(run({"witness", "--kind", "p-inf", "--constraint", "1,1,2,3"}).code == cli::kFailure);

  std::vector<std::string> args{"witness", "--kind", "r-s", "--epsilon", "3", "--r", "3", "--s", "3/2",
                                "--point", fixture("shifted.json"), "--knot", fixture("plain.json"), "--seed", "9"};
  Result first = run(args), second = run(args);
  CHECK(first.code == cli::kOk);
  CHECK(first.out == second.out);
  args.back() = "10";
  CHECK(run(args).out != first.out);
}

TEST_CASE("witness writes to a file") {
  TempDir tmp;
  CHECK(run({"witness", "--kind", "s-box", "--delta", "1/2", "--out", tmp / "w.json"}).code == cli::kOk);
  CHECK(has(read_text_file(tmp / "w.json"), "\"k\": 9"));
}

TEST_CASE("plot") {
  Result csv = run({"plot", fixture("plain.json"), "--range", "-2", "2", "--samples", "401"});
  CHECK(csv.code == cli::kOk);
  std::istringstream lines(csv.out);
  std::string header, line;
  std::getline(lines, header);
  CHECK(header == "t,x1,x2");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 401);
  CHECK(has(csv.out, "\n-2,-2,-8\n"));

  Result svg = run({"plot", fixture("trefoil.json"), "--format", "svg", "--components", "1", "2"});
  CHECK(svg.code == cli::kOk);
  std::size_t count = 0;
  for (std::size_t pos = svg.out.find("<polyline"); pos != std::string::npos; pos = svg.out.find("<polyline", pos + 1)) ++count;
  CHECK(count == 1);

  Result iv = run({"plot", fixture("wiggly_interval.json"), "--samples", "3"});
  CHECK(has(iv.out, "x1_pm"));

  CHECK(run({"plot", fixture("trefoil.json"), "--format", "svg"}).code == cli::kUsage);
  CHECK(run({"plot", fixture("plain.json"), "--range", "2", "-2"}).code == cli::kUsage);
  CHECK(run({"plot", fixture("plain.json"), "--components", "3"}).code == cli::kUsage);
}

TEST_CASE("plot writes one frame per trace sample") {
  TempDir tmp;
  REQUIRE(run({"linearize", fixture("trefoil.json"), "--steps", "6", "--out", tmp / "t.json"}).code == cli::kOk);
  std::string frames = tmp / "frames";
  CHECK(run({"plot", tmp / "t.json", "--format", "svg", "--components", "1", "2", "--out", frames}).code == cli::kOk);
  for (int i = 0; i < 6; ++i) CHECK(fs::exists(fs::path(frames) / ("frame_000" + std::to_string(i) + ".svg")));
  CHECK_FALSE(fs::exists(fs::path(frames) / "frame_0006.svg"));
  CHECK(run({"plot", tmp / "t.json"}).code == cli::kUsage);
}

TEST_CASE("failed runs leave no output file behind") {
  TempDir tmp;
  CHECK(run({"project", fixture("square.json"), "--out", tmp / "p.json"}).code == cli::kFailure);
  CHECK_FALSE(fs::exists(tmp / "p.json"));
  CHECK(run({"linearize", fixture("square.json"), "--out", tmp / "t.json"}).code == cli::kFailure);
  CHECK_FALSE(fs::exists(tmp / "t.json"));
}
