#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cript/cli.hpp"
#include "support/fixtures.hpp"

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cript::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("cript-cli-" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

}  // namespace

TEST_CASE("encode prints the full and minimal codes") {
  TempDir dir;
  const auto o = dir.write("o.txt", cript::testing::kGlyphO);
  const Result r = run({"encode", o});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["minimal"] == cript::testing::kCodeO);
  CHECK(doc["width"] == 10);
  CHECK(doc["height"] == 8);
  CHECK(doc["bands"].size() == 9);
  CHECK(doc["bands"][0]["level"] == 0.5);
  CHECK(run({"encode", o}).out == r.out);  // byte-identical reruns
}

TEST_CASE("encode reads stdin and emits one line per input") {
  TempDir dir;
  const auto a = dir.write("a.pbm", "P1\n2 2\n1 1\n1 1\n");
  const Result r = run({"encode", a, "-"}, "#\n");
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  CHECK(json::parse(first)["minimal"] == "BB;DD");
  CHECK(json::parse(second)["width"] == 1);
}

TEST_CASE("validate") {
  const Result ok = run({"validate"}, "BB;DD");
  CHECK(ok.code == 0);
  CHECK(json::parse(ok.out)["valid"] == true);

  const Result bad = run({"validate"}, "BB;CDDC;DD");
  CHECK(bad.code == 1);
  const json doc = json::parse(bad.out);
  CHECK(doc["valid"] == false);
  REQUIRE(doc["violations"].size() == 1);
  CHECK(doc["violations"][0]["rule"] == "balance");
  CHECK(doc["violations"][0]["string"] == 0);

  const Result alpha = run({"validate"}, "BB;DX");
  CHECK(alpha.code == 1);
  CHECK(json::parse(alpha.out)["violations"][0]["rule"] == "alphabet");
}

TEST_CASE("encode, components and validate chain") {
  TempDir dir;
  const auto speck = dir.write("speck.txt", cript::testing::kGlyphASpeck);
  const Result enc = run({"encode", speck});
  REQUIRE(enc.code == 0);
  const Result comps = run({"components"}, enc.out);
  REQUIRE(comps.code == 0);
  const json list = json::parse(comps.out);
  REQUIRE(list.is_array());
  CHECK(list.size() == 2);
  const Result val = run({"validate"}, comps.out);
  CHECK(val.code == 0);
  CHECK(json::parse(val.out)["valid"] == true);
}

TEST_CASE("realize") {
  const Result svg = run({"realize", "--svg"}, "BB;DD");
  REQUIRE(svg.code == 0);
  CHECK(svg.out.find("<svg") != std::string::npos);
  CHECK(svg.out.find("evenodd") != std::string::npos);

  const Result pbm = run({"realize", "--raster", "--format", "pbm", "--ppu", "4"}, cript::testing::kCodeO);
  REQUIRE(pbm.code == 0);
  CHECK(pbm.out.rfind("P1\n", 0) == 0);
  const Result back = run({"encode"}, pbm.out);
  CHECK(json::parse(back.out)["minimal"] == cript::testing::kCodeO);

  const Result invalid = run({"realize"}, "BB;CDDC;DD");
  CHECK(invalid.code == 1);
  CHECK(json::parse(invalid.out)["valid"] == false);
}

TEST_CASE("simplify") {
  TempDir dir;
  const auto speck = dir.write("speck.txt", cript::testing::kGlyphASpeck);
  const Result r = run({"simplify", "--min-gap", "2", speck});
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["simplified"] == cript::testing::kCodeA);
  CHECK(doc["deleted_components"] == 1);
  CHECK(doc["min_gap"] == 2);
  CHECK(run({"simplify", "--min-gap", "0", speck}).code == 2);
}

TEST_CASE("dict-build and match") {
  TempDir dir;
  const auto o = dir.write("o.txt", cript::testing::kGlyphO);
  const auto a = dir.write("a.txt", cript::testing::kGlyphA);
  const auto sq = dir.write("sq.txt", cript::testing::kSquare);
  const std::string dict = (dir.path / "glyphs.dict").string();
  REQUIRE(run({"dict-build", "--dict", dict, "O=" + o, a}).code == 0);
  CHECK(json::parse(run({"dict-build", "--dict", dict, "Q=" + o}).out)["entries"] == 2);

  const Result m = run({"match", "--dict", dict, "--top-k", "1", sq});
  REQUIRE(m.code == 0);
  const json doc = json::parse(m.out);
  CHECK(doc["code"] == "BB;DD");
  REQUIRE(doc["matches"].size() == 1);
  CHECK(doc["matches"][0]["distance"] == 10);
  CHECK(doc["matches"][0]["labels"] == json::array({"O", "Q"}));
  CHECK(run({"match", sq}).code == 2);  // --dict is required
}

TEST_CASE("errors map to exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"encode", "--bogus"}).code == 2);
  CHECK(run({"encode", "/nonexistent/file.pbm"}).code == 2);
  const Result ragged = run({"encode", "--format", "pbm"}, "P1\n2 2\n1 0 1\n");
  CHECK(ragged.code == 2);
  CHECK(ragged.err.find("ragged") != std::string::npos);
  CHECK(run({"validate"}, "BB;?D").code == 1);
  CHECK(run({"components"}, "BB;CDDC;DD").code == 1);
}

TEST_CASE("output file option") {
  TempDir dir;
  const std::string out = (dir.path / "out.json").string();
  REQUIRE(run({"validate", "-o", out}, "BB;DD").code == 0);
  std::ifstream file(out);
  CHECK(json::parse(file)["valid"] == true);
}
