#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sepclass/cli.hpp"
#include "sepclass/json_io.hpp"

using namespace sepclass;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_CASE("count examples") {
  auto r = run({"count", "--class", "P", "--a", "1", "--b", "2", "--k", "2", "--r", "1", "--n", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "11\n");
  r = run({"count", "--class", "Lr", "--r", "2", "--n", "4"});
  CHECK(r.code == 0);
  CHECK(r.out == "7\n");
}

TEST_CASE("verify example as JSON") {
  auto r = run({"verify", "--class", "Pprime", "--a", "1", "--b", "2", "--k", "2", "--r", "2", "--trunc", "25",
                "--format", "json"});
  CHECK(r.code == 0);
  const Json j = parse_json(r.out);
  CHECK(j.at("status") == "match");
  CHECK(j.at("N") == 25);
  CHECK(j.at("first_discrepancy").is_null());
  CHECK(j.at("spec") == Json{{"class", "Pprime"}, {"a", 1}, {"b", 2}, {"k", 2}, {"r", 2}});
  CHECK(j.contains("elapsed_ms"));
}

TEST_CASE("plain reports start with MATCH or MISMATCH") {
  auto r = run({"verify", "--class", "Fbar", "--trunc", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("MATCH ", 0) == 0);
  r = run({"verify", "--class", "Lr", "--r", "2", "--trunc", "10", "--literal"});
  CHECK(r.code == 1);
  CHECK(r.out.rfind("MISMATCH ", 0) == 0);
  CHECK(r.out.find("q^1 z^1") != std::string::npos);
}

TEST_CASE("exit code 2 on bad arguments") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count", "--class", "P", "--a", "1", "--b", "2", "--k", "2", "--n", "7"}).code == 2);  // no r
  CHECK(run({"count", "--class", "P", "--a", "2", "--b", "1", "--k", "2", "--r", "1", "--n", "7"}).code == 2);
  CHECK(run({"count", "--class", "Fbar", "--r", "2", "--n", "3"}).code == 2);  // extraneous r
  CHECK(run({"count", "--class", "Fbar", "--n", "-3"}).code == 2);
  CHECK(run({"count", "--class", "Fbar", "--n", "x"}).code == 2);
  CHECK(run({"count", "--class", "Fbar", "--n", "3", "--format", "xml"}).code == 2);
  CHECK(run({"series", "--class", "Fbar", "--trunc", "201"}).code == 2);
  CHECK(run({"series", "--class", "G", "--d", "1", "--k", "1", "--r", "2", "--h", "1", "--s", "2", "--trunc", "201",
             "--max-trunc", "300"}).code == 0);
  CHECK(run({"decompose", "--class", "P", "--a", "1", "--b", "2", "--k", "2", "--r", "1", "--parts", "2,2"}).code == 2);
  CHECK(run({"decompose", "--class", "Fbar", "--parts", "3',1", "--format", "csv"}).code == 2);
  CHECK(run({"verify", "--class", "Fbar", "--literal"}).code == 2);
  CHECK(run({"identity", "--id", "cor2.3", "--k", "2", "--r", "3", "--h", "4", "--s", "2"}).code == 2);
  const auto r = run({"count", "--class", "Q", "--n", "3"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("help exits 0") { CHECK(run({"--help"}).code == 0); }

TEST_CASE("count equals the number of listed rows") {
  const std::vector<std::vector<std::string>> specs = {
      {"--class", "P", "--a", "1", "--b", "2", "--k", "3", "--r", "2"},
      {"--class", "R", "--a", "2", "--b", "3", "--c", "4", "--k", "4"},
      {"--class", "Lbar"},
      {"--class", "Fr", "--r", "3"},
  };
  for (const auto& spec : specs) {
    for (const char* n : {"0", "5", "11"}) {
      auto args = spec;
      args.insert(args.end(), {"--n", n});
      auto c = args, l = args, csv = args;
      c.insert(c.begin(), "count"), l.insert(l.begin(), "list"), csv.insert(csv.begin(), "list");
      csv.insert(csv.end(), {"--format", "csv"});
      const auto count = run(c), list = run(l), rows = run(csv);
      REQUIRE(count.code == 0);
      CHECK(std::stoul(count.out) == lines(list.out));
      CHECK(lines(rows.out) == lines(list.out));
    }
  }
}

TEST_CASE("list JSON round trip is byte-identical") {
  for (std::vector<std::string> args : {std::vector<std::string>{"list", "--class", "Fbar", "--n", "6"},
                                        {"list", "--class", "Lr", "--r", "2", "--n", "7"},
                                        {"list", "--class", "Pprime", "--a", "1", "--b", "2", "--k", "2", "--r", "2",
                                         "--n", "9"},
                                        {"basis", "--class", "R", "--a", "1", "--b", "2", "--c", "3", "--k", "4",
                                         "--m", "3"}}) {
    args.insert(args.end(), {"--format", "json"});
    const auto r = run(args);
    REQUIRE(r.code == 0);
    Json arr = parse_json(r.out);
    Json again = Json::array();
    for (const auto& item : arr) again.push_back(to_json(class_object_from_json(item)));
    CHECK(again.dump() + "\n" == r.out);
  }
}

TEST_CASE("emit formats") {
  auto r = run({"list", "--class", "P", "--a", "1", "--b", "2", "--k", "2", "--r", "1", "--n", "0", "--format", "json"});
  CHECK(r.out == "[{\"parts\":[]}]\n");
  // 1 + q as csv
  r = run({"series", "--class", "G", "--d", "1", "--k", "1", "--r", "2", "--h", "1", "--s", "2", "--trunc", "5",
           "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == "1,1\n2,1\n");
  r = run({"identity", "--id", "cauchy1", "--s", "2", "--trunc", "3", "--format", "csv"});
  CHECK(r.code == 2);
  r = run({"list", "--class", "Fbar", "--n", "2", "--format", "csv"});
  CHECK(r.out == "2\n2'\n1,1\n1',1\n");
  r = run({"decompose", "--class", "Fbar", "--parts", "3',1"});
  CHECK(r.out == "basis (1',1) padding (2,0)\n");
  r = run({"decompose", "--class", "P", "--a", "1", "--b", "2", "--k", "2", "--r", "1", "--parts", "7,5,3,1",
           "--format", "json"});
  CHECK(r.out == "{\"basis\":{\"parts\":[1,1,1,1]},\"padding\":[6,4,2,0]}\n");
  r = run({"series", "--class", "Fr", "--r", "2", "--trunc", "4", "--route", "closed", "--format", "json"});
  const Series closed = series_from_json(parse_json(r.out));
  r = run({"series", "--class", "Fr", "--r", "2", "--trunc", "4", "--route", "basis", "--format", "json"});
  CHECK(series_from_json(parse_json(r.out)) == closed);
  CHECK(closed.q_coefficients().at(4) == 8);
}

TEST_CASE("identity subcommand") {
  auto r = run({"identity", "--id", "cor2.3", "--k", "2", "--r", "3", "--h", "7", "--s", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("MATCH", 0) == 0);
  r = run({"identity", "--id", "thm2.2", "--d", "1", "--k", "1", "--r", "2", "--h", "1", "--s", "2", "--trunc", "10",
           "--format", "json"});
  CHECK(r.code == 0);
  CHECK(parse_json(r.out).at("spec").at("identity") == "thm2.2");
  CHECK(run({"identity", "--id", "bogus"}).code == 2);
}

TEST_CASE("--out writes the payload to a file") {
  const auto path = std::filesystem::temp_directory_path() / "sepclass_cli_out.txt";
  std::filesystem::remove(path);
  auto r = run({"count", "--class", "Fbar", "--n", "4", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "12\n");
  std::filesystem::remove(path);
}

TEST_CASE("grid verification") {
  auto r = run({"verify", "--grid", SEPCLASS_SOURCE_DIR "/config/verify_grid.json", "--trunc", "12", "--format", "json"});
  CHECK(r.code == 0);
  const Json arr = parse_json(r.out);
  CHECK(arr.size() == 44);
  for (const auto& rep : arr) CHECK(rep.at("status") == "match");
  CHECK(run({"verify", "--grid", "/nonexistent/grid.json"}).code == 2);
}
