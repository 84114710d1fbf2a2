#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "sepclass/golden.hpp"
#include "sepclass/grid.hpp"
#include "sepclass/json_io.hpp"

using namespace sepclass;
namespace fs = std::filesystem;

namespace {

const fs::path kCorpus = fs::path(SEPCLASS_SOURCE_DIR) / "golden";

fs::path scratch(const char* name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("committed corpus matches every route") {
  const auto grid = load_grid(SEPCLASS_SOURCE_DIR "/config/verify_grid.json");
  for (const auto& c : compare_golden(kCorpus, grid.specs, grid.trunc)) {
    CAPTURE(c.spec.name());
    CHECK_MESSAGE(c.ok, c.message);
  }
}

TEST_CASE("corpus layout") {
  CHECK(golden_path("g", ClassSpec::P(1, 2, 2, 1), 25) == fs::path("g/P/a1_b2_k2_r1/coeffs_N25.json"));
  CHECK(golden_path("g", ClassSpec::Fbar(), 25) == fs::path("g/Fbar/default/coeffs_N25.json"));
  CHECK(golden_path("g", ClassSpec::Lr(2), 25) == fs::path("g/Lr/r2/coeffs_N25.json"));
}

TEST_CASE("a corrupted copy fails the comparison") {
  const fs::path dir = scratch("sepclass_golden_corrupt");
  const std::vector<ClassSpec> specs = {ClassSpec::Fr(2), ClassSpec::R(1, 2, 3, 4)};
  for (const auto& s : specs) {
    const fs::path dst = golden_path(dir, s, 25);
    fs::create_directories(dst.parent_path());
    fs::copy_file(golden_path(kCorpus, s, 25), dst);
  }
  for (const auto& c : compare_golden(dir, specs, 25)) CHECK(c.ok);

  // bump one coefficient of the first file
  const fs::path victim = golden_path(dir, specs[0], 25);
  std::ifstream in(victim);
  std::stringstream buf;
  buf << in.rdbuf();
  in.close();
  Json doc = parse_json(buf.str());
  auto& term = doc["series"]["terms"][3];
  term["coeff"] = (BigInt(term["coeff"].get<std::string>()) + 1).str();
  std::ofstream(victim) << doc.dump() << '\n';

  const auto checks = compare_golden(dir, specs, 25);
  CHECK_FALSE(checks[0].ok);
  CHECK(checks[0].message.find("differs") != std::string::npos);
  CHECK(checks[1].ok);

  fs::remove(golden_path(dir, specs[1], 25));
  CHECK_FALSE(compare_golden(dir, specs, 25)[1].ok);
  fs::remove_all(dir);
}

TEST_CASE("bless writes files that compare clean") {
  const fs::path dir = scratch("sepclass_golden_bless");
  const std::vector<ClassSpec> specs = {ClassSpec::Lbar(), ClassSpec::Pprime(2, 3, 4, 1)};
  const auto written = bless_golden(dir, specs, 10);
  CHECK(written.size() == 2);
  for (const auto& p : written) CHECK(fs::exists(p));
  for (const auto& c : compare_golden(dir, specs, 10)) CHECK(c.ok);
  // a file for the wrong spec is rejected
  const fs::path wrong = golden_path(dir, ClassSpec::Fbar(), 10);
  fs::create_directories(wrong.parent_path());
  fs::copy_file(written[0], wrong);
  CHECK_FALSE(compare_golden(dir, {ClassSpec::Fbar()}, 10)[0].ok);
  fs::remove_all(dir);
}
