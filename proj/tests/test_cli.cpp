#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "eccad/cli.hpp"
#include "eccad/serialize.hpp"
#include "eccad/verify.hpp"
#include "examples.hpp"
#include "json.hpp"

using namespace eccad;
using namespace eccad::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("eccad_test_" + name + ".json");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Cell* find_mut(Cell& c, const std::vector<std::uint32_t>& idx) {
  if (c.index == idx) return &c;
  for (auto& ch : c.children)
    if (auto* f = find_mut(ch, idx)) return f;
  return nullptr;
}

}  // namespace

TEST_CASE("build the sphere example") {
  auto r = run({"build", kSphereFormula, "--order", "x,y,z", "--ec", "z:x+y^2+z", "--ec",
                "y:y"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("level counts: 5 15 25") != std::string::npos);
  CHECK(r.out.find("5 stacks lifted, 10 extended trivially") != std::string::npos);
  CHECK(r.out.find("cells: 25 (true: 4)") != std::string::npos);

  auto np = run({"build", kSphereFormula, "--order", "x,y,z", "--ec", "z:x+y^2+z", "--ec",
                 "y:y", "--no-prune"});
  CHECK(np.out.find("level counts: 5 15 45") != std::string::npos);

  auto again = run({"build", kSphereFormula, "--order", "x,y,z", "--ec", "z:x+y^2+z", "--ec",
                    "y:y", "--cells"});
  auto twice = run({"build", kSphereFormula, "--order", "x,y,z", "--ec", "z:x+y^2+z", "--ec",
                    "y:y", "--cells"});
  CHECK(again.out == twice.out);
  CHECK(again.out.find("[trivial extension]") != std::string::npos);
}

TEST_CASE("heuristic designation is the default") {
  auto r = run({"build", kFiveVarFormula, "--order", "v,u,x,y,z"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("level counts: 3 13 23") != std::string::npos);
  auto p = run({"propagate", kFiveVarFormula, "--order", "v,u,x,y,z"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("y: 5 candidate(s)") != std::string::npos);
  CHECK(p.out.find("x: 3 candidate(s)") != std::string::npos);
  CHECK(p.out.find("u: 1 candidate(s)") != std::string::npos);
  CHECK(p.out.find("heuristic designation:") != std::string::npos);
}

TEST_CASE("JSON output reloads and passes the audit") {
  auto r = run({"build", kFiveVarFormula, "--order", "v,u,x,y,z", "--json"});
  REQUIRE(r.code == kExitOk);
  CAD cad = load_cad(r.out);
  CHECK(cad.level_counts.back() > 0);
  CHECK(audit_structure(cad).ok());
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["format"] == "eccad-cad/1");
  CHECK(j["status"] == "complete");
}

TEST_CASE("verify: built, reloaded and corrupted") {
  auto v = run({"verify", kSphereFormula, "--order", "x,y,z", "--n", "300"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("0 violation") != std::string::npos);

  const auto path = temp_file("cli");
  auto b = run({"build", kSphereFormula, "--order", "x,y,z", "-o", path.string()});
  REQUIRE(b.code == kExitOk);
  CHECK(run({"verify", "--input", path.string(), "--n", "300"}).code == kExitOk);

  CAD cad = load_cad(slurp(path));
  const Cell& target = locate(cad, random_points(3, 1, 42)[0]);
  find_mut(cad.root, target.index)->truth =
      target.truth == Truth::True ? Truth::False : Truth::True;
  {
    std::ofstream o(path);
    o << save_cad(cad, kSphereFormula);
  }
  auto bad = run({"verify", "--input", path.string()});
  CHECK(bad.code == kExitMismatch);
  CHECK(bad.out.find("in cell") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("nullified designated EC exits with FAIL") {
  auto r = run({"build", "(x-1)*z+(y-1)=0 /\\ z>0", "--order", "x,y,z", "--ec",
                "z:(x-1)*z+y-1"});
  CHECK(r.code == kExitFail);
  CHECK(r.out.find("FAIL:") != std::string::npos);
  CHECK(run({"build", "(x-1)*z+(y-1)=0 /\\ z>0", "--order", "x,y,z", "--ec",
             "z:(x-1)*z+y-1", "--threads", "4"})
            .out == r.out);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"build", "x=0"}).code == kExitUsage);
  CHECK(run({"build", "x=0 /\\", "--order", "x"}).code == kExitUsage);
  CHECK(run({"build", "x=0", "--order", "x", "--ec", "x:x+1"}).code == kExitUsage);
  CHECK(run({"bounds", "--mode", "bogus"}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parser accepts negation, disjunction and relations") {
  auto r = run({"build", "~(x<0) \\/ y=0", "--order", "x,y"});
  CHECK(r.code == kExitOk);
  auto v = run({"verify", "~(x<0) \\/ y=0", "--order", "x,y", "--n", "200"});
  CHECK(v.code == kExitOk);
  CHECK(run({"build", "x^2+y^2-1<=0 /\\ y/=x", "--order", "x,y"}).code == kExitOk);
}

TEST_CASE("bounds subcommand") {
  auto r = run({"bounds", "--n", "5", "--m", "6", "--d", "2", "--l", "4", "--mode", "ec-full"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("450500704520372225") != std::string::npos);
  auto j = run({"bounds", "--n", "3", "--m", "3", "--d", "2", "--l", "2", "--json"});
  CHECK(j.code == kExitOk);
  auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["dominant"]["p"] == "286654464");
  CHECK(run({"bounds", "--n", "3", "--m", "1", "--l", "3"}).code == kExitUsage);
}

TEST_CASE("designation sweep on the sphere example") {
  auto r = run({"designations", kSphereFormula, "--order", "x,y,z"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("designation(s); final cell counts:") != std::string::npos);
  CHECK(r.out == run({"designations", kSphereFormula, "--order", "x,y,z"}).out);
}
