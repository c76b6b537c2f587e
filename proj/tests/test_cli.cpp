#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "freefield/cli.hpp"

using namespace freefield;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(const std::vector<std::string>& args, int expected = cli::kExitOk) {
  auto r = invoke(args);
  INFO(r.err);
  REQUIRE(r.code == expected);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("roots and characters") {
  auto j = invoke_json({"roots", "--series", "E", "--rank", "6"});
  CHECK(j["dim"] == 78);
  CHECK(j["positive_roots"].size() == 36);
  auto c = invoke_json({"char", "--series", "A", "--rank", "2", "--lam", "w1+w2"});
  CHECK(c["dimension"] == 8);
  CHECK(c["status"] == "pass");
  auto csv = invoke({"char", "--series", "B", "--rank", "2", "--lam", "w2", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("labels,multiplicity\n", 0) == 0);
  auto eps = invoke_json({"char", "--series", "D", "--rank", "4", "--lam", "1/2,1/2,1/2,1/2"});
  CHECK(eps["dimension"] == 8);
}

TEST_CASE("tensor with closed forms") {
  auto j = invoke_json({"tensor", "--series", "D", "--rank", "5", "--lam", "w4", "--mu", "w4", "--closed-form"});
  CHECK(j["closed_form"]["rule"] == "Okada");
  CHECK(j["closed_form"]["agrees"] == true);
  CHECK(j["total_dim"] == "256");
  auto a = invoke_json({"tensor", "--series", "A", "--rank", "3", "--lam", "2w1", "--mu", "w1", "--closed-form"});
  CHECK(a["closed_form"]["rule"] == "A case I");
  CHECK(a["components"].size() == 2);
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({}).code == cli::kExitUsage);
  CHECK(invoke({"bogus"}).code == cli::kExitUsage);
  CHECK(invoke({"tensor", "--series", "A", "--rank", "0", "--lam", "w1", "--mu", "w1"}).code == cli::kExitUsage);
  CHECK(invoke({"char", "--series", "A", "--rank", "2", "--lam", "w1-w2"}).code == cli::kExitUsage);
  CHECK(invoke({"char", "--series", "A", "--rank", "2", "--lam", "w7"}).code == cli::kExitUsage);
  CHECK(invoke({"char", "--series", "A", "--rank", "2", "--lam", "w1", "--bound", "2"}).code == cli::kExitUsage);
  CHECK(invoke({"cc", "--series", "E", "--rank", "6", "--level", "-12"}).code == cli::kExitUsage);
  CHECK(invoke({"fusion", "--a", "1"}).code == cli::kExitUsage);
  CHECK(invoke({"fusion", "--format", "csv"}).code == cli::kExitUsage);
  CHECK(invoke({"fock", "scan", "--rank", "3", "--charge", "2..1"}).code == cli::kExitUsage);
  CHECK(invoke({"singular", "verify", "--vector", "B"}).code == cli::kExitUsage);
  CHECK(invoke({"branch", "report", "--family", "C"}).code == cli::kExitUsage);
}

TEST_CASE("singular verify") {
  auto e6 = invoke_json({"singular", "verify", "--vector", "E6"});
  CHECK(e6["status"] == "singular");
  CHECK(e6["level"] == "-3");
  auto bad = invoke_json({"singular", "verify", "--vector", "E6", "--level", "0"}, cli::kExitFailed);
  CHECK(bad["status"] == "not-singular");
  CHECK(!bad["witness"].get<std::string>().empty());
  auto a = invoke_json({"singular", "verify", "--vector", "A", "--rank", "4", "--level", "-1"});
  CHECK(a["status"] == "singular");
  auto d = invoke_json({"singular", "verify", "--vector", "D", "--rank", "4", "--level=-1"}, cli::kExitFailed);
  CHECK(d["failing_operator"].is_string());
}

TEST_CASE("fock commands") {
  auto b = invoke_json({"fock", "basis", "--rank", "3", "--charge", "0", "--degree", "1"});
  CHECK(b["size"] == 9);
  auto ch = invoke_json({"fock", "character", "--rank", "3", "--charge", "-1..1", "--degree", "2"});
  CHECK(ch["sectors"].size() == 3);
  CHECK(ch["sectors"][1]["quotient"][1] == 8);
  auto scan = invoke_json({"fock", "scan", "--rank", "3", "--charge", "-2..2", "--degree", "1"});
  CHECK(scan["status"] == "pass");
  auto diag = invoke_json({"fock", "scan", "--rank", "2", "--charge", "0", "--degree", "2"});
  CHECK(diag["status"] == "diagnostic");
  CHECK(diag["sectors"][0]["first_extra_degree"] == "2");
  auto p = invoke_json({"fock", "properties", "--rank", "2", "--samples", "50", "--seed", "11"});
  CHECK(p["status"] == "pass");
  CHECK(invoke_json({"sugawara", "check", "--rank", "3"})["status"] == "pass");
  CHECK(invoke_json({"phi", "image", "--rank", "3"})["status"] == "zero");
}

TEST_CASE("branching commands") {
  auto r = invoke_json({"branch", "report", "--family", "A", "--rank", "3", "--charge", "-1..1", "--degree", "1"});
  CHECK(r["status"] == "pass");
  CHECK(r["rows"].size() == 3);
  auto e = invoke_json({"branch", "report", "--family", "E6", "--charge", "0..2"});
  CHECK(e["status"] == "pass");
  CHECK(invoke_json({"branch", "finite"})["total_dim"] == 78);
  CHECK(invoke_json({"branch", "tables"})["families"].size() == 5);
  CHECK(invoke_json({"fusion", "--a", "-4", "--b", "1"})["product"] == -3);
  CHECK(invoke_json({"fusion", "--range", "2"})["checked_triples"] == 125);
  CHECK(invoke_json({"cc", "--series", "D", "--rank", "5", "--level", "-3"})["central_charge"] == "-27");
}

TEST_CASE("output file") {
  auto path = std::filesystem::temp_directory_path() / "freefield_cli_test.json";
  auto r = invoke({"cc", "--series", "A", "--rank", "1", "--level", "1", "--output", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  CHECK(json::parse(f)["central_charge"] == "1");
  std::filesystem::remove(path);
}
