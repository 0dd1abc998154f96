#include <doctest.h>

#include <json.hpp>
#include <set>
#include <sstream>

#include "adelie/cli.hpp"

using adelie::cli::run;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(const std::vector<std::string>& args) {
  const auto r = invoke(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("every operation is reachable from exactly one command") {
    // Written out independently of the dispatch table.
    const std::vector<std::string> ops = {
        "build", "pairing", "height", "root_string", "rho", "highest_root", "build_constants", "bracket",
        "adjoint_matrix", "verify_chevalley", "is_singular", "index", "dominant_conjugate", "weyl_dim", "bwb",
        "verify_prop2", "verify_lemma3", "schubert_restriction_degree", "triviality_criterion", "dominance_leq",
        "lambda_plus", "lambda_star", "cht", "verify_cht_lemma", "cotangent_verdict", "verify_prop11_induction",
        "euler_characteristic_graded", "expand_curvature", "build_system", "certify_solvability", "check_bianchi",
        "resolution_lattice", "root_to_divisor", "bundle_decomposition", "surface_h2_oracle", "restriction_matrix",
        "cmd_verify"};
    const auto& table = adelie::cli::dispatch_table();
    const auto& commands = adelie::cli::command_names();
    const std::set<std::string> command_set(commands.begin(), commands.end());
    CHECK(command_set == std::set<std::string>{"roots", "cartan", "bwb", "cht", "cotangent", "euler", "chevalley",
                                               "obstruction", "surface", "verify"});
    for (const auto& op : ops) {
      CAPTURE(op);
      std::size_t hits = 0;
      for (const auto& e : table)
        if (e.op == op) {
          ++hits;
          CHECK(command_set.count(e.command) == 1);
        }
      CHECK(hits == 1);
    }
    // Every command answers --help.
    for (const auto& c : commands) CHECK(invoke({c, "--help"}).code == 0);
  }

  TEST_CASE("exit codes") {
    CHECK(invoke({"verify", "D2", "all"}).code == 2);
    CHECK(invoke({"verify", "A3", "everything"}).code == 2);
    CHECK(invoke({"roots", "Z3"}).code == 2);
    CHECK(invoke({"bwb", "A2", "1"}).code == 2);
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"nosuch"}).code == 2);
    const auto bad = invoke({"roots", "F4"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
  }

  TEST_CASE("verify examples") {
    const auto e8 = invoke_json({"verify", "E8", "prop2"});
    CHECK(e8["ok"] == true);
    CHECK(e8["schema"] == 1);
    bool found = false;
    for (const auto& c : e8["checks"])
      if (c["name"] == "prop2") {
        found = true;
        CHECK(c["checked"] == 240);
        CHECK(c["violations"] == 0);
      }
    CHECK(found);
    const auto a3 = invoke({"verify", "A3", "all"});
    CHECK(a3.code == 0);
    for (const auto& c : json::parse(a3.out)["checks"]) CHECK(c["violations"] == 0);
  }

  TEST_CASE("query examples") {
    const auto b = invoke_json({"bwb", "A2", "--root", "--", "-1", "0"});
    CHECK(b["degree"] == 1);
    CHECK(b["dim"] == 1);
    CHECK(b["mu"] == json::array({0, 0}));
    CHECK(b["status"] == "Concentrated");
    CHECK(invoke_json({"bwb", "A2", "--", "-2", "1"})["degree"] == 1);
    CHECK(invoke_json({"cht", "A1", "--root", "-1"})["cht"] == 1);
    const auto s = invoke_json({"surface", "E8"});
    CHECK(s["decomposition_rank"] == 248);
    CHECK(s["divisor_count"] == 240);
    CHECK(s["cross_check"] == "pass");
    CHECK(invoke_json({"euler", "A1", "--root", "--", "-1", "1"})["euler_characteristic"] == 1);
    CHECK(invoke_json({"roots", "E6"})["num_roots"] == 72);
    const auto cot = invoke_json({"cotangent", "A2", "--root", "--", "-1", "-1"});
    CHECK(cot["h2_vanishes"] == true);
    CHECK(cot["cht"] == 1);
  }

  TEST_CASE("obstruction command") {
    const auto sys = invoke({"obstruction", "A2", "positive", "--emit-system"});
    CHECK(sys.code == 0);
    CHECK(sys.out.find("dbar0 phi[a1+a2] = 1 phi[a1] ^ phi[a2]") != std::string::npos);
    for (const char* space : {"flag", "cotangent", "surface"}) {
      const auto j = invoke_json({"obstruction", "D4", "negative", "--space", space});
      CHECK(j["certificate"]["complete"] == true);
      CHECK(j["bianchi"]["violations"] == 0);
    }
    CHECK(invoke({"obstruction", "A2", "sideways"}).code == 2);
  }

  TEST_CASE("output is deterministic") {
    const std::vector<std::string> args = {"verify", "D5", "all", "--seed", "7"};
    const auto first = invoke(args), second = invoke(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
  }

  TEST_CASE("text format") {
    const auto r = invoke({"euler", "A1", "0", "0", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "1\n");
    const auto roots = invoke({"roots", "A2", "--format", "text"});
    CHECK(roots.code == 0);
    CHECK(roots.out.find('{') == std::string::npos);
  }
}
