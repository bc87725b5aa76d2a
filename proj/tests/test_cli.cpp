// End-to-end tests against the built binary: exit codes, output shape,
// byte determinism, and the text/json mirror.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "parafact/cluster_quiver.hpp"
#include "parafact/presentation.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunResult run(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const std::string out_path = "cli_stdout_" + std::to_string(counter) + ".tmp";
  const std::string err_path = "cli_stderr_" + std::to_string(counter) + ".tmp";
  ++counter;
  const std::string cmd = env_prefix + std::string(PARAFACT_CLI_PATH) + " " + args +
                          " > " + out_path + " 2> " + err_path;
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

std::string fixture(const std::string& name) {
  return std::string(PARAFACT_FIXTURES_DIR) + "/" + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check: exit encodes the two conditions") {
  const RunResult good = run("check " + fixture("a3_cluster.pres"));
  CHECK(good.exit_code == 0);
  CHECK(contains(good.out, "involutions: true"));
  CHECK(contains(good.out, "even: true"));

  const RunResult klein = run("check " + fixture("klein.pres"));
  CHECK(klein.exit_code == 1);
  CHECK(contains(klein.out, "involutions: true"));
  CHECK(contains(klein.out, "even: false"));
}

TEST_CASE("check: malformed input exits 2") {
  const RunResult bad = run("check " + fixture("bad_syntax.pres"));
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "unknown generator"));

  const RunResult missing = run("check " + fixture("no_such_file.pres"));
  CHECK(missing.exit_code == 2);
}

TEST_CASE("order of the fixtures") {
  CHECK(contains(run("order " + fixture("klein.pres")).out, "order: 4"));
  CHECK(contains(run("order " + fixture("a3_cluster.pres")).out, "order: 24"));
  CHECK(contains(run("order " + fixture("a2_path.pres")).out, "order: 6"));
  CHECK(contains(run("order " + fixture("trivial_rel.pres")).out, "order: 1"));
}

TEST_CASE("coset limits exit 3 with diagnostics") {
  const RunResult flag = run("order " + fixture("a3_cluster.pres") + " --max-cosets 5");
  CHECK(flag.exit_code == 3);
  CHECK(contains(flag.err, "allocated"));

  const RunResult env =
      run("order " + fixture("a3_cluster.pres"), "PARAFACT_MAX_COSETS=5 ");
  CHECK(env.exit_code == 3);

  // An explicit flag overrides the environment default.
  const RunResult both = run("order " + fixture("a3_cluster.pres") + " --max-cosets 1000",
                             "PARAFACT_MAX_COSETS=5 ");
  CHECK(both.exit_code == 0);
}

TEST_CASE("lengths output") {
  const RunResult r = run("lengths " + fixture("single_involution.pres"));
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "order: 2"));
  CHECK(contains(r.out, "lengths: 0:1 1:1"));

  const RunResult a3 = run("lengths " + fixture("a3_cluster.pres"));
  CHECK(contains(a3.out, "lengths: 0:1 1:3 2:6 3:9 4:5"));
}

TEST_CASE("reduced expressions of the cycle element") {
  const RunResult r =
      run("reduced " + fixture("a3_cluster.pres") + " --word 't2 t3 t1 t2'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "count: 3"));
  CHECK(contains(r.out, "t1 t2 t3 t1\n"));
  CHECK(contains(r.out, "t2 t3 t1 t2\n"));
  CHECK(contains(r.out, "t3 t1 t2 t3\n"));
}

TEST_CASE("descent sets of t2 t3") {
  const RunResult r =
      run("descents " + fixture("a3_cluster.pres") + " --word 't2 t3'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "left: t2\n"));
  CHECK(contains(r.out, "right: t3\n"));
}

TEST_CASE("factorize prints greedy and exhaustive results") {
  const RunResult r = run("factorize " + fixture("a3_cluster.pres") +
                          " --I t1,t2 --word 't2 t3 t1 t2'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "greedy: a = t1 t2 t3 (length 3), b = t1 (length 1)"));
  CHECK(contains(r.out, "factorizations: 2"));
  CHECK(contains(r.out, "a = t2 t3 (length 2), b = t1 t2 (length 2)"));

  const RunResult neg =
      run("factorize " + fixture("klein.pres") + " --I i --word 'j'");
  CHECK(neg.exit_code == 1);
  CHECK(contains(neg.out, "greedy: stalled"));
  CHECK(contains(neg.out, "factorizations: 0"));
}

TEST_CASE("coset listing of the rigid element") {
  const RunResult r =
      run("coset " + fixture("a3_cluster.pres") + " --I t1,t2 --word 't1 t2 t3'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "coset (6):"));
  CHECK(contains(r.out, "minimal length:\n  t2 t3 (length 2)"));
}

TEST_CASE("scan summary and failure exit") {
  const RunResult a3 = run("scan " + fixture("a3_cluster.pres"));
  CHECK(a3.exit_code == 0);
  CHECK(contains(a3.out,
                 "SUMMARY pairs=192 witnesses=12 existence_failures=0 "
                 "unique_case_violations=0 nonadditive=24"));
  CHECK(contains(a3.out, "WITNESS t1,t2 t1 t2 t3 t1 2"));

  const RunResult again = run("scan " + fixture("a3_cluster.pres"));
  CHECK(again.out == a3.out);

  const RunResult klein = run("scan " + fixture("klein.pres"));
  CHECK(klein.exit_code == 1);
  CHECK(contains(klein.out, "existence_failures=6"));
}

TEST_CASE("dot export is byte-stable") {
  const RunResult a = run("dot " + fixture("a3_cluster.pres"));
  const RunResult b = run("dot " + fixture("a3_cluster.pres"));
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  std::size_t nodes = 0, edges = 0;
  std::istringstream in(a.out);
  std::string line;
  while (std::getline(in, line)) {
    if (!contains(line, "[label=")) continue;
    if (contains(line, " -- ")) {
      ++edges;
    } else {
      ++nodes;
    }
  }
  CHECK(nodes == 24);
  CHECK(edges == 36);
}

TEST_CASE("dot annotations from --perm") {
  const RunResult r = run("dot " + fixture("a3_cluster.pres") +
                          " --perm '(1, 2)' --perm '(2, 3)' --perm '(2, 4)'");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "label=\"e\\n()\""));
  CHECK(contains(r.out, "label=\"t1\\n(1, 2)\""));

  const RunResult bad = run("dot " + fixture("a3_cluster.pres") + " --perm '(1, 2)'");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify passes and the failure hook trips it") {
  const RunResult ok = run("verify");
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "RESULT pass"));
  CHECK_FALSE(contains(ok.out, "FAIL"));

  const RunResult bad = run("verify --inject-failure");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "FAIL group-order"));
  CHECK(contains(bad.out, "RESULT fail"));
}

TEST_CASE("verify text and json carry the same assertions") {
  const RunResult text = run("verify");
  const RunResult json = run("verify --format json");
  CHECK(json.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(json.out);
  CHECK(j["pass"] == true);

  std::vector<std::string> text_names;
  std::istringstream in(text.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("PASS ", 0) == 0 || line.rfind("FAIL ", 0) == 0) {
      text_names.push_back(line.substr(5, line.find(':') - 5));
    }
  }
  std::vector<std::string> json_names;
  for (const auto& step : j["steps"]) {
    CHECK(step["pass"] == true);
    json_names.push_back(step["name"]);
  }
  CHECK(text_names == json_names);
  CHECK(text_names.size() >= 12);
}

TEST_CASE("quiver subcommand emits the triangle presentation") {
  const RunResult r = run("quiver " + fixture("a3_cycle.quiver"));
  CHECK(r.exit_code == 0);
  CHECK(r.out == parafact::serialize(parafact::a3_cluster_presentation()));
}

TEST_CASE("table subcommand dumps complete tables") {
  const RunResult klein = run("table " + fixture("klein.pres"));
  CHECK(klein.exit_code == 0);
  CHECK(klein.out == "0: 1 2 3\n1: 0 3 2\n2: 3 0 1\n3: 2 1 0\n");

  const RunResult cosets =
      run("table " + fixture("a3_cluster.pres") + " --subgroup t1,t2");
  CHECK(cosets.exit_code == 0);
  std::size_t rows = 0;
  std::istringstream in(cosets.out);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("frobnicate x").exit_code == 2);
  CHECK(run("factorize " + fixture("a3_cluster.pres")).exit_code == 2);  // missing flags
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("json output parses for the query commands") {
  const RunResult fac = run("factorize " + fixture("a3_cluster.pres") +
                            " --I t1,t2 --word 't2 t3 t1 t2' --format json");
  const nlohmann::json j = nlohmann::json::parse(fac.out);
  CHECK(j["factorizations"].size() == 2);
  CHECK(j["greedy"]["a"] == "t1 t2 t3");

  const nlohmann::json scan = nlohmann::json::parse(
      run("scan " + fixture("a3_cluster.pres") + " --format json").out);
  CHECK(scan["witnesses"].size() == 12);
  CHECK(scan["nonadditive"] == 24);

  const nlohmann::json chk = nlohmann::json::parse(
      run("check " + fixture("klein.pres") + " --format json").out);
  CHECK(chk["even"] == false);
  CHECK(chk["relators"].size() == 4);
}
