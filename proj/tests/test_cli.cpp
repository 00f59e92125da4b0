// End-to-end checks of the command-line surface: output bytes, exit codes,
// and determinism.  Expects the binary path as argv[1].
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

int failures = 0;

struct RunResult {
  std::string out;
  int rc = -1;
};

// Run through /bin/sh, capturing the given stream.
RunResult run(const std::string& cmd) {
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "FAIL: popen(" << cmd << ")\n";
    ++failures;
    return r;
  }
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

void check(bool ok, const std::string& what) {
  if (!ok) {
    std::cerr << "FAIL: " << what << "\n";
    ++failures;
  }
}

void check_eq(const std::string& got, const std::string& want, const std::string& what) {
  if (got != want) {
    std::cerr << "FAIL: " << what << "\n  want: " << want << "\n  got:  " << got << "\n";
    ++failures;
  }
}

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <path-to-binary>\n";
    return 1;
  }
  const std::string bin = std::string("'") + argv[1] + "'";
  const std::string quiet = " 2>/dev/null";

  // --- enumerate ---------------------------------------------------------
  RunResult r = run(bin + " enumerate --e 2 --charge 0,1 --n 0" + quiet);
  check(r.rc == 0, "enumerate n=0 exits 0");
  check_eq(r.out, "[-|-]\n", "enumerate n=0 output");

  r = run(bin + " enumerate --e 2 --charge 0,1 --n 3" + quiet);
  check(r.rc == 0, "enumerate n=3 exits 0");
  check_eq(r.out, "[-|3]\n[1|2]\n[2|1]\n[3|-]\n", "enumerate n=3 output");

  r = run(bin + " enumerate --e 2 --charge 0,1 --n 3 2>&1 >/dev/null");
  check(r.out.find("cardinality: 4") != std::string::npos, "enumerate reports cardinality");

  r = run(bin + " enumerate --e 2 --charge 0,1 --n 3 --flotw" + quiet);
  check(r.rc == 0, "enumerate --flotw cross-check passes");
  check_eq(r.out, "[-|3]\n[1|2]\n[2|1]\n[3|-]\n", "enumerate --flotw output");

  r = run(bin + " enumerate --e 2 --charge 0,1- --n 3" + quiet);
  check(r.rc == 0, "enumerate asymptotic exits 0");
  check_eq(r.out, "[-|2,1]\n[-|3]\n[1|2]\n[2|1]\n", "enumerate asymptotic output");

  r = run(bin + " enumerate --e infinity --charge 0,1 --n 2" + quiet);
  check(r.rc == 0, "enumerate infinite e exits 0");
  check_eq(r.out, "[-|2]\n[1|1]\n[1,1|-]\n[2|-]\n", "enumerate infinite e output");

  r = run(bin + " enumerate --e 2 --charge 0,1 --n 3 --format json" + quiet);
  check(r.rc == 0, "enumerate json exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j["e"] == 2 && j["n"] == 3 && j["cardinality"] == 4, "enumerate json scalars");
    check(j["order"]["kind"] == "uglov", "enumerate json order kind");
    check(j["bipartitions"].size() == 4 && j["bipartitions"][0] == "[-|3]",
          "enumerate json members");
    RunResult again = run(bin + " enumerate --e 2 --charge 0,1 --n 3 --format json" + quiet);
    check_eq(again.out, r.out, "enumerate json is byte-deterministic");
  }

  // --- map ----------------------------------------------------------------
  r = run(bin + " map --e 4 --from 0,1 --to 0,5 '[8|4]'" + quiet);
  check(r.rc == 0, "map exits 0");
  check_eq(r.out, "[5|7]\n", "map single bipartition");

  r = run(bin + " map --e 4 --from 0,1 --to 0,1- '[8|4]'" + quiet);
  check(r.rc == 0, "map asymptotic target exits 0");
  check_eq(r.out, "[4|7,1]\n", "map asymptotic target output");

  r = run("printf '[-|3]\\n[1|2]\\n' | " + bin + " map --e 2 --from 0,1 --to 1,2 --oracle" +
          quiet);
  check(r.rc == 0, "map stdin batch with oracle exits 0");
  check_eq(r.out, "[3|-]\n[2|1]\n", "map stdin batch output");

  r = run(bin + " map --e 4 --from 0,1 --to 0,5 --format json '[8|4]'" + quiet);
  check(r.rc == 0, "map json exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j["e"] == 4 && j["to"]["kind"] == "exact", "map json envelope");
    check(j["results"].size() == 1 && j["results"][0]["input"] == "[8|4]" &&
              j["results"][0]["output"] == "[5|7]",
          "map json result");
    check(j["results"][0]["plan"]["steps"].size() == 1 &&
              j["results"][0]["plan"]["steps"][0]["op"] == "upsilon",
          "map json plan");
  }

  // --- symbol / canonical -------------------------------------------------
  r = run(bin + " symbol --charge 0,2 --m 4 '[2,2,1|3,2]'" + quiet);
  check(r.rc == 0, "symbol exits 0");
  check_eq(r.out, "0 1 2 3 6 8\n0 2 4 5\n", "symbol text output");

  r = run(bin + " symbol --charge 0,2 --format json '[2,2,1|3,2]'" + quiet);
  check(r.rc == 0, "symbol json exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j["m"] == 4, "symbol json picks the canonical padding");
    check(j["top"] == nlohmann::json::array({0, 1, 2, 3, 6, 8}) &&
              j["bottom"] == nlohmann::json::array({0, 2, 4, 5}),
          "symbol json rows");
  }

  r = run(bin + " canonical --charge 0,1 '[8|4]'" + quiet);
  check(r.rc == 0, "canonical exits 0");
  check_eq(r.out, "b = [8|4] + v·[5|7]\n", "canonical text output");

  // --- basic-set ----------------------------------------------------------
  r = run(bin + " basic-set --a 2 --b 1 --l 6" + quiet);
  check(r.rc == 0, "basic-set exits 0");
  check_eq(r.out, "e = 3\nd = 2\nd_all = 2, 5\np = -1\ncharge = (-1, 0)\n",
           "basic-set text output");

  r = run(bin + " basic-set --a 1 --b 1 --l 4 --format json" + quiet);
  check(r.rc == 0, "basic-set json exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j["e"] == 4 && j["d"] == 3 && j["p"] == -1, "basic-set json scalars");
    check(j["charge"] == nlohmann::json::array({-1, 0}), "basic-set json charge");
  }

  // --- graph ---------------------------------------------------------------
  r = run(bin + " graph --e 2 --charge 0,0 --max-rank 1" + quiet);
  check(r.rc == 0, "graph exits 0");
  check(r.out.find("digraph") != std::string::npos && r.out.find("->") != std::string::npos,
        "graph emits DOT");
  {
    RunResult flagged = run(bin + " graph --e 2 --charge 0,0 --max-rank 1 --dot" + quiet);
    check_eq(flagged.out, r.out, "--dot matches the default format");
    RunResult text = run(bin + " graph --e 2 --charge 0,0 --max-rank 1 --format text" + quiet);
    check_eq(text.out, r.out, "--format text is a DOT alias");
  }

  r = run(bin + " graph --e 2 --charge 0,0 --max-rank 1 --format json" + quiet);
  check(r.rc == 0, "graph json exits 0");
  {
    nlohmann::json j = nlohmann::json::parse(r.out);
    check(j.contains("edges") && j.contains("levels") && j["max_rank"] == 1,
          "graph json fields");
  }

  // --- output files ---------------------------------------------------------
  r = run(bin + " enumerate --e 2 --charge 0,1 --n 3 -o cli_out.tmp" + quiet);
  check(r.rc == 0 && r.out.empty(), "enumerate -o writes nothing to stdout");
  {
    std::ifstream f("cli_out.tmp");
    std::stringstream ss;
    ss << f.rdbuf();
    check_eq(ss.str(), "[-|3]\n[1|2]\n[2|1]\n[3|-]\n", "enumerate -o file content");
  }
  std::remove("cli_out.tmp");

  // --- verify ----------------------------------------------------------------
  r = run(bin + " verify hecke" + quiet);
  check(r.rc == 0, "verify hecke exits 0");
  check(r.out.find("hecke:") == 0 && r.out.find("[PASS]") != std::string::npos,
        "verify hecke reports a pass line");

  r = run(bin + " verify main --e 2 --n 0..4 --charge 0,1" + quiet);
  check(r.rc == 0, "verify main restricted to one window exits 0");

  // --- exit codes --------------------------------------------------------------
  check(run(bin + " enumerate --e 1 --charge 0,1 --n 0" + quiet).rc == 2, "e=1 exits 2");
  check(run(bin + " enumerate --e 2 --charge '0;1' --n 0" + quiet).rc == 2,
        "malformed charge exits 2");
  check(run(bin + " enumerate --e 4 --charge 0,5- --n 0" + quiet).rc == 2,
        "asymptotic residue out of range exits 2");
  check(run(bin + " nonsense" + quiet).rc == 2, "unknown subcommand exits 2");
  check(run(bin + quiet).rc == 2, "missing subcommand exits 2");
  check(run(bin + " map --e 4 --from 0,1 --to 0,5 '[-|2,1]'" + quiet).rc == 3,
        "non-member input exits 3");
  check(run(bin + " map --e 4 --from 0,1 --to 0,2 '[-|-]'" + quiet).rc == 3,
        "incompatible charges exit 3");
  check(run(bin + " symbol --charge 1,0 '[1|-]'" + quiet).rc == 3,
        "descending charge exits 3");
  check(run(bin + " basic-set --a 2 --b 1 --l 4" + quiet).rc == 3,
        "unsolvable basic set exits 3");
  check(run(bin + " verify main --e 2 --n 0..8 --budget 5" + quiet).rc == 2,
        "exhausted budget exits 2");

  if (failures == 0) {
    std::cout << "all cli checks passed\n";
    return 0;
  }
  std::cerr << failures << " cli check(s) failed\n";
  return 1;
}
