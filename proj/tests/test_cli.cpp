#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

// End-to-end checks against the built binary: golden outputs, byte-identical
// reruns, and the exit-code contract (0 ok, 1 domain error, 2 parse error).

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string cli_path() {
  const char* p = std::getenv("MAW_CLI_BIN");
  REQUIRE_MESSAGE(p != nullptr, "MAW_CLI_BIN must point at the maw binary (set by ctest)");
  return p;
}

std::string source_dir() {
  const char* p = std::getenv("MAW_SOURCE_DIR");
  REQUIRE_MESSAGE(p != nullptr, "MAW_SOURCE_DIR must point at the repo root (set by ctest)");
  return p;
}

RunResult run(const std::string& args) {
  RunResult r;
  const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string data(const std::string& name) { return source_dir() + "/tests/data/" + name; }
std::string golden(const std::string& name) { return source_dir() + "/tests/golden/" + name; }

}  // namespace

TEST_CASE("every subcommand matches its golden file, byte for byte, twice") {
  const std::vector<std::pair<std::string, std::string>> cases = {
      {"spectrum " + data("algebra3.json"), "spectrum.out"},
      {"mes " + data("measured.json"), "mes.out"},
      {"tensor " + data("prob_third.json") + " " + data("prob_quarter.json"), "tensor.out"},
      {"model " + data("prob_weighted.json"), "model.out"},
      {"model-action " + data("action_two_cycles.json"), "model_action.out"},
      {"represent " + data("represent.json"), "represent.out"},
      {"disintegrate " + data("morphism_weighted.json"), "disintegrate.out"},
      {"relprod " + data("relprod.json"), "relprod.out"},
      {"condexp " + data("condexp.json"), "condexp.out"},
      {"integrate " + data("integrate.json"), "integrate.out"},
      {"lpnorm " + data("lpnorm.json"), "lpnorm.out"},
      {"riesz " + data("riesz.json"), "riesz.out"},
      {"kolmo --family " + data("family_iid.json") +
           " --cylinder '{\"F\":[1,3],\"E\":[[\"h\",\"h\"]]}'",
       "kolmo_iid.out"},
      {"kolmo --family " + data("family_markov.json") +
           " --cylinder '{\"F\":[1,2,3],\"E\":[[\"s0\",\"s1\",\"s0\"]]}'",
       "kolmo_markov.out"},
      {"check --suite monoidal --max-atoms 2 --seed 0", "check_monoidal.out"},
  };
  for (const auto& [args, golden_name] : cases) {
    INFO(args);
    RunResult first = run(args);
    CHECK(first.exit_code == 0);
    CHECK(first.out == slurp(golden(golden_name)));
    RunResult second = run(args);
    CHECK(second.out == first.out);
  }
}

TEST_CASE("derived values in the goldens") {
  CHECK(slurp(golden("kolmo_iid.out")) == "1/4\n");
  CHECK(slurp(golden("kolmo_markov.out")) == "1/2\n");
  CHECK(slurp(golden("lpnorm.out")) == "5/3\n");
  CHECK(slurp(golden("disintegrate.out")).find("\"b\": \"2/3\"") != std::string::npos);
  CHECK(slurp(golden("integrate.out")).find("\"re\": \"3\"") != std::string::npos);
}

TEST_CASE("--out writes the same bytes to a file") {
  const std::string tmp = "/tmp/maw_cli_out_test.json";
  RunResult direct = run("spectrum " + data("algebra3.json"));
  RunResult redirected = run("spectrum " + data("algebra3.json") + " --out " + tmp);
  CHECK(redirected.exit_code == 0);
  CHECK(redirected.out.empty());
  CHECK(slurp(tmp) == direct.out);
  std::remove(tmp.c_str());
}

TEST_CASE("exit codes follow the contract") {
  SUBCASE("unknown subcommand is a usage error") {
    CHECK(run("frobnicate x.json").exit_code == 2);
  }
  SUBCASE("malformed JSON is a parse error") {
    const std::string tmp = "/tmp/maw_cli_bad.json";
    std::ofstream(tmp) << "{ not json";
    CHECK(run("spectrum " + tmp).exit_code == 2);
    std::remove(tmp.c_str());
  }
  SUBCASE("violated measure contracts are domain errors") {
    const std::string tmp = "/tmp/maw_cli_domain.json";
    std::ofstream(tmp) << R"({
      "source": {"atoms": ["a", "b"], "measure": {"a": "1/3", "b": "2/3"}},
      "target": {"atoms": ["u", "v"], "measure": {"u": "1/2", "v": "1/2"}},
      "map": {"a": "u", "b": "v"}
    })";
    CHECK(run("disintegrate " + tmp).exit_code == 1);
    std::remove(tmp.c_str());
  }
  SUBCASE("non-stochastic family data is a domain error") {
    const std::string tmp = "/tmp/maw_cli_family.json";
    std::ofstream(tmp) << R"({
      "constructor": "markov",
      "states": ["s0", "s1"],
      "initial": {"s0": "1", "s1": "0"},
      "transition": {"s0": {"s0": "1/2", "s1": "1/3"}, "s1": {"s0": "1", "s1": "0"}}
    })";
    CHECK(run("kolmo --family " + tmp +
              " --cylinder '{\"F\":[1],\"E\":[[\"s0\"]]}'")
              .exit_code == 1);
    std::remove(tmp.c_str());
  }
}
