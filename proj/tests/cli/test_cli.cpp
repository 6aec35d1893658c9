#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "paths.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = GLOSSGRAFT_TEST_CLI;
const std::string convert = GLOSSGRAFT_TEST_CONVERT;

fs::path tmp(const std::string& name) {
  fs::path dir = GLOSSGRAFT_TEST_TMP;
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Result {
  int code;
  std::string out;
  std::string err;
};

// Runs a shell command line with stdout and stderr captured to files.
Result sh(const std::string& cmd, const std::string& env = "") {
  static int counter = 0;
  auto out = tmp("out" + std::to_string(counter));
  auto err = tmp("err" + std::to_string(counter++));
  std::string line = "env -u GLOSSGRAFT_WORDNET -u GLOSSGRAFT_STOPLIST -u GLOSSGRAFT_WORKERS " +
                     env + " " + cmd + " >" + out.string() + " 2>" + err.string();
  int status = std::system(line.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, slurp(out), slurp(err)};
}

std::string base() { return cli + " run --wordnet " + paths::wordnet; }

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

std::string run_duluth2(const std::string& extra) {
  return base() + " --stoplist " + paths::stoplist + " --variant duluth2 --entries " +
         paths::entries + " " + extra;
}

}  // namespace

TEST_CASE("help and argument errors") {
  auto top = sh(cli + " --help");
  CHECK(top.code == 0);
  for (const char* sub : {"run", "baseline", "eval", "sweep", "fixture-check"})
    CHECK(top.out.find(sub) != std::string::npos);
  auto run = sh(cli + " run --help");
  for (const char* flag : {"--wordnet", "--stoplist", "--variant", "--gloss-size", "--entries",
                           "--attach-threshold", "--workers", "--out"})
    CHECK(run.out.find(flag) != std::string::npos);
  CHECK(sh(cli + " run --bogus").code != 0);
  CHECK(sh(cli).code != 0);
  auto missing = sh(cli + " run --variant duluth2");
  CHECK(missing.code == 2);
  CHECK(missing.err.find("--wordnet") != std::string::npos);
  CHECK(sh(run_duluth2("--variant duluth7")).code != 0);
  CHECK(sh(run_duluth2("--gloss-size 5")).code != 0);
}

TEST_CASE("run writes one prediction per entry, independent of workers") {
  auto one = tmp("w1.tsv");
  auto eight = tmp("w8.tsv");
  auto r1 = sh(run_duluth2("--workers 1 --out " + one.string()));
  auto r8 = sh(run_duluth2("--workers 8 --out " + eight.string()));
  REQUIRE(r1.code == 0);
  REQUIRE(r8.code == 0);
  CHECK(count_lines(slurp(one)) == 50);
  CHECK(slurp(one) == slurp(eight));
  CHECK(r1.err.find("50 attached") != std::string::npos);

  auto stdout_run = sh(run_duluth2(""));
  CHECK(stdout_run.out == slurp(one));
}

TEST_CASE("duluth1 gloss size") {
  auto r = sh(base() + " --stoplist " + paths::stoplist + " --variant duluth1 --gloss-size 30" +
              " --entries " + paths::entries + " --workers 4");
  REQUIRE(r.code == 0);
  CHECK(count_lines(r.out) == 50);
}

TEST_CASE("eval of the gold file itself is perfect") {
  // gold rows are "id op synset"; predictions are "id synset op score provenance"
  std::ifstream gold(paths::gold);
  std::ofstream preds(tmp("gold_preds.tsv"));
  std::ofstream partial(tmp("partial_preds.tsv"));
  std::string id, op, synset;
  int row = 0;
  while (gold >> id >> op >> synset) {
    preds << id << '\t' << synset << '\t' << op << "\t0\toverlap\n";
    if (row++ % 2 == 0) partial << id << '\t' << synset << '\t' << op << "\t0\toverlap\n";
  }
  preds.close();
  partial.close();

  auto r = sh(cli + " eval --wordnet " + paths::wordnet + " --predictions " +
              tmp("gold_preds.tsv").string() + " --gold " + paths::gold);
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"f1\": 1.0") != std::string::npos);
  CHECK(r.err.find("F1") != std::string::npos);

  auto half = sh(cli + " eval --wordnet " + paths::wordnet + " --predictions " +
                 tmp("partial_preds.tsv").string() + " --gold " + paths::gold);
  REQUIRE(half.code == 0);
  CHECK(half.out.find("\"recall\": 0.5") != std::string::npos);
  CHECK(half.out.find("\"missing\": 25") != std::string::npos);
}

TEST_CASE("fixture check") {
  auto ok = sh(cli + " fixture-check --wordnet " + paths::wordnet + " --stoplist " +
               paths::stoplist);
  CHECK(ok.code == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);

  auto bad = sh(cli + " fixture-check --wordnet " + paths::wordnet + " --stoplist /dev/null");
  CHECK(bad.code == 1);
  CHECK(bad.out.find("FAIL duluth2") != std::string::npos);
}

TEST_CASE("flags override environment, environment overrides config") {
  auto cfg = tmp("glossgraft.toml");
  std::ofstream(cfg) << "[run]\nwordnet = \"/nowhere/config\"\nvariant = \"duluth2\"\n"
                     << "stoplist = \"" << paths::stoplist << "\"\n";
  std::string common = cli + " --config " + cfg.string() + " run --entries " + paths::entries;

  auto from_config = sh(common);
  CHECK(from_config.code != 0);
  CHECK(from_config.err.find("/nowhere/config") != std::string::npos);

  auto from_env = sh(common, "GLOSSGRAFT_WORDNET=" + paths::wordnet);
  CHECK(from_env.code == 0);
  CHECK(count_lines(from_env.out) == 50);

  auto flag_wins = sh(common + " --wordnet /nowhere/flag", "GLOSSGRAFT_WORDNET=" + paths::wordnet);
  CHECK(flag_wins.code != 0);
  CHECK(flag_wins.err.find("/nowhere/flag") != std::string::npos);

  auto workers = sh(common + " --wordnet " + paths::wordnet, "GLOSSGRAFT_WORKERS=3");
  CHECK(workers.err.find("3 worker(s)") != std::string::npos);
}

TEST_CASE("random baseline is seeded") {
  std::string cmd = cli + " baseline random --wordnet " + paths::wordnet + " --entries " +
                    paths::entries;
  auto a = sh(cmd + " --seed 11 --workers 1");
  auto b = sh(cmd + " --seed 11 --workers 8");
  auto c = sh(cmd + " --seed 12");
  REQUIRE(a.code == 0);
  CHECK(count_lines(a.out) == 50);
  CHECK(a.out == b.out);
  CHECK(a.out != c.out);
  CHECK(a.out.find("random") != std::string::npos);

  auto fw = sh(cli + " baseline first-word --wordnet " + paths::wordnet + " --entries " +
               paths::entries);
  REQUIRE(fw.code == 0);
  CHECK(fw.out.find("first_word") != std::string::npos);
}

TEST_CASE("sweep token counts grow with gloss size") {
  auto r = sh(cli + " sweep --wordnet " + paths::wordnet + " --stoplist " + paths::stoplist +
              " --entries " + paths::entries + " --gold " + paths::gold +
              " --sizes 1,5,9 --workers 8");
  REQUIRE(r.code == 0);
  std::vector<long> counts;
  const std::string key = "\"token_count\": ";
  for (auto pos = r.out.find(key); pos != std::string::npos; pos = r.out.find(key, pos + 1))
    counts.push_back(std::stol(r.out.substr(pos + key.size())));
  REQUIRE(counts.size() == 3);
  CHECK(counts[0] <= counts[1]);
  CHECK(counts[1] <= counts[2]);
  CHECK(sh(cli + " sweep --wordnet " + paths::wordnet + " --sizes 0").code != 0);
}

TEST_CASE("stoplist conversion tool") {
  auto in = tmp("nsp.txt");
  auto out = tmp("plain.txt");
  std::ofstream(in) << "@stop.mode=AND\n/^a$/\n/^an$/\n/^the$/\n";
  auto r = sh(convert + " " + in.string() + " " + out.string());
  REQUIRE(r.code == 0);
  auto text = slurp(out);
  CHECK(text.rfind("# converted from", 0) == 0);
  CHECK(text.substr(text.find('\n') + 1) == "a\nan\nthe\n");
  CHECK(sh(convert).code != 0);
}
