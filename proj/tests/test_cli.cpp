// Copyright 2026 The nereval Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// End-to-end runs of the installed binary: exit codes, stream separation,
// and the byte shape of each report format.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("nereval_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_fixture(const std::string& name, const std::string& content) {
  const fs::path p = work_dir() / name;
  fs::create_directories(p.parent_path());
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (char c : s) {
    if (c == '\'') {
      q += "'\\''";
    } else {
      q += c;
    }
  }
  q += "'";
  return q;
}

CliResult run_cli(const std::vector<std::string>& args) {
  static int counter = 0;
  const fs::path out_path = work_dir() / ("out" + std::to_string(counter) + ".txt");
  const fs::path err_path = work_dir() / ("err" + std::to_string(counter) + ".txt");
  ++counter;

  std::string cmd = shell_quote(NEREVAL_CLI_PATH);
  for (const std::string& a : args) cmd += " " + shell_quote(a);
  cmd += " > " + shell_quote(out_path.string());
  cmd += " 2> " + shell_quote(err_path.string());

  const int raw = std::system(cmd.c_str());
  CliResult r;
  r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

// the 6-token pair with one boundary error and one exact match
const char* kGoldConll = "Le B-PER\nCurie I-PER\nva O\nvers O\nl'est O\nParis B-LOC\n";
const char* kPredConll = "Le B-PER\nCurie O\nva O\nvers O\nl'est O\nParis B-LOC\n";

}  // namespace

TEST_CASE("cli: no subcommand or bad flags exit 2") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"no-such-command"}).code == 2);
  CHECK(run_cli({"evaluate"}).code == 2);  // missing positionals
  const CliResult r = run_cli({"evaluate", "a", "b", "--no-such-flag"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
}

TEST_CASE("cli: help and version exit 0") {
  CHECK(run_cli({"--help"}).code == 0);
  const CliResult r = run_cli({"evaluate", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("gold") != std::string::npos);
}

TEST_CASE("cli: evaluate the worked pair") {
  const fs::path gold = write_fixture("gold.conll", kGoldConll);
  const fs::path pred = write_fixture("pred.conll", kPredConll);

  SUBCASE("entity-strict markdown") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "entity-strict"});
    CHECK(r.code == 0);
    CHECK(r.out.find("| micro | 50.00 | 50.00 | 50.00 | 2 |") != std::string::npos);
    CHECK(r.out.find("headline (micro-f1): 50.00") != std::string::npos);
    CHECK(r.err.empty());
  }

  SUBCASE("token-with-O headline") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "token-with-O"});
    CHECK(r.code == 0);
    CHECK(r.out.find("headline (weighted-f1): 76.19") != std::string::npos);
  }

  SUBCASE("entity-without-O carries the strict score") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "entity-without-O"});
    CHECK(r.code == 0);
    CHECK(r.out.find("headline (micro-f1): 100.00") != std::string::npos);
    CHECK(r.out.find("entity-strict-f1: 50.00") != std::string::npos);
  }

  SUBCASE("json output is pure and parses") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "entity-strict", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["averages"]["micro"]["f1"] == 0.5);
    CHECK(r.out.find("headline") == std::string::npos);
  }

  SUBCASE("csv output is just the table") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "entity-strict", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("class,precision,recall,f1,support") == 0);
    CHECK(r.out.find("headline") == std::string::npos);
    CHECK(r.out.find("|") == std::string::npos);
  }

  SUBCASE("repeated runs are byte-identical") {
    const std::vector<std::string> args = {"evaluate", gold.string(), pred.string(),
                                           "--methodology", "entity-strict"};
    CHECK(run_cli(args).out == run_cli(args).out);
  }
}

TEST_CASE("cli: evaluate error paths exit 2") {
  const fs::path gold = write_fixture("gold.conll", kGoldConll);
  const fs::path pred = write_fixture("pred.conll", kPredConll);

  SUBCASE("missing input file") {
    const CliResult r =
        run_cli({"evaluate", (work_dir() / "absent.conll").string(), pred.string()});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("error:") != std::string::npos);
  }

  SUBCASE("unknown methodology") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--methodology", "loose"});
    CHECK(r.code == 2);
  }

  SUBCASE("unknown scheme") {
    const CliResult r = run_cli({"evaluate", gold.string(), pred.string(),
                                 "--scheme", "IOBX"});
    CHECK(r.code == 2);
  }

  SUBCASE("misaligned corpora name the sequence") {
    const fs::path shorter = write_fixture("short.conll", "Le B-PER\n");
    const CliResult r = run_cli({"evaluate", gold.string(), shorter.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("mismatch") != std::string::npos);
  }

  SUBCASE("malformed conll names the line") {
    const fs::path broken = write_fixture("broken.conll", "a O\nsingleton\n");
    const CliResult r = run_cli({"evaluate", gold.string(), broken.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
  }
}

TEST_CASE("cli: compare renders one row per methodology") {
  const fs::path gold = write_fixture("gold.conll", kGoldConll);
  const fs::path pred = write_fixture("pred.conll", kPredConll);
  const CliResult r = run_cli(
      {"compare", gold.string(), pred.string(), "--methodologies",
       "entity-strict,token-with-O,entity-without-O"});
  CHECK(r.code == 0);
  CHECK(r.out.find("| entity-strict |") != std::string::npos);
  CHECK(r.out.find("50.00") != std::string::npos);
  CHECK(r.out.find("76.19") != std::string::npos);
  CHECK(r.out.find("100.00") != std::string::npos);

  const CliResult tagged = run_cli(
      {"compare", gold.string(), pred.string(), "--methodologies", "entity-strict",
       "--model-name", "bio-fr-base"});
  CHECK(tagged.out.find("bio-fr-base") != std::string::npos);

  const CliResult bad = run_cli(
      {"compare", gold.string(), pred.string(), "--methodologies", "bogus"});
  CHECK(bad.code == 2);
}

TEST_CASE("cli: aggregate runs") {
  const fs::path runs = write_fixture(
      "runs.json",
      R"({"runs":[{"seed":1,"metrics":{"f1":70.0}},{"seed":2,"metrics":{"f1":71.0}},{"seed":3,"metrics":{"f1":72.0}}]})");

  SUBCASE("markdown mean and deviation") {
    const CliResult r = run_cli({"aggregate", runs.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("71.00 \xC2\xB1 1.00") != std::string::npos);
  }

  SUBCASE("json carries raw values") {
    const CliResult r = run_cli({"aggregate", runs.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["aggregates"][0]["mean"] == 71.0);
    CHECK(doc["aggregates"][0]["n"] == 3);
  }

  SUBCASE("malformed json exits 2") {
    const fs::path broken = write_fixture("broken.json", "{\"runs\": oops");
    CHECK(run_cli({"aggregate", broken.string()}).code == 2);
  }

  SUBCASE("a single run warns on stderr but succeeds") {
    const fs::path one = write_fixture(
        "one_run.json", R"({"runs":[{"seed":1,"metrics":{"f1":70.0}}]})");
    const CliResult r = run_cli({"aggregate", one.string()});
    CHECK(r.code == 0);
    CHECK(!r.err.empty());
    CHECK(r.out.find("70.00 \xC2\xB1 0.00") != std::string::npos);
  }

  SUBCASE("zero runs exit 2") {
    const fs::path none = write_fixture("no_runs.json", R"({"runs":[]})");
    CHECK(run_cli({"aggregate", none.string()}).code == 2);
  }
}

TEST_CASE("cli: vocab comparison") {
  const fs::path a = write_fixture("vocab_a.txt", "a\nb\nc\nd\n");
  const fs::path b = write_fixture("vocab_b.txt", "c\nd\ne\nf\n");

  SUBCASE("overlap statistics") {
    const CliResult r = run_cli({"vocab", a.string(), b.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("50.00") != std::string::npos);  // common/|A|
    CHECK(r.out.find("33.33") != std::string::npos);  // jaccard
  }

  SUBCASE("identical vocabularies overlap 100 percent") {
    const CliResult r = run_cli({"vocab", a.string(), a.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("100.00") != std::string::npos);
  }

  SUBCASE("a word list adds segmentation and fertility tables") {
    const fs::path va = write_fixture("seg_a.txt", "transthoracique\nchat\n");
    const fs::path vb = write_fixture("seg_b.txt", "trans\nthoracique\nchat\n");
    const fs::path words = write_fixture("words.txt", "transthoracique\nchat\n");
    const CliResult r =
        run_cli({"vocab", va.string(), vb.string(), "--words", words.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("trans-thoracique") != std::string::npos);
    CHECK(r.out.find("fertility") != std::string::npos);
  }

  SUBCASE("markers strip before comparison") {
    const fs::path va = write_fixture("marked_a.txt", "\xE2\x96\x81" "chat\nique\n");
    const fs::path vb = write_fixture("marked_b.txt", "chat\n##ique\n");
    const CliResult r = run_cli({"vocab", va.string(), vb.string(), "--marker-a",
                                 "prefix:\xE2\x96\x81", "--marker-b",
                                 "continuation:##"});
    CHECK(r.code == 0);
    CHECK(r.out.find("100.00") != std::string::npos);
  }

  SUBCASE("bad marker spec exits 2") {
    CHECK(run_cli({"vocab", a.string(), b.string(), "--marker", "stuff"}).code == 2);
  }

  SUBCASE("missing vocabulary file exits 2") {
    CHECK(run_cli({"vocab", a.string(), (work_dir() / "nope.txt").string()}).code == 2);
  }

  SUBCASE("json document shape") {
    const CliResult r = run_cli({"vocab", a.string(), b.string(), "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["intersection"]["common"] == 2);
  }
}

TEST_CASE("cli: carbon estimates") {
  SUBCASE("the three reference rows") {
    const CliResult big = run_cli(
        {"carbon", "--gpus", "128", "--hours", "20", "--device", "V100"});
    CHECK(big.code == 0);
    CHECK(big.out.find("26.11") != std::string::npos);

    const CliResult mid = run_cli(
        {"carbon", "--gpus", "48", "--hours", "20", "--device", "A100"});
    CHECK(mid.code == 0);
    CHECK(mid.out.find("8.16") != std::string::npos);

    const CliResult small = run_cli(
        {"carbon", "--gpus", "2", "--hours", "39", "--device", "V100"});
    CHECK(small.code == 0);
    CHECK(small.out.find("0.80") != std::string::npos);
  }

  SUBCASE("explicit power needs no device") {
    const CliResult r = run_cli(
        {"carbon", "--gpus", "2", "--hours", "39", "--power", "0.3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("0.80") != std::string::npos);
  }

  SUBCASE("unknown device exits 2") {
    const CliResult r = run_cli(
        {"carbon", "--gpus", "1", "--hours", "1", "--device", "H100"});
    CHECK(r.code == 2);
    CHECK(r.err.find("power") != std::string::npos);
  }

  SUBCASE("no device and no power exits 2") {
    CHECK(run_cli({"carbon", "--gpus", "1", "--hours", "1"}).code == 2);
  }

  SUBCASE("negative hours exit 2") {
    const CliResult r = run_cli(
        {"carbon", "--gpus", "1", "--hours", "-5", "--device", "V100"});
    CHECK(r.code == 2);
  }

  SUBCASE("json output") {
    const CliResult r = run_cli({"carbon", "--gpus", "128", "--hours", "20",
                                 "--device", "V100", "--format", "json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["gpu_hours"] == 2560.0);
    CHECK(doc["co2_kg"] == doctest::Approx(26.112).epsilon(1e-9));
  }
}

TEST_CASE("cli: offset-exact over annotation directories") {
  fs::create_directories(work_dir() / "gold_ann");
  fs::create_directories(work_dir() / "pred_ann");
  write_fixture("gold_ann/doc1.ann", "T1\tDISO 10 18\tdiabete\n");
  write_fixture("pred_ann/doc1.ann", "T1\tDISO 10 18\tdiabete\n");
  write_fixture("gold_ann/doc2.ann", "T1\tANAT 0 4\tcoeur\n");

  const CliResult r = run_cli(
      {"evaluate", (work_dir() / "gold_ann").string(),
       (work_dir() / "pred_ann").string(), "--methodology", "offset-exact"});
  CHECK(r.code == 0);
  CHECK(r.out.find("headline (micro-f1): 100.00") != std::string::npos);
  // the unpaired doc2 warning goes to stderr, not into the report
  CHECK(r.err.find("doc2") != std::string::npos);
  CHECK(r.out.find("doc2") == std::string::npos);

  SUBCASE("single .ann files work too") {
    const CliResult single = run_cli(
        {"evaluate", (work_dir() / "gold_ann" / "doc1.ann").string(),
         (work_dir() / "pred_ann" / "doc1.ann").string(),
         "--methodology", "offset-exact"});
    CHECK(single.code == 0);
    CHECK(single.out.find("100.00") != std::string::npos);
  }

  SUBCASE("tag methodologies reject .ann input") {
    const CliResult bad = run_cli(
        {"evaluate", (work_dir() / "gold_ann").string(),
         (work_dir() / "pred_ann").string(), "--methodology", "entity-strict"});
    CHECK(bad.code == 2);
  }
}
