#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "support/helpers.hpp"

using namespace ltlearn;

namespace {

const std::string cli = LTLEARN_CLI_PATH;

struct run_output {
  int code;
  std::string out;
};

run_output run(const std::string& args) {
  auto out_path = std::filesystem::temp_directory_path() / "ltlearn_cli_out.txt";
  std::string cmd = cli + " " + args + " > " + out_path.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  run_output r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::filesystem::path write_sample(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path;
}

}  // namespace

TEST_CASE("cli learn finds a first-letter separator") {
  auto s = write_sample("cli_first.json",
                        R"({"alphabet":["a","b"],"positive":[["a","b"]],"negative":[["b","a"]]})");
  auto r = run("learn --input " + s.string() + " --mode exact --max-size 1");
  CHECK(r.code == 0);
  CHECK(r.out.find("formula: a") != std::string::npos);
}

TEST_CASE("cli learn exit codes") {
  auto s = write_sample("cli_codes.json",
                        R"({"alphabet":["a","b"],"positive":[["a","b"]],"negative":[["a","b","a"]]})");
  // no LTL(F,and) separator exists for ab vs aba
  auto none = run("learn --input " + s.string() + " --fragment F,and --mode minimal");
  CHECK(none.code == 3);
  // exact search below the minimum reports the bound
  auto bound = run("learn --input " + s.string() + " --fragment X,and --mode exact --max-size 1");
  CHECK(bound.code == 4);
  // overlapping positive/negative words are an input error
  auto bad = write_sample("cli_overlap.json",
                          R"({"alphabet":["a"],"positive":[["a"]],"negative":[["a"]]})");
  auto overlap = run("learn --input " + bad.string() + " --mode exact --max-size 2");
  CHECK(overlap.code == 2);
  // greedy-xand demands the X,and fragment
  auto wrong = run("learn --input " + s.string() + " --fragment F,and --mode greedy-xand");
  CHECK(wrong.code == 2);
}

TEST_CASE("cli learn auto mode uses text samples and json output") {
  auto s = write_sample("cli_text.txt", "+\na b\n-\nb a\n");
  auto r = run("learn --input " + s.string() + " --output json");
  CHECK(r.code == 0);
  CHECK(r.out.find("\"result\": \"found\"") != std::string::npos);
  CHECK(r.out.find("\"size\": 1") != std::string::npos);
}

TEST_CASE("cli check verdicts") {
  auto s = write_sample("cli_check.json",
                        R"({"alphabet":["a","b"],"positive":[["b","a"]],"negative":[["b","b"]]})");
  CHECK(run("check --input " + s.string() + " --formula \"F a\"").code == 0);
  CHECK(run("check --input " + s.string() + " --formula true").code == 1);
  CHECK(run("check --input " + s.string() + " --formula \"(a &\"").code == 2);
}

TEST_CASE("cli learn output re-verifies with cli check") {
  auto s = write_sample(
      "cli_reverify.json",
      R"({"alphabet":["a","b"],"positive":[["a","b"],["a","b","a","b"]],"negative":[["b","a"],["b","b"]]})");
  auto learned = run("learn --input " + s.string() + " --mode exact --max-size 4 --output json");
  REQUIRE(learned.code == 0);
  auto pos = learned.out.find("\"formula\": \"");
  REQUIRE(pos != std::string::npos);
  pos += 12;
  auto end = learned.out.find('"', pos);
  std::string text = learned.out.substr(pos, end - pos);
  CHECK(run("check --input " + s.string() + " --formula \"" + text + "\"").code == 0);
}

TEST_CASE("cli learn is deterministic across jobs") {
  auto s = write_sample(
      "cli_jobs.json",
      R"({"alphabet":["a","b"],"positive":[["a","b","a","b"],["a","b","b","a"]],"negative":[["b","a","b","a"],["b","b"]]})");
  auto one = run("learn --input " + s.string() + " --mode exact --max-size 6 --jobs 1 --output json");
  auto four = run("learn --input " + s.string() + " --mode exact --max-size 6 --jobs 4 --output json");
  REQUIRE(one.code == 0);
  REQUIRE(four.code == 0);
  auto strip_time = [](std::string text) {
    auto p = text.find("\"time_ms\"");
    if (p != std::string::npos) {
      auto q = text.find('\n', p);
      text.erase(p, q - p);
    }
    return text;
  };
  CHECK(strip_time(one.out) == strip_time(four.out));
}

TEST_CASE("cli generate writes sample and manifest") {
  auto dir = std::filesystem::temp_directory_path() / "ltlearn_cli_gen";
  std::filesystem::remove_all(dir);
  auto r = run("generate fixed3-fand -m 1 -T 1 -k 1 --out " + dir.string());
  CHECK(r.code == 0);
  CHECK(r.out.find("K = 41") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "sample.json"));
  CHECK(std::filesystem::exists(dir / "manifest.json"));

  sample s = load_sample(dir / "sample.json");
  std::ifstream mf(dir / "manifest.json");
  nlohmann::json manifest;
  mf >> manifest;
  CHECK(manifest.at("K") == 41);
  formula witness = parse_formula(manifest.at("witness").get<std::string>());
  CHECK(separates(witness, s));

  // k = 0: no witness in the manifest
  auto dir0 = std::filesystem::temp_directory_path() / "ltlearn_cli_gen0";
  std::filesystem::remove_all(dir0);
  auto r0 = run("generate hitting-for -m 2 -T \"1;2\" -k 0 --out " + dir0.string());
  CHECK(r0.code == 0);
  std::ifstream mf0(dir0 / "manifest.json");
  nlohmann::json manifest0;
  mf0 >> manifest0;
  CHECK_FALSE(manifest0.contains("witness"));
}

TEST_CASE("cli generate pad-x rejects multi-positive samples") {
  auto s = write_sample(
      "cli_padx_multi.json",
      R"({"alphabet":["a","b"],"positive":[["a","b"],["a","a"]],"negative":[["b","a"]]})");
  auto dir = std::filesystem::temp_directory_path() / "ltlearn_cli_padx";
  auto r = run("generate pad-x --input " + s.string() + " --out " + dir.string());
  CHECK(r.code == 2);

  auto good = write_sample(
      "cli_padx_ok.json",
      R"({"alphabet":["a","b"],"positive":[["a","b"]],"negative":[["b","a"]]})");
  std::filesystem::remove_all(dir);
  auto ok = run("generate pad-x --input " + good.string() + " --out " + dir.string());
  CHECK(ok.code == 0);
  CHECK(ok.out.find("M = 4") != std::string::npos);
  sample padded = load_sample(dir / "sample.json");
  CHECK(padded.positives.front().size() == 60);
}

TEST_CASE("cli greedy learner runs on a generated set-cover benchmark") {
  auto dir = std::filesystem::temp_directory_path() / "ltlearn_cli_sc";
  std::filesystem::remove_all(dir);
  REQUIRE(run("generate setcover-xand -n 2 -S \"1;2\" -k 2 --out " + dir.string()).code == 0);
  auto learned =
      run("learn --input " + (dir / "sample.json").string() + " --mode greedy-xand --output json");
  CHECK(learned.code == 0);
  // the minimal pattern pins every position: size 7 on this instance
  CHECK(learned.out.find("\"size\": 7") != std::string::npos);

  auto pos = learned.out.find("\"formula\": \"");
  REQUIRE(pos != std::string::npos);
  pos += 12;
  std::string text = learned.out.substr(pos, learned.out.find('"', pos) - pos);
  CHECK(run("check --input " + (dir / "sample.json").string() + " --formula \"" + text + "\"")
            .code == 0);
}

TEST_CASE("cli version flag") {
  auto r = run("--version");
  CHECK(r.code == 0);
  CHECK(r.out.find("ltlearn") != std::string::npos);
}
