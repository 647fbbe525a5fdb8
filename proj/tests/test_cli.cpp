#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "edgereg/cli.hpp"
#include "edgereg/serialize.hpp"

namespace fs = std::filesystem;
using edgereg::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args, const std::string& stdin_text = "",
           const std::map<std::string, std::string>& env = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = edgereg::cli::run(args, in, out, err, [&](const std::string& k) -> std::optional<std::string> {
    const auto it = env.find(k);
    if (it == env.end()) return std::nullopt;
    return it->second;
  });
  return {code, out.str(), err.str()};
}

std::string write_file(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "edgereg_cli_test";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p, std::ios::binary) << text;
  return p.string();
}

const std::string kC6 = "x1 y1\ny1 x2\nx2 y2\ny2 x3\nx3 y3\ny3 x1\n";
const std::string kP4 = "a b\nb c\nc d\n";
const std::string kC4 = "a b\nb c\nc d\nd a\n";

}  // namespace

TEST_CASE("reg") {
  const std::string c6 = write_file("c6.txt", kC6);
  const Result r = run({"reg", c6, "--power", "2"});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["regularity"] == 5);
  const Result c4 = run({"reg", "-", "--format", "text"}, kC4);
  CHECK(c4.code == 0);
  CHECK(c4.out.starts_with("reg(I^1) = 2\n"));
  const Result csv = run({"--format", "csv", "reg", "-"}, kC4);
  CHECK(csv.out == "regularity,2\ni\\j,2,3,4\n0,4,0,0\n1,0,4,0\n2,0,0,1\n");
  const Result empty = run({"reg", write_file("empty.txt", "")});
  CHECK(empty.code == 2);
  CHECK(empty.err.find("parse error") != std::string::npos);
  const Result bad_line = run({"reg", "-"}, "a b\nc\n");
  CHECK(bad_line.code == 2);
  CHECK(bad_line.err.find("line 2") != std::string::npos);
}

TEST_CASE("graph6 input") {
  const Result r = run({"reg", write_file("c6.g6", "EhEG\n")});
  CHECK(r.code == 0);
  CHECK(Json::parse(r.out)["regularity"] == 3);
  const Result bad = run({"reg", write_file("bad.g6", "C~~\n")});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("byte offset 2") != std::string::npos);
  CHECK(run({"--g6", "reg", "-"}, "C~\n").code == 0);
}

TEST_CASE("classify") {
  const Result c6 = run({"classify", "-", "--format", "text"}, kC6);
  CHECK(c6.code == 0);
  CHECK(c6.out.starts_with("reg3\ninduced cycle in complement: "));
  const Result j = run({"classify", "-"}, kC6);
  CHECK(Json::parse(j.out)["complement_cycle"]["vertices"].size() == 4);
  CHECK(Json::parse(run({"classify", "-"}, kP4).out)["class"] == "reg2");
  const Result k3 = run({"classify", "-"}, "a b\nb c\nc a\n");
  CHECK(k3.code == 2);
  CHECK(k3.err.find("not bipartite") != std::string::npos);
  CHECK(run({"classify", "-"}, "a b\nc d\n").err.find("disconnected") != std::string::npos);
}

TEST_CASE("colon") {
  const Result p4 = run({"colon", "-", "--edges", "bc", "--witnesses", "--format", "text"}, kP4);
  CHECK(p4.code == 0);
  CHECK(p4.out ==
        "colon ideal: {a*b, a*d, b*c, c*d}\n"
        "new edges: a-d\n"
        "squares:\n"
        "witness a-d: a b c d (factors 0)\n");
  const Result j = run({"colon", "-", "--edges", "bc", "--witnesses"}, kP4);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["witnesses"][0]["path"].dump() == "[0,1,2,3]");
  CHECK(parsed["witnesses"][0]["factors"].dump() == "[0]");
  const Result c6 = run({"colon", "-", "--edges", "x1y1,x1y1"}, kC6);
  CHECK(c6.code == 0);
  CHECK(Json::parse(c6.out)["product"].size() == 2);
  CHECK(run({"colon", "-", "--edges", "ac"}, kP4).code == 2);
  CHECK(run({"colon", "-", "--edges", "bq"}, kP4).code == 2);
}

TEST_CASE("sweep") {
  const Result n4 = run({"sweep", "--n", "4", "--smax", "3", "--format", "csv"});
  CHECK(n4.code == 0);
  CHECK(n4.out ==
        "graph6,n,class,reg,pass\n"
        "\"A_\",2,reg2,2;4;6,true\n"
        "\"BW\",3,reg2,2;4;6,true\n"
        "\"CR\",4,reg2,2;4;6,true\n"
        "\"CF\",4,reg2,2;4;6,true\n"
        "\"Cr\",4,reg2,2;4;6,true\n");
  CHECK(n4.err == "summary: reg2=5 graphs=5 failures=0\n");
  const Result a = run({"sweep", "--n", "6", "--smax", "2"});
  const Result b = run({"sweep", "--n", "6", "--smax", "2", "--workers", "3"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.err == "summary: reg2=19 reg3=8 graphs=27 failures=0\n");
  CHECK(run({"sweep", "--n", "20"}).code == 3);
  CHECK(run({"sweep", "--n", "8"}).code == 3);
  const std::string summary = (fs::temp_directory_path() / "edgereg_cli_test" / "summary.csv").string();
  CHECK(run({"sweep", "--n", "3", "--summary", summary}).code == 0);
  std::ifstream f(summary);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "graph6,n,class,reg,pass\n\"A_\",2,reg2,2;4,true\n\"BW\",3,reg2,2;4,true\n");
  const Result t = run({"sweep", "--n", "3", "--timings"});
  CHECK(Json::parse(t.out.substr(0, t.out.find('\n'))).contains("timings_ms"));
}

TEST_CASE("configuration precedence") {
  const std::string cfg = write_file("cfg.toml", "# comment\nfield = \"q\"\nformat = text\nworkers = 2\n");
  const Result from_file = run({"--config", cfg, "reg", "-"}, kC4);
  CHECK(from_file.out.starts_with("reg(I^1) = 2"));
  const Result env = run({"--config", cfg, "--format", "json", "reg", "-"}, kC4, {{"EDGEREG_FIELD", "f2"}});
  CHECK(Json::parse(env.out)["betti"]["field"] == "F2");
  const Result file_only = run({"--config", cfg, "--format", "json", "reg", "-"}, kC4);
  CHECK(Json::parse(file_only.out)["betti"]["field"] == "Q");
  const Result flag = run({"--config", cfg, "--format", "json", "--field", "q", "reg", "-"}, kC4,
                          {{"EDGEREG_FIELD", "f2"}});
  CHECK(Json::parse(flag.out)["betti"]["field"] == "Q");
  CHECK(run({"--config", write_file("bad.toml", "colour = red\n"), "reg", "-"}, kC4).code == 2);
  CHECK(run({"--config", write_file("neg.toml", "workers = 0\n"), "reg", "-"}, kC4).code == 2);
  CHECK(run({"reg", "-"}, kC4, {{"EDGEREG_WORKERS", "x"}}).code == 2);
  CHECK(run({"--field", "gf3", "reg", "-"}, kC4).code == 2);
}

TEST_CASE("usage errors and caps") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"reg", "-", "--power", "0"}, kC4).code == 2);
  const Result cap = run({"--lattice-cap", "3", "reg", "-", "--power", "2"}, kC6);
  CHECK(cap.code == 3);
  CHECK(cap.err.find("lattice_cap") != std::string::npos);
}

TEST_CASE("installed binary") {
  const std::string cmd = std::string(EDGEREG_CLI_PATH) + " sweep --n 20 2>/dev/null";
  const int status = std::system(cmd.c_str());
  CHECK(WEXITSTATUS(status) == 3);
  FILE* pipe = popen((std::string(EDGEREG_CLI_PATH) + " reg " + write_file("c6b.txt", kC6) + " --power 3").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::string out;
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  CHECK(Json::parse(out)["regularity"] == 7);
}
