#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "circstab/report_json.hpp"
#include "circstab_cli/cli.hpp"

using namespace circstab;
using namespace circstab::cli;

namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "circstab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.find(needle) != std::string::npos;
  return n;
}

}  // namespace

TEST(CliAnalyze, Examples) {
  const Invocation a = invoke({"analyze", "10:1,2,8,9"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_NE(a.out.find("\"verdict\": \"nontrivially-unstable\""), std::string::npos);
  EXPECT_NE(a.out.find("\"type\": \"C4\""), std::string::npos);
  EXPECT_NE(a.out.find("\"m\": 3"), std::string::npos);

  const Invocation b = invoke({"analyze", "6:1,5", "--format", "text"});
  EXPECT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("trivially-unstable"), std::string::npos);
  EXPECT_NE(b.out.find("bipartite"), std::string::npos);

  const Invocation c = invoke({"analyze", "5:1,2,3,4", "--format", "csv"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_NE(c.out.find("5:1,2,3,4\",stable,120,240"), std::string::npos);
}

TEST(CliAnalyze, JsonRoundTripIsByteIdentical) {
  for (const char* lit : {"10:1,2,8,9", "6:1,5", "5:1,2,3,4", "24:2,3,8,9,10,14,15,16,21,22", "1:"}) {
    const Invocation r = invoke({"analyze", lit});
    ASSERT_EQ(r.code, kExitOk) << lit;
    ASSERT_FALSE(r.out.empty());
    const std::string body = r.out.substr(0, r.out.size() - 1);
    EXPECT_EQ(report_to_json(report_from_json(body)), body) << lit;
  }
}

TEST(CliAnalyze, ErrorCodes) {
  EXPECT_EQ(invoke({"analyze", "10:1,2"}).code, kExitParse);
  EXPECT_EQ(invoke({"analyze", "banana"}).code, kExitParse);
  EXPECT_EQ(invoke({"analyze"}).code, kExitParse);
  EXPECT_EQ(invoke({"analyze", "65:1,64"}).code, kExitCap);
  EXPECT_EQ(invoke({"analyze", "--input", "/nonexistent/sets.txt"}).code, kExitIo);
  EXPECT_EQ(invoke({"analyze", "10:1,9", "--out", "/nonexistent/dir/r.json"}).code, kExitIo);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(invoke({}).code, kExitParse);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(CliAnalyze, InputFile) {
  const auto path = std::filesystem::temp_directory_path() / "circstab-cli-input.txt";
  {
    std::ofstream f(path);
    f << "# two sets\n10:1,2,8,9\n\n6:1,5\n";
  }
  const Invocation r = invoke({"analyze", "--input", path.string(), "--format", "text"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(count_lines_with(r.out, "verdict"), 2);
  const Invocation j = invoke({"analyze", "--input", path.string()});
  EXPECT_EQ(j.out.front(), '[');
  std::filesystem::remove(path);
}

TEST(CliAnalyze, CapFromEnvironment) {
  const std::string cmd = std::string("CIRC_CAP=20 ") + CIRCSTAB_TOOL_PATH + " analyze 24:1,23 >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitCap);
  const std::string ok = std::string("CIRC_CAP=20 ") + CIRCSTAB_TOOL_PATH + " analyze 20:1,19 >/dev/null 2>&1";
  EXPECT_EQ(WEXITSTATUS(std::system(ok.c_str())), kExitOk);
}

TEST(CliCensus, Examples) {
  const Invocation six = invoke({"census", "--min", "6", "--max", "6"});
  EXPECT_EQ(six.code, kExitOk);
  EXPECT_NE(six.out.find("total_nontrivially_unstable=0"), std::string::npos);

  const Invocation r24 = invoke({"census", "--min", "24", "--max", "24", "--jobs", "2"});
  EXPECT_EQ(r24.code, kExitOk);
  EXPECT_EQ(count_lines_with(r24.out, "no-wilson-type 24:"), 6);
  EXPECT_NE(r24.out.find("order 24 exceptions up to isomorphism"), std::string::npos);
}

TEST(CliCensus, MachineFormats) {
  const Invocation csv = invoke({"census", "--min", "8", "--max", "10", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_EQ(csv.out.rfind("order,nontrivially_unstable,", 0), 0u);
  EXPECT_NE(csv.err.find("total_nontrivially_unstable=3"), std::string::npos);

  const auto path = std::filesystem::temp_directory_path() / "circstab-cli-summary.json";
  const Invocation json = invoke({"census", "--min", "8", "--max", "10", "--format", "json", "--out", path.string()});
  EXPECT_EQ(json.code, kExitOk);
  EXPECT_NE(json.out.find("total_nontrivially_unstable=3"), std::string::npos);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_NE(body.str().find("\"totalNontriviallyUnstable\": 3"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(CliCensus, ErrorCodes) {
  EXPECT_EQ(invoke({"census", "--min", "39", "--max", "39"}).code, kExitParse);
  EXPECT_EQ(invoke({"census", "--min", "9", "--max", "8"}).code, kExitParse);
  EXPECT_EQ(invoke({"census", "--min", "8"}).code, kExitParse);
  EXPECT_EQ(invoke({"census", "--min", "1", "--max", "70", "--extended"}).code, kExitCap);
  EXPECT_EQ(invoke({"census", "--min", "8", "--max", "8", "--out", "/nonexistent/dir/s.txt"}).code, kExitIo);
  EXPECT_EQ(invoke({"census", "--min", "8", "--max", "8", "--cache-dir", "/proc/forbidden"}).code, kExitIo);
}
