#include <gtest/gtest.h>
#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" MOBIUS_CLI_PATH "\" " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("mobius_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

nlohmann::json run_json(const std::string& args) {
  CliRun r = run(args);
  EXPECT_EQ(r.status, 0) << args;
  return nlohmann::json::parse(r.out);
}

void expect_report_shape(const nlohmann::json& j, const std::set<std::string>& verdicts) {
  for (const char* key : {"property", "poset", "frontier_ladder", "per_candidate", "verdict"})
    ASSERT_TRUE(j.contains(key)) << key << " missing from " << j.dump();
  EXPECT_TRUE(j["frontier_ladder"].is_array());
  for (const auto& c : j["per_candidate"]) {
    EXPECT_TRUE(c["z"].is_string());
    EXPECT_TRUE(c["counts"].is_array());
    EXPECT_TRUE(c["stabilized"].is_boolean());
  }
  EXPECT_TRUE(verdicts.count(j["verdict"].get<std::string>())) << j["verdict"];
}

}  // namespace

TEST(Cli, ReportsShareOneShape) {
  const std::set<std::string> vocab{"growth-observed", "stabilized", "inconclusive"};
  auto f = temp_file("shape_f.txt", "a 1\nb -1\n");
  expect_report_shape(run_json("experiment --poset counterexample-q " + f + " --ladder 3,6"), vocab);
  expect_report_shape(run_json("witnesses --poset div 2 3 --ladder 5,10"), vocab);
  expect_report_shape(run_json("check-g --poset subsets 'set:{}' --ladder 2,3"), vocab);
  expect_report_shape(run_json("certify theorem4 --ladder 5,10"), {"pass", "fail"});
}

TEST(Cli, MobiusExamples) {
  EXPECT_EQ(run("mobius --poset div 1 12").out, "0\n");
  EXPECT_EQ(run("mobius --poset div 1 30").out, "-1\n");
  EXPECT_EQ(run("mobius --poset counterexample-p z1 z1").out, "1\n");
  EXPECT_EQ(run("mobius --poset counterexample-p z1 'prod:(7,1)'").out, "-1\n");
  EXPECT_EQ(run("mobius --poset 'prod(div,subsets)' '(div:1,set:{})' '(div:6,set:{1})'").out, "-1\n");
  auto j = run_json("mobius --poset div 2 12 --format json");
  EXPECT_EQ(j["mu"], "1");
  EXPECT_EQ(j["y"], "div:12");
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("mobius --poset div 1").status, 2);
  EXPECT_EQ(run("mobius --poset div 1 set:{1}").status, 2);
  EXPECT_EQ(run("mobius --poset lattice 1 2").status, 2);
  EXPECT_EQ(run("mobius --poset subspaces:q=6 x y").status, 2);
  EXPECT_EQ(run("witnesses --poset div 2 3 --ladder 10,5").status, 2);
  EXPECT_EQ(run("mobius --poset div 1 2 --format yaml").status, 2);
  EXPECT_EQ(run("frobnicate").status, 2);
}

TEST(Cli, MalformedFunctionFileReportsTheLine) {
  auto path = temp_file("bad_f.txt", "# header\nz1 1\nz2 one\n");
  const std::string cmd = "\"" MOBIUS_CLI_PATH "\" experiment --poset counterexample-p " + path + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  ASSERT_TRUE(pipe);
  std::string err;
  std::array<char, 1024> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) err.append(buf.data(), n);
  const int raw = pclose(pipe);
  EXPECT_EQ(WEXITSTATUS(raw), 2);
  EXPECT_NE(err.find("line 3"), std::string::npos) << err;
}

TEST(Cli, ExperimentExamples) {
  auto p = temp_file("p_f.txt", "z1 -1\nz2 1\n");
  auto j = run_json("experiment --poset counterexample-p " + p);
  EXPECT_EQ(j["g_support_counts"], nlohmann::json::array({2, 2, 2}));
  EXPECT_EQ(j["verdict"], "stabilized");
  EXPECT_EQ(j["frontier_ladder"], nlohmann::json::array({25, 50, 100}));

  auto d = temp_file("d_f.txt", "1 1\n");
  j = run_json("experiment --poset div " + d + " --ladder 10,20,40");
  EXPECT_EQ(j["g_support_counts"], nlohmann::json::array({10, 20, 40}));
  EXPECT_EQ(j["verdict"], "growth-observed");

  auto q = temp_file("q_f.txt", "a 1\n");
  j = run_json("experiment --poset counterexample-q " + q + " --ladder 4,8,16");
  EXPECT_EQ(j["verdict"], "growth-observed");

  EXPECT_EQ(run("experiment --poset div " + d + " --ladder 2,4 --format csv").out,
            "frontier,g_support\n2,2\n4,4\n");
}

TEST(Cli, TransformAndInvertRoundTrip) {
  auto f = temp_file("rt_f.txt", "2 1\n3 -1/2\n");
  auto g = run_json("transform --poset div " + f + " --n 12");
  EXPECT_EQ(g["support_size"], 8);
  std::string g_text;
  for (const auto& e : g["output"]) g_text += e["element"].get<std::string>() + " " + e["value"].get<std::string>() + "\n";
  auto gpath = temp_file("rt_g.txt", g_text);
  auto back = run_json("invert --poset div " + gpath + " --n 12");
  EXPECT_EQ(back["output"], nlohmann::json::parse(R"([{"element":"div:2","value":"1"},{"element":"div:3","value":"-1/2"}])"));
}

TEST(Cli, WitnessesAndCheckG) {
  auto j = run_json("witnesses --poset counterexample-p z1 z2 --ladder 5,10");
  EXPECT_EQ(j["property"], "H_2");
  EXPECT_EQ(j["verdict"], "stabilized");
  for (const auto& c : j["per_candidate"]) EXPECT_EQ(c["counts"], nlohmann::json::array({1, 1}));
  j = run_json("check-g --poset counterexample-p z1 --ladder 5,10,20");
  EXPECT_EQ(j["per_candidate"][0]["counts"], nlohmann::json::array({6, 11, 21}));
  EXPECT_EQ(j["verdict"], "growth-observed");
}

TEST(Cli, Certify) {
  CliRun r4 = run("certify theorem4 --n 10");
  EXPECT_EQ(r4.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r4.out)["verdict"], "pass");
  CliRun r5 = run("certify theorem5 --n 50");
  EXPECT_EQ(r5.status, 0);
  EXPECT_EQ(nlohmann::json::parse(r5.out)["verdict"], "pass");
  EXPECT_EQ(run("certify theorem4 --ladder 2,4").status, 2);
  EXPECT_EQ(run("certify theorem6").status, 2);
}

TEST(Cli, OutputIsDeterministic) {
  const std::string args = "certify theorem5 --ladder 6,12 --seed 42";
  EXPECT_EQ(run(args).out, run(args).out);
  EXPECT_NE(run(args).out, run("certify theorem5 --ladder 6,12 --seed 43").out);
}

TEST(Cli, Reduced) {
  EXPECT_EQ(run("reduced mobius --family qbinomial --q 2 --n 4").out, "[1,-1,2,-8]\n");
  EXPECT_EQ(run("reduced mobius --family linear --n 5").out, "[1,-1,0,0,0]\n");
  CliRun v = run("reduced verify --family dirichlet --nmax 60");
  EXPECT_EQ(v.out, "all-match\n");
  EXPECT_EQ(v.status, 0);
  EXPECT_EQ(run("reduced verify --family binomial --nmax 5").out, "all-match\n");
  EXPECT_EQ(run("reduced mobius --family qbinomial").status, 2);

  auto f = temp_file("seq_f.txt", "2 1\n4 -10\n");
  auto j = run_json("reduced prop7 " + f + " --family binomial --n 500");
  EXPECT_EQ(j["verdict"], "pass");
  j = run_json("reduced prop8 " + f + " --family qbinomial --q 3 --n 30");
  EXPECT_EQ(j["verdict"], "pass");
  auto z = temp_file("seq_zeta.txt", "1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n");
  EXPECT_EQ(run("reduced conv " + z + " " + z + " --family dirichlet --n 6").out, "[1,2,2,3,2,4]\n");
  j = run_json("reduced linear-pair");
  EXPECT_EQ(j["violates_R"], true);
}

TEST(Cli, OutFileAndCacheEnvironment) {
  auto path = (std::filesystem::temp_directory_path() / "mobius_cli_out.txt").string();
  std::filesystem::remove(path);
  EXPECT_EQ(run("mobius --poset div 1 30 --out " + path).out, "");
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "-1");
  EXPECT_EQ(run("check-g --poset div 1 --ladder 10,30", "MOBIUS_POSETS_CACHE=4").out,
            run("check-g --poset div 1 --ladder 10,30").out);
  EXPECT_EQ(run("mobius --poset div 1 2", "MOBIUS_POSETS_CACHE=lots").status, 2);
}

TEST(Cli, ZooList) {
  CliRun r = run("zoo list");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("counterexample-q"), std::string::npos);
  auto j = run_json("zoo list --format json");
  EXPECT_TRUE(j.is_array());
}
