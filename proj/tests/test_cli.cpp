#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>

#include "fixtures.hpp"
#include "medianlab/cli.hpp"
#include "medianlab/errors.hpp"
#include "medianlab/io.hpp"

namespace medianlab {
namespace {

std::string data(const std::string& name) { return std::string(MEDIANLAB_DATA_DIR) + "/" + name; }

cli::DispatchResult run(const std::string& command, std::vector<std::string> inputs,
                        const std::string& format = "json", const std::string& action = "") {
  cli::RunConfig c;
  c.command = command;
  c.inputs = std::move(inputs);
  c.format = format;
  c.action_path = action;
  return cli::dispatch(c);
}

io::Json json_of(const cli::DispatchResult& r) { return io::Json::parse(r.output); }

TEST(Cli, DecomposeReportsDimension) {
  const auto r = run("decompose", {data("p3xcube.json")});
  ASSERT_EQ(r.exit_code, 0) << r.error;
  EXPECT_EQ(json_of(r)["dim_c"], 1);
  const auto t = run("decompose", {data("p3.json")}, "table");
  EXPECT_NE(t.output.find("no cubical factor"), std::string::npos);
}

TEST(Cli, WallsOfPoint) {
  const auto r = run("walls", {data("point.json")});
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json_of(r)["wall_count"], 0);
}

TEST(Cli, StationaryParity) {
  const auto r = run("stationary", {data("cube3.json")}, "json", data("parity.json"));
  ASSERT_EQ(r.exit_code, 0) << r.error;
  const auto j = json_of(r);
  EXPECT_EQ(j["vertex_count"], 2);
  for (const auto& v : j["vertices"]) {
    EXPECT_EQ(std::count(v.begin(), v.end(), io::Json("1/4")), 4);
  }
}

TEST(Cli, StationaryNeedsMu) {
  const auto r = run("stationary", {data("cube3.json")}, "json", data("parity_action.json"));
  EXPECT_EQ(r.exit_code, 1);
}

TEST(Cli, MinimalAndCubes) {
  EXPECT_EQ(json_of(run("minimal", {data("cube3.json")}, "json", data("parity_action.json")))["minimal"], true);
  const auto p = json_of(run("minimal", {data("p3.json")}, "json", data("p3_flip.json")));
  EXPECT_EQ(p["witness"], "010");
  EXPECT_EQ(json_of(run("cubes", {data("square.json")}))["count"], 11);
}

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(run("check", {data("p3_table.json")}).exit_code, 0);
  const auto bad = run("check", {data("bad_absorption.json")});
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(json_of(bad)["valid"], false);
  EXPECT_EQ(run("walls", {data("missing.json")}).exit_code, 1);
  EXPECT_EQ(run("nope", {}).exit_code, 1);
  EXPECT_EQ(run("walls", {data("p3.json")}, "xml").exit_code, 1);
}

TEST(Cli, ErrorsNameTheFile) {
  const std::string path = ::testing::TempDir() + "/not_closed.json";
  std::ofstream(path) << R"({"embedding": ["100", "010", "001"]})";
  const auto r = run("walls", {path});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.error.find(path), std::string::npos);
  const std::string garbled = ::testing::TempDir() + "/garbled.json";
  std::ofstream(garbled) << "{\n \"n\": 3,\n \"median\": [0, 0,\n}";
  const auto g = run("walls", {garbled});
  EXPECT_EQ(g.exit_code, 1);
  EXPECT_NE(g.error.find("line 4"), std::string::npos) << g.error;
}

TEST(Cli, IdenticalRunsAreByteIdentical) {
  cli::RunConfig c;
  c.command = "balanced";
  c.inputs = {data("square.json")};
  c.starts = 10;
  c.iters = 50;
  c.seed = 3;
  EXPECT_EQ(cli::dispatch(c).output, cli::dispatch(c).output);
  cli::RunConfig s;
  s.command = "simulate";
  s.depth = 2;
  s.steps = 20;
  s.trajectories = 2000;
  s.format = "json";
  EXPECT_EQ(cli::dispatch(s).output, cli::dispatch(s).output);
}

TEST(Cli, OutFlagWritesFile) {
  cli::RunConfig c;
  c.command = "walls";
  c.inputs = {data("p3.json")};
  c.out = ::testing::TempDir() + "/walls_out.txt";
  const auto r = cli::dispatch(c);
  ASSERT_EQ(r.exit_code, 0);
  std::ifstream in(c.out);
  const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  EXPECT_EQ(written, r.output);
}

TEST(Io, AlgebraRoundTrip) {
  for (const auto& e : testing::corpus3().entries) {
    const auto j = io::algebra_to_json(e.algebra);
    EXPECT_EQ(io::algebra_from_json(io::Json::parse(j.dump())), e.algebra);
  }
  const auto t = MedianAlgebra::from_table(3, testing::median_table_p3());
  EXPECT_EQ(io::algebra_from_json(io::algebra_to_json(t)), t);
  // decompose emits M' which must re-parse
  const auto d = json_of(run("decompose", {data("p3xcube.json")}));
  EXPECT_EQ(io::algebra_from_json(d["m_prime"]).size(), 3u);
}

TEST(Io, RejectsAmbiguousAlgebra) {
  EXPECT_THROW(io::algebra_from_json(io::Json::parse(R"({"n":1,"median":[0],"embedding":["0"]})")),
               MedianError);
  EXPECT_THROW(io::algebra_from_json(io::Json::parse(R"({"n":1})")), MedianError);
  EXPECT_THROW(io::algebra_from_json(io::Json::parse(R"({"embedding":["0a"]})")), MedianError);
}

TEST(Io, ActionRoundTrip) {
  const auto m = io::read_algebra(data("cube3.json"));
  const auto a = io::read_action(m, data("parity.json"));
  ASSERT_TRUE(a.mu);
  const auto j = io::action_to_json(a.action, &*a.mu);
  EXPECT_EQ(j["mu"]["a b"], "1/4");
  const auto b = io::action_from_json(m, io::Json::parse(j.dump()));
  EXPECT_EQ(b.action.generators(), a.action.generators());
  EXPECT_EQ(b.mu->weights(), a.mu->weights());
}

}  // namespace
}  // namespace medianlab
