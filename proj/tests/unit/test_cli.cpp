//------------------------------------------------------------------------------
//
//   Copyright 2026 The nonext Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#include "nonext/cli.hpp"
#include "nonext/errors.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace nonext;

namespace {

struct Run
{
  int         code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> const &args)
{
  std::ostringstream out;
  std::ostringstream err;
  Run                r;
  r.code = run_cli(args, out, err);
  r.out  = out.str();
  r.err  = err.str();
  return r;
}

std::vector<std::string> lines_of(std::string const &text)
{
  std::vector<std::string> lines;
  std::istringstream       in(text);
  for (std::string line; std::getline(in, line);)
  {
    lines.push_back(line);
  }
  return lines;
}

class Workspace
{
public:
  Workspace()
    : dir_(std::filesystem::temp_directory_path() / "nonext_cli_test")
  {
    std::filesystem::create_directories(dir_);
  }
  ~Workspace()
  {
    std::filesystem::remove_all(dir_);
  }

  std::string file(std::string const &name, std::string const &contents) const
  {
    auto const path = dir_ / name;
    std::ofstream(path) << contents;
    return path.string();
  }

private:
  std::filesystem::path dir_;
};

Run run_binary(std::string const &args)
{
  std::string const command = std::string(NONEXT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE             *pipe    = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run                   r;
  std::array<char, 512> buffer{};
  while (std::fgets(buffer.data(), static_cast<int>(buffer.size()), pipe) != nullptr)
  {
    r.out += buffer.data();
  }
  int const status = pclose(pipe);
  r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("q grid parsing")
{
  CHECK(parse_q_grid("0:2:1") == std::vector<double>{0.0, 1.0, 2.0});
  CHECK(parse_q_grid("0:1:0.25") == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  auto const tenths = parse_q_grid("0:1:0.1");
  CHECK(tenths.size() == 11);
  CHECK(tenths.back() == 1.0);
  CHECK(parse_q_grid("2:1:0.5").empty());
  CHECK(parse_q_grid("1.5:1.5:1") == std::vector<double>{1.5});
  CHECK_THROWS_AS(parse_q_grid("0:1"), ArgumentError);
  CHECK_THROWS_AS(parse_q_grid("0:1:0"), ArgumentError);
  CHECK_THROWS_AS(parse_q_grid("-1:1:1"), ArgumentError);
  CHECK_THROWS_AS(parse_q_grid("a:1:1"), ArgumentError);
  CHECK(parse_number_list("0.25, 0.75") == std::vector<double>{0.25, 0.75});
  CHECK_THROWS_AS(parse_number_list("0.25,,0.75"), ArgumentError);
  CHECK(default_q_grid() == std::vector<double>{0.0, 0.5, 1.0, 1.5, 2.0});
}

TEST_CASE("entropy command")
{
  Workspace  ws;
  auto const fair   = ws.file("fair.csv", "heads,5\ntails,5\n");
  auto const single = ws.file("single.csv", "only,7\n");

  auto const r = run({"entropy", fair, "--q", "2"});
  CHECK(r.code == kExitSuccess);
  auto const rows = lines_of(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "input,measure,q,value");
  CHECK(rows[1] == fair + ",shannon,1,0.69314718056");
  CHECK(rows[2] == fair + ",tsallis,2,0.5");
  CHECK(rows[3] == fair + ",renyi,2,0.69314718056");

  auto const defaults = run({"entropy", single, "--measure", "tsallis"});
  auto const drows    = lines_of(defaults.out);
  REQUIRE(drows.size() == 6);
  std::vector<std::string> const qs{"0", "0.5", "1", "1.5", "2"};
  for (std::size_t i = 0; i < qs.size(); ++i)
  {
    CHECK(drows[i + 1] == single + ",tsallis," + qs[i] + ",0");
  }

  auto const structured = run({"entropy", fair, "--q", "2", "--format", "structured"});
  auto const records    = nlohmann::json::parse(structured.out);
  REQUIRE(records.size() == 3);
  CHECK(records[1]["measure"] == "tsallis");
  CHECK(records[1]["value"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("divergence command")
{
  Workspace  ws;
  auto const left  = ws.file("left.csv", "a,1\nb,0\n");
  auto const right = ws.file("right.csv", "b,3\n");
  auto const copy  = ws.file("copy.csv", "a,2\nb,0\n");

  auto const disjoint = run({"divergence", left, right, "--measure", "jtqd,kld", "--q-grid", "0:2:1"});
  CHECK(disjoint.code == kExitSuccess);
  auto const rows = lines_of(disjoint.out);
  CHECK(rows[0] == "measure,q,first,second,value");
  auto const has = [&](std::string const &row) {
    return std::find(rows.begin(), rows.end(), row) != rows.end();
  };
  CHECK(has("jtqd,0," + left + "," + right + ",1"));
  CHECK(has("jtqd,1," + left + "," + right + ",0.69314718056"));
  CHECK(has("jtqd,2," + left + "," + right + ",0.5"));
  CHECK(has("jtqd,2," + left + "," + left + ",0"));
  CHECK(has("kld,," + left + "," + right + ",inf"));
  CHECK(has("kld,," + left + "," + left + ",0"));

  auto const identical = run({"divergence", left, copy});
  CHECK(identical.code == kExitSuccess);
  for (auto const &row : lines_of(identical.out))
  {
    if (row.rfind("measure", 0) != 0)
    {
      CHECK(row.substr(row.rfind(',') + 1) == "0");
    }
  }

  CHECK(run({"divergence", left}).code == kExitUsage);
  CHECK(run({"divergence", left, right, "--measure", "bogus"}).code == kExitUsage);
  CHECK(run({"divergence", left, right, "--weights", "1,2,3"}).code == kExitUsage);
  CHECK(run({"divergence", left, right, "--weights", "0.25,0.75"}).code == kExitSuccess);
}

TEST_CASE("sweep command")
{
  Workspace  ws;
  auto const left  = ws.file("left.csv", "a,1\nb,0\n");
  auto const right = ws.file("right.csv", "a,0\nb,1\n");
  auto const fair  = ws.file("fair.csv", "a,1\nb,1\n");

  auto const r = run({"sweep", left, right, "--q-grid", "0:2:1"});
  CHECK(r.code == kExitSuccess);
  CHECK(r.out == "q,jtqd\n0,1\n1,0.69314718056\n2,0.5\n");

  auto const uniform = run({"sweep", fair, fair, "--q-grid", "0:1:0.5", "--measure", "jtqd,jtd"});
  auto const rows    = lines_of(uniform.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0] == "q,jtqd,jtd");
  CHECK(rows[1] == "0,-1,0");
  CHECK(rows[2] == "0.5,-0.343145750508,0");
  CHECK(rows[3] == "1,0,0");

  CHECK(run({"sweep", left, right, "--q-grid", "2:1:1"}).code == kExitUsage);
  CHECK(run({"sweep", left, right, "--q", "1", "--q-grid", "0:1:1"}).code == kExitUsage);
  CHECK(run({"sweep", left, right, "--q", "-1"}).code == kExitUsage);
  CHECK(run({"sweep", left}).code == kExitUsage);
}

TEST_CASE("input errors name the file and line")
{
  Workspace  ws;
  auto const good  = ws.file("good.csv", "a,1\n");
  auto const bad   = ws.file("bad.csv", "a,1\nb,-2\n");
  auto const empty = ws.file("empty.csv", "a,0\n");

  auto const r = run({"entropy", bad});
  CHECK(r.code == kExitInput);
  CHECK(r.err.find(bad) != std::string::npos);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(run({"entropy", ws.file("x", "") + ".missing"}).code == kExitInput);
  CHECK(run({"sweep", good, empty}).code == kExitInput);
}

TEST_CASE("usage errors")
{
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"entropy", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"entropy"}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitSuccess);
}

TEST_CASE("verify command")
{
  auto const first = run({"verify", "--only", "bounds", "--trials", "200", "--seed", "5"});
  CHECK(first.code == kExitSuccess);
  auto const rows = lines_of(first.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == "check,name,verdict,worst_violation,tolerance,samples,seed,witness,note");
  CHECK(rows[1].rfind("bounds,jtqd_bounds,pass,", 0) == 0);

  auto const second = run({"verify", "--only", "bounds", "--trials", "200", "--seed", "5"});
  CHECK(first.out == second.out);

  auto const structured = run({"verify", "--only", "triangle", "--trials", "100", "--format", "structured"});
  auto const records    = nlohmann::json::parse(structured.out);
  REQUIRE(records.size() == 1);
  CHECK(records[0]["verdict"] == "pass");

  CHECK(run({"verify", "--only", "nothing"}).code == kExitUsage);
  CHECK(run({"verify", "--trials", "0"}).code == kExitUsage);
}

TEST_CASE("minimize command")
{
  Workspace  ws;
  auto const target = ws.file("target.csv", "x,2\ny,8\n");
  auto const flat   = ws.file("flat.csv", "x,1\ny,1\nz,1\n");

  auto const r = run({"minimize", target, "--q", "2"});
  CHECK(r.code == kExitSuccess);
  CHECK(r.out == "label,target,minimizer\nx,0.2,0\ny,0.8,1\nobjective,0.16,0.1\n");

  auto const structured = run({"minimize", target, "--q", "1", "--format", "structured"});
  CHECK(structured.code == kExitSuccess);
  auto const record = nlohmann::json::parse(structured.out);
  CHECK(record["minimizer"][0].get<double>() == doctest::Approx(0.2).epsilon(1e-4));
  CHECK(record["converged"] == true);

  auto const uniform = run({"minimize", flat, "--q", "0.5", "--format", "structured"});
  auto const u       = nlohmann::json::parse(uniform.out);
  for (auto const &v : u["minimizer"])
  {
    CHECK(v.get<double>() == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  }

  CHECK(run({"minimize", target}).code == kExitUsage);
  CHECK(run({"minimize", target, flat, "--q", "1"}).code == kExitUsage);
}

TEST_CASE("installed binary")
{
  Workspace  ws;
  auto const left  = ws.file("left.csv", "a,1\n");
  auto const right = ws.file("right.csv", "b,1\n");

  auto const first  = run_binary("sweep " + left + " " + right + " --q-grid 0:2:1 --seed 3");
  auto const second = run_binary("sweep " + left + " " + right + " --q-grid 0:2:1 --seed 3");
  CHECK(first.code == 0);
  CHECK(first.out == "q,jtqd\n0,1\n1,0.69314718056\n2,0.5\n");
  CHECK(first.out == second.out);

  CHECK(run_binary("sweep " + left + " " + right + " --q-grid 2:1:1").code == kExitUsage);
  CHECK(run_binary("entropy " + ws.file("bad.csv", "a,-1\n")).code == kExitInput);
}
