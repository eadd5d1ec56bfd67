// Copyright 2026 The divsum Authors
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


#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "divsum/report.hpp"
#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(DIVSUM_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

}  // namespace

TEST_CASE("sum prints every method") {
  const Run r = run("sum --p 1 --q 1 --m 1 --x 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("0.59634736") != std::string::npos);
  CHECK(r.out.find("integral") != std::string::npos);
}

TEST_CASE("json output parses back") {
  const Run r = run("sum --p 1 --q 1 --m 1 --x 1 --method cf --format json");
  REQUIRE(r.status == 0);
  const divsum::Report rep = divsum::parse_report_json(r.out);
  REQUIRE(rep.results.size() == 1);
  CHECK(std::fabs(rep.results[0].value - 0.5963473621372) < 2e-10);
}

TEST_CASE("repeat runs are byte identical") {
  const Run a = run("repro s25 --format json");
  const Run b = run("repro s25 --format json");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("out writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "divsum_tool_test.csv";
  std::filesystem::remove(path);
  const Run r = run("table convergents --p 1 --q 1 --m 1 --x 1 --format csv --out " + path.string());
  CHECK(r.status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str().find("300,501") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("coefficient list") {
  const Run r = run("sum --coeffs 1,-1,1,-1 --method transform");
  CHECK(r.status == 0);
  CHECK(r.out.find("1/2") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run("repro s99").status == 2);
  CHECK(run("sum --p 1 --q 1 --coeffs 1,2").status == 2);
  CHECK(run("sum --p 0").status == 1);
  CHECK(run("sum --bogus").status != 0);
  CHECK(run("sum --p 0").out.find("divsum: error:") != std::string::npos);
}

TEST_CASE("every repro section runs") {
  for (const char* s : {"s15", "s16", "s17", "s18", "s19", "s22", "s23", "s25", "s29"}) {
    CHECK_MESSAGE(run(std::string("repro ") + s).status == 0, s);
  }
}
