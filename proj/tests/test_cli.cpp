// Copyright 2026 The Choice Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests that drive the installed command-line binary.

#include <array>
#include <cstdio>
#include <string>

#include "doctest.h"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args, const std::string& stdin_text = "",
                  bool has_stdin = false) {
  std::string cmd;
  if (has_stdin) {
    cmd = "printf '%s' '" + stdin_text + "' | ";
  }
  cmd += std::string(CHOICE_CLI_PATH) + " " + args + " 2>/dev/null";
  if (!has_stdin) cmd += " </dev/null";

  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    r.out.append(buf.data(), n);
  }
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("cli: eval prints one degree per invocation") {
  auto r = run_cli("eval --sem qcl '(a&b) >< a >< b' --interp b");
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");

  r = run_cli("eval --sem gcl '!(a >< b)' --interp b");
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");

  r = run_cli("eval --sem pqcl '!(a >< b)' --interp ''");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("cli: table rows follow the binary-counting order") {
  auto r = run_cli("table 'a >< b' --sem qcl");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "interp | qcl\n"
        "{} | inf\n"
        "{b} | 2\n"
        "{a} | 1\n"
        "{a,b} | 1\n");

  r = run_cli("table 'a' --sem qcl,gcl");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "interp | qcl | gcl\n"
        "{} | inf | -1\n"
        "{a} | 1 | 1\n");

  r = run_cli("table '!a & !b' --sem qcl");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "interp | qcl\n"
        "{} | 1\n"
        "{b} | inf\n"
        "{a} | inf\n"
        "{a,b} | inf\n");

  // Identical invocations produce byte-identical output.
  CHECK(run_cli("table 'a >< b' --sem qcl,pqcl,gcl").out ==
        run_cli("table 'a >< b' --sem qcl,pqcl,gcl").out);
}

TEST_CASE("cli: preferred models") {
  auto r = run_cli("preferred --sem qcl 't & (m >< a)'");
  CHECK(r.code == 0);
  CHECK(r.out == "degree 1\n{m,t}\n{a,m,t}\n");

  r = run_cli("preferred --sem qcl '((a&b) >< a >< b) & !(a&b)'");
  CHECK(r.code == 0);
  CHECK(r.out == "degree 2\n{a}\n");

  r = run_cli("preferred --sem qcl 'a & !a'");
  CHECK(r.code == 0);
  CHECK(r.out == "unsatisfiable\n");
}

TEST_CASE("cli: game values and exports") {
  auto r = run_cli("game --variant g '((a><b)><c) & !(a><d)' --interp b --value");
  CHECK(r.code == 0);
  CHECK(r.out == "2\n");

  r = run_cli("game --variant ng '((a><b)><c) & !(a><d)' --interp d --value");
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");

  r = run_cli("game --variant g 'a' --interp '' --value");
  CHECK(r.code == 0);
  CHECK(r.out == "inf\n");

  r = run_cli("game --variant g 'a >< b' --interp a --dot");
  CHECK(r.code == 0);
  CHECK(r.out.find("digraph") != std::string::npos);
  CHECK(r.out.find("P:a") != std::string::npos);

  r = run_cli("game --variant g '((a><b)><c) & !(a><d)' --interp b --strategy");
  CHECK(r.code == 0);
  CHECK(r.out.find("value 2\n") == 0);
  CHECK(r.out.find("outcome P:b payoff 2 (winning)") != std::string::npos);
}

TEST_CASE("cli: entailment exit codes") {
  auto r = run_cli("entail 't & (m >< a)' 't'");
  CHECK(r.code == 0);
  CHECK(r.out == "entailed\n");

  r = run_cli("entail '(a&b) >< a >< b' 'a & b'");
  CHECK(r.code == 0);
  CHECK(r.out == "entailed\n");

  r = run_cli("entail 'a >< b' 'b'");
  CHECK(r.code == 1);
  CHECK(r.out == "not entailed\n");

  r = run_cli("entail 'a' 'b >< c'");
  CHECK(r.code == 2);
}

TEST_CASE("cli: usage and cap errors") {
  CHECK(run_cli("eval 'a >< (b' --interp ''").code == 2);
  CHECK(run_cli("eval 'a' --interp 'B'").code == 2);
  CHECK(run_cli("nosuchcommand").code == 2);
  CHECK(run_cli("eval").code == 2);

  std::string wide = "x00";
  for (int i = 1; i < 21; ++i) {
    char buf[8];
    std::snprintf(buf, sizeof buf, " | x%02d", i);
    wide += buf;
  }
  CHECK(run_cli("table '" + wide + "'").code == 3);
  CHECK(run_cli("table '" + wide + "' --cap 21").code == 0);
}

TEST_CASE("cli: check prints a report and mirrors it in the exit code") {
  auto r = run_cli("check --seed 7 --count 30");
  CHECK(r.code == 0);
  CHECK(r.out.find("seed 7\n") == 0);
  CHECK(r.out.find("all properties passed (30 formulas)\n") !=
        std::string::npos);

  auto again = run_cli("check --seed 7 --count 30");
  CHECK(again.out == r.out);

  r = run_cli("check --seed 7 --count 0");
  CHECK(r.code == 0);
  CHECK(r.out.find("all properties passed (0 formulas)") != std::string::npos);
}

TEST_CASE("cli: interactive play") {
  auto r = run_cli("play 'a | b' --variant g --interp b --side me", "2\n",
                   true);
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome P:b payoff 1 (winning)") != std::string::npos);

  // Engine-vs-engine transcript of the worked signed game.
  r = run_cli("play '((a><b)><c) & !(a><d)' --variant ng --interp d --auto");
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome O:d payoff -2 (losing)") != std::string::npos);

  r = run_cli("play 'a' --variant ng --interp ''");
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome P:a payoff -1 (losing)") != std::string::npos);

  // End of input aborts the session.
  r = run_cli("play 'a | b' --variant g --interp b --side me");
  CHECK(r.code == 130);

  // Bad input is re-prompted, then accepted.
  r = run_cli("play 'a | b' --variant g --interp b --side me", "9\nx\n1\n",
              true);
  CHECK(r.code == 0);
  CHECK(r.out.find("outcome P:a payoff inf (losing)") != std::string::npos);
}
