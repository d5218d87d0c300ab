#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <json.hpp>
#include <random>
#include <set>
#include <sstream>

#include "cohen/brunnian.hpp"
#include "cohen/cli.hpp"
#include "cohen/delta.hpp"
#include "cohen/expression.hpp"
#include "oracle.hpp"

using namespace cohen;
using nlohmann::json;

namespace {

BraidWord bw(int n, std::vector<int> l) { return BraidWord(n, std::move(l)); }

struct Run {
  int status;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int st = run_cli(args, out, err);
  return {st, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int expected_status) {
  args.insert(args.begin(), "--json");
  const Run r = run(args);
  CHECK(r.status == expected_status);
  return json::parse(r.out);
}

std::size_t error_offset(std::string_view text, int n) {
  try {
    parse(text, n);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

// Random expression text over sigma letters, A generators, D, powers,
// inverses, groups and commutators.
std::string random_expr(std::mt19937& rng, int n, int depth) {
  std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 3), len(1, 3), pw(-3, 3);
  std::string out;
  const int terms = len(rng);
  for (int t = 0; t < terms; ++t) {
    if (t) out += ' ';
    switch (kind(rng)) {
      case 0: {
        std::uniform_int_distribution<int> i(1, n - 1);
        out += "s" + std::to_string(i(rng));
        break;
      }
      case 1: {
        std::uniform_int_distribution<int> j(2, n);
        const int jj = j(rng);
        std::uniform_int_distribution<int> i(1, jj - 1);
        out += "a" + std::to_string(i(rng)) + "." + std::to_string(jj);
        break;
      }
      case 2: out += "D"; break;
      case 3: out += "e"; break;
      case 4: out += "( " + random_expr(rng, n, depth - 1) + " )"; break;
      case 5:
        out += "[ " + random_expr(rng, n, depth - 1) + " , " + random_expr(rng, n, depth - 1) + " ]";
        break;
      default: out += "( " + random_expr(rng, n, depth - 1) + " )'"; break;
    }
    const int p = pw(rng);
    if (p != 0 && p != 1) out += "^" + std::to_string(p);
  }
  return out;
}

}  // namespace

TEST_CASE("parser examples") {
  CHECK(to_braid(parse("s2 s1^2", 3), 3) == bw(3, {2, 1, 1}));
  CHECK(to_braid(parse("s2s1^2", 3), 3) == bw(3, {2, 1, 1}));
  CHECK(to_braid(parse("s1' s2^-2", 3), 3) == bw(3, {-1, -2, -2}));
  const auto a = to_aword(parse("[ a1.3^2 , a2.3^3 ]", 3), 3);
  REQUIRE(a.has_value());
  CHECK(*a == alpha(2, 3));
  CHECK(to_braid(parse("D^2", 4), 4) == braid_power(half_twist(4), 2));
  CHECK(to_braid(parse("e", 3), 3).empty());
  CHECK(braids_equal(to_braid(parse("[s1, s2, s1]", 3), 3),
                     to_braid(parse("[[s1, s2], s1]", 3), 3)));
  CHECK(to_braid(parse("(s1 s2)'", 3), 3) == bw(3, {-2, -1}));
  CHECK(to_braid(parse("a1.3", 3), 3) == a_gen(1, 3, 3));
  // Two-digit indices stay unambiguous.
  CHECK(to_braid(parse("a1.12 s11", 12), 12) == a_gen(1, 12, 12) * bw(12, {11}));
  CHECK_FALSE(to_aword(parse("s1", 3), 3).has_value());
  CHECK_FALSE(to_aword(parse("a1.2 D", 3), 3).has_value());
  CHECK(to_aword(parse("a1.2 e", 3), 3).has_value());
}

TEST_CASE("parser errors carry offsets") {
  CHECK(error_offset("s3", 3) == 0);
  CHECK(error_offset("s1 ^0", 3) == 4);
  CHECK(error_offset("s1 a2.2", 3) == 3);
  CHECK(error_offset("s1 x", 3) == 3);
  CHECK(error_offset("(s1", 3) == 3);
  CHECK(error_offset("", 3) == 0);
  CHECK_THROWS_AS(parse("[s1]", 3), ParseError);
  CHECK_THROWS_AS(parse("[s1, s2", 3), ParseError);
  CHECK_THROWS_AS(parse("s1)", 3), ParseError);
  CHECK_THROWS_AS(parse("a1.4", 3), ParseError);
}

TEST_CASE("print and parse round trip") {
  std::mt19937 rng(51);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + t % 3;
    const std::string text = random_expr(rng, n, 2);
    const Expr e = parse(text, n);
    const std::string printed = print(e);
    const Expr again = parse(printed, n);
    CHECK(print(again) == printed);
    const BraidWord b = to_braid(e, n);
    if (b.length() <= 60) CHECK(oracle::equal(b, to_braid(again, n)));
    CHECK(braids_equal(b, to_braid(again, n)));
  }
}

TEST_CASE("exit status contract") {
  const Run c4 = run({"cohen", "-n", "4", "D"});
  CHECK(c4.status == kExitTrue);
  CHECK(c4.out.find("common_face") != std::string::npos);

  const Run c3 = run({"cohen", "-n", "3", "s2 s1^2"});
  CHECK(c3.status == kExitFalse);

  CHECK(run({"brunnian", "-n", "3", "[a1.3, a2.3]"}).status == kExitTrue);
  CHECK(run({"brunnian", "-n", "3", "D"}).status == kExitFalse);
  CHECK(run({"eq", "-n", "3", "s1 s2 s1", "s2 s1 s2"}).status == kExitTrue);
  CHECK(run({"eq", "-n", "3", "s1", "s1'"}).status == kExitFalse);
  CHECK(run({"gcohen", "-n", "3", "--blocks", "1,2", "s1"}).status == kExitTrue);
  CHECK(run({"gcohen", "-n", "3", "--blocks", "1,2", "s1' s2'"}).status == kExitFalse);
  CHECK(run({"unary", "-n", "3", "s1 s2"}).status == kExitTrue);
  CHECK(run({"lift", "-n", "3", "a1.3"}).status == kExitFalse);
  CHECK(run({"rp2", "verify"}).status == kExitTrue);

  // Usage, parse and budget failures.
  CHECK(run({}).status == kExitUsage);
  CHECK(run({"frobnicate"}).status == kExitUsage);
  CHECK(run({"cohen", "D"}).status == kExitUsage);
  CHECK(run({"cohen", "-n", "3", "s3"}).status == kExitUsage);
  CHECK(run({"eq", "-n", "3", "s1"}).status == kExitUsage);
  CHECK(run({"rp2", "list"}).status == kExitUsage);
  CHECK(run({"gcohen", "-n", "3", "--blocks", "1,2;2", "s1"}).status == kExitUsage);
  const Run budget = run({"--budget", "5", "comb", "-n", "3",
                          "[a1.2^2 a1.3^2 a2.3^2, a1.2^3 a1.3^3 a2.3^3]"});
  CHECK(budget.status == kExitUsage);
  CHECK(budget.err.find("budget") != std::string::npos);
}

TEST_CASE("witnesses") {
  const json c4 = run_json({"cohen", "-n", "4", "D"}, kExitTrue);
  CHECK(c4.at("result") == true);
  REQUIRE(c4.at("witnesses").size() == 1);
  CHECK(c4.at("witnesses")[0].at("label") == "common_face");
  const std::string face = c4.at("witnesses")[0].at("value");
  CHECK(braids_equal(to_braid(parse(face, 3), 3), half_twist(3)));

  const json c3 = run_json({"cohen", "-n", "3", "s2 s1^2"}, kExitFalse);
  CHECK(c3.at("result") == false);
  bool saw_faces = false;
  for (const auto& w : c3.at("witnesses"))
    if (w.at("label") == "faces") {
      saw_faces = true;
      CHECK(w.at("value") == json::array({"s1", "s1^2", "e"}));
    }
  CHECK(saw_faces);

  // Solver output has every face equal to the input.
  for (const std::string& alpha : {"D", "D^-1 [a1.3, a2.3]", "a1.2 a1.3 a2.3"}) {
    const Run r = run({"solve", "-n", "4", alpha});
    REQUIRE(r.status == kExitTrue);
    const json j = run_json({"solve", "-n", "4", alpha}, kExitTrue);
    const BraidWord beta = to_braid(parse(j.at("result").get<std::string>(), 4), 4);
    const BraidWord a = to_braid(parse(alpha, 3), 3);
    for (int i = 1; i <= 4; ++i) CHECK(braids_equal(delete_strand(beta, i), a));
  }
  const Run two = run({"solve", "-n", "3", "a1.2"});
  CHECK(two.status == kExitTrue);
  // A_{12} on three strands is not Cohen: refusal with the violating pair.
  const json refuse = run_json({"solve", "-n", "4", "a1.2"}, kExitFalse);
  CHECK(refuse.at("witnesses")[0].at("label") == "violation");

  const json h = run_json({"hopf", "-n", "2", "2", "4", "a1.2"}, kExitTrue);
  CHECK(h.at("result") == "a3.4 a2.4 a1.4 a2.3 a1.3 a1.2");
}

TEST_CASE("JSON schema is the same for every command") {
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"eq", "-n", "3", "s1", "s1"}, 0},
      {{"perm", "-n", "3", "s1 s2"}, 0},
      {{"pure", "-n", "3", "s1"}, 1},
      {{"del", "-n", "3", "2", "s2 s1^2"}, 0},
      {{"ins", "-n", "2", "2", "s1"}, 0},
      {{"cohen", "-n", "4", "D"}, 0},
      {{"brunnian", "-n", "3", "[a1.3, a2.3]"}, 0},
      {{"gcohen", "-n", "3", "--blocks", "1,2", "s1"}, 0},
      {{"unary", "-n", "3", "s1 s2"}, 0},
      {{"comb", "-n", "3", "a2.3 a1.2"}, 0},
      {{"lift", "-n", "3", "[a1.3, a2.3]"}, 0},
      {{"tau", "-n", "3", "3", "4", "[a1.3, a2.3]"}, 0},
      {{"bigT", "-n", "3", "3", "5", "[a1.3, a2.3]"}, 0},
      {{"hopf", "-n", "2", "2", "3", "a1.2"}, 0},
      {{"decompose", "-n", "3", "D^2"}, 0},
      {{"solve", "-n", "3", "s1"}, 0},
      {{"rp2", "enumerate"}, 0},
      {{"rp2", "verify"}, 0},
  };
  const std::set<std::string> keys{"command", "inputs", "result", "witnesses"};
  for (const auto& [args, status] : cases) {
    const json j = run_json(args, status);
    std::set<std::string> got;
    for (auto it = j.begin(); it != j.end(); ++it) got.insert(it.key());
    CHECK(got == keys);
    CHECK(j.at("command") == args[0]);
    CHECK(j.at("inputs").is_object());
    REQUIRE(j.at("witnesses").is_array());
    for (const auto& w : j.at("witnesses")) {
      CHECK(w.size() == 2);
      CHECK(w.contains("label"));
      CHECK(w.contains("value"));
    }
  }
  // A representative golden document.
  const json golden = json::parse(R"({
    "command": "del",
    "inputs": {"expr": "s2 s1^2", "i": 2, "n": 3},
    "result": "s1^2",
    "witnesses": []
  })");
  CHECK(run_json({"del", "-n", "3", "2", "s2 s1^2"}, 0) == golden);
}

#ifdef COHENBRAID_EXE
TEST_CASE("the installed executable follows the same contract") {
  auto status = [](const std::string& args) {
    const std::string cmd = std::string(COHENBRAID_EXE) + " " + args + " > /dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("cohen -n 4 D") == 0);
  CHECK(status("cohen -n 3 's2 s1^2'") == 1);
  CHECK(status("cohen -n 3 's9'") == 2);
  CHECK(status("--json solve -n 4 D") == 0);
}
#endif
