#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "collections.hpp"
#include "foldcat/operads.hpp"

using foldcat::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Temp files live under the build tree working directory.
std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("product command reproduces the matrix fixtures") {
  const Result r = call({"product", "--structure", "yd2", "--op", "3",
                         "[[4,3,1,1],[4,2,1,1],[3,2,1],[1,1,1]]", "[[3,1],[2,1],[1,1]]"});
  CHECK(r.code == 0);
  CHECK(r.out == "[[7,4,1,1],[6,3,1,1],[4,3,1],[1,1,1]]\n");
}

TEST_CASE("compare command") {
  CHECK(call({"compare", "--structure", "nat", "3", "7"}).out == "LT\n");
  CHECK(call({"compare", "--structure", "seq", "[1,5]", "[1,1,5]", "--expect", "leq"}).code == 1);
  CHECK(call({"compare", "--structure", "seq", "[1,1,5]", "[1,5]", "--expect", "leq"}).code == 0);
}

TEST_CASE("gen-nat output is the plain term list") {
  const Result r = call({"gen-nat", "--starts", "0,1", "--terms", "7"});
  CHECK(r.code == 0);
  CHECK(r.out == "0 1 1 2 2 3 3\n");
  const Result closed = call({"gen-nat", "--starts", "0,1", "--terms", "7", "--closed-form"});
  CHECK(closed.out == r.out);
}

TEST_CASE("gen-diagram emits a loadable collection") {
  const Result r = call({"gen-diagram", "--seed-diagram", "[1]", "--terms", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("structure: yd1") == 0);
  CHECK(r.out.find("4: [2,1]") != std::string::npos);

  const Result closed =
      call({"gen-diagram", "--seed-diagram", "[1]", "--terms", "6", "--closed-form-box"});
  CHECK(closed.out.find("4: [2,1]") != std::string::npos);

  CHECK(call({"gen-diagram", "--seed-diagram", "[2]", "--terms", "4", "--closed-form-box"})
            .code == 2);
}

TEST_CASE("verify-operad exits one with the witness for the failing pair") {
  const std::string path =
      write_temp("bee_collection.txt",
                 foldcat::save_collection(foldcat::testsupport::ones_collection(8)));
  const Result bad =
      call({"verify-operad", "--file", path, "--pairs", "2,3", "--max-arity", "6"});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("(3; 1,3,2)") != std::string::npos);
  CHECK(bad.out.find("verdict: INVALID") != std::string::npos);

  const Result good =
      call({"verify-operad", "--file", path, "--pairs", "1,2", "--max-arity", "8"});
  CHECK(good.code == 0);
  CHECK(good.out.find("verdict: VALID") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("tensor command composes collection files") {
  const std::string left =
      write_temp("tensor_left.txt",
                 foldcat::save_collection(foldcat::testsupport::ones_collection(6)));
  const std::string right = write_temp(
      "tensor_right.txt",
      foldcat::save_collection(foldcat::testsupport::single_entry_collection(6)));
  const Result r = call({"tensor", "--left", left, "--right", right, "--index", "1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("3: [3,1]") != std::string::npos);
  CHECK(call({"tensor", "--left", left, "--right", right, "--index", "2"}).code == 2);
  std::remove(left.c_str());
  std::remove(right.c_str());
}

TEST_CASE("free-hom") {
  const Result yes =
      call({"free-hom", "--n", "2", "((a *2 b) *1 (c *2 d))", "((a *1 c) *2 (b *1 d))"});
  CHECK(yes.code == 0);
  CHECK(yes.out.find("hom: yes") != std::string::npos);

  const Result no =
      call({"free-hom", "--n", "2", "((a *1 c) *2 (b *1 d))", "((a *2 b) *1 (c *2 d))"});
  CHECK(no.code == 1);
  CHECK(no.out.find("hom: no") != std::string::npos);
  CHECK(no.out.find("violating pair") != std::string::npos);

  const Result strict = call({"free-hom", "--strict-paper-rule", "(a *1 b)", "(a *1 b)"});
  CHECK(strict.code == 1);

  CHECK(call({"free-hom", "(a ** b)", "(a *1 b)"}).code == 2);
}

TEST_CASE("render") {
  const Result r = call({"render", "[5,3,1]"});
  CHECK(r.code == 0);
  CHECK(r.out == "###\n##\n##\n#\n#\n");
  CHECK(call({"render", "[1,2]"}).code == 2);
}

TEST_CASE("interchange single shot and sweep") {
  const Result holds = call({"interchange", "--structure", "nat", "--i", "1", "--j", "2",
                             "1", "2", "3", "4"});
  CHECK(holds.code == 0);
  CHECK(holds.out.find("holds") != std::string::npos);

  // The genuine sequence counterexample replays to failure.
  const Result violated = call({"interchange", "--structure", "seq", "--i", "1", "--j",
                                "2", "[1]", "[5]", "[1,1]", "[]"});
  CHECK(violated.code == 1);

  const Result sweep = call({"interchange", "--structure", "yd1", "--i", "2", "--j", "3",
                             "--trials", "200", "--seed", "7"});
  CHECK(sweep.code == 0);
}

TEST_CASE("certify reports are deterministic and witnesses replay") {
  const Result a = call({"certify", "--structure", "nat", "--trials", "200"});
  const Result b = call({"certify", "--structure", "nat", "--trials", "200"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);

  // seq genuinely fails; its report carries a replayable witness command.
  const Result seq = call({"certify", "--structure", "seq", "--trials", "500"});
  CHECK(seq.code == 1);
  const auto replay_pos = seq.out.find("replay: ");
  REQUIRE(replay_pos != std::string::npos);
  std::string line = seq.out.substr(replay_pos + 8);
  line = line.substr(0, line.find('\n'));
  // Tokenize the replay command, honoring quotes.
  std::vector<std::string> args;
  std::string cur;
  bool quoted = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
    } else if (ch == ' ' && !quoted) {
      if (!cur.empty()) args.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) args.push_back(cur);
  REQUIRE(!args.empty());
  CHECK(call(args).code == 1);
}

TEST_CASE("json reports") {
  const Result r = call({"--json", "gen-nat", "--starts", "0,1", "--terms", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"command\": \"gen-nat\"") != std::string::npos);
  CHECK(r.out.find("\"verdict\": \"ok\"") != std::string::npos);

  const Result bad = call({"--json", "free-hom", "(a *1 b)", "(b *2 a)"});
  CHECK(bad.out.find("\"witnesses\"") != std::string::npos);
}

TEST_CASE("describe prints the product tables") {
  const Result r = call({"--describe"});
  CHECK(r.code == 0);
  CHECK(r.out.find("structure yd1") != std::string::npos);
  CHECK(r.out.find("merge along axis 2") != std::string::npos);
}

TEST_CASE("usage errors exit two") {
  CHECK(call({"product", "--structure", "nope", "--op", "1", "1", "2"}).code == 2);
  CHECK(call({"product", "--structure", "nat", "--op", "9", "1", "2"}).code == 2);
  CHECK(call({"verify-operad", "--file", "missing_file.txt", "--pairs", "1,2"}).code == 2);
  CHECK(call({"rendar"}).code == 2);
}
