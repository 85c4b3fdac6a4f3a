#include <doctest.h>

#include <sstream>

#include "madic/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = madic::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate command") {
  const auto r = run({"validate", "fixture:pervova"});
  CHECK(r.code == 0);
  CHECK(r.out == "valid, r=2, |D0|=3, |D1|=3\n");
  const auto bad = run({"validate", R"({"m":3,"E":[[0],[0]]})"});
  CHECK(bad.code == 2);
  CHECK(bad.out.rfind("invalid", 0) == 0);
  CHECK(run({"validate", "/nonexistent/spec.json"}).code == 2);
}

TEST_CASE("decide-mggs command") {
  const auto r = run({"decide-mggs", R"({"m":3,"E":[[1],[2]]})", R"({"m":3,"E":[[2],[1]]})"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"outcome\": \"Conjugate\"") != std::string::npos);
  CHECK(r.out.find("\"u\": 2") != std::string::npos);
  CHECK(r.out.find("\"schema\": \"madic/1\"") != std::string::npos);
  const auto n = run({"decide-mggs", R"({"m":3,"E":[[1],[1]]})", R"({"m":3,"E":[[1],[2]]})"});
  CHECK(n.code == 1);
}

TEST_CASE("census command") {
  const auto r = run({"census", "--m", "3", "--s", "1"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "m=3 s=1: 8 valid matrices, 3 classes\n"
        "class 1 (4): (1,0) (2,0) (0,1) (0,2)\n"
        "class 2 (2): (1,1) (2,2)\n"
        "class 3 (2): (2,1) (1,2)\n");
  CHECK(run({"census", "--m", "3", "--s", "1"}).out == r.out);
}

TEST_CASE("other commands") {
  CHECK(run({"wordproblem", "fixture:gupta_sidki", "b^3"}).out == "true\n");
  CHECK(run({"wordproblem", "fixture:grigorchuk", "a*b*a*b"}).out == "false\n");
  const auto nuc = run({"nucleus", "fixture:grigorchuk"});
  CHECK(nuc.code == 0);
  CHECK(nuc.out.rfind("nucleus of 5 elements", 0) == 0);
  const auto inv = run({"invariants", "fixture:grigorchuk", "--depth", "3"});
  CHECK(inv.code == 0);
  CHECK(inv.out.find("\"order\": \"128\"") != std::string::npos);
  CHECK(run({"portrait", "fixture:grigorchuk", "b", "--format", "dot"}).out.find("digraph") !=
        std::string::npos);
  CHECK(run({"section", "fixture:pervova", "c", "1"}).out.rfind("section c\n", 0) == 0);
  CHECK(run({"reduce", "fixture:pervova", "--selftest"}).code == 0);
  CHECK(run({"refute", "fixture:gupta_sidki", R"({"m":3,"E":[[1],[1]]})", "--mode", "spinal"}).code ==
        1);
  CHECK(run({"refute", "fixture:pervova", "fixture:pervova", "--mode", "multiegs"}).code == 0);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"wordproblem", "fixture:pervova", "q"}).code == 2);
}
