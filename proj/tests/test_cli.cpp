#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(TWISTPOLY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t k;
  while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("cli: hn and pn") {
  auto r = run("hn --n 2");
  CHECK(r.code == 0);
  CHECK(r.out == "g_f^4 - 2*g_f^2*g_p^2 - g_o^2*g_p^2 + g_p^4\n");
  CHECK(run("hn --n 5 --check-matchings").code == 0);
  CHECK(run("pn --n 2").out == "g_f^2 - g_p^2\n");
}

TEST_CASE("cli: farey") {
  CHECK(run("farey cross --from -1/1 --to 1/1").out == "1\n");
  CHECK(run("farey cross --from 1/0 --to 1/5 --oracle-bound 20").code == 0);
  auto r = run("farey labels --walk 'triangle=3/1,4/1,1/0;word=LLRLLL'");
  CHECK(r.code == 0);
  CHECK(r.out.find("step 3 R: o=1/0 h=1/2 p=1/1 f=0/1") != std::string::npos);
  CHECK(run("farey anatomy --word LLRLLL").out.find("tail: LL\n") != std::string::npos);
  CHECK(run("farey cross --from 1/x --to 1/1").code == 2);
}

TEST_CASE("cli: matchings") {
  auto r = run("matchings --n 4 --list");
  CHECK(r.out.rfind("count: 5\n", 0) == 0);
  CHECK(r.out.find("[1, 3] g_f^4\n") != std::string::npos);
}

TEST_CASE("cli: apoly json") {
  auto r = run("apoly --family pretzel238 --sign neg --m 1 --json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["knot"] == "T(5,16,2,2)");
  CHECK(j["m"] == 1);
  CHECK(j["expression"].contains("num"));
  CHECK(j["basis_changed"].is_null());
  auto w = nlohmann::json::parse(run("--format json apoly --family whitehead --sign pos --m 1 --basis-change").out);
  CHECK(w["knot"] == "J(2,8)");
  CHECK(w["basis_changed"].contains("den"));
}

TEST_CASE("cli: twist") {
  CHECK(run("twist --n 1 --sign pos").out == "L + M^6\n");
  CHECK(run("twist verify --max-n 6").code == 0);
  CHECK(run("twist").code == 2);
}

TEST_CASE("cli: usage errors and determinism") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("hn --n 2 --bogus").code == 2);
  CHECK(run("hn").code == 2);
  CHECK(run("--help").code == 0);
  CHECK(run("apoly --family other --sign pos --m 1").code == 2);
  CHECK(run("selftest --module nope").code == 2);
  auto a = run("--seed 7 selftest --quick --module exact-arith");
  auto b = run("--seed 7 selftest --quick --module exact-arith");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("--format json pn --n 1").out.find("\"schema\": 1") != std::string::npos);
}
