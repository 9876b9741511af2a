// Drives the installed CLI binary end to end: exit codes, JSON shape on
// stdout, and byte determinism across repeated runs.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(INEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(INEQ_DATA_DIR) + "/" + name; }

json first_line_json(const std::string& out) {
  auto pos = out.find('\n');
  REQUIRE(pos != std::string::npos);
  return json::parse(out.substr(0, pos));
}

}  // namespace

TEST_CASE("family subcommands") {
  RunResult sharp = run("family sharp " + data("family6.json"));
  CHECK(sharp.exit_code == 0);
  json j = first_line_json(sharp.out);
  CHECK(j["command"] == "family sharp");
  CHECK(j["payload"]["sharp"]["sets"] == json::parse("[[1,2],[1,2,3],[1,2,3],[1,2,3,4,5,6]]"));

  RunResult check = run("family check --k 2 " + data("pairs3.json"));
  CHECK(check.exit_code == 0);
  CHECK(first_line_json(check.out)["payload"]["uniform"].get<bool>());

  RunResult compress = run("family compress --i 1 --j 2 " + data("famA4.json"));
  CHECK(compress.exit_code == 0);

  // nested members ({2} inside {1,2} in canonical order) are a usage error
  RunResult nested = run("family compress --i 1 --j 2 " + data("family6.json"));
  CHECK(nested.exit_code == 2);
}

TEST_CASE("entropy subcommands") {
  RunResult g1 =
      run("entropy gen1 " + data("dist4.json") + " " + data("famA4.json") + " " +
          data("famB4.json"));
  CHECK(g1.exit_code == 0);
  json j = first_line_json(g1.out);
  CHECK(j["verdict"] == "holds");
  CHECK(j["payload"]["relation"] == "strictly_compresses");

  CHECK(run("entropy shearer --k 2 " + data("dist3_mirror.json") + " " + data("pairs3.json"))
            .exit_code == 0);
  CHECK(run("entropy mt --k 2 " + data("dist3_mirror.json") + " " + data("pairs3.json"))
            .exit_code == 0);
  CHECK(run("entropy gen2 " + data("dist3_mirror.json") + " " + data("pairs3.json")).exit_code ==
        0);
  CHECK(run("entropy box " + data("dist3_mirror.json")).exit_code == 0);
  CHECK(run("entropy submod --A 1,2 --B 2,3 " + data("dist3_mirror.json")).exit_code == 0);

  // cover precondition failure surfaces as exit 2
  CHECK(run("entropy shearer --k 3 " + data("dist3_mirror.json") + " " + data("pairs3.json"))
            .exit_code == 2);
}

TEST_CASE("lattice subcommands") {
  RunResult cover = run("lattice cover --k 2 " + data("points5.json") + " " + data("pairs3.json"));
  CHECK(cover.exit_code == 0);
  json j = first_line_json(cover.out);
  CHECK(j["payload"]["lhs"] == "25");
  CHECK(j["payload"]["rhs"] == "36");

  // the counterexample run reports the violation as its result
  RunResult fig2 = run("lattice fig2");
  CHECK(fig2.exit_code == 1);
  json f = first_line_json(fig2.out);
  CHECK(f["verdict"] == "violated");
  CHECK(f["payload"]["compressed_product"] == 10);

  CHECK(run("lattice project --A 1,2 " + data("points5.json")).exit_code == 0);
}

TEST_CASE("sumset subcommands") {
  RunResult cd = run("sumset cd --group " + data("z13.json") + " " + data("s135.json"));
  CHECK(cd.exit_code == 0);
  json j = first_line_json(cd.out);
  CHECK(j["payload"]["additive_cover"]["lhs"] == 22);
  CHECK(j["payload"]["additive_cover"]["rhs"] == 24);

  RunResult gymr = run("sumset gymr " + data("gymr_eq.json"));
  CHECK(gymr.exit_code == 0);
  CHECK(first_line_json(gymr.out)["payload"]["equality"].get<bool>());

  RunResult marking =
      run("sumset marking --k 1 " + data("inst_mark.json") + " " + data("fam12.json"));
  CHECK(marking.exit_code == 0);

  RunResult cover = run("sumset cover --k 2 --group " + data("z13.json") + " " +
                        data("s135.json") + " " + data("pairs3.json"));
  CHECK(cover.exit_code == 0);
  CHECK(first_line_json(cover.out)["payload"]["lhs"] == "144");
}

TEST_CASE("search emits one line per instance plus a summary") {
  RunResult r = run("search 6.2 --groups " + data("groups_order_le8.json") +
                    " --n 2 --set-size-max 1 --budget 12");
  CHECK(r.exit_code == 0);  // singleton sets never violate the additive bound
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 13);  // 12 instances + summary

  // a catalog with subgroup instances produces counterexample candidates
  RunResult hit = run("search 6.2 --groups " + data("groups_order_le8.json") +
                      " --n 2 --set-size-max 2 --budget 200");
  CHECK(hit.exit_code == 1);

  RunResult zero = run("search 6.1 --groups " + data("groups_order_le8.json") + " --budget 0");
  CHECK(zero.exit_code == 0);
  json summary = first_line_json(zero.out);
  CHECK(summary["summary"]["instances"] == 0);
}

TEST_CASE("byte determinism of machine output") {
  std::string cmd = "entropy gen1 " + data("dist4.json") + " " + data("famA4.json") + " " +
                    data("famB4.json") + " --json";
  RunResult a = run(cmd);
  RunResult b = run(cmd);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());

  std::string search_cmd = "search 6.2 --groups " + data("groups_order_le8.json") +
                           " --n 2 --set-size-max 2 --budget 50 --json";
  RunResult c = run(search_cmd);
  RunResult d = run(search_cmd);
  CHECK(c.out == d.out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("family sharp /nonexistent.json").exit_code == 2);
  CHECK(run("entropy unknown-sub").exit_code == 2);
  CHECK(run("").exit_code == 2);
}
