#include <doctest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "affine_lab/json_io.hpp"

using affine_lab::Json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(AFFINE_LAB_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

Json run_json(const std::string& args, int expected_code = 0) {
  const Run r = run(args);
  INFO(args);
  REQUIRE(r.code == expected_code);
  return Json::parse(r.out);
}

std::string m(const Json& report, const char* key) { return report.at("measured").at(key).get<std::string>(); }

}  // namespace

TEST_CASE("sets gen") {
  CHECK(run("sets gen --kind ap --n 4").out == "[\"1\",\"2\",\"3\",\"4\"]\n");
  CHECK(run("sets gen --kind gp --ratio 2 --n 4").out == "[\"1\",\"2\",\"4\",\"8\"]\n");
  CHECK(run("sets gen --kind random_int --seed 7 --range 100 --n 5").out == "[\"4\",\"5\",\"47\",\"75\",\"88\"]\n");
  CHECK(run("--seed 7 sets gen --kind random_int --range 100 --n 5").out == "[\"4\",\"5\",\"47\",\"75\",\"88\"]\n");
  const char* path = "cli_test_set.json";
  CHECK(run(std::string("sets gen --kind ap --n 3 --out ") + path).code == 0);
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text == "[\"1\",\"2\",\"3\"]\n");
  CHECK(run_json(std::string("energy-additive --a ") + path).at("measured").at("additive_energy") == "19");
  std::remove(path);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("sets gen --kind ap").code == 2);
  CHECK(run("sets gen --kind ap --step 0 --n 3").code == 2);
  CHECK(run("check-thm2 --c 1,2 --d 3 --lambda 0").code == 2);
  CHECK(run("check-thm2 --c 1,2 --d x").code == 2);
  CHECK(run("--out xml energy --lines '[{\"m\":\"1\",\"c\":\"0\"}]'").code == 2);
  CHECK(run("--precision 99 check-thm2 --c 1,2 --d 3").code == 2);
  CHECK(run("energy-mult --a 0,1").code == 2);
  CHECK(run("check-conj2 --grid-a 1,2 --grid-b 1,2 --line1 inf --line2 inf").code == 2);
  CHECK(run("energy --naive --cap-naive 1 --lines '[{\"m\":\"1\",\"c\":\"0\"},{\"m\":\"2\",\"c\":\"0\"}]'").code == 2);
  CHECK(run("project --matrix '[[1,0,0],[0,1,0],[0,0,0]]' --grid-a 1 --grid-b 1").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("energy") {
  const Json j = run_json("energy --naive --lines '[{\"m\":\"1\",\"c\":\"0\"},{\"m\":\"1\",\"c\":\"1\"}]'");
  CHECK(m(j, "energy") == "6");
  CHECK(m(j, "energy_naive") == "6");
  CHECK(j.at("passed").get<bool>());
  CHECK(m(run_json("energy-mult --a 1,2 --k 3"), "multiplicative_energy") == "10");
  const Json ratio = run_json("energy-ratio --a 0,1,2");
  CHECK(m(ratio, "ratio_count") == "588");
  CHECK(m(ratio, "cross_multiplied_ratio_count") == "2289");
}

TEST_CASE("families") {
  const Json j = run_json("family --kind thm2 --c 2 --d 1");
  REQUIRE(j.at("details").at("lines").size() == 1);
  CHECK(j.at("details").at("lines")[0].dump() == R"({"m":"1","c":"2"})");
  const Json k = run_json("family --kind thm3 --c 3 --d 2");
  CHECK(k.at("details").at("lines")[0].dump() == R"({"m":"3","c":"3"})");
}

TEST_CASE("geometry subcommands") {
  CHECK(m(run_json("incidence --grid-a 0,1,2 --grid-b 0,1,2 --lines '[{\"m\":\"1\",\"c\":\"0\"},{\"m\":\"-1\",\"c\":\"2\"}]'"),
          "incidences") == "6");
  CHECK(m(run_json("profile --grid-a 0,1,2 --grid-b 0,1,2"), "spanned_lines") == "20");
  CHECK(m(run_json("profile --grid-a 0,1,2 --grid-b 0,1,2"), "fourth_moment") == "840");
  CHECK(m(run_json("rich --grid-a 0,1,2 --grid-b 0,1,2 --k 3"), "rich_lines") == "8");
  CHECK(m(run_json("directions --points '[[0,0],[1,0],[0,1],[2,3]]'"), "directions") == "6");
  const Json t = run_json("trace --grid-a 0,1 --grid-b 0,1 --line x=-1");
  CHECK(m(t, "affine_count") == "4");
  CHECK(m(t, "projective_count") == "5");
}

TEST_CASE("expanders") {
  CHECK(m(run_json("expander --kind q --a 1,2"), "set_size") == "4");
  CHECK(m(run_json("expander --kind s14 --a 0,1"), "set_size") == "4");
  CHECK(m(run_json("expander --kind aa-plus-a --a 1,2"), "set_size") == "5");
}

TEST_CASE("projection preserves incidences") {
  const Json j = run_json(
      "project --matrix '[[0,0,1],[1,0,0],[-2,1,-5]]' --points '[[0,5],[1,7]]' --lines '[{\"m\":\"2\",\"c\":\"5\"}]'");
  CHECK(j.at("passed").get<bool>());
}

TEST_CASE("checkers") {
  const Json t2 = run_json("check-thm2 --c ap:1:1:4 --d ap:1:1:4");
  CHECK(t2.at("experiment") == "reciprocal-difference-energy");
  CHECK(t2.at("passed").get<bool>());
  CHECK(run_json("check-thm3 --c 1,2 --d 1,2 --lambda 0 --mu 0").at("passed").get<bool>());
  const Json diag = run_json("diag-thm3 --c 0,1 --d 2 --lambda 0 --mu 0");
  CHECK(m(diag, "sum_of_squares") == "1");
  CHECK(m(diag, "zero_ratio_triples") == "1");
  CHECK(m(diag, "skipped_triples") == "2");
  const Json t1 = run_json("check-thm1 --a 0,1 --b 0,1 --lines '[{\"m\":\"1\",\"c\":\"0\"}]'");
  CHECK(m(t1, "incidences") == "2");
  CHECK(m(t1, "energy") == "1");
  CHECK(run_json("check-thm1 --a 1,2,3 --b 1,2 --elekes").at("passed").get<bool>());
  const Json c2 = run_json("check-conj2 --grid-a ap:1:1:4 --grid-b ap:1:1:2 --line1 inf --line2 x=0");
  CHECK(c2.at("passed").get<bool>());
  CHECK(run_json("check-product-grid --a 1,2,3").at("passed").get<bool>());
}

TEST_CASE("window policy error produces exit 1") {
  const std::string args = "check-conj2 --grid-a 1,2 --grid-b ap:1:1:6 --line1 x=0 --line2 1,-1,0";
  CHECK(run(args).code == 0);
  CHECK(run("--window-policy error " + args).code == 1);
}

TEST_CASE("sweeps: formats, failing windows and determinism") {
  const Run csv = run("--out csv sweep --kind q --sizes 4,8,16");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,measured,bound,ratio,runtime_ms\n", 0) == 0);
  CHECK(csv.out == run("--out csv sweep --kind q --sizes 4,8,16").out);
  const Run json1 = run("sweep --kind s14 --set random_int --seed 9 --sizes 4,8,16");
  CHECK(json1.code == 0);
  CHECK(json1.out == run("--seed 9 sweep --kind s14 --set random_int --sizes 4,8,16").out);
  CHECK(run("sweep --kind q --sizes 4,8,16 --expect-min 5").code == 1);
  CHECK(run("sweep --kind q --sizes 4,8 --expect-min 1").code == 2);
  const Run timed = run("--out csv --timing sweep --kind q --sizes 4,8,16");
  CHECK(timed.code == 0);
  CHECK(timed.out.find(",\n") == std::string::npos);
}
