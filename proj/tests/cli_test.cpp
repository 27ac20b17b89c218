#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("monopos_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string cmd = std::string(MONOPOS_BIN) + " " + args + " > " + out.string() + " 2> /dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

std::string write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("compute") {
  const auto petersen = write("petersen.g6", "IheA@GUAo\n");
  auto r = run("compute " + petersen + " --param mp");
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("mp = 3"));
  r = run("compute " + petersen + " --param gp --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["value"] == 6);
  CHECK(j["witness"].size() == 6);
  r = run("compute --family random_tree:10:seed=2 --param hm --param mp");
  CHECK(r.code == 0);
  CHECK(r.out.find("hm = ") != std::string::npos);
  r = run("compute --family cycle:5 --mode geo --independent");
  CHECK(r.out.starts_with("igp = 2"));
  r = run("compute " + petersen + " --format json");
  CHECK(nlohmann::json::parse(r.out).size() == 13);
}

TEST_CASE("exit codes") {
  CHECK(run("compute " + write("bad.g6", "I!!\n")).code == 2);
  CHECK(run("compute /nonexistent/file.g6").code == 2);
  CHECK(run("compute --family cycle:2").code == 2);
  CHECK(run("compute --family grid:5,5 --cap 20").code == 3);
  CHECK(run("oracle --family cycle:13").code == 3);
  CHECK(run("compute --family petersen --mode geo --node-limit 3").code == 3);
  CHECK(run("compute --family cycle:5 --param nope").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("--version").code == 0);
}

TEST_CASE("family") {
  auto r = run("family half_wheel:4 --format json");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 9);
  std::map<std::string, int> pred;
  for (const auto& p : j["predictions"]) pred[p["parameter"]] = p["value"];
  CHECK(pred["mp"] == 2);
  CHECK(pred["gp"] == 4);
  r = run("family G_abl:3,5,2 --format json");
  j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 8);
  r = run("family mcgee");
  CHECK(r.out.size() > 20);
  const std::string prefix = (scratch() / "tree").string();
  CHECK(run("family random_tree:9 --seed 4 --out " + prefix).code == 0);
  CHECK(fs::exists(prefix + ".g6"));
  std::ifstream meta(prefix + ".json");
  CHECK(nlohmann::json::parse(meta)["spec"] == "random_tree:9:seed=4");
  CHECK(run("family half_wheel:1").code == 2);
}

TEST_CASE("oracle, reduce and paths") {
  auto r = run("oracle --family cycle:6");
  CHECK(r.out.starts_with("mp = 2"));
  r = run("oracle --family cycle:5 --mode geo");
  CHECK(r.out.starts_with("gp = 3"));
  r = run("reduce --family cycle:5 --k 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["k_prime"] == 8);
  CHECK(j["verification"]["ok"] == true);
  CHECK(j["verification"]["mp_product"] == 7);
  r = run("paths --family cycle:6 --interval 0,3 --format json");
  CHECK(nlohmann::json::parse(r.out)["interval"] == nlohmann::json::array({0, 1, 2, 3, 4, 5}));
  r = run("paths --family path:5 --hull 0,4");
  CHECK(r.out.find("hull: [0,1,2,3,4]") != std::string::npos);
  CHECK(run("paths --family path:5 --hull 0,9").code == 2);
}

TEST_CASE("verify") {
  auto r = run("verify --check cage-values --format json --no-timing");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["totals"]["pass"] == 1);
  CHECK(run("verify --check r-graph-diss-gp2").code == 1);
  CHECK(run("verify --check nope").code == 2);
  r = run("verify --list");
  CHECK(r.out.find("hull-realization") != std::string::npos);
}
