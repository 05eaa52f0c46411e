#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;
using json = nlohmann::json;
using doctest::Approx;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRANDNET_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("grandnet_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return (path / name).string();
  }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("cli norm") {
  const Run r = run("norm --values 1,1,1,1 --space gn --theta 1 --p 1 --q 1 --net full");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["result"]["value"].get<double>() == Approx(0.5).epsilon(1e-6));
  CHECK(j["params"]["weight"] == "uniform");
  CHECK(j["metadata"].contains("tolerances"));

  const Run inf = run("norm --values 1,1 --space log --theta 1 --p 1 --q inf --net full --weight paper");
  REQUIRE(inf.status == 0);
  CHECK(json::parse(inf.out)["result"]["value"] == "inf");
}

TEST_CASE("cli csv outputs") {
  const Run avg = run("avg --values 1,1,-1,-1 --net full");
  REQUIRE(avg.status == 0);
  CHECK(avg.out.rfind("t_lo,t_hi,a,b\n", 0) == 0);
  const Run re = run("rearrange --values 1,3,2,2");
  REQUIRE(re.status == 0);
  CHECK(re.out.rfind("t,f_star,f_double_star\n", 0) == 0);
  const Run kf = run("kfunc --values 1,2,3 --t-points 8");
  REQUIRE(kf.status == 0);
  CHECK(kf.out.rfind("t,k_upper\n", 0) == 0);
  CHECK(std::count(kf.out.begin(), kf.out.end(), '\n') == 9);
}

TEST_CASE("cli certify") {
  TempDir dir;
  const std::string k = dir.write("k.json", R"({"nx": 4, "ny": 4, "values": [[1,1,1,1],[1,1,1,1],[1,1,1,1],[1,1,1,1]]})");
  const Run r = run("certify --kernel " + k + " --q 2 --theta 0 --source lp --p 2");
  REQUIRE(r.status == 0);
  const json j = json::parse(r.out);
  CHECK(j["criterion"].get<double>() == Approx(1.0).epsilon(1e-6));
  CHECK(j["empirical_lower_bound"].get<double>() == Approx(1.0).epsilon(1e-6));
  CHECK(j["ratio"].get<double>() == Approx(1.0).epsilon(1e-6));
  CHECK(j["weight_variant"] == "uniform");
}

TEST_CASE("cli verify, output file and replay") {
  TempDir dir;
  const std::string out = (dir.path / "report.json").string();
  const Run r = run("verify --suite S6 --seed 1 --count 50 --out " + out);
  CHECK(r.status == 0);
  const std::string first = slurp(out);
  const json j = json::parse(first);
  CHECK(j["passed"] == true);
  CHECK(j["suites"][0]["suite"] == "S6");
  REQUIRE(run("verify --suite S6 --seed 1 --count 50 --out " + out).status == 0);
  CHECK(slurp(out) == first);

  // A forced failure exits 2 and its saved case replays to the same verdict.
  const Run bad = run("verify --suite S7 --count 3 --n-max 4 --abs-tol -1 --out " + out);
  CHECK(bad.status == 2);
  const json rep = json::parse(slurp(out));
  REQUIRE(!rep["suites"][0]["failed_cases"].empty());
  CHECK(run("verify --replay " + out + " --abs-tol -1").status == 2);
  CHECK(run("verify --replay " + out).status == 0);
}

TEST_CASE("cli config files") {
  TempDir dir;
  const std::string cfg = dir.write("cfg.json", R"({"values": [1,1,1,1], "theta": 1, "p": 1, "q": 1, "net": "full"})");
  const Run r = run("norm --config " + cfg);
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["result"]["value"].get<double>() == Approx(0.5).epsilon(1e-6));
  // Explicit flags win over the file.
  const Run over = run("norm --config " + cfg + " --theta 0");
  REQUIRE(over.status == 0);
  CHECK(json::parse(over.out)["params"]["theta"].get<double>() == 0.0);
  const std::string unknown = dir.write("bad.json", R"({"thetaa": 1})");
  CHECK(run("norm --values 1 --config " + unknown).status == 1);
}

TEST_CASE("cli errors exit 1") {
  TempDir dir;
  CHECK(run("norm --values 1,nan").status == 1);
  CHECK(run("norm --values 1,1 --theta -1 --p inf").status == 1);
  CHECK(run("norm --input /nonexistent/f.json").status == 1);
  CHECK(run("norm --input " + dir.write("broken.json", "{\"values\": [1, 2,\n")).status == 1);
  CHECK(run("norm --input " + dir.write("n.json", R"({"n": 3, "values": [1, 2]})")).status == 1);
  CHECK(run("verify --suite S99").status == 1);
  CHECK(run("frobnicate").status == 1);
}
