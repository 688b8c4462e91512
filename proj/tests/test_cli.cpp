#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pconvex/cli.hpp"
#include "pconvex/io.hpp"

using namespace pconvex;
namespace fs = std::filesystem;

namespace {

struct Sandbox {
  fs::path dir;
  Sandbox() {
    dir = fs::temp_directory_path() / ("pconvex_cli_" + std::to_string(::getpid()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~Sandbox() { fs::remove_all(dir); }

  std::string put(const std::string& name, const std::string& text) const {
    const auto p = (dir / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string read(const std::string& rel) const {
    std::ifstream in(dir / rel);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

int run(std::vector<std::string> args, std::string* err_text = nullptr) {
  args.insert(args.begin(), "pconvex");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (err_text) *err_text = err.str();
  return code;
}

const char* kDiagonal =
    R"({"dim":2,"closed":true,"mode":"rational","points":[["1","0","1","0"],["0","1","0","1"],["-1","0","-1","0"],["0","-1","0","-1"]]})";
const char* kConjugate =
    R"({"dim":2,"closed":true,"mode":"rational","points":[["1","0","1","0"],["0","1","0","-1"],["-1","0","-1","0"],["0","-1","0","1"]]})";
const char* kWdz =
    R"({"nvars":2,"components":[{"nvars":2,"terms":[{"exp":[0,1],"coeff":["1","0"]}]},{"nvars":2,"terms":[]}]})";
const char* kBall = R"({"center":["1","0","1","0"],"radius":"1/5"})";

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("certify writes a digest-stamped certificate") {
    Sandbox sb;
    const auto curve = sb.put("conj.json", kConjugate), form = sb.put("wdz.json", kWdz);
    const auto out = (sb.dir / "o").string();
    REQUIRE(run({"--out", out, "certify", "--curve", curve, "--form", form}) == exit_ok);
    const Json j = Json::parse(sb.read("o/certify.json"));
    CHECK(j["command"] == "certify");
    CHECK(j["certificate"]["verdict"] == "certified-polynomially-convex");
    CHECK(j["certificate"]["integral"] == Json::array({"0", "4"}));
    CHECK(j["inputs"]["curve"] == json_digest(Json::parse(kConjugate)));
    CHECK(j["inputs"]["form"].is_string());
  }

  TEST_CASE("perturb output is reproducible") {
    Sandbox sb;
    const auto curve = sb.put("diag.json", kDiagonal), ball = sb.put("ball.json", kBall);
    for (const char* o : {"a", "b"}) {
      REQUIRE(run({"--seed", "5", "--out", (sb.dir / o).string(), "perturb", "--curve", curve, "--ball", ball, "--eps",
                   "1/10"}) == exit_ok);
    }
    const auto a = sb.read("a/perturb.json");
    CHECK(a == sb.read("b/perturb.json"));
    const Json j = Json::parse(a);
    CHECK(j["verified"] == true);
    CHECK(j["result"]["certificate"]["verdict"] == "certified-polynomially-convex");
  }

  TEST_CASE("demo csv carries a parameter header") {
    Sandbox sb;
    const auto out = (sb.dir / "o").string();
    REQUIRE(run({"--out", out, "demo", "slit", "--k", "2", "4", "--n", "256"}) == exit_ok);
    const auto csv = sb.read("o/demo-slit.csv");
    CHECK(csv.rfind("# pconvex demo slit n=256", 0) == 0);
    CHECK(csv.find("\nk,n,mesh,") != std::string::npos);
    CHECK(sb.read("o/demo-slit.svg").find("<!-- pconvex demo slit") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    Sandbox sb;
    const auto out = (sb.dir / "o").string();
    const auto curve = sb.put("diag.json", kDiagonal), ball = sb.put("ball.json", kBall);
    std::string err;
    CHECK(run({"--out", out, "certify", "--curve", sb.put("bad.json", "{oops"), "--form", curve}, &err) ==
          exit_malformed);
    CHECK(err.find("malformed input") != std::string::npos);
    CHECK(run({"--out", out, "certify", "--curve", curve}) == exit_malformed);
    CHECK(run({"--mode", "f32", "--out", out, "search", "--curve", curve}) == exit_malformed);
    CHECK(run({"--out", out, "certify", "--curve", sb.dir.string() + "/missing.json", "--form", curve}) ==
          exit_malformed);
    const auto ball3 = sb.put("b3.json", R"({"center":["1","0","1","0","0","0"],"radius":"1/5"})");
    CHECK(run({"--out", out, "perturb", "--curve", curve, "--ball", ball3}) == exit_domain);
    CHECK(run({"--out", out, "perturb-smooth", "--curve", curve, "--ball", ball, "--amplitude", "0"}) == exit_retry);
    CHECK(run({"--help"}) == exit_ok);
  }
}
