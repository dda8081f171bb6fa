// End-to-end checks of the command-line tool: exit codes, input wiring and
// output equivalence across the different ways of supplying the same data.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

std::string cli_path() { return CLI_PATH; }

// Runs the tool with the given arguments and returns its exit code.
int run(const std::string& args) {
  const std::string cmd = cli_path() + " " + args;
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  if (WIFEXITED(status)) return WEXITSTATUS(status);
  return -2;
}

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::current_path() / "cli_scratch";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

void spit(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  out << text;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string q(const fs::path& p) { return p.string(); }

// A tiny well-conditioned regression problem, written once in several
// equivalent on-disk layouts.
struct Fixture {
  fs::path x_csv, y_csv, combined_csv, x_nh, y_nh;
  Fixture() {
    const fs::path d = scratch();
    x_csv = d / "x.csv";
    y_csv = d / "y.csv";
    combined_csv = d / "combined.csv";
    x_nh = d / "x_nh.csv";
    y_nh = d / "y_nh.csv";
    const std::string xbody =
        "1,0.5\n-0.5,1\n2,-1\n0.25,0.75\n-1.5,0.25\n";
    const std::string ybody = "1.2\n0.3\n2.5\n0.4\n-1.1\n";
    spit(x_csv, "x1,x2\n" + xbody);
    spit(y_csv, "y\n" + ybody);
    spit(x_nh, xbody);
    spit(y_nh, ybody);
    spit(combined_csv,
         "x1,y,x2\n"
         "1,1.2,0.5\n"
         "-0.5,0.3,1\n"
         "2,2.5,-1\n"
         "0.25,0.4,0.75\n"
         "-1.5,-1.1,0.25\n");
  }
};

std::vector<double> coefficients_of(const fs::path& json_file) {
  const nlohmann::json j = nlohmann::json::parse(slurp(json_file));
  return j["coefficients"][0].get<std::vector<double>>();
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("> /dev/null 2>&1") == 2);                    // no subcommand
  CHECK(run("frobnicate > /dev/null 2>&1") == 2);         // unknown subcommand
  CHECK(run("fit --lambda 0.1 > /dev/null 2>&1") == 2);   // missing --data
  Fixture f;
  // missing --lambda
  CHECK(run("fit --data " + q(f.x_csv) + " --response " + q(f.y_csv) +
            " > /dev/null 2>&1") == 2);
  // invalid enum value
  CHECK(run("path --data " + q(f.x_csv) + " --response " + q(f.y_csv) +
            " --screen bogus > /dev/null 2>&1") == 2);
  // both response sources at once
  CHECK(run("fit --data " + q(f.combined_csv) + " --response " + q(f.y_csv) +
            " --response-col y --lambda 0.1 > /dev/null 2>&1") == 2);
  // --response-col without a header row
  CHECK(run("fit --data " + q(f.x_nh) +
            " --response-col y --no-header --lambda 0.1 > /dev/null 2>&1") ==
        2);
  // out-of-range numeric flag
  CHECK(run("fit --data " + q(f.x_csv) + " --response " + q(f.y_csv) +
            " --lambda 0.1 --delta -1 > /dev/null 2>&1") == 2);
}

TEST_CASE("data errors exit with code 3") {
  Fixture f;
  CHECK(run("path --data " + q(scratch() / "no_such.csv") + " --response " +
            q(f.y_csv) + " > /dev/null 2>&1") == 3);
  // response length mismatch
  const fs::path y_short = scratch() / "y_short.csv";
  spit(y_short, "y\n1\n2\n");
  CHECK(run("fit --data " + q(f.x_csv) + " --response " + q(y_short) +
            " --lambda 0.1 > /dev/null 2>&1") == 3);
  // response column that does not exist
  CHECK(run("fit --data " + q(f.combined_csv) +
            " --response-col zz --lambda 0.1 > /dev/null 2>&1") == 3);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help > /dev/null") == 0);
  CHECK(run("path --help > /dev/null") == 0);
}

TEST_CASE("equivalent input layouts give identical coefficients") {
  Fixture f;
  const fs::path out1 = scratch() / "fit1.json";
  const fs::path out2 = scratch() / "fit2.json";
  const fs::path out3 = scratch() / "fit3.json";
  const std::string tail = " --lambda 0.05 --delta 1 ";

  REQUIRE(run("fit --data " + q(f.x_csv) + " --response " + q(f.y_csv) + tail +
              "--output " + q(out1)) == 0);
  REQUIRE(run("fit --data " + q(f.combined_csv) + " --response-col y" + tail +
              "--output " + q(out2)) == 0);
  REQUIRE(run("fit --data " + q(f.x_nh) + " --response " + q(f.y_nh) +
              " --no-header" + tail + "--output " + q(out3)) == 0);

  const nlohmann::json j = nlohmann::json::parse(slurp(out1));
  CHECK(j["version"] == "1");
  REQUIRE(j["lambdas"].size() == 1);
  CHECK(j["lambdas"][0].get<double>() == 0.05);
  CHECK(j["kkt_certified"][0].get<bool>());
  CHECK(j["converged"][0].get<bool>());
  CHECK(j["config_echo"]["delta"].get<double>() == 1.0);

  const std::vector<double> b1 = coefficients_of(out1);
  REQUIRE(b1.size() == 2);
  CHECK(b1 == coefficients_of(out2));
  CHECK(b1 == coefficients_of(out3));
}

TEST_CASE("location estimate subcommand") {
  // {1, 2, 10} with threshold 1: the clipped residuals at c = 2 are
  // -1, 0, +1 and sum to zero, so the unpenalized estimate is exactly 2.
  const fs::path nums = scratch() / "nums.txt";
  spit(nums, "1\n2\n10\n");
  const fs::path got = scratch() / "med_out.txt";

  REQUIRE(run("median " + q(nums) + " --delta 1 > " + q(got)) == 0);
  CHECK(slurp(got) == "2\n");

  // With penalty 0.25 the stationarity condition 2c - 3.75 = 0 inside the
  // interval (1, 2) gives c = 1.875.
  REQUIRE(run("median " + q(nums) + " --delta 1 --lambda 0.25 > " + q(got)) ==
          0);
  CHECK(slurp(got) == "1.875\n");

  // Standard input works the same as a file.
  REQUIRE(std::system(("printf '1 2 10' | " + cli_path() +
                       " median --delta 1 > " + q(got))
                          .c_str()) == 0);
  CHECK(slurp(got) == "2\n");

  // JSON form carries the estimate and the attained objective.
  const fs::path mj = scratch() / "med.json";
  REQUIRE(run("median " + q(nums) + " --delta 1 --lambda 0.25 --output " +
              q(mj)) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(mj));
  CHECK(j["estimate"].get<double>() == 1.875);
  CHECK(j["config_echo"]["n"].get<int>() == 3);
}

TEST_CASE("simulate writes a loadable dataset") {
  const fs::path dir = scratch() / "sim";
  REQUIRE(run("simulate --scenario 2 --n 30 --p 20 --seed 7 --out-dir " +
              q(dir) + " > /dev/null") == 0);
  CHECK(fs::exists(dir / "X.csv"));
  CHECK(fs::exists(dir / "y.csv"));
  CHECK(fs::exists(dir / "beta_true.csv"));

  // The files it writes are directly consumable by the fitting commands.
  const fs::path out = scratch() / "simfit.json";
  REQUIRE(run("path --data " + q(dir / "X.csv") + " --response " +
              q(dir / "y.csv") + " --nlambda 10 --output " + q(out)) == 0);
  const nlohmann::json j = nlohmann::json::parse(slurp(out));
  CHECK(j["lambdas"].size() == 10);
  for (const auto& ok : j["kkt_certified"]) CHECK(ok.get<bool>());
}
