#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

namespace {

namespace fs = std::filesystem;

std::string cli_path() {
  const char* env = std::getenv("QSDC_SIM_BIN");
  REQUIRE_MESSAGE(env != nullptr, "QSDC_SIM_BIN must point at the qsdc_sim binary");
  return env;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "qsdc-cli-tests";
  fs::create_directories(dir);
  return dir / name;
}

int run(const std::string& args, const fs::path& stdout_file = {}) {
  std::string command = "'" + cli_path() + "' " + args;
  command += stdout_file.empty() ? std::string(" > /dev/null 2>&1")
                                 : (" > '" + stdout_file.string() + "' 2>&1");
  const int status = std::system(command.c_str());
  REQUIRE(status != -1);
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("invalid configurations exit with code 2") {
  CHECK(run("--parties 1") == 2);
  CHECK(run("--groups -5") == 2);
  CHECK(run("--test-fraction 1.0") == 2);
  CHECK(run("--noise 0.9,0.9,0") == 2);
  CHECK(run("--mode sideways") == 2);
  CHECK(run("--messages fixed:01,0 --parties 3") == 2);
}

TEST_CASE("a run followed by report closes the loop") {
  const fs::path out = scratch("loop.transcript");
  CHECK(run("--mode qsdc --groups 12 --seed 31 --test-fraction 0 --out '" +
            out.string() + "'") == 0);
  CHECK(fs::exists(out));
  CHECK(fs::exists(out.string() + ".summary"));

  const fs::path report_out = scratch("loop.report");
  CHECK(run("report '" + out.string() + "'", report_out) == 0);
  const std::string report = read_file(report_out);
  CHECK(report.find("records = 12") != std::string::npos);
  CHECK(report.find("replay_mismatches = 0") != std::string::npos);
}

TEST_CASE("report on a missing file fails loudly") {
  CHECK(run("report '" + scratch("never-written.transcript").string() + "'") == 2);
}

TEST_CASE("verify mode distinguishes rejection from success") {
  const fs::path out = scratch("verify.out");
  CHECK(run("--mode verify --groups 30 --seed 4 --out '" + out.string() + "'") == 0);
  CHECK(run("--mode verify --groups 30 --seed 4 --eavesdrop party:1 --out '" +
            out.string() + "'") == 3);
}

TEST_CASE("decode failures drive exit code 4 under the default threshold") {
  const fs::path out = scratch("noisy.transcript");
  CHECK(run("--mode qsdc --groups 30 --seed 6 --test-fraction 0 --noise 0.3,0,0.2 "
            "--out '" + out.string() + "'") == 4);
  CHECK(run("--mode qsdc --groups 30 --seed 6 --test-fraction 0 --noise 0.3,0,0.2 "
            "--failure-threshold 1.0 --out '" + out.string() + "'") == 0);
}
