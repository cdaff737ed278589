#include <doctest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
  int code = -1;
  std::string out;
};

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / ("novikov_cli_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string data(const std::string& name) { return std::string(NOVIKOV_DATA_DIR) + "/" + name; }

Run run(const std::string& args, const std::string& env = "") {
  fs::path out = scratch() / "stdout.txt";
  std::string command = env + " " + std::string(NOVIKOV_CLI) + " " + args + " > " + out.string() +
                        " 2> " + (scratch() / "stderr.txt").string();
  int status = std::system(command.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out)};
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("abelianize reports rank and torsion") {
  Run r = run("abelianize " + data("abab.pres"));
  REQUIRE(r.code == 0);
  nlohmann::json j = json_of(r);
  CHECK(j.at("command") == "abelianize");
  CHECK(j.at("abelianization").at("rank") == 1);
  CHECK(j.at("inputs").at("presentation").at("sha256").get<std::string>().size() == 64);
  Run text = run("abelianize " + data("z3.pres") + " --format text");
  CHECK(text.out.find("rank 3") != std::string::npos);
}

TEST_CASE("error exit codes") {
  CHECK(run("abelianize " + data("bad_edge.pres")).code == 2);
  CHECK(run("abelianize " + data("not_confluent.pres")).code == 3);
  CHECK(run("abelianize " + data("missing.pres")).code == 1);
  CHECK(run("certify " + data("z2.pres") + " --phi 1,2,3").code == 1);
  CHECK(run("certify " + data("z2.pres") + " --phi 1,0", "NOVIKOV_MAX_Q=x").code == 0);
  CHECK(run("certify " + data("z2.pres") + " --quotient " + data("z2_quotient.json") + " --phi 1,0",
            "NOVIKOV_MAX_Q=x")
            .code == 1);
}

TEST_CASE("certify exit codes follow the verdict") {
  CHECK(run("certify " + data("z2.pres") + " --phi 1,2").code == 0);
  CHECK(run("certify " + data("f2.pres") + " --phi 1,1").code == 10);
  CHECK(run("certify " + data("f2xz.pres") + " --phi 1,0,0").code == 11);
  CHECK(run("certify " + data("f2xz.pres") + " --character " + data("f2xz_phi.json")).code == 0);
  CHECK(run("certify " + data("z2.pres") + " --character " + data("z2_irrational.json")).code == 0);
  Run bs = run("certify catalog:BS12 --phi 1");
  CHECK(bs.code == 11);
  nlohmann::json j = json_of(bs);
  CHECK(j.at("result").at("minus").at("status") == "Certified");
}

TEST_CASE("certify in a finite-index subgroup") {
  Run r = run("certify " + data("z2.pres") + " --quotient " + data("z2_quotient.json") + " --phi 1,1");
  CHECK(r.code == 0);
  nlohmann::json j = json_of(r);
  CHECK(j.at("inputs").contains("quotient"));
}

TEST_CASE("reports are byte-identical across runs and threads") {
  std::string args = "scan " + data("f2xz.pres") + " --samples 6 --seed 3";
  Run a = run(args + " --threads 1");
  Run b = run(args + " --threads 4");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a).at("result").at("samples").size() == 6);
  Run c = run("certify " + data("z3.pres") + " --phi 1,-1,2");
  Run d = run("certify " + data("z3.pres") + " --phi 1,-1,2");
  CHECK(c.out == d.out);
}

TEST_CASE("--out writes the report and verify re-checks it") {
  fs::path report = scratch() / "report.json";
  Run r = run("certify " + data("f2xz.pres") + " --phi 1,2,1 --out " + report.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  nlohmann::json j = nlohmann::json::parse(slurp(report));
  CHECK(j.at("result").at("verdict") == "Fibred");
  Run v = run("verify " + data("f2xz.pres") + " " + report.string());
  CHECK(v.code == 0);
  CHECK(json_of(v).at("certificates").size() == 2);
  j["result"]["plus"]["certificate"]["margin"] = nlohmann::json::object({{"1", "1000"}});
  std::ofstream(report) << j.dump();
  CHECK(run("verify " + data("f2xz.pres") + " " + report.string()).code == 1);
}

TEST_CASE("selftest and catalog subcommands") {
  Run ok = run("selftest --scale 3");
  CHECK(ok.code == 0);
  CHECK(run("selftest --scale 3 --inject-corrupt-quotient").code == 1);
  Run cat = run("catalog Z2 --samples 4");
  CHECK(cat.code == 0);
  CHECK(run("catalog NoSuchGroup").code == 1);
}
