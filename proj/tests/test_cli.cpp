#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Result {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path work(const std::string& name) {
  const fs::path dir = fs::path(BEC_TEST_WORK_DIR) / name;
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

std::string data(const char* name) { return std::string(BEC_TEST_DATA_DIR) + "/" + name; }

// Runs the CLI with `args`; `env` is prepended verbatim (e.g. "VAR=x").
Result run(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const fs::path dir = fs::path(BEC_TEST_WORK_DIR) / "capture";
  fs::create_directories(dir);
  const auto out = dir / ("out" + std::to_string(counter) + ".txt");
  const auto err = dir / ("err" + std::to_string(counter) + ".txt");
  ++counter;
  const std::string cmd = "env -u BEC_LEDGER_OUT " + env + " '" + BEC_CLI_PATH + "' " + args +
                          " >'" + out.string() + "' 2>'" + err.string() + "'";
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> row;
    std::istringstream fields(line);
    std::string f;
    while (std::getline(fields, f, ',')) row.push_back(f);
    rows.push_back(row);
  }
  return rows;
}

long cents(const std::string& s) { return std::lround(std::stod(s) * 100); }

const std::string kNational =
    "--balance '" + data("national_balance.csv") + "' --noncommercial '" +
    data("national_noncommercial.csv") + "'";
const std::string kHeat = "--balance '" + data("heat_2013.csv") + "'";

}  // namespace

TEST_CASE("compute writes a 14-row ledger") {
  const auto dir = work("compute");
  const auto r = run("compute " + kNational + " --policy eq3-default --out '" + dir.string() + "'");
  CHECK(r.exit_code == 0);
  const auto rows = csv(slurp(dir / "ledger.csv"));
  CHECK(rows.size() == 15);
  CHECK(rows.back()[4] == "676.06");
  CHECK(r.out.find("676.06") != std::string::npos);
}

TEST_CASE("missing input file exits 2 naming the path") {
  const auto r = run("compute --balance /nowhere/balance.csv");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("/nowhere/balance.csv") != std::string::npos);
  const auto nce = run("compute --balance '" + data("national_balance.csv") +
                       "' --noncommercial /nowhere/nce.csv");
  CHECK(nce.exit_code == 2);
  CHECK(nce.err.find("/nowhere/nce.csv") != std::string::npos);
}

TEST_CASE("bad flags exit 2") {
  CHECK(run("compute").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("compute " + kNational + " --years 2013-2000").exit_code == 2);
  CHECK(run("compute " + kNational + " --policy eq9").exit_code == 2);
}

TEST_CASE("legacy residential rule moves only RE, by 5% of residential diesel") {
  const auto a = work("eq3"), b = work("eq2");
  REQUIRE(run("compute " + kNational + " --policy eq3-default --out '" + a.string() + "'").exit_code == 0);
  REQUIRE(run("compute " + kNational + " --policy eq2-legacy --out '" + b.string() + "'").exit_code == 0);
  const auto eq3 = csv(slurp(a / "ledger.csv"));
  const auto eq2 = csv(slurp(b / "ledger.csv"));
  std::map<std::string, long> drc;
  for (const auto& row : csv(slurp(data("national_reconstructed.csv")))) {
    if (row[0] != "year") drc[row[0]] = cents(row[4]);
  }
  REQUIRE(eq3.size() == eq2.size());
  for (std::size_t i = 1; i < eq3.size(); ++i) {
    CAPTURE(eq3[i][0]);
    CHECK(eq3[i][2] == eq2[i][2]);
    CHECK(eq3[i][3] == eq2[i][3]);
    const double want = 0.05 * static_cast<double>(drc.at(eq3[i][0]));
    CHECK(std::abs(static_cast<double>(cents(eq2[i][1]) - cents(eq3[i][1])) - want) <= 1.0);
  }
}

TEST_CASE("audit exit codes") {
  const auto dir = work("audit");
  const auto ok = run("audit " + kHeat + " --policy eq3-default --tolerance 0.005 --out '" + dir.string() + "'");
  CHECK(ok.exit_code == 0);
  CHECK(fs::exists(dir / "audit.csv"));
  const auto naive = run("audit " + kHeat + " --policy naive-heating-added");
  CHECK(naive.exit_code == 1);
  CHECK(naive.out.find("double count") != std::string::npos);
  const auto missing = run("audit --balance '" + data("national_balance.csv") + "'");
  CHECK(missing.exit_code == 3);
  CHECK(missing.err.find("MissingHeatData") != std::string::npos);
  CHECK(missing.err.find("2000") != std::string::npos);
}

TEST_CASE("compare") {
  const auto same = run("compare eq3-default eq3-default " + kNational);
  CHECK(same.exit_code == 0);

  const auto dir = work("compare");
  REQUIRE(run("compare eq3-default eq3-default " + kNational + " --out '" + dir.string() + "'").exit_code == 0);
  for (const auto& row : csv(slurp(dir / "compare.csv"))) {
    if (row[0] == "year") continue;
    for (std::size_t i = 3; i < row.size(); ++i) CHECK(row[i] == "0.00");
  }

  const auto heat = work("compare_heat");
  REQUIRE(run("compare eq3-default naive-heating-added " + kHeat + " --out '" + heat.string() + "'")
              .exit_code == 0);
  const auto rows = csv(slurp(heat / "compare.csv"));
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][3] == "123.48");
  CHECK(rows[1].back() == "123.48");

  const auto wang = work("compare_wang");
  REQUIRE(run("compare eq3-default wang2007 " + kNational + " --years 2013..2013 --out '" +
              wang.string() + "'")
              .exit_code == 0);
  const auto w = csv(slurp(wang / "compare.csv"));
  REQUIRE(w.size() == 2);
  CHECK(w[1][0] == "2013");
  CHECK(std::abs(cents(w[1][5]) - 1640) <= 2);
}

TEST_CASE("report needs an output directory and honours BEC_LEDGER_OUT") {
  CHECK(run("report " + kNational).exit_code == 2);
  const auto dir = work("env_out");
  const auto r = run("report " + kNational + " --outputs ledger-table", "BEC_LEDGER_OUT='" + dir.string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(dir / "ledger.csv"));
  CHECK(fs::exists(dir / "plot_total.dat"));
  CHECK(run("report " + kNational + " --outputs pie --out '" + dir.string() + "'").exit_code == 2);
}

TEST_CASE("identical runs give byte-identical files") {
  const auto a = work("det_a"), b = work("det_b");
  REQUIRE(run("report " + kNational + " --out '" + a.string() + "'").exit_code == 0);
  REQUIRE(run("report " + kNational + " --out '" + b.string() + "'").exit_code == 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(a)) {
    CAPTURE(entry.path().filename().string());
    CHECK(slurp(entry.path()) == slurp(b / entry.path().filename()));
    ++files;
  }
  CHECK(files >= 10);
}

TEST_CASE("ingest-check") {
  const auto r = run("ingest-check " + kNational);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("2013:") != std::string::npos);
  CHECK(r.out.find("non-commercial records: 14 years") != std::string::npos);
}
