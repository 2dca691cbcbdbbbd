// Command-line front end. Every command is a thin shell over the C API in
// bec/bec.h; exit codes come from bec_status_exit_code().

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <memory>
#include <optional>
#include <regex>
#include <string>

#include "bec/bec.h"

namespace {

struct RunConfig {
  std::string balance;
  std::string noncommercial;
  std::string units;
  std::string policy = "eq3-default";
  std::string years;
  std::string out;
  std::string tolerance;
};

struct SessionDeleter {
  void operator()(bec_session* s) const { bec_session_destroy(s); }
};
using Session = std::unique_ptr<bec_session, SessionDeleter>;

int fail(const std::string& message, int code) {
  std::fprintf(stderr, "error: %s\n", message.c_str());
  return code;
}

int fail(bec_session* s, bec_status status) {
  std::string message = bec_last_error(s);
  if (message.empty()) message = bec_status_name(status);
  return fail(message, bec_status_exit_code(status));
}

void add_inputs(CLI::App* cmd, RunConfig& cfg, bool with_policy) {
  cmd->add_option("--balance", cfg.balance, "Balance sheet CSV (year,sector,fuel,quantity,unit)")
      ->required();
  cmd->add_option("--noncommercial", cfg.noncommercial,
                  "Non-commercial CSV (year,fuelwood_straw_mtce,methane_mtce)");
  cmd->add_option("--units", cfg.units, "Conversion table CSV (unit,factor_to_mtce)");
  if (with_policy) {
    cmd->add_option("--policy", cfg.policy, "Policy preset or policy file")
        ->capture_default_str();
  }
  cmd->add_option("--years", cfg.years, "Year range a..b");
  cmd->add_option("--out", cfg.out, "Output directory (default: $BEC_LEDGER_OUT)");
}

// Returns the exit code of the failure, or nullopt once the session is ready.
std::optional<int> prepare(bec_session* s, const RunConfig& cfg) {
  // Every referenced path must exist before anything is computed.
  for (const std::string* path : {&cfg.balance, &cfg.noncommercial, &cfg.units}) {
    if (!path->empty() && !std::filesystem::is_regular_file(*path)) {
      return fail("IoError: input file '" + *path + "' does not exist", 2);
    }
  }
  bec_status st = BEC_OK;
  if (!cfg.units.empty() && (st = bec_load_units(s, cfg.units.c_str())) != BEC_OK) return fail(s, st);
  if ((st = bec_load_balance(s, cfg.balance.c_str())) != BEC_OK) return fail(s, st);
  if (!cfg.noncommercial.empty() &&
      (st = bec_load_noncommercial(s, cfg.noncommercial.c_str())) != BEC_OK) {
    return fail(s, st);
  }
  if ((st = bec_set_policy(s, cfg.policy.c_str())) != BEC_OK) return fail(s, st);
  if (!cfg.years.empty()) {
    static const std::regex range(R"((\d{4})\.\.(\d{4}))");
    std::smatch m;
    if (!std::regex_match(cfg.years, m, range)) {
      return fail("InvalidYearRange: expected --years <a..b>, got '" + cfg.years + "'", 2);
    }
    if ((st = bec_set_years(s, std::stoi(m[1]), std::stoi(m[2]))) != BEC_OK) return fail(s, st);
  }
  if (!cfg.tolerance.empty() && (st = bec_set_tolerance(s, cfg.tolerance.c_str())) != BEC_OK) {
    return fail(s, st);
  }
  return std::nullopt;
}

const char* out_dir(const RunConfig& cfg) {
  if (!cfg.out.empty()) return cfg.out.c_str();
  const char* env = std::getenv("BEC_LEDGER_OUT");
  return (env && *env) ? env : nullptr;
}

int finish(bec_session* s, bec_status st) {
  std::fputs(bec_last_output(s), stdout);
  if (st == BEC_OK) return 0;
  if (st == BEC_AUDIT_FAILED) {
    std::fprintf(stderr, "error: AuditFailed: at least one audit check failed\n");
    return bec_status_exit_code(st);
  }
  return fail(s, st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Building operational energy accounting from energy balance sheets"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string policy_a, policy_b, outputs;

  auto* ingest = app.add_subcommand("ingest-check", "Parse and reconcile inputs only");
  add_inputs(ingest, cfg, false);

  auto* compute = app.add_subcommand("compute", "Compute per-year building energy ledgers");
  add_inputs(compute, cfg, true);

  auto* audit = app.add_subcommand("audit", "Heat-balance and central-heating double-count audit");
  add_inputs(audit, cfg, true);
  audit->add_option("--tolerance", cfg.tolerance, "Audit tolerance in Mtce (default 0.01)");

  auto* compare = app.add_subcommand("compare", "Compare two policies year by year");
  compare->add_option("policy_a", policy_a, "First policy (preset or file)")->required();
  compare->add_option("policy_b", policy_b, "Second policy (preset or file)")->required();
  add_inputs(compare, cfg, false);

  auto* report = app.add_subcommand("report", "Write tables and plot data");
  add_inputs(report, cfg, true);
  report->add_option("--outputs", outputs,
                     "Comma list: ledger-table,composition,share-of-final,public-detail,"
                     "noncommercial-detail,audit");
  report->add_option("--tolerance", cfg.tolerance, "Audit tolerance in Mtce (default 0.01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  bec_session* raw = nullptr;
  if (bec_session_create(&raw) != BEC_OK) return fail("InternalError: cannot create session", 4);
  Session session(raw);
  bec_session* s = session.get();

  if (auto code = prepare(s, cfg)) return *code;

  if (*ingest) return finish(s, bec_ingest_check(s));
  if (*compute) return finish(s, bec_compute(s, out_dir(cfg)));
  if (*audit) return finish(s, bec_audit(s, out_dir(cfg)));
  if (*compare) return finish(s, bec_compare(s, policy_a.c_str(), policy_b.c_str(), out_dir(cfg)));
  if (*report) {
    const char* dir = out_dir(cfg);
    if (dir == nullptr) return fail("InvalidArgument: report needs --out or BEC_LEDGER_OUT", 2);
    return finish(s, bec_report(s, outputs.empty() ? nullptr : outputs.c_str(), dir));
  }
  return 4;
}
