#include "bec/bec.h"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bec/accounting.hpp"
#include "bec/audit.hpp"
#include "bec/error.hpp"
#include "bec/ingest.hpp"
#include "bec/report.hpp"

struct bec_session {
  bec::ConversionTable units = bec::ConversionTable::defaults();
  std::optional<std::vector<bec::BalanceSheet>> sheets;
  std::optional<bec::YearSeries<bec::NonCommercialRecord>> records;
  bec::AccountingPolicy policy;
  std::optional<std::pair<int, int>> years;
  bec::Tolerance tolerance = bec::kDefaultAuditTolerance;
  std::vector<bec_ledger_row> ledger_rows;
  std::string last_error;
  std::string last_output;
};

namespace {

using bec::Error;
using bec::ErrorCode;

bec_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return BEC_E_PARSE;
    case ErrorCode::kUnknownSector: return BEC_E_UNKNOWN_SECTOR;
    case ErrorCode::kUnknownFuel: return BEC_E_UNKNOWN_FUEL;
    case ErrorCode::kUnknownUnit: return BEC_E_UNKNOWN_UNIT;
    case ErrorCode::kDuplicateCell: return BEC_E_DUPLICATE_CELL;
    case ErrorCode::kDuplicateYear: return BEC_E_DUPLICATE_YEAR;
    case ErrorCode::kNegativeQuantity: return BEC_E_NEGATIVE_QUANTITY;
    case ErrorCode::kReconciliationError: return BEC_E_RECONCILIATION;
    case ErrorCode::kDeductionExceedsTotal: return BEC_E_DEDUCTION_EXCEEDS_TOTAL;
    case ErrorCode::kMissingSector: return BEC_E_MISSING_SECTOR;
    case ErrorCode::kMissingCell: return BEC_E_MISSING_CELL;
    case ErrorCode::kMissingHeatData: return BEC_E_MISSING_HEAT_DATA;
    case ErrorCode::kYearMismatch: return BEC_E_YEAR_MISMATCH;
    case ErrorCode::kInvalidDenominator: return BEC_E_INVALID_DENOMINATOR;
    case ErrorCode::kEmptyLedger: return BEC_E_EMPTY_LEDGER;
    case ErrorCode::kEmptyReport: return BEC_E_EMPTY_REPORT;
    case ErrorCode::kUnknownReportKind: return BEC_E_UNKNOWN_REPORT_KIND;
    case ErrorCode::kInvalidPolicy: return BEC_E_INVALID_POLICY;
    case ErrorCode::kInvalidYearRange: return BEC_E_INVALID_YEAR_RANGE;
    case ErrorCode::kArithmeticError: return BEC_E_ARITHMETIC;
    case ErrorCode::kIoError: return BEC_E_IO;
  }
  return BEC_E_INTERNAL;
}

struct InvalidArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
bec_status guarded(bec_session* s, F&& body) {
  if (s == nullptr) return BEC_E_INVALID_ARGUMENT;
  s->last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    s->last_error = e.describe();
    return to_status(e.code());
  } catch (const InvalidArgument& e) {
    s->last_error = fmt::format("InvalidArgument: {}", e.what());
    return BEC_E_INVALID_ARGUMENT;
  } catch (const std::filesystem::filesystem_error& e) {
    s->last_error = fmt::format("IoError: {}", e.what());
    return BEC_E_IO;
  } catch (const std::exception& e) {
    s->last_error = fmt::format("InternalError: {}", e.what());
    return BEC_E_INTERNAL;
  } catch (...) {
    s->last_error = "InternalError: unknown exception";
    return BEC_E_INTERNAL;
  }
}

std::filesystem::path require_path(const char* path) {
  if (path == nullptr || *path == '\0') throw InvalidArgument("empty path");
  std::filesystem::path p(path);
  if (!std::filesystem::is_regular_file(p)) {
    throw Error(ErrorCode::kIoError, fmt::format("input file '{}' does not exist", p.string()));
  }
  return p;
}

const std::vector<bec::BalanceSheet>& loaded_sheets(const bec_session* s) {
  if (!s->sheets) throw InvalidArgument("no balance file loaded");
  return *s->sheets;
}

std::vector<bec::BalanceSheet> selected_sheets(const bec_session* s) {
  const auto& all = loaded_sheets(s);
  if (!s->years) return all;
  auto [first, last] = *s->years;
  if (all.empty() || first < all.front().year() || last > all.back().year()) {
    throw Error(ErrorCode::kInvalidYearRange,
                all.empty() ? std::string("no balance years loaded")
                            : fmt::format("year range {}..{} is outside the data ({}..{})", first,
                                          last, all.front().year(), all.back().year()));
  }
  std::vector<bec::BalanceSheet> out;
  for (const auto& sheet : all) {
    if (sheet.year() >= first && sheet.year() <= last) out.push_back(sheet);
  }
  return out;
}

// Without a non-commercial file the ledgers fall back to commercial energy.
bec::AccountingPolicy effective_policy(const bec_session* s, bec::AccountingPolicy policy) {
  if (!s->records) policy.include_noncommercial = false;
  return policy;
}

const bec::YearSeries<bec::NonCommercialRecord>& records_or_empty(const bec_session* s) {
  static const bec::YearSeries<bec::NonCommercialRecord> empty;
  return s->records ? *s->records : empty;
}

void write_text(const char* out_dir, const char* name, const std::string& content) {
  if (out_dir == nullptr) return;
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / name, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, fmt::format("cannot write '{}'", (dir / name).string()));
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  return items;
}

}  // namespace

extern "C" {

const char* bec_status_name(bec_status status) {
  switch (status) {
    case BEC_OK: return "Ok";
    case BEC_AUDIT_FAILED: return "AuditFailed";
    case BEC_E_INVALID_ARGUMENT: return "InvalidArgument";
    case BEC_E_INTERNAL: return "InternalError";
    case BEC_E_PARSE: return "ParseError";
    case BEC_E_UNKNOWN_SECTOR: return "UnknownSector";
    case BEC_E_UNKNOWN_FUEL: return "UnknownFuel";
    case BEC_E_UNKNOWN_UNIT: return "UnknownUnit";
    case BEC_E_DUPLICATE_CELL: return "DuplicateCell";
    case BEC_E_DUPLICATE_YEAR: return "DuplicateYear";
    case BEC_E_NEGATIVE_QUANTITY: return "NegativeQuantity";
    case BEC_E_RECONCILIATION: return "ReconciliationError";
    case BEC_E_DEDUCTION_EXCEEDS_TOTAL: return "DeductionExceedsTotal";
    case BEC_E_MISSING_SECTOR: return "MissingSector";
    case BEC_E_MISSING_CELL: return "MissingCell";
    case BEC_E_MISSING_HEAT_DATA: return "MissingHeatData";
    case BEC_E_YEAR_MISMATCH: return "YearMismatch";
    case BEC_E_INVALID_DENOMINATOR: return "InvalidDenominator";
    case BEC_E_EMPTY_LEDGER: return "EmptyLedger";
    case BEC_E_EMPTY_REPORT: return "EmptyReport";
    case BEC_E_UNKNOWN_REPORT_KIND: return "UnknownReportKind";
    case BEC_E_INVALID_POLICY: return "InvalidPolicy";
    case BEC_E_INVALID_YEAR_RANGE: return "InvalidYearRange";
    case BEC_E_ARITHMETIC: return "ArithmeticError";
    case BEC_E_IO: return "IoError";
  }
  return "Unknown";
}

int bec_status_exit_code(bec_status status) {
  switch (status) {
    case BEC_OK:
      return 0;
    case BEC_AUDIT_FAILED:
      return 1;
    case BEC_E_MISSING_SECTOR:
    case BEC_E_MISSING_CELL:
    case BEC_E_MISSING_HEAT_DATA:
    case BEC_E_YEAR_MISMATCH:
    case BEC_E_EMPTY_LEDGER:
    case BEC_E_EMPTY_REPORT:
      return 3;
    case BEC_E_ARITHMETIC:
    case BEC_E_INTERNAL:
      return 4;
    default:
      return 2;
  }
}

bec_status bec_session_create(bec_session** out) {
  if (out == nullptr) return BEC_E_INVALID_ARGUMENT;
  *out = new (std::nothrow) bec_session();
  return *out ? BEC_OK : BEC_E_INTERNAL;
}

void bec_session_destroy(bec_session* session) { delete session; }

const char* bec_last_error(const bec_session* session) {
  return session ? session->last_error.c_str() : "";
}

const char* bec_last_output(const bec_session* session) {
  return session ? session->last_output.c_str() : "";
}

bec_status bec_load_units(bec_session* s, const char* path) {
  return guarded(s, [&] {
    s->units = bec::ConversionTable::from_file(require_path(path));
    return BEC_OK;
  });
}

bec_status bec_load_balance(bec_session* s, const char* path) {
  return guarded(s, [&] {
    s->sheets = bec::parse_balance_file(require_path(path), s->units);
    return BEC_OK;
  });
}

bec_status bec_load_noncommercial(bec_session* s, const char* path) {
  return guarded(s, [&] {
    s->records = bec::parse_noncommercial_file(require_path(path));
    return BEC_OK;
  });
}

bec_status bec_set_policy(bec_session* s, const char* preset_or_path) {
  return guarded(s, [&] {
    if (preset_or_path == nullptr) throw InvalidArgument("null policy");
    s->policy = bec::load_policy(preset_or_path);
    return BEC_OK;
  });
}

bec_status bec_set_years(bec_session* s, int first, int last) {
  return guarded(s, [&] {
    if (first > last) {
      throw Error(ErrorCode::kInvalidYearRange, fmt::format("empty year range {}..{}", first, last));
    }
    s->years = std::pair(first, last);
    return BEC_OK;
  });
}

bec_status bec_set_tolerance(bec_session* s, const char* mtce) {
  return guarded(s, [&] {
    if (mtce == nullptr) throw InvalidArgument("null tolerance");
    s->tolerance = bec::Tolerance::parse(mtce);
    return BEC_OK;
  });
}

bec_status bec_ingest_check(bec_session* s) {
  return guarded(s, [&] {
    const auto sheets = selected_sheets(s);
    std::string out;
    for (const auto& sheet : sheets) {
      out += fmt::format("{}: {} cells, {} total-final fuels, {} transformation rows, reconciled\n",
                         sheet.year(), sheet.cells().size(), sheet.total_final().size(),
                         sheet.transformation().size());
    }
    if (s->records) out += fmt::format("non-commercial records: {} years\n", s->records->size());
    s->last_output = std::move(out);
    return BEC_OK;
  });
}

bec_status bec_compute(bec_session* s, const char* out_dir) {
  return guarded(s, [&] {
    const auto sheets = selected_sheets(s);
    const auto ledgers = bec::ledger_series(sheets, records_or_empty(s), s->policy);
    const auto table = bec::render_ledger_table(ledgers);
    write_text(out_dir, "ledger.csv", table.csv);
    s->ledger_rows.clear();
    std::string warnings;
    for (const auto& [year, l] : ledgers) {
      s->ledger_rows.push_back({year, l.residential.cents(), l.public_sector.cents(),
                                l.noncommercial.cents(), l.commercial_total.cents(),
                                l.total.cents()});
      for (const auto& w : l.warnings) warnings += fmt::format("warning {}: {}\n", year, w);
    }
    s->last_output = table.text + warnings;
    return BEC_OK;
  });
}

bec_status bec_ledger_count(const bec_session* s, size_t* count) {
  if (s == nullptr || count == nullptr) return BEC_E_INVALID_ARGUMENT;
  *count = s->ledger_rows.size();
  return BEC_OK;
}

bec_status bec_ledger_get(const bec_session* s, size_t index, bec_ledger_row* row) {
  if (s == nullptr || row == nullptr || index >= s->ledger_rows.size()) return BEC_E_INVALID_ARGUMENT;
  *row = s->ledger_rows[index];
  return BEC_OK;
}

bec_status bec_audit(bec_session* s, const char* out_dir) {
  return guarded(s, [&] {
    const auto sheets = selected_sheets(s);
    const auto policy = effective_policy(s, s->policy);
    std::vector<bec::AuditReport> reports;
    for (const auto& sheet : sheets) {
      bec::AuditReport report = bec::heat_balance_check(sheet, s->tolerance);
      const auto ledger =
          bec::total_building_energy(sheet, records_or_empty(s).find(sheet.year()), policy);
      report.absorb(bec::double_count_detector(ledger, sheet));
      reports.push_back(std::move(report));
    }
    std::ostringstream csv;
    bec::write_audit_csv(csv, reports);
    write_text(out_dir, "audit.csv", csv.str());
    s->last_output = bec::render_audit_text(reports);
    for (const auto& r : reports) {
      if (!r.overall_pass()) return BEC_AUDIT_FAILED;
    }
    return BEC_OK;
  });
}

bec_status bec_compare(bec_session* s, const char* policy_a, const char* policy_b,
                       const char* out_dir) {
  return guarded(s, [&] {
    if (policy_a == nullptr || policy_b == nullptr) throw InvalidArgument("null policy");
    const auto a = effective_policy(s, bec::load_policy(policy_a));
    const auto b = effective_policy(s, bec::load_policy(policy_b));
    const auto sheets = selected_sheets(s);
    const auto la = bec::ledger_series(sheets, records_or_empty(s), a);
    const auto lb = bec::ledger_series(sheets, records_or_empty(s), b);

    auto delta = [](bec::EnergyQuantity x, bec::EnergyQuantity y) {
      return (y.value() - x.value()).to_string();
    };
    std::string csv = "year,NBE_a,NBE_b,delta_NBE,delta_RE,delta_PE,delta_NCE";
    for (auto label : bec::kAdjustmentLabels) csv += fmt::format(",delta_{}", label);
    csv += '\n';
    std::string text = fmt::format("a = {}, b = {}; deltas are b - a\n", a.name, b.name);
    text += fmt::format("{:>6}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}\n", "year", "NBE_a",
                        "NBE_b", "delta_NBE", "delta_RE", "delta_PE", "delta_NCE");
    for (const auto& [year, x] : la) {
      const auto& y = lb.at(year);
      csv += fmt::format("{},{},{},{},{},{},{}", year, x.total.to_string(), y.total.to_string(),
                         delta(x.total, y.total), delta(x.residential, y.residential),
                         delta(x.public_sector, y.public_sector),
                         delta(x.noncommercial, y.noncommercial));
      for (auto label : bec::kAdjustmentLabels) {
        csv += "," + delta(x.adjustment(label), y.adjustment(label));
      }
      csv += '\n';
      text += fmt::format("{:>6}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}  {:>10}\n", year,
                          x.total.to_string(), y.total.to_string(), delta(x.total, y.total),
                          delta(x.residential, y.residential),
                          delta(x.public_sector, y.public_sector),
                          delta(x.noncommercial, y.noncommercial));
    }
    write_text(out_dir, "compare.csv", csv);
    s->last_output = std::move(text);
    return BEC_OK;
  });
}

bec_status bec_report(bec_session* s, const char* outputs, const char* out_dir) {
  return guarded(s, [&] {
    if (out_dir == nullptr || *out_dir == '\0') throw InvalidArgument("report needs an output directory");
    const auto& all = loaded_sheets(s);
    bec::ReportSpec spec;
    if (outputs == nullptr) {
      spec.outputs = {bec::ReportOutput::kLedgerTable, bec::ReportOutput::kComposition,
                      bec::ReportOutput::kShareOfFinal, bec::ReportOutput::kPublicDetail};
      if (s->records) spec.outputs.insert(bec::ReportOutput::kNoncommercialDetail);
    } else {
      for (const auto& item : split_list(outputs)) spec.outputs.insert(bec::parse_report_output(item));
    }
    if (s->years) {
      std::tie(spec.first_year, spec.last_year) = *s->years;
    } else if (!all.empty()) {
      spec.first_year = all.front().year();
      spec.last_year = all.back().year();
    }
    spec.output_dir = out_dir;
    spec.audit_tolerance = s->tolerance;
    const auto written = bec::write_report(
        spec, {all, s->records ? &*s->records : nullptr, effective_policy(s, s->policy)});
    std::string text;
    for (const auto& p : written) text += p.string() + '\n';
    s->last_output = std::move(text);
    return BEC_OK;
  });
}

}  // extern "C"
