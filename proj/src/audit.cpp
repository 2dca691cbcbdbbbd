#include "bec/audit.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <ostream>

#include "bec/error.hpp"
#include "csv.hpp"

namespace bec {
namespace {

AuditCheck make_check(std::string name, Mtce expected, Mtce actual, Tolerance tolerance) {
  const bool pass = tolerance.admits(actual - expected);
  return {std::move(name), expected, actual, tolerance, pass};
}

Mtce require_row(const BalanceSheet& sheet, TransformItem item) {
  auto v = sheet.transformation(item, FuelKind::kHeat);
  if (!v) {
    throw Error(ErrorCode::kMissingHeatData,
                fmt::format("no heat row for transformation item '{}'", to_label(item)))
        .in_year(sheet.year());
  }
  return *v;
}

}  // namespace

bool AuditReport::overall_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck& c) { return c.pass; }) &&
         std::none_of(findings.begin(), findings.end(),
                      [](const AuditFinding& f) { return f.severity == Severity::kError; });
}

EnergyQuantity AuditReport::overlap_total() const {
  EnergyQuantity sum;
  for (const auto& o : overlaps) sum += o.amount;
  return sum;
}

void AuditReport::absorb(const AuditReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  overlaps.insert(overlaps.end(), other.overlaps.begin(), other.overlaps.end());
}

AuditReport heat_balance_check(const BalanceSheet& sheet, Tolerance tolerance) {
  const Mtce thermal = require_row(sheet, TransformItem::kThermalPower);
  const Mtce heating = require_row(sheet, TransformItem::kHeatingSupply);
  const Mtce recovery = require_row(sheet, TransformItem::kRecovery);
  const Mtce total_xform = require_row(sheet, TransformItem::kTotalTransformation);
  const Mtce loss = require_row(sheet, TransformItem::kLoss);
  auto final_heat = sheet.total_final(FuelKind::kHeat);
  if (!final_heat) {
    throw Error(ErrorCode::kMissingHeatData, "no total-final heat row").in_year(sheet.year());
  }

  AuditReport report;
  report.year = sheet.year();
  report.checks.push_back(
      make_check("heat-transformation-sum", total_xform, thermal + heating + recovery, tolerance));
  report.checks.push_back(
      make_check("heat-final-after-loss", final_heat->value(), total_xform - loss, tolerance));

  Mtce sector_sum;
  SectorKind top = SectorKind::kIndustry;
  EnergyQuantity top_value;
  for (const auto& [key, value] : sheet.cells()) {
    if (key.fuel != FuelKind::kHeat) continue;
    sector_sum += value.value();
    if (value > top_value) {
      top_value = value;
      top = key.sector;
    }
  }
  report.checks.push_back(
      make_check("heat-sector-sum", final_heat->value(), sector_sum, tolerance));

  if (final_heat->cents() > 0 && top_value.cents() > 0) {
    const double pct = 100.0 * top_value.to_double() / final_heat->to_double();
    report.findings.push_back(
        {Severity::kInfo, fmt::format("{} takes the most final heat: {} of {} Mtce ({:.1f}%)",
                                      to_label(top), top_value.to_string(),
                                      final_heat->to_string(), pct)});
  }
  return report;
}

AuditReport double_count_detector(const BuildingEnergyLedger& ledger, const BalanceSheet& sheet) {
  AuditReport report;
  report.year = ledger.year;
  const EnergyQuantity added = ledger.policy.add_central_heating
                                   ? ledger.adjustment(kCentralHeatingAdded)
                                   : EnergyQuantity{};
  report.checks.push_back(
      make_check("central-heating-added", Mtce{}, added.value(), Tolerance{}));
  if (!ledger.policy.add_central_heating) return report;

  // Building-sector heat already counted inside the sector totals. Transport
  // rows only ever contribute electricity, so their heat is not an overlap.
  for (SectorKind s : {SectorKind::kResidentialUrban, SectorKind::kResidentialRural,
                       SectorKind::kWholesaleRetailHotelRestaurants, SectorKind::kOthers}) {
    if (auto heat = sheet.cell(s, FuelKind::kHeat); heat && heat->cents() > 0) {
      report.overlaps.push_back({s, *heat});
    }
  }

  std::string detail;
  for (const auto& o : report.overlaps) {
    if (!detail.empty()) detail += ", ";
    detail += fmt::format("{} {}", to_label(o.sector), o.amount.to_string());
  }
  report.findings.push_back(
      {Severity::kError,
       fmt::format("central heating double count: policy '{}' adds heating supply {} Mtce while "
                   "building-sector final consumption already holds {} Mtce of heat{}",
                   ledger.policy.name, added.to_string(), report.overlap_total().to_string(),
                   detail.empty() ? std::string() : " (" + detail + ")")});
  return report;
}

void write_audit_csv(std::ostream& out, std::span<const AuditReport> reports) {
  out << "check,expected,actual,tolerance,pass\n";
  for (const auto& report : reports) {
    for (const auto& c : report.checks) {
      out << csv::escape(fmt::format("{}:{}", report.year, c.name)) << ',' << c.expected.to_string()
          << ',' << c.actual.to_string() << ',' << c.tolerance.to_string() << ','
          << (c.pass ? "true" : "false") << '\n';
    }
  }
}

std::string render_audit_text(std::span<const AuditReport> reports) {
  std::string out;
  for (const auto& report : reports) {
    out += fmt::format("Audit {}: {}\n", report.year, report.overall_pass() ? "PASS" : "FAIL");
    for (const auto& c : report.checks) {
      out += fmt::format("  [{}] {:<26} expected {:>10} actual {:>10} tol {}\n",
                         c.pass ? "ok" : "!!", c.name, c.expected.to_string(),
                         c.actual.to_string(), c.tolerance.to_string());
    }
    for (const auto& f : report.findings) {
      out += fmt::format("  {} {}\n", f.severity == Severity::kError ? "ERROR" : "note ", f.text);
    }
  }
  return out;
}

}  // namespace bec
