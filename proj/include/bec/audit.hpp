#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bec/accounting.hpp"
#include "bec/balance_sheet.hpp"

namespace bec {

enum class Severity { kInfo, kError };

struct AuditFinding {
  Severity severity;
  std::string text;
};

struct AuditCheck {
  std::string name;
  Mtce expected;
  Mtce actual;
  Tolerance tolerance;
  bool pass = false;
};

/// Building-sector heat that a re-added central-heating term counts twice.
struct HeatOverlap {
  SectorKind sector;
  EnergyQuantity amount;
};

struct AuditReport {
  int year = 0;
  std::vector<AuditCheck> checks;
  std::vector<AuditFinding> findings;
  std::vector<HeatOverlap> overlaps;

  /// Every check passes and no finding has error severity.
  bool overall_pass() const;
  EnergyQuantity overlap_total() const;
  /// Appends another report's checks, findings and overlaps.
  void absorb(const AuditReport& other);
};

inline constexpr Tolerance kDefaultAuditTolerance = Tolerance::from_cents(1);

/// Heat-column identities of one year:
///  1. thermal-power + heating-supply + recovery = total-transformation
///  2. total-transformation - loss = total final heat
///  3. sum of sector heat cells = total final heat
/// Throws MissingHeatData when any of those rows is absent.
AuditReport heat_balance_check(const BalanceSheet& sheet,
                               Tolerance tolerance = kDefaultAuditTolerance);

/// Flags a ledger whose policy added central heating on top of the heat
/// already in the building sectors' final consumption.
AuditReport double_count_detector(const BuildingEnergyLedger& ledger, const BalanceSheet& sheet);

/// `check,expected,actual,tolerance,pass`; check names carry a `<year>:` prefix.
void write_audit_csv(std::ostream& out, std::span<const AuditReport> reports);
std::string render_audit_text(std::span<const AuditReport> reports);

}  // namespace bec
