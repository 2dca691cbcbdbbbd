#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bec/balance_sheet.hpp"
#include "bec/policy.hpp"
#include "bec/year_series.hpp"

namespace bec {

// Labels of itemized ledger adjustments.
inline constexpr std::string_view kResidentialGasoline = "residential-gasoline";
inline constexpr std::string_view kResidentialDiesel = "residential-diesel";
inline constexpr std::string_view kPublicGasoline = "public-gasoline";
inline constexpr std::string_view kPublicDiesel = "public-diesel";
inline constexpr std::string_view kTransportElectricityAdded = "transport-electricity-added";
inline constexpr std::string_view kCentralHeatingAdded = "central-heating-added";

inline constexpr std::array<std::string_view, 6> kAdjustmentLabels = {
    kResidentialGasoline, kResidentialDiesel,         kPublicGasoline,
    kPublicDiesel,        kTransportElectricityAdded, kCentralHeatingAdded,
};

/// One itemized adjustment: a deduction removed from a pool, or (for the
/// `*-added` labels) an amount added on top.
struct Adjustment {
  std::string label;
  EnergyQuantity amount;
};

struct BuildingEnergyLedger {
  int year = 0;
  EnergyQuantity residential;     // RE
  EnergyQuantity public_sector;   // PE
  EnergyQuantity noncommercial;   // NCE, zero when the policy excludes it
  EnergyQuantity commercial_total;  // RE + PE
  EnergyQuantity total;           // NBE
  std::vector<Adjustment> adjustments;
  AccountingPolicy policy;
  std::vector<std::string> warnings;

  /// Amount recorded under `label`, zero if absent.
  EnergyQuantity adjustment(std::string_view label) const;
};

/// RE = RC - g*GRC - d*DRC over the residential rows, commercial fuels only;
/// plus the heating-supply output when the policy re-adds central heating.
EnergyQuantity residential_energy(const BalanceSheet& sheet, const AccountingPolicy& policy);

/// WRHR + Others totals less the policy share of their gasoline and diesel;
/// transport-storage-post electricity added when the policy says so.
EnergyQuantity public_energy(const BalanceSheet& sheet, const AccountingPolicy& policy);

EnergyQuantity noncommercial_energy(const NonCommercialRecord& record);

/// NBE = RE + PE + NCE. `record` may be null only when the policy excludes
/// non-commercial energy.
BuildingEnergyLedger total_building_energy(const BalanceSheet& sheet,
                                           const NonCommercialRecord* record,
                                           const AccountingPolicy& policy);

/// One ledger per sheet, ascending by year. A sheet year without a
/// non-commercial record raises YearMismatch when the policy needs one.
YearSeries<BuildingEnergyLedger> ledger_series(std::span<const BalanceSheet> sheets,
                                               const YearSeries<NonCommercialRecord>& records,
                                               const AccountingPolicy& policy);

/// Commercial final energy of the year: the sum of total-final rows, or of
/// every commercial consumption cell when the sheet has no totals.
EnergyQuantity final_energy(const BalanceSheet& sheet);

/// commercialNBE / final, or NBE / (final + NCE) when the denominator
/// includes non-commercial energy. Throws InvalidDenominator if final <= 0.
double share_of_final(const BuildingEnergyLedger& ledger, EnergyQuantity final_energy,
                      bool include_noncommercial_in_denominator);

struct CompositionShares {
  double residential = 0;
  double public_sector = 0;
  double noncommercial = 0;
};

/// RE/NBE, PE/NBE, NCE/NBE. Throws EmptyLedger when NBE is zero.
CompositionShares composition_shares(const BuildingEnergyLedger& ledger);

}  // namespace bec
