#include "bec/accounting.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "bec/error.hpp"

namespace bec {
namespace {

constexpr std::array kPublicSectors = {SectorKind::kWholesaleRetailHotelRestaurants,
                                       SectorKind::kOthers};
constexpr std::array kResidentialSectors = {SectorKind::kResidentialUrban,
                                            SectorKind::kResidentialRural};

template <std::size_t N>
EnergyQuantity fuel_sum(const BalanceSheet& sheet, const std::array<SectorKind, N>& sectors,
                        FuelKind fuel) {
  EnergyQuantity sum;
  for (SectorKind s : sectors) {
    if (auto v = sheet.cell(s, fuel)) sum += *v;
  }
  return sum;
}

template <std::size_t N>
EnergyQuantity commercial_sum(const BalanceSheet& sheet, const std::array<SectorKind, N>& sectors) {
  EnergyQuantity sum;
  for (SectorKind s : sectors) sum += sheet.commercial_total(s);
  return sum;
}

// A pool less fractional gasoline and diesel deductions, evaluated exactly in
// 1e-8 Mtce and rounded once.
struct DeductedPool {
  EnergyQuantity result;
  EnergyQuantity gasoline;
  EnergyQuantity diesel;
};

DeductedPool deduct(EnergyQuantity pool, Fraction g, EnergyQuantity gasoline, Fraction d,
                    EnergyQuantity diesel, std::string_view what) {
  const std::int64_t pool_scaled = scaled_product(Fraction::one(), pool.value());
  const std::int64_t g_scaled = scaled_product(g, gasoline.value());
  const std::int64_t d_scaled = scaled_product(d, diesel.value());
  const std::int64_t remaining = pool_scaled - g_scaled - d_scaled;
  if (remaining < 0) {
    throw Error(ErrorCode::kDeductionExceedsTotal,
                fmt::format("{} oil deductions exceed the pool of {}", what, pool.to_string()));
  }
  return {EnergyQuantity(round_scaled(remaining)), EnergyQuantity(round_scaled(g_scaled)),
          EnergyQuantity(round_scaled(d_scaled))};
}

struct Component {
  EnergyQuantity value;
  std::vector<Adjustment> adjustments;
};

EnergyQuantity heating_supply(const BalanceSheet& sheet) {
  auto v = sheet.transformation(TransformItem::kHeatingSupply, FuelKind::kHeat);
  if (!v) {
    throw Error(ErrorCode::kMissingHeatData,
                "central heating requested but the sheet has no heating-supply heat row")
        .in_year(sheet.year());
  }
  return EnergyQuantity(*v);
}

Component residential_component(const BalanceSheet& sheet, const AccountingPolicy& policy) {
  if (std::none_of(kResidentialSectors.begin(), kResidentialSectors.end(),
                   [&](SectorKind s) { return sheet.has_sector(s); })) {
    throw Error(ErrorCode::kMissingSector, "no residential cells (residential)").in_year(sheet.year());
  }
  const EnergyQuantity rc = commercial_sum(sheet, kResidentialSectors);
  const EnergyQuantity grc = fuel_sum(sheet, kResidentialSectors, FuelKind::kGasoline);
  const EnergyQuantity drc = fuel_sum(sheet, kResidentialSectors, FuelKind::kDiesel);
  DeductedPool pool;
  try {
    pool = deduct(rc, policy.residential_gasoline_deduction, grc,
                  policy.residential_diesel_deduction, drc, "residential");
  } catch (Error& e) {
    e.in_year(sheet.year());
    throw;
  }
  Component out{pool.result,
                {{std::string(kResidentialGasoline), pool.gasoline},
                 {std::string(kResidentialDiesel), pool.diesel}}};
  if (policy.add_central_heating) {
    const EnergyQuantity heating = heating_supply(sheet);
    out.value += heating;
    out.adjustments.push_back({std::string(kCentralHeatingAdded), heating});
  }
  return out;
}

Component public_component(const BalanceSheet& sheet, const AccountingPolicy& policy) {
  for (SectorKind s : kPublicSectors) {
    if (!sheet.has_sector(s)) {
      throw Error(ErrorCode::kMissingSector, fmt::format("no cells for sector {}", to_label(s)))
          .in_year(sheet.year());
    }
  }
  const EnergyQuantity total = commercial_sum(sheet, kPublicSectors);
  const EnergyQuantity gasoline = fuel_sum(sheet, kPublicSectors, FuelKind::kGasoline);
  const EnergyQuantity diesel = fuel_sum(sheet, kPublicSectors, FuelKind::kDiesel);
  DeductedPool pool;
  try {
    pool = deduct(total, policy.public_gasoline_deduction, gasoline, policy.public_diesel_deduction,
                  diesel, "public-sector");
  } catch (Error& e) {
    e.in_year(sheet.year());
    throw;
  }
  Component out{pool.result,
                {{std::string(kPublicGasoline), pool.gasoline},
                 {std::string(kPublicDiesel), pool.diesel}}};
  if (policy.include_transport_electricity) {
    auto elec = sheet.cell(SectorKind::kTransportStoragePost, FuelKind::kElectricity);
    if (!elec) {
      throw Error(ErrorCode::kMissingCell, "no transport-storage-post electricity cell")
          .in_year(sheet.year());
    }
    out.value += *elec;
    out.adjustments.push_back({std::string(kTransportElectricityAdded), *elec});
  }
  return out;
}

}  // namespace

EnergyQuantity BuildingEnergyLedger::adjustment(std::string_view label) const {
  for (const auto& a : adjustments) {
    if (a.label == label) return a.amount;
  }
  return {};
}

EnergyQuantity residential_energy(const BalanceSheet& sheet, const AccountingPolicy& policy) {
  return residential_component(sheet, policy).value;
}

EnergyQuantity public_energy(const BalanceSheet& sheet, const AccountingPolicy& policy) {
  return public_component(sheet, policy).value;
}

EnergyQuantity noncommercial_energy(const NonCommercialRecord& record) { return record.total(); }

BuildingEnergyLedger total_building_energy(const BalanceSheet& sheet,
                                           const NonCommercialRecord* record,
                                           const AccountingPolicy& policy) {
  BuildingEnergyLedger ledger;
  ledger.year = sheet.year();
  ledger.policy = policy;

  Component re = residential_component(sheet, policy);
  Component pe = public_component(sheet, policy);
  ledger.residential = re.value;
  ledger.public_sector = pe.value;
  ledger.adjustments = std::move(re.adjustments);
  // Keep the itemization in label order regardless of which term adds what.
  for (auto& a : pe.adjustments) ledger.adjustments.push_back(std::move(a));
  std::stable_sort(ledger.adjustments.begin(), ledger.adjustments.end(),
                   [](const Adjustment& a, const Adjustment& b) {
                     auto rank = [](std::string_view l) {
                       return std::find(kAdjustmentLabels.begin(), kAdjustmentLabels.end(), l) -
                              kAdjustmentLabels.begin();
                     };
                     return rank(a.label) < rank(b.label);
                   });

  if (policy.include_noncommercial) {
    if (record == nullptr) {
      throw Error(ErrorCode::kYearMismatch, "no non-commercial record for this year")
          .in_year(sheet.year());
    }
    if (record->year != sheet.year()) {
      throw Error(ErrorCode::kYearMismatch,
                  fmt::format("non-commercial record is for {}", record->year))
          .in_year(sheet.year());
    }
    ledger.noncommercial = noncommercial_energy(*record);
  }

  ledger.commercial_total = ledger.residential + ledger.public_sector;
  ledger.total = ledger.commercial_total + ledger.noncommercial;

  if (policy.add_central_heating) {
    ledger.warnings.push_back(fmt::format(
        "central heating {} Mtce added on top of final consumption, which already holds it",
        ledger.adjustment(kCentralHeatingAdded).to_string()));
  }
  return ledger;
}

YearSeries<BuildingEnergyLedger> ledger_series(std::span<const BalanceSheet> sheets,
                                               const YearSeries<NonCommercialRecord>& records,
                                               const AccountingPolicy& policy) {
  YearSeries<BuildingEnergyLedger> series;
  for (const auto& sheet : sheets) {
    const NonCommercialRecord* record = records.find(sheet.year());
    if (policy.include_noncommercial && record == nullptr) {
      throw Error(ErrorCode::kYearMismatch, "balance year has no non-commercial record")
          .in_year(sheet.year());
    }
    series.insert(sheet.year(), total_building_energy(sheet, record, policy));
  }
  return series;
}

EnergyQuantity final_energy(const BalanceSheet& sheet) {
  EnergyQuantity sum;
  if (!sheet.total_final().empty()) {
    for (const auto& [fuel, value] : sheet.total_final()) {
      if (is_commercial(fuel)) sum += value;
    }
    return sum;
  }
  for (const auto& [key, value] : sheet.cells()) {
    if (is_commercial(key.fuel)) sum += value;
  }
  return sum;
}

double share_of_final(const BuildingEnergyLedger& ledger, EnergyQuantity final,
                      bool include_noncommercial_in_denominator) {
  if (final.cents() <= 0) {
    throw Error(ErrorCode::kInvalidDenominator, "final energy must be positive").in_year(ledger.year);
  }
  if (include_noncommercial_in_denominator) {
    const EnergyQuantity denominator = final + ledger.noncommercial;
    return static_cast<double>(ledger.total.cents()) / static_cast<double>(denominator.cents());
  }
  return static_cast<double>(ledger.commercial_total.cents()) / static_cast<double>(final.cents());
}

CompositionShares composition_shares(const BuildingEnergyLedger& ledger) {
  if (ledger.total.cents() == 0) {
    throw Error(ErrorCode::kEmptyLedger, "building energy total is zero").in_year(ledger.year);
  }
  const auto total = static_cast<double>(ledger.total.cents());
  return {static_cast<double>(ledger.residential.cents()) / total,
          static_cast<double>(ledger.public_sector.cents()) / total,
          static_cast<double>(ledger.noncommercial.cents()) / total};
}

}  // namespace bec
