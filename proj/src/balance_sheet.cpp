#include "bec/balance_sheet.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>
#include <utility>

#include "bec/error.hpp"

namespace bec {

BalanceSheet::BalanceSheet(int year, const std::vector<Cell>& cells,
                           std::vector<TransformationEntry> transformation,
                           const std::vector<FuelTotal>& total_final, Mtce tolerance)
    : year_(year), transformation_(std::move(transformation)) {
  for (const auto& cell : cells) {
    if (!cells_.emplace(cell.key, cell.value).second) {
      throw Error(ErrorCode::kDuplicateCell,
                  fmt::format("duplicate cell ({}, {})", to_label(cell.key.sector),
                              to_label(cell.key.fuel)))
          .in_year(year);
    }
  }

  auto order = [](const TransformationEntry& a, const TransformationEntry& b) {
    return std::pair(a.item, a.fuel) < std::pair(b.item, b.fuel);
  };
  std::sort(transformation_.begin(), transformation_.end(), order);
  auto dup = std::adjacent_find(transformation_.begin(), transformation_.end(),
                                [](const auto& a, const auto& b) {
                                  return a.item == b.item && a.fuel == b.fuel;
                                });
  if (dup != transformation_.end()) {
    throw Error(ErrorCode::kDuplicateCell,
                fmt::format("duplicate transformation row ({}, {})", to_label(dup->item),
                            to_label(dup->fuel)))
        .in_year(year);
  }

  for (const auto& total : total_final) {
    if (!total_final_.emplace(total.fuel, total.value).second) {
      throw Error(ErrorCode::kDuplicateCell,
                  fmt::format("duplicate total-final row for {}", to_label(total.fuel)))
          .in_year(year);
    }
  }

  for (const auto& [fuel, expected] : total_final_) {
    Mtce sum;
    for (const auto& [key, value] : cells_) {
      if (key.fuel == fuel) sum += value.value();
    }
    if ((sum - expected.value()).abs() > tolerance) {
      throw Error(ErrorCode::kReconciliationError,
                  fmt::format("{} sector cells sum to {} but total-final is {}", to_label(fuel),
                              sum.to_string(), expected.to_string()))
          .in_year(year);
    }
  }
}

std::optional<EnergyQuantity> BalanceSheet::cell(SectorKind sector, FuelKind fuel) const {
  auto it = cells_.find(CellKey{sector, fuel});
  if (it == cells_.end()) return std::nullopt;
  return it->second;
}

bool BalanceSheet::has_sector(SectorKind sector) const {
  auto it = cells_.lower_bound(CellKey{sector, kAllFuels.front()});
  return it != cells_.end() && it->first.sector == sector;
}

EnergyQuantity BalanceSheet::commercial_total(SectorKind sector) const {
  EnergyQuantity sum;
  for (const auto& [key, value] : cells_) {
    if (key.sector == sector && is_commercial(key.fuel)) sum += value;
  }
  return sum;
}

std::optional<Mtce> BalanceSheet::transformation(TransformItem item, FuelKind fuel) const {
  for (const auto& entry : transformation_) {
    if (entry.item == item && entry.fuel == fuel) return entry.value;
  }
  return std::nullopt;
}

std::optional<EnergyQuantity> BalanceSheet::total_final(FuelKind fuel) const {
  auto it = total_final_.find(fuel);
  if (it == total_final_.end()) return std::nullopt;
  return it->second;
}

}  // namespace bec
