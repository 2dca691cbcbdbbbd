#pragma once

#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "bec/quantity.hpp"
#include "bec/taxonomy.hpp"

namespace bec {

struct CellKey {
  SectorKind sector;
  FuelKind fuel;
  friend constexpr auto operator<=>(const CellKey&, const CellKey&) = default;
};

/// One row of the transformation block. Inputs are negative, outputs positive;
/// the loss row carries the loss magnitude.
struct TransformationEntry {
  TransformItem item;
  FuelKind fuel;
  Mtce value;
  friend bool operator==(const TransformationEntry&, const TransformationEntry&) = default;
};

inline constexpr Mtce kDefaultReconcileTolerance = Mtce::from_cents(1);

/// One year of the energy balance: sector x fuel final consumption plus the
/// transformation rows and total-final consumption per fuel. Immutable.
class BalanceSheet {
 public:
  struct Cell {
    CellKey key;
    EnergyQuantity value;
  };
  struct FuelTotal {
    FuelKind fuel;
    EnergyQuantity value;
  };

  /// Validates key uniqueness (DuplicateCell) and, for every fuel with a
  /// total-final entry, that the sector cells sum to it within `tolerance`
  /// (ReconciliationError).
  BalanceSheet(int year, const std::vector<Cell>& cells,
               std::vector<TransformationEntry> transformation = {},
               const std::vector<FuelTotal>& total_final = {},
               Mtce tolerance = kDefaultReconcileTolerance);

  int year() const { return year_; }

  const std::map<CellKey, EnergyQuantity>& cells() const { return cells_; }
  std::optional<EnergyQuantity> cell(SectorKind sector, FuelKind fuel) const;
  bool has_sector(SectorKind sector) const;
  /// Sum over the sector's commercial-fuel cells.
  EnergyQuantity commercial_total(SectorKind sector) const;

  const std::vector<TransformationEntry>& transformation() const { return transformation_; }
  std::optional<Mtce> transformation(TransformItem item, FuelKind fuel) const;

  const std::map<FuelKind, EnergyQuantity>& total_final() const { return total_final_; }
  std::optional<EnergyQuantity> total_final(FuelKind fuel) const;

  friend bool operator==(const BalanceSheet&, const BalanceSheet&) = default;

 private:
  int year_;
  std::map<CellKey, EnergyQuantity> cells_;
  std::vector<TransformationEntry> transformation_;
  std::map<FuelKind, EnergyQuantity> total_final_;
};

struct NonCommercialRecord {
  int year = 0;
  EnergyQuantity fuelwood_straw;
  EnergyQuantity methane;

  EnergyQuantity total() const { return fuelwood_straw + methane; }
};

}  // namespace bec
