#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace bec {

enum class FuelKind {
  kCoalFamily,
  kGasoline,
  kDiesel,
  kOtherPetroleum,
  kNaturalGas,
  kHeat,
  kElectricity,
  kFuelwoodStraw,
  kMethane,
  kOther,
};

inline constexpr std::array<FuelKind, 10> kAllFuels = {
    FuelKind::kCoalFamily,  FuelKind::kGasoline,      FuelKind::kDiesel,
    FuelKind::kOtherPetroleum, FuelKind::kNaturalGas, FuelKind::kHeat,
    FuelKind::kElectricity, FuelKind::kFuelwoodStraw, FuelKind::kMethane,
    FuelKind::kOther,
};

/// Self-produced rural fuels never traded on the market.
constexpr bool is_noncommercial(FuelKind fuel) {
  return fuel == FuelKind::kFuelwoodStraw || fuel == FuelKind::kMethane;
}
constexpr bool is_commercial(FuelKind fuel) { return !is_noncommercial(fuel); }

enum class SectorKind {
  kAgriculture,
  kIndustry,
  kConstruction,
  kTransportStoragePost,
  kWholesaleRetailHotelRestaurants,
  kOthers,
  kResidentialUrban,
  kResidentialRural,
};

inline constexpr std::array<SectorKind, 8> kAllSectors = {
    SectorKind::kAgriculture,
    SectorKind::kIndustry,
    SectorKind::kConstruction,
    SectorKind::kTransportStoragePost,
    SectorKind::kWholesaleRetailHotelRestaurants,
    SectorKind::kOthers,
    SectorKind::kResidentialUrban,
    SectorKind::kResidentialRural,
};

constexpr bool is_residential(SectorKind s) {
  return s == SectorKind::kResidentialUrban || s == SectorKind::kResidentialRural;
}

/// Sectors whose rows hold civil-building energy.
constexpr bool is_building_relevant(SectorKind s) {
  return s == SectorKind::kTransportStoragePost ||
         s == SectorKind::kWholesaleRetailHotelRestaurants || s == SectorKind::kOthers ||
         is_residential(s);
}

enum class TransformItem {
  kThermalPower,
  kHeatingSupply,
  kRecovery,
  kLoss,
  kTotalTransformation,
};

inline constexpr std::array<TransformItem, 5> kAllTransformItems = {
    TransformItem::kThermalPower, TransformItem::kHeatingSupply, TransformItem::kRecovery,
    TransformItem::kLoss,         TransformItem::kTotalTransformation,
};

// Canonical labels, as written by the CSV serializer.
std::string_view to_label(FuelKind fuel);
std::string_view to_label(SectorKind sector);
std::string_view to_label(TransformItem item);

// Label lookup through the alias table. Matching ignores case and collapses
// runs of whitespace; unrecognised labels return nullopt.
std::optional<FuelKind> parse_fuel(std::string_view label);
std::optional<SectorKind> parse_sector(std::string_view label);
std::optional<TransformItem> parse_transform_item(std::string_view label);

}  // namespace bec
