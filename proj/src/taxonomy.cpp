#include "bec/taxonomy.hpp"

#include <cctype>
#include <string>
#include <unordered_map>

namespace bec {
namespace {

std::string fold(std::string_view label) {
  std::string out;
  bool pending_space = false;
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  return out;
}

template <typename Enum>
using AliasMap = std::unordered_map<std::string, Enum>;

const AliasMap<FuelKind>& fuel_aliases() {
  static const AliasMap<FuelKind> map = [] {
    AliasMap<FuelKind> m;
    for (FuelKind f : kAllFuels) m.emplace(std::string(to_label(f)), f);
    m.emplace("coal", FuelKind::kCoalFamily);
    m.emplace("coal family", FuelKind::kCoalFamily);
    m.emplace("diesel oil", FuelKind::kDiesel);
    m.emplace("other petroleum", FuelKind::kOtherPetroleum);
    m.emplace("other petroleum products", FuelKind::kOtherPetroleum);
    m.emplace("natural gas", FuelKind::kNaturalGas);
    m.emplace("electric power", FuelKind::kElectricity);
    m.emplace("fuel wood and straw", FuelKind::kFuelwoodStraw);
    m.emplace("fuelwood and straw", FuelKind::kFuelwoodStraw);
    m.emplace("biogas", FuelKind::kMethane);
    m.emplace("other energy", FuelKind::kOther);
    return m;
  }();
  return map;
}

const AliasMap<SectorKind>& sector_aliases() {
  static const AliasMap<SectorKind> map = [] {
    AliasMap<SectorKind> m;
    for (SectorKind s : kAllSectors) m.emplace(std::string(to_label(s)), s);
    m.emplace("agriculture, forestry, animal husbandry, fishery and water conservancy",
              SectorKind::kAgriculture);
    m.emplace("transport, storage and post", SectorKind::kTransportStoragePost);
    m.emplace("wholesale-retail-hotel-restaurants", SectorKind::kWholesaleRetailHotelRestaurants);
    m.emplace("wholesale, retail trade and hotel, restaurants",
              SectorKind::kWholesaleRetailHotelRestaurants);
    m.emplace("wholesale, retail trade, hotel, restaurants",
              SectorKind::kWholesaleRetailHotelRestaurants);
    m.emplace("urban residential", SectorKind::kResidentialUrban);
    m.emplace("urban residential consumption", SectorKind::kResidentialUrban);
    m.emplace("rural residential", SectorKind::kResidentialRural);
    m.emplace("rural residential consumption", SectorKind::kResidentialRural);
    return m;
  }();
  return map;
}

const AliasMap<TransformItem>& transform_aliases() {
  static const AliasMap<TransformItem> map = [] {
    AliasMap<TransformItem> m;
    for (TransformItem t : kAllTransformItems) m.emplace(std::string(to_label(t)), t);
    m.emplace("thermal power", TransformItem::kThermalPower);
    m.emplace("heating supply", TransformItem::kHeatingSupply);
    m.emplace("recovery of energy", TransformItem::kRecovery);
    return m;
  }();
  return map;
}

template <typename Enum>
std::optional<Enum> lookup(const AliasMap<Enum>& map, std::string_view label) {
  auto it = map.find(fold(label));
  if (it == map.end()) return std::nullopt;
  return it->second;
}

}  // namespace

std::string_view to_label(FuelKind fuel) {
  switch (fuel) {
    case FuelKind::kCoalFamily: return "coal-family";
    case FuelKind::kGasoline: return "gasoline";
    case FuelKind::kDiesel: return "diesel";
    case FuelKind::kOtherPetroleum: return "other-petroleum";
    case FuelKind::kNaturalGas: return "natural-gas";
    case FuelKind::kHeat: return "heat";
    case FuelKind::kElectricity: return "electricity";
    case FuelKind::kFuelwoodStraw: return "fuelwood-straw";
    case FuelKind::kMethane: return "methane";
    case FuelKind::kOther: return "other";
  }
  return "?";
}

std::string_view to_label(SectorKind sector) {
  switch (sector) {
    case SectorKind::kAgriculture: return "agriculture";
    case SectorKind::kIndustry: return "industry";
    case SectorKind::kConstruction: return "construction";
    case SectorKind::kTransportStoragePost: return "transport-storage-post";
    case SectorKind::kWholesaleRetailHotelRestaurants: return "wrhr";
    case SectorKind::kOthers: return "others";
    case SectorKind::kResidentialUrban: return "residential-urban";
    case SectorKind::kResidentialRural: return "residential-rural";
  }
  return "?";
}

std::string_view to_label(TransformItem item) {
  switch (item) {
    case TransformItem::kThermalPower: return "thermal-power";
    case TransformItem::kHeatingSupply: return "heating-supply";
    case TransformItem::kRecovery: return "recovery";
    case TransformItem::kLoss: return "loss";
    case TransformItem::kTotalTransformation: return "total-transformation";
  }
  return "?";
}

std::optional<FuelKind> parse_fuel(std::string_view label) {
  return lookup(fuel_aliases(), label);
}

std::optional<SectorKind> parse_sector(std::string_view label) {
  return lookup(sector_aliases(), label);
}

std::optional<TransformItem> parse_transform_item(std::string_view label) {
  return lookup(transform_aliases(), label);
}

}  // namespace bec
