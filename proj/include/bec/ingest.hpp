#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bec/balance_sheet.hpp"
#include "bec/quantity.hpp"
#include "bec/year_series.hpp"

namespace bec {

/// Unit label -> multiplier to Mtce. Labels are case-sensitive ("Mtce" and
/// "mtce" are different units).
class ConversionTable {
 public:
  /// Mtce = 1, ktce = 0.001, tce = 0.000001.
  static ConversionTable defaults();

  /// Reads `unit,factor_to_mtce` rows on top of the defaults.
  static ConversionTable from_csv(std::istream& in);
  static ConversionTable from_file(const std::filesystem::path& path);

  /// Factors must be positive; "Mtce" can only ever map to 1.
  void set(const std::string& unit, Decimal factor);
  const Decimal& factor(const std::string& unit) const;
  bool contains(const std::string& unit) const { return factors_.count(unit) != 0; }

 private:
  std::map<std::string, Decimal> factors_;
};

struct RawCell {
  int year = 0;
  std::string sector;
  std::string fuel;
  Decimal quantity;
  std::string unit;
};

/// quantity x factor rounded to cents, half away from zero. Signed; callers
/// wrap consumption values in EnergyQuantity.
Mtce normalize(const RawCell& raw, const ConversionTable& table);

struct ParseOptions {
  Mtce reconcile_tolerance = kDefaultReconcileTolerance;
};

/// Parses the `year,sector,fuel,quantity,unit` format. Sector values
/// `xform:<item>` and `total-final` mark transformation and total rows.
/// Returns one sheet per distinct year, ascending.
std::vector<BalanceSheet> parse_balance_csv(std::istream& in,
                                            const ConversionTable& table = ConversionTable::defaults(),
                                            const ParseOptions& options = {});
std::vector<BalanceSheet> parse_balance_file(const std::filesystem::path& path,
                                             const ConversionTable& table = ConversionTable::defaults(),
                                             const ParseOptions& options = {});

/// Canonical serialization: header, then each sheet's cells, total-final and
/// transformation rows in key order, unit Mtce, two decimals.
void write_balance_csv(std::ostream& out, std::span<const BalanceSheet> sheets);

/// Parses `year,fuelwood_straw_mtce,methane_mtce`.
YearSeries<NonCommercialRecord> parse_noncommercial_csv(std::istream& in);
YearSeries<NonCommercialRecord> parse_noncommercial_file(const std::filesystem::path& path);

}  // namespace bec
