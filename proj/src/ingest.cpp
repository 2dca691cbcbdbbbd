#include "bec/ingest.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <tuple>

#include "bec/error.hpp"
#include "csv.hpp"

namespace bec {
namespace {

constexpr std::string_view kTotalFinal = "total-final";
constexpr std::string_view kTransformPrefix = "xform:";

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, fmt::format("cannot open '{}'", path.string()));
  }
  return in;
}

int parse_year(const csv::Record& rec, std::size_t column) {
  const std::string& text = rec.fields[column];
  int year = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), year);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParseError, fmt::format("malformed year '{}'", text))
        .at_line(rec.line, static_cast<int>(column) + 1);
  }
  return year;
}

Decimal parse_number(const csv::Record& rec, std::size_t column) {
  try {
    return Decimal::parse(rec.fields[column]);
  } catch (Error& e) {
    e.at_line(rec.line, static_cast<int>(column) + 1);
    throw;
  }
}

void expect_width(const csv::Record& rec, std::size_t width) {
  if (rec.fields.size() != width) {
    throw Error(ErrorCode::kParseError,
                fmt::format("expected {} fields, found {}", width, rec.fields.size()))
        .at_line(rec.line);
  }
}

struct YearRows {
  std::vector<BalanceSheet::Cell> cells;
  std::vector<TransformationEntry> transformation;
  std::vector<BalanceSheet::FuelTotal> totals;
};

enum class RowKind { kCell, kTransform, kTotal };

}  // namespace

ConversionTable ConversionTable::defaults() {
  ConversionTable table;
  table.factors_["Mtce"] = Decimal{1, 0};
  table.factors_["ktce"] = Decimal{1, 3};
  table.factors_["tce"] = Decimal{1, 6};
  return table;
}

ConversionTable ConversionTable::from_csv(std::istream& in) {
  ConversionTable table = defaults();
  csv::Reader reader(in);
  csv::Record rec;
  if (!reader.next(rec)) return table;
  csv::expect_header(rec, {"unit", "factor_to_mtce"});
  std::set<std::string> seen;
  while (reader.next(rec)) {
    expect_width(rec, 2);
    if (!seen.insert(rec.fields[0]).second) {
      throw Error(ErrorCode::kParseError, fmt::format("unit '{}' listed twice", rec.fields[0]))
          .at_line(rec.line);
    }
    try {
      table.set(rec.fields[0], parse_number(rec, 1));
    } catch (Error& e) {
      if (!e.line()) e.at_line(rec.line, 2);
      throw;
    }
  }
  return table;
}

ConversionTable ConversionTable::from_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return from_csv(in);
}

void ConversionTable::set(const std::string& unit, Decimal factor) {
  if (unit.empty()) throw Error(ErrorCode::kParseError, "empty unit label");
  if (factor.mantissa <= 0) {
    throw Error(ErrorCode::kParseError,
                fmt::format("factor for '{}' must be positive, got {}", unit, factor.to_string()));
  }
  if (unit == "Mtce" && Mtce::from_decimal(factor) != Mtce::from_cents(100)) {
    throw Error(ErrorCode::kParseError, "the factor for Mtce must be exactly 1");
  }
  factors_[unit] = factor;
}

const Decimal& ConversionTable::factor(const std::string& unit) const {
  auto it = factors_.find(unit);
  if (it == factors_.end()) {
    throw Error(ErrorCode::kUnknownUnit, fmt::format("unknown unit '{}'", unit));
  }
  return it->second;
}

Mtce normalize(const RawCell& raw, const ConversionTable& table) {
  const Decimal& factor = table.factor(raw.unit);
  const __int128 product = static_cast<__int128>(raw.quantity.mantissa) * factor.mantissa;
  const int scale = raw.quantity.scale + factor.scale;

  __int128 cents = product;
  if (scale <= 2) {
    for (int i = scale; i < 2; ++i) cents *= 10;
  } else {
    __int128 divisor = 1;
    for (int i = 2; i < scale; ++i) divisor *= 10;
    cents = product / divisor;
    __int128 remainder = product % divisor;
    if (remainder < 0) remainder = -remainder;
    if (2 * remainder >= divisor) cents += product < 0 ? -1 : 1;
  }
  if (cents > std::numeric_limits<std::int64_t>::max() ||
      cents < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kArithmeticError, "converted quantity out of range");
  }
  return Mtce::from_cents(static_cast<std::int64_t>(cents));
}

std::vector<BalanceSheet> parse_balance_csv(std::istream& in, const ConversionTable& table,
                                            const ParseOptions& options) {
  csv::Reader reader(in);
  csv::Record rec;
  if (!reader.next(rec)) return {};
  csv::expect_header(rec, {"year", "sector", "fuel", "quantity", "unit"});

  std::map<int, YearRows> years;
  std::set<std::tuple<int, RowKind, int, FuelKind>> seen;

  while (reader.next(rec)) {
    expect_width(rec, 5);
    const int year = parse_year(rec, 0);
    const std::string& sector_label = rec.fields[1];

    RowKind kind = RowKind::kCell;
    int key = 0;
    if (sector_label == kTotalFinal) {
      kind = RowKind::kTotal;
    } else if (sector_label.rfind(kTransformPrefix, 0) == 0) {
      auto item = parse_transform_item(std::string_view(sector_label).substr(kTransformPrefix.size()));
      if (!item) {
        throw Error(ErrorCode::kUnknownSector,
                    fmt::format("unknown transformation item '{}'", sector_label))
            .at_line(rec.line, 2);
      }
      kind = RowKind::kTransform;
      key = static_cast<int>(*item);
    } else {
      auto sector = parse_sector(sector_label);
      if (!sector) {
        throw Error(ErrorCode::kUnknownSector, fmt::format("unknown sector '{}'", sector_label))
            .at_line(rec.line, 2);
      }
      key = static_cast<int>(*sector);
    }

    auto fuel = parse_fuel(rec.fields[2]);
    if (!fuel) {
      throw Error(ErrorCode::kUnknownFuel, fmt::format("unknown fuel '{}'", rec.fields[2]))
          .at_line(rec.line, 3);
    }

    RawCell raw{year, sector_label, rec.fields[2], parse_number(rec, 3), rec.fields[4]};
    Mtce value;
    try {
      value = normalize(raw, table);
    } catch (Error& e) {
      e.at_line(rec.line, e.code() == ErrorCode::kUnknownUnit ? 5 : 4);
      throw;
    }

    if (!seen.emplace(year, kind, key, *fuel).second) {
      throw Error(ErrorCode::kDuplicateCell,
                  fmt::format("duplicate row ({}, {})", sector_label, rec.fields[2]))
          .in_year(year)
          .at_line(rec.line);
    }

    YearRows& rows = years[year];
    try {
      switch (kind) {
        case RowKind::kCell:
          rows.cells.push_back({CellKey{static_cast<SectorKind>(key), *fuel}, EnergyQuantity(value)});
          break;
        case RowKind::kTotal:
          rows.totals.push_back({*fuel, EnergyQuantity(value)});
          break;
        case RowKind::kTransform:
          rows.transformation.push_back({static_cast<TransformItem>(key), *fuel, value});
          break;
      }
    } catch (Error& e) {
      e.at_line(rec.line, 4);
      throw;
    }
  }

  std::vector<BalanceSheet> sheets;
  sheets.reserve(years.size());
  for (auto& [year, rows] : years) {
    sheets.emplace_back(year, rows.cells, std::move(rows.transformation), rows.totals,
                        options.reconcile_tolerance);
  }
  return sheets;
}

std::vector<BalanceSheet> parse_balance_file(const std::filesystem::path& path,
                                             const ConversionTable& table,
                                             const ParseOptions& options) {
  auto in = open_input(path);
  return parse_balance_csv(in, table, options);
}

void write_balance_csv(std::ostream& out, std::span<const BalanceSheet> sheets) {
  out << "year,sector,fuel,quantity,unit\n";
  for (const auto& sheet : sheets) {
    for (const auto& [key, value] : sheet.cells()) {
      out << sheet.year() << ',' << to_label(key.sector) << ',' << to_label(key.fuel) << ','
          << value.to_string() << ",Mtce\n";
    }
    for (const auto& [fuel, value] : sheet.total_final()) {
      out << sheet.year() << ',' << kTotalFinal << ',' << to_label(fuel) << ','
          << value.to_string() << ",Mtce\n";
    }
    for (const auto& entry : sheet.transformation()) {
      out << sheet.year() << ',' << kTransformPrefix << to_label(entry.item) << ','
          << to_label(entry.fuel) << ',' << entry.value.to_string() << ",Mtce\n";
    }
  }
}

YearSeries<NonCommercialRecord> parse_noncommercial_csv(std::istream& in) {
  YearSeries<NonCommercialRecord> series;
  csv::Reader reader(in);
  csv::Record rec;
  if (!reader.next(rec)) return series;
  csv::expect_header(rec, {"year", "fuelwood_straw_mtce", "methane_mtce"});
  while (reader.next(rec)) {
    expect_width(rec, 3);
    NonCommercialRecord record;
    record.year = parse_year(rec, 0);
    for (std::size_t column : {std::size_t{1}, std::size_t{2}}) {
      try {
        EnergyQuantity q(Mtce::from_decimal(parse_number(rec, column)));
        (column == 1 ? record.fuelwood_straw : record.methane) = q;
      } catch (Error& e) {
        if (!e.line()) e.at_line(rec.line, static_cast<int>(column) + 1);
        throw;
      }
    }
    try {
      series.insert(record.year, record);
    } catch (Error& e) {
      e.at_line(rec.line);
      throw;
    }
  }
  return series;
}

YearSeries<NonCommercialRecord> parse_noncommercial_file(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_noncommercial_csv(in);
}

}  // namespace bec
