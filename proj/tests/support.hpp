#pragma once

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bec/ingest.hpp"

namespace bec::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(BEC_TEST_DATA_DIR) / name;
}

inline std::vector<BalanceSheet> national_sheets() {
  return parse_balance_file(data_path("national_balance.csv"));
}

inline YearSeries<NonCommercialRecord> national_records() {
  return parse_noncommercial_file(data_path("national_noncommercial.csv"));
}

inline BalanceSheet heat_2013_sheet() {
  return parse_balance_file(data_path("heat_2013.csv")).front();
}

inline const BalanceSheet& sheet_for(const std::vector<BalanceSheet>& sheets, int year) {
  for (const auto& s : sheets) {
    if (s.year() == year) return s;
  }
  throw std::runtime_error("no sheet for year " + std::to_string(year));
}

/// Parses balance CSV rows written after an implicit header.
inline std::vector<BalanceSheet> sheets_from_rows(const std::string& rows) {
  std::istringstream in("year,sector,fuel,quantity,unit\n" + rows);
  return parse_balance_csv(in);
}

inline BalanceSheet sheet_from_rows(const std::string& rows) { return sheets_from_rows(rows).at(0); }

inline EnergyQuantity q(const char* text) { return EnergyQuantity::parse(text); }

// Values as they appear in the published tables, keyed by year.
struct PublicRow {
  int year;
  const char* wrhr;
  const char* others;
  const char* gasoline;
  const char* diesel;
  const char* building;
};

inline const std::vector<PublicRow>& published_public_rows() {
  static const std::vector<PublicRow> rows = {
      {2000, "30.48", "57.62", "12.69", "10.70", "64.70"},
      {2001, "31.70", "59.32", "12.85", "11.25", "66.92"},
      {2002, "33.73", "62.41", "13.84", "12.40", "69.91"},
      {2003, "39.15", "71.53", "14.05", "13.05", "83.58"},
      {2004, "44.84", "82.43", "16.28", "14.96", "96.02"},
      {2005, "48.48", "92.55", "16.59", "14.73", "109.70"},
      {2006, "53.14", "102.76", "17.47", "15.49", "122.94"},
      {2007, "56.89", "111.58", "18.41", "16.63", "133.43"},
      {2008, "57.34", "117.71", "18.50", "19.01", "137.54"},
      {2009, "64.12", "126.90", "17.91", "19.14", "153.97"},
      {2010, "68.27", "136.81", "19.63", "21.62", "163.82"},
      {2011, "77.95", "151.89", "21.93", "23.90", "184.01"},
      {2012, "85.46", "165.81", "24.43", "24.39", "202.45"},
      {2013, "105.98", "197.63", "30.01", "22.92", "250.67"},
  };
  return rows;
}

struct NoncommercialRow {
  int year;
  const char* fuelwood_straw;
  const char* methane;
  const char* total;
};

inline const std::vector<NoncommercialRow>& published_noncommercial_rows() {
  static const std::vector<NoncommercialRow> rows = {
      {2000, "204.12", "1.62", "205.74"}, {2001, "228.38", "2.20", "230.58"},
      {2002, "255.49", "2.68", "258.17"}, {2003, "259.19", "3.30", "262.49"},
      {2004, "266.23", "3.99", "270.22"}, {2005, "262.69", "4.93", "267.62"},
      {2006, "274.76", "5.09", "279.85"}, {2007, "252.69", "7.31", "260.01"},
      {2008, "221.29", "8.45", "229.74"}, {2009, "189.88", "9.34", "199.22"},
      {2010, "158.48", "9.97", "168.44"}, {2011, "127.07", "10.91", "137.98"},
      {2012, "95.66", "11.84", "107.50"}, {2013, "64.26", "12.77", "77.03"},
  };
  return rows;
}

/// |a - b| in cents.
inline std::int64_t cents_apart(EnergyQuantity a, const char* b) {
  const auto d = a.cents() - EnergyQuantity::parse(b).cents();
  return d < 0 ? -d : d;
}

}  // namespace bec::testing
