#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bec/accounting.hpp"
#include "bec/audit.hpp"

namespace bec {

/// Aligned text for the terminal plus the CSV written to disk.
struct RenderedTable {
  std::string text;
  std::string csv;
};

/// year, RE, PE, NCE, commercialNBE, NBE.
RenderedTable render_ledger_table(const YearSeries<BuildingEnergyLedger>& series);

/// year, WRHR, others, gasoline, diesel, building consumption.
RenderedTable render_public_detail(std::span<const BalanceSheet> sheets, const AccountingPolicy& policy);

/// year, fuelwood/straw, methane, total.
RenderedTable render_noncommercial_detail(const YearSeries<NonCommercialRecord>& records);

/// Composition percentages per year; each row sums to 100.00 within 0.01.
RenderedTable render_composition(const YearSeries<BuildingEnergyLedger>& series);

/// Share of final energy under both denominators.
RenderedTable render_share_of_final(const YearSeries<BuildingEnergyLedger>& series,
                                    const std::map<int, EnergyQuantity>& final_energy);

enum class PlotKind { kResidential, kPublic, kNoncommercial, kTotal, kShares, kShareOfFinal };

/// Throws UnknownReportKind.
PlotKind parse_plot_kind(std::string_view name);
std::string_view to_label(PlotKind kind);
inline constexpr std::array<PlotKind, 6> kAllPlotKinds = {
    PlotKind::kResidential, PlotKind::kPublic, PlotKind::kNoncommercial,
    PlotKind::kTotal,       PlotKind::kShares, PlotKind::kShareOfFinal,
};

/// Space-separated columns under a `#` header line. kShareOfFinal needs
/// `final_energy`; the other kinds ignore it.
std::string render_plot_series(const YearSeries<BuildingEnergyLedger>& series, PlotKind kind,
                               const std::map<int, EnergyQuantity>* final_energy = nullptr);

enum class ReportOutput {
  kLedgerTable,
  kComposition,
  kShareOfFinal,
  kPublicDetail,
  kNoncommercialDetail,
  kAudit,
};

/// Throws UnknownReportKind.
ReportOutput parse_report_output(std::string_view name);

struct ReportSpec {
  std::set<ReportOutput> outputs;
  int first_year = 0;
  int last_year = 0;
  std::filesystem::path output_dir;
  Tolerance audit_tolerance = kDefaultAuditTolerance;
};

struct ReportInputs {
  std::span<const BalanceSheet> sheets;
  const YearSeries<NonCommercialRecord>* records = nullptr;
  AccountingPolicy policy;
};

/// Computes ledgers for the requested year range and writes the requested files
/// (ledger.csv, public_detail.csv, noncommercial.csv, shares.csv,
/// share_of_final.csv, audit.csv) plus one plot_<kind>.dat per plot kind that
/// the outputs cover. Throws InvalidYearRange when the range is empty or
/// leaves the data. Returns the written paths.
std::vector<std::filesystem::path> write_report(const ReportSpec& spec, const ReportInputs& inputs);

}  // namespace bec
