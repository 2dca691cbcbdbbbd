#include "bec/report.hpp"

#include <fmt/format.h>

#include <fstream>
#include <sstream>

#include "bec/error.hpp"

namespace bec {
namespace {

// Column-aligned text plus the same rows as CSV.
class TableBuilder {
 public:
  explicit TableBuilder(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  RenderedTable build() const {
    std::vector<std::size_t> width(header_.size());
    auto widen = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    };
    widen(header_);
    for (const auto& r : rows_) widen(r);

    RenderedTable out;
    auto emit = [&](const std::vector<std::string>& row) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out.text += fmt::format("{}{:>{}}", i ? "  " : "", row[i], width[i]);
        out.csv += (i ? "," : "") + row[i];
      }
      out.text += '\n';
      out.csv += '\n';
    };
    emit(header_);
    for (const auto& r : rows_) emit(r);
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

// part / whole at `digits` decimals, rounded half away from zero, as text.
std::string ratio_text(std::int64_t part, std::int64_t whole, int digits, std::int64_t scale = 1) {
  __int128 unit = scale;
  for (int i = 0; i < digits; ++i) unit *= 10;
  const __int128 num = static_cast<__int128>(part) * unit;
  __int128 q = num / whole;
  if (2 * (num % whole) >= whole) ++q;
  const auto v = static_cast<long long>(q);
  __int128 div = 1;
  for (int i = 0; i < digits; ++i) div *= 10;
  return fmt::format("{}.{:0{}}", static_cast<long long>(v / div), static_cast<long long>(v % div),
                     digits);
}

std::string percent(std::int64_t part, std::int64_t whole) { return ratio_text(part, whole, 2, 100); }

void require_rows(bool empty, std::string_view what) {
  if (empty) throw Error(ErrorCode::kEmptyReport, fmt::format("nothing to render for {}", what));
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::filesystem::path>& written) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, fmt::format("cannot write '{}'", path.string()));
  written.push_back(path);
}

}  // namespace

RenderedTable render_ledger_table(const YearSeries<BuildingEnergyLedger>& series) {
  require_rows(series.empty(), "ledger table");
  TableBuilder t({"year", "RE", "PE", "NCE", "commercialNBE", "NBE"});
  for (const auto& [year, l] : series) {
    t.add({std::to_string(year), l.residential.to_string(), l.public_sector.to_string(),
           l.noncommercial.to_string(), l.commercial_total.to_string(), l.total.to_string()});
  }
  return t.build();
}

RenderedTable render_public_detail(std::span<const BalanceSheet> sheets, const AccountingPolicy& policy) {
  require_rows(sheets.empty(), "public detail");
  TableBuilder t({"year", "WRHR", "others", "gasoline", "diesel", "building"});
  for (const auto& sheet : sheets) {
    const EnergyQuantity building = public_energy(sheet, policy);
    EnergyQuantity gasoline, diesel;
    for (SectorKind s : {SectorKind::kWholesaleRetailHotelRestaurants, SectorKind::kOthers}) {
      if (auto v = sheet.cell(s, FuelKind::kGasoline)) gasoline += *v;
      if (auto v = sheet.cell(s, FuelKind::kDiesel)) diesel += *v;
    }
    t.add({std::to_string(sheet.year()),
           sheet.commercial_total(SectorKind::kWholesaleRetailHotelRestaurants).to_string(),
           sheet.commercial_total(SectorKind::kOthers).to_string(), gasoline.to_string(),
           diesel.to_string(), building.to_string()});
  }
  return t.build();
}

RenderedTable render_noncommercial_detail(const YearSeries<NonCommercialRecord>& records) {
  require_rows(records.empty(), "non-commercial detail");
  TableBuilder t({"year", "fuelwood_straw", "methane", "total"});
  for (const auto& [year, r] : records) {
    t.add({std::to_string(year), r.fuelwood_straw.to_string(), r.methane.to_string(),
           noncommercial_energy(r).to_string()});
  }
  return t.build();
}

RenderedTable render_composition(const YearSeries<BuildingEnergyLedger>& series) {
  require_rows(series.empty(), "composition");
  TableBuilder t({"year", "residential_pct", "public_pct", "noncommercial_pct"});
  for (const auto& [year, l] : series) {
    composition_shares(l);  // EmptyLedger on a zero total
    const auto total = l.total.cents();
    t.add({std::to_string(year), percent(l.residential.cents(), total),
           percent(l.public_sector.cents(), total), percent(l.noncommercial.cents(), total)});
  }
  return t.build();
}

RenderedTable render_share_of_final(const YearSeries<BuildingEnergyLedger>& series,
                                    const std::map<int, EnergyQuantity>& final_energy) {
  require_rows(series.empty(), "share of final energy");
  TableBuilder t({"year", "commercialNBE", "final", "share_pct", "NBE", "final_incl_nce",
                  "share_incl_nce_pct"});
  for (const auto& [year, l] : series) {
    auto it = final_energy.find(year);
    if (it == final_energy.end()) {
      throw Error(ErrorCode::kMissingCell, "no final energy for this year").in_year(year);
    }
    const EnergyQuantity final = it->second;
    share_of_final(l, final, false);  // InvalidDenominator on a zero final
    const EnergyQuantity with_nce = final + l.noncommercial;
    t.add({std::to_string(year), l.commercial_total.to_string(), final.to_string(),
           percent(l.commercial_total.cents(), final.cents()), l.total.to_string(),
           with_nce.to_string(), percent(l.total.cents(), with_nce.cents())});
  }
  return t.build();
}

PlotKind parse_plot_kind(std::string_view name) {
  for (PlotKind k : kAllPlotKinds) {
    if (to_label(k) == name) return k;
  }
  throw Error(ErrorCode::kUnknownReportKind, fmt::format("unknown plot kind '{}'", name));
}

std::string_view to_label(PlotKind kind) {
  switch (kind) {
    case PlotKind::kResidential: return "residential";
    case PlotKind::kPublic: return "public";
    case PlotKind::kNoncommercial: return "noncommercial";
    case PlotKind::kTotal: return "total";
    case PlotKind::kShares: return "shares";
    case PlotKind::kShareOfFinal: return "share-of-final";
  }
  return "?";
}

std::string render_plot_series(const YearSeries<BuildingEnergyLedger>& series, PlotKind kind,
                               const std::map<int, EnergyQuantity>* final_energy) {
  require_rows(series.empty(), "plot series");
  std::string out;
  switch (kind) {
    case PlotKind::kResidential: out = "# year residential_mtce\n"; break;
    case PlotKind::kPublic: out = "# year public_mtce\n"; break;
    case PlotKind::kNoncommercial: out = "# year noncommercial_mtce\n"; break;
    case PlotKind::kTotal: out = "# year commercial_nbe_mtce nbe_mtce\n"; break;
    case PlotKind::kShares: out = "# year residential_share public_share noncommercial_share\n"; break;
    case PlotKind::kShareOfFinal:
      if (final_energy == nullptr) {
        throw Error(ErrorCode::kMissingCell, "share-of-final plot needs final energy");
      }
      out = "# year share_of_final share_of_final_incl_noncommercial\n";
      break;
  }
  for (const auto& [year, l] : series) {
    switch (kind) {
      case PlotKind::kResidential:
        out += fmt::format("{} {}\n", year, l.residential.to_string());
        break;
      case PlotKind::kPublic:
        out += fmt::format("{} {}\n", year, l.public_sector.to_string());
        break;
      case PlotKind::kNoncommercial:
        out += fmt::format("{} {}\n", year, l.noncommercial.to_string());
        break;
      case PlotKind::kTotal:
        out += fmt::format("{} {} {}\n", year, l.commercial_total.to_string(), l.total.to_string());
        break;
      case PlotKind::kShares: {
        composition_shares(l);
        const auto total = l.total.cents();
        out += fmt::format("{} {} {} {}\n", year, ratio_text(l.residential.cents(), total, 6),
                           ratio_text(l.public_sector.cents(), total, 6),
                           ratio_text(l.noncommercial.cents(), total, 6));
        break;
      }
      case PlotKind::kShareOfFinal: {
        auto it = final_energy->find(year);
        if (it == final_energy->end()) {
          throw Error(ErrorCode::kMissingCell, "no final energy for this year").in_year(year);
        }
        share_of_final(l, it->second, false);
        const EnergyQuantity with_nce = it->second + l.noncommercial;
        out += fmt::format("{} {} {}\n", year,
                           ratio_text(l.commercial_total.cents(), it->second.cents(), 6),
                           ratio_text(l.total.cents(), with_nce.cents(), 6));
        break;
      }
    }
  }
  return out;
}

ReportOutput parse_report_output(std::string_view name) {
  if (name == "ledger-table") return ReportOutput::kLedgerTable;
  if (name == "composition") return ReportOutput::kComposition;
  if (name == "share-of-final") return ReportOutput::kShareOfFinal;
  if (name == "public-detail") return ReportOutput::kPublicDetail;
  if (name == "noncommercial-detail") return ReportOutput::kNoncommercialDetail;
  if (name == "audit") return ReportOutput::kAudit;
  throw Error(ErrorCode::kUnknownReportKind, fmt::format("unknown report output '{}'", name));
}

std::vector<std::filesystem::path> write_report(const ReportSpec& spec, const ReportInputs& inputs) {
  if (inputs.sheets.empty()) throw Error(ErrorCode::kEmptyReport, "no balance data loaded");
  const int min_year = inputs.sheets.front().year();
  const int max_year = inputs.sheets.back().year();
  if (spec.first_year > spec.last_year || spec.first_year < min_year || spec.last_year > max_year) {
    throw Error(ErrorCode::kInvalidYearRange,
                fmt::format("year range {}..{} is outside the data ({}..{})", spec.first_year,
                            spec.last_year, min_year, max_year));
  }

  std::vector<BalanceSheet> sheets;
  for (const auto& s : inputs.sheets) {
    if (s.year() >= spec.first_year && s.year() <= spec.last_year) sheets.push_back(s);
  }
  YearSeries<NonCommercialRecord> no_records;
  const auto& records = inputs.records ? *inputs.records : no_records;
  const auto ledgers = ledger_series(sheets, records, inputs.policy);

  std::map<int, EnergyQuantity> finals;
  for (const auto& s : sheets) finals.emplace(s.year(), final_energy(s));

  std::filesystem::create_directories(spec.output_dir);
  std::vector<std::filesystem::path> written;
  const auto& dir = spec.output_dir;
  auto wants = [&](ReportOutput o) { return spec.outputs.count(o) != 0; };
  auto plot = [&](PlotKind kind) {
    write_file(dir / fmt::format("plot_{}.dat", to_label(kind)),
               render_plot_series(ledgers, kind, &finals), written);
  };

  if (wants(ReportOutput::kLedgerTable)) {
    write_file(dir / "ledger.csv", render_ledger_table(ledgers).csv, written);
    for (PlotKind k : {PlotKind::kResidential, PlotKind::kPublic, PlotKind::kNoncommercial,
                       PlotKind::kTotal}) {
      plot(k);
    }
  }
  if (wants(ReportOutput::kPublicDetail)) {
    write_file(dir / "public_detail.csv", render_public_detail(sheets, inputs.policy).csv, written);
  }
  if (wants(ReportOutput::kNoncommercialDetail)) {
    YearSeries<NonCommercialRecord> selected;
    for (const auto& [year, r] : records) {
      if (year >= spec.first_year && year <= spec.last_year) selected.insert(year, r);
    }
    write_file(dir / "noncommercial.csv", render_noncommercial_detail(selected).csv, written);
  }
  if (wants(ReportOutput::kComposition)) {
    write_file(dir / "shares.csv", render_composition(ledgers).csv, written);
    plot(PlotKind::kShares);
  }
  if (wants(ReportOutput::kShareOfFinal)) {
    write_file(dir / "share_of_final.csv", render_share_of_final(ledgers, finals).csv, written);
    plot(PlotKind::kShareOfFinal);
  }
  if (wants(ReportOutput::kAudit)) {
    std::vector<AuditReport> reports;
    for (const auto& s : sheets) {
      AuditReport r = heat_balance_check(s, spec.audit_tolerance);
      r.absorb(double_count_detector(ledgers.at(s.year()), s));
      reports.push_back(std::move(r));
    }
    std::ostringstream csv;
    write_audit_csv(csv, reports);
    write_file(dir / "audit.csv", csv.str(), written);
  }
  return written;
}

}  // namespace bec
