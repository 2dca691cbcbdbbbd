#include "bec/error.hpp"

#include <fmt/format.h>

namespace bec {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnknownSector: return "UnknownSector";
    case ErrorCode::kUnknownFuel: return "UnknownFuel";
    case ErrorCode::kUnknownUnit: return "UnknownUnit";
    case ErrorCode::kDuplicateCell: return "DuplicateCell";
    case ErrorCode::kDuplicateYear: return "DuplicateYear";
    case ErrorCode::kNegativeQuantity: return "NegativeQuantity";
    case ErrorCode::kReconciliationError: return "ReconciliationError";
    case ErrorCode::kDeductionExceedsTotal: return "DeductionExceedsTotal";
    case ErrorCode::kMissingSector: return "MissingSector";
    case ErrorCode::kMissingCell: return "MissingCell";
    case ErrorCode::kMissingHeatData: return "MissingHeatData";
    case ErrorCode::kYearMismatch: return "YearMismatch";
    case ErrorCode::kInvalidDenominator: return "InvalidDenominator";
    case ErrorCode::kEmptyLedger: return "EmptyLedger";
    case ErrorCode::kEmptyReport: return "EmptyReport";
    case ErrorCode::kUnknownReportKind: return "UnknownReportKind";
    case ErrorCode::kInvalidPolicy: return "InvalidPolicy";
    case ErrorCode::kInvalidYearRange: return "InvalidYearRange";
    case ErrorCode::kArithmeticError: return "ArithmeticError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

Error& Error::at_line(int line, std::optional<int> column) {
  line_ = line;
  column_ = column;
  return *this;
}

Error& Error::in_year(int year) {
  year_ = year;
  return *this;
}

std::string Error::describe() const {
  std::string out = fmt::format("{}: {}", error_name(code_), what());
  std::string where;
  if (year_) where += fmt::format("year {}", *year_);
  if (line_) {
    if (!where.empty()) where += ", ";
    where += fmt::format("line {}", *line_);
    if (column_) where += fmt::format(", column {}", *column_);
  }
  if (!where.empty()) out += " (" + where + ")";
  return out;
}

}  // namespace bec
