#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bec {

/// Error classes raised by the engine. The C API maps each to a status code
/// of the same name.
enum class ErrorCode {
  kParseError,
  kUnknownSector,
  kUnknownFuel,
  kUnknownUnit,
  kDuplicateCell,
  kDuplicateYear,
  kNegativeQuantity,
  kReconciliationError,
  kDeductionExceedsTotal,
  kMissingSector,
  kMissingCell,
  kMissingHeatData,
  kYearMismatch,
  kInvalidDenominator,
  kEmptyLedger,
  kEmptyReport,
  kUnknownReportKind,
  kInvalidPolicy,
  kInvalidYearRange,
  kArithmeticError,
  kIoError,
};

/// Class name used in diagnostics, e.g. "UnknownSector".
std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  std::optional<int> line() const { return line_; }
  std::optional<int> column() const { return column_; }
  std::optional<int> year() const { return year_; }

  Error& at_line(int line, std::optional<int> column = std::nullopt);
  Error& in_year(int year);

  /// "UnknownSector: unknown sector label 'mining' (line 3)"
  std::string describe() const;

 private:
  ErrorCode code_;
  std::optional<int> line_;
  std::optional<int> column_;
  std::optional<int> year_;
};

}  // namespace bec
