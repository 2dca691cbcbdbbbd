#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bec/quantity.hpp"

namespace bec {

/// Rule set selecting the deduction coefficients and inclusion flags.
///
/// Defaults give the full-deduction residential formula (RE = RC - GRC - DRC)
/// and full oil removal from the public sectors.
struct AccountingPolicy {
  std::string name = "eq3-default";

  Fraction residential_gasoline_deduction = Fraction::one();
  Fraction residential_diesel_deduction = Fraction::one();
  Fraction public_gasoline_deduction = Fraction::one();
  Fraction public_diesel_deduction = Fraction::one();

  bool include_transport_electricity = false;
  bool include_noncommercial = true;
  /// Re-adds district heating on top of final consumption. Wrong on purpose:
  /// only the audit uses it, to show the double count.
  bool add_central_heating = false;

  friend bool operator==(const AccountingPolicy&, const AccountingPolicy&) = default;
};

/// eq3-default, eq2-legacy, wang2007, naive-heating-added.
std::vector<std::string_view> preset_names();
std::optional<AccountingPolicy> find_preset(std::string_view name);

/// `key = value` lines using the field names of the policy file format
/// (residentialGasolineDeduction, ..., addCentralHeating). `#` starts a
/// comment. An optional `base = <preset>` line must come first. Unknown keys
/// and out-of-range values raise InvalidPolicy.
AccountingPolicy parse_policy(std::istream& in, std::string name);

/// Preset name, or else a path to a policy file.
AccountingPolicy load_policy(std::string_view preset_or_path);

/// Inverse of parse_policy (without the base line).
std::string to_policy_text(const AccountingPolicy& policy);

}  // namespace bec
