#include "bec/policy.hpp"

#include <fmt/format.h>

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "bec/error.hpp"

namespace bec {
namespace {

AccountingPolicy eq2_legacy() {
  AccountingPolicy p;
  p.name = "eq2-legacy";
  p.residential_diesel_deduction = Fraction::parse("0.95");
  return p;
}

// Transport shares of services-sector oil from the 2007 estimate, together
// with the partial residential diesel deduction of the same source.
AccountingPolicy wang2007() {
  AccountingPolicy p = eq2_legacy();
  p.name = "wang2007";
  p.public_gasoline_deduction = Fraction::parse("0.95");
  p.public_diesel_deduction = Fraction::parse("0.35");
  return p;
}

AccountingPolicy naive_heating_added() {
  AccountingPolicy p;
  p.name = "naive-heating-added";
  p.add_central_heating = true;
  return p;
}

const std::map<std::string_view, AccountingPolicy>& presets() {
  static const std::map<std::string_view, AccountingPolicy> map = {
      {"eq3-default", AccountingPolicy{}},
      {"eq2-legacy", eq2_legacy()},
      {"wang2007", wang2007()},
      {"naive-heating-added", naive_heating_added()},
  };
  return map;
}

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

bool parse_bool(const std::string& text, int line) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw Error(ErrorCode::kInvalidPolicy, fmt::format("expected true or false, got '{}'", text))
      .at_line(line);
}

using Setter = std::function<void(AccountingPolicy&, const std::string&, int)>;

Setter fraction_field(Fraction AccountingPolicy::*field) {
  return [field](AccountingPolicy& p, const std::string& v, int line) {
    try {
      p.*field = Fraction::parse(v);
    } catch (Error& e) {
      e.at_line(line);
      throw;
    }
  };
}

Setter bool_field(bool AccountingPolicy::*field) {
  return [field](AccountingPolicy& p, const std::string& v, int line) {
    p.*field = parse_bool(v, line);
  };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> map = {
      {"residentialGasolineDeduction", fraction_field(&AccountingPolicy::residential_gasoline_deduction)},
      {"residentialDieselDeduction", fraction_field(&AccountingPolicy::residential_diesel_deduction)},
      {"publicGasolineDeduction", fraction_field(&AccountingPolicy::public_gasoline_deduction)},
      {"publicDieselDeduction", fraction_field(&AccountingPolicy::public_diesel_deduction)},
      {"includeTransportElectricity", bool_field(&AccountingPolicy::include_transport_electricity)},
      {"includeNonCommercial", bool_field(&AccountingPolicy::include_noncommercial)},
      {"addCentralHeating", bool_field(&AccountingPolicy::add_central_heating)},
  };
  return map;
}

}  // namespace

std::vector<std::string_view> preset_names() {
  return {"eq3-default", "eq2-legacy", "wang2007", "naive-heating-added"};
}

std::optional<AccountingPolicy> find_preset(std::string_view name) {
  auto it = presets().find(name);
  if (it == presets().end()) return std::nullopt;
  return it->second;
}

AccountingPolicy parse_policy(std::istream& in, std::string name) {
  AccountingPolicy policy;
  std::set<std::string> seen;
  std::string line;
  int line_number = 0;
  bool any_setting = false;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string stripped = trim(line);
    if (stripped.empty()) continue;
    auto eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorCode::kInvalidPolicy, fmt::format("expected 'key = value', got '{}'", stripped))
          .at_line(line_number);
    }
    std::string key = trim(std::string_view(stripped).substr(0, eq));
    std::string value = trim(std::string_view(stripped).substr(eq + 1));
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::kInvalidPolicy, fmt::format("key '{}' set twice", key))
          .at_line(line_number);
    }
    if (key == "base") {
      if (any_setting) {
        throw Error(ErrorCode::kInvalidPolicy, "'base' must precede every other key")
            .at_line(line_number);
      }
      auto base = find_preset(value);
      if (!base) {
        throw Error(ErrorCode::kInvalidPolicy, fmt::format("unknown preset '{}'", value))
            .at_line(line_number);
      }
      policy = *base;
      any_setting = true;
      continue;
    }
    auto it = setters().find(key);
    if (it == setters().end()) {
      throw Error(ErrorCode::kInvalidPolicy, fmt::format("unknown policy key '{}'", key))
          .at_line(line_number);
    }
    it->second(policy, value, line_number);
    any_setting = true;
  }
  policy.name = std::move(name);
  return policy;
}

AccountingPolicy load_policy(std::string_view preset_or_path) {
  if (auto preset = find_preset(preset_or_path)) return *preset;
  std::filesystem::path path(preset_or_path);
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInvalidPolicy,
                fmt::format("'{}' is neither a preset nor a readable policy file", preset_or_path));
  }
  return parse_policy(in, path.stem().string());
}

std::string to_policy_text(const AccountingPolicy& p) {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::ostringstream out;
  out << "# policy " << p.name << '\n'
      << "residentialGasolineDeduction = " << p.residential_gasoline_deduction.to_string() << '\n'
      << "residentialDieselDeduction = " << p.residential_diesel_deduction.to_string() << '\n'
      << "publicGasolineDeduction = " << p.public_gasoline_deduction.to_string() << '\n'
      << "publicDieselDeduction = " << p.public_diesel_deduction.to_string() << '\n'
      << "includeTransportElectricity = " << b(p.include_transport_electricity) << '\n'
      << "includeNonCommercial = " << b(p.include_noncommercial) << '\n'
      << "addCentralHeating = " << b(p.add_central_heating) << '\n';
  return out.str();
}

}  // namespace bec
