#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bec/error.hpp"
#include "bec/policy.hpp"

using namespace bec;

namespace {

AccountingPolicy parse(const std::string& text) {
  std::istringstream in(text);
  return parse_policy(in, "test");
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected bec::Error");
  return ErrorCode::kIoError;
}

}  // namespace

TEST_CASE("presets") {
  const auto eq3 = *find_preset("eq3-default");
  CHECK(eq3 == AccountingPolicy{});
  CHECK(eq3.residential_diesel_deduction == Fraction::one());
  CHECK_FALSE(eq3.include_transport_electricity);
  CHECK(eq3.include_noncommercial);
  CHECK_FALSE(eq3.add_central_heating);

  const auto eq2 = *find_preset("eq2-legacy");
  CHECK(eq2.residential_diesel_deduction == Fraction::parse("0.95"));
  CHECK(eq2.public_diesel_deduction == Fraction::one());

  const auto wang = *find_preset("wang2007");
  CHECK(wang.public_gasoline_deduction == Fraction::parse("0.95"));
  CHECK(wang.public_diesel_deduction == Fraction::parse("0.35"));

  const auto naive = *find_preset("naive-heating-added");
  CHECK(naive.add_central_heating);
  CHECK(naive.residential_diesel_deduction == Fraction::one());

  CHECK_FALSE(find_preset("eq4"));
  CHECK(preset_names().size() == 4);
  for (auto name : preset_names()) CHECK(find_preset(name)->name == name);
}

TEST_CASE("policy file") {
  auto p = parse(
      "# services oil split\n"
      "publicGasolineDeduction = 0.95\n"
      "publicDieselDeduction=0.35   # trailing comment\n"
      "\n"
      "includeTransportElectricity = true\n");
  CHECK(p.name == "test");
  CHECK(p.public_gasoline_deduction == Fraction::parse("0.95"));
  CHECK(p.public_diesel_deduction == Fraction::parse("0.35"));
  CHECK(p.include_transport_electricity);
  CHECK(p.residential_gasoline_deduction == Fraction::one());

  auto based = parse("base = eq2-legacy\naddCentralHeating = true\n");
  CHECK(based.residential_diesel_deduction == Fraction::parse("0.95"));
  CHECK(based.add_central_heating);
}

TEST_CASE("policy file errors") {
  CHECK(code_of([] { parse("residentialPetrolDeduction = 1\n"); }) == ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("publicDieselDeduction = 1.5\n"); }) == ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("includeNonCommercial = yes\n"); }) == ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("includeNonCommercial\n"); }) == ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("addCentralHeating = true\naddCentralHeating = false\n"); }) ==
        ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("addCentralHeating = true\nbase = wang2007\n"); }) ==
        ErrorCode::kInvalidPolicy);
  CHECK(code_of([] { parse("base = nonsense\n"); }) == ErrorCode::kInvalidPolicy);
  try {
    parse("\n\npublicDieselDeduction = 2\n");
  } catch (const Error& e) {
    CHECK(e.line() == 3);
  }
}

TEST_CASE("policy text round-trips") {
  for (auto name : preset_names()) {
    const auto preset = *find_preset(name);
    auto back = parse(to_policy_text(preset));
    back.name = preset.name;
    CHECK(back == preset);
  }
}

TEST_CASE("load_policy resolves presets and files") {
  CHECK(load_policy("wang2007").name == "wang2007");
  const auto path = std::filesystem::temp_directory_path() / "bec_policy_test.policy";
  {
    std::ofstream out(path);
    out << "residentialDieselDeduction = 0.5\n";
  }
  const auto p = load_policy(path.string());
  CHECK(p.name == "bec_policy_test");
  CHECK(p.residential_diesel_deduction == Fraction::parse("0.5"));
  std::filesystem::remove(path);
  CHECK(code_of([] { load_policy("/nonexistent/policy.txt"); }) == ErrorCode::kInvalidPolicy);
}
