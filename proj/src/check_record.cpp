#include "hypercong/check_record.hpp"

#include <array>
#include <stdexcept>

namespace hypercong {

namespace {

constexpr std::array<std::pair<ClaimId, const char*>, 16> kClaimNames = {{
    {ClaimId::ThmMain, "THM_MAIN"},
    {ClaimId::Eq1_3, "EQ_1_3"},
    {ClaimId::Cor1_3, "COR_1_3"},
    {ClaimId::Cor1_4A, "COR_1_4_A"},
    {ClaimId::Cor1_4B, "COR_1_4_B"},
    {ClaimId::Cor1_4C, "COR_1_4_C"},
    {ClaimId::Cor1_4D, "COR_1_4_D"},
    {ClaimId::Eq1_9, "EQ_1_9"},
    {ClaimId::BinomIds, "BINOM_IDS"},
    {ClaimId::LemTauraso, "LEM_TAURASO"},
    {ClaimId::LemMaoPan, "LEM_MAOPAN"},
    {ClaimId::Lem2_3, "LEM_2_3"},
    {ClaimId::Case2Exp, "CASE2_EXP"},
    {ClaimId::Conj1_2, "CONJ_1_2"},
    {ClaimId::GammaShift, "GAMMA_SHIFT"},
    {ClaimId::GammaReflect, "GAMMA_REFLECT"},
}};

}  // namespace

std::string claim_name(ClaimId id) {
  for (const auto& [c, n] : kClaimNames)
    if (c == id) return n;
  throw std::logic_error("unknown claim id");
}

std::optional<ClaimId> claim_from_name(const std::string& name) {
  for (const auto& [c, n] : kClaimNames)
    if (name == n) return c;
  return std::nullopt;
}

const std::vector<ClaimId>& all_claims() {
  static const std::vector<ClaimId> ids = [] {
    std::vector<ClaimId> v;
    for (const auto& [c, n] : kClaimNames) v.push_back(c);
    return v;
  }();
  return ids;
}

bool ValuationResult::meets(const ValuationResult& required) const {
  if (kind == Kind::None || required.kind == Kind::None) return false;
  if (required.kind == Kind::Infinite) return kind == Kind::Infinite;
  if (kind == Kind::Infinite) return true;
  return value >= required.value;
}

std::string ValuationResult::str() const {
  switch (kind) {
    case Kind::None:
      return "-";
    case Kind::Infinite:
      return "inf";
    case Kind::AtLeast:
      return ">=" + std::to_string(value);
    case Kind::Exact:
      return std::to_string(value);
  }
  return "-";
}

ValuationResult ValuationResult::parse(const std::string& s) {
  if (s == "-") return none();
  if (s == "inf") return infinite();
  if (s.rfind(">=", 0) == 0) return at_least(std::stol(s.substr(2)));
  return exact(std::stol(s));
}

ValuationResult weaker(const ValuationResult& a, const ValuationResult& b) {
  auto bound = [](const ValuationResult& v) -> long {
    switch (v.kind) {
      case ValuationResult::Kind::None:
        return -1'000'000;
      case ValuationResult::Kind::Infinite:
        return 1'000'000;
      default:
        return v.value;
    }
  };
  if (bound(a) != bound(b)) return bound(a) < bound(b) ? a : b;
  // Same guaranteed bound; an exact measurement is the weaker statement.
  return a.kind == ValuationResult::Kind::Exact ? a : b;
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass:
      return "pass";
    case Verdict::Fail:
      return "fail";
    case Verdict::Skipped:
      return "skipped";
  }
  return "skipped";
}

Verdict judge(bool hypothesis_met, const ValuationResult& achieved,
              const ValuationResult& required) {
  if (!hypothesis_met) return Verdict::Skipped;
  return achieved.meets(required) ? Verdict::Pass : Verdict::Fail;
}

std::string CongruenceCheck::params_str() const {
  std::string s;
  for (const auto& [k, v] : params) {
    if (!s.empty()) s += ';';
    s += k + "=" + v;
  }
  return s;
}

}  // namespace hypercong
