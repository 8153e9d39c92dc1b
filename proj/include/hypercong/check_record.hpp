#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hypercong {

enum class ClaimId {
  ThmMain,
  Eq1_3,
  Cor1_3,
  Cor1_4A,
  Cor1_4B,
  Cor1_4C,
  Cor1_4D,
  Eq1_9,
  BinomIds,
  LemTauraso,
  LemMaoPan,
  Lem2_3,
  Case2Exp,
  Conj1_2,
  GammaShift,
  GammaReflect,
};

std::string claim_name(ClaimId id);
std::optional<ClaimId> claim_from_name(const std::string& name);
const std::vector<ClaimId>& all_claims();

// The p-adic valuation of a measured difference. Modular comparisons yield
// Exact(v) with v < e or AtLeast(e); exact-rational comparisons yield
// Exact(v) or Infinite. None means the quantity was not computable.
struct ValuationResult {
  enum class Kind { None, Exact, AtLeast, Infinite };
  Kind kind = Kind::None;
  long value = 0;

  static ValuationResult none() { return {}; }
  static ValuationResult exact(long v) { return {Kind::Exact, v}; }
  static ValuationResult at_least(long v) { return {Kind::AtLeast, v}; }
  static ValuationResult infinite() { return {Kind::Infinite, 0}; }

  bool known() const { return kind != Kind::None; }
  bool meets(const ValuationResult& required) const;
  std::string str() const;  // "3", ">=2", "inf", "-"
  static ValuationResult parse(const std::string& s);

  bool operator==(const ValuationResult&) const = default;
};

// The weaker (less-proven) of two measurements; used to combine sub-checks.
ValuationResult weaker(const ValuationResult& a, const ValuationResult& b);

enum class Verdict { Pass, Fail, Skipped };
std::string verdict_name(Verdict v);

Verdict judge(bool hypothesis_met, const ValuationResult& achieved,
              const ValuationResult& required);

// Outcome record for one claim at one input cell.
struct CongruenceCheck {
  ClaimId claim{};
  long p = 0;  // 0 for prime-free claims
  int e = 0;   // 0 for exact-identity claims
  std::vector<std::pair<std::string, std::string>> params;
  bool hypothesis_met = true;
  std::string reason;  // set when hypothesis is unmet
  ValuationResult achieved;
  ValuationResult required;
  Verdict verdict = Verdict::Skipped;
  bool exploratory = false;
  double elapsed_ms = 0.0;

  std::string params_str() const;  // "alpha=-1/2;z=1"
};

}  // namespace hypercong
