// Command-line front end: single evaluations, identity checks, single claim
// checks, and parameter sweeps with JSON/CSV reports.
//
// Exit codes: 0 when everything passes or is skipped, 1 when any check
// fails, 2 on usage or configuration errors.

#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypercong/claims.hpp"
#include "hypercong/errors.hpp"
#include "hypercong/gamma.hpp"
#include "hypercong/hyper.hpp"
#include "hypercong/series.hpp"
#include "hypercong/sweep.hpp"
#include "hypercong/version.hpp"

namespace {

using namespace hypercong;
using nlohmann::json;

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

long to_long(const std::string& flag, const std::string& value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + flag + ": '" + value + "'");
  }
}

const std::string& need(const std::string& value, const std::string& flag) {
  if (value.empty()) throw ConfigError("missing required option " + flag);
  return value;
}

std::string verdict_upper(Verdict v) {
  std::string s = verdict_name(v);
  for (char& c : s) c = static_cast<char>(std::toupper(c));
  return s;
}

void print_record(const CongruenceCheck& rec, bool as_json) {
  if (as_json) {
    std::cout << record_to_json(rec).dump() << "\n";
    return;
  }
  std::cout << claim_name(rec.claim) << " p=" << rec.p << " e=" << rec.e;
  if (!rec.params.empty()) std::cout << " " << rec.params_str();
  std::cout << ": " << verdict_upper(rec.verdict);
  if (rec.verdict == Verdict::Skipped) {
    std::cout << " (" << rec.reason << ")";
  } else {
    std::cout << " (achieved " << rec.achieved.str() << ", required "
              << rec.required.str() << ")";
  }
  std::cout << "\n";
}

// Claim tokens accepted by `check`, besides the canonical claim ids.
std::vector<ClaimId> resolve_claims(const std::string& token) {
  if (auto id = claim_from_name(token)) return {*id};
  if (token == "theorem") return {ClaimId::ThmMain};
  if (token == "clausen-congruence") return {ClaimId::Eq1_3};
  if (token == "corollary") return {ClaimId::Cor1_3};
  if (token == "special-cases")
    return {ClaimId::Cor1_4A, ClaimId::Cor1_4B, ClaimId::Cor1_4C,
            ClaimId::Cor1_4D};
  if (token == "binom-ids") return {ClaimId::BinomIds};
  if (token == "identity-1-9") return {ClaimId::Eq1_9};
  if (token == "tauraso") return {ClaimId::LemTauraso};
  if (token == "maopan") return {ClaimId::LemMaoPan};
  if (token == "lemma-2-3") return {ClaimId::Lem2_3};
  if (token == "case2") return {ClaimId::Case2Exp};
  if (token == "conjecture") return {ClaimId::Conj1_2};
  if (token == "gamma-shift") return {ClaimId::GammaShift};
  if (token == "gamma-reflection") return {ClaimId::GammaReflect};
  throw ConfigError("unknown claim '" + token + "'");
}

struct CheckArgs {
  std::string p, e, alpha, beta, z, x, t, b, n, k_max, truncation;
};

CongruenceCheck dispatch_check(ClaimId claim, const CheckArgs& a) {
  auto p = [&] { return to_long("--p", need(a.p, "--p")); };
  auto e2 = [&] { return a.e.empty() ? 2 : static_cast<int>(to_long("--e", a.e)); };
  switch (claim) {
    case ClaimId::ThmMain: {
      long trunc = a.truncation.empty() ? -1 : to_long("--truncation", a.truncation);
      return check_theorem_main(p(), parse_rational(need(a.alpha, "--alpha")),
                                parse_rational(need(a.z, "--z")), e2(), trunc);
    }
    case ClaimId::Eq1_3:
      return check_clausen_congruence(p(), parse_rational(need(a.alpha, "--alpha")),
                                      parse_rational(need(a.z, "--z")), e2());
    case ClaimId::Cor1_3:
      return check_corollary_b(p(), to_long("--b", need(a.b, "--b")), e2());
    case ClaimId::Cor1_4A:
    case ClaimId::Cor1_4B:
    case ClaimId::Cor1_4C:
    case ClaimId::Cor1_4D:
      return check_special_case(p(), claim);
    case ClaimId::BinomIds:
      return check_binomial_product_identities(
          a.k_max.empty() ? 40 : to_long("--k-max", a.k_max));
    case ClaimId::Eq1_9:
      return check_identity_1_9(p(), to_long("--b", need(a.b, "--b")));
    case ClaimId::LemTauraso:
      return check_lemma_tauraso(p(), parse_rational(need(a.x, "--x")));
    case ClaimId::LemMaoPan:
      return check_lemma_maopan(p(), parse_rational(need(a.alpha, "--alpha")),
                                parse_rational(need(a.beta, "--beta")), e2());
    case ClaimId::Lem2_3:
      return check_lemma_2_3(p(), to_long("--b", need(a.b, "--b")), e2());
    case ClaimId::Case2Exp:
      return check_case2_expansions(p(), parse_rational(need(a.t, "--t")),
                                    parse_rational(need(a.z, "--z")));
    case ClaimId::Conj1_2:
      return explore_conjecture(p(), to_long("--b", need(a.b, "--b")),
                                to_long("--n", need(a.n, "--n")));
    case ClaimId::GammaShift:
    case ClaimId::GammaReflect: {
      ResidueRing ring(p(), e2());
      GammaContext ctx(ring);
      Rat x = parse_rational(need(a.x, "--x"));
      return claim == ClaimId::GammaShift ? check_gamma_shift(x, ctx)
                                          : check_gamma_reflection(x, ctx);
    }
  }
  throw ConfigError("unhandled claim");
}

void print_identity(const IdentityCheck& c, bool as_json) {
  if (as_json) {
    json params = json::object();
    for (const auto& [k, v] : c.params) params[k] = v;
    json j = {{"identity", c.identity},
              {"params", params},
              {"order", c.order},
              {"pass", c.pass}};
    if (!c.pass) j["first_mismatch"] = c.first_mismatch;
    std::cout << j.dump() << "\n";
    return;
  }
  std::cout << c.identity;
  for (const auto& [k, v] : c.params) std::cout << " " << k << "=" << v;
  std::cout << " order=" << c.order << ": " << (c.pass ? "PASS" : "FAIL");
  if (!c.pass) std::cout << " (first mismatch at z^" << c.first_mismatch << ")";
  std::cout << "\n";
}

void print_sweep_summary(const Report& rep) {
  for (const auto& [claim, tally] : rep.summary) {
    std::printf("%-14s pass=%-7ld fail=%-7ld skipped=%ld\n", claim.c_str(),
                tally.pass, tally.fail, tally.skipped);
    if (tally.fail > 0)
      std::printf("  first failing input: %s\n", tally.first_fail.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of truncated hypergeometric congruences"};
  app.set_version_flag("--version", hypercong::kVersion);
  app.require_subcommand(1);
  int exit_code = 0;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a truncated series");
  std::string ev_upper, ev_lower, ev_z = "0", ev_p;
  long ev_trunc = 0;
  int ev_e = 2;
  bool ev_json = false;
  eval->add_option("--upper", ev_upper, "comma-separated upper parameters")
      ->required();
  eval->add_option("--lower", ev_lower, "comma-separated lower parameters");
  eval->add_option("--z", ev_z, "argument")->required();
  eval->add_option("--trunc", ev_trunc, "truncation order n")->required();
  eval->add_option("--p", ev_p, "prime: evaluate mod p^e instead of exactly");
  eval->add_option("--e", ev_e, "exponent of the modulus (default 2)");
  eval->add_flag("--json", ev_json);
  eval->callback([&] {
    HyperSpec spec{parse_rational_list(ev_upper), parse_rational_list(ev_lower),
                   parse_rational(ev_z), ev_trunc};
    if (ev_p.empty()) {
      Rat v = eval_truncated_exact(spec);
      if (ev_json)
        std::cout << json{{"mode", "exact"}, {"value", to_string(v)}}.dump() << "\n";
      else
        std::cout << to_string(v) << "\n";
    } else {
      ResidueRing ring(to_long("--p", ev_p), ev_e);
      Residue v = eval_truncated_mod(spec, ring);
      if (ev_json)
        std::cout << json{{"mode", "mod"},
                          {"value", v.v.get_str()},
                          {"modulus", ring.modulus().get_str()}}
                         .dump()
                  << "\n";
      else
        std::cout << v.v.get_str() << " (mod " << ring.modulus().get_str()
                  << ")\n";
    }
  });

  // gamma
  auto* gamma = app.add_subcommand("gamma", "evaluate Gamma_p(x) mod p^e");
  std::string g_x, g_p;
  int g_e = 1;
  bool g_json = false;
  gamma->add_option("--p", g_p)->required();
  gamma->add_option("--e", g_e);
  gamma->add_option("--x", g_x)->required();
  gamma->add_flag("--json", g_json);
  gamma->callback([&] {
    ResidueRing ring(to_long("--p", g_p), g_e);
    Residue v = gamma_p(parse_rational(g_x), ring);
    if (g_json)
      std::cout << json{{"value", v.v.get_str()},
                        {"modulus", ring.modulus().get_str()}}
                       .dump()
                << "\n";
    else
      std::cout << v.v.get_str() << " (mod " << ring.modulus().get_str() << ")\n";
  });

  // series
  auto* series = app.add_subcommand(
      "series", "check a classical identity on exact power series");
  std::string s_identity, s_alpha, s_beta;
  long s_order = 30, s_samples = 0, s_seed = 20240801;
  bool s_json = false;
  series
      ->add_option("--identity", s_identity,
                   "clausen | clausen-special | orr | orr-special")
      ->required();
  series->add_option("--alpha", s_alpha);
  series->add_option("--beta", s_beta);
  series->add_option("--order", s_order, "truncation order N (default 30)");
  series->add_option("--samples", s_samples,
                     "check this many random parameter sets instead");
  series->add_option("--seed", s_seed);
  series->add_flag("--json", s_json);
  series->callback([&] {
    bool special = s_identity == "clausen-special" || s_identity == "orr-special";
    auto run_one = [&](const Rat& a, const Rat& b) {
      if (s_identity == "clausen") return check_clausen(a, b, s_order);
      if (s_identity == "clausen-special") return check_clausen_special(a, s_order);
      if (s_identity == "orr") return check_orr(a, b, s_order);
      if (s_identity == "orr-special") return check_orr_special(a, s_order);
      throw ConfigError("unknown identity '" + s_identity + "'");
    };
    bool all_pass = true;
    if (s_samples <= 0) {
      Rat a = parse_rational(need(s_alpha, "--alpha"));
      Rat b = special ? Rat(0) : parse_rational(need(s_beta, "--beta"));
      IdentityCheck c = run_one(a, b);
      print_identity(c, s_json);
      all_pass = c.pass;
    } else {
      std::mt19937 rng(static_cast<unsigned>(s_seed));
      std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
      long done = 0;
      while (done < s_samples) {
        Rat a = rat(num(rng), den(rng));
        Rat b = rat(num(rng), den(rng));
        try {
          IdentityCheck c = run_one(a, b);
          print_identity(c, s_json);
          all_pass = all_pass && c.pass;
          ++done;
        } catch (const ZeroDenominatorError&) {
          // pole in a lower parameter; resample
        }
      }
    }
    exit_code = all_pass ? 0 : 1;
  });

  // check
  auto* check = app.add_subcommand("check", "run a single claim checker");
  std::string claim_token;
  CheckArgs ca;
  bool c_json = false;
  check->add_option("claim", claim_token, "claim id or alias (e.g. theorem)")
      ->required();
  check->add_option("--p", ca.p);
  check->add_option("--e", ca.e);
  check->add_option("--alpha", ca.alpha);
  check->add_option("--beta", ca.beta);
  check->add_option("--z", ca.z);
  check->add_option("--x", ca.x);
  check->add_option("--t", ca.t);
  check->add_option("--b", ca.b);
  check->add_option("--n", ca.n);
  check->add_option("--k-max", ca.k_max);
  check->add_option("--truncation", ca.truncation,
                    "override the p-1 truncation (perturbation canary)");
  check->add_flag("--json", c_json);
  check->callback([&] {
    bool any_fail = false;
    for (ClaimId id : resolve_claims(claim_token)) {
      CongruenceCheck rec = dispatch_check(id, ca);
      print_record(rec, c_json);
      any_fail = any_fail || rec.verdict == Verdict::Fail;
    }
    exit_code = any_fail ? 1 : 0;
  });

  // sweep
  auto* sweep = app.add_subcommand("sweep", "run checkers over a parameter grid");
  std::string config_path;
  sweep->add_option("--config", config_path, "key = value config file");
  static const std::vector<std::string> kKeys = {
      "prime-min", "prime-max", "claims", "alpha-num-max", "alpha-den-max",
      "z-set",     "b-min",     "b-max",  "n-min",         "n-max",
      "series-order", "k-max",  "workers", "out",          "format"};
  struct KeyFlag {
    std::string key;
    std::string value;
    CLI::Option* opt = nullptr;
  };
  std::vector<KeyFlag> flags;
  flags.reserve(kKeys.size());
  for (const std::string& key : kKeys) {
    flags.push_back({key, "", nullptr});
    flags.back().opt = sweep->add_option("--" + key, flags.back().value);
  }
  sweep->callback([&] {
    SweepConfig cfg =
        config_path.empty() ? default_sweep_config() : load_config_file(config_path);
    for (const KeyFlag& f : flags)
      if (f.opt->count() > 0) set_config_key(cfg, f.key, f.value);
    Report rep = run_sweep(cfg);
    print_sweep_summary(rep);
    if (!cfg.output_path.empty())
      std::cout << "report written to " << cfg.output_path << "\n";
    exit_code = rep.any_fail() ? 1 : 0;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
