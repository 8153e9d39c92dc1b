#include "hypercong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>

#include "hypercong/claims.hpp"
#include "hypercong/errors.hpp"
#include "hypercong/gamma.hpp"
#include "hypercong/residue.hpp"
#include "hypercong/version.hpp"

namespace hypercong {

namespace {

using json = nlohmann::json;

std::string iso_utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_csv_row(std::ostream& out, const CongruenceCheck& rec) {
  out << claim_name(rec.claim) << ',' << rec.p << ',' << rec.e << ','
      << rec.params_str() << ',' << (rec.hypothesis_met ? "met" : "unmet")
      << ',' << rec.achieved.str() << ',' << rec.required.str() << ','
      << verdict_name(rec.verdict) << "\n";
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long parse_long(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("bad integer for " + key + ": '" + value + "'");
  }
}

// Minimum admissible prime per claim; 0 marks the prime-free claim.
long claim_min_prime(ClaimId id) {
  switch (id) {
    case ClaimId::BinomIds:
      return 0;
    case ClaimId::Cor1_3:
    case ClaimId::Conj1_2:
    case ClaimId::Eq1_9:
      return 2;
    case ClaimId::LemTauraso:
    case ClaimId::Case2Exp:
      return 5;
    default:
      return 3;
  }
}

bool claim_needs_odd(ClaimId id) { return claim_min_prime(id) >= 3; }

struct Cell {
  ClaimId claim;
  long p;  // 0 for prime-free claims
};

std::vector<Cell> build_cells(const SweepConfig& cfg) {
  std::vector<Cell> cells;
  for (ClaimId claim : cfg.claims) {
    long minp = claim_min_prime(claim);
    if (minp == 0) {
      cells.push_back({claim, 0});
      continue;
    }
    for (long p : primes_in_range(std::max(cfg.prime_min, minp), cfg.prime_max)) {
      if (claim_needs_odd(claim) && p == 2) continue;
      cells.push_back({claim, p});
    }
  }
  return cells;
}

std::vector<Rat> p_integral_subset(const std::vector<Rat>& values, long p) {
  std::vector<Rat> out;
  for (const Rat& v : values)
    if (is_p_integral(v, p)) out.push_back(v);
  return out;
}

template <typename F>
void timed(std::vector<CongruenceCheck>& out, F&& run) {
  auto t0 = std::chrono::steady_clock::now();
  CongruenceCheck c = run();
  c.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                t0)
          .count();
  out.push_back(std::move(c));
}

std::vector<CongruenceCheck> run_cell(const SweepConfig& cfg, const Cell& cell) {
  std::vector<CongruenceCheck> out;
  const long p = cell.p;
  switch (cell.claim) {
    case ClaimId::ThmMain:
    case ClaimId::Eq1_3: {
      auto zs = p_integral_subset(cfg.z_set, p);
      for (const Rat& alpha :
           rational_lattice(cfg.alpha_num_max, cfg.alpha_den_max, p))
        for (const Rat& z : zs)
          timed(out, [&] {
            return cell.claim == ClaimId::ThmMain
                       ? check_theorem_main(p, alpha, z)
                       : check_clausen_congruence(p, alpha, z);
          });
      break;
    }
    case ClaimId::Cor1_3:
      for (long b = cfg.b_min; b <= cfg.b_max; ++b)
        timed(out, [&] { return check_corollary_b(p, b); });
      break;
    case ClaimId::Cor1_4A:
    case ClaimId::Cor1_4B:
    case ClaimId::Cor1_4C:
    case ClaimId::Cor1_4D:
      timed(out, [&] { return check_special_case(p, cell.claim); });
      break;
    case ClaimId::Eq1_9:
      for (long b = cfg.b_min; b <= cfg.b_max; ++b) {
        if (b % p == 0) continue;
        timed(out, [&] { return check_identity_1_9(p, b); });
      }
      break;
    case ClaimId::BinomIds:
      timed(out, [&] { return check_binomial_product_identities(cfg.k_max); });
      break;
    case ClaimId::LemTauraso:
      for (const Rat& x : p_integral_subset(cfg.z_set, p))
        timed(out, [&] { return check_lemma_tauraso(p, x); });
      break;
    case ClaimId::LemMaoPan: {
      ResidueRing ring(p, 2);
      GammaContext ctx(ring);
      auto lattice = rational_lattice(cfg.alpha_num_max, cfg.alpha_den_max, p);
      for (const Rat& alpha : lattice)
        for (const Rat& beta : lattice)
          timed(out, [&] { return check_lemma_maopan(ctx, alpha, beta); });
      break;
    }
    case ClaimId::Lem2_3:
      for (long b = std::max(2L, cfg.b_min); b <= cfg.b_max; ++b)
        timed(out, [&] { return check_lemma_2_3(p, b); });
      break;
    case ClaimId::Case2Exp: {
      auto vals = p_integral_subset(cfg.z_set, p);
      for (const Rat& t : vals)
        for (const Rat& z : vals)
          timed(out, [&] { return check_case2_expansions(p, t, z); });
      break;
    }
    case ClaimId::Conj1_2:
      for (long b = cfg.b_min; b <= cfg.b_max; ++b)
        for (long n = cfg.n_min; n <= cfg.n_max; ++n)
          timed(out, [&] { return explore_conjecture(p, b, n); });
      break;
    case ClaimId::GammaShift:
    case ClaimId::GammaReflect: {
      ResidueRing ring(p, 2);
      GammaContext ctx(ring);
      for (const Rat& x :
           rational_lattice(cfg.alpha_num_max, cfg.alpha_den_max, p))
        timed(out, [&] {
          return cell.claim == ClaimId::GammaShift
                     ? check_gamma_shift(x, ctx)
                     : check_gamma_reflection(x, ctx);
        });
      break;
    }
  }
  return out;
}

// Serializes records to disk as cells complete, in cell order, so partial
// results survive a crash and the bytes do not depend on the worker count.
class ReportSink {
 public:
  ReportSink(const SweepConfig& cfg, const std::string& version,
             const std::string& generated_at) {
    if (cfg.output_path.empty()) return;
    json_ = cfg.format == "json";
    out_.open(cfg.output_path);
    if (!out_) throw IoError("cannot open output path: " + cfg.output_path);
    if (json_) {
      out_ << "{\n\"version\": " << json(version) << ",\n\"generated_at\": "
           << json(generated_at) << ",\n\"config\": " << config_to_json(cfg)
           << ",\n\"records\": [";
    } else {
      out_ << kCsvHeader << "\n";
    }
    active_ = true;
  }

  void write_records(const std::vector<CongruenceCheck>& recs) {
    if (!active_) return;
    for (const CongruenceCheck& rec : recs) {
      if (json_) {
        out_ << (first_ ? "\n" : ",\n") << record_to_json(rec).dump();
        first_ = false;
      } else {
        write_csv_row(out_, rec);
      }
    }
    out_.flush();
  }

  void finalize(const json& summary) {
    if (!active_) return;
    if (json_) out_ << "\n],\n\"summary\": " << summary.dump() << "\n}\n";
    out_.flush();
    if (!out_) throw IoError("failed writing report");
    active_ = false;
  }

 private:
  std::ofstream out_;
  bool json_ = true;
  bool first_ = true;
  bool active_ = false;
};

json summary_to_json(const std::map<std::string, ClaimTally>& summary) {
  json s = json::object();
  for (const auto& [claim, tally] : summary)
    s[claim] = {{"pass", tally.pass}, {"fail", tally.fail},
                {"skipped", tally.skipped}};
  return s;
}

}  // namespace

SweepConfig default_sweep_config() {
  SweepConfig cfg;
  cfg.claims = all_claims();
  cfg.z_set = {Rat(0),      Rat(1),       Rat(-1),     Rat(2),
               Rat(-2),     rat(1, 2),    rat(-1, 2),  rat(1, 3)};
  return cfg;
}

void set_config_key(SweepConfig& cfg, const std::string& key,
                    const std::string& value) {
  if (key == "prime-min") {
    cfg.prime_min = parse_long(key, value);
  } else if (key == "prime-max") {
    cfg.prime_max = parse_long(key, value);
  } else if (key == "claims") {
    cfg.claims.clear();
    if (value == "all") {
      cfg.claims = all_claims();
    } else {
      for (const std::string& name : split(value, ',')) {
        auto id = claim_from_name(trim(name));
        if (!id) throw ConfigError("unknown claim id '" + trim(name) + "'");
        cfg.claims.push_back(*id);
      }
    }
  } else if (key == "alpha-num-max") {
    cfg.alpha_num_max = parse_long(key, value);
  } else if (key == "alpha-den-max") {
    cfg.alpha_den_max = parse_long(key, value);
  } else if (key == "z-set") {
    cfg.z_set.clear();
    for (const std::string& item : split(value, ','))
      cfg.z_set.push_back(parse_rational(trim(item)));
  } else if (key == "b-min") {
    cfg.b_min = parse_long(key, value);
  } else if (key == "b-max") {
    cfg.b_max = parse_long(key, value);
  } else if (key == "n-min") {
    cfg.n_min = parse_long(key, value);
  } else if (key == "n-max") {
    cfg.n_max = parse_long(key, value);
  } else if (key == "series-order") {
    cfg.series_order = parse_long(key, value);
  } else if (key == "k-max") {
    cfg.k_max = parse_long(key, value);
  } else if (key == "workers") {
    cfg.workers = static_cast<int>(parse_long(key, value));
  } else if (key == "out") {
    cfg.output_path = value;
  } else if (key == "format") {
    cfg.format = value;
  } else {
    throw ConfigError("unknown config key '" + key + "'");
  }
}

SweepConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  SweepConfig cfg = default_sweep_config();
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) +
                        ": expected key = value");
    set_config_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return cfg;
}

void validate_config(const SweepConfig& cfg) {
  if (cfg.claims.empty()) throw ConfigError("claims must be nonempty");
  if (cfg.prime_min > cfg.prime_max)
    throw ConfigError("prime-min exceeds prime-max");
  if (cfg.workers < 1) throw ConfigError("workers must be >= 1");
  if (cfg.alpha_num_max < 0 || cfg.alpha_den_max < 1)
    throw ConfigError("alpha lattice bounds out of range");
  if (cfg.b_min < 1 || cfg.b_min > cfg.b_max) throw ConfigError("bad b range");
  if (cfg.n_min < 1 || cfg.n_min > cfg.n_max) throw ConfigError("bad n range");
  if (cfg.series_order < 0 || cfg.series_order > 200)
    throw ConfigError("series-order out of range");
  if (cfg.k_max < 0) throw ConfigError("k-max must be >= 0");
  if (cfg.format != "json" && cfg.format != "csv")
    throw ConfigError("format must be json or csv");
}

bool Report::any_fail() const {
  return std::any_of(records.begin(), records.end(), [](const auto& r) {
    return r.verdict == Verdict::Fail;
  });
}

std::vector<Rat> rational_lattice(long num_max, long den_max, long p) {
  std::vector<Rat> out;
  for (long s = 1; s <= den_max; ++s) {
    if (p != 0 && s % p == 0) continue;
    for (long r = -num_max; r <= num_max; ++r) {
      if (std::gcd(std::abs(r), s) != 1) continue;
      out.push_back(rat(r, s));
    }
  }
  return out;
}

Report run_sweep(const SweepConfig& config) {
  validate_config(config);
  const std::vector<Cell> cells = build_cells(config);

  Report rep;
  rep.version = kVersion;
  rep.generated_at = iso_utc_now();
  rep.config = config;

  ReportSink sink(config, rep.version, rep.generated_at);
  std::vector<std::vector<CongruenceCheck>> results(cells.size());
  std::vector<char> done(cells.size(), 0);
  std::atomic<std::size_t> next{0};
  std::mutex flush_mu;
  std::size_t flushed = 0;
  std::mutex err_mu;
  std::exception_ptr err;

  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= cells.size()) return;
      try {
        results[i] = run_cell(config, cells[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        return;
      }
      std::lock_guard<std::mutex> lock(flush_mu);
      done[i] = 1;
      while (flushed < cells.size() && done[flushed]) {
        sink.write_records(results[flushed]);
        ++flushed;
      }
    }
  };

  const auto nthreads = std::max<std::size_t>(
      1, std::min<std::size_t>(static_cast<std::size_t>(config.workers),
                               cells.size()));
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);

  for (auto& cell_records : results)
    for (auto& rec : cell_records) rep.records.push_back(std::move(rec));
  for (const CongruenceCheck& rec : rep.records) {
    ClaimTally& tally = rep.summary[claim_name(rec.claim)];
    switch (rec.verdict) {
      case Verdict::Pass:
        ++tally.pass;
        break;
      case Verdict::Fail:
        ++tally.fail;
        if (tally.first_fail.empty())
          tally.first_fail = "p=" + std::to_string(rec.p) +
                             (rec.params.empty() ? "" : ";" + rec.params_str());
        break;
      case Verdict::Skipped:
        ++tally.skipped;
        break;
    }
  }
  sink.finalize(summary_to_json(rep.summary));
  return rep;
}

json config_to_json(const SweepConfig& cfg) {
  json claims = json::array();
  for (ClaimId id : cfg.claims) claims.push_back(claim_name(id));
  json zs = json::array();
  for (const Rat& z : cfg.z_set) zs.push_back(to_string(z));
  return {{"prime_min", cfg.prime_min},
          {"prime_max", cfg.prime_max},
          {"claims", claims},
          {"alpha_num_max", cfg.alpha_num_max},
          {"alpha_den_max", cfg.alpha_den_max},
          {"z_set", zs},
          {"b_min", cfg.b_min},
          {"b_max", cfg.b_max},
          {"n_min", cfg.n_min},
          {"n_max", cfg.n_max},
          {"series_order", cfg.series_order},
          {"k_max", cfg.k_max},
          {"workers", cfg.workers},
          {"out", cfg.output_path},
          {"format", cfg.format}};
}

json record_to_json(const CongruenceCheck& rec) {
  json params = json::object();
  for (const auto& [k, v] : rec.params) params[k] = v;
  json j = {{"claim_id", claim_name(rec.claim)},
            {"inputs", {{"p", rec.p}, {"e", rec.e}, {"params", params}}},
            {"hypothesis_status", rec.hypothesis_met ? "met" : "unmet"},
            {"achieved_valuation", rec.achieved.str()},
            {"verdict", verdict_name(rec.verdict)},
            {"elapsed_ms", rec.elapsed_ms}};
  if (rec.required.kind == ValuationResult::Kind::Exact)
    j["required_valuation"] = rec.required.value;
  else
    j["required_valuation"] = rec.required.str();
  if (!rec.hypothesis_met) j["reason"] = rec.reason;
  if (rec.claim == ClaimId::Conj1_2) j["exploratory"] = rec.exploratory;
  return j;
}

json report_to_json(const Report& rep) {
  json records = json::array();
  for (const CongruenceCheck& rec : rep.records)
    records.push_back(record_to_json(rec));
  return {{"version", rep.version},
          {"generated_at", rep.generated_at},
          {"config", config_to_json(rep.config)},
          {"records", records},
          {"summary", summary_to_json(rep.summary)}};
}

const char* const kCsvHeader =
    "claim_id,p,e,params,hypothesis_status,achieved_valuation,"
    "required_valuation,verdict";

void write_report_csv(const Report& rep, std::ostream& out) {
  out << kCsvHeader << "\n";
  for (const CongruenceCheck& rec : rep.records) write_csv_row(out, rec);
}

}  // namespace hypercong
