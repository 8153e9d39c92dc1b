#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "hypercong/check_record.hpp"
#include "hypercong/rational.hpp"

namespace hypercong {

struct SweepConfig {
  long prime_min = 3;
  long prime_max = 97;
  std::vector<ClaimId> claims;  // nonempty; see default_sweep_config()
  long alpha_num_max = 6;
  long alpha_den_max = 6;
  std::vector<Rat> z_set;
  long b_min = 1;
  long b_max = 12;
  long n_min = 1;
  long n_max = 3;
  long series_order = 30;
  long k_max = 40;
  int workers = 1;
  std::string output_path;
  std::string format = "json";  // "json" | "csv"
};

SweepConfig default_sweep_config();

// Plain key=value lines, '#' comments; keys match the CLI flag names.
SweepConfig load_config_file(const std::string& path);
void set_config_key(SweepConfig& cfg, const std::string& key,
                    const std::string& value);
void validate_config(const SweepConfig& cfg);  // ConfigError

struct ClaimTally {
  long pass = 0;
  long fail = 0;
  long skipped = 0;
  std::string first_fail;  // canonical inputs of the first failing record
};

struct Report {
  std::string version;
  std::string generated_at;
  SweepConfig config;
  std::vector<CongruenceCheck> records;
  std::map<std::string, ClaimTally> summary;

  bool any_fail() const;
};

// Runs every applicable (claim, input) cell. Deterministic record content
// and order for a fixed config, whatever the worker count; records stream
// to output_path as cells finish.
Report run_sweep(const SweepConfig& config);

nlohmann::json config_to_json(const SweepConfig& cfg);
nlohmann::json record_to_json(const CongruenceCheck& rec);
nlohmann::json report_to_json(const Report& rep);

extern const char* const kCsvHeader;
void write_report_csv(const Report& rep, std::ostream& out);

// Reduced fractions r/s with |r| <= num_max, 1 <= s <= den_max, p ∤ s
// (no filter when p = 0); deterministic order.
std::vector<Rat> rational_lattice(long num_max, long den_max, long p);

}  // namespace hypercong
