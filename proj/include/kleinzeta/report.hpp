#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "kleinzeta/counting.hpp"
#include "kleinzeta/lfunc.hpp"
#include "kleinzeta/thetasupp.hpp"

namespace kleinzeta {

std::string tool_version();

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);
CheckStatus parse_check_status(const std::string& s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Inconclusive;
  nlohmann::json expected;
  nlohmann::json actual;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string command;
  std::string version = tool_version();
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();  // command-specific payload

  Check& add(std::string name, bool ok, nlohmann::json expected, nlohmann::json actual, double elapsed_ms = 0);
  Check& add(std::string name, CheckStatus st, nlohmann::json expected, nlohmann::json actual, double elapsed_ms = 0);
  void append(const VerificationReport& other);  // checks prefixed by other.command
  bool passed() const;                           // every check is pass
  nlohmann::json to_json(bool timing = true) const;
  std::string to_text(bool timing = true) const;
};

VerificationReport report_from_json(const nlohmann::json& j);

// JSON-lines cache of point counts keyed on (p, k, algorithm)
class CountCache {
 public:
  explicit CountCache(std::string path);
  static std::string default_path();  // $KLEINZETA_CACHE or ./.kleinzeta-cache.jsonl
  std::optional<BigInt> lookup(std::uint64_t p, unsigned k, CountAlgorithm a) const;
  void store(std::uint64_t p, unsigned k, CountAlgorithm a, const BigInt& count);
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  struct Entry {
    std::uint64_t p;
    unsigned k;
    std::string algorithm;
    BigInt count;
  };
  std::vector<Entry> entries_;
};

struct HarnessOptions {
  unsigned threads = 0;
  CountAlgorithm algorithm = CountAlgorithm::Auto;
  bool use_cache = true;
  std::string cache_path;  // empty: CountCache::default_path()
};

struct CachedCount {
  BigInt count;
  CountAlgorithm algorithm = CountAlgorithm::Auto;  // resolved
  bool from_cache = false;
  double elapsed_ms = 0;
};

CachedCount cached_count(std::uint64_t p, unsigned k, const HarnessOptions& opt);

// Reference factor (1+3x+27x^2)(1-3x-18x^2+...+531441x^8) at p = 3
LocalFactor reference_l3_factor();

VerificationReport run_count(std::uint64_t p, unsigned k, const HarnessOptions& opt);
VerificationReport run_verify_l3(const HarnessOptions& opt);
VerificationReport run_trace_sweep(long max_p, const HarnessOptions& opt);
// writes the CSV to out_path when non-empty
VerificationReport run_hecke_table(long max_p, const std::string& out_path, const HarnessOptions& opt);
VerificationReport run_cohomology();
VerificationReport run_theta_support(long p, const ScanBox& box, const std::vector<CosetType>& types);
VerificationReport run_full(const HarnessOptions& opt);

}  // namespace kleinzeta
