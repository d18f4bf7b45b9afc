#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "kleinzeta/hecke.hpp"
#include "kleinzeta/report.hpp"

using namespace kleinzeta;
using nlohmann::json;

namespace {

std::string temp_cache(const char* tag) {
  auto p = std::filesystem::temp_directory_path() / (std::string("kz-test-") + tag + ".jsonl");
  std::filesystem::remove(p);
  return p.string();
}

}  // namespace

TEST_CASE("report status is pass iff every check passes") {
  VerificationReport r;
  r.command = "demo";
  CHECK(r.passed());
  r.add("a", true, 1, 1);
  CHECK(r.passed());
  r.add("b", CheckStatus::Inconclusive, 1, nullptr);
  CHECK_FALSE(r.passed());
  VerificationReport s;
  s.add("c", false, 1, 2);
  CHECK_FALSE(s.passed());
}

TEST_CASE("json round trip") {
  VerificationReport r;
  r.command = "demo";
  r.config["p"] = 3;
  r.add("x", true, "40", "40", 1.5);
  r.add("y", false, json::array({1, 2}), json::array({1, 3}));
  json j = r.to_json();
  CHECK(j["status"] == "fail");
  CHECK(j["checks"][0]["elapsed_ms"] == 1.5);
  VerificationReport back = report_from_json(j);
  CHECK(back.to_json() == j);
  CHECK_FALSE(r.to_json(false)["checks"][0].contains("elapsed_ms"));
}

TEST_CASE("text output") {
  VerificationReport r;
  r.command = "demo";
  r.add("first", true, 1, 1);
  std::string t = r.to_text(false);
  CHECK(t.find("first") != std::string::npos);
  CHECK(t.find("1/1 checks pass: PASS") != std::string::npos);
  CHECK(t.find(" ms") == std::string::npos);
}

TEST_CASE("append prefixes check names") {
  VerificationReport a, b;
  a.command = "all";
  b.command = "part";
  b.add("inner", true, 0, 0);
  b.data["k"] = 1;
  a.append(b);
  REQUIRE(a.checks.size() == 1);
  CHECK(a.checks[0].name == "part: inner");
  CHECK(a.data["part"]["k"] == 1);
}

TEST_CASE("count cache stores and finds by (p, k, algorithm)") {
  std::string path = temp_cache("cache");
  {
    CountCache c(path);
    CHECK_FALSE(c.lookup(3, 1, CountAlgorithm::QuadFiber));
    c.store(3, 1, CountAlgorithm::QuadFiber, 40);
    c.store(23, 5, CountAlgorithm::CharSum, BigInt("266635276859338633185"));
  }
  CountCache c(path);
  CHECK(c.lookup(3, 1, CountAlgorithm::QuadFiber) == BigInt(40));
  CHECK_FALSE(c.lookup(3, 1, CountAlgorithm::Naive));
  CHECK(c.lookup(23, 5, CountAlgorithm::CharSum) == BigInt("266635276859338633185"));
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  json j = json::parse(line);
  CHECK(j["p"] == 3);
  CHECK(j["algorithm"] == "quad-fiber");
  CHECK(j["version"] == tool_version());
  std::filesystem::remove(path);
}

TEST_CASE("cache ignores garbage lines") {
  std::string path = temp_cache("garbage");
  {
    std::ofstream out(path);
    out << "not json\n{\"p\":5,\"k\":1,\"count\":156,\"algorithm\":\"quad-fiber\",\"version\":\"0\"}\n";
  }
  CountCache c(path);
  CHECK(c.lookup(5, 1, CountAlgorithm::QuadFiber) == BigInt(156));
  std::filesystem::remove(path);
}

TEST_CASE("cached_count reuses the cache") {
  HarnessOptions o;
  o.cache_path = temp_cache("reuse");
  CachedCount a = cached_count(5, 1, o);
  CHECK(a.count == 156);
  CHECK_FALSE(a.from_cache);
  CachedCount b = cached_count(5, 1, o);
  CHECK(b.from_cache);
  CHECK(b.count == 156);
  o.use_cache = false;
  CHECK_FALSE(cached_count(5, 1, o).from_cache);
  std::filesystem::remove(o.cache_path);
}

TEST_CASE("reference factor") {
  LocalFactor l = reference_l3_factor();
  CHECK(l == h3_local_factor_product(3));
  CHECK(l.coeffs[5] == 7533);
}

TEST_CASE("harness commands") {
  HarnessOptions o;
  o.use_cache = false;
  VerificationReport c = run_count(3, 1, o);
  CHECK(c.passed());
  CHECK(c.data["count"] == 40);
  VerificationReport t = run_trace_sweep(13, o);
  CHECK(t.passed());
  CHECK(t.checks.size() == 5);
  CHECK(t.data["skipped_bad_primes"] == json::array({11}));
  CHECK_THROWS_AS(run_trace_sweep(1, o), std::invalid_argument);
  VerificationReport h = run_hecke_table(100, "", o);
  CHECK(h.passed());
  ScanBox box;
  box.radius = box.x_val_radius = 2;
  VerificationReport th = run_theta_support(3, box, {CosetType::III});
  CHECK(th.passed());
  CHECK(th.checks.size() == 1);
  CHECK_THROWS_AS(run_theta_support(4, box, {CosetType::I}), std::invalid_argument);
}
