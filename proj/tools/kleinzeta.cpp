// kleinzeta: batch verification harness
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kleinzeta/report.hpp"

using namespace kleinzeta;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

int emit(const VerificationReport& rep, const std::string& format, bool timing) {
  if (format == "json")
    std::cout << rep.to_json(timing).dump(2) << "\n";
  else
    std::cout << rep.to_text(timing);
  return rep.passed() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Klein cubic threefold identities"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool no_timing = false, no_cache = false;
  unsigned threads = 0;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--no-timing", no_timing, "omit elapsed times (byte-stable output)");
  app.add_flag("--no-cache", no_cache, "do not read or write the count cache");
  app.add_option("--threads", threads, "worker threads, 0 = hardware concurrency");

  auto* count = app.add_subcommand("count", "count points of X over F_{p^k}");
  std::uint64_t cp = 0;
  unsigned ck = 1;
  std::string calg = "auto";
  count->add_option("--p", cp, "prime")->required();
  count->add_option("--k", ck, "extension degree")->required()->check(CLI::Range(1u, 40u));
  count->add_option("--algorithm", calg, "auto|quad-fiber|char-sum|direct|naive")
      ->check(CLI::IsMember({"auto", "quad-fiber", "char-sum", "direct", "naive"}));

  auto* l3 = app.add_subcommand("verify-l3", "local factor at p = 3 by counting and by Hecke characters");

  auto* sweep = app.add_subcommand("trace-sweep", "compare #X(F_p) with the trace prediction");
  long smax = 100;
  sweep->add_option("--max", smax, "largest prime")->required();

  auto* hecke = app.add_subcommand("hecke-table", "a_p table for the CM forms");
  long hmax = 100;
  std::string hout;
  hecke->add_option("--max", hmax, "largest prime")->required();
  hecke->add_option("--out", hout, "CSV output path");

  auto* coh = app.add_subcommand("cohomology", "Griffiths-Dwork checks on H^3");

  auto* theta = app.add_subcommand("theta-support", "coset support scan");
  long tp = 11;
  int tbox = 4;
  std::string ttype = "all";
  bool no_whittaker = false;
  theta->add_option("--p", tp, "odd prime");
  theta->add_option("--box", tbox, "radius for m, n, r and the valuation of x")->check(CLI::Range(0, 12));
  theta->add_option("--type", ttype, "I|II|III|IV|all")->check(CLI::IsMember({"I", "II", "III", "IV", "all"}));
  theta->add_flag("--no-whittaker-support", no_whittaker, "scan without the new-vector support condition");

  auto* report = app.add_subcommand("report", "run every suite and write the JSON report");
  std::string rjson;
  report->add_option("--json", rjson, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  HarnessOptions opt;
  opt.threads = threads;
  opt.use_cache = !no_cache;
  const bool timing = !no_timing;

  try {
    if (*count) {
      if (!is_prime(cp)) throw std::invalid_argument("--p must be prime");
      opt.algorithm = parse_count_algorithm(calg);
      return emit(run_count(cp, ck, opt), format, timing);
    }
    if (*l3) return emit(run_verify_l3(opt), format, timing);
    if (*sweep) return emit(run_trace_sweep(smax, opt), format, timing);
    if (*hecke) return emit(run_hecke_table(hmax, hout, opt), format, timing);
    if (*coh) return emit(run_cohomology(), format, timing);
    if (*theta) {
      ScanBox box;
      box.radius = tbox;
      box.x_val_radius = tbox;
      box.threads = threads;
      box.whittaker_support = !no_whittaker;
      std::vector<CosetType> types;
      if (ttype == "all")
        types = {CosetType::I, CosetType::II, CosetType::III, CosetType::IV};
      else
        types = {parse_coset_type(ttype)};
      return emit(run_theta_support(tp, box, types), format, timing);
    }
    if (*report) {
      VerificationReport rep = run_full(opt);
      std::ofstream out(rjson);
      if (!out) throw std::invalid_argument("cannot write " + rjson);
      out << rep.to_json(timing).dump(2) << "\n";
      return emit(rep, format, timing);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "kleinzeta: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "kleinzeta: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "kleinzeta: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitConfig;
}
