#include "infomask/cli.h"

#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "infomask/coding_sim.h"
#include "infomask/io.h"
#include "infomask/multiletter.h"
#include "infomask/region_star.h"

namespace infomask {
namespace {

struct Options {
  std::string dist;
  std::string channel;
  std::string out;
  std::string format = "csv";
  double rx = 0.0;
  double ry = 0.0;
  double delta_a = 0.0;
  double eps = 0.05;
  double tol = 0.02;
  int n = 1;
  int mx = 1;
  int my = 1;
  int trials = 0;
  int aux_size = 0;
  std::uint64_t seed = 0;
  SearchConfig search;
};

void AddRates(CLI::App* cmd, Options& o) {
  cmd->add_option("--rx", o.rx, "rate of the X encoder (bits/symbol)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--ry", o.ry, "rate of the Y encoder (bits/symbol)")
      ->required()
      ->check(CLI::NonNegativeNumber);
}

void AddSearch(CLI::App* cmd, Options& o) {
  cmd->add_option("--grid", o.search.grid_resolution, "simplex grid resolution K")
      ->capture_default_str();
  cmd->add_option("--samples", o.search.random_samples, "random channel samples")
      ->capture_default_str();
  cmd->add_option("--refine-steps", o.search.refine_steps, "local refinement steps")
      ->capture_default_str();
  cmd->add_option("--refine-step-size", o.search.refine_step_size,
                  "local refinement perturbation size")
      ->capture_default_str();
  cmd->add_option("--aux-size", o.aux_size, "auxiliary alphabet size (0: default)")
      ->check(CLI::NonNegativeNumber);
}

void AddDist(CLI::App* cmd, Options& o) {
  cmd->add_option("--dist", o.dist, "distribution JSON file")->required();
}

void AddSeed(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "random seed")->capture_default_str();
}

// Writes to --out when given, else to `out`.
void Emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
  } else {
    WriteFileAtomic(o.out, text);
  }
}

SearchConfig Search(const Options& o) {
  SearchConfig cfg = o.search;
  cfg.seed = o.seed;
  cfg.Validate();
  return cfg;
}

CurveOptions Curve(const Options& o) {
  CurveOptions c;
  c.aux_size = o.aux_size;
  return c;
}

int RunCurve(const Options& o, bool mirrored, std::ostream& out) {
  const JointPmf j = ParseDistribution(ReadFile(o.dist));
  const RatePair r{o.rx, o.ry};
  const TradeoffCurve curve = mirrored ? MaCurve(j, r, Search(o), Curve(o))
                                       : AmCurve(j, r, Search(o), Curve(o));
  Emit(o, CurveToCsv(curve, mirrored), out);
  return kExitOk;
}

int RunRegionStar(const Options& o, std::ostream& out) {
  const ExportFormat format = ParseExportFormat(o.format);
  const JointPmf j = ParseDistribution(ReadFile(o.dist));
  StarConfig cfg;
  cfg.curve = Search(o);
  cfg.cloud.seed = o.seed;
  cfg.curve_options = Curve(o);
  Emit(o, ExportRegion(StarRegion(j, RatePair{o.rx, o.ry}, cfg), format), out);
  return kExitOk;
}

int RunMaskingMin(const Options& o, std::ostream& out) {
  const JointPmf j = ParseDistribution(ReadFile(o.dist));
  const std::optional<double> m = RmMinMasking(j, RatePair{o.rx, o.ry}, Search(o), o.aux_size);
  out << (m ? FormatNumber(*m) : std::string("infeasible")) << "\n";
  return kExitOk;
}

int RunSimulate(const Options& o, std::ostream& out) {
  const JointPmf j = ParseDistribution(ReadFile(o.dist));
  const AuxChannel ch = ParseChannel(ReadFile(o.channel));
  const Codebook cb = BuildCodebook(j, ch, o.delta_a, o.eps, o.n, o.seed);
  out << ReportToJson(EvaluateExact(cb, j));
  return kExitOk;
}

int RunOracle(const Options& o, std::ostream& out) {
  const JointPmf j = ParseDistribution(ReadFile(o.dist));
  const Frontier f = o.trials > 0 ? RandomFrontier(j, o.n, o.mx, o.my, o.trials, o.seed)
                                  : ExhaustiveFrontier(j, o.n, o.mx, o.my);
  const RatePair r{std::log2(static_cast<double>(o.mx)) / o.n,
                   std::log2(static_cast<double>(o.my)) / o.n};
  const ContainmentReport check = CheckContainment(j, f.points, r, Search(o), Curve(o), o.tol);
  std::ostringstream verdict;
  verdict << "# verdict: " << (check.contained() ? "contained" : "violated")
          << " pairs=" << f.pairs_evaluated << " points=" << f.points.size()
          << " am_violations=" << check.am_violations
          << " ma_violations=" << check.ma_violations << " slack=" << FormatNumber(o.tol)
          << " rx=" << FormatNumber(r.rx) << " ry=" << FormatNumber(r.ry) << "\n";
  if (o.out.empty()) {
    out << PointsToCsv(f.points) << verdict.str();
  } else {
    WriteFileAtomic(o.out, PointsToCsv(f.points) + verdict.str());
    out << verdict.str();
  }
  return check.contained() ? kExitOk : kExitValidation;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Amplification and masking rate regions for two-encoder source coding",
               "infomask"};
  app.require_subcommand(1);
  Options o;

  CLI::App* curve_am = app.add_subcommand("curve-am", "minimum masking of Y versus amplification of X");
  CLI::App* curve_ma = app.add_subcommand("curve-ma", "minimum masking of X versus amplification of Y");
  for (CLI::App* cmd : {curve_am, curve_ma}) {
    AddDist(cmd, o);
    AddRates(cmd, o);
    AddSearch(cmd, o);
    AddSeed(cmd, o);
    cmd->add_option("--out", o.out, "output CSV (default: stdout)");
  }

  CLI::App* region = app.add_subcommand("region-star", "intersection of all single-letter regions");
  AddDist(region, o);
  AddRates(region, o);
  AddSearch(region, o);
  AddSeed(region, o);
  region->add_option("--out", o.out, "output file (default: stdout)");
  region->add_option("--format", o.format, "csv or json")->capture_default_str();

  CLI::App* masking = app.add_subcommand("masking-min", "least masking when X is fully revealed");
  AddDist(masking, o);
  AddRates(masking, o);
  AddSearch(masking, o);
  AddSeed(masking, o);

  CLI::App* simulate = app.add_subcommand("simulate", "binning and quantization code, evaluated exactly");
  AddDist(simulate, o);
  simulate->add_option("--channel", o.channel, "auxiliary channel JSON file")->required();
  simulate->add_option("--delta-a", o.delta_a, "target amplification (bits)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  simulate->add_option("--eps", o.eps, "typicality tolerance")->capture_default_str();
  simulate->add_option("--n", o.n, "blocklength")->required()->check(CLI::PositiveNumber);
  AddSeed(simulate, o);

  CLI::App* oracle = app.add_subcommand("oracle", "multi-letter points of deterministic encoder pairs");
  AddDist(oracle, o);
  oracle->add_option("--n", o.n, "blocklength")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--mx", o.mx, "X messages")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--my", o.my, "Y messages")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--trials", o.trials, "random pairs (0: exhaustive)")
      ->check(CLI::NonNegativeNumber);
  oracle->add_option("--slack", o.tol, "containment slack (bits)")->capture_default_str();
  oracle->add_option("--out", o.out, "output CSV (default: stdout)");
  AddSearch(oracle, o);
  AddSeed(oracle, o);

  std::vector<std::string> argv_storage{"infomask"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (curve_am->parsed()) return RunCurve(o, false, out);
    if (curve_ma->parsed()) return RunCurve(o, true, out);
    if (region->parsed()) return RunRegionStar(o, out);
    if (masking->parsed()) return RunMaskingMin(o, out);
    if (simulate->parsed()) return RunSimulate(o, out);
    if (oracle->parsed()) return RunOracle(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kSizeGuard ? kExitSizeGuard : kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  err << app.help();
  return kExitValidation;
}

}  // namespace infomask
