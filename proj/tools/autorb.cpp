#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "autorb/catalog.hpp"
#include "autorb/errors.hpp"
#include "autorb/harness.hpp"
#include "autorb/orbits.hpp"
#include "autorb/perm_io.hpp"
#include "autorb/reporting.hpp"
#include "autorb/structure.hpp"
#include "autorb/version.hpp"

namespace {

// exit codes: 0 ok, 1 verification failure, 2 parse error, 3 capacity,
// 4 search budget exceeded
constexpr int kExitOk = 0;
constexpr int kExitHarnessFail = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitBudget = 4;

struct Options {
  std::size_t max_order = autorb::ElementTable::kDefaultCap;
  unsigned long long budget = 100'000'000ull;
  unsigned workers = 1;
  bool json = false;
  std::string cache_path;
  bool stretch = false;
};

struct GroupInput {
  std::string label;
  std::optional<autorb::GroupSpec> spec;  // set for spec strings, not files
  autorb::PermutationGroup group;
};

GroupInput load_group(const std::string& arg, const Options& opt) {
  if (std::filesystem::exists(arg)) {
    autorb::GeneratorFile file = autorb::read_generator_file(std::filesystem::path(arg));
    return GroupInput{arg, std::nullopt,
                      autorb::PermutationGroup(std::move(file.generators))};
  }
  autorb::GroupSpec spec = autorb::parse_spec(arg);
  std::string label = spec.canonical();
  return GroupInput{std::move(label), spec, autorb::realize(spec, opt.max_order)};
}

autorb::GroupReport compute_report(const GroupInput& input, const Options& opt) {
  autorb::SearchLimits limits{opt.max_order, opt.budget, opt.workers};
  autorb::ElementTable table = autorb::ElementTable::enumerate(input.group, opt.max_order);
  autorb::ConjugacyPartition classes = autorb::conjugacy_classes(table);
  autorb::OrbitPartition partition = autorb::automorphism_orbits(table, limits);
  return autorb::make_group_report(input.label, table, classes, partition);
}

// Runs the computation behind the single-file result cache when one is
// configured; only spec-string inputs are cacheable.
autorb::GroupReport cached_report(const std::string& arg, const Options& opt) {
  GroupInput input = load_group(arg, opt);
  if (opt.cache_path.empty() || !input.spec.has_value()) return compute_report(input, opt);

  autorb::ResultCache cache{std::filesystem::path(opt.cache_path)};
  if (auto hit = cache.lookup(input.label)) return *hit;
  autorb::GroupReport report = compute_report(input, opt);
  cache.store(input.label, report);
  cache.save();
  return report;
}

int cmd_omega(const std::string& arg, const Options& opt) {
  autorb::GroupReport report = cached_report(arg, opt);
  if (opt.json) {
    nlohmann::ordered_json out;
    out["group"] = report.group;
    out["order"] = report.order;
    out["omega"] = report.omega;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << report.omega << '\n';
  }
  return kExitOk;
}

int cmd_orbits(const std::string& arg, const Options& opt) {
  autorb::GroupReport report = cached_report(arg, opt);
  if (opt.json)
    std::cout << autorb::group_report_json(report).dump(2) << '\n';
  else
    std::cout << autorb::group_report_table(report);
  return kExitOk;
}

int cmd_verify(const Options& opt) {
  autorb::HarnessConfig config;
  config.max_order = opt.max_order;
  config.node_budget = opt.budget;
  config.workers = opt.workers;
  config.stretch = opt.stretch;
  autorb::VerificationReport report = autorb::run_all(config);
  if (opt.json)
    std::cout << autorb::report_json(report, config).dump(2) << '\n';
  else
    std::cout << autorb::report_table(report);
  return report.all_passed() ? kExitOk : kExitHarnessFail;
}

int cmd_catalog(const Options& opt) {
  std::cout << "group spec grammar: atom ( \"x\" atom )*\n";
  std::cout << "atoms (names are case-insensitive):\n";
  std::cout << "  C(n): cyclic group of order n, n >= 1\n";
  std::cout << "  EA(p,k): elementary abelian group of order p^k, p prime, k >= 1\n";
  std::cout << "  D(m): dihedral group of order 2m, m >= 3\n";
  std::cout << "  Q8: quaternion group of order 8\n";
  std::cout << "  Sym(n): symmetric group on n points, n >= 1\n";
  std::cout << "  Alt(n): alternating group on n points, n >= 1\n";
  std::cout << "  PSL(2,q): q in {4,5,7,8,9,11}\n";
  std::cout << "  SL(2,q): q in {4,5}\n";
  std::cout << "  ASL(2,4): affine group SL(2,F4) acting on F4^2, order 960\n";
  std::cout << "  Heis(p,n): p prime, p^(2n+1) <= max_order\n";
  std::cout << "current max_order: " << opt.max_order << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-group automorphism orbit calculator"};
  app.set_version_flag("--version", std::string(autorb::kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--max-order", opt.max_order, "largest group order to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", opt.budget, "backtracking node budget per pair search")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", opt.workers, "concurrent pair searches")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", opt.json, "emit JSON instead of tables");
  app.add_option("--cache", opt.cache_path, "result cache file");
  app.add_flag("--stretch", opt.stretch, "include long-running claims");

  std::string target;
  CLI::App* omega_cmd = app.add_subcommand("omega", "print the number of automorphism orbits");
  omega_cmd->add_option("group", target, "group spec or generator file")->required();
  CLI::App* orbits_cmd = app.add_subcommand("orbits", "print the orbit table");
  orbits_cmd->add_option("group", target, "group spec or generator file")->required();
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the claim verification suite");
  CLI::App* catalog_cmd = app.add_subcommand("catalog", "list supported group atoms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (omega_cmd->parsed()) return cmd_omega(target, opt);
    if (orbits_cmd->parsed()) return cmd_orbits(target, opt);
    if (verify_cmd->parsed()) return cmd_verify(opt);
    if (catalog_cmd->parsed()) return cmd_catalog(opt);
  } catch (const autorb::CapacityError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const autorb::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const autorb::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitHarnessFail;
  }
  return kExitOk;
}
