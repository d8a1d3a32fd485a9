// hexcount: count, cross-check and draw rhombus tilings of hexagons with
// three fixed border tiles.
//
// Exit codes: 0 ok, 1 disagreement or failed identity, 2 usage, 3 budget.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hexcount/closedform.hpp"
#include "hexcount/geometry.hpp"
#include "hexcount/oracle.hpp"
#include "hexcount/suite.hpp"
#include "hexcount/svg.hpp"
#include "hexcount/verify.hpp"

namespace {

using hexcount::ExactInt;
using hexcount::HexagonParams;
using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kDisagree = 1, kUsage = 2, kBudget = 3 };

struct Globals {
  bool json = false;
  std::uint64_t budget = hexcount::kDefaultBudget;
};

std::uint64_t budget_default() {
  if (const char* env = std::getenv("HEXCOUNT_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed HEXCOUNT_BUDGET='" << env << "'\n";
    }
  }
  return hexcount::kDefaultBudget;
}

void add_params(CLI::App* cmd, HexagonParams& p) {
  cmd->add_option("--a", p.a, "hexagon parameter a")->required();
  cmd->add_option("--b", p.b, "hexagon parameter b")->required();
  cmd->add_option("--c", p.c, "hexagon parameter c")->required();
  cmd->add_option("--r", p.r, "fixed tile position r (1..a+2)")->capture_default_str();
  cmd->add_option("--s", p.s, "fixed tile position s (1..b+2)")->capture_default_str();
  cmd->add_option("--t", p.t, "fixed tile position t (1..c+2)")->capture_default_str();
}

json params_json(const HexagonParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"r", p.r}, {"s", p.s}, {"t", p.t}};
}

json report_json(const hexcount::InstanceReport& rep) {
  json results = json::object();
  json notices = json::object();
  for (const auto& r : rep.results) {
    results[hexcount::to_string(r.method)] = r.value ? json(hexcount::to_decimal(*r.value)) : json(nullptr);
    if (!r.notice.empty()) notices[hexcount::to_string(r.method)] = r.notice;
  }
  json out = {{"params", params_json(rep.params)},
              {"results", results},
              {"agree", rep.agree()},
              {"budget_used", rep.budget_used},
              {"seconds", rep.seconds}};
  if (!notices.empty()) out["notices"] = notices;
  return out;
}

void print_report_text(const hexcount::InstanceReport& rep) {
  std::cout << hexcount::to_string(rep.params) << "\n";
  for (const auto& r : rep.results) {
    std::cout << "  " << hexcount::to_string(r.method) << ": ";
    if (r.value) {
      std::cout << *r.value;
    } else {
      std::cout << "skipped (" << r.notice << ")";
    }
    std::cout << "\n";
  }
  std::cout << "  agree: " << (rep.agree() ? "true" : "false") << "\n";
}

// ---- count ----

int cmd_count(const Globals& g, const HexagonParams& p, const std::vector<std::string>& method_names,
              const std::string& emit_path) {
  std::vector<hexcount::Method> methods;
  for (const auto& name : method_names) methods.push_back(hexcount::parse_method(name));
  hexcount::validate(p);
  auto rep = hexcount::run_methods(p, methods, {g.budget, 0});
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw CLI::ValidationError("--emit-families", "cannot open " + emit_path);
    hexcount::Budget budget(g.budget);
    try {
      hexcount::enumerate_path_families(p, budget, [&](const hexcount::PathFamily& f) {
        out << hexcount::format_family(f) << "\n";
      });
    } catch (const hexcount::ResourceError& e) {
      std::cerr << "emit-families: " << e.what() << "\n";
      return kBudget;
    }
  }
  if (g.json) {
    json out = {{"command", "count"}};
    out.update(report_json(rep));
    std::cout << out.dump(2) << "\n";
  } else {
    print_report_text(rep);
  }
  if (!rep.agree()) return kDisagree;
  if (rep.budget_exhausted()) return kBudget;
  return kOk;
}

// ---- propp ----

int cmd_propp(const Globals& g, int n) {
  if (n < 0) throw CLI::ValidationError("--n", "must be >= 0");
  const ExactInt value = hexcount::count_propp(n);
  const HexagonParams p{2 * n, 2 * n, 2 * n, n + 1, n + 1, n + 1};
  std::vector<hexcount::Method> methods{hexcount::Method::formula, hexcount::Method::det};
  std::string brute_notice;
  if (n <= 1) {
    methods.push_back(hexcount::Method::brute);
  } else {
    brute_notice = "brute force skipped for n > 1";
  }
  const auto rep = hexcount::run_methods(p, methods, {g.budget, 0});
  bool agree = rep.agree();
  for (const auto& r : rep.results)
    if (r.value && *r.value != value) agree = false;
  if (g.json) {
    json out = {{"command", "propp"}, {"n", n}, {"count", hexcount::to_decimal(value)}, {"check", report_json(rep)},
                {"agree", agree}};
    if (!brute_notice.empty()) out["notice"] = brute_notice;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "propp(" << n << ") = " << value << "\n";
    print_report_text(rep);
    if (!brute_notice.empty()) std::cout << "  note: " << brute_notice << "\n";
    std::cout << "cross-check: " << (agree ? "pass" : "FAIL") << "\n";
  }
  if (!agree) return kDisagree;
  return rep.budget_exhausted() ? kBudget : kOk;
}

// ---- verify ----

int cmd_verify(const Globals& g, int max_a, int max_b, int max_c, unsigned jobs, bool inject_fault) {
  if (max_a < 0 || max_b < 0 || max_c < 0) throw CLI::ValidationError("--max", "bounds must be >= 0");
  std::vector<HexagonParams> grid;
  hexcount::for_each_valid(max_a, max_b, max_c, [&](const HexagonParams& p) { grid.push_back(p); });
  const std::vector<hexcount::Method> methods{hexcount::Method::formula, hexcount::Method::det,
                                              hexcount::Method::det_condense, hexcount::Method::brute,
                                              hexcount::Method::brute_pp};
  const hexcount::VerifyOptions options{g.budget, inject_fault ? 1 : 0};
  std::vector<hexcount::InstanceReport> reports(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < grid.size();) reports[k] = hexcount::run_methods(grid[k], methods, options);
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(grid.size(), 1))));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t failures = 0, skipped = 0;
  json instances = json::array();
  for (const auto& rep : reports) {
    if (!rep.agree()) ++failures;
    if (rep.budget_exhausted()) ++skipped;
    if (g.json) {
      instances.push_back(report_json(rep));
    } else if (!rep.agree()) {
      std::cout << "FAIL ";
      print_report_text(rep);
    } else if (rep.budget_exhausted()) {
      std::cout << "note: brute force skipped for " << hexcount::to_string(rep.params) << " (budget)\n";
    }
  }
  if (g.json) {
    std::cout << json{{"command", "verify"},
                      {"bounds", {{"a", max_a}, {"b", max_b}, {"c", max_c}}},
                      {"instances", instances},
                      {"total", reports.size()},
                      {"failures", failures},
                      {"brute_skipped", skipped}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "verified " << reports.size() << " instances: " << failures << " failures, " << skipped
              << " with brute force skipped\n";
  }
  return failures ? kDisagree : kOk;
}

// ---- identities ----

int cmd_identities(const Globals& g, int bound, std::uint64_t seed) {
  if (bound < 1) throw CLI::ValidationError("--bound", "must be >= 1");
  hexcount::SuiteOptions options;
  options.bound = bound;
  options.seed = seed;
  const auto tallies = hexcount::run_identity_suite(options);
  std::uint64_t failed = 0;
  json rows = json::array();
  for (const auto& t : tallies) {
    failed += t.failed;
    if (g.json) {
      rows.push_back({{"identity", t.name},
                      {"passed", t.passed},
                      {"failed", t.failed},
                      {"skipped", t.skipped},
                      {"failures", t.failures}});
    } else {
      std::cout << t.name << ": " << t.passed << " pass, " << t.failed << " fail, " << t.skipped << " skip\n";
      for (const auto& where : t.failures) std::cout << "  failed at " << where << "\n";
    }
  }
  if (g.json) {
    std::cout << json{{"command", "identities"}, {"bound", bound}, {"seed", seed}, {"identities", rows}}.dump(2)
              << "\n";
  }
  return failed ? kDisagree : kOk;
}

// ---- render ----

struct RenderArgs {
  std::optional<std::size_t> index;
  bool all = false;
  bool region_only = false;
  bool shade = false;
  std::string output;
  std::string families;
};

void write_file(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// "out.svg" -> "out-7.svg"
std::string numbered(const std::string& path, std::size_t k) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string() + "-" + std::to_string(k);
  return (p.parent_path() / (stem + (p.has_extension() ? p.extension().string() : ".svg"))).string();
}

int cmd_render(const Globals& g, const HexagonParams& p, const RenderArgs& args) {
  hexcount::validate(p);
  hexcount::SvgStyle style;
  style.shade = args.shade;
  const hexcount::Region region = hexcount::build_region(p);
  if (args.region_only) {
    write_file(args.output, hexcount::render_svg(region, style));
    return kOk;
  }

  std::vector<hexcount::Tiling> tilings;
  if (!args.families.empty()) {
    std::ifstream in(args.families);
    if (!in) throw CLI::ValidationError("--families", "cannot open " + args.families);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      tilings.push_back(hexcount::paths_to_tiling(hexcount::parse_family(line), region));
    }
  } else {
    hexcount::Budget budget(g.budget);
    tilings = hexcount::enumerate_tilings(p, budget);
  }

  if (args.all) {
    if (args.output.empty()) throw CLI::ValidationError("--output", "required with --all");
    for (std::size_t k = 0; k < tilings.size(); ++k) {
      write_file(numbered(args.output, k), hexcount::render_svg(tilings[k], style));
    }
    if (g.json) {
      std::cout << json{{"command", "render"}, {"params", params_json(p)}, {"written", tilings.size()}}.dump(2) << "\n";
    } else {
      std::cerr << "wrote " << tilings.size() << " files\n";
    }
    return kOk;
  }
  const std::size_t k = args.index.value_or(0);
  if (k >= tilings.size()) {
    std::cerr << "error: index " << k << " out of range; the region has " << tilings.size() << " tilings\n";
    return kUsage;
  }
  write_file(args.output, hexcount::render_svg(tilings[k], style));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Count rhombus tilings of a hexagon with three fixed border tiles"};
  app.require_subcommand(1);
  Globals g;
  g.budget = budget_default();
  app.add_flag("--json", g.json, "machine-readable output; counts are decimal strings");
  app.add_option("--budget", g.budget, "node expansions allowed per brute-force instance")->capture_default_str();

  HexagonParams count_params;
  std::vector<std::string> methods{"formula", "det"};
  std::string emit_path;
  auto* count = app.add_subcommand("count", "count tilings by the selected methods");
  add_params(count, count_params);
  count->add_option("--methods", methods, "formula,det,det-condense,brute,brute-pp")
      ->delimiter(',')
      ->capture_default_str();
  count->add_option("--emit-families", emit_path, "write every path family, one per line");

  int propp_n = 0;
  auto* propp = app.add_subcommand("propp", "hexagon 2n,2n+3,... with the middle triangle of each long side missing");
  propp->add_option("--n", propp_n, "n >= 0")->required();

  int max_all = -1, max_a = -1, max_b = -1, max_c = -1;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool inject_fault = false;
  auto* verify = app.add_subcommand("verify", "cross-check every method on a parameter grid");
  verify->add_option("--max", max_all, "bound for a, b and c");
  verify->add_option("--max-a", max_a, "bound for a (overrides --max)");
  verify->add_option("--max-b", max_b, "bound for b (overrides --max)");
  verify->add_option("--max-c", max_c, "bound for c (overrides --max)");
  verify->add_option("--jobs", jobs, "worker threads")->capture_default_str();
  verify->add_flag("--inject-fault", inject_fault)->group("");

  int bound = 3;
  std::uint64_t seed = hexcount::SuiteOptions{}.seed;
  auto* identities = app.add_subcommand("identities", "check every identity of the determinant evaluation");
  identities->add_option("--bound", bound, "grid bound (>= 1)")->capture_default_str();
  identities->add_option("--seed", seed, "seed for the random trials")->capture_default_str();

  HexagonParams render_params;
  RenderArgs render_args;
  auto* render = app.add_subcommand("render", "write tilings or the bare region as SVG");
  add_params(render, render_params);
  auto* index_opt = render->add_option("--index", render_args.index, "k-th tiling in enumeration order");
  auto* all_opt = render->add_flag("--all", render_args.all, "every tiling, to OUTPUT-k.svg");
  auto* region_opt = render->add_flag("--region-only", render_args.region_only, "the untiled region");
  index_opt->excludes(all_opt)->excludes(region_opt);
  all_opt->excludes(region_opt);
  render->add_option("--output,-o", render_args.output, "output file (default stdout)");
  render->add_flag("--shade", render_args.shade, "fill rhombi by orientation");
  render->add_option("--families", render_args.families, "read path families from this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*count) return cmd_count(g, count_params, methods, emit_path);
    if (*propp) return cmd_propp(g, propp_n);
    if (*verify) {
      const int base = max_all < 0 ? 1 : max_all;
      return cmd_verify(g, max_a < 0 ? base : max_a, max_b < 0 ? base : max_b, max_c < 0 ? base : max_c, jobs,
                        inject_fault);
    }
    if (*identities) return cmd_identities(g, bound, seed);
    if (*render) return cmd_render(g, render_params, render_args);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const hexcount::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const hexcount::ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const hexcount::StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDisagree;
  }
  return kUsage;
}
