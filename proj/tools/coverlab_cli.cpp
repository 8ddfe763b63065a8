// coverlab command-line surface: exact domination/threshold diagnostics on
// covering posets, intersecting-family constructions, and exact symmetric
// search. JSON goes to stdout for pipelines; short human summaries go to
// stderr. Exit codes: 0 all requested checks pass, 1 validation failure,
// 2 degenerate construction, 3 budget exceeded.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "coverlab/covering.hpp"
#include "coverlab/family_lab.hpp"
#include "coverlab/pipeline.hpp"
#include "coverlab/report.hpp"
#include "coverlab/rng.hpp"
#include "coverlab/search.hpp"
#include "coverlab/threshold.hpp"

namespace {

using namespace coverlab;

constexpr int kOk = 0;
constexpr int kValidation = 1;
constexpr int kDegenerate = 2;
constexpr int kBudget = 3;

std::uint64_t env_default_budget() {
  if (const char* env = std::getenv("COVERLAB_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
    std::cerr << "warning: ignoring malformed COVERLAB_BUDGET='" << env << "'\n";
  }
  return kDefaultBudget;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json budgets_json(std::uint64_t budget) { return Json{{"budget", budget}}; }

PermutationGroupSpec group_from_options(const std::string& name, const std::string& generators,
                                        int n) {
  if (!generators.empty()) return parse_generators(generators, n);
  if (name == "cyclic" || name.empty()) return cyclic_group(n);
  if (name == "symmetric") return symmetric_group(n);
  throw ValidationError("unknown group '" + name + "' (expected cyclic, symmetric, or --generators)");
}

struct DominationArgs {
  int k = 0;
  std::string poset_file, mu0_file, mu1_file, out;
  std::uint64_t budget = 0;
};

int run_domination(const DominationArgs& args) {
  Json j;
  DominationReport report;
  Poset poset;
  if (args.k > 0) {
    CoveringPoset cov = build_covering(args.k);
    poset = cov.poset;
    report = domination_strength(cov.poset, cov.mu0, cov.mu1, args.budget);
    j["k"] = args.k;
  } else {
    if (args.poset_file.empty() || args.mu0_file.empty() || args.mu1_file.empty())
      throw ValidationError("domination needs --k, or --poset with --mu0 and --mu1");
    poset = load_poset(args.poset_file);
    Measure mu0 = load_measure(args.mu0_file, &poset);
    Measure mu1 = load_measure(args.mu1_file, &poset);
    report = domination_strength(poset, mu0, mu1, args.budget);
  }
  Json body = domination_json(report, poset);
  for (auto& [key, value] : body.items()) j[key] = value;
  j["command"] = "domination";
  emit(j);
  std::cerr << "domination strength " << rat_str(report.strength) << " over "
            << report.count_proper_nontrivial << " proper nontrivial up-sets\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "domination",
                       Json{{"k", args.k},
                            {"poset", args.poset_file},
                            {"mu0", args.mu0_file},
                            {"mu1", args.mu1_file}},
                       std::nullopt, budgets_json(args.budget), {args.out});
  }
  return kOk;
}

struct UpsetsArgs {
  int k = 0;
  std::string poset_file, out;
  bool list = false;
  std::uint64_t budget = 0;
};

int run_upsets(const UpsetsArgs& args) {
  Poset poset;
  if (args.k > 0)
    poset = build_covering(args.k).poset;
  else if (!args.poset_file.empty())
    poset = load_poset(args.poset_file);
  else
    throw ValidationError("upsets needs --k or --poset");
  auto all = poset.enumerate_up_sets(args.budget);
  Json j;
  j["command"] = "upsets";
  j["poset_size"] = poset.size();
  j["count"] = all.size();
  if (args.list) {
    Json sets = Json::array();
    for (std::uint64_t bits : all) sets.push_back(poset.ids_from_subset(bits));
    j["up_sets"] = sets;
  }
  emit(j);
  std::cerr << all.size() << " up-sets on " << poset.size() << " elements\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "upsets", Json{{"k", args.k}, {"poset", args.poset_file}},
                       std::nullopt, budgets_json(args.budget), {args.out});
  }
  return kOk;
}

struct MeasureArgs {
  std::string family_file, t_text = "1/2", out;
  std::uint64_t monte_carlo = 0;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t budget = 0;
};

int run_measure(const MeasureArgs& args) {
  ProductFamily fam = load_family(args.family_file);
  const Rat t = parse_rational(args.t_text);
  CoveringPoset cov = build_covering(fam.k());
  ProductFamily cover_fam = fam.space() == Space::cover ? fam : embed(cov, fam);
  Measure mu_t = cov.interpolation().at(t);

  Json j;
  j["command"] = "measure";
  j["size"] = fam.size();
  auto [sz, density] = family_size_and_density(fam);
  put_rat(j, "density", density);
  put_rat(j, "t", t);
  if (args.monte_carlo == 0) {
    Rat value = product_measure(mu_t, cover_fam);
    put_rat(j, "measure", value);
    std::cerr << "mu_t^n(family) = " << rat_str(value) << "\n";
  } else {
    // opt-in sampling mode; reports a standard error and never feeds exact checks
    if (!args.seed_set) throw ValidationError("--monte-carlo requires --seed");
    SplitMix64 rng(args.seed);
    std::vector<double> cumulative;
    double acc = 0;
    for (int i = 0; i < cov.poset.size(); ++i) {
      acc += rat_double(mu_t.mass_at(i));
      cumulative.push_back(acc);
    }
    std::uint64_t hits = 0;
    std::vector<int> tuple(static_cast<std::size_t>(fam.n()));
    for (std::uint64_t s = 0; s < args.monte_carlo; ++s) {
      for (int i = 0; i < fam.n(); ++i) {
        const double u = rng.next_unit();
        int idx = 0;
        while (idx + 1 < cov.poset.size() && u > cumulative[idx]) ++idx;
        tuple[i] = idx;
      }
      if (cover_fam.contains(cover_fam.encode(tuple))) ++hits;
    }
    const double estimate = static_cast<double>(hits) / static_cast<double>(args.monte_carlo);
    const double stderr_est =
        std::sqrt(std::max(estimate * (1.0 - estimate), 0.0) / static_cast<double>(args.monte_carlo));
    j["monte_carlo_samples"] = args.monte_carlo;
    j["seed"] = args.seed;
    j["measure_estimate"] = estimate;
    j["standard_error"] = stderr_est;
    std::cerr << "sampled mu_t^n(family) ~ " << estimate << " +/- " << stderr_est << "\n";
  }
  emit(j);
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "measure",
                       Json{{"family", args.family_file}, {"t", args.t_text},
                            {"monte_carlo", args.monte_carlo}},
                       args.seed_set ? std::optional<std::uint64_t>(args.seed) : std::nullopt,
                       budgets_json(args.budget), {args.out});
  }
  return kOk;
}

struct InfluenceArgs {
  std::string family_file, t_text = "1/2", out;
  std::uint64_t budget = 0;
};

int run_influence(const InfluenceArgs& args) {
  ProductFamily fam = load_family(args.family_file);
  const Rat t = parse_rational(args.t_text);
  CoveringPoset cov = build_covering(fam.k());
  ProductFamily cover_fam = fam.space() == Space::cover ? fam : embed(cov, fam);
  Measure mu_t = cov.interpolation().at(t);
  InfluenceReport report = influence_report(cover_fam, mu_t, t, args.budget);
  Json j = influence_json(report);
  j["command"] = "influence";
  if (report.family_measure != 0 && report.family_measure != 1 && fam.n() >= 2)
    j["bkkkl_ratio"] = bkkkl_ratio(cover_fam, mu_t, args.budget);
  else
    j["bkkkl_ratio"] = nullptr;
  emit(j);
  std::cerr << "total influence " << rat_str(report.total) << " at t = " << rat_str(t) << "\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "influence",
                       Json{{"family", args.family_file}, {"t", args.t_text}}, std::nullopt,
                       budgets_json(args.budget), {args.out});
  }
  return kOk;
}

struct RussoArgs {
  std::string family_file, t_text, h_text = "1/100000", out;
  double tolerance = 1e-6;
  std::uint64_t budget = 0;
};

int run_russo_check(const RussoArgs& args) {
  ProductFamily fam = load_family(args.family_file);
  RussoCheckReport report =
      russo_check(fam, parse_rational(args.t_text), parse_rational(args.h_text), args.tolerance,
                  args.budget);
  Json j = russo_check_json(report);
  j["command"] = "russo-check";
  emit(j);
  std::cerr << "derivative " << rat_str(report.derivative) << ", fd rel err "
            << report.relative_error << ", lower bound "
            << (report.lower_bound_holds ? "holds" : "FAILS") << "\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "russo-check",
                       Json{{"family", args.family_file},
                            {"t", args.t_text},
                            {"h", args.h_text},
                            {"tol", args.tolerance}},
                       std::nullopt, budgets_json(args.budget), {args.out});
  }
  return report.pass() ? kOk : kValidation;
}

struct BoundChainArgs {
  std::string family_file, generators, out;
  std::uint64_t budget = 0;
};

int run_bound_chain(const BoundChainArgs& args) {
  ProductFamily fam = load_family(args.family_file);
  PermutationGroupSpec group = args.generators.empty()
                                   ? cyclic_group(fam.n())
                                   : parse_generators(args.generators, fam.n());
  BoundChainReport report = bound_chain(fam, group, args.budget);
  Json j = bound_chain_json(report);
  j["command"] = "bound-chain";
  emit(j);
  std::cerr << "closure " << report.closure_size << " points, half-measure "
            << rat_str(report.half.measure) << (report.half.ok ? " <= 1/2" : " EXCEEDS 1/2")
            << ", eps " << rat_str(report.eps);
  if (report.empirical_C) std::cerr << ", empirical C " << *report.empirical_C;
  std::cerr << "\n";
  if (!report.warning.empty()) std::cerr << "warning: " << report.warning << "\n";
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
    write_run_manifest(args.out, "bound-chain",
                       Json{{"family", args.family_file}, {"generators", args.generators}},
                       std::nullopt, budgets_json(args.budget), {args.out});
  }
  return report.half.ok ? kOk : kValidation;
}

struct ConstructArgs {
  std::string type, out, space_text, blocks_file;  // empty space = the construction's own space
  int k = 3, n = 0, coord = 1, symbol = 1, q = 2;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t budget = 0;
};

int run_construct(const ConstructArgs& args) {
  if (args.out.empty()) throw ValidationError("construct needs --out");
  std::optional<Space> requested;
  if (!args.space_text.empty()) requested = parse_space(args.space_text);
  std::optional<ProductFamily> fam;
  std::optional<std::uint64_t> seed_used;

  if (args.type == "dictator") {
    fam = dictator_family(args.k, args.n, args.coord - 1, args.symbol, args.budget);
  } else if (args.type == "majority") {
    fam = majority_family(args.n, args.budget);
  } else if (args.type == "full") {
    fam = full_cube_family(args.k, args.n, args.budget);
  } else if (args.type == "fano" || args.type == "pg") {
    const int q = args.type == "fano" ? 2 : args.q;
    SetFamily lines = singer_difference_set(q);
    fam = set_intersecting_family(lines, args.symbol, args.k, args.budget);
  } else if (args.type == "lines") {
    SetFamily lines = singer_difference_set(args.q);
    save_set_family(lines, args.out);
    Json j;
    j["command"] = "construct";
    j["type"] = "lines";
    j["q"] = args.q;
    j["n"] = lines.n;
    j["blocks"] = lines.blocks.size();
    j["out"] = args.out;
    emit(j);
    write_run_manifest(args.out, "construct", Json{{"type", args.type}, {"q", args.q}},
                       std::nullopt, budgets_json(args.budget), {args.out});
    return kOk;
  } else if (args.type == "set-intersecting") {
    if (args.blocks_file.empty()) throw ValidationError("set-intersecting needs --blocks");
    SetFamily blocks = load_set_family(args.blocks_file);
    fam = set_intersecting_family(blocks, args.symbol, args.k, args.budget);
  } else if (args.type == "greedy-maximal") {
    if (!args.seed_set) throw ValidationError("greedy-maximal needs --seed");
    seed_used = args.seed;
    CoveringPoset cov = build_covering(args.k);
    fam = greedy_maximal_intersecting(cov, args.n, args.seed, args.budget);
  } else if (args.type == "random-upset") {
    if (!args.seed_set) throw ValidationError("random-upset needs --seed");
    seed_used = args.seed;
    CoveringPoset cov = build_covering(args.k);
    fam = random_up_set_family(cov, args.n, args.seed, args.budget);
  } else {
    throw ValidationError("unknown construction '" + args.type + "'");
  }

  if (requested == Space::cover && fam->space() == Space::base) {
    // cover output of a base construction is the up-closure of its embedding
    CoveringPoset cov = build_covering(fam->k());
    fam = family_up_closure(embed(cov, *fam), args.budget);
  } else if (requested == Space::base && fam->space() == Space::cover) {
    throw ValidationError("this construction lives in cover space; drop --space base");
  }

  save_family(*fam, args.out);
  auto [size, density] = family_size_and_density(*fam);
  Json j;
  j["command"] = "construct";
  j["type"] = args.type;
  j["k"] = fam->k();
  j["n"] = fam->n();
  j["space"] = space_name(fam->space());
  j["size"] = static_cast<std::uint64_t>(size);
  put_rat(j, "density", density);
  j["out"] = args.out;
  if (seed_used) j["seed"] = *seed_used;
  emit(j);
  std::cerr << "wrote " << size << " points to " << args.out << "\n";
  write_run_manifest(args.out, "construct",
                     Json{{"type", args.type},
                          {"k", args.k},
                          {"n", args.n},
                          {"coord", args.coord},
                          {"symbol", args.symbol},
                          {"q", args.q},
                          {"blocks", args.blocks_file},
                          {"space", args.space_text}},
                     seed_used, budgets_json(args.budget), {args.out});
  return kOk;
}

struct CheckArgs {
  std::string family_file, generators;
  bool intersecting = false;
  bool upset = false;
  std::uint64_t budget = 0;
};

int run_check(const CheckArgs& args) {
  ProductFamily fam = load_family(args.family_file);
  Json j;
  j["command"] = "check";
  j["family"] = args.family_file;
  j["size"] = fam.size();
  bool all_pass = true;
  if (args.intersecting) {
    const bool ok = is_intersecting_family(fam);
    j["intersecting"] = ok;
    all_pass = all_pass && ok;
  }
  if (args.upset) {
    const bool ok = family_is_up_set(fam);
    j["upset"] = ok;
    all_pass = all_pass && ok;
  }
  if (!args.generators.empty()) {
    SymmetryCheck sym = is_symmetric(fam, parse_generators(args.generators, fam.n()));
    j["symmetric_invariant"] = sym.invariant;
    j["symmetric_transitive"] = sym.transitive;
    all_pass = all_pass && sym.invariant && sym.transitive;
  }
  j["pass"] = all_pass;
  emit(j);
  std::cerr << (all_pass ? "all requested checks pass" : "some requested check FAILED") << "\n";
  return all_pass ? kOk : kValidation;
}

struct SearchArgs {
  int k = 0, n = 0;
  std::string group_name = "cyclic", generators, out, witness_file, method = "bb";
  std::uint64_t budget = 0;
};

int run_search(const SearchArgs& args) {
  PermutationGroupSpec group = group_from_options(args.group_name, args.generators, args.n);
  const auto start = std::chrono::steady_clock::now();
  SearchResult result = args.method == "scan"
                            ? brute_force_max(args.k, args.n, group, args.budget)
                            : max_symmetric_intersecting(args.k, args.n, group, args.budget);
  const double wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (!args.witness_file.empty()) save_family(result.witness, args.witness_file);
  Json j = search_json(result, args.k, args.n, args.witness_file, wall_ms);
  j["command"] = "search";
  j["method"] = args.method;
  emit(j);
  std::cerr << "max invariant intersecting family size " << result.max_size << " ("
            << result.nodes_explored << " nodes)\n";
  const std::string manifest_anchor = !args.out.empty() ? args.out : args.witness_file;
  if (!args.out.empty()) {
    std::ofstream f(args.out);
    f << j.dump(2) << "\n";
  }
  if (!manifest_anchor.empty()) {
    std::vector<std::string> outputs;
    if (!args.out.empty()) outputs.push_back(args.out);
    if (!args.witness_file.empty()) outputs.push_back(args.witness_file);
    write_run_manifest(manifest_anchor, "search",
                       Json{{"k", args.k},
                            {"n", args.n},
                            {"group", args.group_name},
                            {"generators", args.generators},
                            {"method", args.method}},
                       std::nullopt, budgets_json(args.budget), outputs);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coverlab: exact diagnostics for intersecting families, covering posets, and "
               "threshold behaviour"};
  app.require_subcommand(1);
  const std::uint64_t default_budget = env_default_budget();

  DominationArgs dom;
  dom.budget = default_budget;
  auto* cmd_dom = app.add_subcommand("domination", "domination strength between two measures");
  cmd_dom->add_option("--k", dom.k, "covering poset W_k with layer-uniform measures");
  cmd_dom->add_option("--poset", dom.poset_file, "poset file");
  cmd_dom->add_option("--mu0", dom.mu0_file, "measure file");
  cmd_dom->add_option("--mu1", dom.mu1_file, "measure file");
  cmd_dom->add_option("--budget", dom.budget, "enumeration budget");
  cmd_dom->add_option("--out", dom.out, "write the JSON report here");

  UpsetsArgs ups;
  ups.budget = default_budget;
  auto* cmd_ups = app.add_subcommand("upsets", "enumerate the up-sets of a poset");
  cmd_ups->add_option("--k", ups.k, "covering poset W_k");
  cmd_ups->add_option("--poset", ups.poset_file, "poset file");
  cmd_ups->add_flag("--list", ups.list, "list the up-sets, not just the count");
  cmd_ups->add_option("--budget", ups.budget, "enumeration budget");
  cmd_ups->add_option("--out", ups.out, "write the JSON report here");

  MeasureArgs mea;
  mea.budget = default_budget;
  auto* cmd_mea = app.add_subcommand("measure", "product measure of a family at time t");
  cmd_mea->add_option("--family", mea.family_file, "family file")->required();
  cmd_mea->add_option("--t", mea.t_text, "interpolation time (rational)");
  cmd_mea->add_option("--monte-carlo", mea.monte_carlo, "opt-in sampling with this many samples");
  cmd_mea->add_option("--seed", mea.seed, "sampling seed")->each([&](const std::string&) {
    mea.seed_set = true;
  });
  cmd_mea->add_option("--budget", mea.budget, "enumeration budget");
  cmd_mea->add_option("--out", mea.out, "write the JSON report here");

  InfluenceArgs inf;
  inf.budget = default_budget;
  auto* cmd_inf = app.add_subcommand("influence", "per-coordinate influences at time t");
  cmd_inf->add_option("--family", inf.family_file, "family file")->required();
  cmd_inf->add_option("--t", inf.t_text, "interpolation time (rational)");
  cmd_inf->add_option("--budget", inf.budget, "enumeration budget");
  cmd_inf->add_option("--out", inf.out, "write the JSON report here");

  RussoArgs rus;
  rus.budget = default_budget;
  auto* cmd_rus = app.add_subcommand("russo-check",
                                     "exact derivative vs finite difference on an up-set");
  cmd_rus->add_option("--family", rus.family_file, "cover-space up-set family file")->required();
  cmd_rus->add_option("--t", rus.t_text, "interpolation time (rational)")->required();
  cmd_rus->add_option("--step", rus.h_text, "finite-difference step h (rational)");
  cmd_rus->add_option("--tol", rus.tolerance, "relative-error tolerance");
  cmd_rus->add_option("--budget", rus.budget, "enumeration budget");
  cmd_rus->add_option("--out", rus.out, "write the JSON report here");

  BoundChainArgs bch;
  bch.budget = default_budget;
  auto* cmd_bch = app.add_subcommand("bound-chain",
                                     "closure, half-measure, and threshold bound on a base family");
  cmd_bch->add_option("--family", bch.family_file, "base-space family file")->required();
  cmd_bch->add_option("--generators", bch.generators,
                      "symmetry generators, 1-based images, ';'-separated (default: full cycle)");
  cmd_bch->add_option("--budget", bch.budget, "enumeration budget");
  cmd_bch->add_option("--out", bch.out, "write the JSON report here");

  ConstructArgs con;
  con.budget = default_budget;
  auto* cmd_con = app.add_subcommand("construct", "build a family and write it to a file");
  cmd_con->add_option("--type", con.type,
                      "dictator | majority | full | fano | pg | lines | set-intersecting | "
                      "greedy-maximal | random-upset")
      ->required();
  cmd_con->add_option("--k", con.k, "alphabet size");
  cmd_con->add_option("--n", con.n, "dimension");
  cmd_con->add_option("--coord", con.coord, "dictator coordinate (1-based)");
  cmd_con->add_option("--symbol", con.symbol, "distinguished symbol (1-based)");
  cmd_con->add_option("--q", con.q, "projective plane order (2, 3 or 4)");
  cmd_con->add_option("--blocks", con.blocks_file, "block family file for set-intersecting");
  cmd_con->add_option("--seed", con.seed, "seed for randomized constructions")
      ->each([&](const std::string&) { con.seed_set = true; });
  cmd_con->add_option("--space", con.space_text, "base | cover (cover = closed embedding)");
  cmd_con->add_option("--budget", con.budget, "enumeration budget");
  cmd_con->add_option("--out", con.out, "output family file")->required();

  CheckArgs chk;
  chk.budget = default_budget;
  auto* cmd_chk = app.add_subcommand("check", "verify properties of a family file");
  cmd_chk->add_option("--family", chk.family_file, "family file")->required();
  cmd_chk->add_flag("--intersecting", chk.intersecting, "check the intersecting property");
  cmd_chk->add_flag("--upset", chk.upset, "check closure under the product order");
  cmd_chk->add_option("--symmetric", chk.generators,
                      "check invariance under these generators and their transitivity");
  cmd_chk->add_option("--budget", chk.budget, "enumeration budget");

  SearchArgs sea;
  sea.budget = default_budget;
  auto* cmd_sea = app.add_subcommand("search", "exact maximum invariant intersecting family");
  cmd_sea->add_option("--k", sea.k, "alphabet size")->required();
  cmd_sea->add_option("--n", sea.n, "dimension")->required();
  cmd_sea->add_option("--group", sea.group_name, "cyclic | symmetric (default cyclic)");
  cmd_sea->add_option("--generators", sea.generators, "custom generators, ';'-separated");
  cmd_sea->add_option("--method", sea.method, "bb (branch and bound) | scan (exhaustive oracle)");
  cmd_sea->add_option("--witness", sea.witness_file, "write the witness family here");
  cmd_sea->add_option("--budget", sea.budget, "enumeration budget");
  cmd_sea->add_option("--out", sea.out, "write the JSON report here");

  try {
    app.parse(argc, argv);
    if (cmd_dom->parsed()) return run_domination(dom);
    if (cmd_ups->parsed()) return run_upsets(ups);
    if (cmd_mea->parsed()) return run_measure(mea);
    if (cmd_inf->parsed()) return run_influence(inf);
    if (cmd_rus->parsed()) return run_russo_check(rus);
    if (cmd_bch->parsed()) return run_bound_chain(bch);
    if (cmd_con->parsed()) return run_construct(con);
    if (cmd_chk->parsed()) return run_check(chk);
    if (cmd_sea->parsed()) return run_search(sea);
    std::cerr << "error: no subcommand\n";
    return kValidation;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kBudget;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate construction: " << e.what() << "\n";
    return kDegenerate;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  }
}
