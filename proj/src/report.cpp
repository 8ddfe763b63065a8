#include "coverlab/report.hpp"

#include <bit>
#include <fstream>

#include "coverlab/family_lab.hpp"

namespace coverlab {

void put_rat(Json& j, const std::string& key, const Rat& value) {
  j[key] = rat_str(value);
  j[key + "_float"] = rat_double(value);
}

namespace {

std::string mask_to_set(int mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; mask >> i; ++i)
    if ((mask >> i) & 1) {
      if (!first) out += ',';
      out += std::to_string(i + 1);
      first = false;
    }
  return out + "}";
}

bool ids_look_like_masks(const Poset& poset) {
  for (int i = 0; i < poset.size(); ++i)
    for (int j = 0; j < poset.size(); ++j)
      if (poset.id_at(i) < 0 ||
          poset.leq_index(i, j) != ((poset.id_at(i) & ~poset.id_at(j)) == 0))
        return false;
  return true;
}

}  // namespace

Json domination_json(const DominationReport& report, const Poset& poset) {
  Json j;
  put_rat(j, "strength", report.strength);
  j["witness_ids"] = report.witness_ids;
  if (ids_look_like_masks(poset)) {
    std::vector<std::string> sets;
    for (int id : report.witness_ids) sets.push_back(mask_to_set(id));
    j["witness_sets"] = sets;
  }
  j["count_proper_nontrivial"] = report.count_proper_nontrivial;
  j["poset_size"] = poset.size();
  return j;
}

Json influence_json(const InfluenceReport& report) {
  Json j;
  if (report.t) put_rat(j, "t", *report.t);
  Json per = Json::array();
  Json per_float = Json::array();
  for (const Rat& r : report.per_coordinate) {
    per.push_back(rat_str(r));
    per_float.push_back(rat_double(r));
  }
  j["per_coordinate"] = per;
  j["per_coordinate_float"] = per_float;
  put_rat(j, "total", report.total);
  put_rat(j, "family_measure", report.family_measure);
  return j;
}

Json threshold_json(const ThresholdReport& report) {
  Json j;
  put_rat(j, "p", report.p);
  put_rat(j, "q", report.q);
  put_rat(j, "eps", report.eps);
  put_rat(j, "kappa", report.kappa);
  j["n"] = report.n;
  j["empirical_C"] = report.empirical_C;
  return j;
}

Json russo_check_json(const RussoCheckReport& report) {
  Json j;
  put_rat(j, "t", report.t);
  put_rat(j, "h", report.h);
  put_rat(j, "derivative", report.derivative);
  put_rat(j, "finite_difference_exact", report.finite_difference_exact);
  j["finite_difference"] = report.finite_difference;
  j["relative_error"] = report.relative_error;
  j["tolerance"] = report.tolerance;
  put_rat(j, "kappa", report.kappa);
  put_rat(j, "total_influence", report.total_influence);
  put_rat(j, "kappa_times_total_influence", report.kappa_times_total_influence);
  j["lower_bound_holds"] = report.lower_bound_holds;
  j["within_tolerance"] = report.within_tolerance;
  j["pass"] = report.pass();
  return j;
}

Json bound_chain_json(const BoundChainReport& report) {
  Json j;
  j["k"] = report.k;
  j["n"] = report.n;
  j["family_size"] = report.family_size;
  j["symmetric_invariant"] = report.base_symmetry.invariant;
  j["symmetric_transitive"] = report.base_symmetry.transitive;

  Json closure;
  closure["closure_size"] = report.closure_size;
  closure["closure_invariant"] = report.closure_invariant;
  Json half;
  put_rat(half, "measure", report.half.measure);
  half["ok"] = report.half.ok;
  half["complement_free"] = report.half.complement_free;
  half["pairwise_validated"] = report.half.pairwise_validated;
  Json bound;
  put_rat(bound, "p", report.p);
  put_rat(bound, "q", report.q);
  put_rat(bound, "eps", report.eps);
  put_rat(bound, "kappa", report.kappa);
  if (report.empirical_C)
    bound["empirical_C"] = *report.empirical_C;
  else
    bound["empirical_C"] = nullptr;
  if (!report.warning.empty()) bound["warning"] = report.warning;

  j["stages"] = Json{{"closure", closure}, {"half_measure", half}, {"bound", bound}};
  return j;
}

Json search_json(const SearchResult& result, int k, int n, const std::string& witness_file,
                 double wall_time_ms) {
  Json j;
  j["k"] = k;
  j["n"] = n;
  std::vector<std::string> gens;
  for (const auto& g : result.group.generators) gens.push_back(format_generator(g));
  j["generators"] = gens;
  j["max_size"] = result.max_size;
  Int space = int_pow(static_cast<unsigned long>(k), static_cast<unsigned>(n));
  Rat density(Int(static_cast<unsigned long>(result.max_size)), space);
  density.canonicalize();
  put_rat(j, "density", density);
  if (witness_file.empty())
    j["witness_file"] = nullptr;
  else
    j["witness_file"] = witness_file;
  j["chosen_orbits"] = result.chosen_orbits;
  j["nodes_explored"] = result.nodes_explored;
  j["wall_time_ms"] = wall_time_ms;
  return j;
}

void write_run_manifest(const std::string& out_path, const std::string& command,
                        const Json& parameters, std::optional<std::uint64_t> seed,
                        const Json& budgets, const std::vector<std::string>& outputs) {
  Json manifest;
  manifest["command"] = command;
  manifest["parameters"] = parameters;
  if (seed)
    manifest["seed"] = *seed;
  else
    manifest["seed"] = nullptr;
  manifest["budgets"] = budgets;
  manifest["outputs"] = outputs;
  const std::string path = out_path + ".manifest.json";
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write manifest: " + path);
  out << manifest.dump(2) << "\n";
  if (!out) throw ValidationError("failed writing manifest: " + path);
}

}  // namespace coverlab
