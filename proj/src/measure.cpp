#include "coverlab/measure.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace coverlab {

Measure::Measure(Poset host, std::vector<Rat> mass_by_index)
    : host_(std::move(host)), mass_(std::move(mass_by_index)) {
  if (static_cast<int>(mass_.size()) != host_.size())
    throw ValidationError("measure has " + std::to_string(mass_.size()) + " masses for a poset of size " +
                          std::to_string(host_.size()));
  Rat total = 0;
  for (const Rat& m : mass_) {
    if (m < 0) throw ValidationError("measure has a negative point mass");
    total += m;
  }
  if (total != 1) throw ValidationError("measure masses sum to " + rat_str(total) + ", expected 1");
}

Measure Measure::uniform_on(const Poset& host, std::uint64_t support_bits) {
  const int support = std::popcount(support_bits);
  if (support == 0) throw ValidationError("uniform measure needs a nonempty support");
  std::vector<Rat> mass(host.size(), Rat(0));
  for (int i = 0; i < host.size(); ++i)
    if ((support_bits >> i) & 1u) mass[i] = rat(1, support);
  return Measure(host, std::move(mass));
}

Measure Measure::point_mass(const Poset& host, int id) {
  std::vector<Rat> mass(host.size(), Rat(0));
  mass[host.index_of(id)] = 1;
  return Measure(host, std::move(mass));
}

const Rat& Measure::mass_at(int index) const {
  if (index < 0 || index >= size()) throw ValidationError("measure index out of range");
  return mass_[index];
}

Rat Measure::mass_of_subset(std::uint64_t bits) const {
  if (bits & ~host_.full_subset()) throw ValidationError("subset mask refers to a missing element");
  Rat total = 0;
  for (int i = 0; i < size(); ++i)
    if ((bits >> i) & 1u) total += mass_[i];
  return total;
}

Interpolation::Interpolation(Measure mu0, Measure mu1)
    : mu0_(std::move(mu0)), mu1_(std::move(mu1)) {
  if (mu0_.host() != mu1_.host())
    throw ValidationError("interpolation endpoints live on different posets");
}

Measure Interpolation::at(const Rat& t) const {
  if (t < 0 || t > 1) throw ValidationError("interpolation time " + rat_str(t) + " outside [0,1]");
  std::vector<Rat> mass(mu0_.size());
  const Rat s = Rat(1) - t;
  for (int i = 0; i < mu0_.size(); ++i) mass[i] = s * mu0_.mass_at(i) + t * mu1_.mass_at(i);
  return Measure(mu0_.host(), std::move(mass));
}

std::vector<Rat> Interpolation::delta() const {
  std::vector<Rat> d(mu0_.size());
  for (int i = 0; i < mu0_.size(); ++i) d[i] = mu1_.mass_at(i) - mu0_.mass_at(i);
  return d;
}

DominationReport domination_strength(const Poset& poset, const Measure& mu0, const Measure& mu1,
                                     std::uint64_t budget) {
  if (mu0.host() != poset || mu1.host() != poset)
    throw ValidationError("domination query: measures do not live on the given poset");
  const int m = poset.size();
  if (m > 62 || (std::uint64_t{1} << m) > budget)
    throw BudgetError("domination enumeration over 2^" + std::to_string(m) +
                      " subsets exceeds budget " + std::to_string(budget));

  std::vector<Rat> delta(m);
  for (int i = 0; i < m; ++i) delta[i] = mu1.mass_at(i) - mu0.mass_at(i);

  DominationReport report;
  bool found = false;
  const std::uint64_t full = poset.full_subset();
  const std::uint64_t end = std::uint64_t{1} << m;
  for (std::uint64_t s = 1; s < end; ++s) {
    if (s == full || !poset.is_up_set(s)) continue;
    ++report.count_proper_nontrivial;
    Rat value = 0;
    for (int i = 0; i < m; ++i)
      if ((s >> i) & 1u) value += delta[i];
    if (!found || value < report.strength) {
      found = true;
      report.strength = value;
      report.witness_bits = s;
    }
  }
  if (!found) throw DegenerateError("poset has no proper nontrivial up-set");
  report.witness_ids = poset.ids_from_subset(report.witness_bits);
  return report;
}

Measure load_measure(const std::string& path, const Poset* expected_host) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open measure file: " + path);
  std::vector<std::string> fields;
  std::string line;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ';')) {
      std::string trimmed;
      std::istringstream fs(field);
      std::string tok;
      while (fs >> tok) {
        if (!trimmed.empty()) trimmed += ' ';
        trimmed += tok;
      }
      if (!trimmed.empty() && trimmed[0] != '#') fields.push_back(trimmed);
    }
  }
  if (fields.empty() || fields[0].rfind("measure ", 0) != 0)
    throw ValidationError(path + ": expected leading field 'measure <poset-file>'");
  std::string poset_ref = fields[0].substr(8);
  std::filesystem::path poset_path(poset_ref);
  if (poset_path.is_relative()) poset_path = std::filesystem::path(path).parent_path() / poset_path;
  Poset host = load_poset(poset_path.string());
  if (expected_host && host != *expected_host)
    throw ValidationError(path + ": measure host differs from the expected poset");

  std::vector<Rat> mass(host.size(), Rat(0));
  std::vector<bool> seen(host.size(), false);
  for (std::size_t f = 1; f < fields.size(); ++f) {
    auto eq = fields[f].find('=');
    if (eq == std::string::npos) throw ValidationError(path + ": malformed assignment: " + fields[f]);
    int id = std::stoi(fields[f].substr(0, eq));
    int index = host.index_of(id);
    if (seen[index]) throw ValidationError(path + ": repeated mass for element " + std::to_string(id));
    seen[index] = true;
    mass[index] = parse_rational(fields[f].substr(eq + 1));
  }
  return Measure(std::move(host), std::move(mass));
}

void save_measure(const Measure& mu, const std::string& path, const std::string& poset_path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write measure file: " + path);
  out << "measure " << poset_path;
  for (int i = 0; i < mu.size(); ++i)
    if (mu.mass_at(i) != 0) out << " ; " << mu.host().id_at(i) << "=" << rat_str(mu.mass_at(i));
  out << "\n";
  if (!out) throw ValidationError("failed writing measure file: " + path);
}

}  // namespace coverlab
