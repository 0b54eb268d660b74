#include "hurwitz/monodromy.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_map>

namespace hurwitz {

std::string MonodromyGenerator::name() const {
  switch (kind) {
    case Kind::kGamma: return "g" + std::to_string(index);
    case Kind::kAlpha: return "g_alpha";
    case Kind::kBeta: return "g_beta";
  }
  return "?";
}

std::vector<MonodromyGenerator> all_generators(int g) {
  std::vector<MonodromyGenerator> out;
  for (int i = 1; i <= 2 * g - 3; ++i) out.push_back(MonodromyGenerator::gamma(i));
  out.push_back(MonodromyGenerator::alpha());
  out.push_back(MonodromyGenerator::beta());
  return out;
}

CoverTuple act(const MonodromyGenerator& generator, const CoverTuple& tuple) {
  const int d = tuple.degree();
  const std::size_t n = tuple.gamma_count();
  const Permutation& last = tuple.gamma(n);
  const Permutation last_inv = inverse(last);
  std::vector<Permutation> out(tuple.entries().begin(), tuple.entries().end());
  auto gamma_out = [&](std::size_t j) -> Permutation& { return out[j + 1]; };

  switch (generator.kind) {
    case MonodromyGenerator::Kind::kGamma: {
      const auto i = static_cast<std::size_t>(generator.index);
      if (i < 1 || i > n - 1) throw std::invalid_argument("g_i needs 1 <= i <= 2g-3");
      const Permutation word = product(tuple.gammas().subspan(i - 1), d);
      for (std::size_t j = i; j < n; ++j) gamma_out(j) = last_inv * tuple.gamma(j) * last;
      gamma_out(n) = inverse(word) * last * word;
      break;
    }
    case MonodromyGenerator::Kind::kAlpha: {
      out[1] = tuple.beta() * last;
      for (std::size_t j = 1; j < n; ++j) gamma_out(j) = last_inv * tuple.gamma(j) * last;
      gamma_out(n) = inverse(tuple.alpha()) * last * tuple.alpha();
      break;
    }
    case MonodromyGenerator::Kind::kBeta: {
      out[0] = tuple.alpha() * last_inv;
      const Permutation word = tuple.beta() * product(tuple.gammas().first(n - 1), d);
      gamma_out(n) = inverse(word) * last * word;
      break;
    }
  }

  CoverTuple image(std::move(out));
  try {
    validate(image);
  } catch (const std::invalid_argument& e) {
    throw InconsistencyError(generator.name() + " left Cov: " + e.what());
  }
  return image;
}

SubgroupSignature subgroup_signature(const CoverTuple& tuple, std::uint64_t element_budget) {
  const int d = tuple.degree();
  std::set<Permutation> seen{Permutation::identity(d)};
  std::deque<Permutation> frontier{Permutation::identity(d)};
  while (!frontier.empty()) {
    const Permutation x = frontier.front();
    frontier.pop_front();
    for (const auto& s : tuple.entries()) {
      Permutation y = x * s;
      if (seen.insert(y).second) {
        if (seen.size() > element_budget) throw BudgetExceeded(seen.size(), element_budget);
        frontier.push_back(y);
      }
    }
  }
  std::map<CycleType, std::uint64_t> types;
  for (const auto& x : seen) ++types[cycle_type(x)];
  SubgroupSignature sig;
  sig.order = seen.size();
  sig.cycle_types.assign(types.begin(), types.end());
  return sig;
}

std::string to_string(const SubgroupSignature& signature) {
  std::string s = std::to_string(signature.order) + ":";
  bool first = true;
  for (const auto& [type, count] : signature.cycle_types) {
    if (!first) s += ",";
    first = false;
    // exponent notation over cycle lengths, e.g. [1^2 2]
    s += "[";
    for (std::size_t i = 0; i < type.lengths.size();) {
      std::size_t j = i;
      while (j < type.lengths.size() && type.lengths[j] == type.lengths[i]) ++j;
      if (i != 0) s += " ";
      s += std::to_string(type.lengths[i]);
      if (j - i > 1) s += "^" + std::to_string(j - i);
      i = j;
    }
    s += "]x" + std::to_string(count);
  }
  return s;
}

namespace {

std::unordered_map<std::string, std::size_t> key_index(const ClassSet& set) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < set.classes.size(); ++i) index.emplace(class_key(set.classes[i].rep), i);
  return index;
}

std::size_t lookup(const std::unordered_map<std::string, std::size_t>& index, const CoverTuple& image,
                   const MonodromyGenerator& generator) {
  const auto it = index.find(class_key(image));
  if (it == index.end()) {
    throw InconsistencyError(generator.name() + " image " + to_string(image) + " is not in the class set");
  }
  return it->second;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::size_t image_class(const ClassSet& set, const MonodromyGenerator& generator, std::size_t class_index) {
  const auto index = key_index(set);
  return lookup(index, act(generator, set.classes.at(class_index).rep), generator);
}

ComponentReport components(const ClassSet& set) {
  const auto index = key_index(set);
  if (index.size() != set.classes.size()) throw InconsistencyError("class set contains duplicate classes");
  const auto generators = all_generators(set.g);

  std::vector<std::size_t> parent(set.classes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  for (std::size_t c = 0; c < set.classes.size(); ++c) {
    for (const auto& gen : generators) {
      const std::size_t image = lookup(index, act(gen, set.classes[c].rep), gen);
      const std::size_t a = find_root(parent, c);
      const std::size_t b = find_root(parent, image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  ComponentReport report;
  report.generator_count = static_cast<int>(generators.size());
  std::map<std::size_t, std::size_t> component_of_root;
  for (std::size_t c = 0; c < set.classes.size(); ++c) {
    const std::size_t root = find_root(parent, c);
    auto [it, inserted] = component_of_root.emplace(root, report.components.size());
    if (inserted) report.components.emplace_back();
    report.components[it->second].class_indices.push_back(c);
  }

  for (auto& comp : report.components) {
    std::vector<CovClass> members;
    for (std::size_t c : comp.class_indices) members.push_back(set.classes[c]);
    comp.counts = tally(set.d, set.g, members);
    try {
      comp.slope = slope_from_counts(comp.counts);
    } catch (const std::domain_error&) {
      comp.slope.reset();
    }
    comp.signature = subgroup_signature(members.front().rep);
    for (std::size_t m = 1; m < members.size(); ++m) {
      if (subgroup_signature(members[m].rep) != comp.signature) report.signatures_constant = false;
    }
  }
  for (const auto& comp : report.components) {
    if (comp.slope != report.components.front().slope) report.slopes_equal = false;
  }
  return report;
}

std::vector<int> ramification_profile(std::span<const CovClass> classes) {
  std::vector<int> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.classification.kind == CovKind::kCov3 ? 3 : 1);
  return out;
}

BigInt genus_from_ramification(std::span<const int> profile, int genus_X, int k) {
  BigInt excess = 0;
  for (int e : profile) excess += e - 1;
  const BigInt twice = BigInt(profile.size()) * (2 * genus_X - 2) + k * excess;
  if (twice % 2 != 0) throw InconsistencyError("odd Riemann-Hurwitz total");
  return twice / 2 + 1;
}

}  // namespace hurwitz
