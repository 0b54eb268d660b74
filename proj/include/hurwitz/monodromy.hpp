#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/formulas.hpp"

namespace hurwitz {

/// Loops generating the fundamental group of E minus the fixed branch points,
/// transported with the moving last branch point.
struct MonodromyGenerator {
  enum class Kind { kGamma, kAlpha, kBeta };
  Kind kind = Kind::kGamma;
  int index = 0;  // 1 <= index <= 2g-3 for kGamma, unused otherwise

  static MonodromyGenerator gamma(int i) { return {Kind::kGamma, i}; }
  static MonodromyGenerator alpha() { return {Kind::kAlpha, 0}; }
  static MonodromyGenerator beta() { return {Kind::kBeta, 0}; }

  std::string name() const;
  friend bool operator==(const MonodromyGenerator&, const MonodromyGenerator&) = default;
};

/// g_1, ..., g_{2g-3}, g_alpha, g_beta.
std::vector<MonodromyGenerator> all_generators(int g);

/// Rewrites the tuple along one loop. With n = 2g-2 and g_n the moving branch
/// point's transposition:
///   g_i:     gamma_j -> g_n^-1 gamma_j g_n (i <= j < n),
///            gamma_n -> (gamma_i..gamma_n)^-1 gamma_n (gamma_i..gamma_n)
///   g_alpha: beta -> beta gamma_n, gamma_n -> alpha^-1 gamma_n alpha,
///            gamma_j -> gamma_n^-1 gamma_j gamma_n (j < n)
///   g_beta:  alpha -> alpha gamma_n^-1,
///            gamma_n -> (beta gamma_1..gamma_{n-1})^-1 gamma_n (beta gamma_1..gamma_{n-1})
/// The output is validated; a failure raises InconsistencyError.
CoverTuple act(const MonodromyGenerator& generator, const CoverTuple& tuple);

/// Coarse conjugacy fingerprint of <alpha, beta, gamma_1, ...>: the group
/// order and the multiset of cycle types of its elements.
struct SubgroupSignature {
  std::uint64_t order = 0;
  std::vector<std::pair<CycleType, std::uint64_t>> cycle_types;  // sorted by type

  friend bool operator==(const SubgroupSignature&, const SubgroupSignature&) = default;
  friend auto operator<=>(const SubgroupSignature&, const SubgroupSignature&) = default;
};

inline constexpr std::uint64_t kDefaultElementBudget = 1'000'000;

/// Closes the generated subgroup by breadth-first multiplication. Throws
/// BudgetExceeded if the group grows past `element_budget`.
SubgroupSignature subgroup_signature(const CoverTuple& tuple, std::uint64_t element_budget = kDefaultElementBudget);
/// "24:[1^4]x1,[1^2 2]x6,..." style rendering.
std::string to_string(const SubgroupSignature& signature);

struct Component {
  std::vector<std::size_t> class_indices;  // into ClassSet::classes, ascending
  ClassCounts counts;
  std::optional<Rational> slope;
  SubgroupSignature signature;
};

struct ComponentReport {
  int generator_count = 0;
  std::vector<Component> components;  // ordered by smallest class index
  /// Every class's signature equals its component's.
  bool signatures_constant = true;
  /// Per-component slopes all equal (only reported, never asserted).
  bool slopes_equal = true;
};

/// Orbits of the monodromy action on Cov/~. `set` must be the full class set
/// from enumerate_classes; an image outside it raises InconsistencyError.
ComponentReport components(const ClassSet& set);

/// Where a class's image under a generator lands, as an index into `set`.
/// Builds its own lookup table; components() uses a shared one.
std::size_t image_class(const ClassSet& set, const MonodromyGenerator& generator, std::size_t class_index);

/// Ramification index of W -> X at the degeneration of each class: 3 for
/// Cov3, 1 otherwise.
std::vector<int> ramification_profile(std::span<const CovClass> classes);
/// Genus of W from Riemann-Hurwitz over X using the profile:
/// 2g(W) - 2 = N(2gX - 2) + k sum(e - 1).
BigInt genus_from_ramification(std::span<const int> profile, int genus_X, int k);

}  // namespace hurwitz
