#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hurwitz/enumerate.hpp"
#include "hurwitz/formulas.hpp"
#include "hurwitz/monodromy.hpp"
#include "oracles.hpp"

using namespace hurwitz;

namespace {

Permutation P(const char* cycles, int d) { return parse_cycles(cycles, d); }

std::vector<std::size_t> component_sizes(const ComponentReport& report) {
  std::vector<std::size_t> sizes;
  for (const auto& c : report.components) sizes.push_back(c.class_indices.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

// Order of the generated group by closing a set under right multiplication.
std::size_t closure_order(const CoverTuple& t) {
  std::set<Permutation> group{Permutation::identity(t.degree())};
  std::vector<Permutation> frontier{Permutation::identity(t.degree())};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier) {
      for (const auto& g : t.entries()) {
        const Permutation y = compose(x, g);
        if (group.insert(y).second) next.push_back(y);
      }
    }
    frontier = std::move(next);
  }
  return group.size();
}

}  // namespace

TEST_SUITE("monodromy") {

TEST_CASE("generators") {
  const auto gens = all_generators(3);
  REQUIRE(gens.size() == 5);
  CHECK(gens[0].name() == "g1");
  CHECK(gens[2].name() == "g3");
  CHECK(gens[3].name() == "g_alpha");
  CHECK(gens[4].name() == "g_beta");
  CHECK(all_generators(2).size() == 3);
}

TEST_CASE("explicit images at d = 2") {
  const Permutation id = Permutation::identity(2);
  const Permutation t = P("(1 2)", 2);
  const CoverTuple base(id, id, {t, t});
  CHECK(act(MonodromyGenerator::alpha(), base) == CoverTuple(id, t, {t, t}));
  CHECK(act(MonodromyGenerator::beta(), base) == CoverTuple(t, id, {t, t}));
  CHECK(act(MonodromyGenerator::gamma(1), base) == base);
}

TEST_CASE("every generator maps Cov to Cov") {
  for (auto [d, g] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const auto gens = all_generators(g);
    enumerate_cov(d, g, [&](const CoverTuple& t) {
      for (const auto& gen : gens) {
        const CoverTuple image = act(gen, t);
        CHECK(is_valid_cover(image));
        if (gen.kind == MonodromyGenerator::Kind::kGamma) {
          CHECK(image.alpha() == t.alpha());
          CHECK(image.beta() == t.beta());
        }
      }
    });
  }
}

TEST_CASE("the action descends to conjugation classes") {
  std::mt19937_64 rng(99);
  std::vector<CoverTuple> tuples;
  enumerate_cov(4, 2, [&](const CoverTuple& t) { tuples.push_back(t); });
  enumerate_cov(3, 3, [&](const CoverTuple& t) { tuples.push_back(t); });
  for (std::size_t i = 0; i < tuples.size(); i += 13) {
    const CoverTuple& t = tuples[i];
    const Permutation s = oracle::random_permutation(t.degree(), rng);
    for (const auto& gen : all_generators(t.genus())) {
      CHECK(act(gen, conjugate(t, s)) == conjugate(act(gen, t), s));
    }
  }
}

TEST_CASE("the action permutes classes") {
  const ClassSet set = enumerate_classes(4, 2);
  for (const auto& gen : all_generators(2)) {
    std::set<std::size_t> images;
    for (std::size_t i = 0; i < set.classes.size(); ++i) images.insert(image_class(set, gen, i));
    CHECK(images.size() == set.classes.size());
  }
}

TEST_CASE("component counts") {
  CHECK(component_sizes(components(enumerate_classes(2, 2))) == std::vector<std::size_t>{4});
  CHECK(component_sizes(components(enumerate_classes(2, 3))) == std::vector<std::size_t>{4});
  CHECK(component_sizes(components(enumerate_classes(3, 2))) == std::vector<std::size_t>{16});
  CHECK(component_sizes(components(enumerate_classes(3, 3))) == std::vector<std::size_t>{160});
  CHECK(component_sizes(components(enumerate_classes(5, 2))) == std::vector<std::size_t>{160});
  CHECK(component_sizes(components(enumerate_classes(4, 2))) == std::vector<std::size_t>{48, 8, 8, 8});
  std::vector<std::size_t> d4g3(13, 8);
  d4g3[0] = 2400;
  CHECK(component_sizes(components(enumerate_classes(4, 3))) == d4g3);
}

TEST_CASE("d = 4 components split by type") {
  const ComponentReport report = components(enumerate_classes(4, 2));
  CHECK(report.generator_count == 3);
  CHECK(report.signatures_constant);
  for (const auto& c : report.components) {
    if (c.class_indices.size() == 48) {
      CHECK(c.counts.N3 == 27);
      CHECK(c.counts.N2 == 8);
      CHECK(c.counts.N0 == 6);
      CHECK(c.counts.N1_by_h == std::map<int, std::uint64_t>{{1, 4}, {2, 3}});
      CHECK(c.signature.order == 24);
    } else {
      CHECK(c.counts.N3 == 0);
      CHECK(c.counts.N2 == 4);
      CHECK(c.counts.N0 == 3);
      CHECK(c.counts.N1_by_h.at(2) == 1);
      CHECK(c.signature.order == 8);
    }
  }
  CHECK_FALSE(report.slopes_equal);
}

TEST_CASE("subgroup signature") {
  const ClassSet set = enumerate_classes(4, 2);
  for (std::size_t i = 0; i < set.classes.size(); i += 3) {
    const SubgroupSignature s = subgroup_signature(set.classes[i].rep);
    CHECK(s.order == closure_order(set.classes[i].rep));
    std::uint64_t total = 0;
    for (const auto& [type, n] : s.cycle_types) total += n;
    CHECK(total == s.order);
  }
  const SubgroupSignature s3 = subgroup_signature(oracle::tuple_of(oracle::d3_cases()[0]));
  CHECK(to_string(s3) == "6:[1^3]x1,[1 2]x3,[3]x2");
  CHECK_THROWS_AS(subgroup_signature(set.classes[0].rep, 5), BudgetExceeded);
}

TEST_CASE("genus from ramification") {
  for (auto [d, g] : {std::pair{3, 2}, {4, 2}, {3, 3}}) {
    const ClassSet set = enumerate_classes(d, g);
    const int k = 2 * g - 3;
    const auto profile = ramification_profile(set.classes);
    CHECK(std::count(profile.begin(), profile.end(), 3) == static_cast<long>(set.counts.N3));
    for (int gX : {0, 1, 2, 5}) {
      if (gX == 0 && set.counts.N > k * set.counts.N3) continue;
      CHECK(genus_from_ramification(profile, gX, k) ==
            genus_W(set.counts.N, set.counts.N3, gX, k));
    }
  }
}

TEST_CASE("the two d = 4 covers with different groups") {
  const Permutation double_swap = Permutation::from_images({2, 3, 0, 1});
  const Permutation four_cycle = Permutation::cycle(4, {0, 1, 2, 3});
  const Permutation t01 = Permutation::transposition(4, 0, 1);
  const CoverTuple first(double_swap, double_swap, {t01, t01});
  const CoverTuple second(four_cycle, four_cycle, {t01, t01});
  CHECK(subgroup_signature(first).order == 8);
  CHECK(subgroup_signature(second).order == 24);
  const ClassSet set = enumerate_classes(4, 2);
  const ComponentReport report = components(set);
  auto component = [&](const CoverTuple& t) {
    const CoverTuple c = canonical_form(t);
    for (std::size_t k = 0; k < report.components.size(); ++k) {
      for (std::size_t i : report.components[k].class_indices) {
        if (set.classes[i].rep == c) return k;
      }
    }
    return report.components.size();
  };
  CHECK(component(first) != component(second));
  CHECK(component(first) < report.components.size());
  CHECK(component(second) < report.components.size());
}

}  // TEST_SUITE
