#pragma once

// Brute-force routines used only as test oracles. They work on raw image
// vectors and never call the library's canonicalization or orbit code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hurwitz/cover.hpp"

namespace oracle {

using Images = std::vector<int>;

inline Images images_of(const hurwitz::Permutation& p) {
  return Images(p.images().begin(), p.images().end());
}

inline hurwitz::Permutation random_permutation(int d, std::mt19937_64& rng) {
  Images v(static_cast<std::size_t>(d));
  std::iota(v.begin(), v.end(), 0);
  std::shuffle(v.begin(), v.end(), rng);
  return hurwitz::Permutation::from_images(v);
}

/// Minimum over all d! relabelings sigma of (sigma p sigma^-1 for p in tuple),
/// compared as the concatenated image arrays.
inline std::vector<Images> brute_canonical(const hurwitz::CoverTuple& t) {
  const int d = t.degree();
  Images sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Images> best;
  do {
    Images sigma_inv(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) sigma_inv[sigma[i]] = i;
    std::vector<Images> candidate;
    for (const auto& p : t.entries()) {
      Images q(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j) q[j] = sigma[p[sigma_inv[j]]];
      candidate.push_back(q);
    }
    if (best.empty() || candidate < best) best = candidate;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return best;
}

inline std::vector<Images> images_of(const hurwitz::CoverTuple& t) {
  std::vector<Images> out;
  for (const auto& p : t.entries()) out.push_back(images_of(p));
  return out;
}

/// Number of sigma in S_d fixing the tuple under conjugation.
inline int brute_stabilizer(const hurwitz::CoverTuple& t) {
  const int d = t.degree();
  Images sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  int count = 0;
  do {
    bool fixes = true;
    for (const auto& p : t.entries()) {
      for (int x = 0; x < d && fixes; ++x) fixes = sigma[p[x]] == p[sigma[x]];
    }
    count += fixes;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return count;
}

/// Orbits by repeated closure from each letter (no union-find).
inline std::set<std::set<int>> brute_orbits(const std::vector<hurwitz::Permutation>& gens, int d) {
  std::set<std::set<int>> out;
  for (int start = 0; start < d; ++start) {
    std::set<int> orbit{start};
    bool grew = true;
    while (grew) {
      grew = false;
      for (int x : std::set<int>(orbit)) {
        for (const auto& g : gens) grew |= orbit.insert(g[x]).second;
      }
    }
    out.insert(orbit);
  }
  return out;
}

/// The sixteen representatives of Cov/~ for d = 3, g = 2 as printed
/// (1-indexed, cycle a1 a2 .. sends a_i to a_{i+1}): alpha, beta, gamma1, gamma2.
struct ListedCase {
  const char* alpha;
  const char* beta;
  const char* gamma1;
  const char* gamma2;
};

inline const std::vector<ListedCase>& d3_cases() {
  static const std::vector<ListedCase> cases = {
      {"id", "(123)", "(12)", "(12)"},    {"(123)", "id", "(12)", "(12)"},    {"(123)", "(123)", "(12)", "(12)"},
      {"(123)", "(132)", "(12)", "(12)"}, {"id", "(13)", "(12)", "(12)"},     {"(13)", "id", "(12)", "(12)"},
      {"(13)", "(13)", "(12)", "(12)"},   {"(23)", "(12)", "(12)", "(13)"},   {"(123)", "(12)", "(12)", "(13)"},
      {"(12)", "(13)", "(12)", "(13)"},   {"(123)", "(13)", "(12)", "(13)"},  {"(13)", "(23)", "(12)", "(13)"},
      {"(123)", "(23)", "(12)", "(13)"},  {"(12)", "(132)", "(12)", "(13)"},  {"(13)", "(132)", "(12)", "(13)"},
      {"(23)", "(132)", "(12)", "(13)"},
  };
  return cases;
}

inline hurwitz::CoverTuple tuple_of(const ListedCase& c, int d = 3) {
  using hurwitz::parse_cycles;
  return hurwitz::CoverTuple(parse_cycles(c.alpha, d), parse_cycles(c.beta, d),
                             {parse_cycles(c.gamma1, d), parse_cycles(c.gamma2, d)});
}

/// Sum of i-th powers of divisors by listing divisors explicitly.
inline std::uint64_t divisor_power_sum(int i, int d) {
  std::uint64_t s = 0;
  for (int l = 1; l <= d; ++l) {
    if (d % l != 0) continue;
    std::uint64_t p = 1;
    for (int e = 0; e < i; ++e) p *= static_cast<std::uint64_t>(l);
    s += p;
  }
  return s;
}

}  // namespace oracle
