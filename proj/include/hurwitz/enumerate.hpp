#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "hurwitz/cover.hpp"

namespace hurwitz {

/// Thrown when an enumeration would exceed its step budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t estimated, std::uint64_t budget);
  std::uint64_t estimated() const noexcept { return estimated_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t estimated_;
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  /// OpenMP threads; 0 uses the runtime default.
  int workers = 0;
};

/// Class counts for one (d, g). N1 is the sum of N1_by_h.
struct ClassCounts {
  int d = 0;
  int g = 0;
  std::uint64_t N = 0;
  std::uint64_t N0 = 0;
  std::map<int, std::uint64_t> N1_by_h;
  std::uint64_t N1 = 0;
  std::uint64_t N2 = 0;
  std::uint64_t N3 = 0;

  friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// One element of Cov/~.
struct CovClass {
  CoverTuple rep;  // canonical_form of every member
  Classification classification;
  int stabilizer_order = 1;
};

/// The full set Cov/~ for (d, g), sorted by representative.
struct ClassSet {
  int d = 0;
  int g = 0;
  std::uint64_t tuple_count = 0;  // |Cov|
  std::vector<CovClass> classes;
  ClassCounts counts;
};

/// Upper bound on inner-loop steps: (d!)^2 * C(d,2)^(2g-3), saturating.
std::uint64_t estimated_volume(int d, int g);

/// Throws std::invalid_argument unless d >= 2, g >= 2, d <= kMaxDegree.
void check_degree_genus(int d, int g);

/// Calls `visitor` once for every element of Cov, serially, in a fixed order:
/// (alpha, beta) lexicographic over S_d x S_d, then gamma_1.. by transposition
/// index. The last gamma is solved from the relation rather than searched.
void enumerate_cov(int d, int g, const std::function<void(const CoverTuple&)>& visitor,
                   const EnumerationOptions& options = {});

/// Cov/~ with counts, parallel over (alpha, beta) pairs. The result does not
/// depend on the worker count.
ClassSet enumerate_classes(int d, int g, const EnumerationOptions& options = {});

ClassCounts count_classes(int d, int g, const EnumerationOptions& options = {});

/// Tallies classifications; fills N, N0, N1_by_h, N1, N2, N3.
ClassCounts tally(int d, int g, std::span<const CovClass> classes);

/// Brute-force reference kept for testing and benchmarking. Searches every
/// gamma (none solved) and canonicalizes by trying all d! conjugators.
/// Only sensible for tiny (d, g).
namespace reference {

ClassSet enumerate_classes(int d, int g);
CoverTuple canonical_form(const CoverTuple& tuple);

}  // namespace reference

}  // namespace hurwitz
