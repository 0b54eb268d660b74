#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hurwitz/enumerate.hpp"

namespace hurwitz {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q > 0, always with the slash ("7/1").
std::string to_fraction_string(const Rational& r);
/// Fixed 4-decimal rendering for human tables only.
std::string to_decimal_string(const Rational& r, int places = 4);

/// Sum of i-th powers of the positive divisors of d.
BigInt sigma(int i, int d);

/// Total pairwise intersection of the branch sections in the W(E) model:
/// the diagonal meets each of the 2g-3 fixed horizontal sections once.
int wE_section_intersections(int g);

/// 72(N0+N1) / (9(N0+N1)+N3). Throws std::domain_error on a zero denominator.
Rational slope_from_counts(const ClassCounts& counts);
/// 10(N0+N1)/(N0+2N1), equal to the slope at g = 2 once 5N3 = 27N1 - 9N0.
Rational slope_g2_reduced(const ClassCounts& counts);

struct IntersectionNumbers {
  Rational delta0;
  Rational delta_higher;  // W . (delta_1 + ... + delta_[g/2])
  Rational delta_total;
  Rational lambda;
};

IntersectionNumbers intersection_numbers(const ClassCounts& counts, int k);

/// W . delta_i per boundary index. Cov0 classes feed delta_0; a Cov1 class
/// whose small side carries m of gamma_3.. feeds delta_min((m+2)/2, g-(m+2)/2).
/// Index 0 is always present.
std::map<int, Rational> boundary_profile(std::span<const CovClass> classes, int g, int k);

/// 1 + N(gX - 1) + k N3. Throws std::domain_error if negative.
BigInt genus_W(const BigInt& N, const BigInt& N3, int genus_X, int k);

/// Counts at g = 2 and odd d from divisor sums. N2 has no closed form.
struct ClosedCounts {
  int d = 0;
  BigInt N0;
  std::map<int, BigInt> N1_by_h;
  BigInt N1;
  BigInt N3;
};

ClosedCounts closed_counts_g2_odd(int d);
/// N3 from the cycle-type sum (1/2 sum_{l|d} l(l-1)(l-2) + 3 sum l1 l2 over
/// a1 l1 + a2 l2 = d, l1 > l2); an independent route to the same number.
BigInt closed_N3_by_cycle_types(int d);
/// (9/8)(sigma_3 - 2 d sigma_1 + sigma_1).
Rational closed_N3_reduced(int d);

/// A ClassCounts view of closed counts (N and N2 left at zero).
ClassCounts to_class_counts(const ClosedCounts& closed);

/// 5 N3 == 27 N1 - 9 N0.
bool verify_relation_identity(const ClassCounts& counts);
/// sum_{h=1}^{d-1} sigma_1(h) sigma_1(d-h) == (1/12 - d/2) sigma_1(d) + (5/12) sigma_3(d).
bool verify_sigma_convolution_identity(int d);
/// At g = 2: lambda == delta_0/10 + delta_1/5 with the given k.
bool verify_g2_hodge_relation(const ClassCounts& counts, int k);

/// Closed-form slopes at each (odd) d.
std::vector<Rational> slope_limit_check(std::span<const int> degrees);

/// sum_{n | d, n < d} sigma_1(n). Odd d only.
BigInt hurwitz_space_component_count(int d);

/// 1 + (9/8)(sigma_3(d) - 2 d sigma_1(d) + sigma_1(d)). Throws
/// InconsistencyError if the value is not an integer.
BigInt genus_W_d2_closed(int d);
/// Same expression with the coefficient 8/9 as printed in the source; not an
/// integer in general. Kept so reports can show the discrepancy.
Rational genus_W_d2_printed(int d);

struct SlopeReport {
  int d = 0;
  int g = 0;
  int k = 1;
  int genus_X = 1;
  ClassCounts counts;
  bool counts_complete = true;  // false for closed forms (N, N2 unknown)
  std::optional<Rational> slope;
  IntersectionNumbers intersections;
  std::map<int, Rational> delta_profile;
  std::optional<BigInt> genus_W;
};

/// Assembles everything computable from brute-force classes.
SlopeReport make_slope_report(const ClassSet& set, int k, int genus_X);
/// From closed forms (g = 2, odd d). The profile is {0: 2kN0, 1: 2kN1}.
SlopeReport make_closed_slope_report(int d, int k, int genus_X);

}  // namespace hurwitz
