#include "hurwitz/formulas.hpp"

#include <sstream>
#include <stdexcept>

namespace hurwitz {

namespace {

Rational q(std::uint64_t n) { return Rational(BigInt(n)); }

void require_odd(int d, const char* what) {
  if (d < 3 || d % 2 == 0) {
    throw std::invalid_argument(std::string(what) + " is only available for odd d >= 3, got d = " + std::to_string(d));
  }
}

BigInt sigma_convolution(int d) {
  BigInt s = 0;
  for (int h = 1; h < d; ++h) s += sigma(1, h) * sigma(1, d - h);
  return s;
}

}  // namespace

std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_decimal_string(const Rational& r, int places) {
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  const BigInt num = numerator(r);
  const BigInt den = denominator(r);
  const bool negative = num < 0;
  const BigInt magnitude = negative ? BigInt(-num) : num;
  // round half up on the magnitude
  const BigInt scaled = (magnitude * scale * 2 + den) / (den * 2);
  const BigInt whole = scaled / scale;
  std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
  if (places > 0) {
    std::string frac = BigInt(scaled % scale).str();
    frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

BigInt sigma(int i, int d) {
  if (i < 0 || d < 1) throw std::invalid_argument("sigma needs i >= 0 and d >= 1");
  BigInt s = 0;
  for (int l = 1; l <= d; ++l) {
    if (d % l == 0) s += boost::multiprecision::pow(BigInt(l), static_cast<unsigned>(i));
  }
  return s;
}

int wE_section_intersections(int g) {
  if (g < 2) throw std::invalid_argument("genus must be >= 2");
  return 2 * g - 3;
}

Rational slope_from_counts(const ClassCounts& counts) {
  const Rational boundary = q(counts.N0) + q(counts.N1);
  const Rational denominator = 9 * boundary + q(counts.N3);
  if (denominator == 0) throw std::domain_error("slope undefined: N0 + N1 + N3 = 0");
  return 72 * boundary / denominator;
}

Rational slope_g2_reduced(const ClassCounts& counts) {
  const Rational denominator = q(counts.N0) + 2 * q(counts.N1);
  if (denominator == 0) throw std::domain_error("slope undefined: N0 + 2 N1 = 0");
  return 10 * (q(counts.N0) + q(counts.N1)) / denominator;
}

IntersectionNumbers intersection_numbers(const ClassCounts& counts, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  IntersectionNumbers out;
  out.delta0 = 2 * k * q(counts.N0);
  out.delta_higher = 2 * k * q(counts.N1);
  out.delta_total = out.delta0 + out.delta_higher;
  out.lambda = k * ((q(counts.N0) + q(counts.N1)) / 4 + q(counts.N3) / 36);
  return out;
}

std::map<int, Rational> boundary_profile(std::span<const CovClass> classes, int g, int k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  std::map<int, Rational> profile{{0, Rational(0)}};
  for (const auto& cls : classes) {
    if (cls.classification.kind == CovKind::kCov0) {
      profile[0] += 2 * k;
      continue;
    }
    if (cls.classification.kind != CovKind::kCov1) continue;
    const CoverTuple& t = cls.rep;
    std::vector<Permutation> rest{t.alpha(), t.beta()};
    for (std::size_t j = 3; j <= t.gamma_count(); ++j) rest.push_back(t.gamma(j));
    const auto blocks = orbits(rest, t.degree());
    if (blocks.size() != 2) throw InconsistencyError("Cov1 class without a two-block split: " + to_string(t));
    const auto& small = blocks[0].size() <= blocks[1].size() ? blocks[0] : blocks[1];
    std::vector<bool> in_small(static_cast<std::size_t>(t.degree()), false);
    for (int x : small) in_small[x] = true;
    int m = 0;
    for (std::size_t j = 3; j <= t.gamma_count(); ++j) {
      m += in_small[transposition_support(t.gamma(j)).first];
    }
    if (m % 2 != 0) throw InconsistencyError("odd branch count " + std::to_string(m) + " on the small side of " + to_string(t));
    const int side_genus = (m + 2) / 2;
    profile[std::min(side_genus, g - side_genus)] += 2 * k;
  }
  return profile;
}

BigInt genus_W(const BigInt& N, const BigInt& N3, int genus_X, int k) {
  if (N < 0 || N3 < 0 || genus_X < 0 || k < 0) throw std::invalid_argument("genus_W inputs must be nonnegative");
  const BigInt g = 1 + N * (genus_X - 1) + k * N3;
  if (g < 0) throw std::domain_error("negative genus " + g.str());
  return g;
}

ClosedCounts closed_counts_g2_odd(int d) {
  require_odd(d, "closed-form counting");
  ClosedCounts out;
  out.d = d;
  const BigInt s1 = sigma(1, d);
  out.N0 = BigInt((d - 1) / 2) * s1;
  for (int h = 1; h <= (d - 1) / 2; ++h) {
    // sum over a1 l1 = h, a2 l2 = d - h of l1 l2
    out.N1_by_h[h] = sigma(1, h) * sigma(1, d - h);
    out.N1 += out.N1_by_h[h];
  }
  const BigInt conv = sigma_convolution(d);
  const Rational n3 = Rational(3, 2) * Rational(conv) - (Rational(3 * d, 2) - 1) * Rational(s1) +
                      Rational(1, 2) * Rational(sigma(3, d));
  if (denominator(n3) != 1) throw InconsistencyError("non-integral N3 at d = " + std::to_string(d));
  out.N3 = numerator(n3);
  return out;
}

BigInt closed_N3_by_cycle_types(int d) {
  require_odd(d, "closed-form counting");
  BigInt twice_equal = 0;
  for (int l = 1; l <= d; ++l) {
    if (d % l == 0) twice_equal += BigInt(l) * (l - 1) * (l - 2);
  }
  BigInt mixed = 0;
  for (int l1 = 1; l1 <= d; ++l1) {
    for (int l2 = 1; l2 < l1; ++l2) {
      for (int a1 = 1; a1 * l1 < d; ++a1) {
        const int rest = d - a1 * l1;
        if (rest % l2 == 0) mixed += l1 * l2;
      }
    }
  }
  if (twice_equal % 2 != 0) throw InconsistencyError("odd cycle-type sum");
  return twice_equal / 2 + 3 * mixed;
}

Rational closed_N3_reduced(int d) {
  const BigInt s1 = sigma(1, d);
  return Rational(9, 8) * Rational(sigma(3, d) - 2 * d * s1 + s1);
}

ClassCounts to_class_counts(const ClosedCounts& closed) {
  ClassCounts c;
  c.d = closed.d;
  c.g = 2;
  c.N0 = closed.N0.convert_to<std::uint64_t>();
  for (const auto& [h, n] : closed.N1_by_h) c.N1_by_h[h] = n.convert_to<std::uint64_t>();
  c.N1 = closed.N1.convert_to<std::uint64_t>();
  c.N3 = closed.N3.convert_to<std::uint64_t>();
  return c;
}

bool verify_relation_identity(const ClassCounts& counts) {
  return 5 * BigInt(counts.N3) == 27 * BigInt(counts.N1) - 9 * BigInt(counts.N0);
}

bool verify_sigma_convolution_identity(int d) {
  if (d < 1) throw std::invalid_argument("identity needs d >= 1");
  const Rational rhs = (Rational(1, 12) - Rational(d, 2)) * Rational(sigma(1, d)) +
                       Rational(5, 12) * Rational(sigma(3, d));
  return Rational(sigma_convolution(d)) == rhs;
}

bool verify_g2_hodge_relation(const ClassCounts& counts, int k) {
  const auto in = intersection_numbers(counts, k);
  return in.lambda == in.delta0 / 10 + in.delta_higher / 5;
}

std::vector<Rational> slope_limit_check(std::span<const int> degrees) {
  std::vector<Rational> out;
  for (int d : degrees) out.push_back(slope_from_counts(to_class_counts(closed_counts_g2_odd(d))));
  return out;
}

BigInt hurwitz_space_component_count(int d) {
  require_odd(d, "the component count");
  BigInt s = 0;
  for (int n = 1; n < d; ++n) {
    if (d % n == 0) s += sigma(1, n);
  }
  return s;
}

BigInt genus_W_d2_closed(int d) {
  require_odd(d, "the closed genus formula");
  const Rational g = 1 + closed_N3_reduced(d);
  if (denominator(g) != 1) throw InconsistencyError("non-integral genus " + to_fraction_string(g));
  return numerator(g);
}

Rational genus_W_d2_printed(int d) {
  const BigInt s1 = sigma(1, d);
  return 1 + Rational(8, 9) * Rational(sigma(3, d) - 2 * d * s1 + s1);
}

SlopeReport make_slope_report(const ClassSet& set, int k, int genus_X) {
  SlopeReport r;
  r.d = set.d;
  r.g = set.g;
  r.k = k;
  r.genus_X = genus_X;
  r.counts = set.counts;
  try {
    r.slope = slope_from_counts(set.counts);
  } catch (const std::domain_error&) {
    r.slope.reset();
  }
  r.intersections = intersection_numbers(set.counts, k);
  r.delta_profile = boundary_profile(set.classes, set.g, k);
  r.genus_W = genus_W(BigInt(set.counts.N), BigInt(set.counts.N3), genus_X, k);
  return r;
}

SlopeReport make_closed_slope_report(int d, int k, int genus_X) {
  const ClosedCounts closed = closed_counts_g2_odd(d);
  SlopeReport r;
  r.d = d;
  r.g = 2;
  r.k = k;
  r.genus_X = genus_X;
  r.counts = to_class_counts(closed);
  r.counts_complete = false;
  r.slope = slope_from_counts(r.counts);
  r.intersections = intersection_numbers(r.counts, k);
  r.delta_profile = {{0, r.intersections.delta0}, {1, r.intersections.delta_higher}};
  if (genus_X == 1) r.genus_W = genus_W(0, closed.N3, 1, k);
  return r;
}

}  // namespace hurwitz
