#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hurwitz {

/// Largest supported number of sheets. Enumeration is hopeless long before this.
inline constexpr int kMaxDegree = 16;

using Letter = std::uint8_t;

/// Raised when an internal invariant that the mathematics guarantees is
/// observed to fail (e.g. a monodromy image leaving Cov).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A bijection of {0, ..., d-1} stored as its image array.
///
/// Products follow ordinary function composition: `p * q` applies q first,
/// then p, so (p * q)[x] == p[q[x]]. Under this convention every
/// representative of the d = 3, g = 2 class list satisfies the commutator
/// relation as written.
class Permutation {
 public:
  Permutation() = default;

  static Permutation identity(int degree);
  /// Validates that `images` is a bijection of {0..size-1}.
  static Permutation from_images(std::span<const int> images);
  static Permutation from_images(std::initializer_list<int> images);
  static Permutation transposition(int degree, int a, int b);
  /// One cycle a_0 -> a_1 -> ... -> a_{n-1} -> a_0, 0-indexed letters.
  static Permutation cycle(int degree, std::initializer_list<int> letters);

  int degree() const noexcept { return degree_; }
  int operator[](int x) const noexcept { return images_[x]; }
  std::span<const Letter> images() const noexcept { return {images_.data(), static_cast<std::size_t>(degree_)}; }

  bool is_identity() const noexcept;
  /// Number of letters not fixed.
  int support_size() const noexcept;
  int cycle_count() const noexcept;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on (degree, images).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  // Entries past degree_ stay zero so defaulted equality is exact.
  std::array<Letter, kMaxDegree> images_{};
  std::uint8_t degree_ = 0;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend Permutation inverse(const Permutation& p);
};

Permutation operator*(const Permutation& p, const Permutation& q);

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
/// t^-1 p t.
Permutation conjugate(const Permutation& p, const Permutation& t);
/// b^-1 a^-1 b a, the left side of the covering relation.
Permutation commutator(const Permutation& a, const Permutation& b);
/// Ordered product f_0 f_1 ... f_{n-1}; identity of `degree` when empty.
Permutation product(std::span<const Permutation> factors, int degree);

/// Sorted multiset of cycle lengths, summing to the degree.
struct CycleType {
  std::vector<int> lengths;

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& p);
bool is_transposition(const Permutation& p) noexcept;
/// The two moved letters, smaller first. Throws std::invalid_argument otherwise.
std::pair<int, int> transposition_support(const Permutation& p);

/// All d(d-1)/2 transpositions of S_d, ordered by support (a < b lexicographic).
std::vector<Permutation> all_transpositions(int degree);
/// All d! permutations in lexicographic order of their image arrays.
std::vector<Permutation> all_permutations(int degree);

/// Orbit partition of the subgroup generated by `generators` acting on
/// {0..degree-1}. Each block is sorted; blocks are ordered by smallest letter.
std::vector<std::vector<int>> orbits(std::span<const Permutation> generators, int degree);
bool is_transitive(std::span<const Permutation> generators, int degree);

/// True iff commutator(a, b) equals the ordered product of `gammas`.
bool relation_holds(const Permutation& a, const Permutation& b, std::span<const Permutation> gammas);

/// 1-indexed cycle notation, e.g. "(1 2 3)(4 5)"; "id" for the identity.
std::string to_cycle_string(const Permutation& p);
/// Inverse of to_cycle_string. Also accepts the compact "(123)" form when
/// degree <= 9. Throws std::invalid_argument on malformed input.
Permutation parse_cycles(std::string_view text, int degree);

}  // namespace hurwitz
