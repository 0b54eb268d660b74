#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "hurwitz/perm.hpp"

namespace hurwitz {

/// Monodromy data (alpha, beta, gamma_1, ..., gamma_{2g-2}) of one simply
/// branched cover of an elliptic curve.
///
/// Entries are stored contiguously: alpha, beta, then the gammas. The
/// constructor only checks shape; call validate() for the Cov invariants.
class CoverTuple {
 public:
  CoverTuple() = default;
  CoverTuple(Permutation alpha, Permutation beta, std::vector<Permutation> gammas);
  /// `entries` = {alpha, beta, gamma_1, ...}.
  explicit CoverTuple(std::vector<Permutation> entries);

  int degree() const noexcept { return entries_.empty() ? 0 : entries_.front().degree(); }
  int genus() const noexcept { return static_cast<int>(gamma_count()) / 2 + 1; }
  std::size_t gamma_count() const noexcept { return entries_.size() - 2; }

  const Permutation& alpha() const { return entries_[0]; }
  const Permutation& beta() const { return entries_[1]; }
  /// 1-based, matching the usual gamma_1 ... gamma_{2g-2}.
  const Permutation& gamma(std::size_t i) const { return entries_[i + 1]; }
  std::span<const Permutation> gammas() const { return std::span(entries_).subspan(2); }
  std::span<const Permutation> entries() const { return entries_; }

  friend bool operator==(const CoverTuple&, const CoverTuple&) = default;
  /// Lexicographic on the concatenated image arrays alpha, beta, gamma_1, ...
  friend std::strong_ordering operator<=>(const CoverTuple& a, const CoverTuple& b) noexcept;

 private:
  std::vector<Permutation> entries_;
};

/// Simultaneous conjugation t^-1 x t of every entry.
CoverTuple conjugate(const CoverTuple& tuple, const Permutation& t);

/// Throws std::invalid_argument naming the first violated Cov invariant.
void validate(const CoverTuple& tuple);
bool is_valid_cover(const CoverTuple& tuple) noexcept;

enum class CovKind { kCov0, kCov1, kCov2, kCov3 };

/// Which of Cov0, Cov1^(h), Cov2, Cov3 a tuple lies in. `h` is the smaller
/// orbit size for Cov1 and zero otherwise.
struct Classification {
  CovKind kind = CovKind::kCov0;
  int h = 0;

  friend bool operator==(const Classification&, const Classification&) = default;
  friend auto operator<=>(const Classification&, const Classification&) = default;
};

/// Classifies by how gamma_1 and gamma_2 meet. Throws InconsistencyError if
/// removing a repeated gamma_1 = gamma_2 leaves more than two orbits.
Classification classify(const CoverTuple& tuple);

/// "Cov0", "Cov1", "Cov2", "Cov3".
std::string kind_name(CovKind kind);
CovKind parse_kind(std::string_view name);

/// Lexicographically smallest tuple among all d! simultaneous conjugates.
///
/// Relabelings are built position by position over alpha's image array; an
/// unseen image letter always takes the next free label, so branching only
/// happens when a position's preimage is still unlabeled. Prefixes larger
/// than the incumbent are pruned.
CoverTuple canonical_form(const CoverTuple& tuple);

/// Fast complete invariant of the conjugation class of a transitive tuple:
/// the smallest breadth-first relabeling over all start letters, as bytes.
/// Equal keys <=> conjugate tuples. Not lexicographically minimal in general.
std::string class_key(const CoverTuple& tuple);
/// Same key computed from raw entries (alpha, beta, gammas...), no allocation
/// of a CoverTuple. `scratch` is reused between calls.
void class_key_into(std::span<const Permutation> entries, std::string& key, std::string& scratch);

/// Order of the centralizer of the tuple in S_d. Requires transitivity.
int stabilizer_order(const CoverTuple& tuple);

/// One line per cover: "(1 2 3) | id | (1 2) (1 3)" style fields.
std::string to_string(const CoverTuple& tuple);

}  // namespace hurwitz
