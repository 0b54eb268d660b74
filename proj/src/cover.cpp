#include "hurwitz/cover.hpp"

#include <algorithm>
#include <array>

namespace hurwitz {

namespace {

std::vector<Permutation> join_entries(Permutation alpha, Permutation beta, std::vector<Permutation> gammas) {
  std::vector<Permutation> entries{alpha, beta};
  entries.insert(entries.end(), gammas.begin(), gammas.end());
  return entries;
}

}  // namespace

CoverTuple::CoverTuple(Permutation alpha, Permutation beta, std::vector<Permutation> gammas)
    : CoverTuple(join_entries(alpha, beta, std::move(gammas))) {}

CoverTuple::CoverTuple(std::vector<Permutation> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 4 || entries_.size() % 2 != 0) {
    throw std::invalid_argument("a cover tuple needs alpha, beta and an even number >= 2 of gammas");
  }
  for (const auto& p : entries_) {
    if (p.degree() != entries_.front().degree()) throw std::invalid_argument("tuple entries differ in degree");
  }
}

std::strong_ordering operator<=>(const CoverTuple& a, const CoverTuple& b) noexcept {
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                b.entries_.end());
}

CoverTuple conjugate(const CoverTuple& tuple, const Permutation& t) {
  const Permutation t_inv = inverse(t);
  std::vector<Permutation> out;
  out.reserve(tuple.entries().size());
  for (const auto& p : tuple.entries()) out.push_back(t_inv * p * t);
  return CoverTuple(std::move(out));
}

void validate(const CoverTuple& tuple) {
  for (std::size_t i = 1; i <= tuple.gamma_count(); ++i) {
    if (!is_transposition(tuple.gamma(i))) {
      throw std::invalid_argument("gamma_" + std::to_string(i) + " = " + to_cycle_string(tuple.gamma(i)) +
                                  " is not a transposition");
    }
  }
  if (!relation_holds(tuple.alpha(), tuple.beta(), tuple.gammas())) {
    throw std::invalid_argument("commutator relation fails for " + to_string(tuple));
  }
  if (!is_transitive(tuple.entries(), tuple.degree())) {
    throw std::invalid_argument("monodromy group is not transitive for " + to_string(tuple));
  }
}

bool is_valid_cover(const CoverTuple& tuple) noexcept {
  try {
    validate(tuple);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

Classification classify(const CoverTuple& tuple) {
  const auto [a1, b1] = transposition_support(tuple.gamma(1));
  const auto [a2, b2] = transposition_support(tuple.gamma(2));
  if (a1 == a2 && b1 == b2) {
    std::vector<Permutation> rest{tuple.alpha(), tuple.beta()};
    for (std::size_t j = 3; j <= tuple.gamma_count(); ++j) rest.push_back(tuple.gamma(j));
    const auto blocks = orbits(rest, tuple.degree());
    if (blocks.size() == 1) return {CovKind::kCov0, 0};
    if (blocks.size() == 2) {
      const int h = static_cast<int>(std::min(blocks[0].size(), blocks[1].size()));
      return {CovKind::kCov1, h};
    }
    throw InconsistencyError("gamma_1 = gamma_2 leaves " + std::to_string(blocks.size()) + " orbits in " +
                             to_string(tuple));
  }
  const int shared = (a1 == a2) + (a1 == b2) + (b1 == a2) + (b1 == b2);
  return {shared == 0 ? CovKind::kCov2 : CovKind::kCov3, 0};
}

std::string kind_name(CovKind kind) {
  switch (kind) {
    case CovKind::kCov0: return "Cov0";
    case CovKind::kCov1: return "Cov1";
    case CovKind::kCov2: return "Cov2";
    case CovKind::kCov3: return "Cov3";
  }
  return "?";
}

CovKind parse_kind(std::string_view name) {
  for (auto k : {CovKind::kCov0, CovKind::kCov1, CovKind::kCov2, CovKind::kCov3}) {
    if (kind_name(k) == name) return k;
  }
  throw std::invalid_argument("unknown classification '" + std::string(name) + "'");
}

namespace {

constexpr Letter kUnlabeled = 0xff;

struct CanonicalSearch {
  std::span<const Permutation> entries;
  int degree = 0;
  std::array<Letter, kMaxDegree> label{};    // letter -> new label
  std::array<Letter, kMaxDegree> preimage{};  // new label -> letter
  std::array<Letter, kMaxDegree> prefix{};    // relabeled alpha so far
  std::array<Letter, kMaxDegree> best_alpha{};
  bool have_best = false;
  std::vector<Permutation> best;

  void run() {
    label.fill(kUnlabeled);
    preimage.fill(kUnlabeled);
    descend(0, 0);
  }

  // Relabeled alpha at position j is label[alpha[preimage[j]]].
  void descend(int position, int next_label) {
    if (position == degree) {
      finish();
      return;
    }
    if (preimage[position] != kUnlabeled) {
      step(position, next_label);
      return;
    }
    // position == next_label here: every earlier position labeled its preimage.
    for (int x = 0; x < degree; ++x) {
      if (label[x] != kUnlabeled) continue;
      label[x] = static_cast<Letter>(position);
      preimage[position] = static_cast<Letter>(x);
      step(position, next_label + 1);
      label[x] = kUnlabeled;
      preimage[position] = kUnlabeled;
    }
  }

  void step(int position, int next_label) {
    const int y = entries[0][preimage[position]];
    bool fresh = false;
    if (label[y] == kUnlabeled) {
      label[y] = static_cast<Letter>(next_label);
      preimage[next_label] = static_cast<Letter>(y);
      fresh = true;
    }
    prefix[position] = label[y];
    const bool keep = !have_best || std::lexicographical_compare_three_way(
                                        prefix.begin(), prefix.begin() + position + 1, best_alpha.begin(),
                                        best_alpha.begin() + position + 1) <= 0;
    if (keep) descend(position + 1, next_label + (fresh ? 1 : 0));
    if (fresh) {
      preimage[label[y]] = kUnlabeled;
      label[y] = kUnlabeled;
    }
  }

  void finish() {
    std::vector<Permutation> candidate;
    candidate.reserve(entries.size());
    std::array<int, kMaxDegree> images{};
    for (const auto& p : entries) {
      for (int j = 0; j < degree; ++j) images[j] = label[p[preimage[j]]];
      candidate.push_back(Permutation::from_images(std::span<const int>(images.data(), degree)));
    }
    if (!have_best || std::lexicographical_compare(candidate.begin(), candidate.end(), best.begin(), best.end())) {
      best = std::move(candidate);
      std::copy(prefix.begin(), prefix.begin() + degree, best_alpha.begin());
      have_best = true;
    }
  }
};

// Breadth-first relabeling from `start`, visiting generators in tuple order.
// Returns false if some letter is unreachable.
bool bfs_labels(std::span<const Permutation> entries, int degree, int start,
                std::array<Letter, kMaxDegree>& label, std::array<Letter, kMaxDegree>& order) {
  label.fill(kUnlabeled);
  label[start] = 0;
  order[0] = static_cast<Letter>(start);
  int count = 1;
  for (int head = 0; head < count; ++head) {
    const int x = order[head];
    for (const auto& p : entries) {
      const int y = p[x];
      if (label[y] == kUnlabeled) {
        label[y] = static_cast<Letter>(count);
        order[count++] = static_cast<Letter>(y);
      }
    }
  }
  return count == degree;
}

void relabeled_bytes(std::span<const Permutation> entries, int degree, const std::array<Letter, kMaxDegree>& label,
                     const std::array<Letter, kMaxDegree>& order, std::string& out) {
  out.resize(entries.size() * static_cast<std::size_t>(degree));
  std::size_t k = 0;
  for (const auto& p : entries) {
    for (int j = 0; j < degree; ++j) out[k++] = static_cast<char>(label[p[order[j]]]);
  }
}

}  // namespace

CoverTuple canonical_form(const CoverTuple& tuple) {
  CanonicalSearch search;
  search.entries = tuple.entries();
  search.degree = tuple.degree();
  search.run();
  return CoverTuple(std::move(search.best));
}

void class_key_into(std::span<const Permutation> entries, std::string& key, std::string& scratch) {
  const int degree = entries.front().degree();
  std::array<Letter, kMaxDegree> label{};
  std::array<Letter, kMaxDegree> order{};
  key.clear();
  for (int s = 0; s < degree; ++s) {
    if (!bfs_labels(entries, degree, s, label, order)) {
      throw std::invalid_argument("class_key requires a transitive tuple");
    }
    relabeled_bytes(entries, degree, label, order, scratch);
    if (key.empty() || scratch < key) key.swap(scratch);
  }
}

std::string class_key(const CoverTuple& tuple) {
  std::string key;
  std::string scratch;
  class_key_into(tuple.entries(), key, scratch);
  return key;
}

int stabilizer_order(const CoverTuple& tuple) {
  const int degree = tuple.degree();
  std::array<Letter, kMaxDegree> label{};
  std::array<Letter, kMaxDegree> order{};
  std::string reference;
  std::string other;
  if (!bfs_labels(tuple.entries(), degree, 0, label, order)) {
    throw std::invalid_argument("stabilizer_order requires a transitive tuple");
  }
  relabeled_bytes(tuple.entries(), degree, label, order, reference);
  // A centralizing element is fixed by where it sends letter 0, and exists
  // exactly when the relabeling from that letter reproduces the tuple.
  int count = 0;
  for (int s = 0; s < degree; ++s) {
    bfs_labels(tuple.entries(), degree, s, label, order);
    relabeled_bytes(tuple.entries(), degree, label, order, other);
    count += other == reference;
  }
  return count;
}

std::string to_string(const CoverTuple& tuple) {
  std::string s = to_cycle_string(tuple.alpha()) + " | " + to_cycle_string(tuple.beta()) + " |";
  for (const auto& g : tuple.gammas()) s += " " + to_cycle_string(g);
  return s;
}

}  // namespace hurwitz
