#include "hurwitz/enumerate.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <string>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hurwitz {

BudgetExceeded::BudgetExceeded(std::uint64_t estimated, std::uint64_t budget)
    : std::runtime_error("estimated search volume " + std::to_string(estimated) + " exceeds budget " +
                         std::to_string(budget)),
      estimated_(estimated),
      budget_(budget) {}

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

// Backtracking over gamma_1..gamma_{n-1} for one fixed (alpha, beta); gamma_n
// is whatever remains of the commutator. A partial product is abandoned once
// the remainder needs more transpositions than are left to place.
class PairSearch {
 public:
  PairSearch(int d, int gamma_count, std::span<const Permutation> transpositions)
      : d_(d), n_(gamma_count), transpositions_(transpositions), entries_(static_cast<std::size_t>(gamma_count) + 2) {}

  template <class Visit>
  void run(const Permutation& alpha, const Permutation& beta, Visit&& visit) {
    entries_[0] = alpha;
    entries_[1] = beta;
    const Permutation c = commutator(alpha, beta);
    if (!reachable(c, n_)) return;
    place(0, c, visit);
  }

  std::span<const Permutation> entries() const { return entries_; }

 private:
  bool reachable(const Permutation& rest, int remaining) const {
    const int length = d_ - rest.cycle_count();
    return length <= remaining && (remaining - length) % 2 == 0;
  }

  // `rest` = gamma_{k+1} ... gamma_n, still to be factored.
  template <class Visit>
  void place(int k, const Permutation& rest, Visit& visit) {
    const int remaining = n_ - k;
    if (remaining == 1) {
      if (!is_transposition(rest)) return;
      entries_[2 + k] = rest;
      if (is_transitive(entries_, d_)) visit(std::span<const Permutation>(entries_));
      return;
    }
    for (const auto& t : transpositions_) {
      const Permutation next = t * rest;
      if (!reachable(next, remaining - 1)) continue;
      entries_[2 + k] = t;
      place(k + 1, next, visit);
    }
  }

  int d_;
  int n_;
  std::span<const Permutation> transpositions_;
  std::vector<Permutation> entries_;
};

CoverTuple decode_key(const std::string& key, int d) {
  std::vector<Permutation> entries;
  std::vector<int> images(static_cast<std::size_t>(d));
  for (std::size_t off = 0; off < key.size(); off += static_cast<std::size_t>(d)) {
    for (int j = 0; j < d; ++j) images[j] = static_cast<unsigned char>(key[off + j]);
    entries.push_back(Permutation::from_images(images));
  }
  return CoverTuple(std::move(entries));
}

void debug_check(std::span<const Permutation> entries, std::uint64_t visited) {
#ifndef NDEBUG
  if ((visited & 1023) == 0) {
    const CoverTuple t{std::vector<Permutation>(entries.begin(), entries.end())};
    validate(t);
    const Classification c = classify(t);
    const Permutation shift = Permutation::cycle(t.degree(), {0, t.degree() - 1});
    if (classify(conjugate(t, shift)) != c) throw InconsistencyError("classification not conjugation invariant");
  }
#else
  (void)entries;
  (void)visited;
#endif
}

struct WorkerResult {
  std::unordered_set<std::string> keys;
  std::uint64_t tuples = 0;
  std::exception_ptr error;
};

}  // namespace

void check_degree_genus(int d, int g) {
  if (d < 2 || d > kMaxDegree) {
    throw std::invalid_argument("degree d must lie in [2, " + std::to_string(kMaxDegree) + "], got " +
                                std::to_string(d));
  }
  if (g < 2) throw std::invalid_argument("genus g must be >= 2, got " + std::to_string(g));
}

std::uint64_t estimated_volume(int d, int g) {
  std::uint64_t factorial = 1;
  for (int i = 2; i <= d; ++i) factorial = saturating_mul(factorial, static_cast<std::uint64_t>(i));
  std::uint64_t volume = saturating_mul(factorial, factorial);
  const auto choose2 = static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(d - 1) / 2;
  for (int i = 0; i < 2 * g - 3; ++i) volume = saturating_mul(volume, choose2);
  return volume;
}

namespace {

void check_budget(int d, int g, const EnumerationOptions& options) {
  check_degree_genus(d, g);
  if (options.budget == 0) throw std::invalid_argument("budget must be positive");
  const std::uint64_t volume = estimated_volume(d, g);
  if (volume > options.budget) throw BudgetExceeded(volume, options.budget);
}

}  // namespace

void enumerate_cov(int d, int g, const std::function<void(const CoverTuple&)>& visitor,
                   const EnumerationOptions& options) {
  check_budget(d, g, options);
  const auto perms = all_permutations(d);
  const auto transpositions = all_transpositions(d);
  PairSearch search(d, 2 * g - 2, transpositions);
  std::uint64_t visited = 0;
  for (const auto& alpha : perms) {
    for (const auto& beta : perms) {
      search.run(alpha, beta, [&](std::span<const Permutation> entries) {
        debug_check(entries, visited++);
        visitor(CoverTuple(std::vector<Permutation>(entries.begin(), entries.end())));
      });
    }
  }
}

ClassSet enumerate_classes(int d, int g, const EnumerationOptions& options) {
  check_budget(d, g, options);
  const auto perms = all_permutations(d);
  const auto transpositions = all_transpositions(d);
  const auto perm_count = static_cast<std::int64_t>(perms.size());
  const std::int64_t pair_count = perm_count * perm_count;

  int threads = 1;
#ifdef _OPENMP
  threads = options.workers > 0 ? options.workers : omp_get_max_threads();
#endif
  std::vector<WorkerResult> results(static_cast<std::size_t>(threads));

#ifdef _OPENMP
#pragma omp parallel num_threads(threads)
#endif
  {
    int me = 0;
#ifdef _OPENMP
    me = omp_get_thread_num();
#endif
    WorkerResult& local = results[static_cast<std::size_t>(me)];
    PairSearch search(d, 2 * g - 2, transpositions);
    std::string key;
    std::string scratch;
#ifdef _OPENMP
#pragma omp for schedule(static, 64)
#endif
    for (std::int64_t i = 0; i < pair_count; ++i) {
      if (local.error) continue;
      try {
        search.run(perms[static_cast<std::size_t>(i / perm_count)], perms[static_cast<std::size_t>(i % perm_count)],
                   [&](std::span<const Permutation> entries) {
                     debug_check(entries, local.tuples++);
                     class_key_into(entries, key, scratch);
                     if (!local.keys.contains(key)) local.keys.insert(key);
                   });
      } catch (...) {
        local.error = std::current_exception();
      }
    }
  }

  ClassSet out;
  out.d = d;
  out.g = g;
  std::vector<std::string> keys;
  for (auto& r : results) {
    if (r.error) std::rethrow_exception(r.error);
    out.tuple_count += r.tuples;
    keys.insert(keys.end(), r.keys.begin(), r.keys.end());
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  out.classes.resize(keys.size());
  const auto class_count = static_cast<std::int64_t>(keys.size());
  std::exception_ptr error;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4) num_threads(threads)
#endif
  for (std::int64_t i = 0; i < class_count; ++i) {
    try {
      const CoverTuple member = decode_key(keys[static_cast<std::size_t>(i)], d);
      CovClass& c = out.classes[static_cast<std::size_t>(i)];
      c.rep = canonical_form(member);
      c.classification = classify(c.rep);
      c.stabilizer_order = stabilizer_order(c.rep);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::sort(out.classes.begin(), out.classes.end(), [](const CovClass& a, const CovClass& b) { return a.rep < b.rep; });
  out.counts = tally(d, g, out.classes);
  return out;
}

ClassCounts count_classes(int d, int g, const EnumerationOptions& options) {
  return enumerate_classes(d, g, options).counts;
}

ClassCounts tally(int d, int g, std::span<const CovClass> classes) {
  ClassCounts c;
  c.d = d;
  c.g = g;
  for (int h = 1; h <= d / 2; ++h) c.N1_by_h[h] = 0;
  for (const auto& cls : classes) {
    ++c.N;
    switch (cls.classification.kind) {
      case CovKind::kCov0: ++c.N0; break;
      case CovKind::kCov1:
        ++c.N1;
        ++c.N1_by_h[cls.classification.h];
        break;
      case CovKind::kCov2: ++c.N2; break;
      case CovKind::kCov3: ++c.N3; break;
    }
  }
  return c;
}

namespace reference {

CoverTuple canonical_form(const CoverTuple& tuple) {
  CoverTuple best = tuple;
  for (const auto& t : all_permutations(tuple.degree())) {
    CoverTuple candidate = hurwitz::conjugate(tuple, t);
    if (candidate < best) best = std::move(candidate);
  }
  return best;
}

ClassSet enumerate_classes(int d, int g) {
  check_degree_genus(d, g);
  const auto perms = all_permutations(d);
  const auto transpositions = all_transpositions(d);
  const std::size_t n = 2 * static_cast<std::size_t>(g) - 2;
  const std::size_t t_count = transpositions.size();

  ClassSet out;
  out.d = d;
  out.g = g;
  std::vector<CoverTuple> reps;
  std::vector<std::size_t> digits(n);
  std::vector<Permutation> gammas(n);
  for (const auto& alpha : perms) {
    for (const auto& beta : perms) {
      std::fill(digits.begin(), digits.end(), 0);
      while (true) {
        for (std::size_t i = 0; i < n; ++i) gammas[i] = transpositions[digits[i]];
        if (relation_holds(alpha, beta, gammas)) {
          CoverTuple t(alpha, beta, gammas);
          if (is_transitive(t.entries(), d)) {
            ++out.tuple_count;
            reps.push_back(reference::canonical_form(t));
          }
        }
        std::size_t pos = n;
        while (pos > 0 && ++digits[pos - 1] == t_count) digits[--pos] = 0;
        if (pos == 0) break;
      }
    }
  }
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  for (auto& rep : reps) {
    CovClass c;
    c.classification = classify(rep);
    c.stabilizer_order = 0;
    for (const auto& t : perms) c.stabilizer_order += hurwitz::conjugate(rep, t) == rep;
    c.rep = std::move(rep);
    out.classes.push_back(std::move(c));
  }
  out.counts = tally(d, g, out.classes);
  return out;
}

}  // namespace reference

}  // namespace hurwitz
