#include "hurwitz/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hurwitz {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree) {
    throw std::invalid_argument("degree " + std::to_string(degree) + " outside [1, " +
                                std::to_string(kMaxDegree) + "]");
  }
}

void check_same_degree(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  }
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Permutation Permutation::identity(int degree) {
  check_degree(degree);
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) p.images_[i] = static_cast<Letter>(i);
  return p;
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int degree = static_cast<int>(images.size());
  check_degree(degree);
  std::array<bool, kMaxDegree> seen{};
  Permutation p;
  p.degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < degree; ++i) {
    const int y = images[i];
    if (y < 0 || y >= degree || seen[y]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[y] = true;
    p.images_[i] = static_cast<Letter>(y);
  }
  return p;
}

Permutation Permutation::from_images(std::initializer_list<int> images) {
  return from_images(std::span<const int>(images.begin(), images.size()));
}

Permutation Permutation::transposition(int degree, int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= degree || b >= degree) {
    throw std::invalid_argument("bad transposition letters");
  }
  Permutation p = identity(degree);
  p.images_[a] = static_cast<Letter>(b);
  p.images_[b] = static_cast<Letter>(a);
  return p;
}

Permutation Permutation::cycle(int degree, std::initializer_list<int> letters) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  const std::vector<int> c(letters);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0 || c[i] >= degree) throw std::invalid_argument("cycle letter out of range");
    images[c[i]] = c[(i + 1) % c.size()];
  }
  return from_images(images);
}

bool Permutation::is_identity() const noexcept { return support_size() == 0; }

int Permutation::support_size() const noexcept {
  int moved = 0;
  for (int i = 0; i < degree_; ++i) moved += images_[i] != i;
  return moved;
}

int Permutation::cycle_count() const noexcept {
  std::array<bool, kMaxDegree> seen{};
  int cycles = 0;
  for (int i = 0; i < degree_; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
  }
  return cycles;
}

std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.images_.begin(), a.images_.begin() + a.degree_,
                                                b.images_.begin(), b.images_.begin() + b.degree_);
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  check_same_degree(p, q);
  Permutation r;
  r.degree_ = p.degree_;
  for (int i = 0; i < p.degree_; ++i) r.images_[i] = p.images_[q.images_[i]];
  return r;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation inverse(const Permutation& p) {
  Permutation r;
  r.degree_ = p.degree_;
  for (int i = 0; i < p.degree_; ++i) r.images_[p.images_[i]] = static_cast<Letter>(i);
  return r;
}

Permutation conjugate(const Permutation& p, const Permutation& t) { return inverse(t) * p * t; }

Permutation commutator(const Permutation& a, const Permutation& b) {
  return inverse(b) * inverse(a) * b * a;
}

Permutation product(std::span<const Permutation> factors, int degree) {
  Permutation r = Permutation::identity(degree);
  for (const auto& f : factors) r = r * f;
  return r;
}

CycleType cycle_type(const Permutation& p) {
  CycleType t;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    t.lengths.push_back(len);
  }
  std::sort(t.lengths.begin(), t.lengths.end());
  return t;
}

bool is_transposition(const Permutation& p) noexcept {
  int moved = 0;
  for (int i = 0; i < p.degree(); ++i) {
    if (p[i] != i) {
      if (++moved > 2 || p[p[i]] != i) return false;
    }
  }
  return moved == 2;
}

std::pair<int, int> transposition_support(const Permutation& p) {
  if (!is_transposition(p)) {
    throw std::invalid_argument("not a transposition: " + to_cycle_string(p));
  }
  int a = 0;
  while (p[a] == a) ++a;
  return {a, p[a]};
}

std::vector<Permutation> all_transpositions(int degree) {
  std::vector<Permutation> out;
  for (int a = 0; a < degree; ++a)
    for (int b = a + 1; b < degree; ++b) out.push_back(Permutation::transposition(degree, a, b));
  return out;
}

std::vector<Permutation> all_permutations(int degree) {
  check_degree(degree);
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::vector<std::vector<int>> orbits(std::span<const Permutation> generators, int degree) {
  std::vector<int> parent(static_cast<std::size_t>(degree));
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    for (int i = 0; i < degree; ++i) {
      const int a = find_root(parent, i);
      const int b = find_root(parent, g[i]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> block_of(static_cast<std::size_t>(degree), -1);
  for (int i = 0; i < degree; ++i) {
    const int r = find_root(parent, i);
    if (block_of[r] < 0) {
      block_of[r] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[r]].push_back(i);
  }
  return blocks;
}

bool is_transitive(std::span<const Permutation> generators, int degree) {
  return orbits(generators, degree).size() == 1;
}

bool relation_holds(const Permutation& a, const Permutation& b, std::span<const Permutation> gammas) {
  check_same_degree(a, b);
  for (const auto& g : gammas) check_same_degree(a, g);
  return commutator(a, b) == product(gammas, a.degree());
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream os;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    os << '(';
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      if (j != i) os << ' ';
      os << j + 1;
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "id" : s;
}

Permutation parse_cycles(std::string_view text, int degree) {
  check_degree(degree);
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("cannot parse '" + std::string(text) + "': " + why);
  };
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(degree), false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i).starts_with("id")) {
    i += 2;
    skip_ws();
    if (i != text.size()) fail("trailing characters after 'id'");
    return Permutation::identity(degree);
  }
  bool any = false;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') fail("expected '('");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) fail("unbalanced '('");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    i = close + 1;

    std::vector<int> cycle;
    std::vector<std::string> tokens;
    std::istringstream is{std::string(body)};
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    if (tokens.size() == 1 && tokens[0].size() > 1 && degree <= 9) {
      // compact "(123)"
      const std::string compact = tokens[0];
      tokens.clear();
      for (char c : compact) tokens.emplace_back(1, c);
    }
    for (const auto& tok : tokens) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        fail("non-numeric letter '" + tok + "'");
      }
      const int letter = std::stoi(tok) - 1;
      if (letter < 0 || letter >= degree) fail("letter " + tok + " out of range");
      if (used[letter]) fail("letter " + tok + " repeated");
      used[letter] = true;
      cycle.push_back(letter);
    }
    if (cycle.empty()) fail("empty cycle");
    for (std::size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
    any = true;
  }
  if (!any) fail("empty input");
  return Permutation::from_images(images);
}

}  // namespace hurwitz
