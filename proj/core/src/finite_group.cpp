#include "vfree/finite_group.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace vfree {

bool name_shortlex_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

finite_group finite_group::from_table(std::vector<std::string> element_names,
                                      std::vector<std::vector<int>> table) {
  finite_group g;
  g.order_ = static_cast<int>(element_names.size());
  if (g.order_ == 0) throw spec_error("group must have at least the identity");
  if (static_cast<int>(table.size()) != g.order_)
    throw spec_error("table must have one row per element");
  g.names_ = std::move(element_names);
  g.mult_.resize(static_cast<size_t>(g.order_) * g.order_);
  for (int i = 0; i < g.order_; ++i) {
    if (static_cast<int>(table[i].size()) != g.order_)
      throw spec_error("table row " + std::to_string(i) + " has wrong width");
    for (int j = 0; j < g.order_; ++j) {
      int v = table[i][j];
      if (v < 0 || v >= g.order_)
        throw spec_error("table entry out of range at (" + std::to_string(i) +
                         "," + std::to_string(j) + ")");
      g.mult_[i * g.order_ + j] = v;
    }
  }
  g.validate();
  g.inv_.assign(g.order_, -1);
  for (int x = 0; x < g.order_; ++x)
    for (int y = 0; y < g.order_; ++y)
      if (g.mul(x, y) == 0 && g.mul(y, x) == 0) g.inv_[x] = y;
  for (int x = 0; x < g.order_; ++x)
    if (g.inv_[x] < 0)
      throw validation_error("element " + g.names_[x] +
                             " has no two-sided inverse");
  return g;
}

void finite_group::validate() const {
  int n = order_;
  // Identity row and column.
  for (int x = 0; x < n; ++x) {
    if (mul(0, x) != x)
      throw validation_error("identity row broken at " + names_[x]);
    if (mul(x, 0) != x)
      throw validation_error("identity column broken at " + names_[x]);
  }
  // Latin square.
  for (int x = 0; x < n; ++x) {
    std::vector<bool> row(n, false), col(n, false);
    for (int y = 0; y < n; ++y) {
      if (row[mul(x, y)])
        throw validation_error("row of " + names_[x] + " is not a permutation");
      row[mul(x, y)] = true;
      if (col[mul(y, x)])
        throw validation_error("column of " + names_[x] +
                               " is not a permutation");
      col[mul(y, x)] = true;
    }
  }
  auto assoc = [&](int x, int y, int z) {
    if (mul(mul(x, y), z) != mul(x, mul(y, z)))
      throw validation_error("associativity fails at (" + names_[x] + "," +
                             names_[y] + "," + names_[z] + ")");
  };
  if (n <= 512) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z) assoc(x, y, z);
  } else {
    std::mt19937_64 rng(0xa550c1a7e);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int i = 0; i < 10000; ++i) assoc(d(rng), d(rng), d(rng));
  }
}

finite_group finite_group::cyclic(int n) {
  if (n < 1) throw spec_error("cyclic order must be positive");
  std::vector<std::string> names;
  names.push_back("1");
  for (int i = 1; i < n; ++i)
    names.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  return from_table(std::move(names), std::move(table));
}

std::optional<int> finite_group::find(const std::string& name) const {
  for (int i = 0; i < order_; ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::optional<std::string> check_embedding(const subgroup_embedding& e) {
  const auto& s = *e.source;
  const auto& t = *e.target;
  if (static_cast<int>(e.map.size()) != s.order())
    return "map must cover every source element";
  for (int x = 0; x < s.order(); ++x)
    if (e.map[x] < 0 || e.map[x] >= t.order())
      return "image of " + s.name(x) + " out of range";
  if (e.map[0] != 0) return "identity must map to identity";
  std::set<int> image(e.map.begin(), e.map.end());
  if (static_cast<int>(image.size()) != s.order()) {
    for (int x = 0; x < s.order(); ++x)
      for (int y = x + 1; y < s.order(); ++y)
        if (e.map[x] == e.map[y])
          return "not injective: " + s.name(x) + " and " + s.name(y) +
                 " share image " + t.name(e.map[x]);
  }
  for (int x = 0; x < s.order(); ++x)
    for (int y = 0; y < s.order(); ++y)
      if (e.map[s.mul(x, y)] != t.mul(e.map[x], e.map[y]))
        return "not a homomorphism on (" + s.name(x) + "," + s.name(y) + ")";
  return std::nullopt;
}

std::vector<std::vector<int>> coset_partition(const finite_group& g,
                                              const std::vector<int>& sub) {
  std::set<int> s(sub.begin(), sub.end());
  if (!s.count(g.identity()))
    throw validation_error("subgroup must contain the identity");
  for (int x : s)
    for (int y : s)
      if (!s.count(g.mul(x, y)))
        throw validation_error("subgroup not closed under multiplication: " +
                               g.name(x) + " * " + g.name(y));
  std::vector<std::vector<int>> cosets;
  std::vector<bool> seen(g.order(), false);
  for (int x = 0; x < g.order(); ++x) {
    if (seen[x]) continue;
    std::vector<int> coset;
    for (int h : s) {
      int e = g.mul(h, x);
      coset.push_back(e);
      seen[e] = true;
    }
    std::sort(coset.begin(), coset.end());
    // Representative first: identity for the subgroup's own coset,
    // otherwise the ShortLex-least element name.
    auto rep = std::find(coset.begin(), coset.end(), g.identity());
    if (rep == coset.end())
      rep = std::min_element(coset.begin(), coset.end(), [&](int a, int b) {
        return name_shortlex_less(g.name(a), g.name(b));
      });
    std::iter_swap(coset.begin(), rep);
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

}  // namespace vfree
