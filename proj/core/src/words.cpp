#include "vfree/words.hpp"

#include <algorithm>
#include <sstream>

namespace vfree {

letter alphabet::add_one(std::string name) {
  if (name.empty()) throw spec_error("letter name may not be empty");
  if (index_.count(name))
    throw spec_error("duplicate letter name: " + name);
  letter x = static_cast<letter>(names_.size());
  index_.emplace(name, x);
  names_.push_back(std::move(name));
  inv_.push_back(x);
  return x;
}

letter alphabet::add_involution(std::string name) {
  return add_one(std::move(name));
}

letter alphabet::add_pair(std::string name, std::string inverse_name) {
  letter x = add_one(std::move(name));
  letter y = add_one(std::move(inverse_name));
  inv_[x] = y;
  inv_[y] = x;
  return x;
}

void alphabet::pair(letter x, letter y) {
  if (x == y) return;
  if (inv_[x] != x || inv_[y] != y)
    throw spec_error("letter inverse pairing already set");
  inv_[x] = y;
  inv_[y] = x;
}

std::optional<letter> alphabet::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool alphabet::well_formed() const {
  for (letter x = 0; x < size(); ++x)
    if (inv_[inv_[x]] != x) return false;
  return true;
}

word formal_inverse(const alphabet& a, const word& w) {
  word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(a.inverse(*it));
  return out;
}

std::vector<word> subwords(const word& w, int max_len) {
  std::vector<word> out;
  int n = static_cast<int>(w.size());
  for (int len = 1; len <= std::min(max_len, n); ++len)
    for (int start = 0; start + len <= n; ++start)
      out.emplace_back(w.begin() + start, w.begin() + start + len);
  return out;
}

std::strong_ordering shortlex_compare(const word& u, const word& v) {
  if (u.size() != v.size()) return u.size() <=> v.size();
  for (size_t i = 0; i < u.size(); ++i)
    if (u[i] != v[i]) return u[i] <=> v[i];
  return std::strong_ordering::equal;
}

word parse_word(const alphabet& a, std::string_view text) {
  word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    auto x = a.find(tok);
    if (!x) throw spec_error("unknown letter: " + tok);
    out.push_back(*x);
  }
  return out;
}

std::string format_word(const alphabet& a, const word& w) {
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += a.name(w[i]);
  }
  return out;
}

}  // namespace vfree
