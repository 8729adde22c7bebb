#include "vfree/oracle.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vfree {

geodesic_oracle::geodesic_oracle(generating_set gens, std::size_t budget)
    : gens_(std::move(gens)),
      budget_(budget),
      index_(16, elem_hash{gens_.top.get()}, elem_eq{gens_.top.get()}) {
  group_elem id = gens_.top->identity();
  elems_.push_back(id);
  len_.push_back(0);
  geo_.emplace_back();
  index_.emplace(id, 0);
  radius_ = 0;
}

void geodesic_oracle::grow(int radius) {
  while (radius_ < radius) {
    // Expand the outermost level; stop early once the ball is the whole
    // group (no new elements at some level).
    std::size_t level_begin = 0;
    while (level_begin < elems_.size() && len_[level_begin] < radius_)
      ++level_begin;
    std::size_t level_end = elems_.size();
    if (level_begin == level_end) {
      radius_ = radius;  // group exhausted
      return;
    }
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (letter x = 0; x < gens_.x.size(); ++x) {
        group_elem cand = gens_.top->mul(elems_[i], gens_.values[x]);
        if (index_.count(cand)) continue;
        if (elems_.size() >= budget_)
          throw budget_exceeded("ball budget of " + std::to_string(budget_) +
                                " elements exceeded at radius " +
                                std::to_string(radius_ + 1));
        index_.emplace(cand, elems_.size());
        elems_.push_back(cand);
        len_.push_back(radius_ + 1);
        word w = geo_[i];
        w.push_back(x);
        geo_.push_back(std::move(w));
      }
    }
    ++radius_;
  }
}

std::vector<std::size_t> geodesic_oracle::counts_by_length() const {
  std::vector<std::size_t> counts(radius_ + 1, 0);
  for (int l : len_)
    if (l <= radius_) ++counts[l];
  return counts;
}

std::optional<std::size_t> geodesic_oracle::index_of(
    const group_elem& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> geodesic_oracle::length_of(const group_elem& e) const {
  auto i = index_of(e);
  if (!i) return std::nullopt;
  return len_[*i];
}

const word& geodesic_oracle::geodesic_of(const group_elem& e) const {
  auto i = index_of(e);
  if (!i) throw validation_error("element outside the grown ball");
  return geo_[*i];
}

int geodesic_oracle::geodesic_length(const word& w) {
  grow(static_cast<int>(w.size()));
  return *length_of(gens_.evaluate(w));
}

bool geodesic_oracle::is_geodesic(const word& w) {
  return geodesic_length(w) == static_cast<int>(w.size());
}

bool geodesic_oracle::is_k_local_geodesic(const word& w, int k) {
  int n = static_cast<int>(w.size());
  int window = std::min(k, n);
  // Subwords of geodesics are geodesic, so checking every window of
  // length min(k, n) covers all subwords of length <= k.
  for (int start = 0; start + window <= n; ++start)
    if (!is_geodesic(word(w.begin() + start, w.begin() + start + window)))
      return false;
  return true;
}

std::vector<word> geodesic_oracle::geodesic_words(int max_len) {
  grow(max_len);
  std::vector<word> out;
  out.emplace_back();
  std::size_t level_begin = 0;
  for (int n = 1; n <= max_len; ++n) {
    std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (letter x = 0; x < gens_.x.size(); ++x) {
        word w = out[i];
        w.push_back(x);
        if (is_geodesic(w)) out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

std::vector<word> geodesic_oracle::exclusion_set(int k) {
  grow(k);
  std::vector<word> forbidden;
  // Extend geodesic words only: a minimal forbidden factor is a
  // non-geodesic word whose two length-(n-1) windows are geodesic.
  std::deque<word> frontier{word{}};
  for (int n = 1; n <= k && !frontier.empty(); ++n) {
    std::deque<word> next;
    for (const auto& u : frontier) {
      for (letter x = 0; x < gens_.x.size(); ++x) {
        word w = u;
        w.push_back(x);
        if (is_geodesic(w)) {
          next.push_back(std::move(w));
          continue;
        }
        if (n == 1 || is_geodesic(word(w.begin() + 1, w.end())))
          forbidden.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return forbidden;  // ShortLex-sorted by construction
}

std::optional<word> geodesic_oracle::verify_locally_excluding(int k,
                                                              int max_len) {
  std::set<word, shortlex_less> f;
  for (auto& w : exclusion_set(k)) f.insert(std::move(w));
  grow(max_len);
  auto avoids_at_end = [&](const word& w) {
    int n = static_cast<int>(w.size());
    for (int l = 1; l <= std::min(k, n); ++l)
      if (f.count(word(w.end() - l, w.end()))) return false;
    return true;
  };
  std::deque<word> frontier{word{}};
  for (int n = 1; n <= max_len && !frontier.empty(); ++n) {
    std::deque<word> next;
    for (const auto& u : frontier) {
      for (letter x = 0; x < gens_.x.size(); ++x) {
        word w = u;
        w.push_back(x);
        if (!avoids_at_end(w)) continue;
        if (!is_geodesic(w)) return w;  // ShortLex-least counterexample
        next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<int> geodesic_oracle::minimal_k(int max_len) {
  for (int k = 1; k <= max_len; ++k)
    if (!verify_locally_excluding(k, max_len)) return k;
  return std::nullopt;
}

std::vector<std::pair<std::size_t, std::size_t>>
geodesic_oracle::avoiding_vs_geodesic_counts(int k, int max_len) {
  std::set<word, shortlex_less> f;
  for (auto& w : exclusion_set(k)) f.insert(std::move(w));
  grow(max_len);
  auto avoids_at_end = [&](const word& w) {
    int n = static_cast<int>(w.size());
    for (int l = 1; l <= std::min(k, n); ++l)
      if (f.count(word(w.end() - l, w.end()))) return false;
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> counts(max_len + 1, {1, 1});
  std::deque<word> avoiding{word{}};
  std::deque<word> geodesics{word{}};
  for (int n = 1; n <= max_len; ++n) {
    std::deque<word> next_a, next_g;
    for (const auto& u : avoiding)
      for (letter x = 0; x < gens_.x.size(); ++x) {
        word w = u;
        w.push_back(x);
        if (avoids_at_end(w)) next_a.push_back(std::move(w));
      }
    for (const auto& u : geodesics)
      for (letter x = 0; x < gens_.x.size(); ++x) {
        word w = u;
        w.push_back(x);
        if (is_geodesic(w)) next_g.push_back(std::move(w));
      }
    counts[n] = {next_a.size(), next_g.size()};
    avoiding = std::move(next_a);
    geodesics = std::move(next_g);
  }
  return counts;
}

}  // namespace vfree
