#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vfree/graph_of_groups.hpp"

namespace vfree {

// Brute-force ground truth.  Grows the ball of the Cayley graph by BFS
// from the identity; the first visit fixes the geodesic length and the
// ShortLex-least geodesic word of each element (elements expanded in
// first-visit order, generators in alphabet order).
//
// Every enumeration fails loudly (budget_exceeded) instead of
// truncating: a truncated ball would silently corrupt every answer.
class geodesic_oracle {
 public:
  explicit geodesic_oracle(generating_set gens,
                           std::size_t budget = 1'000'000);

  const generating_set& gens() const { return gens_; }
  std::size_t budget() const { return budget_; }

  // Extends the cached ball to the given radius.
  void grow(int radius);
  int radius() const { return radius_; }
  std::size_t ball_size() const { return elems_.size(); }
  // counts[n] = number of elements of geodesic length exactly n.
  std::vector<std::size_t> counts_by_length() const;

  // Lookups grow the ball on demand (radius l(w) suffices for a word w).
  int geodesic_length(const word& w);
  bool is_geodesic(const word& w);
  // True iff all subwords of length <= k are geodesic.
  bool is_k_local_geodesic(const word& w, int k);

  // Lookup in the already-grown ball; nullopt if outside it.
  std::optional<int> length_of(const group_elem& e) const;
  // ShortLex-least geodesic of an element known to be in the ball.
  const word& geodesic_of(const group_elem& e) const;

  // Minimal forbidden factors at level k: non-geodesic words of length
  // <= k all of whose proper subwords are geodesic; ShortLex-sorted.
  // (The full set of all non-geodesic words of length <= k defines the
  // same factor-avoidance language; minimality keeps rule sets small.)
  std::vector<word> exclusion_set(int k);

  // Exhaustive check of "k-locally geodesic implies geodesic" for all
  // words of length <= max_len: nullopt if it holds, otherwise the
  // ShortLex-least word avoiding the forbidden factors yet non-geodesic.
  std::optional<word> verify_locally_excluding(int k, int max_len);

  // Least k <= max_len that verifies, or nullopt.  Evidence at this
  // scale only, not a proof.
  std::optional<int> minimal_k(int max_len);

  // All geodesic words of length <= max_len, ShortLex order.
  std::vector<word> geodesic_words(int max_len);

  // Per length n <= max_len: (words avoiding F(k), geodesic words).
  std::vector<std::pair<std::size_t, std::size_t>> avoiding_vs_geodesic_counts(
      int k, int max_len);

 private:
  struct elem_hash {
    const layer* l;
    std::size_t operator()(const group_elem& e) const { return l->hash(e); }
  };
  struct elem_eq {
    const layer* l;
    bool operator()(const group_elem& a, const group_elem& b) const {
      return l->equal(a, b);
    }
  };

  std::optional<std::size_t> index_of(const group_elem& e) const;

  generating_set gens_;
  std::size_t budget_;
  int radius_ = -1;
  std::vector<group_elem> elems_;  // first-visit (BFS) order
  std::vector<int> len_;
  std::vector<word> geo_;
  std::unordered_map<group_elem, std::size_t, elem_hash, elem_eq> index_;
};

}  // namespace vfree
