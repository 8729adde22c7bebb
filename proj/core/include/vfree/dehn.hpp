#pragma once

#include <vector>

#include "vfree/oracle.hpp"
#include "vfree/words.hpp"

namespace vfree {

// A length-reducing substitution: lhs and rhs represent the same group
// element and l(rhs) < l(lhs).
struct rewrite_rule {
  word lhs;
  word rhs;
};

// The finite rewrite system plus the pushdown machinery built on it.
// Valid only for a (generating set, k) pair under which k-locally
// geodesic words are geodesic; synthesize() enforces that.
class dehn_system {
 public:
  // One rule per minimal forbidden factor at level k; rhs is the ball's
  // ShortLex-least geodesic of the same element.  Rules sorted by
  // (lhs length, ShortLex).
  //
  // `certified` asserts that k-local exclusion holds for this pair:
  // either the construction plan guarantees it (k >= the plan's k') or
  // verify_locally_excluding(k, L) passed.  Refuses to build otherwise.
  static dehn_system synthesize(geodesic_oracle& oracle, int k,
                                bool certified);

  int k() const { return k_; }
  const std::vector<rewrite_rule>& rules() const { return rules_; }

  // Leftmost match first; at equal positions, rules in their sorted
  // order.  Terminates (every application shortens the word) at a word
  // with no lhs factor, i.e. a k-local geodesic, i.e. a geodesic.
  // `applications`, when given, accumulates the rule-application count.
  word reduce(word w, long* applications = nullptr) const;

  // True iff no rule lhs occurs as a factor of w.
  bool factor_free(const word& w) const;

 private:
  dehn_system() = default;
  int k_ = 0;
  std::vector<rewrite_rule> rules_;
};

// The stack of the pushdown word-problem procedure.  After every push
// the contents are a geodesic representative of the input read so far;
// each push pops at most 2k-2 symbols and reduces a window of length
// at most 2k-1.  Single-owner mutable state; the rule system is shared.
class geodesic_stack {
 public:
  explicit geodesic_stack(const dehn_system& sys, bool paranoid = false)
      : sys_(&sys), paranoid_(paranoid) {}

  void push(letter x);
  const word& contents() const { return contents_; }
  int pop_depth() const { return 2 * sys_->k() - 2; }
  // Largest rule-application count seen in a single push (regression
  // bound: constant in the input length).
  long max_applications_per_push() const { return max_apps_; }

 private:
  const dehn_system* sys_;
  bool paranoid_;
  word contents_;
  long max_apps_ = 0;
};

struct wp_result {
  bool is_identity;
  word final_stack;  // geodesic representative; its length is l_G(w)
  long max_applications_per_push;
};

// Feeds w left to right through a fresh stack.
wp_result word_problem(const dehn_system& sys, const word& w,
                       bool paranoid = false);

}  // namespace vfree
