#include "vfree/dehn.hpp"

#include <algorithm>

namespace vfree {

dehn_system dehn_system::synthesize(geodesic_oracle& oracle, int k,
                                    bool certified) {
  if (!certified)
    throw validation_error(
        "refusing to synthesize rules: the pair (X, k) carries neither the "
        "construction plan's guarantee nor a verification result");
  dehn_system sys;
  sys.k_ = k;
  for (auto& lhs : oracle.exclusion_set(k)) {
    group_elem e = oracle.gens().evaluate(lhs);
    word rhs = oracle.geodesic_of(e);
    sys.rules_.push_back({std::move(lhs), std::move(rhs)});
  }
  // exclusion_set is already ShortLex-sorted, which is exactly
  // (lhs length, ShortLex).
  return sys;
}

bool dehn_system::factor_free(const word& w) const {
  for (const auto& r : rules_) {
    if (r.lhs.size() > w.size()) continue;
    auto it = std::search(w.begin(), w.end(), r.lhs.begin(), r.lhs.end());
    if (it != w.end()) return false;
  }
  return true;
}

word dehn_system::reduce(word w, long* applications) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
      for (const auto& r : rules_) {
        if (pos + r.lhs.size() > w.size()) continue;
        if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) continue;
        word out(w.begin(), w.begin() + pos);
        out.insert(out.end(), r.rhs.begin(), r.rhs.end());
        out.insert(out.end(), w.begin() + pos + r.lhs.size(), w.end());
        w = std::move(out);
        if (applications) ++*applications;
        changed = true;
        break;
      }
    }
  }
  return w;
}

void geodesic_stack::push(letter x) {
  int depth = std::min<int>(pop_depth(), static_cast<int>(contents_.size()));
  word window(contents_.end() - depth, contents_.end());
  contents_.resize(contents_.size() - depth);
  window.push_back(x);
  long apps = 0;
  window = sys_->reduce(std::move(window), &apps);
  max_apps_ = std::max(max_apps_, apps);
  contents_.insert(contents_.end(), window.begin(), window.end());
  if (paranoid_ && !sys_->factor_free(contents_))
    throw validation_error("stack invariant broken: forbidden factor present");
}

wp_result word_problem(const dehn_system& sys, const word& w, bool paranoid) {
  geodesic_stack st(sys, paranoid);
  for (letter x : w) st.push(x);
  return {st.contents().empty(), st.contents(),
          st.max_applications_per_push()};
}

}  // namespace vfree
