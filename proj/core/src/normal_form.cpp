#include "vfree/normal_form.hpp"

#include <algorithm>

namespace vfree {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

// ---------------------------------------------------------------- base

int base_layer::index(const group_elem& e) const {
  return std::get<base_rep>(e.rep()).idx;
}

group_elem base_layer::mul(const group_elem& x, const group_elem& y) const {
  return element(g_.mul(index(x), index(y)));
}

group_elem base_layer::inverse(const group_elem& x) const {
  return element(g_.inv(index(x)));
}

std::strong_ordering base_layer::compare(const group_elem& x,
                                         const group_elem& y) const {
  int i = index(x), j = index(y);
  if (i == j) return std::strong_ordering::equal;
  // Identity first, then name ShortLex; names are unique.
  if (i == 0) return std::strong_ordering::less;
  if (j == 0) return std::strong_ordering::greater;
  return name_shortlex_less(g_.name(i), g_.name(j))
             ? std::strong_ordering::less
             : std::strong_ordering::greater;
}

std::size_t base_layer::hash(const group_elem& x) const {
  return hash_combine(0x62617365, static_cast<std::size_t>(index(x)));
}

std::string base_layer::debug(const group_elem& x) const {
  return g_.name(index(x));
}

void base_layer::check(const group_elem& x) const {
  int i = index(x);
  if (i < 0 || i >= g_.order())
    throw validation_error("base element index out of range");
}

// ------------------------------------------------------------- amalgam

amalgam_layer::amalgam_layer(layer_ptr h, finite_group k, finite_group a,
                             std::vector<group_elem> a_in_h,
                             std::vector<int> a_in_k)
    : h_(std::move(h)),
      k_(std::move(k)),
      a_(std::move(a)),
      a_in_h_(std::move(a_in_h)),
      a_in_k_(std::move(a_in_k)) {
  if (static_cast<int>(a_in_h_.size()) != a_.order() ||
      static_cast<int>(a_in_k_.size()) != a_.order())
    throw validation_error("edge-group images must cover the edge group");
  if (!h_->is_identity(a_in_h_[0]) || a_in_k_[0] != 0)
    throw validation_error("edge-group identity must map to the identity");
  k_to_a_.assign(k_.order(), -1);
  for (int i = 0; i < a_.order(); ++i) k_to_a_[a_in_k_[i]] = i;
}

int amalgam_layer::find_in_a_h(const group_elem& f) const {
  for (int i = 0; i < a_.order(); ++i)
    if (h_->equal(a_in_h_[i], f)) return i;
  return -1;
}

std::pair<int, group_elem> amalgam_layer::decompose_h(
    const group_elem& f) const {
  int best_a = 0;
  group_elem best = f;  // candidate for a = identity
  for (int i = 1; i < a_.order(); ++i) {
    group_elem cand = h_->mul(h_->inverse(a_in_h_[i]), f);
    if (h_->compare(cand, best) == std::strong_ordering::less) {
      best = std::move(cand);
      best_a = i;
    }
  }
  return {best_a, best};
}

std::pair<int, int> amalgam_layer::decompose_k(int f) const {
  int best_a = 0, best = f;
  for (int i = 1; i < a_.order(); ++i) {
    int cand = k_.mul(k_.inv(a_in_k_[i]), f);
    if (name_shortlex_less(k_.name(cand), k_.name(best))) {
      best = cand;
      best_a = i;
    }
  }
  return {best_a, best};
}

group_elem amalgam_layer::left_mul_h_factor(
    group_elem f, const std::vector<amalgam_syllable>& tail,
    std::size_t pos) const {
  while (true) {
    if (int ai = find_in_a_h(f); ai >= 0)
      return group_elem(amalgam_rep{
          ai, std::vector<amalgam_syllable>(tail.begin() + pos, tail.end())});
    if (pos < tail.size() && tail[pos].h_side()) {
      f = h_->mul(f, std::get<group_elem>(tail[pos].c));
      ++pos;
      continue;
    }
    auto [a0, c] = decompose_h(f);
    std::vector<amalgam_syllable> sylls;
    sylls.reserve(tail.size() - pos + 1);
    sylls.push_back(amalgam_syllable{std::move(c)});
    sylls.insert(sylls.end(), tail.begin() + pos, tail.end());
    return group_elem(amalgam_rep{a0, std::move(sylls)});
  }
}

group_elem amalgam_layer::left_mul_k_factor(
    int f, const std::vector<amalgam_syllable>& tail, std::size_t pos) const {
  while (true) {
    if (int ai = k_to_a_[f]; ai >= 0)
      return group_elem(amalgam_rep{
          ai, std::vector<amalgam_syllable>(tail.begin() + pos, tail.end())});
    if (pos < tail.size() && !tail[pos].h_side()) {
      f = k_.mul(f, std::get<int>(tail[pos].c));
      ++pos;
      continue;
    }
    auto [a0, c] = decompose_k(f);
    std::vector<amalgam_syllable> sylls;
    sylls.reserve(tail.size() - pos + 1);
    sylls.push_back(amalgam_syllable{c});
    sylls.insert(sylls.end(), tail.begin() + pos, tail.end());
    return group_elem(amalgam_rep{a0, std::move(sylls)});
  }
}

group_elem amalgam_layer::left_mul_a(int a, const group_elem& g) const {
  const auto& r = std::get<amalgam_rep>(g.rep());
  return group_elem(amalgam_rep{a_.mul(a, r.a), r.sylls});
}

group_elem amalgam_layer::left_mul_syllable(const amalgam_syllable& f,
                                            const group_elem& g) const {
  const auto& r = std::get<amalgam_rep>(g.rep());
  if (f.h_side()) {
    group_elem f2 = h_->mul(std::get<group_elem>(f.c), a_in_h_[r.a]);
    return left_mul_h_factor(std::move(f2), r.sylls, 0);
  }
  int f2 = k_.mul(std::get<int>(f.c), a_in_k_[r.a]);
  return left_mul_k_factor(f2, r.sylls, 0);
}

group_elem amalgam_layer::mul(const group_elem& x, const group_elem& y) const {
  const auto& rx = std::get<amalgam_rep>(x.rep());
  group_elem res = y;
  for (auto it = rx.sylls.rbegin(); it != rx.sylls.rend(); ++it)
    res = left_mul_syllable(*it, res);
  return left_mul_a(rx.a, res);
}

group_elem amalgam_layer::inverse(const group_elem& x) const {
  const auto& rx = std::get<amalgam_rep>(x.rep());
  group_elem res(amalgam_rep{a_.inv(rx.a), {}});
  for (const auto& s : rx.sylls) {
    amalgam_syllable si = s.h_side()
        ? amalgam_syllable{h_->inverse(std::get<group_elem>(s.c))}
        : amalgam_syllable{k_.inv(std::get<int>(s.c))};
    res = left_mul_syllable(si, res);
  }
  return res;
}

group_elem amalgam_layer::embed_h(const group_elem& h) const {
  return left_mul_h_factor(h, {}, 0);
}

group_elem amalgam_layer::embed_k(int k_elt) const {
  return left_mul_k_factor(k_elt, {}, 0);
}

int amalgam_layer::syllable_length(const group_elem& e) const {
  return static_cast<int>(std::get<amalgam_rep>(e.rep()).sylls.size());
}

std::strong_ordering amalgam_layer::compare(const group_elem& x,
                                            const group_elem& y) const {
  const auto& rx = std::get<amalgam_rep>(x.rep());
  const auto& ry = std::get<amalgam_rep>(y.rep());
  if (rx.sylls.size() != ry.sylls.size())
    return rx.sylls.size() <=> ry.sylls.size();
  for (std::size_t i = 0; i < rx.sylls.size(); ++i) {
    const auto& sx = rx.sylls[i];
    const auto& sy = ry.sylls[i];
    if (sx.h_side() != sy.h_side())
      return sx.h_side() ? std::strong_ordering::less
                         : std::strong_ordering::greater;
    if (sx.h_side()) {
      auto c = h_->compare(std::get<group_elem>(sx.c),
                           std::get<group_elem>(sy.c));
      if (c != std::strong_ordering::equal) return c;
    } else {
      int cx = std::get<int>(sx.c), cy = std::get<int>(sy.c);
      if (cx != cy)
        return name_shortlex_less(k_.name(cx), k_.name(cy))
                   ? std::strong_ordering::less
                   : std::strong_ordering::greater;
    }
  }
  if (rx.a == ry.a) return std::strong_ordering::equal;
  if (rx.a == 0) return std::strong_ordering::less;
  if (ry.a == 0) return std::strong_ordering::greater;
  return name_shortlex_less(a_.name(rx.a), a_.name(ry.a))
             ? std::strong_ordering::less
             : std::strong_ordering::greater;
}

std::size_t amalgam_layer::hash(const group_elem& x) const {
  const auto& r = std::get<amalgam_rep>(x.rep());
  std::size_t h = hash_combine(0x616d616c, static_cast<std::size_t>(r.a));
  for (const auto& s : r.sylls) {
    h = hash_combine(h, s.h_side() ? 0u : 1u);
    h = hash_combine(h, s.h_side()
                            ? h_->hash(std::get<group_elem>(s.c))
                            : static_cast<std::size_t>(std::get<int>(s.c)));
  }
  return h;
}

std::string amalgam_layer::debug(const group_elem& x) const {
  const auto& r = std::get<amalgam_rep>(x.rep());
  std::string out = "[" + a_.name(r.a);
  for (const auto& s : r.sylls) {
    out += s.h_side() ? " H:" + h_->debug(std::get<group_elem>(s.c))
                      : " K:" + k_.name(std::get<int>(s.c));
  }
  return out + "]";
}

void amalgam_layer::check(const group_elem& x) const {
  const auto& r = std::get<amalgam_rep>(x.rep());
  if (r.a < 0 || r.a >= a_.order())
    throw validation_error("amalgam a-part out of range");
  for (std::size_t i = 0; i < r.sylls.size(); ++i) {
    const auto& s = r.sylls[i];
    if (i > 0 && s.h_side() == r.sylls[i - 1].h_side())
      throw validation_error("amalgam syllables do not alternate");
    if (s.h_side()) {
      const auto& c = std::get<group_elem>(s.c);
      h_->check(c);
      if (find_in_a_h(c) >= 0)
        throw validation_error("H-side syllable lies in the edge group");
      auto [a0, cc] = decompose_h(c);
      if (a0 != 0 || !h_->equal(cc, c))
        throw validation_error("H-side syllable is not the canonical rep");
    } else {
      int c = std::get<int>(s.c);
      if (k_to_a_[c] >= 0)
        throw validation_error("K-side syllable lies in the edge group");
      auto [a0, cc] = decompose_k(c);
      if (a0 != 0 || cc != c)
        throw validation_error("K-side syllable is not the canonical rep");
    }
  }
}

// ----------------------------------------------------------------- hnn

hnn_layer::hnn_layer(layer_ptr h, std::vector<group_elem> a_in_h,
                     std::vector<group_elem> b_in_h)
    : h_(std::move(h)), a_in_h_(std::move(a_in_h)), b_in_h_(std::move(b_in_h)) {
  if (a_in_h_.empty() || a_in_h_.size() != b_in_h_.size())
    throw validation_error("associated subgroups must have equal order >= 1");
  if (!h_->is_identity(a_in_h_[0]) || !h_->is_identity(b_in_h_[0]))
    throw validation_error("edge-group identity must map to the identity");
}

group_elem hnn_layer::stable_letter(int eps) const {
  return group_elem(hnn_rep{h_->identity(), {{eps, h_->identity()}}});
}

std::pair<int, group_elem> hnn_layer::coset_decompose(const group_elem& h,
                                                      int eps) const {
  const auto& sub = eps == 1 ? a_in_h_ : b_in_h_;
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (h_->equal(sub[i], h)) return {static_cast<int>(i), h_->identity()};
  int best_u = 0;
  group_elem best = h;
  for (std::size_t i = 1; i < sub.size(); ++i) {
    group_elem cand = h_->mul(h_->inverse(sub[i]), h);
    if (h_->compare(cand, best) == std::strong_ordering::less) {
      best = std::move(cand);
      best_u = static_cast<int>(i);
    }
  }
  return {best_u, best};
}

group_elem hnn_layer::left_mul_h(const group_elem& h,
                                 const group_elem& g) const {
  const auto& r = std::get<hnn_rep>(g.rep());
  return group_elem(hnn_rep{h_->mul(h, r.head), r.tail});
}

group_elem hnn_layer::left_mul_t(int eps, const group_elem& g) const {
  const auto& r = std::get<hnn_rep>(g.rep());
  // t a = phi(a) t for a in A;  t^-1 b = phi^-1(b) t^-1 for b in B.
  auto [u, c] = coset_decompose(r.head, eps);
  group_elem moved = eps == 1 ? b_in_h_[u] : a_in_h_[u];
  if (h_->is_identity(c) && !r.tail.empty() && r.tail[0].eps == -eps) {
    // Pinch: t^eps t^-eps cancels and the neighbouring reps merge.
    group_elem head2 = h_->mul(moved, r.tail[0].rep);
    return group_elem(hnn_rep{
        std::move(head2),
        std::vector<hnn_syllable>(r.tail.begin() + 1, r.tail.end())});
  }
  std::vector<hnn_syllable> tail;
  tail.reserve(r.tail.size() + 1);
  tail.push_back(hnn_syllable{eps, std::move(c)});
  tail.insert(tail.end(), r.tail.begin(), r.tail.end());
  return group_elem(hnn_rep{std::move(moved), std::move(tail)});
}

group_elem hnn_layer::mul(const group_elem& x, const group_elem& y) const {
  const auto& rx = std::get<hnn_rep>(x.rep());
  group_elem res = y;
  for (auto it = rx.tail.rbegin(); it != rx.tail.rend(); ++it) {
    res = left_mul_h(it->rep, res);
    res = left_mul_t(it->eps, res);
  }
  return left_mul_h(rx.head, res);
}

group_elem hnn_layer::inverse(const group_elem& x) const {
  const auto& rx = std::get<hnn_rep>(x.rep());
  group_elem res(hnn_rep{h_->inverse(rx.head), {}});
  for (const auto& s : rx.tail) {
    res = left_mul_t(-s.eps, res);
    res = left_mul_h(h_->inverse(s.rep), res);
  }
  return res;
}

int hnn_layer::syllable_length(const group_elem& e) const {
  return static_cast<int>(std::get<hnn_rep>(e.rep()).tail.size());
}

std::strong_ordering hnn_layer::compare(const group_elem& x,
                                        const group_elem& y) const {
  const auto& rx = std::get<hnn_rep>(x.rep());
  const auto& ry = std::get<hnn_rep>(y.rep());
  if (rx.tail.size() != ry.tail.size())
    return rx.tail.size() <=> ry.tail.size();
  if (auto c = h_->compare(rx.head, ry.head); c != std::strong_ordering::equal)
    return c;
  for (std::size_t i = 0; i < rx.tail.size(); ++i) {
    if (rx.tail[i].eps != ry.tail[i].eps)
      return rx.tail[i].eps <=> ry.tail[i].eps;
    if (auto c = h_->compare(rx.tail[i].rep, ry.tail[i].rep);
        c != std::strong_ordering::equal)
      return c;
  }
  return std::strong_ordering::equal;
}

std::size_t hnn_layer::hash(const group_elem& x) const {
  const auto& r = std::get<hnn_rep>(x.rep());
  std::size_t h = hash_combine(0x686e6e, h_->hash(r.head));
  for (const auto& s : r.tail) {
    h = hash_combine(h, static_cast<std::size_t>(s.eps + 2));
    h = hash_combine(h, h_->hash(s.rep));
  }
  return h;
}

std::string hnn_layer::debug(const group_elem& x) const {
  const auto& r = std::get<hnn_rep>(x.rep());
  std::string out = "{" + h_->debug(r.head);
  for (const auto& s : r.tail) {
    out += s.eps == 1 ? " t " : " t^-1 ";
    out += h_->debug(s.rep);
  }
  return out + "}";
}

void hnn_layer::check(const group_elem& x) const {
  const auto& r = std::get<hnn_rep>(x.rep());
  h_->check(r.head);
  for (std::size_t i = 0; i < r.tail.size(); ++i) {
    const auto& s = r.tail[i];
    if (s.eps != 1 && s.eps != -1)
      throw validation_error("hnn exponent must be +-1");
    h_->check(s.rep);
    if (h_->is_identity(s.rep)) {
      // Britton condition: no t^eps 1 t^-eps.
      if (i + 1 < r.tail.size() && r.tail[i + 1].eps != s.eps)
        throw validation_error("Britton condition violated");
    } else {
      auto [u, c] = coset_decompose(s.rep, s.eps);
      if (u != 0 || !h_->equal(c, s.rep))
        throw validation_error("hnn syllable is not the canonical rep");
    }
  }
}

std::pair<group_elem, group_elem> canonical_coset_rep(
    const layer& l, const group_elem& h, const std::vector<group_elem>& sub) {
  for (const auto& a : sub)
    if (l.equal(a, h)) return {h, l.identity()};
  group_elem best_a = sub.at(0);
  group_elem best = h;
  for (std::size_t i = 1; i < sub.size(); ++i) {
    group_elem cand = l.mul(l.inverse(sub[i]), h);
    if (l.compare(cand, best) == std::strong_ordering::less) {
      best = std::move(cand);
      best_a = sub[i];
    }
  }
  return {best_a, best};
}

}  // namespace vfree
