#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "vfree/finite_group.hpp"

namespace vfree {

struct elem_rep;

// One element of a constructed group, in canonical normal form.
// Immutable; copies share the representation.  Arithmetic is dispatched
// through the layer that produced the element.
class group_elem {
 public:
  group_elem() = default;  // null; only valid as a placeholder
  explicit group_elem(elem_rep r);
  const elem_rep& rep() const { return *rep_; }
  bool null() const { return !rep_; }

 private:
  std::shared_ptr<const elem_rep> rep_;
};

// Base layer: the element is a finite-group index.
struct base_rep {
  int idx;
};

// Amalgam layer G = H *_A K: the element is a * c1 ... cs with a in the
// edge group A and the c_i alternating canonical coset representatives,
// H-side ones from H \ A and K-side ones from K \ A.
struct amalgam_syllable {
  // alternative 0: H-side representative; alternative 1: K element index
  std::variant<group_elem, int> c;
  bool h_side() const { return c.index() == 0; }
};
struct amalgam_rep {
  int a;  // edge-group element index
  std::vector<amalgam_syllable> sylls;
};

// HNN layer G = <H, t | t a t^-1 = phi(a)>: the element is
// h t^{e1} c1 ... t^{es} cs with each c_i the canonical right coset
// representative of A (e_i = +1) or B (e_i = -1) in H.
struct hnn_syllable {
  int eps;         // +1 or -1
  group_elem rep;  // coset representative (identity allowed)
};
struct hnn_rep {
  group_elem head;
  std::vector<hnn_syllable> tail;
};

struct elem_rep : std::variant<base_rep, amalgam_rep, hnn_rep> {
  using variant::variant;
};

inline group_elem::group_elem(elem_rep r)
    : rep_(std::make_shared<const elem_rep>(std::move(r))) {}

// One construction layer.  compare() is the total order used to pick
// canonical coset representatives: base elements by name ShortLex,
// layered forms by syllable length then components.  The identity is
// handled separately and always represents its own coset.
class layer {
 public:
  virtual ~layer() = default;
  virtual group_elem identity() const = 0;
  virtual group_elem mul(const group_elem&, const group_elem&) const = 0;
  virtual group_elem inverse(const group_elem&) const = 0;
  virtual std::strong_ordering compare(const group_elem&,
                                       const group_elem&) const = 0;
  virtual std::size_t hash(const group_elem&) const = 0;
  // Nested bracketed text, stable across runs (golden-file tests).
  virtual std::string debug(const group_elem&) const = 0;
  // Structural scan: alternation / Britton condition / representative
  // canonicality, recursively.  Throws validation_error on violation.
  virtual void check(const group_elem&) const = 0;

  bool equal(const group_elem& x, const group_elem& y) const {
    return compare(x, y) == std::strong_ordering::equal;
  }
  bool is_identity(const group_elem& x) const { return equal(x, identity()); }
};

using layer_ptr = std::shared_ptr<const layer>;

class base_layer final : public layer {
 public:
  explicit base_layer(finite_group g) : g_(std::move(g)) {}
  const finite_group& group() const { return g_; }
  group_elem element(int idx) const { return group_elem(base_rep{idx}); }
  int index(const group_elem& e) const;

  group_elem identity() const override { return element(0); }
  group_elem mul(const group_elem&, const group_elem&) const override;
  group_elem inverse(const group_elem&) const override;
  std::strong_ordering compare(const group_elem&,
                               const group_elem&) const override;
  std::size_t hash(const group_elem&) const override;
  std::string debug(const group_elem&) const override;
  void check(const group_elem&) const override;

 private:
  finite_group g_;
};

class amalgam_layer final : public layer {
 public:
  // a_in_h[i] / a_in_k[i]: image in H / in K of edge-group element i.
  amalgam_layer(layer_ptr h, finite_group k, finite_group a,
                std::vector<group_elem> a_in_h, std::vector<int> a_in_k);

  group_elem embed_h(const group_elem& h) const;
  group_elem embed_k(int k_elt) const;
  int syllable_length(const group_elem& e) const;
  const layer& h_layer() const { return *h_; }
  const finite_group& k_group() const { return k_; }

  group_elem identity() const override {
    return group_elem(amalgam_rep{0, {}});
  }
  group_elem mul(const group_elem&, const group_elem&) const override;
  group_elem inverse(const group_elem&) const override;
  std::strong_ordering compare(const group_elem&,
                               const group_elem&) const override;
  std::size_t hash(const group_elem&) const override;
  std::string debug(const group_elem&) const override;
  void check(const group_elem&) const override;

 private:
  group_elem left_mul_a(int a, const group_elem& g) const;
  group_elem left_mul_syllable(const amalgam_syllable& f,
                               const group_elem& g) const;
  group_elem left_mul_h_factor(group_elem f,
                               const std::vector<amalgam_syllable>& tail,
                               std::size_t pos) const;
  group_elem left_mul_k_factor(int f,
                               const std::vector<amalgam_syllable>& tail,
                               std::size_t pos) const;
  // f = iota(a0) * c with c the least element of its right coset; f not
  // in the image of A.
  std::pair<int, group_elem> decompose_h(const group_elem& f) const;
  std::pair<int, int> decompose_k(int f) const;
  int find_in_a_h(const group_elem& f) const;  // -1 if not in the image

  layer_ptr h_;
  finite_group k_;
  finite_group a_;
  std::vector<group_elem> a_in_h_;
  std::vector<int> a_in_k_;
  std::vector<int> k_to_a_;  // K index -> A index, -1 outside the image
};

class hnn_layer final : public layer {
 public:
  // phi(a_in_h[i]) = b_in_h[i]; index 0 is the identity on both sides.
  hnn_layer(layer_ptr h, std::vector<group_elem> a_in_h,
            std::vector<group_elem> b_in_h);

  group_elem embed_h(const group_elem& h) const {
    return group_elem(hnn_rep{h, {}});
  }
  group_elem stable_letter(int eps) const;
  int syllable_length(const group_elem& e) const;
  const layer& h_layer() const { return *h_; }
  int edge_order() const { return static_cast<int>(a_in_h_.size()); }
  const group_elem& a_image(int i) const { return a_in_h_[i]; }
  const group_elem& b_image(int i) const { return b_in_h_[i]; }

  group_elem identity() const override {
    return group_elem(hnn_rep{h_->identity(), {}});
  }
  group_elem mul(const group_elem&, const group_elem&) const override;
  group_elem inverse(const group_elem&) const override;
  std::strong_ordering compare(const group_elem&,
                               const group_elem&) const override;
  std::size_t hash(const group_elem&) const override;
  std::string debug(const group_elem&) const override;
  void check(const group_elem&) const override;

 private:
  group_elem left_mul_h(const group_elem& h, const group_elem& g) const;
  group_elem left_mul_t(int eps, const group_elem& g) const;
  // h = iota(u) * c w.r.t. A (eps=+1) or B (eps=-1); c least in its coset,
  // identity when h lies in the subgroup.
  std::pair<int, group_elem> coset_decompose(const group_elem& h,
                                             int eps) const;

  layer_ptr h_;
  std::vector<group_elem> a_in_h_;
  std::vector<group_elem> b_in_h_;
};

// Splits h = a * c over a finite subgroup given by its element list
// (index 0 the identity): c is the least of {a^-1 h : a in sub} under
// the layer's total order, with c = identity whenever h lies in sub.
// Returns (a, c).
std::pair<group_elem, group_elem> canonical_coset_rep(
    const layer& l, const group_elem& h, const std::vector<group_elem>& sub);

}  // namespace vfree
