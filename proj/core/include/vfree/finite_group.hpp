#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vfree/errors.hpp"

namespace vfree {

// A finite group given by its multiplication table.  Element 0 is the
// identity.  Validation is exhaustive up to order 512 and switches to
// 10,000 random associativity triples above that.
class finite_group {
 public:
  // Builds and validates; reports the offending pair/triple on failure.
  static finite_group from_table(std::vector<std::string> element_names,
                                 std::vector<std::vector<int>> table);

  // Cyclic group of order n with elements 1, g, g2, ..., g<n-1>.
  static finite_group cyclic(int n);

  static finite_group trivial() { return cyclic(1); }

  int order() const { return order_; }
  int identity() const { return 0; }
  int mul(int x, int y) const { return mult_[x * order_ + y]; }
  int inv(int x) const { return inv_[x]; }
  const std::string& name(int x) const { return names_.at(x); }
  std::optional<int> find(const std::string& name) const;

 private:
  finite_group() = default;
  void validate() const;
  int order_ = 0;
  std::vector<int> mult_;  // row-major order_ x order_
  std::vector<int> inv_;
  std::vector<std::string> names_;
};

// ShortLex on element names: shorter name first, then lexicographic.
// Anchors the coset-representative choice.
bool name_shortlex_less(const std::string& a, const std::string& b);

// An injective homomorphism between two multiplication-table groups.
// map[x] is the target index of source element x.
struct subgroup_embedding {
  const finite_group* source = nullptr;
  const finite_group* target = nullptr;
  std::vector<int> map;
};

// Empty result means the embedding is valid; otherwise a report naming
// the violating element or pair.
std::optional<std::string> check_embedding(const subgroup_embedding& e);

// Right cosets sub·g of a subgroup (given as element indices).  Each
// coset lists its members with the designated representative first:
// the ShortLex-least element name, except that the identity always
// represents sub itself.  Throws validation_error if sub is not a
// subgroup.
std::vector<std::vector<int>> coset_partition(const finite_group& g,
                                              const std::vector<int>& sub);

}  // namespace vfree
