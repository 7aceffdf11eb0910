#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace galmod {

using GroupElement = std::vector<long>;

/// Finite abelian group of odd order, stored by invariant factors d_1 | ... | d_k.
class FiniteAbelianGroup {
 public:
  /// Accepts arbitrary cyclic factors and brings them to invariant-factor form.
  explicit FiniteAbelianGroup(const std::vector<long>& factors);

  /// Parses "d1,d2,...".
  static FiniteAbelianGroup parse(const std::string& spec);

  const std::vector<long>& invariant_factors() const { return d_; }
  std::size_t rank() const { return d_.size(); }
  long order() const { return order_; }
  long exponent() const { return d_.empty() ? 1 : d_.back(); }

  GroupElement identity() const { return GroupElement(d_.size(), 0); }
  void validate(const GroupElement& s) const;
  bool is_valid(const GroupElement& s) const;

  GroupElement add(const GroupElement& s, const GroupElement& t) const;
  GroupElement negate(const GroupElement& s) const;
  GroupElement multiple(const GroupElement& s, long n) const;

  /// Position of s in lexicographic enumeration.
  std::size_t index_of(const GroupElement& s) const;
  GroupElement element_at(std::size_t index) const;
  std::vector<GroupElement> elements() const;

  std::string spec() const;
  std::string format(const GroupElement& s) const;
  GroupElement parse_element(const std::string& text) const;

  bool operator==(const FiniteAbelianGroup& other) const { return d_ == other.d_; }

 private:
  std::vector<long> d_;
  long order_ = 1;
};

long element_order(const FiniteAbelianGroup& g, const GroupElement& s);

/// Elements whose order divides d, sorted.
std::vector<GroupElement> bounded_order_subgroup(const FiniteAbelianGroup& g, long d);

/// s^{k^n}; negative n uses the inverse of k modulo exp(G).
GroupElement twist_action(const FiniteAbelianGroup& g, const GroupElement& s, long k, long n);

/// Elements of the cyclic subgroup generated by s, in the order 1, s, s^2, ...
std::vector<GroupElement> cyclic_subgroup(const FiniteAbelianGroup& g, const GroupElement& s);

}  // namespace galmod
