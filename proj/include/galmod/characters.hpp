#pragma once

#include <memory>
#include <vector>

#include "galmod/abelian_group.hpp"
#include "galmod/cyclotomic.hpp"

namespace galmod {

/// chi sends the i-th generator to zeta_{d_i}^{images[i]}.
using Character = std::vector<long>;

/// Dual group data of G. Characters are indexed like elements of G
/// (lexicographically by images), and chi(s) = zeta_m^{exponent(chi, s)}
/// with m = exp(G).
class CharacterTable {
 public:
  explicit CharacterTable(std::shared_ptr<const FiniteAbelianGroup> g);

  const FiniteAbelianGroup& group() const { return *group_; }
  const std::shared_ptr<const FiniteAbelianGroup>& group_ptr() const { return group_; }
  std::size_t size() const { return static_cast<std::size_t>(group_->order()); }
  long modulus() const { return group_->exponent(); }

  Character character(std::size_t index) const { return group_->element_at(index); }
  std::size_t index_of(const Character& chi) const { return group_->index_of(chi); }

  /// Exponent of chi(s) as a power of zeta_m, in [0, m).
  long exponent(std::size_t chi, std::size_t s) const { return exps_[chi * size() + s]; }

  std::size_t trivial() const { return 0; }
  std::size_t inverse(std::size_t chi) const { return group_->index_of(group_->negate(character(chi))); }
  std::size_t product(std::size_t a, std::size_t b) const {
    return group_->index_of(group_->add(character(a), character(b)));
  }
  std::size_t power(std::size_t chi, long k) const { return group_->index_of(group_->multiple(character(chi), k)); }

 private:
  std::shared_ptr<const FiniteAbelianGroup> group_;
  std::vector<long> exps_;
};

long character_exponent(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s);

/// chi(s) in Q(zeta_N); N must be a multiple of exp(G).
CycNumber char_value(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s, long N);

}  // namespace galmod
