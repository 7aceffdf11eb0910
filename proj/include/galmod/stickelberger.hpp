#pragma once

#include <memory>
#include <vector>

#include "galmod/characters.hpp"
#include "galmod/rational.hpp"

namespace galmod {

/// Element of Z[G^], dense over the character indexing of CharacterTable.
using CharCombo = std::vector<long>;

/// Precomputed centered exponents upsilon(chi, s) in [(1-|s|)/2, (|s|-1)/2]
/// with chi(s) = zeta_{|s|}^upsilon. The active mutation is read once, at
/// construction.
class StickelbergerTable {
 public:
  explicit StickelbergerTable(std::shared_ptr<const FiniteAbelianGroup> g);

  const CharacterTable& characters() const { return chars_; }
  const FiniteAbelianGroup& group() const { return chars_.group(); }
  std::size_t size() const { return chars_.size(); }

  long order(std::size_t s) const { return orders_[s]; }
  long upsilon(std::size_t chi, std::size_t s) const { return ups_[chi * size() + s]; }
  Rational pairing(std::size_t chi, std::size_t s) const;

  /// Coefficients of Theta_*(psi), indexed by group element.
  std::vector<Rational> theta_star(const CharCombo& psi) const;
  /// Integer numerators sum_chi psi(chi) upsilon(chi, s); Theta_* is integral
  /// iff each is divisible by |s|.
  std::vector<long> theta_numerators(const CharCombo& psi) const;
  bool integrality_check(const CharCombo& psi) const;

  Character det_map(const CharCombo& psi) const;
  bool det_trivial(const CharCombo& psi) const;

 private:
  CharacterTable chars_;
  std::vector<long> orders_;
  std::vector<long> ups_;
};

CharCombo single_character(const CharacterTable& t, std::size_t chi, long coeff = 1);

Rational stickelberger_pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s);

/// Canonical Hermite basis of the kernel of det: Z[G^] -> G^.
std::vector<CharCombo> ahat_kernel_basis(const FiniteAbelianGroup& g);

/// Index of the span of the given combos inside Z[G^] (0 if not full rank).
Integer lattice_index(const std::vector<CharCombo>& basis);

/// Theta_*(omega.chi) == omega.Theta_*(chi) for all chi, where omega acts on
/// character values by zeta -> zeta^k and on G through the inverse twist.
bool equivariance_check(const StickelbergerTable& table, long k);

}  // namespace galmod
