#include "galmod/characters.hpp"

#include "galmod/error.hpp"

namespace galmod {

long character_exponent(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  g.validate(s);
  if (!g.is_valid(chi)) throw Error(ErrorCode::InvalidElement, "character " + g.format(chi) + " not in dual of " + g.spec());
  long m = g.exponent();
  const auto& d = g.invariant_factors();
  long e = 0;
  for (std::size_t i = 0; i < d.size(); ++i) e = (e + chi[i] * s[i] % d[i] * (m / d[i])) % m;
  return e;
}

CycNumber char_value(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s, long N) {
  long m = g.exponent();
  if (N % m != 0)
    throw Error(ErrorCode::Conductor, "conductor " + std::to_string(N) + " lacks roots of order " + std::to_string(m));
  return root_of_unity(N, m, character_exponent(g, chi, s));
}

CharacterTable::CharacterTable(std::shared_ptr<const FiniteAbelianGroup> g) : group_(std::move(g)) {
  std::size_t n = size();
  exps_.resize(n * n);
  auto els = group_->elements();
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < n; ++s) exps_[c * n + s] = character_exponent(*group_, els[c], els[s]);
}

}  // namespace galmod
