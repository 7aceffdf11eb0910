#pragma once

#include <vector>

#include "galmod/resolvend.hpp"
#include "galmod/stickelberger.hpp"

namespace galmod {

/// g(s) must equal omega(g(s')) wherever s = omega.s' in G(-1), i.e.
/// omega(g(s)) = g(s^{kappa^{-1}}).
template <class R>
bool is_equivariant(const GMap<R>& g, const std::vector<Automorphism<R>>& automorphisms) {
  const auto& grp = *g.group;
  for (const auto& omega : automorphisms) {
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      auto s = grp.element_at(i);
      if (!(omega.apply(g.values[i]) == g.at(twist_action(grp, s, omega.kappa, -1)))) return false;
    }
  }
  return true;
}

/// Values prod_{s != 1} g(s)^{<psi,s>_*} for each psi of the basis.
template <class R>
std::vector<R> theta_star_transpose(const StickelbergerTable& table, const GMap<R>& g, const std::vector<CharCombo>& basis,
                                    const std::vector<Automorphism<R>>& automorphisms) {
  if (!is_equivariant(g, automorphisms)) throw Error(ErrorCode::Equivariance, "map is not Galois equivariant on G(-1)");
  std::vector<R> out;
  for (const auto& psi : basis) {
    auto nums = table.theta_numerators(psi);
    R acc = g.values.front().one_like();
    for (std::size_t s = 0; s < nums.size(); ++s) {
      if (nums[s] % table.order(s) != 0)
        throw Error(ErrorCode::Domain, "combination outside A_G^: non-integral exponent at element #" + std::to_string(s));
      long e = nums[s] / table.order(s);
      if (table.order(s) == 1 || e == 0) continue;
      acc = acc * power(g.values[s], e);
    }
    out.push_back(acc);
  }
  return out;
}

/// Character-space lift chi -> prod_{s != 1} rho(s)^{upsilon(chi,s)} from
/// chosen roots rho(s)^{|s|} = g(s). On A_G^ it agrees with Theta_*^t(g).
template <class R>
CharacterVector<R> theta_transpose_lift(const StickelbergerTable& table, const GMap<R>& roots) {
  std::size_t n = table.size();
  std::vector<std::vector<R>> pows(n);
  for (std::size_t s = 0; s < n; ++s) {
    long ord = table.order(s);
    if (ord == 1) continue;
    auto half = static_cast<std::size_t>((ord - 1) / 2);
    auto inv = roots.values[s].inverse();
    if (!inv) throw Error(ErrorCode::SingularResolvend, "root vanishes at element #" + std::to_string(s));
    pows[s].assign(2 * half + 1, roots.values[s].one_like());
    for (std::size_t k = 1; k <= half; ++k) {
      pows[s][half + k] = pows[s][half + k - 1] * roots.values[s];
      pows[s][half - k] = pows[s][half - k + 1] * *inv;
    }
  }
  CharacterVector<R> v{roots.group, std::vector<R>(n, roots.values.front().one_like())};
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t s = 0; s < n; ++s) {
      long ord = table.order(s);
      long u = table.upsilon(c, s);
      if (ord == 1 || u == 0) continue;
      v.values[c] = v.values[c] * pows[s][static_cast<std::size_t>(u + (ord - 1) / 2)];
    }
  }
  return v;
}

/// rho(s)^{|s|} == g(s) for every s != 1.
template <class R>
bool roots_match(const StickelbergerTable& table, const GMap<R>& g, const GMap<R>& roots) {
  for (std::size_t s = 0; s < table.size(); ++s)
    if (table.order(s) != 1 && !(power(roots.values[s], table.order(s)) == g.values[s])) return false;
  return true;
}

/// The lift restricted to each basis vector equals Theta_*^t(g) there.
template <class R>
bool lift_agrees_on_basis(const CharacterVector<R>& lift, const std::vector<CharCombo>& basis,
                          const std::vector<R>& transpose_values) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!(evaluate_on_combo(lift, basis[i]) == transpose_values[i])) return false;
  return true;
}

}  // namespace galmod
