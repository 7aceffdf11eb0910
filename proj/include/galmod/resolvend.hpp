#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmod/characters.hpp"
#include "galmod/error.hpp"
#include "galmod/stickelberger.hpp"

namespace galmod {

// Coefficient algebras (CycNumber, PuiseuxElement, WildElement) provide:
// + - * unary-, ==, is_zero(), zero_like(), one_like(),
// times_root_of_unity(n, j), scaled(Rational), optional<R> inverse().

template <class R>
R power(const R& x, long n) {
  R base = x;
  if (n < 0) {
    auto inv = x.inverse();
    if (!inv) throw Error(ErrorCode::SingularResolvend, "negative power of zero");
    base = *inv;
    n = -n;
  }
  R result = x.one_like();
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

/// Function G -> R, indexed by the lexicographic element index.
template <class R>
struct GMap {
  std::shared_ptr<const FiniteAbelianGroup> group;
  std::vector<R> values;

  GMap(std::shared_ptr<const FiniteAbelianGroup> g, const R& zero)
      : group(std::move(g)), values(static_cast<std::size_t>(group->order()), zero.zero_like()) {}

  static GMap delta(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s, const R& one) {
    GMap a(g, one);
    a.values[a.group->index_of(s)] = one;
    return a;
  }

  R& at(const GroupElement& s) { return values[group->index_of(s)]; }
  const R& at(const GroupElement& s) const { return values[group->index_of(s)]; }
  bool operator==(const GMap& o) const { return values == o.values; }
};

/// Group-algebra element sum_t coeffs[t] t.
template <class R>
struct Resolvend {
  std::shared_ptr<const FiniteAbelianGroup> group;
  std::vector<R> coeffs;

  R& at(const GroupElement& s) { return coeffs[group->index_of(s)]; }
  const R& at(const GroupElement& s) const { return coeffs[group->index_of(s)]; }
  bool operator==(const Resolvend& o) const { return coeffs == o.coeffs; }
};

/// chi -> value, indexed like CharacterTable.
template <class R>
struct CharacterVector {
  std::shared_ptr<const FiniteAbelianGroup> group;
  std::vector<R> values;

  bool operator==(const CharacterVector& o) const { return values == o.values; }
};

template <class R>
Resolvend<R> group_element(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s, const R& one) {
  Resolvend<R> r{g, std::vector<R>(static_cast<std::size_t>(g->order()), one.zero_like())};
  r.at(s) = one;
  return r;
}

template <class R>
Resolvend<R> to_resolvend(const GMap<R>& a) {
  const auto& g = *a.group;
  Resolvend<R> r{a.group, a.values};
  for (std::size_t i = 0; i < a.values.size(); ++i) r.coeffs[g.index_of(g.negate(g.element_at(i)))] = a.values[i];
  return r;
}

template <class R>
GMap<R> from_resolvend(const Resolvend<R>& r) {
  const auto& g = *r.group;
  GMap<R> a(r.group, r.coeffs.front());
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) a.values[g.index_of(g.negate(g.element_at(i)))] = r.coeffs[i];
  return a;
}

template <class R>
Resolvend<R> involution(const Resolvend<R>& r) {
  const auto& g = *r.group;
  Resolvend<R> out = r;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out.coeffs[g.index_of(g.negate(g.element_at(i)))] = r.coeffs[i];
  return out;
}

template <class R>
Resolvend<R> add(const Resolvend<R>& x, const Resolvend<R>& y) {
  Resolvend<R> out = x;
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) out.coeffs[i] = x.coeffs[i] + y.coeffs[i];
  return out;
}

/// Convolution product in the group algebra.
template <class R>
Resolvend<R> multiply(const Resolvend<R>& x, const Resolvend<R>& y) {
  const auto& g = *x.group;
  if (!(g == *y.group)) throw Error(ErrorCode::InvalidGroup, "resolvends over different groups");
  std::size_t n = x.coeffs.size();
  Resolvend<R> out{x.group, std::vector<R>(n, x.coeffs.front().zero_like())};
  auto els = g.elements();
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      out.coeffs[g.index_of(g.add(els[i], els[j]))] += x.coeffs[i] * y.coeffs[j];
    }
  }
  return out;
}

/// Translate by the group element t.
template <class R>
Resolvend<R> translate(const Resolvend<R>& r, const GroupElement& t) {
  const auto& g = *r.group;
  Resolvend<R> out = r;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) out.coeffs[g.index_of(g.add(g.element_at(i), t))] = r.coeffs[i];
  return out;
}

template <class R>
Resolvend<R> map_coefficients(const Resolvend<R>& r, const std::function<R(const R&)>& f) {
  Resolvend<R> out = r;
  for (auto& c : out.coeffs) c = f(c);
  return out;
}

/// (a|chi) = sum_s a(s) chi(s)^{-1}.
template <class R>
R resolvent(const GMap<R>& a, const Character& chi) {
  const auto& g = *a.group;
  long m = g.exponent();
  R acc = a.values.front().zero_like();
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (a.values[i].is_zero()) continue;
    acc += a.values[i].times_root_of_unity(m, -character_exponent(g, chi, g.element_at(i)));
  }
  return acc;
}

template <class R>
CharacterVector<R> to_character_space(const Resolvend<R>& r, const CharacterTable& t) {
  std::size_t n = r.coeffs.size();
  long m = t.modulus();
  CharacterVector<R> v{r.group, std::vector<R>(n, r.coeffs.front().zero_like())};
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < n; ++s)
      if (!r.coeffs[s].is_zero()) v.values[c] += r.coeffs[s].times_root_of_unity(m, t.exponent(c, s));
  return v;
}

/// Algebras decide whether 1/n is admissible; by default it always is.
template <class R>
bool admits_division(const R&, long) {
  return true;
}

template <class R>
Resolvend<R> from_character_space(const CharacterVector<R>& v, const CharacterTable& t) {
  std::size_t n = v.values.size();
  long m = t.modulus();
  long order = static_cast<long>(n);
  if (!admits_division(v.values.front(), order))
    throw Error(ErrorCode::CoefficientDomain, "group order " + std::to_string(order) + " is not invertible in the coefficients");
  Resolvend<R> r{v.group, std::vector<R>(n, v.values.front().zero_like())};
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t c = 0; c < n; ++c)
      if (!v.values[c].is_zero()) r.coeffs[s] += v.values[c].times_root_of_unity(m, -t.exponent(c, s));
    r.coeffs[s] = r.coeffs[s].scaled(Rational(1, order));
  }
  return r;
}

template <class R>
CharacterVector<R> pointwise_inverse(const CharacterVector<R>& v) {
  CharacterVector<R> out = v;
  for (std::size_t c = 0; c < v.values.size(); ++c) {
    auto inv = v.values[c].inverse();
    if (!inv) throw Error(ErrorCode::SingularResolvend, "resolvent at character #" + std::to_string(c) + " vanishes");
    out.values[c] = *inv;
  }
  return out;
}

template <class R>
CharacterVector<R> pointwise_product(const CharacterVector<R>& x, const CharacterVector<R>& y) {
  CharacterVector<R> out = x;
  for (std::size_t c = 0; c < x.values.size(); ++c) out.values[c] = x.values[c] * y.values[c];
  return out;
}

/// Inverse in the group algebra, computed pointwise in character space.
template <class R>
Resolvend<R> inverse(const Resolvend<R>& r, const CharacterTable& t) {
  return from_character_space(pointwise_inverse(to_character_space(r, t)), t);
}

/// r(a)r(b)^{[-1]} against sum_s Tr((s.a)b) s^{-1}, (s.a)(t) = a(ts).
template <class R>
bool trace_pairing_identity_check(const GMap<R>& a, const GMap<R>& b) {
  const auto& g = *a.group;
  auto lhs = multiply(to_resolvend(a), involution(to_resolvend(b)));
  std::size_t n = a.values.size();
  auto els = g.elements();
  Resolvend<R> rhs{a.group, std::vector<R>(n, a.values.front().zero_like())};
  for (std::size_t s = 0; s < n; ++s) {
    R trace = a.values.front().zero_like();
    for (std::size_t t = 0; t < n; ++t) trace += a.values[g.index_of(g.add(els[t], els[s]))] * b.values[t];
    rhs.coeffs[g.index_of(g.negate(els[s]))] = trace;
  }
  return lhs == rhs;
}

template <class R>
GMap<R> resolvend_inverse_transport(const GMap<R>& a, const CharacterTable& t) {
  return from_resolvend(inverse(to_resolvend(a), t));
}

/// a with r(a) = r(a1) r(a2), via the convolution a(s) = sum_{uv=s} a1(u)a2(v).
template <class R>
GMap<R> resolvend_product_transport(const GMap<R>& a1, const GMap<R>& a2, const CharacterTable& t) {
  auto v1 = to_character_space(to_resolvend(a1), t);
  auto v2 = to_character_space(to_resolvend(a2), t);
  pointwise_inverse(v1);
  pointwise_inverse(v2);
  const auto& g = *a1.group;
  GMap<R> a(a1.group, a1.values.front());
  auto els = g.elements();
  for (std::size_t u = 0; u < els.size(); ++u) {
    if (a1.values[u].is_zero()) continue;
    for (std::size_t v = 0; v < els.size(); ++v)
      if (!a2.values[v].is_zero()) a.values[g.index_of(g.add(els[u], els[v]))] += a1.values[u] * a2.values[v];
  }
  return a;
}

/// Product over the support of psi of v(chi)^{psi(chi)}.
template <class R>
R evaluate_on_combo(const CharacterVector<R>& v, const CharCombo& psi) {
  R acc = v.values.front().one_like();
  for (std::size_t c = 0; c < psi.size(); ++c)
    if (psi[c] != 0) acc = acc * power(v.values[c], psi[c]);
  return acc;
}

/// Equality of reduced resolvends: agreement as functions on A_G^.
template <class R>
bool reduced_equal(const Resolvend<R>& r1, const Resolvend<R>& r2, const std::vector<CharCombo>& basis,
                   const CharacterTable& t) {
  auto quotient = pointwise_product(to_character_space(r1, t), pointwise_inverse(to_character_space(r2, t)));
  R one = quotient.values.front().one_like();
  for (const auto& psi : basis)
    if (!(evaluate_on_combo(quotient, psi) == one)) return false;
  return true;
}

/// Automorphism of the coefficient model with cyclotomic character value kappa
/// (modulo exp(G)).
template <class R>
struct Automorphism {
  std::string name;
  long kappa = 1;
  std::function<R(const R&)> apply;
};

/// The t in G with r(a)^{-1}(omega.r(a)) = t, for each omega.
template <class R>
std::vector<std::pair<std::string, GroupElement>> associated_hom(const GMap<R>& a,
                                                                 const std::vector<Automorphism<R>>& automorphisms,
                                                                 const CharacterTable& t) {
  const auto& g = *a.group;
  auto r = to_resolvend(a);
  auto inv = pointwise_inverse(to_character_space(r, t));
  R one = a.values.front().one_like();
  std::vector<std::pair<std::string, GroupElement>> out;
  for (const auto& omega : automorphisms) {
    auto moved = map_coefficients<R>(r, omega.apply);
    auto q = from_character_space(pointwise_product(to_character_space(moved, t), inv), t);
    std::optional<std::size_t> hit;
    for (std::size_t i = 0; i < q.coeffs.size(); ++i) {
      if (q.coeffs[i].is_zero()) continue;
      if (hit || !(q.coeffs[i] == one))
        throw Error(ErrorCode::NotGaloisOrbit, "automorphism " + omega.name + " does not move r(a) by a group element");
      hit = i;
    }
    if (!hit) throw Error(ErrorCode::NotGaloisOrbit, "automorphism " + omega.name + " annihilates r(a)");
    out.emplace_back(omega.name, g.element_at(*hit));
  }
  return out;
}

}  // namespace galmod
