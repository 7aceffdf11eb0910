#include "galmod/wild.hpp"

#include <algorithm>
#include <unordered_map>

#include "galmod/mutation.hpp"
#include "galmod/stickelberger.hpp"
#include "galmod/transpose.hpp"

namespace galmod {

namespace {

std::size_t var_index(long p, std::size_t copy, long i) {
  return copy * static_cast<std::size_t>(p - 1) + static_cast<std::size_t>(mod(i, p) - 1);
}

void require_prime(long p) {
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::Precondition, "wild model needs an odd prime, got " + std::to_string(p));
}

// Rational coordinates of c in the basis (zeta_p - 1)^a, 0 <= a <= p - 2.
std::vector<Rational> zeta_minus_one_coords(const CycNumber& c, long p) {
  auto n = static_cast<std::size_t>(p - 1);
  std::vector<Rational> pc(n, Rational(0));
  if (c.conductor() == 1) {
    pc[0] = c.coeff(0);
  } else {
    auto cs = c.coeffs();
    std::copy(cs.begin(), cs.end(), pc.begin());
  }
  // c_j = sum_{a >= j} r_a binom(a, j) (-1)^{a-j}; solve from the top.
  std::vector<Rational> r(n, Rational(0));
  for (std::size_t a = n; a-- > 0;) {
    Rational acc = pc[a];
    for (std::size_t b = a + 1; b < n; ++b) {
      Integer bin;
      mpz_bin_uiui(bin.get_mpz_t(), b, a);
      if ((b - a) % 2) bin = -bin;
      acc -= r[b] * Rational(bin);
    }
    r[a] = acc;
  }
  return r;
}

std::optional<Rational> coefficient_weight(const CycNumber& c, long p) {
  if (c.is_zero()) return std::nullopt;
  auto r = zeta_minus_one_coords(c, p);
  std::optional<Rational> best;
  for (std::size_t a = 0; a < r.size(); ++a) {
    if (r[a] == 0) continue;
    Rational w(ord_p(r[a], p) * p * (p - 1) + static_cast<long>(a) * p);
    if (!best || w < *best) best = w;
  }
  return best;
}

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x + 1000)) * 1099511628211ull;
    return h;
  }
};

std::string format_monomial(const WildElement::Exponents& e, long p) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    std::size_t copy = v / static_cast<std::size_t>(p - 1);
    long i = static_cast<long>(v % static_cast<std::size_t>(p - 1)) + 1;
    if (!s.empty()) s += "*";
    s += "y" + std::to_string(i);
    if (copy > 0) s += "_" + std::to_string(copy);
    if (e[v] != 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace

WildElement::WildElement(long p, std::size_t nvars) : p_(p), nvars_(nvars) {}

WildElement::WildElement(long p, std::size_t nvars, const CycNumber& c, Exponents exps) : p_(p), nvars_(nvars) {
  if (exps.size() != nvars) throw Error(ErrorCode::InvalidElement, "monomial has the wrong number of variables");
  add_term(exps, c);
}

WildElement WildElement::constant(long p, std::size_t nvars, const Rational& c) {
  return {p, nvars, CycNumber(p, c), Exponents(nvars, 0)};
}

WildElement WildElement::variable(long p, std::size_t nvars, std::size_t copy, long i, int power) {
  if (mod(i, p) == 0) throw Error(ErrorCode::InvalidElement, "variable index must be a unit mod p");
  Exponents e(nvars, 0);
  auto v = var_index(p, copy, i);
  if (v >= nvars) throw Error(ErrorCode::InvalidElement, "variable copy out of range");
  e[v] = power;
  return {p, nvars, CycNumber(p, Rational(1)), e};
}

void WildElement::add_term(const Exponents& e, const CycNumber& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c.conductor() == 1 ? CycNumber(p_, c.coeff(0)) : c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

WildElement WildElement::operator+(const WildElement& o) const {
  WildElement out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

WildElement WildElement::operator-(const WildElement& o) const { return *this + (-o); }

WildElement WildElement::operator-() const {
  WildElement out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

WildElement WildElement::operator*(const WildElement& o) const {
  if (p_ != o.p_ || nvars_ != o.nvars_) throw Error(ErrorCode::Domain, "wild elements from different models");
  WildElement out(p_, nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) e[v] = e1[v] + e2[v];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

WildElement WildElement::scaled(const Rational& c) const {
  if (c == 0) return zero_like();
  WildElement out = *this;
  for (auto& [e, x] : out.terms_) x = x.scaled(c);
  return out;
}

WildElement WildElement::times_root_of_unity(long n, long j) const {
  WildElement out = *this;
  for (auto& [e, x] : out.terms_) x = x * root_of_unity(p_, n, j);
  return out;
}

std::optional<WildElement> WildElement::inverse() const {
  if (is_zero()) return std::nullopt;
  if (!is_monomial()) throw Error(ErrorCode::Domain, "inverse of a non-monomial wild element: " + to_string());
  const auto& [e, c] = *terms_.begin();
  Exponents neg(e.size());
  for (std::size_t v = 0; v < e.size(); ++v) neg[v] = -e[v];
  return WildElement(p_, nvars_, *c.inverse(), neg);
}

std::string WildElement::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*" + format_monomial(e, p_);
  }
  return s;
}

long centered_rep(long i, long p) { return centered(i, p); }

long omega_zeta_exponent(long j, long p) {
  if (mod(j, p) == 0) throw Error(ErrorCode::InvalidAutomorphism, "omega_j needs j prime to p");
  if (active_mutation() == Mutation::OmegaUsesCi) return centered(j, p);
  return centered(inverse_mod(j, p), p);
}

WildElement omega_action(const WildElement& x, long j) {
  long p = x.prime();
  long k = mod(omega_zeta_exponent(j, p), p);
  auto width = static_cast<std::size_t>(p - 1);
  WildElement out(p, x.nvars());
  WildElement::Exponents e(x.nvars());
  for (const auto& [old, c] : x.terms()) {
    for (std::size_t v = 0; v < old.size(); ++v) {
      std::size_t copy = v / width;
      long i = static_cast<long>(v % width) + 1;
      e[var_index(p, copy, i * j)] = old[v];
    }
    out += WildElement(p, x.nvars(), galois_apply(c, k), e);
  }
  return out;
}

WildElement tau_power(const WildElement& x, long n, std::size_t copy) {
  long p = x.prime();
  WildElement out(p, x.nvars());
  for (const auto& [e, c] : x.terms()) {
    long shift = 0;
    for (long i = 1; i < p; ++i) shift += e[var_index(p, copy, i)] * centered(inverse_mod(i, p), p);
    out += WildElement(p, x.nvars(), c * root_of_unity(p, p, mod(-shift * n, p)), e);
  }
  return out;
}

WildElement tau_action(const WildElement& x, long j, std::size_t copy) { return tau_power(x, centered(j, x.prime()), copy); }

WildElement character_monomial(long p, std::size_t nvars, long k, std::size_t copy) {
  if (nvars == 0) nvars = static_cast<std::size_t>(p - 1) * (copy + 1);
  WildElement::Exponents e(nvars, 0);
  for (long i = 1; i < p; ++i) e[var_index(p, copy, i)] = static_cast<int>(centered(i * k, p));
  return {p, nvars, CycNumber(p, Rational(1)), e};
}

WildElement build_alpha(long p, std::size_t nvars, std::size_t copy) {
  require_prime(p);
  if (nvars == 0) nvars = static_cast<std::size_t>(p - 1) * (copy + 1);
  WildElement acc(p, nvars);
  for (long k = 0; k < p; ++k) acc += character_monomial(p, nvars, k, copy);
  return acc.scaled(Rational(1, p));
}

std::optional<Rational> weight_lower_bound(const WildElement& x) {
  if (x.is_zero()) return std::nullopt;
  long p = x.prime();
  std::size_t n = x.nvars();
  std::vector<int> shift(n, 0);
  for (const auto& [e, c] : x.terms())
    for (std::size_t v = 0; v < n; ++v) shift[v] = std::max(shift[v], -e[v]);

  // Expand each shifted monomial in z = y - 1, grouped by the (zeta - 1)-level.
  auto levels = static_cast<std::size_t>(p - 1);
  std::vector<std::unordered_map<std::vector<int>, Rational, VecHash>> expanded(levels);
  for (const auto& [e, c] : x.terms()) {
    auto coords = zeta_minus_one_coords(c, p);
    std::vector<int> ex(n);
    for (std::size_t v = 0; v < n; ++v) ex[v] = e[v] + shift[v];
    // Dense expansion of prod_v (1 + z_v)^{ex_v}.
    std::vector<std::pair<std::vector<int>, Integer>> partial{{std::vector<int>(n, 0), Integer(1)}};
    for (std::size_t v = 0; v < n; ++v) {
      if (ex[v] == 0) continue;
      std::vector<std::pair<std::vector<int>, Integer>> next;
      for (const auto& [b, coef] : partial) {
        for (int k = 0; k <= ex[v]; ++k) {
          Integer bin;
          mpz_bin_uiui(bin.get_mpz_t(), static_cast<unsigned long>(ex[v]), static_cast<unsigned long>(k));
          auto nb = b;
          nb[v] = k;
          next.emplace_back(std::move(nb), coef * bin);
        }
      }
      partial = std::move(next);
    }
    for (std::size_t a = 0; a < levels; ++a) {
      if (coords[a] == 0) continue;
      for (const auto& [b, coef] : partial) expanded[a][b] += coords[a] * Rational(coef);
    }
  }

  std::optional<Rational> best;
  for (std::size_t a = 0; a < levels; ++a) {
    for (const auto& [b, r] : expanded[a]) {
      if (r == 0) continue;
      long deg = 0;
      for (int k : b) deg += k;
      Rational w(ord_p(r, p) * p * (p - 1) + static_cast<long>(a) * p + deg);
      if (!best || w < *best) best = w;
    }
  }
  return best;
}

bool is_wild_unit_coefficient(const CycNumber& c, long p) {
  auto w = coefficient_weight(c, p);
  if (!w || *w != 0) return false;
  auto inv = c.inverse();
  auto wi = coefficient_weight(*inv, p);
  return wi && *wi == 0;
}

bool alpha_invariance_check(long p) {
  auto alpha = build_alpha(p);
  for (long j = 1; j < p; ++j)
    if (omega_action(alpha, j) != alpha) return false;
  return true;
}

bool tau_eigenvalue_check(long p) {
  require_prime(p);
  auto n = static_cast<std::size_t>(p - 1);
  for (long k = 0; k < p; ++k) {
    auto m = character_monomial(p, n, k);
    for (long j = 0; j < p; ++j)
      if (tau_action(m, j) != m.times_root_of_unity(p, mod(centered(j * k, p), p))) return false;
  }
  return true;
}

bool wild_galois_group_check(long p) {
  require_prime(p);
  auto n = static_cast<std::size_t>(p - 1);
  std::vector<WildElement> gens;
  for (long i = 1; i < p; ++i) gens.push_back(WildElement::variable(p, n, 0, i));
  gens.push_back(WildElement(p, n, CycNumber::zeta_power(p, 1), WildElement::Exponents(n, 0)));
  for (const auto& x : gens) {
    if (tau_power(x, p) != x) return false;
    for (long i = 1; i < p; ++i) {
      for (long j = 1; j < p; ++j)
        if (omega_action(omega_action(x, i), j) != omega_action(x, j * i)) return false;
      for (long m = 1; m < p; ++m)
        if (omega_action(tau_power(x, m), i) != tau_power(omega_action(x, i), m)) return false;
    }
  }
  return true;
}

bool character_sum_check(long p) {
  require_prime(p);
  for (long n = 0; n < p; ++n) {
    CycNumber acc(p, Rational(0));
    for (long j = 0; j < p; ++j) acc += CycNumber::zeta_power(p, mod(centered(j, p) * n, p));
    if (acc != CycNumber(p, Rational(n == 0 ? p : 0))) return false;
  }
  return true;
}

WildConstruction build_wild_construction(const FiniteAbelianGroup& group, const GroupElement& t) {
  group.validate(t);
  long p = element_order(group, t);
  if (p < 3 || !is_prime(p)) throw Error(ErrorCode::Order, "t must have odd prime order, got " + std::to_string(p));
  auto cyclic = std::make_shared<const FiniteAbelianGroup>(std::vector<long>{p});
  auto n = static_cast<std::size_t>(p - 1);
  auto alpha = build_alpha(p, n);
  WildElement zero(p, n);
  WildConstruction w{p, cyclic, GMap<WildElement>(cyclic, zero), GMap<WildElement>(cyclic, zero),
                     GMap<WildElement>(cyclic, zero)};
  for (long m = 0; m < p; ++m) {
    GroupElement s{m};
    w.a.at(s) = tau_power(alpha, centered(m, p));
    if (m == 0) {
      w.g.at(s) = alpha.one_like();
      w.roots.at(s) = alpha.one_like();
    } else {
      w.g.at(s) = WildElement::variable(p, n, 0, m, static_cast<int>(p));
      w.roots.at(s) = WildElement::variable(p, n, 0, m);
    }
  }
  return w;
}

std::vector<Automorphism<WildElement>> wild_automorphisms(long p) {
  std::vector<Automorphism<WildElement>> out;
  for (long j = 2; j < p; ++j) {
    long kappa = mod(omega_zeta_exponent(j, p), p);
    out.push_back({"omega_" + std::to_string(j), kappa, [j](const WildElement& x) { return omega_action(x, j); }});
  }
  return out;
}

WildResolventReport wild_resolvent_identity(const FiniteAbelianGroup& group, const GroupElement& t) {
  auto w = build_wild_construction(group, t);
  long p = w.p;
  auto n = static_cast<std::size_t>(p - 1);
  StickelbergerTable table(w.cyclic);
  WildResolventReport rep;

  rep.resolvents_match = true;
  for (long k = 0; k < p; ++k) {
    auto r = resolvent(w.a, Character{k});
    if (r != character_monomial(p, n, k)) {
      rep.resolvents_match = false;
      rep.witnesses.push_back("(a|chi_" + std::to_string(k) + ") = " + r.to_string());
    }
  }

  auto lift = theta_transpose_lift(table, w.roots);
  rep.transpose_match = roots_match(table, w.g, w.roots);
  for (long k = 0; k < p; ++k) {
    const auto& v = lift.values[table.characters().index_of(Character{k})];
    if (v != character_monomial(p, n, k)) {
      rep.transpose_match = false;
      rep.witnesses.push_back("lift(chi_" + std::to_string(k) + ") = " + v.to_string());
    }
  }

  auto autos = wild_automorphisms(p);
  rep.equivariant = is_equivariant(w.g, autos);
  if (!rep.equivariant) rep.witnesses.push_back("g is not omega-equivariant on G(-1)");
  if (rep.equivariant) {
    auto basis = ahat_kernel_basis(*w.cyclic);
    auto values = theta_star_transpose(table, w.g, basis, autos);
    rep.basis_match = lift_agrees_on_basis(lift, basis, values);
    auto quotient_basis_ok = reduced_equal(to_resolvend(w.a), from_character_space(lift, table.characters()), basis,
                                           table.characters());
    rep.basis_match = rep.basis_match && quotient_basis_ok;
    if (!rep.basis_match) rep.witnesses.push_back("Theta_*^t(g) disagrees with r(a) on the A_G^ basis");
  }
  rep.overall = rep.resolvents_match && rep.transpose_match && rep.equivariant && rep.basis_match;
  return rep;
}

WeightBoundsReport weight_bounds_check(long p) {
  require_prime(p);
  auto n = static_cast<std::size_t>(p - 1);
  WeightBoundsReport rep;
  auto one = WildElement::constant(p, n, 1);
  auto w1 = weight_lower_bound(WildElement::variable(p, n, 0, 1) - one);
  rep.y_minus_one = w1 ? *w1 : Rational(-1);
  rep.ok = w1 && *w1 == 1;
  if (!rep.ok) rep.witnesses.push_back("weight(y_1 - 1) = " + to_fraction_string(rep.y_minus_one));
  for (long i = 1; i < p; ++i) {
    for (int e = -static_cast<int>(p); e <= static_cast<int>(p); ++e) {
      if (e == 0) continue;
      auto w = weight_lower_bound(WildElement::variable(p, n, 0, i, e) - one);
      if (!w || *w < 1) {
        rep.ok = false;
        rep.witnesses.push_back("weight(y_" + std::to_string(i) + "^" + std::to_string(e) + " - 1) < 1");
      }
    }
  }
  for (long k = 1; k < p; ++k) {
    auto w = weight_lower_bound(character_monomial(p, n, k) - one);
    if (!w || *w < 1) {
      rep.ok = false;
      rep.witnesses.push_back("weight(M_" + std::to_string(k) + " - 1) < 1");
    }
  }
  // zeta - 1 has weight p, p has weight p(p-1).
  auto wz = weight_lower_bound(WildElement(p, n, CycNumber::zeta_power(p, 1) - CycNumber(p, Rational(1)),
                                           WildElement::Exponents(n, 0)));
  auto wp = weight_lower_bound(WildElement::constant(p, n, p));
  if (!wz || *wz != p || !wp || *wp != p * (p - 1)) {
    rep.ok = false;
    rep.witnesses.push_back("base weights of zeta - 1 or p are wrong");
  }
  return rep;
}

WildValuationBound alpha_valuation_bound(long p) {
  require_prime(p);
  auto n = static_cast<std::size_t>(p - 1);
  auto alpha = build_alpha(p, n);
  auto x = alpha.scaled(Rational(p)) - WildElement::constant(p, n, p);
  WildValuationBound b;
  b.in_L = true;
  for (long j = 1; j < p; ++j)
    if (omega_action(x, j) != x) b.in_L = false;
  auto w = weight_lower_bound(x);
  if (!w) {
    b.weight = Rational(p * (p - 1));
    b.v_L_lower = 0;
  } else {
    b.weight = *w;
    Rational q = *w / Rational(p - 1);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    b.v_L_lower = std::min(c.get_si(), p) - p;
  }
  b.ok = b.in_L && b.v_L_lower >= 1 - p;
  return b;
}

WildUnitReport wild_unit_resolvents(const FiniteAbelianGroup& group, const GroupElement& t) {
  auto w = build_wild_construction(group, t);
  long p = w.p;
  CharacterTable chars(w.cyclic);
  WildUnitReport rep;
  auto v = to_character_space(to_resolvend(w.a), chars);
  rep.unit_monomials = true;
  for (std::size_t c = 0; c < v.values.size(); ++c) {
    const auto& x = v.values[c];
    if (!x.is_monomial() || !is_wild_unit_coefficient(x.terms().begin()->second, p)) {
      rep.unit_monomials = false;
      rep.witnesses.push_back("resolvent at character #" + std::to_string(c) + " = " + x.to_string());
    }
  }
  rep.dual_products = true;
  auto one = w.a.values.front().one_like();
  for (std::size_t c = 0; c < v.values.size(); ++c)
    if (v.values[c] * v.values[chars.inverse(c)] != one) rep.dual_products = false;
  if (!rep.dual_products) rep.witnesses.push_back("(a|chi)(a|chi^{-1}) != 1");
  auto r = to_resolvend(w.a);
  auto prod = multiply(r, involution(r));
  rep.self_dual = prod == group_element(w.cyclic, w.cyclic->identity(), one);
  if (!rep.self_dual) rep.witnesses.push_back("r(a) r(a)^{[-1]} != 1");
  rep.overall = rep.unit_monomials && rep.dual_products && rep.self_dual;
  return rep;
}

ElementaryProductReport elementary_product_check(long p, int r) {
  require_prime(p);
  if (r < 1) throw Error(ErrorCode::InvalidGroup, "rank must be positive");
  auto group = std::make_shared<const FiniteAbelianGroup>(std::vector<long>(static_cast<std::size_t>(r), p));
  CharacterTable chars(group);
  auto n = static_cast<std::size_t>(p - 1) * static_cast<std::size_t>(r);
  WildElement zero(p, n);
  std::optional<GMap<WildElement>> product;
  for (int copy = 0; copy < r; ++copy) {
    auto cp = static_cast<std::size_t>(copy);
    auto alpha = build_alpha(p, n, cp);
    GMap<WildElement> a(group, zero);
    for (long m = 0; m < p; ++m) {
      GroupElement s(static_cast<std::size_t>(r), 0);
      s[cp] = m;
      a.at(s) = tau_power(alpha, centered(m, p), cp);
    }
    product = product ? resolvend_product_transport(*product, a, chars) : a;
  }
  ElementaryProductReport rep;
  auto v = to_character_space(to_resolvend(*product), chars);
  rep.resolvent_count = v.values.size();
  rep.unit_resolvents = true;
  for (std::size_t c = 0; c < v.values.size(); ++c) {
    const auto& x = v.values[c];
    if (!x.is_monomial() || !is_wild_unit_coefficient(x.terms().begin()->second, p)) {
      rep.unit_resolvents = false;
      rep.witnesses.push_back("resolvent at character #" + std::to_string(c) + " = " + x.to_string());
    }
  }
  return rep;
}

}  // namespace galmod
