#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmod/cyclotomic.hpp"
#include "galmod/resolvend.hpp"

namespace galmod {

/// Laurent polynomial in y_1..y_n over Q(zeta_p). With several copies of the
/// construction, variable (copy, i) for i in [1, p-1] sits at copy*(p-1)+i-1.
class WildElement {
 public:
  using Exponents = std::vector<int>;

  WildElement(long p, std::size_t nvars);
  WildElement(long p, std::size_t nvars, const CycNumber& c, Exponents exps);

  static WildElement constant(long p, std::size_t nvars, const Rational& c);
  /// y_i of the given copy.
  static WildElement variable(long p, std::size_t nvars, std::size_t copy, long i, int power = 1);

  long prime() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const std::map<Exponents, CycNumber>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  WildElement operator+(const WildElement& o) const;
  WildElement operator-(const WildElement& o) const;
  WildElement operator*(const WildElement& o) const;
  WildElement operator-() const;
  WildElement& operator+=(const WildElement& o) { return *this = *this + o; }
  WildElement& operator*=(const WildElement& o) { return *this = *this * o; }
  bool operator==(const WildElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const WildElement& o) const { return !(*this == o); }

  WildElement scaled(const Rational& c) const;
  WildElement times_root_of_unity(long n, long j) const;
  /// Monomials only; nullopt for zero.
  std::optional<WildElement> inverse() const;

  WildElement zero_like() const { return WildElement(p_, nvars_); }
  WildElement one_like() const { return constant(p_, nvars_, 1); }
  WildElement root_of_unity_like(long n, long j) const { return {p_, nvars_, root_of_unity(p_, n, j), Exponents(nvars_, 0)}; }

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const CycNumber& c);

  long p_;
  std::size_t nvars_;
  std::map<Exponents, CycNumber> terms_;
};

/// Centered representative c(i) of i mod p in [(1-p)/2, (p-1)/2].
long centered_rep(long i, long p);

/// Exponent k with omega_j(zeta) = zeta^k, i.e. c(j^{-1}).
long omega_zeta_exponent(long j, long p);

/// y_i -> y_{ji} in every copy, zeta -> zeta^{c(j^{-1})}.
WildElement omega_action(const WildElement& x, long j);

/// tau^n on one copy: y_i -> zeta^{-c(i^{-1}) n} y_i.
WildElement tau_power(const WildElement& x, long n, std::size_t copy = 0);

/// tau^{c(j)}.
WildElement tau_action(const WildElement& x, long j, std::size_t copy = 0);

/// prod_i y_i^{c(ik)} in the given copy.
WildElement character_monomial(long p, std::size_t nvars, long k, std::size_t copy = 0);

/// alpha = (1/p) sum_k prod_i y_i^{c(ik)}.
WildElement build_alpha(long p, std::size_t nvars = 0, std::size_t copy = 0);

/// Certified lower bound for the valuation in L(zeta) with y_i - 1 of
/// weight 1, zeta - 1 of weight p and p of weight p(p-1). nullopt for zero.
std::optional<Rational> weight_lower_bound(const WildElement& x);

/// omega_j fixes alpha for every j.
bool alpha_invariance_check(long p);

/// tau^{c(j)}(prod y_i^{c(ik)}) = zeta^{c(jk)} prod y_i^{c(ik)} for all j, k.
bool tau_eigenvalue_check(long p);

/// omega_j omega_i = omega_{ji}; tau has order p; omega and tau commute.
bool wild_galois_group_check(long p);

/// sum_j zeta^{c(j n)} = p if n = 0 mod p, else 0.
bool character_sum_check(long p);

/// The construction restricted to <t> = C_p.
struct WildConstruction {
  long p;
  std::shared_ptr<const FiniteAbelianGroup> cyclic;  // C_p, t = (1)
  GMap<WildElement> a;                              // a(t^{c(j)}) = tau^{c(j)}(alpha)
  GMap<WildElement> g;                              // g(t^{c(i)}) = y_i^p
  GMap<WildElement> roots;                          // rho(t^{c(i)}) = y_i
};

WildConstruction build_wild_construction(const FiniteAbelianGroup& group, const GroupElement& t);

std::vector<Automorphism<WildElement>> wild_automorphisms(long p);

struct WildResolventReport {
  bool resolvents_match = false;   // (a|chi_k) = prod y_i^{c(ik)}
  bool transpose_match = false;    // lift of g equals the same monomials
  bool basis_match = false;        // Theta_*^t(g) on the A_G^ basis agrees with the lift
  bool equivariant = false;        // g commutes with the omega action on G(-1)
  bool overall = false;
  std::vector<std::string> witnesses;
};

WildResolventReport wild_resolvent_identity(const FiniteAbelianGroup& group, const GroupElement& t);

struct WeightBoundsReport {
  bool ok = false;
  Rational y_minus_one;  // weight of y_1 - 1
  std::vector<std::string> witnesses;
};

/// weight(y_1 - 1) = 1, weight(y_i^n - 1) >= 1, weight(prod y_i^{c(ik)} - 1) >= 1.
WeightBoundsReport weight_bounds_check(long p);

struct WildValuationBound {
  bool in_L = false;        // p alpha - p is fixed by every omega_j
  Rational weight;          // weight lower bound of p alpha - p
  long v_L_lower = 0;       // certified lower bound for v_L(alpha)
  bool ok = false;          // v_L_lower >= 1 - p
};

WildValuationBound alpha_valuation_bound(long p);

struct WildUnitReport {
  bool unit_monomials = false;    // each resolvent is c * monomial with c a unit
  bool dual_products = false;     // (a|chi)(a|chi^{-1}) = 1
  bool self_dual = false;         // r(a) r(a)^{[-1]} = 1 by convolution
  bool overall = false;
  std::vector<std::string> witnesses;
};

WildUnitReport wild_unit_resolvents(const FiniteAbelianGroup& group, const GroupElement& t);

struct ElementaryProductReport {
  bool unit_resolvents = false;
  std::size_t resolvent_count = 0;
  bool asserts_generator = false;  // the product is never claimed to generate A_h
  std::vector<std::string> witnesses;
};

ElementaryProductReport elementary_product_check(long p, int r);

/// Unit coefficient in Q(zeta_p) at the prime above p: weight 0 and inverse weight 0.
bool is_wild_unit_coefficient(const CycNumber& c, long p);

}  // namespace galmod
