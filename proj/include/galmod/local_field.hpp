#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "galmod/cyclotomic.hpp"

namespace galmod {

/// Tame extension L = F(pi^{1/e}) with residue characteristic p and
/// coefficients in Q(zeta_N).
struct TameModel {
  long e = 1;
  long p = 3;
  long N = 1;

  TameModel() = default;
  TameModel(long e, long p, long N);

  bool operator==(const TameModel& o) const { return e == o.e && p == o.p && N == o.N; }
};

constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

/// Finite sum of c_k pi^{k/e}, c_k in Q(zeta_N). Zero is the empty sum.
class PuiseuxElement {
 public:
  explicit PuiseuxElement(const TameModel& model);
  PuiseuxElement(const TameModel& model, const CycNumber& c, long k = 0);

  static PuiseuxElement pi_power(const TameModel& model, long k) { return {model, CycNumber(model.N, 1), k}; }

  const TameModel& model() const { return model_; }
  const std::map<long, CycNumber>& terms() const { return terms_; }
  CycNumber coefficient(long k) const;

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  PuiseuxElement operator+(const PuiseuxElement& o) const;
  PuiseuxElement operator-(const PuiseuxElement& o) const;
  PuiseuxElement operator*(const PuiseuxElement& o) const;
  PuiseuxElement operator-() const;
  PuiseuxElement& operator+=(const PuiseuxElement& o) { return *this = *this + o; }
  PuiseuxElement& operator*=(const PuiseuxElement& o) { return *this = *this * o; }
  bool operator==(const PuiseuxElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const PuiseuxElement& o) const { return !(*this == o); }

  PuiseuxElement scaled(const Rational& c) const;
  PuiseuxElement times_root_of_unity(long n, long j) const;
  PuiseuxElement map_coefficients(const CycNumber& factor) const;
  /// Defined for monomials only; nullopt for zero.
  std::optional<PuiseuxElement> inverse() const;

  PuiseuxElement zero_like() const { return PuiseuxElement(model_); }
  PuiseuxElement one_like() const { return {model_, CycNumber(model_.N, 1), 0}; }
  PuiseuxElement root_of_unity_like(long n, long j) const { return {model_, root_of_unity(model_.N, n, j), 0}; }

  std::string to_string() const;

 private:
  void check_model(const PuiseuxElement& o) const;

  TameModel model_;
  std::map<long, CycNumber> terms_;
};

/// Division by n stays inside the p-integral model only when p does not divide n.
inline bool admits_division(const PuiseuxElement& x, long n) { return n % x.model().p != 0; }

/// v_L with v_L(pi^{1/e}) = 1; kInfiniteValuation for zero.
long valuation(const PuiseuxElement& x);

/// pi^{k/e} -> zeta_e^k pi^{k/e}.
PuiseuxElement galois_sigma(const PuiseuxElement& x);

/// zeta -> zeta^q on coefficients, radicals fixed.
PuiseuxElement galois_phi(const PuiseuxElement& x, long q);

/// Integral exponents and coefficients fixed by zeta -> zeta^q.
bool lies_in_base(const PuiseuxElement& x, long q);

/// Orders |G_0| >= |G_1| >= ... of ramification groups; trailing 1s implied.
class RamFiltration {
 public:
  explicit RamFiltration(std::vector<long> orders);
  static RamFiltration parse(const std::string& spec);

  /// orders[n], 1 past the stored prefix.
  long order(std::size_t n) const { return n < orders_.size() ? orders_[n] : 1; }
  const std::vector<long>& orders() const { return orders_; }

 private:
  std::vector<long> orders_;
};

long different_valuation(const RamFiltration& f);
long sqrt_inverse_different_valuation(const RamFiltration& f);
bool is_weakly_ramified(const RamFiltration& f);
bool validate_abelian_filtration(const RamFiltration& f);

}  // namespace galmod
