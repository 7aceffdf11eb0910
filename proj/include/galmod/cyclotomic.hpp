#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "galmod/rational.hpp"

namespace galmod {

/// Reduction data for Q(zeta_N): the N-th cyclotomic polynomial and the
/// normal forms of x^j for 0 <= j < N.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(long N);

  long conductor() const { return n_; }
  long degree() const { return phi_; }
  const std::vector<Integer>& polynomial() const { return poly_; }
  const std::vector<Integer>& power_form(long j) const { return powers_[static_cast<std::size_t>(j)]; }
  const std::vector<long>& units() const { return units_; }

  explicit CyclotomicField(long N);

 private:
  long n_;
  long phi_;
  std::vector<Integer> poly_;                // low degree first, monic
  std::vector<std::vector<Integer>> powers_;  // x^j mod Phi_N
  std::vector<long> units_;
};

/// Exact element of Q(zeta_N), kept as an integer vector over a common
/// positive denominator in lowest terms.
class CycNumber {
 public:
  /// Zero of Q (conductor 1); promoted on contact with any other conductor.
  CycNumber();
  CycNumber(long N, const Rational& value);
  CycNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Integer> num, Integer den);

  static CycNumber from_coeffs(long N, const std::vector<Rational>& coeffs);
  /// zeta_N^j.
  static CycNumber zeta_power(long N, long j);

  long conductor() const { return field_->conductor(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  Rational coeff(std::size_t i) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_rational() const;
  /// Rational number gcd(numerators)/denominator, zero for zero.
  Rational content() const;

  CycNumber operator+(const CycNumber& o) const;
  CycNumber operator-(const CycNumber& o) const;
  CycNumber operator*(const CycNumber& o) const;
  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& o) { return *this = *this + o; }
  CycNumber& operator-=(const CycNumber& o) { return *this = *this - o; }
  CycNumber& operator*=(const CycNumber& o) { return *this = *this * o; }
  bool operator==(const CycNumber& o) const;
  bool operator!=(const CycNumber& o) const { return !(*this == o); }

  CycNumber scaled(const Rational& c) const;
  CycNumber pow(long n) const;
  /// Multiply by zeta_n^j, n | N.
  CycNumber times_root_of_unity(long n, long j) const;
  std::optional<CycNumber> inverse() const;
  /// Product of x under every automorphism of Q(zeta_N).
  Rational norm() const;

  CycNumber zero_like() const { return CycNumber(conductor(), Rational(0)); }
  CycNumber one_like() const { return CycNumber(conductor(), Rational(1)); }
  CycNumber root_of_unity_like(long n, long j) const;

  std::string to_string() const;

  /// Element with coefficient full[j] on zeta_N^j (j < N), over den.
  static CycNumber from_exponents(const std::shared_ptr<const CyclotomicField>& f, std::vector<Integer> full, Integer den);

 private:
  void normalize();
  static std::shared_ptr<const CyclotomicField> common_field(const CycNumber& a, const CycNumber& b);
  CycNumber promoted(const std::shared_ptr<const CyclotomicField>& f) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Integer> num_;
  Integer den_;
};

/// zeta_n^power at conductor N, with zeta_n = zeta_N^{N/n}.
CycNumber root_of_unity(long N, long n, long power);

/// Image of x under zeta_N -> zeta_N^k.
CycNumber galois_apply(const CycNumber& x, long k);

/// j in [0, n) with x = zeta_n^j.
long discrete_log_in_mu(const CycNumber& x, long n);

}  // namespace galmod
