#include "galmod/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "galmod/error.hpp"

namespace galmod {

namespace {

using Poly = std::vector<Integer>;

long mobius(long n) {
  long result = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact quotient by a monic polynomial.
Poly divide_exact(Poly a, const Poly& b) {
  std::size_t db = b.size() - 1;
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    Integer c = a[i];
    q[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly x_pow_minus_one(long d) {
  Poly p(static_cast<std::size_t>(d) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  return p;
}

}  // namespace

CyclotomicField::CyclotomicField(long N) : n_(N) {
  if (N < 1) throw Error(ErrorCode::Conductor, "conductor must be positive");
  Poly num{1}, den{1};
  for (long d = 1; d <= N; ++d) {
    if (N % d != 0) continue;
    long mu = mobius(N / d);
    if (mu == 1) num = multiply(num, x_pow_minus_one(d));
    if (mu == -1) den = multiply(den, x_pow_minus_one(d));
  }
  // den has leading coefficient 1 up to sign; make it monic
  if (den.back() < 0) {
    for (auto& c : den) c = -c;
    for (auto& c : num) c = -c;
  }
  poly_ = divide_exact(num, den);
  phi_ = static_cast<long>(poly_.size()) - 1;
  auto phi = static_cast<std::size_t>(phi_);
  powers_.assign(static_cast<std::size_t>(N), Poly(phi, 0));
  for (std::size_t j = 0; j < static_cast<std::size_t>(N); ++j) {
    if (j < phi) {
      powers_[j][j] = 1;
      continue;
    }
    const Poly& prev = powers_[j - 1];
    Poly& cur = powers_[j];
    Integer top = prev[phi - 1];
    for (std::size_t k = phi - 1; k > 0; --k) cur[k] = prev[k - 1] - top * poly_[k];
    cur[0] = -top * poly_[0];
  }
  for (long k = 1; k <= N; ++k)
    if (gcd(k, N) == 1) units_.push_back(k % N == 0 ? 0 : k);
  if (N == 1) units_ = {0};
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(long N) {
  static std::mutex mu;
  static std::map<long, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const CyclotomicField>(N);
  cache.emplace(N, f);
  return f;
}

CycNumber::CycNumber() : field_(CyclotomicField::get(1)), num_(1, 0), den_(1) {}

CycNumber::CycNumber(long N, const Rational& value)
    : field_(CyclotomicField::get(N)), num_(static_cast<std::size_t>(field_->degree()), 0), den_(value.get_den()) {
  num_[0] = value.get_num();
}

CycNumber::CycNumber(std::shared_ptr<const CyclotomicField> field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (num_.size() != static_cast<std::size_t>(field_->degree()))
    throw Error(ErrorCode::Conductor, "coefficient vector length does not match field degree");
  if (den_ == 0) throw Error(ErrorCode::Domain, "zero denominator");
  normalize();
}

CycNumber CycNumber::from_coeffs(long N, const std::vector<Rational>& coeffs) {
  auto f = CyclotomicField::get(N);
  if (coeffs.size() != static_cast<std::size_t>(f->degree()))
    throw Error(ErrorCode::Conductor, "expected " + std::to_string(f->degree()) + " coefficients for N=" + std::to_string(N));
  Integer den = 1;
  for (const auto& c : coeffs) den = lcm(den, Integer(c.get_den()));
  std::vector<Integer> num;
  num.reserve(coeffs.size());
  for (const auto& c : coeffs) num.push_back(c.get_num() * (den / c.get_den()));
  return CycNumber(f, std::move(num), den);
}

CycNumber CycNumber::zeta_power(long N, long j) {
  auto f = CyclotomicField::get(N);
  return CycNumber(f, f->power_form(mod(j, N)), 1);
}

void CycNumber::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& c : num_) c = -c;
  }
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto& c : num_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational CycNumber::coeff(std::size_t i) const {
  Rational r(num_.at(i), den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycNumber::coeffs() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < num_.size(); ++i) out.push_back(coeff(i));
  return out;
}

bool CycNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational CycNumber::content() const {
  Integer g = 0;
  for (const auto& c : num_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  Rational r(g, den_);
  r.canonicalize();
  return r;
}

std::shared_ptr<const CyclotomicField> CycNumber::common_field(const CycNumber& a, const CycNumber& b) {
  if (a.field_ == b.field_) return a.field_;
  long na = a.conductor(), nb = b.conductor();
  if (na == nb) return a.field_;
  if (na == 1 && a.is_rational()) return b.field_;
  if (nb == 1 && b.is_rational()) return a.field_;
  throw Error(ErrorCode::Conductor, "mixed conductors " + std::to_string(na) + " and " + std::to_string(nb));
}

CycNumber CycNumber::promoted(const std::shared_ptr<const CyclotomicField>& f) const {
  if (f == field_ || f->conductor() == conductor()) return *this;
  std::vector<Integer> num(static_cast<std::size_t>(f->degree()), 0);
  num[0] = num_[0];
  return CycNumber(f, std::move(num), den_);
}

CycNumber CycNumber::from_exponents(const std::shared_ptr<const CyclotomicField>& f, std::vector<Integer> full, Integer den) {
  auto phi = static_cast<std::size_t>(f->degree());
  std::vector<Integer> num(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(phi));
  for (std::size_t j = phi; j < full.size(); ++j) {
    if (full[j] == 0) continue;
    const auto& row = f->power_form(static_cast<long>(j));
    for (std::size_t k = 0; k < phi; ++k)
      if (row[k] != 0) mpz_addmul(num[k].get_mpz_t(), full[j].get_mpz_t(), row[k].get_mpz_t());
  }
  return CycNumber(f, std::move(num), std::move(den));
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
  auto f = common_field(*this, o);
  CycNumber pa, pb;
  const CycNumber& a = f == field_ ? *this : (pa = promoted(f));
  const CycNumber& b = f == o.field_ ? o : (pb = o.promoted(f));
  std::vector<Integer> num(a.num_.size());
  if (a.den_ == b.den_) {
    for (std::size_t i = 0; i < num.size(); ++i) mpz_add(num[i].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[i].get_mpz_t());
    return CycNumber(f, std::move(num), a.den_);
  }
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = a.num_[i] * b.den_ + b.num_[i] * a.den_;
  return CycNumber(f, std::move(num), a.den_ * b.den_);
}

CycNumber CycNumber::operator-(const CycNumber& o) const { return *this + (-o); }

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.num_) c = -c;
  return r;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
  auto f = common_field(*this, o);
  CycNumber pa, pb;
  const CycNumber& a = f == field_ ? *this : (pa = promoted(f));
  const CycNumber& b = f == o.field_ ? o : (pb = o.promoted(f));
  if (a.is_rational() || b.is_rational()) {
    const CycNumber& scalar = a.is_rational() ? a : b;
    const CycNumber& other = a.is_rational() ? b : a;
    std::vector<Integer> num(other.num_.size());
    for (std::size_t i = 0; i < num.size(); ++i) num[i] = other.num_[i] * scalar.num_[0];
    return CycNumber(f, std::move(num), other.den_ * scalar.den_);
  }
  auto N = static_cast<std::size_t>(f->conductor());
  std::vector<Integer> full(N, 0);
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    if (a.num_[i] == 0) continue;
    for (std::size_t j = 0; j < b.num_.size(); ++j) {
      if (b.num_[j] == 0) continue;
      std::size_t k = (i + j) % N;
      mpz_addmul(full[k].get_mpz_t(), a.num_[i].get_mpz_t(), b.num_[j].get_mpz_t());
    }
  }
  return from_exponents(f, std::move(full), a.den_ * b.den_);
}

bool CycNumber::operator==(const CycNumber& o) const {
  if (conductor() != o.conductor()) {
    if (!is_rational() || !o.is_rational()) return false;
    return num_[0] == o.num_[0] && den_ == o.den_;
  }
  return den_ == o.den_ && num_ == o.num_;
}

CycNumber CycNumber::scaled(const Rational& c) const {
  std::vector<Integer> num(num_.size());
  for (std::size_t i = 0; i < num.size(); ++i) num[i] = num_[i] * c.get_num();
  if (c == 0) return CycNumber(field_, std::move(num), 1);
  return CycNumber(field_, std::move(num), den_ * c.get_den());
}

CycNumber CycNumber::pow(long n) const {
  if (n < 0) {
    auto inv = inverse();
    if (!inv) throw Error(ErrorCode::Domain, "negative power of zero");
    return inv->pow(-n);
  }
  CycNumber result = one_like(), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

CycNumber CycNumber::times_root_of_unity(long n, long j) const {
  long N = conductor();
  if (N % n != 0) throw Error(ErrorCode::Conductor, std::to_string(n) + " does not divide conductor " + std::to_string(N));
  long shift = mod((N / n) * mod(j, n), N);
  if (shift == 0) return *this;
  std::vector<Integer> full(static_cast<std::size_t>(N), 0);
  for (std::size_t i = 0; i < num_.size(); ++i) full[(i + static_cast<std::size_t>(shift)) % static_cast<std::size_t>(N)] = num_[i];
  return from_exponents(field_, std::move(full), den_);
}

CycNumber CycNumber::root_of_unity_like(long n, long j) const { return root_of_unity(conductor(), n, j); }

Rational CycNumber::norm() const {
  if (is_zero()) return 0;
  CycNumber prod = *this;
  for (long k : field_->units())
    if (k != 1 % conductor()) prod = prod * galois_apply(*this, k);
  return prod.coeff(0);
}

std::optional<CycNumber> CycNumber::inverse() const {
  if (is_zero()) return std::nullopt;
  if (is_rational()) {
    return one_like().scaled(1 / coeff(0));
  }
  CycNumber others = one_like();
  for (long k : field_->units())
    if (k != 1) others = others * galois_apply(*this, k);
  Rational n = (others * *this).coeff(0);
  return others.scaled(1 / n);
}

std::string CycNumber::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    Rational c = coeff(i);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Rational a = abs(c);
    if (i == 0) {
      out += to_fraction_string(a);
    } else {
      if (a != 1) out += to_fraction_string(a) + "*";
      out += "z" + std::to_string(conductor()) + (i > 1 ? "^" + std::to_string(i) : "");
    }
  }
  return out.empty() ? "0" : out;
}

CycNumber root_of_unity(long N, long n, long power) {
  if (n < 1 || N % n != 0)
    throw Error(ErrorCode::Conductor, "root order " + std::to_string(n) + " does not divide conductor " + std::to_string(N));
  return CycNumber::zeta_power(N, (N / n) * mod(power, n));
}

CycNumber galois_apply(const CycNumber& x, long k) {
  long N = x.conductor();
  if (gcd(k, N) != 1)
    throw Error(ErrorCode::InvalidAutomorphism, "k=" + std::to_string(k) + " not prime to " + std::to_string(N));
  long km = mod(k, N);
  if (km == 1 % N || x.is_rational()) return x;
  auto f = x.field();
  std::vector<Integer> full(static_cast<std::size_t>(N), 0);
  const auto& num = x.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) full[static_cast<std::size_t>(mod(static_cast<long>(i) * km, N))] = num[i];
  return CycNumber::from_exponents(f, std::move(full), x.denominator());
}

long discrete_log_in_mu(const CycNumber& x, long n) {
  long N = x.conductor();
  if (n < 1 || N % n != 0) {
    if (x.is_rational() && x == CycNumber(1, 1)) return 0;
    throw Error(ErrorCode::Conductor, "root order " + std::to_string(n) + " does not divide conductor " + std::to_string(N));
  }
  if (x.denominator() != 1) throw Error(ErrorCode::NotARoot, x.to_string() + " is not a root of unity");
  for (long j = 0; j < n; ++j)
    if (x == root_of_unity(N, n, j)) return j;
  throw Error(ErrorCode::NotARoot, x.to_string() + " is not a " + std::to_string(n) + "-th root of unity");
}

}  // namespace galmod
