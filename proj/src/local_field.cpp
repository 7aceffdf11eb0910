#include "galmod/local_field.hpp"

#include <algorithm>
#include <sstream>

#include "galmod/error.hpp"

namespace galmod {

TameModel::TameModel(long e_, long p_, long N_) : e(e_), p(p_), N(N_) {
  if (!is_prime(p)) throw Error(ErrorCode::Precondition, "residue characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw Error(ErrorCode::Tameness, "ramification index must be positive");
  if (e % p == 0) throw Error(ErrorCode::Tameness, "e=" + std::to_string(e) + " divisible by p=" + std::to_string(p));
  if (N % e != 0) throw Error(ErrorCode::Conductor, "conductor " + std::to_string(N) + " lacks e-th roots of unity");
  if (N % p == 0) throw Error(ErrorCode::Conductor, "conductor " + std::to_string(N) + " divisible by p");
}

PuiseuxElement::PuiseuxElement(const TameModel& model) : model_(model) {}

PuiseuxElement::PuiseuxElement(const TameModel& model, const CycNumber& c, long k) : model_(model) {
  if (!c.is_zero()) terms_.emplace(k, c.conductor() == model.N ? c : c + CycNumber(model.N, 0));
}

void PuiseuxElement::check_model(const PuiseuxElement& o) const {
  if (!(model_ == o.model_)) throw Error(ErrorCode::Domain, "mixing elements of different tame models");
}

CycNumber PuiseuxElement::coefficient(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? CycNumber(model_.N, 0) : it->second;
}

PuiseuxElement PuiseuxElement::operator+(const PuiseuxElement& o) const {
  check_model(o);
  PuiseuxElement r = *this;
  for (const auto& [k, c] : o.terms_) {
    auto it = r.terms_.find(k);
    if (it == r.terms_.end()) {
      r.terms_.emplace(k, c);
      continue;
    }
    it->second += c;
    if (it->second.is_zero()) r.terms_.erase(it);
  }
  return r;
}

PuiseuxElement PuiseuxElement::operator-() const {
  PuiseuxElement r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

PuiseuxElement PuiseuxElement::operator-(const PuiseuxElement& o) const { return *this + (-o); }

PuiseuxElement PuiseuxElement::operator*(const PuiseuxElement& o) const {
  check_model(o);
  PuiseuxElement r(model_);
  for (const auto& [k1, c1] : terms_) {
    for (const auto& [k2, c2] : o.terms_) {
      CycNumber c = c1 * c2;
      auto it = r.terms_.find(k1 + k2);
      if (it == r.terms_.end()) {
        r.terms_.emplace(k1 + k2, std::move(c));
      } else {
        it->second += c;
      }
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
  return r;
}

PuiseuxElement PuiseuxElement::scaled(const Rational& c) const {
  if (c == 0) return zero_like();
  PuiseuxElement r = *this;
  for (auto& [k, v] : r.terms_) v = v.scaled(c);
  return r;
}

PuiseuxElement PuiseuxElement::times_root_of_unity(long n, long j) const {
  PuiseuxElement r = *this;
  for (auto& [k, v] : r.terms_) v = v.times_root_of_unity(n, j);
  return r;
}

PuiseuxElement PuiseuxElement::map_coefficients(const CycNumber& factor) const {
  PuiseuxElement r(model_);
  for (const auto& [k, v] : terms_) {
    CycNumber c = v * factor;
    if (!c.is_zero()) r.terms_.emplace(k, std::move(c));
  }
  return r;
}

std::optional<PuiseuxElement> PuiseuxElement::inverse() const {
  if (is_zero()) return std::nullopt;
  if (!is_monomial()) throw Error(ErrorCode::Domain, "inverse of a non-monomial Puiseux element: " + to_string());
  const auto& [k, c] = *terms_.begin();
  return PuiseuxElement(model_, *c.inverse(), -k);
}

std::string PuiseuxElement::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")";
    if (k != 0) out += "*pi^(" + std::to_string(k) + "/" + std::to_string(model_.e) + ")";
  }
  return out;
}

long valuation(const PuiseuxElement& x) {
  long best = kInfiniteValuation;
  const auto& m = x.model();
  for (const auto& [k, c] : x.terms()) best = std::min(best, k + m.e * ord_p(c.content(), m.p));
  return best;
}

PuiseuxElement galois_sigma(const PuiseuxElement& x) {
  PuiseuxElement r(x.model());
  for (const auto& [k, c] : x.terms()) r += PuiseuxElement(x.model(), c.times_root_of_unity(x.model().e, k), k);
  return r;
}

PuiseuxElement galois_phi(const PuiseuxElement& x, long q) {
  PuiseuxElement r(x.model());
  for (const auto& [k, c] : x.terms()) r += PuiseuxElement(x.model(), galois_apply(c, q), k);
  return r;
}

bool lies_in_base(const PuiseuxElement& x, long q) {
  for (const auto& [k, c] : x.terms()) {
    if (k % x.model().e != 0) return false;
    if (galois_apply(c, q) != c) return false;
  }
  return true;
}

RamFiltration::RamFiltration(std::vector<long> orders) : orders_(std::move(orders)) {
  for (std::size_t n = 0; n < orders_.size(); ++n) {
    if (orders_[n] < 1) throw Error(ErrorCode::InvalidFiltration, "ramification group orders must be positive");
    if (n > 0 && orders_[n - 1] % orders_[n] != 0)
      throw Error(ErrorCode::InvalidFiltration, "orders must form a divisibility chain");
  }
  while (!orders_.empty() && orders_.back() == 1) orders_.pop_back();
}

RamFiltration RamFiltration::parse(const std::string& spec) {
  std::vector<long> orders;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      orders.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad filtration entry '" + item + "'");
    }
  }
  if (orders.empty()) throw Error(ErrorCode::Parse, "empty filtration");
  return RamFiltration(std::move(orders));
}

long different_valuation(const RamFiltration& f) {
  long v = 0;
  for (long o : f.orders()) v += o - 1;
  return v;
}

long sqrt_inverse_different_valuation(const RamFiltration& f) {
  long v = different_valuation(f);
  if (v % 2 != 0) throw Error(ErrorCode::Parity, "different valuation " + std::to_string(v) + " is odd");
  return -v / 2;
}

bool is_weakly_ramified(const RamFiltration& f) { return f.order(2) == 1; }

bool validate_abelian_filtration(const RamFiltration& f) {
  long e0 = f.order(0) / f.order(1);
  for (std::size_t n = 1; n <= f.orders().size(); ++n)
    if (static_cast<long>(n) % e0 != 0 && f.order(n) != f.order(n + 1)) return false;
  return true;
}

}  // namespace galmod
