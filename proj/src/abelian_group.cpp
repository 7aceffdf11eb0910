#include "galmod/abelian_group.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "galmod/error.hpp"
#include "galmod/rational.hpp"

namespace galmod {

namespace {

std::vector<long> split_longs(const std::string& spec) {
  std::vector<long> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad integer '" + item + "' in '" + spec + "'");
    }
    while (pos < item.size() && item[pos] == ' ') ++pos;
    if (pos != item.size()) throw Error(ErrorCode::Parse, "bad integer '" + item + "' in '" + spec + "'");
    out.push_back(v);
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty list '" + spec + "'");
  return out;
}

// Smith form of a diagonal matrix: split into prime powers, then regroup.
std::vector<long> invariant_form(const std::vector<long>& factors) {
  std::map<long, std::vector<long>> powers;
  for (long f : factors) {
    long n = f;
    for (long p = 2; p * p <= n; ++p) {
      if (n % p != 0) continue;
      long q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      powers[p].push_back(q);
    }
    if (n > 1) powers[n].push_back(n);
  }
  std::size_t k = 0;
  for (auto& [p, v] : powers) {
    std::sort(v.begin(), v.end());
    k = std::max(k, v.size());
  }
  std::vector<long> d(k, 1);
  for (auto& [p, v] : powers) {
    std::size_t offset = k - v.size();
    for (std::size_t i = 0; i < v.size(); ++i) d[offset + i] *= v[i];
  }
  return d;
}

}  // namespace

FiniteAbelianGroup::FiniteAbelianGroup(const std::vector<long>& factors) {
  if (factors.empty()) throw Error(ErrorCode::InvalidGroup, "no factors given");
  for (long f : factors) {
    if (f <= 1) throw Error(ErrorCode::InvalidGroup, "factor " + std::to_string(f) + " must exceed 1");
    if (f % 2 == 0) throw Error(ErrorCode::InvalidGroup, "factor " + std::to_string(f) + " is even");
  }
  d_ = invariant_form(factors);
  for (long x : d_) order_ *= x;
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
  return FiniteAbelianGroup(split_longs(spec));
}

bool FiniteAbelianGroup::is_valid(const GroupElement& s) const {
  if (s.size() != d_.size()) return false;
  for (std::size_t i = 0; i < d_.size(); ++i)
    if (s[i] < 0 || s[i] >= d_[i]) return false;
  return true;
}

void FiniteAbelianGroup::validate(const GroupElement& s) const {
  if (!is_valid(s)) throw Error(ErrorCode::InvalidElement, "element " + format(s) + " not in group " + spec());
}

GroupElement FiniteAbelianGroup::add(const GroupElement& s, const GroupElement& t) const {
  GroupElement r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = (s[i] + t[i]) % d_[i];
  return r;
}

GroupElement FiniteAbelianGroup::negate(const GroupElement& s) const {
  GroupElement r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = s[i] == 0 ? 0 : d_[i] - s[i];
  return r;
}

GroupElement FiniteAbelianGroup::multiple(const GroupElement& s, long n) const {
  GroupElement r(d_.size());
  for (std::size_t i = 0; i < d_.size(); ++i) r[i] = mod((s[i] % d_[i]) * mod(n, d_[i]), d_[i]);
  return r;
}

std::size_t FiniteAbelianGroup::index_of(const GroupElement& s) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d_.size(); ++i) idx = idx * static_cast<std::size_t>(d_[i]) + static_cast<std::size_t>(s[i]);
  return idx;
}

GroupElement FiniteAbelianGroup::element_at(std::size_t index) const {
  GroupElement s(d_.size());
  for (std::size_t i = d_.size(); i-- > 0;) {
    s[i] = static_cast<long>(index % static_cast<std::size_t>(d_[i]));
    index /= static_cast<std::size_t>(d_[i]);
  }
  return s;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long i = 0; i < order_; ++i) out.push_back(element_at(static_cast<std::size_t>(i)));
  return out;
}

std::string FiniteAbelianGroup::spec() const {
  std::string s;
  for (std::size_t i = 0; i < d_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d_[i]);
  }
  return s;
}

std::string FiniteAbelianGroup::format(const GroupElement& s) const {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

GroupElement FiniteAbelianGroup::parse_element(const std::string& text) const {
  GroupElement s = split_longs(text);
  validate(s);
  return s;
}

long element_order(const FiniteAbelianGroup& g, const GroupElement& s) {
  g.validate(s);
  long n = 1;
  const auto& d = g.invariant_factors();
  for (std::size_t i = 0; i < d.size(); ++i) n = lcm(n, d[i] / gcd(s[i], d[i]));
  return n;
}

std::vector<GroupElement> bounded_order_subgroup(const FiniteAbelianGroup& g, long d) {
  if (d < 1) throw Error(ErrorCode::Precondition, "bound must be positive");
  std::vector<GroupElement> out;
  for (const auto& s : g.elements())
    if (d % element_order(g, s) == 0) out.push_back(s);
  return out;
}

GroupElement twist_action(const FiniteAbelianGroup& g, const GroupElement& s, long k, long n) {
  g.validate(s);
  long m = g.exponent();
  if (gcd(k, m) != 1) throw Error(ErrorCode::InvalidTwist, "k=" + std::to_string(k) + " not prime to exponent " + std::to_string(m));
  long base = n >= 0 ? mod(k, m) : inverse_mod(k, m);
  long e = n >= 0 ? n : -n;
  long power = 1 % m;
  for (long i = 0; i < e; ++i) power = power * base % m;
  return g.multiple(s, power);
}

std::vector<GroupElement> cyclic_subgroup(const FiniteAbelianGroup& g, const GroupElement& s) {
  long n = element_order(g, s);
  std::vector<GroupElement> out;
  for (long i = 0; i < n; ++i) out.push_back(g.multiple(s, i));
  return out;
}

}  // namespace galmod
