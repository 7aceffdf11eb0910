#include "galmod/stickelberger.hpp"

#include "galmod/error.hpp"
#include "galmod/integer_matrix.hpp"
#include "galmod/mutation.hpp"

namespace galmod {

namespace {

long centered_upsilon(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  long n = element_order(g, s);
  if (n == 1) return 0;
  long m = g.exponent();
  CycNumber value = char_value(g, chi, s, m);
  long j = discrete_log_in_mu(value, n);
  long v = j > (n - 1) / 2 ? j - n : j;
  if (active_mutation() == Mutation::FlipUpsilonSign) v = -v;
  return v;
}

}  // namespace

StickelbergerTable::StickelbergerTable(std::shared_ptr<const FiniteAbelianGroup> g) : chars_(std::move(g)) {
  std::size_t n = size();
  const auto& grp = group();
  auto els = grp.elements();
  orders_.resize(n);
  for (std::size_t s = 0; s < n; ++s) orders_[s] = element_order(grp, els[s]);
  ups_.resize(n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t s = 0; s < n; ++s) ups_[c * n + s] = centered_upsilon(grp, els[c], els[s]);
}

Rational StickelbergerTable::pairing(std::size_t chi, std::size_t s) const {
  Rational r(upsilon(chi, s), orders_[s]);
  r.canonicalize();
  return r;
}

std::vector<long> StickelbergerTable::theta_numerators(const CharCombo& psi) const {
  std::size_t n = size();
  if (psi.size() != n) throw Error(ErrorCode::Domain, "combination has wrong length");
  std::vector<long> out(n, 0);
  for (std::size_t c = 0; c < n; ++c) {
    if (psi[c] == 0) continue;
    const long* row = &ups_[c * n];
    for (std::size_t s = 0; s < n; ++s) out[s] += psi[c] * row[s];
  }
  return out;
}

std::vector<Rational> StickelbergerTable::theta_star(const CharCombo& psi) const {
  auto nums = theta_numerators(psi);
  std::vector<Rational> out(nums.size());
  for (std::size_t s = 0; s < nums.size(); ++s) {
    out[s] = Rational(nums[s], orders_[s]);
    out[s].canonicalize();
  }
  return out;
}

bool StickelbergerTable::integrality_check(const CharCombo& psi) const {
  auto nums = theta_numerators(psi);
  for (std::size_t s = 0; s < nums.size(); ++s)
    if (nums[s] % orders_[s] != 0) return false;
  return true;
}

Character StickelbergerTable::det_map(const CharCombo& psi) const {
  const auto& g = group();
  const auto& d = g.invariant_factors();
  Character out(d.size(), 0);
  for (std::size_t c = 0; c < psi.size(); ++c) {
    if (psi[c] == 0) continue;
    auto chi = chars_.character(c);
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = mod(out[i] + psi[c] * chi[i], d[i]);
  }
  return out;
}

bool StickelbergerTable::det_trivial(const CharCombo& psi) const {
  auto chi = det_map(psi);
  for (long x : chi)
    if (x != 0) return false;
  return true;
}

CharCombo single_character(const CharacterTable& t, std::size_t chi, long coeff) {
  CharCombo psi(t.size(), 0);
  psi[chi] = coeff;
  return psi;
}

Rational stickelberger_pairing(const FiniteAbelianGroup& g, const Character& chi, const GroupElement& s) {
  if (!g.is_valid(chi)) throw Error(ErrorCode::InvalidElement, "character " + g.format(chi) + " not in dual of " + g.spec());
  Rational r(centered_upsilon(g, chi, s), element_order(g, s));
  r.canonicalize();
  return r;
}

std::vector<CharCombo> ahat_kernel_basis(const FiniteAbelianGroup& g) {
  // Rows: characters (images), then the relations d_i e_i. The left kernel
  // projected to the character block is exactly ker(det).
  const auto& d = g.invariant_factors();
  std::size_t n = static_cast<std::size_t>(g.order()), k = d.size();
  IntMatrix b(n + k, std::vector<Integer>(k, 0));
  for (std::size_t c = 0; c < n; ++c) {
    auto chi = g.element_at(c);
    for (std::size_t i = 0; i < k; ++i) b[c][i] = chi[i];
  }
  for (std::size_t i = 0; i < k; ++i) b[n + i][i] = d[i];
  IntMatrix kernel = left_kernel(b);
  IntMatrix projected;
  for (const auto& row : kernel) projected.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
  IntMatrix canonical = hermite_normal_form(projected).h;
  std::vector<CharCombo> out;
  for (const auto& row : canonical) {
    CharCombo psi(n);
    bool nonzero = false;
    for (std::size_t c = 0; c < n; ++c) {
      psi[c] = row[c].get_si();
      nonzero = nonzero || psi[c] != 0;
    }
    if (nonzero) out.push_back(std::move(psi));
  }
  return out;
}

Integer lattice_index(const std::vector<CharCombo>& basis) {
  if (basis.empty()) return 0;
  IntMatrix m;
  for (const auto& psi : basis) {
    std::vector<Integer> row;
    for (long x : psi) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  if (m.size() != m[0].size()) return 0;
  return abs_determinant(m);
}

bool equivariance_check(const StickelbergerTable& table, long k) {
  const auto& g = table.group();
  const auto& chars = table.characters();
  long m = g.exponent();
  if (gcd(k, m) != 1) throw Error(ErrorCode::InvalidTwist, "k=" + std::to_string(k) + " not prime to exponent " + std::to_string(m));
  std::size_t n = table.size();
  auto els = g.elements();
  // generators of G in the invariant-factor coordinates
  std::vector<GroupElement> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    GroupElement e = g.identity();
    e[i] = 1;
    gens.push_back(e);
  }
  for (std::size_t c = 0; c < n; ++c) {
    Character chi = chars.character(c);
    // omega.chi determined by Galois action on its values at the generators
    Character moved(g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
      CycNumber v = galois_apply(char_value(g, chi, gens[i], m), k);
      long di = g.invariant_factors()[i];
      moved[i] = discrete_log_in_mu(v, di);
    }
    auto lhs = table.theta_star(single_character(chars, chars.index_of(moved)));
    auto theta = table.theta_star(single_character(chars, c));
    std::vector<Rational> rhs(n, 0);
    for (std::size_t s = 0; s < n; ++s) rhs[g.index_of(twist_action(g, els[s], k, -1))] += theta[s];
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace galmod
