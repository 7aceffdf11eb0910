#include "galmod/tame.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "galmod/mutation.hpp"

namespace galmod {

namespace {

// Polynomial arithmetic in F_p[x]/Phi_N, used to reduce norms mod p cheaply.
class ModPField {
 public:
  ModPField(long N, long p) : p_(p), field_(CyclotomicField::get(N)) {
    phi_ = static_cast<std::size_t>(field_->degree());
    powers_.resize(static_cast<std::size_t>(N));
    for (long j = 0; j < N; ++j) {
      const auto& row = field_->power_form(j);
      for (const auto& c : row) powers_[static_cast<std::size_t>(j)].push_back(reduce(c));
    }
  }

  std::vector<long> from(const CycNumber& x) const {
    long den_inv = inverse_mod(reduce(x.denominator()), p_);
    std::vector<long> v;
    for (const auto& c : x.numerators()) v.push_back(reduce(c) * den_inv % p_);
    return v;
  }

  std::vector<long> multiply(const std::vector<long>& a, const std::vector<long>& b) const {
    auto N = powers_.size();
    std::vector<long> full(N, 0);
    for (std::size_t i = 0; i < phi_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < phi_; ++j) full[(i + j) % N] = (full[(i + j) % N] + a[i] * b[j]) % p_;
    }
    return fold(full);
  }

  std::vector<long> conjugate(const std::vector<long>& a, long k) const {
    auto N = static_cast<long>(powers_.size());
    std::vector<long> full(powers_.size(), 0);
    for (std::size_t i = 0; i < phi_; ++i) full[static_cast<std::size_t>(mod(static_cast<long>(i) * k, N))] = a[i];
    return fold(full);
  }

  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }

 private:
  long reduce(const Integer& c) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p_));
    return r.get_si();
  }

  std::vector<long> fold(const std::vector<long>& full) const {
    std::vector<long> out(full.begin(), full.begin() + static_cast<std::ptrdiff_t>(phi_));
    for (std::size_t j = phi_; j < full.size(); ++j) {
      if (full[j] == 0) continue;
      for (std::size_t k = 0; k < phi_; ++k) out[k] = (out[k] + full[j] * powers_[j][k]) % p_;
    }
    return out;
  }

  long p_;
  std::shared_ptr<const CyclotomicField> field_;
  std::size_t phi_;
  std::vector<std::vector<long>> powers_;
};

long norm_mod_p_with(const ModPField& f, const CycNumber& x, long p) {
  auto base = f.from(x);
  auto acc = base;
  long N = f.field()->conductor();
  for (long k : f.field()->units())
    if (k != 1 % N) acc = f.multiply(acc, f.conjugate(base, k));
  return mod(acc[0], p);
}

CycNumber determinant(std::vector<std::vector<CycNumber>> m) {
  std::size_t n = m.size();
  CycNumber det = m[0][0].one_like();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return det.zero_like();
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    CycNumber inv = *m[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      CycNumber f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

// Integer vectors in [-2,2]^len with the given L1 size, in lexicographic order.
void vectors_of_size(std::size_t len, long size, std::vector<long>& cur, const std::function<bool(const std::vector<long>&)>& visit,
                     bool& stop) {
  if (stop) return;
  if (cur.size() == len) {
    if (size == 0) stop = visit(cur);
    return;
  }
  std::size_t remaining = len - cur.size() - 1;
  for (long c = -2; c <= 2 && !stop; ++c) {
    long rest = size - std::abs(c);
    if (rest < 0 || rest > 2 * static_cast<long>(remaining)) continue;
    cur.push_back(c);
    vectors_of_size(len, rest, cur, visit, stop);
    cur.pop_back();
  }
}

}  // namespace

void validate_tame_hom(const FiniteAbelianGroup& g, const TameHom& h) {
  g.validate(h.t_phi);
  g.validate(h.s_sigma);
  if (h.q < 2) throw Error(ErrorCode::Precondition, "residue field size must be at least 2");
  if (gcd(h.q, g.order()) != 1) throw Error(ErrorCode::Precondition, "q must be prime to |G|");
  if ((h.q - 1) % element_order(g, h.s_sigma) != 0)
    throw Error(ErrorCode::Tameness, "order of h(sigma) does not divide q-1");
}

std::pair<TameHom, TameHom> factorize(const FiniteAbelianGroup& g, const TameHom& h) {
  validate_tame_hom(g, h);
  return {TameHom{h.t_phi, g.identity(), h.q}, TameHom{g.identity(), h.s_sigma, h.q}};
}

int factorization_level(const FiniteAbelianGroup& g, const TameHom& h) {
  validate_tame_hom(g, h);
  return h.s_sigma == g.identity() ? 0 : 1;
}

PuiseuxElement tame_alpha(const TameModel& model) {
  long e = model.e;
  long c = (1 - e) / 2;
  PuiseuxElement alpha(model);
  for (long k = 0; k < e; ++k) alpha += PuiseuxElement::pi_power(model, k + c);
  if (active_mutation() == Mutation::DropAlphaNormalization) return alpha;
  return alpha.scaled(Rational(1, e));
}

GMap<PuiseuxElement> tame_generator(std::shared_ptr<const FiniteAbelianGroup> g, long e, long q, const GroupElement& s,
                                    const TameModel& model) {
  g->validate(s);
  if (e % 2 == 0) throw Error(ErrorCode::OddOrder, "ramification index " + std::to_string(e) + " is even");
  if (element_order(*g, s) != e) throw Error(ErrorCode::Precondition, "e must equal the order of s");
  if ((q - 1) % e != 0) throw Error(ErrorCode::Tameness, "e=" + std::to_string(e) + " does not divide q-1=" + std::to_string(q - 1));
  PuiseuxElement one = PuiseuxElement::pi_power(model, 0);
  if (e == 1) return GMap<PuiseuxElement>::delta(g, g->identity(), one);
  if (model.e != e) throw Error(ErrorCode::Precondition, "tame model has ramification " + std::to_string(model.e) + ", expected " + std::to_string(e));
  GMap<PuiseuxElement> a(g, one);
  PuiseuxElement conj = tame_alpha(model);
  for (long i = 0; i < e; ++i) {
    a.at(g->multiple(s, i)) = conj;
    conj = galois_sigma(conj);
  }
  return a;
}

GMap<PuiseuxElement> prime_element(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s,
                                   const TameModel& model) {
  PuiseuxElement one = PuiseuxElement::pi_power(model, 0);
  GMap<PuiseuxElement> f(g, one);
  for (auto& v : f.values) v = one;
  if (s != g->identity()) f.at(s) = PuiseuxElement::pi_power(model, model.e);
  return f;
}

GMap<PuiseuxElement> prime_element_roots(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s,
                                         const TameModel& model) {
  PuiseuxElement one = PuiseuxElement::pi_power(model, 0);
  GMap<PuiseuxElement> rho(g, one);
  for (auto& v : rho.values) v = one;
  long n = element_order(*g, s);
  if (model.e % n != 0) throw Error(ErrorCode::Precondition, "tame model lacks pi^{1/" + std::to_string(n) + "}");
  if (n > 1) rho.at(s) = PuiseuxElement::pi_power(model, model.e / n);
  return rho;
}

bool tame_resolvent_check(const StickelbergerTable& table, const GMap<PuiseuxElement>& a, const GroupElement& s,
                          const TameModel& model, std::vector<std::string>* witnesses) {
  const auto& g = table.group();
  long n = element_order(g, s);
  std::size_t si = g.index_of(s);
  bool ok = true;
  for (std::size_t c = 0; c < table.size(); ++c) {
    auto chi = table.characters().character(c);
    auto lhs = resolvent(a, chi);
    auto rhs = PuiseuxElement::pi_power(model, table.upsilon(c, si) * (model.e / n));
    if (lhs == rhs) continue;
    ok = false;
    if (witnesses) witnesses->push_back("chi=" + g.format(chi) + ": " + lhs.to_string() + " != " + rhs.to_string());
  }
  return ok;
}

bool inversion_identity_check(const TameModel& model) {
  long e = model.e;
  long c = (1 - e) / 2;
  std::vector<PuiseuxElement> conj{tame_alpha(model)};
  for (long i = 1; i < e; ++i) conj.push_back(galois_sigma(conj.back()));
  for (long l = 0; l < e; ++l) {
    PuiseuxElement acc(model);
    for (long i = 0; i < e; ++i) acc += conj[static_cast<std::size_t>(i)].times_root_of_unity(e, -(l + c) * i);
    if (acc != PuiseuxElement::pi_power(model, l + c)) return false;
  }
  return true;
}

CycNumber basis_change_determinant(const TameModel& model) {
  long e = model.e;
  long c = (1 - e) / 2;
  std::vector<std::vector<CycNumber>> m;
  PuiseuxElement conj = tame_alpha(model);
  for (long i = 0; i < e; ++i) {
    std::vector<CycNumber> row;
    for (long k = 0; k < e; ++k) row.push_back(conj.coefficient(k + c));
    m.push_back(row);
    conj = galois_sigma(conj);
  }
  return determinant(m);
}

bool is_p_unit(const CycNumber& x, long p) {
  if (x.is_zero()) return false;
  return ord_p(x.content(), p) >= 0 && ord_p(x.inverse()->content(), p) >= 0;
}

long norm_mod_p(const CycNumber& x, long p) { return norm_mod_p_with(ModPField(x.conductor(), p), x, p); }

long multiplicative_order(long q, long r) {
  if (gcd(q, r) != 1) return 0;
  long k = 1, x = mod(q, r);
  while (x != 1 % r) {
    x = x * mod(q, r) % r;
    ++k;
  }
  return k;
}

GMap<PuiseuxElement> unramified_generator_search(std::shared_ptr<const FiniteAbelianGroup> g, long q,
                                                 const GroupElement& t, long r, const TameModel& model) {
  g->validate(t);
  long f = element_order(*g, t);
  PuiseuxElement one = PuiseuxElement::pi_power(model, 0);
  if (f == 1) return GMap<PuiseuxElement>::delta(g, t, one);
  if (!is_prime(r) || r == 2) throw Error(ErrorCode::Precondition, "auxiliary r must be an odd prime");
  if (model.N % r != 0 || model.N % f != 0) throw Error(ErrorCode::Conductor, "conductor lacks the needed roots of unity");
  if (gcd(q, model.N) != 1) throw Error(ErrorCode::Precondition, "q must be prime to the conductor");
  if (multiplicative_order(q, r) != f)
    throw Error(ErrorCode::Precondition, "order of q mod r is " + std::to_string(multiplicative_order(q, r)) + ", expected |t|=" + std::to_string(f));

  CharacterTable table(g);
  ModPField modp(model.N, model.p);
  std::vector<long> qpow{1};
  for (long i = 1; i < f; ++i) qpow.push_back(qpow.back() * q % model.N);
  std::vector<CycNumber> zeta_r;
  for (long j = 1; j < r; ++j) zeta_r.push_back(root_of_unity(model.N, r, j));

  std::optional<GMap<PuiseuxElement>> found;
  auto visit = [&](const std::vector<long>& c) {
    CycNumber beta(model.N, 0);
    for (std::size_t j = 0; j < c.size(); ++j)
      if (c[j] != 0) beta += zeta_r[j].scaled(c[j]);
    std::vector<CycNumber> conj;
    for (long i = 0; i < f; ++i) conj.push_back(galois_apply(beta, qpow[static_cast<std::size_t>(i)]));
    // resolvents on <t> take f values; each must be a p-adic unit
    for (long j = 0; j < f; ++j) {
      CycNumber res(model.N, 0);
      for (long i = 0; i < f; ++i) res += conj[static_cast<std::size_t>(i)].times_root_of_unity(f, -j * i);
      if (res.is_zero() || norm_mod_p_with(modp, res, model.p) == 0) return false;
    }
    GMap<PuiseuxElement> a(g, one);
    for (long i = 0; i < f; ++i) a.at(g->multiple(t, i)) = PuiseuxElement(model, conj[static_cast<std::size_t>(i)], 0);
    auto inv = inverse(to_resolvend(a), table);
    for (const auto& x : inv.coeffs)
      if (valuation(x) < 0) return false;
    found = a;
    return true;
  };
  std::vector<long> cur;
  bool stop = false;
  for (long size = 1; size <= 2 * (r - 1) && !stop; ++size) vectors_of_size(static_cast<std::size_t>(r - 1), size, cur, visit, stop);
  if (!found) throw Error(ErrorCode::SearchFailure, "no unit resolvend among bounded combinations of zeta_" + std::to_string(r));
  return *found;
}

TameDecomposition tame_decompose(const TameHom& h, const GMap<PuiseuxElement>& a, const TameModel& model,
                                       const StickelbergerTable& table, const std::vector<CharCombo>& basis) {
  auto gp = a.group;
  const auto& g = *gp;
  validate_tame_hom(g, h);
  const auto& chars = table.characters();
  long n = element_order(g, h.s_sigma);
  long vA = 0;
  if (n > 1) {
    if (model.e != n) throw Error(ErrorCode::Precondition, "tame model ramification differs from |h(sigma)|");
    vA = sqrt_inverse_different_valuation(RamFiltration({n}));
  }
  auto cert = generator_certificate(a, vA, h.q, chars);
  if (!cert.overall) {
    std::string why = cert.witnesses.empty() ? std::string("certificate failed") : cert.witnesses.front();
    throw Error(ErrorCode::NotAGenerator, why);
  }

  TameDecomposition out{Resolvend<PuiseuxElement>{}, prime_element(gp, h.s_sigma, model), h.s_sigma, {}, false, false, {}};
  auto r = to_resolvend(a);
  auto lift = theta_transpose_lift(table, prime_element_roots(gp, h.s_sigma, model));
  auto quotient = pointwise_product(to_character_space(r, chars), pointwise_inverse(lift));
  out.u = from_character_space(quotient, chars);

  out.u_certificate.membership = true;
  bool u_ok = integral_coefficients(out.u, &out.u_certificate.witnesses, "u");
  bool inv_ok = integral_coefficients(inverse(out.u, chars), &out.u_certificate.witnesses, "u^-1");
  out.u_certificate.unit = u_ok && inv_ok;
  out.u_certificate.overall = out.u_certificate.unit;

  out.u_unramified = map_coefficients<PuiseuxElement>(out.u, [](const PuiseuxElement& x) { return galois_sigma(x); }) == out.u;
  auto recomposed = multiply(out.u, from_character_space(lift, chars));
  out.recomposes = reduced_equal(r, recomposed, basis, chars);
  out.hom = associated_hom(a, tame_automorphisms(h.q), chars);
  return out;
}

}  // namespace galmod
