#include "galmod/suite.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "galmod/mutation.hpp"
#include "galmod/tame.hpp"
#include "galmod/transpose.hpp"
#include "galmod/wild.hpp"

namespace galmod {

namespace {

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;
using Outcome = std::pair<bool, std::string>;

GroupPtr make_group(const std::vector<long>& factors) { return std::make_shared<const FiniteAbelianGroup>(factors); }

long uniform(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::uint64_t stream_seed(std::uint64_t seed, const std::string& label) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : label) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return seed ^ h;
}

SuiteEntry run_check(int criterion, std::string id, std::string anchor, Json params, const std::function<Outcome()>& f) {
  SuiteEntry e{criterion, std::move(id), std::move(anchor), std::move(params), false, "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    auto [ok, witness] = f();
    e.passed = ok;
    e.witness = witness;
  } catch (const Error& err) {
    e.passed = false;
    e.witness = "error " + std::string(error_code_name(err.code())) + ": " + err.what();
  }
  e.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return e;
}

std::string group_label(const FiniteAbelianGroup& g) { return "C" + g.spec(); }

std::vector<std::vector<long>> equivariance_groups(long max_order) {
  std::vector<std::vector<long>> out;
  for (auto f : std::vector<std::vector<long>>{{3}, {9}, {27}, {3, 3}, {3, 9}, {5}, {7}, {15}}) {
    long n = 1;
    for (long d : f) n *= d;
    if (n <= max_order) out.push_back(f);
  }
  return out;
}

// Integrality of Theta_*(psi) against triviality of det(psi), on integer data
// maintained incrementally over the sweep.
struct IntegralitySweep {
  const StickelbergerTable& table;
  const FiniteAbelianGroup& g;
  std::size_t n;
  std::vector<long> nums;
  std::vector<long> det;
  long kernel_hits = 0;
  long checked = 0;
  std::string witness;

  IntegralitySweep(const StickelbergerTable& t) : table(t), g(t.group()), n(t.size()), nums(n, 0), det(g.rank(), 0) {}

  void add(std::size_t chi, long coeff) {
    for (std::size_t s = 0; s < n; ++s) nums[s] += coeff * table.upsilon(chi, s);
    auto c = table.characters().character(chi);
    for (std::size_t i = 0; i < det.size(); ++i) det[i] = mod(det[i] + coeff * c[i], g.invariant_factors()[i]);
  }

  bool check(const CharCombo& psi, bool cross_check) {
    bool integral = true;
    for (std::size_t s = 0; s < n && integral; ++s) integral = nums[s] % table.order(s) == 0;
    bool trivial = std::all_of(det.begin(), det.end(), [](long x) { return x == 0; });
    ++checked;
    if (trivial) ++kernel_hits;
    bool ok = integral == trivial;
    if (cross_check) ok = ok && table.integrality_check(psi) == integral && table.det_trivial(psi) == trivial;
    if (!ok && witness.empty()) {
      witness = "psi = [";
      for (std::size_t c = 0; c < psi.size(); ++c) witness += (c ? "," : "") + std::to_string(psi[c]);
      witness += "]: integral=" + std::string(integral ? "true" : "false") + " det-trivial=" + (trivial ? "true" : "false");
    }
    return ok;
  }
};

Outcome integrality_exhaustive(const GroupPtr& g, Json& params) {
  StickelbergerTable table(g);
  IntegralitySweep sweep(table);
  std::size_t n = table.size();
  CharCombo psi(n, -2);
  for (std::size_t c = 0; c < n; ++c) sweep.add(c, -2);
  bool ok = true;
  for (;;) {
    ok = sweep.check(psi, sweep.checked % 4096 == 0) && ok;
    std::size_t i = 0;
    while (i < n && psi[i] == 2) {
      psi[i] = -2;
      sweep.add(i, -4);
      ++i;
    }
    if (i == n) break;
    ++psi[i];
    sweep.add(i, 1);
  }
  params["samples"] = sweep.checked;
  params["kernel_hits"] = sweep.kernel_hits;
  return {ok, sweep.witness};
}

Outcome integrality_random(const GroupPtr& g, std::uint64_t seed, Json& params) {
  StickelbergerTable table(g);
  std::mt19937_64 rng(stream_seed(seed, "integrality/" + g->spec()));
  std::size_t n = table.size();
  bool ok = true;
  IntegralitySweep sweep(table);
  for (int sample = 0; sample < 10000; ++sample) {
    CharCombo psi(n);
    for (auto& x : psi) x = uniform(rng, -2, 2);
    std::fill(sweep.nums.begin(), sweep.nums.end(), 0);
    std::fill(sweep.det.begin(), sweep.det.end(), 0);
    for (std::size_t c = 0; c < n; ++c)
      if (psi[c] != 0) sweep.add(c, psi[c]);
    ok = sweep.check(psi, sample % 256 == 0) && ok;
  }
  params["samples"] = sweep.checked;
  params["kernel_hits"] = sweep.kernel_hits;
  return {ok, sweep.witness};
}

std::vector<SuiteEntry> criterion_1(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (const auto& f : odd_groups_up_to(opts.max_order)) {
    auto g = make_group(f);
    Json params{{"group", g->spec()}};
    bool exhaustive = g->order() <= 9;
    params["mode"] = exhaustive ? "exhaustive" : "random";
    SuiteEntry e;
    e = run_check(1, "c01.integrality." + group_label(*g), "stickelberger-integrality-iff-det-trivial", params,
                  [&]() { return exhaustive ? integrality_exhaustive(g, e.params) : integrality_random(g, opts.seed, e.params); });
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<SuiteEntry> criterion_2(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (const auto& f : equivariance_groups(opts.max_order)) {
    auto g = make_group(f);
    out.push_back(run_check(2, "c02.equivariance." + group_label(*g), "stickelberger-galois-equivariance",
                            {{"group", g->spec()}}, [&]() -> Outcome {
                              StickelbergerTable table(g);
                              long m = g->exponent();
                              for (long k = 1; k < m; ++k)
                                if (gcd(k, m) == 1 && !equivariance_check(table, k)) return {false, "k = " + std::to_string(k)};
                              return {true, ""};
                            }));
  }
  return out;
}

std::vector<Automorphism<CycNumber>> cyclotomic_automorphisms(long m) {
  std::vector<Automorphism<CycNumber>> out;
  for (long k = 1; k < m; ++k)
    if (gcd(k, m) == 1) out.push_back({"k=" + std::to_string(k), k, [k](const CycNumber& x) { return galois_apply(x, k); }});
  return out;
}

// Equivariant unit-valued g: on each Galois orbit of G(-1) pick rho(s) = +-zeta * c
// with c a small rational, and spread by rho(s^{k^{-1}}) = omega_k(rho(s)).
std::pair<GMap<CycNumber>, GMap<CycNumber>> random_equivariant(std::mt19937_64& rng, const GroupPtr& g) {
  long m = g->exponent();
  CycNumber one(m, 1);
  GMap<CycNumber> gm(g, one), roots(g, one);
  std::vector<bool> done(static_cast<std::size_t>(g->order()), false);
  for (const auto& s : g->elements()) {
    if (done[g->index_of(s)]) continue;
    long n = element_order(*g, s);
    CycNumber u = one;
    if (n > 1) {
      u = root_of_unity(m, n, uniform(rng, 0, n - 1)).scaled(Rational(uniform(rng, 1, 5), uniform(rng, 1, 3)));
      if (uniform(rng, 0, 1)) u = -u;
    }
    for (long k = 1; k <= m; ++k) {
      if (gcd(k, m) != 1) continue;
      auto moved = twist_action(*g, s, k, -1);
      auto ru = galois_apply(u, k % m);
      roots.at(moved) = ru;
      gm.at(moved) = power(ru, n);
      done[g->index_of(moved)] = true;
    }
  }
  return {gm, roots};
}

std::vector<SuiteEntry> criterion_3(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (const auto& f : equivariance_groups(opts.max_order)) {
    auto g = make_group(f);
    out.push_back(run_check(3, "c03.self-duality." + group_label(*g), "lifted-resolvend-self-duality",
                            {{"group", g->spec()}, {"samples", 100}}, [&]() -> Outcome {
                              StickelbergerTable table(g);
                              auto basis = ahat_kernel_basis(*g);
                              auto autos = cyclotomic_automorphisms(g->exponent());
                              std::mt19937_64 rng(stream_seed(opts.seed, "self-duality/" + g->spec()));
                              CycNumber one(g->exponent(), 1);
                              auto identity = group_element(g, g->identity(), one);
                              for (int sample = 0; sample < 100; ++sample) {
                                auto [gm, roots] = random_equivariant(rng, g);
                                auto lift = theta_transpose_lift(table, roots);
                                auto r = from_character_space(lift, table.characters());
                                if (!(multiply(r, involution(r)) == identity))
                                  return {false, "sample " + std::to_string(sample) + ": r r^[-1] != 1"};
                                if (sample < 10) {
                                  if (!roots_match(table, gm, roots)) return {false, "sample " + std::to_string(sample) + ": roots"};
                                  auto values = theta_star_transpose(table, gm, basis, autos);
                                  if (!lift_agrees_on_basis(lift, basis, values))
                                    return {false, "sample " + std::to_string(sample) + ": lift disagrees with transpose"};
                                }
                              }
                              return {true, ""};
                            }));
  }
  return out;
}

Outcome tame_case(long e) {
  long q = tame_residue_size(e);
  auto g = make_group({e});
  StickelbergerTable table(g);
  TameModel model(e, q, e);
  GroupElement s{1};
  auto a = tame_generator(g, e, q, s, model);
  std::vector<std::string> w;
  if (!tame_resolvent_check(table, a, s, model, &w)) return {false, "resolvent: " + (w.empty() ? "" : w.front())};
  if (!inversion_identity_check(model)) return {false, "inversion identity fails"};
  auto cert = generator_certificate(a, sqrt_inverse_different_valuation(RamFiltration({e, 1})), q, table.characters());
  if (!cert.overall) return {false, "certificate: " + (cert.witnesses.empty() ? "" : cert.witnesses.front())};
  auto det = basis_change_determinant(model);
  if (!is_p_unit(det, q)) return {false, "basis change determinant " + det.to_string() + " is not a unit"};
  return {true, ""};
}

std::vector<SuiteEntry> criterion_4(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (long e : opts.tame_degrees)
    out.push_back(run_check(4, "c04.tame-generator.e" + std::to_string(e), "tame-generator-resolvents",
                            {{"e", e}, {"q", tame_residue_size(e)}}, [e]() { return tame_case(e); }));
  return out;
}

struct CompositeCase {
  GroupPtr g = make_group({3, 3});
  TameModel model{3, 7, 57};
  GroupElement t{1, 0}, s{0, 1};
  long q = 7, r = 19;
};

std::vector<SuiteEntry> criterion_5(const SuiteOptions&) {
  CompositeCase c;
  Json params{{"group", "3,3"}, {"t", "(1,0)"}, {"s", "(0,1)"}, {"e", 3}, {"q", 7}, {"r", 19}};
  return {run_check(5, "c05.decompose-recompose.C3,3", "tame-decomposition-round-trip", params, [&]() -> Outcome {
    StickelbergerTable table(c.g);
    auto basis = ahat_kernel_basis(*c.g);
    auto a1 = unramified_generator_search(c.g, c.q, c.t, c.r, c.model);
    auto a2 = tame_generator(c.g, 3, c.q, c.s, c.model);
    auto a = resolvend_product_transport(a1, a2, table.characters());
    auto d = tame_decompose(TameHom{c.t, c.s, c.q}, a, c.model, table, basis);
    if (!d.recomposes) return {false, "u * Theta_*^t(f_s) != r(a) modulo G"};
    if (!d.u_certificate.overall) return {false, "u is not integral"};
    if (!d.u_unramified) return {false, "u is moved by sigma"};
    for (const auto& [name, elt] : d.hom) {
      if (name == "sigma" && elt != c.s) return {false, "h(sigma) = " + c.g->format(elt)};
      if (name == "phi" && elt != c.t) return {false, "h(phi) = " + c.g->format(elt)};
    }
    return {true, ""};
  })};
}

// Product transport cross-checked against the character-space product.
template <class R>
bool double_product_agrees(const GMap<R>& a1, const GMap<R>& a2, const CharacterTable& t) {
  auto conv = resolvend_product_transport(a1, a2, t);
  auto pointwise = pointwise_product(to_character_space(to_resolvend(a1), t), to_character_space(to_resolvend(a2), t));
  return from_resolvend(from_character_space(pointwise, t)) == conv;
}

std::vector<SuiteEntry> criterion_6(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (long e : opts.tame_degrees) {
    long q = tame_residue_size(e);
    out.push_back(run_check(6, "c06.transport.e" + std::to_string(e), "certificate-closure-under-transport",
                            {{"e", e}, {"q", q}}, [e, q]() -> Outcome {
                              auto g = make_group({e});
                              CharacterTable chars(g);
                              TameModel model(e, q, e);
                              long vA = sqrt_inverse_different_valuation(RamFiltration({e, 1}));
                              auto a = tame_generator(g, e, q, {1}, model);
                              auto inv = resolvend_inverse_transport(a, chars);
                              if (!generator_certificate(inv, vA, q, chars).overall) return {false, "inverse transport"};
                              auto one = PuiseuxElement::pi_power(model, 0);
                              if (!(multiply(to_resolvend(a), to_resolvend(inv)) == group_element(g, g->identity(), one)))
                                return {false, "r(a) r(a^-1) != 1"};
                              for (const auto& t : g->elements()) {
                                auto delta = GMap<PuiseuxElement>::delta(g, t, one);
                                auto prod = resolvend_product_transport(a, delta, chars);
                                if (!generator_certificate(prod, vA, q, chars).overall)
                                  return {false, "twist by " + g->format(t)};
                                if (!double_product_agrees(a, delta, chars)) return {false, "convolution mismatch at " + g->format(t)};
                              }
                              return {true, ""};
                            }));
  }
  CompositeCase c;
  out.push_back(run_check(6, "c06.transport.composite", "certificate-closure-under-transport",
                          {{"group", "3,3"}, {"q", 7}, {"r", 19}}, [&]() -> Outcome {
                            CharacterTable chars(c.g);
                            auto a1 = unramified_generator_search(c.g, c.q, c.t, c.r, c.model);
                            auto a2 = tame_generator(c.g, 3, c.q, c.s, c.model);
                            if (!generator_certificate(a1, 0, c.q, chars).overall) return {false, "unramified generator"};
                            auto a = resolvend_product_transport(a1, a2, chars);
                            if (!generator_certificate(a, -1, c.q, chars).overall) return {false, "product"};
                            if (!double_product_agrees(a1, a2, chars)) return {false, "convolution mismatch"};
                            auto inv = resolvend_inverse_transport(a, chars);
                            if (!generator_certificate(inv, -1, c.q, chars).overall) return {false, "inverse of product"};
                            return {true, ""};
                          }));
  return out;
}

std::vector<SuiteEntry> criterion_7(const SuiteOptions&) {
  std::vector<SuiteEntry> out;
  out.push_back(run_check(7, "c07.different.tame", "different-valuation", {{"e", "3..27 odd"}}, []() -> Outcome {
    for (long e = 3; e <= 27; e += 2) {
      RamFiltration f({e, 1});
      if (different_valuation(f) != e - 1) return {false, "e = " + std::to_string(e)};
      if (!is_weakly_ramified(f)) return {false, "tame e = " + std::to_string(e) + " not weakly ramified"};
    }
    return {true, ""};
  }));
  out.push_back(run_check(7, "c07.different.wild", "different-valuation", {{"p", {3, 5, 7}}}, []() -> Outcome {
    for (long p : {3L, 5L, 7L}) {
      RamFiltration f({p, p, 1});
      if (different_valuation(f) != 2 * (p - 1)) return {false, "v_D at p = " + std::to_string(p)};
      if (sqrt_inverse_different_valuation(f) != -(p - 1)) return {false, "v_A at p = " + std::to_string(p)};
      if (!is_weakly_ramified(f)) return {false, "[p,p] not weakly ramified at p = " + std::to_string(p)};
      if (is_weakly_ramified(RamFiltration({p, p, p, 1}))) return {false, "[p,p,p] weakly ramified at p = " + std::to_string(p)};
    }
    return {true, ""};
  }));
  return out;
}

}  // namespace

std::vector<SuiteEntry> wild_checks(long p) {
  std::vector<SuiteEntry> out;
  {
    std::string base = "c08.wild.p" + std::to_string(p) + ".";
    Json params{{"p", p}};
    out.push_back(run_check(8, base + "alpha-invariance", "alpha-fixed-by-omega", params,
                            [p]() -> Outcome { return {alpha_invariance_check(p), ""}; }));
    out.push_back(run_check(8, base + "galois-relations", "omega-tau-relations", params,
                            [p]() -> Outcome { return {wild_galois_group_check(p), ""}; }));
    out.push_back(run_check(8, base + "tau-eigenvalues", "tau-eigenvalues", params,
                            [p]() -> Outcome { return {tau_eigenvalue_check(p), ""}; }));
    out.push_back(run_check(8, base + "resolvent-identity", "wild-resolvent-identity", params, [p]() -> Outcome {
      if (!character_sum_check(p)) return {false, "character sums"};
      auto rep = wild_resolvent_identity(FiniteAbelianGroup({p}), {1});
      return {rep.overall, rep.witnesses.empty() ? "" : rep.witnesses.front()};
    }));
    out.push_back(run_check(8, base + "weights", "weight-bounds", params, [p]() -> Outcome {
      auto rep = weight_bounds_check(p);
      return {rep.ok, rep.witnesses.empty() ? "" : rep.witnesses.front()};
    }));
    out.push_back(run_check(8, base + "alpha-valuation", "alpha-valuation-bound", params, [p]() -> Outcome {
      auto b = alpha_valuation_bound(p);
      return {b.ok, "weight " + to_fraction_string(b.weight) + ", v_L(alpha) >= " + std::to_string(b.v_L_lower)};
    }));
    out.push_back(run_check(8, base + "unit-resolvents", "unit-resolvents", params, [p]() -> Outcome {
      auto rep = wild_unit_resolvents(FiniteAbelianGroup({p}), {1});
      return {rep.overall, rep.witnesses.empty() ? "" : rep.witnesses.front()};
    }));
  }
  return out;
}

namespace {

std::vector<SuiteEntry> criterion_8(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (long p : opts.primes) {
    auto part = wild_checks(p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<SuiteEntry> criterion_9(const SuiteOptions& opts) {
  long p = opts.primes.empty() ? 3 : *std::min_element(opts.primes.begin(), opts.primes.end());
  return {run_check(9, "c09.elementary-product.p" + std::to_string(p) + ".r2", "elementary-product-unit-resolvents",
                    {{"p", p}, {"r", 2}}, [p]() -> Outcome {
                      auto rep = elementary_product_check(p, 2);
                      if (rep.asserts_generator) return {false, "product claims to generate"};
                      if (rep.resolvent_count != static_cast<std::size_t>(p * p)) return {false, "resolvent count"};
                      return {rep.unit_resolvents, rep.witnesses.empty() ? "" : rep.witnesses.front()};
                    })};
}

Rational small_rational(std::mt19937_64& rng) {
  Rational r(uniform(rng, -5, 5), uniform(rng, 1, 4));
  r.canonicalize();
  return r;
}

CycNumber random_cyc(std::mt19937_64& rng, long N) {
  std::vector<Rational> c;
  for (long i = 0; i < CyclotomicField::get(N)->degree(); ++i) c.push_back(uniform(rng, 0, 2) ? small_rational(rng) : Rational(0));
  return CycNumber::from_coeffs(N, c);
}

std::vector<SuiteEntry> criterion_10(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  out.push_back(run_check(10, "c10.trace-pairing.cyclotomic", "resolvend-trace-pairing", {{"pairs", 1000}}, [&]() -> Outcome {
    std::mt19937_64 rng(stream_seed(opts.seed, "trace/cyclotomic"));
    std::vector<GroupPtr> groups{make_group({3}), make_group({5}), make_group({9}), make_group({3, 3})};
    for (int pair = 0; pair < 1000; ++pair) {
      const auto& g = groups[static_cast<std::size_t>(pair) % groups.size()];
      long N = g->exponent();
      GMap<CycNumber> a(g, CycNumber(N, 0)), b(g, CycNumber(N, 0));
      for (auto& v : a.values) v = random_cyc(rng, N);
      for (auto& v : b.values) v = random_cyc(rng, N);
      if (!trace_pairing_identity_check(a, b)) return {false, "pair " + std::to_string(pair) + " on C" + g->spec()};
    }
    return {true, ""};
  }));
  out.push_back(run_check(10, "c10.trace-pairing.puiseux", "resolvend-trace-pairing", {{"pairs", 1000}}, [&]() -> Outcome {
    std::mt19937_64 rng(stream_seed(opts.seed, "trace/puiseux"));
    std::vector<GroupPtr> groups{make_group({3}), make_group({3, 3})};
    TameModel model(3, 7, 3);
    for (int pair = 0; pair < 1000; ++pair) {
      const auto& g = groups[static_cast<std::size_t>(pair) % groups.size()];
      auto draw = [&]() {
        PuiseuxElement x(model);
        long terms = uniform(rng, 0, 3);
        for (long i = 0; i < terms; ++i) x += PuiseuxElement(model, random_cyc(rng, 3), uniform(rng, -4, 4));
        return x;
      };
      GMap<PuiseuxElement> a(g, PuiseuxElement(model)), b(g, PuiseuxElement(model));
      for (auto& v : a.values) v = draw();
      for (auto& v : b.values) v = draw();
      if (!trace_pairing_identity_check(a, b)) return {false, "pair " + std::to_string(pair) + " on C" + g->spec()};
    }
    return {true, ""};
  }));
  return out;
}

std::vector<SuiteEntry> criterion_11(const SuiteOptions& opts) {
  std::vector<SuiteEntry> out;
  for (Mutation m : all_mutations()) {
    auto name = mutation_name(m);
    out.push_back(run_check(11, "c11.mutation." + name, "mutation-sensitivity", {{"mutation", name}}, [&]() -> Outcome {
      // The omega defect is invisible at p = 3, where c(i) = c(i^{-1}) for every unit.
      SuiteOptions sweep = opts;
      if (std::none_of(sweep.primes.begin(), sweep.primes.end(), [](long p) { return p >= 5; })) sweep.primes.push_back(5);
      ScopedMutation guard(m);
      std::vector<std::string> caught;
      // Cheapest criteria first; stop at the first one that notices.
      for (int k : {7, 4, 8, 9, 5, 6, 2, 10, 3, 1}) {
        for (const auto& e : run_criterion(k, sweep))
          if (!e.passed) caught.push_back(e.check_id);
        if (!caught.empty()) break;
      }
      if (caught.empty()) return {false, "no check detected the mutation"};
      std::string w = "detected by " + caught.front();
      if (caught.size() > 1) w += " and " + std::to_string(caught.size() - 1) + " more";
      return {true, w};
    }));
  }
  return out;
}

void collect_chains(long remaining, long last, std::vector<long>& chain, std::vector<std::vector<long>>& out) {
  if (remaining == 1) {
    if (!chain.empty()) out.push_back(chain);
    return;
  }
  for (long d = last; d <= remaining; d += last) {
    if (remaining % d != 0 || d < 2) continue;
    // the rest must be divisible by d so the chain can continue with multiples of d
    long rest = remaining / d;
    if (rest != 1 && rest % d != 0) continue;
    chain.push_back(d);
    collect_chains(rest, d, chain, out);
    chain.pop_back();
  }
}

}  // namespace

long tame_residue_size(long e) {
  switch (e) {
    case 3: return 7;
    case 5: return 11;
    case 7: return 29;
    case 9: return 19;
  }
  throw Error(ErrorCode::Precondition, "no residue field paired with e = " + std::to_string(e));
}

void validate_suite_options(const SuiteOptions& opts) {
  if (opts.max_order < 3 || opts.max_order > 27)
    throw Error(ErrorCode::Precondition, "max order must lie in [3, 27]");
  if (opts.primes.empty() || opts.tame_degrees.empty()) throw Error(ErrorCode::Precondition, "empty parameter list");
  for (long p : opts.primes)
    if (p != 3 && p != 5 && p != 7) throw Error(ErrorCode::Precondition, "wild prime must be 3, 5 or 7");
  for (long e : opts.tame_degrees) tame_residue_size(e);
}

std::vector<std::vector<long>> odd_groups_up_to(long max_order) {
  std::vector<std::vector<long>> out;
  for (long n = 3; n <= max_order; n += 2) {
    std::vector<long> chain;
    collect_chains(n, 1, chain, out);
  }
  return out;
}

std::vector<SuiteEntry> run_criterion(int criterion, const SuiteOptions& opts) {
  validate_suite_options(opts);
  switch (criterion) {
    case 1: return criterion_1(opts);
    case 2: return criterion_2(opts);
    case 3: return criterion_3(opts);
    case 4: return criterion_4(opts);
    case 5: return criterion_5(opts);
    case 6: return criterion_6(opts);
    case 7: return criterion_7(opts);
    case 8: return criterion_8(opts);
    case 9: return criterion_9(opts);
    case 10: return criterion_10(opts);
    case 11: return criterion_11(opts);
  }
  throw Error(ErrorCode::Precondition, "unknown criterion " + std::to_string(criterion));
}

std::vector<SuiteEntry> run_suite(const SuiteOptions& opts) {
  std::vector<SuiteEntry> all;
  for (int k = 1; k <= kCriterionCount; ++k) {
    auto part = run_criterion(k, opts);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), [](const SuiteEntry& a, const SuiteEntry& b) { return a.check_id < b.check_id; });
  return all;
}

bool all_passed(const std::vector<SuiteEntry>& entries) {
  return std::all_of(entries.begin(), entries.end(), [](const SuiteEntry& e) { return e.passed; });
}

Json suite_report_json(const std::vector<SuiteEntry>& entries, bool timings) {
  Json list = Json::array();
  long failed = 0;
  for (const auto& e : entries) {
    Json j{{"check_id", e.check_id}, {"anchor", e.anchor}, {"params", e.params}, {"status", e.passed ? "pass" : "fail"}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (timings) j["wall_ms"] = static_cast<long>(e.wall_ms + 0.5);
    if (!e.passed) ++failed;
    list.push_back(std::move(j));
  }
  return {{"entries", list},
          {"summary", {{"total", entries.size()}, {"passed", static_cast<long>(entries.size()) - failed}, {"failed", failed}}}};
}

}  // namespace galmod
