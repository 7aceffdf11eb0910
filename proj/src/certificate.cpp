#include "galmod/certificate.hpp"

namespace galmod {

bool integral_coefficients(const Resolvend<PuiseuxElement>& r, std::vector<std::string>* witnesses,
                           const std::string& label) {
  bool ok = true;
  const auto& g = *r.group;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    if (valuation(r.coeffs[i]) >= 0) continue;
    ok = false;
    if (witnesses)
      witnesses->push_back(label + " coefficient at " + g.format(g.element_at(i)) + " = " + r.coeffs[i].to_string() +
                           " has negative valuation");
  }
  return ok;
}

bool integral_over_base(const Resolvend<PuiseuxElement>& r, long q, std::vector<std::string>* witnesses,
                        const std::string& label) {
  bool ok = true;
  const auto& g = *r.group;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
    const auto& c = r.coeffs[i];
    bool integral = valuation(c) >= 0;
    bool base = lies_in_base(c, q);
    if (integral && base) continue;
    ok = false;
    if (witnesses)
      witnesses->push_back(label + " coefficient at " + g.format(g.element_at(i)) + " = " + c.to_string() +
                           (integral ? " not in F" : " has negative valuation"));
  }
  return ok;
}

CertificateReport generator_certificate(const GMap<PuiseuxElement>& a, long vA, long q, const CharacterTable& t) {
  CertificateReport rep;
  const auto& g = *a.group;
  auto r = to_resolvend(a);
  auto values = to_character_space(r, t);
  for (std::size_t c = 0; c < values.values.size(); ++c)
    if (values.values[c].is_zero())
      throw Error(ErrorCode::SingularResolvend, "resolvent vanishes at character " + g.format(t.character(c)));

  rep.membership = true;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    if (valuation(a.values[i]) >= vA) continue;
    rep.membership = false;
    rep.witnesses.push_back("a" + g.format(g.element_at(i)) + " has valuation " + std::to_string(valuation(a.values[i])) +
                            " < " + std::to_string(vA));
  }

  auto u = multiply(r, involution(r));
  bool u_ok = integral_over_base(u, q, &rep.witnesses, "u");
  auto u_inv = inverse(u, t);
  bool inv_ok = integral_over_base(u_inv, q, &rep.witnesses, "u^-1");
  rep.unit = u_ok && inv_ok;
  rep.overall = rep.membership && rep.unit;
  return rep;
}

std::vector<Automorphism<PuiseuxElement>> tame_automorphisms(long q) {
  return {
      {"sigma", 1, [](const PuiseuxElement& x) { return galois_sigma(x); }},
      {"phi", q, [q](const PuiseuxElement& x) { return galois_phi(x, q); }},
  };
}

}  // namespace galmod
