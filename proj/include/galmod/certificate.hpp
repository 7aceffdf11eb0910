#pragma once

#include <string>
#include <vector>

#include "galmod/local_field.hpp"
#include "galmod/resolvend.hpp"

namespace galmod {

/// Generator test for A_h = O_F G . a: coefficients of a lie in A_h, and
/// r(a) r(a)^{[-1]} is a unit of O_F G.
struct CertificateReport {
  bool membership = false;
  bool unit = false;
  bool overall = false;
  std::vector<std::string> witnesses;
};

/// Coefficients have v_L >= 0.
bool integral_coefficients(const Resolvend<PuiseuxElement>& r, std::vector<std::string>* witnesses = nullptr,
                           const std::string& label = "");

/// Coefficients have v_L >= 0 and lie in F (integral exponents, fixed by zeta -> zeta^q).
bool integral_over_base(const Resolvend<PuiseuxElement>& r, long q, std::vector<std::string>* witnesses = nullptr,
                        const std::string& label = "");

CertificateReport generator_certificate(const GMap<PuiseuxElement>& a, long vA, long q, const CharacterTable& t);

/// sigma (kappa 1) and phi (kappa q) acting on the tame model.
std::vector<Automorphism<PuiseuxElement>> tame_automorphisms(long q);

}  // namespace galmod
