#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "galmod/certificate.hpp"
#include "galmod/local_field.hpp"
#include "galmod/resolvend.hpp"
#include "galmod/stickelberger.hpp"
#include "galmod/transpose.hpp"

namespace galmod {

/// Tame local homomorphism: phi -> t_phi, sigma -> s_sigma, residue field of size q.
struct TameHom {
  GroupElement t_phi;
  GroupElement s_sigma;
  long q = 0;
};

void validate_tame_hom(const FiniteAbelianGroup& g, const TameHom& h);

/// (h^nr, h^tot) = ((t, 1), (1, s)).
std::pair<TameHom, TameHom> factorize(const FiniteAbelianGroup& g, const TameHom& h);

/// 0 for unramified homomorphisms, 1 otherwise.
int factorization_level(const FiniteAbelianGroup& g, const TameHom& h);

/// alpha = (1/e) sum_{k<e} Pi^{k+(1-e)/2} with Pi = pi^{1/e}.
PuiseuxElement tame_alpha(const TameModel& model);

/// a(s^i) = sigma^i(alpha) on <s>, zero elsewhere. Requires e = |s|, e | q-1.
GMap<PuiseuxElement> tame_generator(std::shared_ptr<const FiniteAbelianGroup> g, long e, long q, const GroupElement& s,
                                    const TameModel& model);

/// f_s(t) = pi if t = s != 1, else 1.
GMap<PuiseuxElement> prime_element(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s,
                                   const TameModel& model);

/// Roots rho with rho(s) = pi^{1/|s|} and rho = 1 elsewhere.
GMap<PuiseuxElement> prime_element_roots(std::shared_ptr<const FiniteAbelianGroup> g, const GroupElement& s,
                                         const TameModel& model);

/// resolvent(a, chi) == pi^{<chi,s>_*} for all chi.
bool tame_resolvent_check(const StickelbergerTable& table, const GMap<PuiseuxElement>& a, const GroupElement& s,
                          const TameModel& model, std::vector<std::string>* witnesses = nullptr);

/// sum_i sigma^i(alpha) zeta_e^{-(l+(1-e)/2)i} == Pi^{l+(1-e)/2} for all l in [0, e).
bool inversion_identity_check(const TameModel& model);

/// det of M with sigma^i(alpha) = sum_k M_ik Pi^{k+(1-e)/2}.
CycNumber basis_change_determinant(const TameModel& model);

/// Both x and x^{-1} p-integral.
bool is_p_unit(const CycNumber& x, long p);

/// Norm of an integral x reduced mod p (p must not divide the denominator).
long norm_mod_p(const CycNumber& x, long p);

long multiplicative_order(long q, long r);

/// Normal integral basis generator for the unramified extension cut out by
/// zeta_r -> zeta_r^q, supported on <t>.
GMap<PuiseuxElement> unramified_generator_search(std::shared_ptr<const FiniteAbelianGroup> g, long q,
                                                 const GroupElement& t, long r, const TameModel& model);

struct TameDecomposition {
  Resolvend<PuiseuxElement> u;
  GMap<PuiseuxElement> f;
  GroupElement s;
  CertificateReport u_certificate;  // coefficients of u and u^{-1} integral
  bool u_unramified = false;        // sigma fixes u
  bool recomposes = false;          // reduced_equal(r(a), u * lift(f))
  std::vector<std::pair<std::string, GroupElement>> hom;
};

/// r(a) = u Theta_*^t(f_s) modulo G, with s = h(sigma).
TameDecomposition tame_decompose(const TameHom& h, const GMap<PuiseuxElement>& a, const TameModel& model,
                                       const StickelbergerTable& table, const std::vector<CharCombo>& basis);

}  // namespace galmod
