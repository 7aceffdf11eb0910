#pragma once

#include <string>

#include <json.hpp>

#include "galmod/certificate.hpp"
#include "galmod/local_field.hpp"
#include "galmod/resolvend.hpp"
#include "galmod/wild.hpp"

namespace galmod {

using Json = nlohmann::ordered_json;

/// {"N": N, "coeffs": ["num/den", ...]} over the power basis.
Json to_json(const CycNumber& x);
CycNumber cyc_from_json(const Json& j);

/// [{"exponent": "k/e", "coeff": CycNumber}, ...] in increasing exponent.
Json to_json(const PuiseuxElement& x);
PuiseuxElement puiseux_from_json(const Json& j, const TameModel& model);

/// [{"exponents": [...], "coeff": CycNumber}, ...].
Json to_json(const WildElement& x);

Json to_json(const CertificateReport& r);

template <class R>
Json to_json(const GMap<R>& a) {
  Json out = Json::array();
  for (std::size_t i = 0; i < a.values.size(); ++i)
    out.push_back({{"element", a.group->format(a.group->element_at(i))}, {"value", to_json(a.values[i])}});
  return out;
}

template <class R>
Json to_json(const Resolvend<R>& r) {
  Json out = Json::array();
  for (std::size_t i = 0; i < r.coeffs.size(); ++i)
    out.push_back({{"element", r.group->format(r.group->element_at(i))}, {"coeff", to_json(r.coeffs[i])}});
  return out;
}

template <class R>
Json to_json(const CharacterVector<R>& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.values.size(); ++i)
    out.push_back({{"character", v.group->format(v.group->element_at(i))}, {"value", to_json(v.values[i])}});
  return out;
}

/// Exact pairing table <chi, s>_*: rows are characters, columns group elements.
Json pairing_table_json(const FiniteAbelianGroup& g);
std::string pairing_table_csv(const FiniteAbelianGroup& g);

}  // namespace galmod
