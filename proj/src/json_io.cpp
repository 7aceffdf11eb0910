#include "galmod/json_io.hpp"

#include <sstream>

#include "galmod/stickelberger.hpp"

namespace galmod {

Json to_json(const CycNumber& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_fraction_string(c));
  return {{"N", x.conductor()}, {"coeffs", coeffs}};
}

CycNumber cyc_from_json(const Json& j) {
  try {
    long N = j.at("N").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(parse_fraction(c.get<std::string>()));
    return CycNumber::from_coeffs(N, coeffs);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad cyclotomic number: ") + e.what());
  }
}

Json to_json(const PuiseuxElement& x) {
  Json out = Json::array();
  for (const auto& [k, c] : x.terms()) {
    Rational q(k, x.model().e);
    q.canonicalize();
    out.push_back({{"exponent", to_fraction_string(q)}, {"coeff", to_json(c)}});
  }
  return out;
}

PuiseuxElement puiseux_from_json(const Json& j, const TameModel& model) {
  PuiseuxElement out(model);
  try {
    for (const auto& term : j) {
      Rational q = parse_fraction(term.at("exponent").get<std::string>()) * model.e;
      if (q.get_den() != 1) throw Error(ErrorCode::Parse, "exponent outside (1/e)Z");
      out += PuiseuxElement(model, cyc_from_json(term.at("coeff")), q.get_num().get_si());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("bad Puiseux element: ") + e.what());
  }
  return out;
}

Json to_json(const WildElement& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({{"exponents", e}, {"coeff", to_json(c)}});
  return out;
}

Json to_json(const CertificateReport& r) {
  return {{"membership", r.membership ? "pass" : "fail"},
          {"unit", r.unit ? "pass" : "fail"},
          {"overall", r.overall ? "pass" : "fail"},
          {"witnesses", r.witnesses}};
}

Json pairing_table_json(const FiniteAbelianGroup& g) {
  auto gp = std::make_shared<const FiniteAbelianGroup>(g);
  StickelbergerTable t(gp);
  Json cols = Json::array(), rows = Json::array();
  for (std::size_t s = 0; s < t.size(); ++s) cols.push_back(g.format(g.element_at(s)));
  for (std::size_t c = 0; c < t.size(); ++c) {
    Json row = Json::array();
    for (std::size_t s = 0; s < t.size(); ++s) row.push_back(to_fraction_string(t.pairing(c, s)));
    rows.push_back({{"character", g.format(g.element_at(c))}, {"values", row}});
  }
  return {{"group", g.spec()}, {"elements", cols}, {"rows", rows}};
}

std::string pairing_table_csv(const FiniteAbelianGroup& g) {
  auto gp = std::make_shared<const FiniteAbelianGroup>(g);
  StickelbergerTable t(gp);
  std::ostringstream out;
  out << "character";
  for (std::size_t s = 0; s < t.size(); ++s) out << ",\"" << g.format(g.element_at(s)) << "\"";
  out << "\n";
  for (std::size_t c = 0; c < t.size(); ++c) {
    out << "\"" << g.format(g.element_at(c)) << "\"";
    for (std::size_t s = 0; s < t.size(); ++s) out << "," << to_fraction_string(t.pairing(c, s));
    out << "\n";
  }
  return out.str();
}

}  // namespace galmod
