#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "galmod/json_io.hpp"
#include "galmod/mutation.hpp"
#include "galmod/suite.hpp"
#include "galmod/tame.hpp"
#include "galmod/wild.hpp"

using namespace galmod;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using GroupPtr = std::shared_ptr<const FiniteAbelianGroup>;

int emit(const std::string& command, const Json& params, const Json& result, bool passed) {
  Json env{{"command", command}, {"params", params}, {"result", result}, {"status", passed ? "pass" : "fail"}};
  std::cout << env.dump(2) << "\n";
  return passed ? kExitPass : kExitFail;
}

int emit_error(const std::string& command, const Json& params, const Error& e) {
  Json env{{"command", command},
           {"params", params},
           {"result", {{"error", error_code_name(e.code())}, {"message", e.what()}}},
           {"status", "error"}};
  std::cout << env.dump(2) << "\n";
  return kExitUsage;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stol(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "bad integer '" + item + "' in list '" + text + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::Parse, "empty list");
  return out;
}

GroupPtr parse_group(const std::string& spec) { return std::make_shared<const FiniteAbelianGroup>(FiniteAbelianGroup::parse(spec)); }

Json combo_json(const CharacterTable& t, const CharCombo& psi) {
  Json out = Json::object();
  for (std::size_t c = 0; c < psi.size(); ++c)
    if (psi[c] != 0) out[t.group().format(t.character(c))] = psi[c];
  return out;
}

long residue_characteristic(long q) {
  for (long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    long r = q;
    while (r % p == 0) r /= p;
    if (r != 1) throw Error(ErrorCode::Precondition, "q = " + std::to_string(q) + " is not a prime power");
    return p;
  }
  if (q < 2) throw Error(ErrorCode::Precondition, "q must be a prime power");
  return q;
}

int cmd_pairing(const std::string& spec, const std::string& format) {
  Json params{{"group", spec}, {"format", format}};
  try {
    auto g = FiniteAbelianGroup::parse(spec);
    if (format == "csv") {
      std::cout << pairing_table_csv(g);
      return kExitPass;
    }
    return emit("pairing", params, pairing_table_json(g), true);
  } catch (const Error& e) {
    return emit_error("pairing", params, e);
  }
}

int cmd_kernel_basis(const std::string& spec) {
  Json params{{"group", spec}};
  try {
    auto g = parse_group(spec);
    StickelbergerTable table(g);
    auto basis = ahat_kernel_basis(*g);
    Json vectors = Json::array();
    bool ok = true;
    for (const auto& psi : basis) {
      bool integral = table.integrality_check(psi), trivial = table.det_trivial(psi);
      ok = ok && integral && trivial;
      vectors.push_back({{"combo", combo_json(table.characters(), psi)}, {"dense", psi}, {"integral", integral}});
    }
    Integer index = lattice_index(basis);
    ok = ok && index == g->order();
    Json result{{"rank", basis.size()}, {"index", index.get_str()}, {"basis", vectors}};
    return emit("kernel-basis", params, result, ok);
  } catch (const Error& e) {
    return emit_error("kernel-basis", params, e);
  }
}

int cmd_theta(const std::string& spec, const std::string& psi_text) {
  Json params{{"group", spec}, {"psi", psi_text}};
  try {
    auto g = parse_group(spec);
    StickelbergerTable table(g);
    auto coeffs = parse_list(psi_text);
    if (coeffs.size() != table.size())
      throw Error(ErrorCode::Parse, "psi needs " + std::to_string(table.size()) + " coefficients, one per character");
    CharCombo psi(coeffs.begin(), coeffs.end());
    Json theta = Json::object();
    auto values = table.theta_star(psi);
    for (std::size_t s = 0; s < values.size(); ++s)
      if (values[s] != 0) theta[g->format(g->element_at(s))] = to_fraction_string(values[s]);
    bool integral = table.integrality_check(psi), trivial = table.det_trivial(psi);
    Json result{{"theta_star", theta},
                {"integral", integral},
                {"det", g->format(table.det_map(psi))},
                {"det_trivial", trivial}};
    return emit("theta", params, result, integral == trivial);
  } catch (const Error& e) {
    return emit_error("theta", params, e);
  }
}

int cmd_different(const std::string& spec) {
  Json params{{"filtration", spec}};
  try {
    auto f = RamFiltration::parse(spec);
    Json result{{"v_D", different_valuation(f)},
                {"v_A", sqrt_inverse_different_valuation(f)},
                {"weakly_ramified", is_weakly_ramified(f)},
                {"abelian_jumps_consistent", validate_abelian_filtration(f)}};
    return emit("different", params, result, true);
  } catch (const Error& e) {
    return emit_error("different", params, e);
  }
}

int cmd_tame_gen(const std::string& spec, long e, long q, const std::string& s_text) {
  Json params{{"group", spec}, {"e", e}, {"q", q}, {"s", s_text}};
  try {
    auto g = parse_group(spec);
    auto s = g->parse_element(s_text);
    long p = residue_characteristic(q);
    TameModel model(e, p, g->exponent());
    StickelbergerTable table(g);
    auto a = tame_generator(g, e, q, s, model);
    long vA = sqrt_inverse_different_valuation(RamFiltration({e, 1}));
    std::vector<std::string> witnesses;
    bool resolvents_ok = tame_resolvent_check(table, a, s, model, &witnesses);
    auto cert = generator_certificate(a, vA, q, table.characters());
    Json resolvents = Json::array();
    for (std::size_t c = 0; c < table.size(); ++c) {
      auto chi = table.characters().character(c);
      resolvents.push_back({{"character", g->format(chi)}, {"value", to_json(resolvent(a, chi))}});
    }
    Json result{{"model", {{"e", e}, {"p", p}, {"N", model.N}}},
                {"v_A", vA},
                {"generator", to_json(a)},
                {"resolvents", resolvents},
                {"resolvents_match_pairing", resolvents_ok},
                {"certificate", to_json(cert)}};
    if (!witnesses.empty()) result["witnesses"] = witnesses;
    return emit("tame-gen", params, result, resolvents_ok && cert.overall);
  } catch (const Error& err) {
    return emit_error("tame-gen", params, err);
  }
}

Json entries_json(const std::vector<SuiteEntry>& entries, bool timings) { return suite_report_json(entries, timings); }

int cmd_wild_verify(long p, int r, bool timings) {
  Json params{{"p", p}, {"r", r}};
  try {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::Precondition, "p must be an odd prime");
    if (r < 0 || r > 3) throw Error(ErrorCode::Precondition, "r must lie in [0, 3]");
    auto entries = wild_checks(p);
    if (r > 0) {
      auto rep = elementary_product_check(p, r);
      SuiteEntry e{9, "elementary-product.r" + std::to_string(r), "elementary-product-unit-resolvents", params,
                   rep.unit_resolvents && !rep.asserts_generator, rep.witnesses.empty() ? "" : rep.witnesses.front(), 0};
      entries.push_back(e);
    }
    return emit("wild-verify", params, entries_json(entries, timings), all_passed(entries));
  } catch (const Error& e) {
    return emit_error("wild-verify", params, e);
  }
}

int cmd_suite(const SuiteOptions& opts, const std::string& mutate, bool timings, const Json& params) {
  try {
    validate_suite_options(opts);
    auto m = parse_mutation(mutate);
    if (!m) throw Error(ErrorCode::Parse, "unknown mutation '" + mutate + "'");
    std::optional<ScopedMutation> guard;
    if (*m != Mutation::None) guard.emplace(*m);
    auto entries = run_suite(opts);
    return emit("suite", params, suite_report_json(entries, timings), all_passed(entries));
  } catch (const Error& e) {
    return emit_error("suite", params, e);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of resolvends, Stickelberger maps and local normal integral basis generators"};
  app.require_subcommand(1);
  int code = kExitPass;

  std::string group_spec, format = "json";
  auto* pairing = app.add_subcommand("pairing", "Modified Stickelberger pairing table");
  pairing->add_option("--group", group_spec, "Group spec d1,d2,...")->required();
  pairing->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  pairing->callback([&]() { code = cmd_pairing(group_spec, format); });

  auto* kernel = app.add_subcommand("kernel-basis", "Basis of the kernel of det on Z[G^]");
  kernel->add_option("--group", group_spec, "Group spec d1,d2,...")->required();
  kernel->callback([&]() { code = cmd_kernel_basis(group_spec); });

  std::string psi;
  auto* theta = app.add_subcommand("theta", "Stickelberger image of a character combination");
  theta->add_option("--group", group_spec, "Group spec d1,d2,...")->required();
  theta->add_option("--psi", psi, "Coefficients per character, in character order")->required();
  theta->callback([&]() { code = cmd_theta(group_spec, psi); });

  std::string filtration;
  auto* different = app.add_subcommand("different", "Different and inverse-different square root valuations");
  different->add_option("--filtration", filtration, "Ramification group orders a0,a1,...")->required();
  different->callback([&]() { code = cmd_different(filtration); });

  long e = 0, q = 0;
  std::string s_text;
  auto* tame = app.add_subcommand("tame-gen", "Tame generator with resolvents and certificate");
  tame->add_option("--group", group_spec, "Group spec d1,d2,...")->required();
  tame->add_option("--e", e, "Ramification index")->required();
  tame->add_option("--q", q, "Residue field size")->required();
  tame->add_option("--s", s_text, "Image of inertia, e.g. 1,0")->required();
  tame->callback([&]() { code = cmd_tame_gen(group_spec, e, q, s_text); });

  long p = 0;
  int r = 0;
  bool timings = false;
  auto* wild = app.add_subcommand("wild-verify", "Formal checks of the wild generator construction");
  wild->add_option("--p", p, "Odd prime")->required();
  wild->add_option("--r", r, "Also check the product over r independent copies (0 skips)");
  wild->add_flag("--timings", timings, "Include wall times");
  wild->callback([&]() { code = cmd_wild_verify(p, r, timings); });

  SuiteOptions opts;
  std::string p_list = "3,5,7", e_list = "3,5,7,9", mutate = "none";
  auto* suite = app.add_subcommand("suite", "Run every acceptance check");
  suite->add_option("--max-order", opts.max_order, "Largest group order swept (3..27)");
  suite->add_option("--p", p_list, "Wild primes, subset of 3,5,7");
  suite->add_option("--e", e_list, "Tame degrees, subset of 3,5,7,9");
  suite->add_option("--seed", opts.seed, "Seed for randomized sweeps");
  suite->add_option("--mutate", mutate, "Inject a defect: none, flip-upsilon-sign, drop-alpha-normalization, omega-uses-c-i");
  suite->add_flag("--timings", timings, "Include wall times");
  suite->callback([&]() {
    Json params{{"max_order", opts.max_order}, {"p", p_list}, {"e", e_list}, {"seed", opts.seed}, {"mutate", mutate}};
    try {
      opts.primes = parse_list(p_list);
      opts.tame_degrees = parse_list(e_list);
    } catch (const Error& err) {
      code = emit_error("suite", params, err);
      return;
    }
    code = cmd_suite(opts, mutate, timings, params);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  return code;
}
