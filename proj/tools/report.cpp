#include "report.hpp"

#include <cmath>
#include <sstream>

#include "crnt/crnt.hpp"

namespace crnt::report {

namespace {

struct UsageError : Error {
  using Error::Error;
};

// Carries whatever part of the report was built before the search came up empty.
struct NoTranslation : std::runtime_error {
  Json partial;
  NoTranslation(const std::string& what, Json p) : std::runtime_error(what), partial(std::move(p)) {}
};

Json rat(const Rational& q) { return to_string(q); }

Json ratvec(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(rat(q));
  return a;
}

Json basis(const SubspaceBasis& b) {
  Json a = Json::array();
  for (const auto& v : b.vectors()) a.push_back(ratvec(v));
  return a;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json a = Json::array();
  for (auto i : v) a.push_back(i + 1);
  return a;
}

Json species_values(const Network& net, std::span<const double> x) {
  Json o = Json::object();
  for (std::size_t s = 0; s < net.species_count(); ++s) o[net.species()[s].name] = x[s];
  return o;
}

std::string bracket(const Network& net, std::size_t complex) { return "[" + net.format(net.complex(complex)) + "]"; }

Json network_section(const GeneralizedNetwork& g) {
  const Network& net = g.base();
  LinkagePartition part = linkage_classes(net);
  DeficiencyReport d = g.is_mass_action() ? deficiency(net) : deficiency(g);
  bool rev = is_reversible(net);
  bool weak = is_weakly_reversible(net);

  Json j;
  j["name"] = net.name();
  j["species"] = net.species_names();
  j["m"] = net.species_count();
  j["n"] = d.complexes;
  j["r"] = net.reaction_count();
  j["linkage_classes"] = d.linkage_classes;
  j["strong_linkage_classes"] = part.strong_classes.size();
  j["s"] = d.rank;
  j["deficiency"] = d.deficiency;
  if (!g.is_mass_action()) {
    if (d.kinetic_deficiency) j["kinetic_deficiency"] = *d.kinetic_deficiency;
    else j["kinetic_deficiency"] = nullptr;
  }
  j["reversibility"] = rev ? "reversible" : weak ? "weakly reversible" : "not weakly reversible";
  Json cs = Json::array();
  for (std::size_t c = 0; c < net.complex_count(); ++c) {
    Json e;
    e["index"] = c + 1;
    e["complex"] = net.format(net.complex(c));
    if (!g.is_mass_action())
      e["kinetic"] = g.has_kinetic(c) ? Json(net.format(g.kinetic_complex(c))) : Json(nullptr);
    e["linkage_class"] = part.class_of[c] + 1;
    e["strong_class"] = part.strong_class_of[c] + 1;
    cs.push_back(std::move(e));
  }
  j["complexes"] = std::move(cs);
  Json rs = Json::array();
  for (std::size_t i = 0; i < net.reaction_count(); ++i) rs.push_back(net.format_reaction(i));
  j["reactions"] = std::move(rs);
  return j;
}

Json generators_section(const Network& net) {
  Json a = Json::array();
  for (const auto& e : extreme_currents(net)) {
    Json g;
    g["kind"] = to_string(e.kind);
    g["vector"] = ratvec(e.vector);
    Json sup = Json::array();
    for (auto i : e.support()) sup.push_back(net.reaction(i).rate);
    g["support"] = std::move(sup);
    a.push_back(std::move(g));
  }
  return a;
}

Json resolvability_section(const Translation& t, const ResolvabilityReport& r) {
  const Network& src = t.source;
  Json j;
  j["weakly_resolvable"] = r.weakly_resolvable;
  j["strongly_resolvable"] = r.strongly_resolvable;
  j["improper_kinetic_subspace"] = basis(r.improper_subspace);
  TranslationClassification c = classify(t);
  Json rel = Json::array();
  for (const auto& [i, coords] : r.coordinates) {
    std::string lhs = bracket(src, src.reaction(i).reactant) + " - " + bracket(src, c.kinetically_relevant[i]);
    std::string rhs;
    for (std::size_t k = 0; k < coords.size(); ++k) {
      if (coords[k] == 0) continue;
      auto [p, q] = r.pair_basis[k];
      std::string term = "(" + bracket(src, p) + " - " + bracket(src, q) + ")";
      Rational a = abs(coords[k]);
      if (a != 1) term = to_string(a) + " " + term;
      if (rhs.empty()) rhs = coords[k] < 0 ? "-" + term : term;
      else rhs += (coords[k] < 0 ? " - " : " + ") + term;
    }
    Json e;
    e["reaction"] = src.reaction(i).rate;
    e["relation"] = lhs + " = " + (rhs.empty() ? "0" : rhs);
    e["coordinates"] = ratvec(coords);
    rel.push_back(std::move(e));
  }
  j["relations"] = std::move(rel);
  Json fs = Json::array();
  for (const auto& [i, pp] : r.factor) {
    Json e;
    e["reaction"] = src.reaction(i).rate;
    if (auto it = r.fresh_symbol.find(i); it != r.fresh_symbol.end()) e["fresh_symbol"] = it->second;
    e["factor"] = pp.to_string();
    if (auto it = r.simplified_factor.find(i); it != r.simplified_factor.end())
      e["simplified"] = "(" + it->second.first.to_string() + ") / (" + it->second.second.to_string() + ")";
    fs.push_back(std::move(e));
  }
  j["factors"] = std::move(fs);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json candidate_section(const TranslationCandidate& cand) {
  const Translation& t = cand.translation;
  const Network& src = t.source;
  const Network& tn = t.translated.base();
  const auto& c = cand.classification;
  Json j;
  Json shifts = Json::array();
  for (std::size_t i = 0; i < src.reaction_count(); ++i) {
    Json e;
    e["reaction"] = src.reaction(i).rate;
    e["shift"] = src.format(t.shift[i], true);
    e["translated"] = tn.format_reaction(t.h1[i]);
    shifts.push_back(std::move(e));
  }
  j["shifts"] = std::move(shifts);
  Json cs = Json::array();
  for (std::size_t k = 0; k < tn.complex_count(); ++k) {
    Json e;
    e["index"] = k + 1;
    e["complex"] = tn.format(tn.complex(k));
    e["kinetic"] = t.kinetic_source[k] ? Json(src.format(src.complex(*t.kinetic_source[k]))) : Json(nullptr);
    cs.push_back(std::move(e));
  }
  j["translated_complexes"] = std::move(cs);
  j["proper"] = c.proper;
  j["strong"] = c.strong;
  j["improper_complexes"] = one_based(c.improper_complexes);
  Json ri = Json::array();
  for (auto i : c.improper_reactions) ri.push_back(src.reaction(i).rate);
  j["improper_reactions"] = std::move(ri);
  j["linkage_classes"] = cand.deficiency.linkage_classes;
  j["deficiency"] = cand.deficiency.deficiency;
  if (cand.deficiency.kinetic_deficiency) j["kinetic_deficiency"] = *cand.deficiency.kinetic_deficiency;
  else j["kinetic_deficiency"] = nullptr;
  j["bumps"] = cand.bumps;
  if (cand.resolvability) j["resolvability"] = resolvability_section(t, *cand.resolvability);
  j["translation_file"] = serialize_translation(t);
  return j;
}

bool usable(const TranslationCandidate& c) {
  if (!c.classification.strong) return false;
  if (c.deficiency.deficiency != 0) return false;
  if (!c.deficiency.kinetic_deficiency || *c.deficiency.kinetic_deficiency != 0) return false;
  return c.classification.proper || (c.resolvability && c.resolvability->strongly_resolvable);
}

Network mass_action_network(const Request& req) {
  GeneralizedNetwork g = parse_generalized_network(req.network_text);
  if (!g.is_mass_action()) throw ValidationError("this command needs a mass-action network (no kinetic lines)");
  return g.base();
}

RateMap read_rates(const Request& req, const Network& net) {
  RateMap rates = parse_assignments(*req.rates_text);
  for (const auto& [name, value] : rates) {
    if (!net.find_reaction(name)) throw ValidationError("rates file names unknown rate '" + name + "'");
    if (value <= 0) throw ValidationError("rate '" + name + "' must be positive");
  }
  rate_vector(net, rates);  // every symbol present
  return rates;
}

std::vector<double> read_state(const Request& req, const Network& net) {
  RatVec x = parse_state(*req.x0_text, net);
  for (std::size_t s = 0; s < x.size(); ++s)
    if (x[s] <= 0) throw ValidationError("initial concentration of " + net.species()[s].name + " must be positive");
  return to_double(x);
}

// Supplied translation, or the best usable search result.
TranslationCandidate obtain_translation(const Request& req, const Network& net, Json& out, bool require_usable) {
  if (req.translation_text) {
    TranslationCandidate c = assess_translation(parse_translation(*req.translation_text, net));
    out["source"] = "supplied";
    return c;
  }
  auto found = find_translations(net, req.search_options);
  out["source"] = "search";
  out["candidates_found"] = found.size();
  if (found.empty()) throw NoTranslation("no translation found within the search budget", {});
  if (!require_usable) return found.front();
  for (auto& c : found)
    if (usable(c)) return c;
  throw NoTranslation("no strong, resolvable translation with zero deficiency was found", {});
}

Json tree_constant_entries(const Network& net, const std::vector<Polynomial>& symbolic,
                           const std::optional<RatVec>& numeric) {
  LinkagePartition part = linkage_classes(net);
  Json a = Json::array();
  for (std::size_t i = 0; i < symbolic.size(); ++i) {
    Json e;
    e["index"] = i + 1;
    e["complex"] = net.format(net.complex(i));
    e["linkage_class"] = part.class_of[i] + 1;
    e["symbolic"] = symbolic[i].to_string();
    if (numeric) e["value"] = rat((*numeric)[i]);
    a.push_back(std::move(e));
  }
  return a;
}

void require_resolvable(const TranslationCandidate& c) {
  require_deficiency_zero(c.translation);
  if (!c.classification.proper && !(c.resolvability && c.resolvability->strongly_resolvable))
    throw HypothesisError("translation is improper and not strongly resolvable" +
                          (c.resolvability && !c.resolvability->reason.empty() ? ": " + c.resolvability->reason
                                                                               : std::string()));
}

Json cmd_analyze(const Request& req) {
  GeneralizedNetwork g = parse_generalized_network(req.network_text);
  Json j;
  j["network"] = network_section(g);
  j["generators"] = generators_section(g.base());
  return j;
}

Json cmd_generators(const Request& req) {
  Network net = parse_generalized_network(req.network_text).base();
  Json j;
  j["generators"] = generators_section(net);
  return j;
}

Json cmd_translate(const Request& req) {
  Network net = mass_action_network(req);
  Json j;
  j["network"] = network_section(GeneralizedNetwork(net));
  Json sec;
  if (req.translation_text) {
    sec["source"] = "supplied";
    sec["candidates"] = Json::array({candidate_section(assess_translation(parse_translation(*req.translation_text, net)))});
  } else {
    auto found = find_translations(net, req.search_options);
    sec["source"] = "search";
    sec["candidates_found"] = found.size();
    Json list = Json::array();
    for (std::size_t i = 0; i < found.size() && i < req.show; ++i) list.push_back(candidate_section(found[i]));
    sec["candidates"] = std::move(list);
    if (found.empty()) {
      j["translations"] = std::move(sec);
      throw NoTranslation("no translation found within the search budget", std::move(j));
    }
  }
  j["translations"] = std::move(sec);
  return j;
}

Json cmd_tree_constants(const Request& req) {
  Network net = mass_action_network(req);
  std::optional<RateMap> rates;
  if (req.rates_text) rates = read_rates(req, net);
  Json j;
  if (req.translation_text || req.search) {
    Json sel;
    TranslationCandidate c = obtain_translation(req, net, sel, true);
    const Translation& t = c.translation;
    std::vector<Polynomial> sym = translated_tree_constants(t);
    std::optional<RatVec> num;
    if (rates) num = translated_tree_constants(t, *rates);
    sel["translation"] = candidate_section(c);
    j["translation"] = std::move(sel);
    j["tree_constants"] = tree_constant_entries(t.translated.base(), sym, num);
    if (!c.classification.proper)
      j["note"] = "symbolic constants are multiplied by the common denominator of the kinetic adjustment factors";
  } else {
    if (!is_weakly_reversible(net)) throw HypothesisError("tree constants need a weakly reversible network");
    TreeConstantSet set = rates ? tree_constants(net, *rates) : tree_constants(net);
    j["tree_constants"] = tree_constant_entries(net, set.symbolic, set.numeric);
  }
  return j;
}

// A section that hit an enumeration cap keeps the rest of the report but
// still sets the cap exit code.
bool mentions_cap(const Json& j) {
  if (j.is_object()) {
    auto it = j.find("status");
    if (it != j.end() && *it == "cap-exceeded") return true;
  }
  if (j.is_structured())
    for (const auto& v : j) if (mentions_cap(v)) return true;
  return false;
}

Json sign_checks(const Translation& t, std::size_t cap) {
  Json j;
  try {
    UniquenessCheck u = check_uniqueness_condition(t, cap);
    Json e;
    e["sign_compatible"] = u.sign_compatible;
    e["positive_conservation_law"] = u.positive_conservation;
    e["witness"] = u.witness ? Json(u.witness->to_string()) : Json(nullptr);
    e["hypothesis_holds"] = u.holds();
    e["conclusion"] = u.holds() ? "exactly one positive steady state in every positive compatibility class"
                                : "no conclusion";
    j["uniqueness"] = std::move(e);
  } catch (const CapExceeded& ex) {
    j["uniqueness"] = Json{{"status", "cap-exceeded"}, {"message", ex.what()}};
  }
  try {
    MultistationarityCheck m = check_multistationarity_condition(t, cap);
    Json e;
    e["sign_intersection_nontrivial"] = m.holds;
    e["witness"] = m.witness ? Json(m.witness->to_string()) : Json(nullptr);
    e["conclusion"] = m.holds ? "multiple positive steady states in one compatibility class for some rate constants"
                              : "no compatibility class has more than one positive steady state";
    j["multistationarity"] = std::move(e);
  } catch (const CapExceeded& ex) {
    j["multistationarity"] = Json{{"status", "cap-exceeded"}, {"message", ex.what()}};
  }
  return j;
}

Json verification_section(const Network& net, const RateMap& rates, std::span<const double> x) {
  VerificationReport v = verify_steady_state(net, rates, x);
  Json j;
  j["residual"] = v.residual;
  j["relative_residual"] = v.relative_residual;
  j["field"] = species_values(net, v.field);
  j["decomposes_into_extreme_currents"] = v.decomposes;
  j["current_weights"] = v.current_weights;
  j["decomposition_residual"] = v.decomposition_residual;
  return j;
}

Json cmd_steady_states(const Request& req) {
  Network net = mass_action_network(req);
  if (req.solve && (!req.rates_text || !req.x0_text)) throw UsageError("--solve needs both --rates and --x0");
  std::optional<RateMap> rates;
  if (req.rates_text) rates = read_rates(req, net);
  std::optional<std::vector<double>> x0;
  if (req.x0_text) x0 = read_state(req, net);

  Json j;
  Json sel;
  TranslationCandidate c = obtain_translation(req, net, sel, true);
  sel["translation"] = candidate_section(c);
  j["translation"] = std::move(sel);
  require_resolvable(c);
  const Translation& t = c.translation;

  Json bs = Json::array();
  auto symbolic = binomial_generators(t);
  std::optional<std::vector<Binomial>> numeric;
  if (rates) numeric = binomial_generators(t, *rates);
  for (std::size_t i = 0; i < symbolic.size(); ++i) {
    Json e;
    e["anchor"] = symbolic[i].anchor + 1;
    e["partner"] = symbolic[i].partner + 1;
    e["symbolic"] = symbolic[i].to_string(net);
    if (numeric) e["numeric"] = (*numeric)[i].to_string(net);
    bs.push_back(std::move(e));
  }
  j["binomials"] = std::move(bs);

  Parametrization p = parametrization(t);
  Json par;
  par["stoichiometric_subspace"] = basis(p.stoichiometric);
  par["kinetic_order_subspace"] = basis(p.kinetic_order);
  par["exponent_directions"] = basis(p.kinetic_orthogonal);
  par["dimension"] = p.dimension;
  par["statement"] = "ln x - ln x* lies in the orthogonal complement of the kinetic-order subspace";
  if (rates) par["particular_solution"] = species_values(net, particular_steady_state(t, *rates));
  j["parametrization"] = std::move(par);
  j["sign_conditions"] = sign_checks(t, req.sign_dim_cap);

  if (rates) {
    TranslatedRates tr = translated_rate_constants(t, *rates);
    Json rs = Json::object();
    for (const auto& [name, v] : tr.as_map) rs[name] = rat(v);
    j["translated_rates"] = std::move(rs);

    if (x0) {
      NewtonOptions opts;
      opts.seed = req.seed;
      SolveResult sol = solve_steady_state(t, *rates, *x0, opts);
      Json s;
      s["status"] = to_string(sol.status);
      s["iterations"] = sol.iterations;
      s["restarts"] = sol.restarts;
      s["residual"] = sol.residual;
      s["x"] = species_values(net, sol.x);
      Json v = verification_section(net, *rates, sol.x);
      v["complex_balanced_translated"] = check_complex_balanced(t.translated, tr.as_map, std::span<const double>(sol.x));
      s["verification"] = std::move(v);
      j["solution"] = std::move(s);
    }
  }
  return j;
}

Json cmd_verify(const Request& req) {
  Network net = mass_action_network(req);
  if (!req.rates_text || !req.x0_text) throw UsageError("verify needs --rates and --x0");
  RateMap rates = read_rates(req, net);
  std::vector<double> x = read_state(req, net);
  Json j;
  Json v = verification_section(net, rates, x);
  v["tolerance"] = req.tolerance;
  v["steady_state"] = v["relative_residual"].get<double>() < req.tolerance;
  j["verification"] = std::move(v);
  return j;
}

void render(std::ostringstream& os, const std::string& key, const Json& v, int indent);

std::string scalar(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& e : v)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : v) {
    if (!first) s += ", ";
    first = false;
    s += scalar(e);
  }
  return s + "]";
}

void render_fields(std::ostringstream& os, const Json& obj, int indent) {
  for (const auto& [k, v] : obj.items()) render(os, k, v, indent);
}

void render(std::ostringstream& os, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_string() && v.get<std::string>().find('\n') != std::string::npos) {
    os << pad << key << ": |\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) os << pad << "  " << line << "\n";
  } else if (!v.is_array() && !v.is_object()) {
    os << pad << key << ": " << scalar(v) << "\n";
  } else if (v.empty()) {
    os << pad << key << ": " << (v.is_array() ? "[]" : "{}") << "\n";
  } else if (v.is_array() && flat(v)) {
    os << pad << key << ": " << inline_array(v) << "\n";
  } else if (v.is_array()) {
    os << pad << key << ":\n";
    for (const auto& e : v) {
      if (e.is_object()) {
        // "- first: value", remaining fields aligned under it
        std::ostringstream item;
        render_fields(item, e, indent + 2);
        std::string body = item.str();
        body.replace(0, pad.size() + 4, pad + "  - ");
        os << body;
      } else if (flat(e)) {
        os << pad << "  - " << (e.is_array() ? inline_array(e) : scalar(e)) << "\n";
      } else {
        render(os, "-", e, indent + 1);
      }
    }
  } else {
    os << pad << key << ":\n";
    render_fields(os, v, indent + 1);
  }
}

Json error_report(const Request& req, const std::string& kind, const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = req.command;
  j["error"] = Json{{"kind", kind}, {"message", message}};
  return j;
}

}  // namespace

Outcome run(const Request& req) {
  Outcome out;
  try {
    Json body;
    if (req.command == "analyze") body = cmd_analyze(req);
    else if (req.command == "generators") body = cmd_generators(req);
    else if (req.command == "translate") body = cmd_translate(req);
    else if (req.command == "tree-constants") body = cmd_tree_constants(req);
    else if (req.command == "steady-states") body = cmd_steady_states(req);
    else if (req.command == "verify") body = cmd_verify(req);
    else throw UsageError("unknown command '" + req.command + "'");
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = req.command;
    for (auto& [k, v] : body.items()) j[k] = std::move(v);
    out.exit_code = mentions_cap(j) ? kCap : kOk;
    out.report = std::move(j);
  } catch (const UsageError& e) {
    out = {kUsage, error_report(req, "usage", e.what())};
  } catch (const CapExceeded& e) {
    out = {kCap, error_report(req, "cap-exceeded", e.what())};
  } catch (const HypothesisError& e) {
    out = {kHypothesis, error_report(req, "hypothesis", e.what())};
  } catch (const UnsupportedError& e) {
    out = {kHypothesis, error_report(req, "unsupported", e.what())};
  } catch (const ParseError& e) {
    out = {kParse, error_report(req, "parse", e.what())};
  } catch (const Error& e) {
    out = {kParse, error_report(req, "invalid-input", e.what())};
  } catch (const NoTranslation& e) {
    Json j = error_report(req, "no-translation", e.what());
    if (e.partial.is_object())
      for (const auto& [k, v] : e.partial.items()) j[k] = v;
    out = {kNoTranslation, std::move(j)};
  } catch (const std::exception& e) {
    out = {kParse, error_report(req, "error", e.what())};
  }
  return out;
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  render_fields(os, report, 0);
  return os.str();
}

}  // namespace crnt::report
