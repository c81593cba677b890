#include "bnpoly/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnpoly {
namespace {

IndexFamily family_from_string(const std::string& s) {
  if (s == "fam") return IndexFamily::fam;
  if (s == "cai" || s == "char") return IndexFamily::cai;
  if (s == "power" || s == "power_set") return IndexFamily::power_set;
  throw std::invalid_argument("unknown index family '" + s + "'");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing key '") + key + "'");
  return j.at(key);
}

Json ground_set_to_json(const GroundSet& gs) { return gs.labels(); }

template <class Vec, class Parse>
Vec vector_from_json(int n, const Json& j, Parse parse_key) {
  if (!j.is_object()) throw std::invalid_argument("vector must be a JSON object");
  Vec v(n);
  for (const auto& [key, value] : j.items()) {
    const auto k = parse_key(key);
    const Rational q = rational_from_json(value);
    if (!Vec::in_domain(k, n) && sgn(q) != 0) {
      throw std::invalid_argument("coordinate '" + key + "' is outside the index family");
    }
    v.add(k, q);
  }
  return v;
}

Json dense_rows(const std::vector<RationalVector>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row = Json::array();
    for (const auto& q : r) row.push_back(format_rational(q));
    out.push_back(std::move(row));
  }
  return out;
}

Json sparse_terms(const std::vector<std::string>& names, const RationalVector& coeffs) {
  Json t = Json::object();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (sgn(coeffs[i]) != 0) t[names[i]] = format_rational(coeffs[i]);
  }
  return t;
}

RationalVector dense_from_terms(const std::vector<std::string>& names, const Json& terms) {
  std::map<std::string, std::size_t> pos;
  for (std::size_t i = 0; i < names.size(); ++i) pos[names[i]] = i;
  RationalVector out(names.size(), Rational(0));
  for (const auto& [key, value] : terms.items()) {
    auto it = pos.find(key);
    if (it == pos.end()) throw std::invalid_argument("unknown coordinate '" + key + "'");
    out[it->second] += rational_from_json(value);
  }
  return out;
}

}  // namespace

GroundSet ground_set_from_json(const Json& j) {
  if (j.is_string()) {
    std::vector<std::string> labels;
    for (char c : j.get<std::string>()) labels.emplace_back(1, c);
    return GroundSet(labels);
  }
  return GroundSet(j.get<std::vector<std::string>>());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw std::invalid_argument("rationals must be \"p/q\" strings or integers");
}

Json to_json(const GroundSet& gs, const FamVector& v) {
  Json out = Json::object();
  for (const auto& [k, q] : v.nonzeros()) out[format_family_index(gs, k)] = format_rational(q);
  return out;
}

namespace {
template <class Vec>
Json subset_vector_to_json(const GroundSet& gs, const Vec& v) {
  std::vector<Subset> keys;
  for (const auto& [k, q] : v.nonzeros()) keys.push_back(k);
  std::sort(keys.begin(), keys.end(), BySizeThenMask{});
  Json out = Json::object();
  for (Subset k : keys) out[gs.format(k)] = format_rational(v.at(k));
  return out;
}
}  // namespace

Json to_json(const GroundSet& gs, const CharVector& v) { return subset_vector_to_json(gs, v); }
Json to_json(const GroundSet& gs, const SetFunction& v) { return subset_vector_to_json(gs, v); }

Json to_json(const GroundSet& gs, const Dag& g) {
  Json out = Json::object();
  for (int i = 0; i < g.size(); ++i) out[gs.label(i)] = gs.format(g.parents(i));
  return out;
}

Json to_json(const GroundSet& gs, const FamInequality& ineq) {
  Json out = {{"space", "fam"}, {"terms", to_json(gs, ineq.objective)}, {"bound", format_rational(ineq.bound)}};
  if (!ineq.label.empty()) out["label"] = ineq.label;
  return out;
}

Json to_json(const GroundSet& gs, const CharInequality& ineq) {
  Json out = {{"space", "char"}, {"terms", to_json(gs, ineq.objective)}, {"bound", format_rational(ineq.bound)}};
  if (!ineq.label.empty()) out["label"] = ineq.label;
  return out;
}

FamVector fam_vector_from_json(const GroundSet& gs, const Json& j) {
  return vector_from_json<FamVector>(gs.size(), j, [&](const std::string& k) { return parse_family_index(gs, k); });
}

CharVector char_vector_from_json(const GroundSet& gs, const Json& j) {
  return vector_from_json<CharVector>(gs.size(), j, [&](const std::string& k) { return gs.parse_subset(k); });
}

SetFunction set_function_from_json(const GroundSet& gs, const Json& j) {
  return vector_from_json<SetFunction>(gs.size(), j, [&](const std::string& k) { return gs.parse_subset(k); });
}

FamInequality fam_inequality_from_json(const GroundSet& gs, const Json& j) {
  FamInequality out{fam_vector_from_json(gs, require(j, "terms")), rational_from_json(require(j, "bound")), ""};
  if (j.contains("label")) out.label = j.at("label").get<std::string>();
  return out;
}

CharInequality char_inequality_from_json(const GroundSet& gs, const Json& j) {
  CharInequality out{char_vector_from_json(gs, require(j, "terms")), rational_from_json(require(j, "bound")), ""};
  if (j.contains("label")) out.label = j.at("label").get<std::string>();
  return out;
}

GroundSet ground_set_of_dag_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("DAG must be a JSON object");
  std::vector<std::string> labels;
  for (const auto& [key, value] : j.items()) labels.push_back(key);
  return GroundSet(labels);
}

Dag dag_from_json(const GroundSet& gs, const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("DAG must be a JSON object");
  std::vector<Subset> parents(static_cast<std::size_t>(gs.size()));
  std::vector<bool> seen(static_cast<std::size_t>(gs.size()), false);
  for (const auto& [key, value] : j.items()) {
    const auto node = gs.index_of(key);
    if (!node) throw std::invalid_argument("unknown node '" + key + "'");
    if (!value.is_string()) throw std::invalid_argument("parent sets must be strings");
    parents[static_cast<std::size_t>(*node)] = gs.parse_subset(value.get<std::string>());
    seen[static_cast<std::size_t>(*node)] = true;
  }
  for (bool s : seen) {
    if (!s) throw std::invalid_argument("DAG must list every node");
  }
  return Dag(gs.size(), std::move(parents));
}

std::vector<std::string> coordinate_names(const GroundSet& gs, IndexFamily family) {
  std::vector<std::string> out;
  switch (family) {
    case IndexFamily::fam:
      for (const auto& k : enumerate_family_indices(gs)) out.push_back(format_family_index(gs, k));
      break;
    case IndexFamily::cai:
      for (Subset s : enumerate_cai(gs)) out.push_back(gs.format(s));
      break;
    case IndexFamily::power_set:
      for (Subset s : enumerate_power_set(gs.size())) out.push_back(gs.format(s));
      break;
  }
  return out;
}

Json to_json(const GroundSet& gs, const VRep& v) {
  Json out = {{"family", to_string(v.ambient)},
              {"ground_set", ground_set_to_json(gs)},
              {"coordinates", coordinate_names(gs, v.ambient)},
              {"points", dense_rows(v.points)}};
  if (!v.rays.empty()) out["rays"] = dense_rows(v.rays);
  return out;
}

Json to_json(const GroundSet& gs, const HRep& h) {
  const auto names = coordinate_names(gs, h.ambient);
  Json ineqs = Json::array();
  for (const auto& ineq : h.inequalities) {
    Json e = {{"terms", sparse_terms(names, ineq.normal)}, {"bound", format_rational(ineq.bound)}};
    if (!ineq.label.empty()) e["label"] = ineq.label;
    ineqs.push_back(std::move(e));
  }
  Json eqs = Json::array();
  for (const auto& eq : h.equations) {
    eqs.push_back({{"terms", sparse_terms(names, eq.normal)}, {"rhs", format_rational(eq.rhs)}});
  }
  return {{"family", to_string(h.ambient)},
          {"ground_set", ground_set_to_json(gs)},
          {"inequalities", std::move(ineqs)},
          {"equations", std::move(eqs)}};
}

VRep vrep_from_json(const Json& j) {
  const GroundSet gs = ground_set_from_json(require(j, "ground_set"));
  VRep v;
  v.ambient = family_from_string(require(j, "family").get<std::string>());
  v.n = gs.size();
  v.dimension = ambient_dimension(v.ambient, v.n);
  for (const auto& row : require(j, "points")) {
    RationalVector p;
    for (const auto& q : row) p.push_back(rational_from_json(q));
    if (p.size() != v.dimension) throw std::invalid_argument("point of wrong dimension");
    v.points.push_back(std::move(p));
  }
  return v;
}

HRep hrep_from_json(const Json& j) {
  const GroundSet gs = ground_set_from_json(require(j, "ground_set"));
  HRep h;
  h.ambient = family_from_string(require(j, "family").get<std::string>());
  h.n = gs.size();
  h.dimension = ambient_dimension(h.ambient, h.n);
  const auto names = coordinate_names(gs, h.ambient);
  if (j.contains("inequalities")) {
    for (const auto& e : j.at("inequalities")) {
      DenseInequality d{dense_from_terms(names, require(e, "terms")), rational_from_json(require(e, "bound")), ""};
      if (e.contains("label")) d.label = e.at("label").get<std::string>();
      h.inequalities.push_back(std::move(d));
    }
  }
  if (j.contains("equations")) {
    for (const auto& e : j.at("equations")) {
      h.equations.push_back({dense_from_terms(names, require(e, "terms")), rational_from_json(require(e, "rhs"))});
    }
  }
  return h;
}

Json to_json(const VerificationReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"description", c.description},
                      {"expected", c.expected},
                      {"observed", c.observed},
                      {"status", c.skipped ? "skipped" : (c.pass ? "pass" : "fail")}});
  }
  return {{"pipeline", report.pipeline},
          {"pass", report.passed()},
          {"budget_exhausted", report.budget_exhausted},
          {"checks", std::move(checks)},
          {"notes", report.notes}};
}

}  // namespace bnpoly
