#include <string>

#include "bnpoly/inequalities.hpp"
#include "bnpoly/json_io.hpp"
#include "bnpoly_embedded_data.hpp"

namespace bnpoly {
namespace {

GroundSet ground_of(const Json& doc) {
  std::vector<std::string> labels;
  for (char c : doc.at("ground_set").get<std::string>()) labels.emplace_back(1, c);
  return GroundSet(labels);
}

std::vector<CertificateTerm> certificate_from_json(const GroundSet& gs, const Json& j) {
  std::vector<CertificateTerm> out;
  for (const auto& t : j) {
    CertificateTerm term{};
    term.multiplier = rational_from_json(t.at("multiplier"));
    const auto kind = t.at("constraint").get<std::string>();
    if (kind == "nonneg") {
      term.kind = CertificateTerm::Kind::nonneg;
      term.index = parse_family_index(gs, t.at("index").get<std::string>());
    } else if (kind == "convexity") {
      term.kind = CertificateTerm::Kind::convexity;
      const auto node = gs.index_of(t.at("node").get<std::string>());
      if (!node) throw std::logic_error("embedded certificate names an unknown node");
      term.node = *node;
    } else {
      throw std::logic_error("embedded certificate has an unknown constraint kind");
    }
    out.push_back(std::move(term));
  }
  return out;
}

std::vector<CatalogEntry> load_catalog(std::string_view text, bool se) {
  const Json doc = Json::parse(text);
  const GroundSet gs = ground_of(doc);
  std::vector<CatalogEntry> out;
  for (const auto& t : doc.at("types")) {
    CatalogEntry e;
    e.type_id = t.at("id").get<std::string>();
    if (se) {
      if (t.at("kind") == "cluster") {
        e.description = "cluster " + t.at("cluster").get<std::string>() + " k=" + std::to_string(t.at("k").get<int>());
      } else {
        e.description = t.at("label").get<std::string>();
      }
    } else {
      std::string s;
      for (const auto& member : t.at("sperner")) {
        if (!s.empty()) s += ',';
        s += member.get<std::string>();
      }
      e.description = "{" + s + "}";
    }
    e.representative = {char_vector_from_json(gs, t.at("char")), rational_from_json(t.at("char_bound")), e.type_id};
    if (t.contains("fam")) {
      e.fam_representative =
          FamInequality{fam_vector_from_json(gs, t.at("fam")), rational_from_json(t.at("fam_bound")), e.type_id};
    }
    if (t.contains("certificate")) e.certificate = certificate_from_json(gs, t.at("certificate"));
    e.expected_orbit_size = t.at("count").get<std::size_t>();
    e.orbit = orbit(e.representative);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

std::vector<CatalogEntry> catalog_se_n4() { return load_catalog(embedded::se_n4, true); }

std::vector<CatalogEntry> catalog_specific_n4() { return load_catalog(embedded::specific_n4, false); }

CounterexampleConstants counterexample_constants() {
  const Json doc = Json::parse(embedded::counterexample_n5);
  const GroundSet gs = ground_of(doc);
  CounterexampleConstants c{char_inequality_from_json(gs, doc.at("ineq20")),
                            fam_inequality_from_json(gs, doc.at("ineq21")),
                            FamVector(gs.size()),
                            fam_vector_from_json(gs, doc.at("fam_dagger"))};
  c.obj_star = c.ineq21.objective;
  return c;
}

std::vector<FamVector> fvp_star_witnesses() {
  const Json doc = Json::parse(embedded::witnesses_n4);
  const GroundSet gs = ground_of(doc);
  std::vector<FamVector> out;
  for (const auto& w : doc.at("fvp_star_witnesses")) out.push_back(fam_vector_from_json(gs, w));
  return out;
}

}  // namespace bnpoly
