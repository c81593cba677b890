#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "bnpoly/dags.hpp"
#include "bnpoly/encodings.hpp"
#include "bnpoly/inequalities.hpp"
#include "bnpoly/json_io.hpp"
#include "bnpoly/polyhedra.hpp"
#include "bnpoly/score_equivalence.hpp"
#include "bnpoly/supermodular.hpp"
#include "bnpoly/verify.hpp"

using namespace bnpoly;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  unsigned jobs = 1;
  std::string budget;
  std::string labels;
  int n = 0;
  bool table = false;
};

// "-" reads stdin, "@path" reads a file, anything else is literal text.
std::string read_arg(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  return arg;
}

Json parse_json_arg(const std::string& arg) {
  try {
    return Json::parse(read_arg(arg));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
}

GroundSet ground_set(const Globals& g) {
  if (!g.labels.empty()) {
    std::vector<std::string> labels;
    std::stringstream s(g.labels);
    std::string item;
    if (g.labels.find(',') != std::string::npos) {
      while (std::getline(s, item, ',')) labels.push_back(item);
    } else {
      for (char c : g.labels) labels.emplace_back(1, c);
    }
    return GroundSet(labels);
  }
  if (g.n < 2 || g.n > 5) throw UsageError("give --n between 2 and 5 or --labels");
  return GroundSet::letters(g.n);
}

DdOptions dd_options(const Globals& g) {
  DdOptions o;
  o.jobs = g.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : g.jobs;
  if (!g.budget.empty()) {
    // SECONDS[:MEGABYTES]
    const auto colon = g.budget.find(':');
    try {
      const double seconds = std::stod(g.budget.substr(0, colon));
      if (seconds > 0) o.budget.wall_time = std::chrono::duration<double>(seconds);
      if (colon != std::string::npos) o.budget.max_megabytes = std::stoul(g.budget.substr(colon + 1));
    } catch (const std::exception&) {
      throw UsageError("--budget expects SECONDS[:MEGABYTES]");
    }
  }
  return o;
}

Json envelope(const char* kind) { return Json{{"schema", std::string(kSchemaVersion) + "/" + kind}}; }

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

GroundSet dag_ground(const Json& dag, const Globals& g) {
  return g.labels.empty() && g.n == 0 ? ground_set_of_dag_json(dag) : ground_set(g);
}

std::vector<Dag> dag_list(const Json& j, const GroundSet& gs) {
  if (!j.is_array()) throw UsageError("expected a JSON array of DAGs");
  std::vector<Dag> out;
  for (const auto& d : j) out.push_back(dag_from_json(gs, d));
  return out;
}

// ---------------------------------------------------------------- verify

int run_verify(const std::string& which, const Globals& g, bool stretch, int trials, int vn) {
  VerifyOptions opts;
  opts.dd = dd_options(g);
  opts.stretch = stretch;
  std::vector<VerificationReport> reports;
  if (which == "n3") {
    reports.push_back(verify_n3(opts));
  } else if (which == "n4") {
    reports.push_back(verify_n4(opts));
  } else if (which == "theorem3") {
    if (vn == 0 || vn == 3) reports.push_back(verify_theorem3(3, trials < 0 ? 100 : trials, opts));
    if (vn == 0 || vn == 4) reports.push_back(verify_theorem3(4, trials < 0 ? 25 : trials, opts));
    if (vn == 0 || vn == 5) reports.push_back(verify_counterexample_lp());
  } else if (which == "counterexample") {
    reports.push_back(verify_counterexample(opts));
  } else if (which == "conjecture") {
    reports.push_back(explore_conjecture(vn == 0 ? 3 : vn, opts));
  } else {
    throw UsageError("unknown pipeline '" + which + "'");
  }
  bool pass = true, budget = false;
  Json out = envelope("report");
  out["reports"] = Json::array();
  for (const auto& r : reports) {
    pass = pass && r.passed();
    budget = budget || r.budget_exhausted;
    out["reports"].push_back(to_json(r));
  }
  out["pass"] = pass;
  if (g.table) {
    for (const auto& r : reports) std::cout << report_table(r);
  } else {
    emit(out);
  }
  if (!pass) return kFailed;
  return budget ? kBudget : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral toolkit for Bayesian network structure learning"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration (0 = all cores)")->capture_default_str();
  app.add_option("--budget", g.budget, "Limit for hull and enumeration steps, SECONDS[:MEGABYTES]");
  app.add_option("--n", g.n, "Number of nodes; labels are a, b, c, ...");
  app.add_option("--labels", g.labels, "Node labels, e.g. abcd or x1,x2,x3");

  // encode
  auto* encode = app.add_subcommand("encode", "Encode a DAG as a family-variable vector or imset");
  std::string dag_arg, encode_as = "fam";
  encode->add_option("--dag", dag_arg, "DAG as JSON, @file or -")->required();
  encode->add_option("--as", encode_as, "fam, char or standard")
      ->check(CLI::IsMember({"fam", "char", "standard"}))
      ->capture_default_str();

  // dags
  auto* dags_cmd = app.add_subcommand("dags", "Enumerate DAGs and Markov equivalence classes");
  dags_cmd->require_subcommand(1);
  auto* dags_list = dags_cmd->add_subcommand("list", "All DAGs over the ground set");
  auto* dags_count = dags_cmd->add_subcommand("count", "Numbers of DAGs and classes");
  auto* dags_classes = dags_cmd->add_subcommand("classes", "Class representatives with sizes");
  auto* dags_class = dags_cmd->add_subcommand("class", "Markov equivalence class of a DAG");
  dags_class->add_option("--dag", dag_arg, "DAG as JSON")->required();
  auto* dags_equiv = dags_cmd->add_subcommand("equivalent", "Are two DAGs Markov equivalent");
  std::string other_arg;
  dags_equiv->add_option("--dag", dag_arg, "DAG as JSON")->required();
  dags_equiv->add_option("--other", other_arg, "DAG as JSON")->required();

  // se
  auto* se = app.add_subcommand("se", "Score equivalent objectives");
  se->require_subcommand(1);
  std::string vec_arg, dags_arg;
  auto* se_check = se->add_subcommand("check", "Is a fam objective score equivalent");
  se_check->add_option("--objective", vec_arg, "fam vector JSON")->required();
  auto* se_to_char = se->add_subcommand("to-char", "Characteristic-imset objective of an SE fam objective");
  se_to_char->add_option("--objective", vec_arg, "fam vector JSON")->required();
  auto* se_from = se->add_subcommand("from-setfn", "fam objective phi(a|B) = m(aB) - m(B)");
  se_from->add_option("--setfn", vec_arg, "set function JSON")->required();
  auto* se_face = se->add_subcommand("is-face", "Is a set of DAG-codes an SE face");
  se_face->add_option("--dags", dags_arg, "JSON array of DAGs")->required();

  // supermod
  auto* sm = app.add_subcommand("supermod", "Supermodular set functions");
  sm->require_subcommand(1);
  auto* sm_check = sm->add_subcommand("check", "Standardized and supermodular");
  auto* sm_extreme = sm->add_subcommand("extreme", "Spans an extreme ray of the standardized cone");
  auto* sm_core = sm->add_subcommand("core", "Core polytope vertices");
  auto* sm_dual = sm->add_subcommand("dual", "r(T) = m(N) - m(N\\T) with matroid checks");
  for (auto* c : {sm_check, sm_extreme, sm_core, sm_dual}) c->add_option("--setfn", vec_arg, "set function JSON")->required();

  // ineq
  auto* ineq = app.add_subcommand("ineq", "Cluster inequalities and facet catalogs");
  ineq->require_subcommand(1);
  auto* ineq_cluster = ineq->add_subcommand("cluster", "Generalized cluster inequality");
  std::string cluster_arg, mode = "fam", which;
  int level = 1;
  ineq_cluster->add_option("--C", cluster_arg, "Cluster, e.g. abc")->required();
  ineq_cluster->add_option("--k", level, "Level, 1 <= k < |C|")->required();
  ineq_cluster->add_option("--mode", mode, "fam or char")->check(CLI::IsMember({"fam", "char"}))->capture_default_str();
  auto* ineq_catalog = ineq->add_subcommand("catalog", "n = 4 facet catalogs");
  ineq_catalog->add_option("--which", which, "se4 or specific4")->check(CLI::IsMember({"se4", "specific4"}))->required();
  bool orbits = false;
  ineq_catalog->add_flag("--orbits", orbits, "Include every orbit member");

  // polytope
  auto* poly = app.add_subcommand("polytope", "Hulls, vertices and faces");
  poly->require_subcommand(1);
  std::string input_arg, ineq_arg, family = "fam", format = "json";
  auto* poly_points = poly->add_subcommand("points", "DAG-codes (fam) or characteristic imsets (char) as a V-representation");
  poly_points->add_option("--family", family, "fam or char")->check(CLI::IsMember({"fam", "char"}))->capture_default_str();
  auto* poly_hull = poly->add_subcommand("hull", "Facets of a V-representation");
  poly_hull->add_option("--input", input_arg, "V-representation JSON")->required();
  poly_hull->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  auto* poly_vertices = poly->add_subcommand("vertices", "Vertices of an H-representation");
  poly_vertices->add_option("--input", input_arg, "H-representation JSON, or text with --format text")->required();
  poly_vertices->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  auto* poly_face = poly->add_subcommand("face-dim", "Dimension of the face an inequality cuts out");
  auto* poly_facet = poly->add_subcommand("is-facet", "Does an inequality define a facet");
  for (auto* c : {poly_face, poly_facet}) {
    c->add_option("--input", input_arg, "V-representation JSON")->required();
    c->add_option("--ineq", ineq_arg, "inequality JSON {\"terms\": ..., \"bound\": ...}")->required();
  }

  // export-lp
  auto* lp = app.add_subcommand("export-lp", "Family-variable relaxation in CPLEX LP format");
  std::string cuts = "clusters";
  lp->add_option("--objective", vec_arg, "fam objective JSON")->required();
  lp->add_option("--cuts", cuts, "clusters, none, or a JSON array of fam inequalities")->capture_default_str();

  // verify
  auto* ver = app.add_subcommand("verify", "Reproduce the catalogs and the counterexample");
  std::string pipeline;
  bool stretch = false;
  int trials = -1, vn = 0;
  ver->add_option("pipeline", pipeline, "n3, n4, theorem3, counterexample or conjecture")
      ->check(CLI::IsMember({"n3", "n4", "theorem3", "counterexample", "conjecture"}))
      ->required();
  ver->add_flag("--stretch", stretch, "Include the long n = 4 steps");
  ver->add_option("--trials", trials, "Random objectives for theorem3");
  ver->add_option("--size", vn, "Restrict theorem3 to n = 3, 4 or 5 (the LP check)");
  ver->add_flag("--table", g.table, "Human-readable table instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*encode) {
      const Json dag = parse_json_arg(dag_arg);
      const GroundSet gs = dag_ground(dag, g);
      const Dag d = dag_from_json(gs, dag);
      Json out = envelope(encode_as.c_str());
      out["ground_set"] = gs.labels();
      if (encode_as == "fam") {
        out["vector"] = to_json(gs, fam_vector(d));
      } else if (encode_as == "char") {
        out["vector"] = to_json(gs, char_imset(d));
      } else {
        out["vector"] = to_json(gs, standard_imset(d));
      }
      emit(out);
      return kOk;
    }

    if (*dags_cmd) {
      if (*dags_class || *dags_equiv) {
        const Json dag = parse_json_arg(dag_arg);
        const GroundSet gs = dag_ground(dag, g);
        const Dag d = dag_from_json(gs, dag);
        if (*dags_class) {
          Json out = envelope("dags");
          out["ground_set"] = gs.labels();
          out["dags"] = Json::array();
          for (const auto& h : equivalence_class(d)) out["dags"].push_back(to_json(gs, h));
          emit(out);
        } else {
          const Dag other = dag_from_json(gs, parse_json_arg(other_arg));
          Json out = envelope("equivalent");
          out["equivalent"] = markov_equivalent(d, other);
          emit(out);
        }
        return kOk;
      }
      const GroundSet gs = ground_set(g);
      if (*dags_count) {
        Json out = envelope("count");
        out["n"] = gs.size();
        out["dags"] = enumerate_dags(gs).size();
        out["classes"] = enumerate_equivalence_classes(gs).size();
        emit(out);
      } else if (*dags_list) {
        Json out = envelope("dags");
        out["ground_set"] = gs.labels();
        out["dags"] = Json::array();
        for (const auto& d : enumerate_dags(gs)) out["dags"].push_back(to_json(gs, d));
        emit(out);
      } else {
        Json out = envelope("classes");
        out["ground_set"] = gs.labels();
        out["classes"] = Json::array();
        for (const auto& c : enumerate_equivalence_classes(gs)) {
          out["classes"].push_back({{"representative", to_json(gs, c.representative)},
                                    {"size", c.size},
                                    {"char", to_json(gs, char_imset(c.representative))}});
        }
        emit(out);
      }
      return kOk;
    }

    if (*se) {
      if (*se_face) {
        const Json list = parse_json_arg(dags_arg);
        if (!list.is_array() || list.empty()) throw UsageError("--dags needs a nonempty JSON array");
        const GroundSet gs = dag_ground(list.front(), g);
        const auto graphs = dag_list(list, gs);
        const auto res = is_se_face(graphs);
        Json out = envelope("se-face");
        out["se_face"] = res.se_face;
        out["margin"] = format_rational(res.margin);
        if (res.witness) {
          out["witness"] = to_json(gs, *res.witness);
          out["bound"] = format_rational(res.bound);
        }
        emit(out);
        return kOk;
      }
      const GroundSet gs = ground_set(g);
      if (*se_from) {
        const SetFunction m = set_function_from_json(gs, parse_json_arg(vec_arg));
        CharVector cm(gs.size());
        for (const auto& [s, q] : m.nonzeros()) {
          if (s.size() < 2) throw UsageError("set function must vanish on sets of size <= 1");
          cm.set(s, q);
        }
        Json out = envelope("fam");
        out["ground_set"] = gs.labels();
        out["vector"] = to_json(gs, objective_from_setfn(cm));
        emit(out);
        return kOk;
      }
      const FamVector obj = fam_vector_from_json(gs, parse_json_arg(vec_arg));
      if (*se_check) {
        Json out = envelope("se-check");
        const bool ok = is_se_objective(obj);
        out["score_equivalent"] = ok;
        if (ok) out["setfn"] = to_json(gs, setfn_from_objective(obj));
        emit(out);
      } else {
        Json out = envelope("char");
        out["ground_set"] = gs.labels();
        out["vector"] = to_json(gs, char_objective(obj));
        emit(out);
      }
      return kOk;
    }

    if (*sm) {
      const GroundSet gs = ground_set(g);
      const SetFunction m = set_function_from_json(gs, parse_json_arg(vec_arg));
      if (*sm_check) {
        Json out = envelope("supermod-check");
        out["standardized"] = is_standardized(m);
        out["supermodular"] = is_supermodular(m);
        emit(out);
      } else if (*sm_extreme) {
        Json out = envelope("supermod-extreme");
        out["extreme"] = is_extreme(m);
        emit(out);
      } else if (*sm_core) {
        Json out = envelope("core");
        out["ground_set"] = gs.labels();
        out["vertices"] = Json::array();
        for (const auto& v : core_vertices(m)) {
          Json row = Json::array();
          for (const auto& q : v) row.push_back(format_rational(q));
          out["vertices"].push_back(std::move(row));
        }
        emit(out);
      } else {
        const SetFunction r = duality_transform(m);
        Json out = envelope("dual");
        out["ground_set"] = gs.labels();
        out["rank"] = to_json(gs, r);
        bool integral = true;
        for (const auto& [s, q] : r.nonzeros()) integral = integral && q.get_den() == 1;
        if (integral) {
          const bool rank = is_matroid_rank(r, gs.full());
          out["matroid_rank"] = rank;
          out["connected"] = rank && is_connected_matroid(r, gs.full());
        }
        emit(out);
      }
      return kOk;
    }

    if (*ineq) {
      if (*ineq_cluster) {
        const GroundSet gs = ground_set(g);
        const Subset c = gs.parse_subset(cluster_arg);
        Json out = envelope("inequality");
        out["ground_set"] = gs.labels();
        if (mode == "fam") {
          out["inequality"] = to_json(gs, cluster_fam(gs.size(), c, level));
        } else {
          out["inequality"] = to_json(gs, cluster_char(gs.size(), c, level));
        }
        emit(out);
        return kOk;
      }
      const GroundSet gs = GroundSet::letters(4);
      const auto catalog = which == "se4" ? catalog_se_n4() : catalog_specific_n4();
      Json out = envelope("catalog");
      out["ground_set"] = gs.labels();
      out["types"] = Json::array();
      std::size_t total = 0;
      for (const auto& e : catalog) {
        Json t = {{"id", e.type_id},
                  {"description", e.description},
                  {"count", e.orbit.size()},
                  {"char", to_json(gs, e.representative)}};
        if (e.fam_representative) t["fam"] = to_json(gs, *e.fam_representative);
        if (orbits) {
          t["orbit"] = Json::array();
          for (const auto& o : e.orbit) t["orbit"].push_back(to_json(gs, o));
        }
        total += e.orbit.size();
        out["types"].push_back(std::move(t));
      }
      out["total"] = total;
      emit(out);
      return kOk;
    }

    if (*poly) {
      const DdOptions opts = dd_options(g);
      if (*poly_points) {
        const GroundSet gs = ground_set(g);
        VRep v;
        v.n = gs.size();
        if (family == "fam") {
          const auto keys = enumerate_family_indices(gs);
          v.ambient = IndexFamily::fam;
          v.dimension = keys.size();
          for (const auto& d : enumerate_dags(gs)) v.points.push_back(fam_vector(d).to_dense(keys));
        } else {
          const auto keys = enumerate_cai(gs);
          v.ambient = IndexFamily::cai;
          v.dimension = keys.size();
          for (const auto& c : enumerate_equivalence_classes(gs)) {
            v.points.push_back(char_imset(c.representative).to_dense(keys));
          }
          std::sort(v.points.begin(), v.points.end());
        }
        Json out = envelope("vrep");
        out.update(to_json(gs, v));
        emit(out);
        return kOk;
      }
      if (*poly_vertices) {
        HRep h;
        if (format == "text") {
          std::istringstream in(read_arg(input_arg));
          h = read_hrep_text(in);
        } else {
          h = hrep_from_json(parse_json_arg(input_arg));
        }
        const VRep v = vertices_from_inequalities(h, opts);
        Json out = envelope("vrep");
        out.update(to_json(GroundSet::letters(h.n), v));
        emit(out);
        return kOk;
      }
      const Json vj = parse_json_arg(input_arg);
      const VRep v = vrep_from_json(vj);
      const GroundSet gs = ground_set_from_json(vj.at("ground_set"));
      if (*poly_hull) {
        const HRep h = facets_from_vertices(v, opts);
        if (format == "text") {
          write_hrep_text(std::cout, h);
        } else {
          Json out = envelope("hrep");
          out.update(to_json(gs, h));
          emit(out);
        }
        return kOk;
      }
      const Json ij = parse_json_arg(ineq_arg);
      DenseInequality d;
      if (v.ambient == IndexFamily::fam) {
        d = fam_inequality_from_json(gs, ij).to_dense();
      } else if (v.ambient == IndexFamily::cai) {
        d = char_inequality_from_json(gs, ij).to_dense();
      } else {
        throw UsageError("faces are supported over fam and char coordinates");
      }
      Json out = envelope(*poly_face ? "face" : "facet");
      const Face f = face_of(d, v);
      out["dimension"] = f.dimension;
      out["tight"] = f.tight.size();
      if (*poly_facet) out["facet"] = is_facet(d, v);
      emit(out);
      return kOk;
    }

    if (*lp) {
      const GroundSet gs = ground_set(g);
      const FamVector obj = fam_vector_from_json(gs, parse_json_arg(vec_arg));
      std::vector<FamInequality> cut_list;
      if (cuts == "clusters") {
        for (const auto& [c, k] : cluster_parameters(gs.size())) cut_list.push_back(cluster_fam(gs.size(), c, k));
      } else if (cuts != "none") {
        const Json arr = parse_json_arg(cuts);
        if (!arr.is_array()) throw UsageError("--cuts expects clusters, none or a JSON array");
        for (const auto& c : arr) cut_list.push_back(fam_inequality_from_json(gs, c));
      }
      std::cout << export_lp(gs, obj, cut_list);
      return kOk;
    }

    if (*ver) return run_verify(pipeline, g, stretch, trials, vn);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return kBudget;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
