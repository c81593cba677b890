#include "bnpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "bnpoly/cache.hpp"
#include "bnpoly/dags.hpp"
#include "bnpoly/encodings.hpp"
#include "bnpoly/inequalities.hpp"
#include "bnpoly/score_equivalence.hpp"
#include "bnpoly/supermodular.hpp"

namespace bnpoly {

Check& VerificationReport::expect(std::string description, std::string expected, std::string observed) {
  const bool ok = expected == observed;
  checks.push_back({std::move(description), std::move(expected), std::move(observed), ok, false});
  return checks.back();
}

Check& VerificationReport::expect_true(std::string description, bool ok, std::string observed) {
  if (observed.empty()) observed = ok ? "true" : "false";
  checks.push_back({std::move(description), "true", std::move(observed), ok, false});
  return checks.back();
}

void VerificationReport::skip(std::string description, std::string expected, std::string reason) {
  checks.push_back({std::move(description), std::move(expected), "skipped: " + std::move(reason), false, true});
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.skipped || c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;
using InequalityKey = std::pair<RationalVector, Rational>;

class Timer {
 public:
  explicit Timer(VerificationReport& r) : report_(r), start_(Clock::now()) {}
  ~Timer() { report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count(); }

 private:
  VerificationReport& report_;
  Clock::time_point start_;
};

std::string str(std::size_t x) { return std::to_string(x); }

std::string join(const std::vector<std::size_t>& xs) {
  std::string out;
  for (std::size_t x : xs) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

InequalityKey key_of(const DenseInequality& d) {
  auto n = d.normalized();
  return {std::move(n.normal), std::move(n.bound)};
}

VRep fam_polytope(int n, const std::vector<Dag>& dags) {
  const auto keys = enumerate_family_indices(n);
  VRep v{IndexFamily::fam, n, keys.size(), {}, {}};
  for (const auto& g : dags) v.points.push_back(fam_vector(g).to_dense(keys));
  return v;
}

VRep char_polytope(int n) {
  const auto keys = enumerate_cai(n);
  VRep v{IndexFamily::cai, n, keys.size(), {}, {}};
  for (const auto& c : enumerate_equivalence_classes(n)) v.points.push_back(char_imset(c.representative).to_dense(keys));
  std::sort(v.points.begin(), v.points.end());
  return v;
}

// Hulls are the expensive artifacts, so they go through the optional cache.
HRep hull(const VRep& v, const DdOptions& options) {
  std::ostringstream input;
  input << to_string(v.ambient) << ' ' << v.n << ' ' << v.dimension << '\n';
  for (const auto& p : v.points) {
    for (const auto& q : p) input << q.get_str() << ' ';
    input << '\n';
  }
  if (auto hit = cache_load("hull", input.str())) {
    std::istringstream in(*hit);
    try {
      return read_hrep_text(in);
    } catch (const std::exception&) {
      // fall through and recompute
    }
  }
  HRep h = facets_from_vertices(v, options);
  std::ostringstream out;
  write_hrep_text(out, h);
  cache_store("hull", input.str(), out.str());
  return h;
}

HRep fam_constraints(int n, const std::vector<FamInequality>& extra, bool with_convexity = true) {
  const auto keys = enumerate_family_indices(n);
  HRep h{IndexFamily::fam, n, keys.size(), {}, {}};
  for (const auto& c : nonneg_constraints(n)) h.inequalities.push_back(c.to_dense());
  if (with_convexity) {
    for (const auto& c : modified_convexity(n)) h.inequalities.push_back(c.to_dense());
  }
  for (const auto& c : extra) h.inequalities.push_back(c.to_dense());
  return h;
}

std::vector<FamInequality> cluster_family_fam(int n) {
  std::vector<FamInequality> out;
  for (const auto& [c, k] : cluster_parameters(n)) out.push_back(cluster_fam(n, c, k));
  return out;
}

bool is_integral(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.get_den() == 1; });
}

std::string budget_reason(const BudgetExceeded& e) { return e.what(); }

}  // namespace

// ---------------------------------------------------------------- n = 3

VerificationReport verify_n3(const VerifyOptions& options) {
  VerificationReport r;
  r.pipeline = "n3";
  Timer timer(r);
  constexpr int n = 3;

  const auto dags = enumerate_dags(n);
  r.expect("acyclic directed graphs", "25", str(dags.size()));
  r.expect("Markov equivalence classes", "11", str(enumerate_equivalence_classes(n).size()));

  const VRep fvp = fam_polytope(n, dags);
  const HRep fvp_h = hull(fvp, options.dd);
  std::set<InequalityKey> clusters, nonneg, convexity;
  for (const auto& c : cluster_family_fam(n)) clusters.insert(key_of(c.to_dense()));
  for (const auto& c : nonneg_constraints(n)) nonneg.insert(key_of(c.to_dense()));
  for (const auto& c : modified_convexity(n)) convexity.insert(key_of(c.to_dense()));
  std::size_t n_cluster = 0, n_nonneg = 0, n_convexity = 0, n_other = 0;
  for (const auto& f : fvp_h.inequalities) {
    const auto k = key_of(f);
    if (clusters.count(k)) {
      ++n_cluster;
    } else if (nonneg.count(k)) {
      ++n_nonneg;
    } else if (convexity.count(k)) {
      ++n_convexity;
    } else {
      ++n_other;
    }
  }
  r.expect("family-variable polytope facets", "17", str(fvp_h.inequalities.size()));
  r.expect("facets by kind (cluster+nonneg+convexity+other)", "5+9+3+0",
           str(n_cluster) + "+" + str(n_nonneg) + "+" + str(n_convexity) + "+" + str(n_other));

  const VRep cip = char_polytope(n);
  const HRep cip_h = hull(cip, options.dd);
  const auto keys = enumerate_cai(n);
  const auto one = one_imset(n).to_dense(keys);
  const auto zero = zero_imset(n).to_dense(keys);
  std::size_t with_one = 0, with_zero = 0;
  for (const auto& f : cip_h.inequalities) {
    with_one += sgn(f.slack(one)) == 0;
    with_zero += sgn(f.slack(zero)) == 0;
  }
  r.expect("characteristic-imset polytope vertices", "11", str(cip.points.size()));
  r.expect("characteristic-imset polytope facets", "13", str(cip_h.inequalities.size()));
  r.expect("facets tight at 1-imset / 0-imset", "5/8", str(with_one) + "/" + str(with_zero));

  // Non-negativity plus the five clusters, without convexity.
  const HRep mid = fam_constraints(n, cluster_family_fam(n), false);
  const VRep mid_v = vertices_from_inequalities(mid, options.dd);
  r.expect("vertices of non-negativity plus cluster polytope", "28", str(mid_v.points.size()));
  return r;
}

// ---------------------------------------------------------------- n = 4

VerificationReport verify_n4(const VerifyOptions& options) {
  VerificationReport r;
  r.pipeline = "n4";
  Timer timer(r);
  constexpr int n = 4;

  const auto dags = enumerate_dags(n);
  r.expect("acyclic directed graphs", "543", str(dags.size()));
  r.expect("Markov equivalence classes", "185", str(enumerate_equivalence_classes(n).size()));

  const VRep cip = char_polytope(n);
  r.expect("characteristic-imset polytope vertices", "185", str(cip.points.size()));
  const HRep cip_h = hull(cip, options.dd);
  r.expect("characteristic-imset polytope facets", "154", str(cip_h.inequalities.size()));

  const auto keys = enumerate_cai(n);
  const auto one = one_imset(n).to_dense(keys);
  std::set<InequalityKey> se_facets, other_facets;
  for (const auto& f : cip_h.inequalities) {
    (sgn(f.slack(one)) == 0 ? se_facets : other_facets).insert(key_of(f));
  }
  r.expect("facets containing the 1-imset", "37", str(se_facets.size()));
  r.expect("remaining facets", "117", str(other_facets.size()));

  auto match = [&](const std::vector<CatalogEntry>& catalog, const std::set<InequalityKey>& facets,
                   const std::string& what) {
    std::vector<std::size_t> expected, observed;
    std::set<InequalityKey> covered;
    bool all_present = true;
    for (const auto& e : catalog) {
      expected.push_back(e.expected_orbit_size);
      observed.push_back(e.orbit.size());
      for (const auto& ineq : e.orbit) {
        const auto k = key_of(ineq.to_dense());
        all_present = all_present && facets.count(k) > 0;
        covered.insert(k);
      }
    }
    r.expect(what + " orbit sizes", join(expected), join(observed));
    r.expect_true(what + " orbits are facets and cover them exactly", all_present && covered == facets,
                  str(covered.size()) + " catalog inequalities, " + (all_present ? "all" : "not all") + " facets");
  };
  const auto se_catalog = catalog_se_n4();
  const auto specific_catalog = catalog_specific_n4();
  match(se_catalog, se_facets, "SE catalog");
  match(specific_catalog, other_facets, "specific catalog");

  bool fam_forms_agree = true;
  for (const auto& e : se_catalog) {
    fam_forms_agree = fam_forms_agree && e.fam_representative && fam_from_char_ineq(e.representative) == *e.fam_representative;
  }
  r.expect_true("SE catalog fam forms translate their char forms", fam_forms_agree);

  bool certificates_ok = true;
  std::size_t certified = 0;
  for (const auto& e : specific_catalog) {
    if (e.certificate.empty()) continue;
    ++certified;
    certificates_ok = certificates_ok && e.fam_representative &&
                      combine_certificate(n, e.certificate) == *e.fam_representative &&
                      fam_from_char_ineq(e.representative) == *e.fam_representative;
  }
  r.expect_true("non-zero-bound specific facet is a combination of nonneg and convexity",
                certificates_ok && certified == 1, str(certified) + " certified type(s)");

  std::size_t extreme = 0;
  for (const auto& k : se_facets) {
    const auto z = CharVector::from_dense(n, keys, k.first);
    try {
      extreme += is_extreme(to_set_function(moebius_up(z)));
    } catch (const std::invalid_argument&) {
    }
  }
  r.expect("SE facet set functions that are extreme supermodular", "37", str(extreme));

  if (!options.stretch) {
    r.skip("family-variable polytope facets", "135", "stretch steps not requested");
    r.skip("vertices of the SE-facet relaxation", "1329", "stretch steps not requested");
    return r;
  }

  try {
    const HRep fvp_h = hull(fam_polytope(n, dags), options.dd);
    r.expect("family-variable polytope facets", "135", str(fvp_h.inequalities.size()));
  } catch (const BudgetExceeded& e) {
    r.budget_exhausted = true;
    r.skip("family-variable polytope facets", "135", budget_reason(e));
  }

  try {
    std::vector<FamInequality> se_fam;
    for (const auto& k : se_facets) {
      se_fam.push_back(fam_from_char_ineq(CharInequality::from_dense(n, DenseInequality{k.first, k.second, ""})));
    }
    const VRep star = vertices_from_inequalities(fam_constraints(n, se_fam), options.dd);
    std::size_t fractional = 0;
    for (const auto& p : star.points) fractional += !is_integral(p);
    r.expect("vertices of the SE-facet relaxation", "1329", str(star.points.size()));
    r.expect("fractional vertices of the SE-facet relaxation", "786", str(fractional));
    const auto fkeys = enumerate_family_indices(n);
    std::vector<std::vector<int>> perms;
    std::vector<int> perm{0, 1, 2, 3};
    do {
      perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::set<RationalVector> types;
    for (const auto& p : star.points) {
      if (is_integral(p)) continue;
      const FamVector v = FamVector::from_dense(n, fkeys, p);
      RationalVector least = p;
      for (const auto& q : perms) least = std::min(least, permute(v, q).to_dense(fkeys));
      types.insert(std::move(least));
    }
    r.expect("permutation types of fractional vertices", "37", str(types.size()));
    std::size_t found = 0, index = 0;
    const GroundSet gs = GroundSet::letters(n);
    for (const auto& w : fvp_star_witnesses()) {
      ++index;
      const auto dense = w.to_dense(fkeys);
      if (std::binary_search(star.points.begin(), star.points.end(), dense)) {
        ++found;
        continue;
      }
      bool relabeled = false;
      for (const auto& q : perms) {
        relabeled = relabeled || std::binary_search(star.points.begin(), star.points.end(), permute(w, q).to_dense(fkeys));
      }
      if (!relabeled) r.notes.push_back("witness " + std::to_string(index) + " is not a vertex under any relabeling");
      // Report the closest vertex by number of differing coordinates.
      std::size_t best = dense.size() + 1;
      const RationalVector* nearest = nullptr;
      for (const auto& p : star.points) {
        std::size_t diff = 0;
        for (std::size_t i = 0; i < p.size(); ++i) diff += p[i] != dense[i];
        if (diff < best) {
          best = diff;
          nearest = &p;
        }
      }
      std::string detail = "witness " + std::to_string(index) + " is not a vertex; nearest vertex differs in";
      for (std::size_t i = 0; nearest && i < dense.size(); ++i) {
        if ((*nearest)[i] != dense[i]) {
          detail += " " + format_family_index(gs, fkeys[i]) + " (" + format_rational((*nearest)[i]) + " vs " +
                    format_rational(dense[i]) + ")";
        }
      }
      r.notes.push_back(detail);
    }
    r.expect("published fractional witnesses among the vertices", "3", str(found));
  } catch (const BudgetExceeded& e) {
    r.budget_exhausted = true;
    r.skip("vertices of the SE-facet relaxation", "1329", budget_reason(e));
  }
  return r;
}

// ---------------------------------------------------------------- SE optimal values

VerificationReport verify_theorem3(int n, int trials, const VerifyOptions& options) {
  if (n != 3 && n != 4) throw std::invalid_argument("optimal-value comparison supports n = 3 and n = 4");
  if (trials < 0) throw std::invalid_argument("trials must be non-negative");
  VerificationReport r;
  r.pipeline = "theorem3-n" + std::to_string(n);
  Timer timer(r);

  const auto dags = enumerate_dags(n);
  const VRep fvp = fam_polytope(n, dags);
  const HRep cip_h = hull(char_polytope(n), options.dd);
  const auto ckeys = enumerate_cai(n);
  const auto one = one_imset(n).to_dense(ckeys);

  std::vector<FamInequality> avoid_zero, se_only;
  for (const auto& f : cip_h.inequalities) {
    const auto fam = fam_from_char_ineq(CharInequality::from_dense(n, f));
    if (sgn(f.bound) != 0) avoid_zero.push_back(fam);
    if (sgn(f.slack(one)) == 0) se_only.push_back(fam);
  }
  const HRep reduced = fam_constraints(n, avoid_zero);
  const HRep se_reduced = fam_constraints(n, se_only);
  r.notes.push_back(std::to_string(avoid_zero.size()) + " facets avoid the 0-imset, " + std::to_string(se_only.size()) +
                    " contain the 1-imset");

  auto best_code = [&](const RationalVector& obj) {
    Rational best = dot(obj, fvp.points.front());
    for (const auto& p : fvp.points) best = std::max(best, dot(obj, p));
    return best;
  };

  const auto fkeys = enumerate_family_indices(n);
  {
    const auto obj = objective_from_setfn(to_char_vector(cluster_supermodular(n, Subset(0b11), 1))).to_dense(fkeys);
    r.expect("cluster {a,b}, k=1 objective: best code / LP", "1/1",
             best_code(obj).get_str() + "/" + lp_maximize(obj, reduced).optimum.get_str());
  }
  {
    const RationalVector obj(fkeys.size(), Rational(0));
    r.expect("zero objective: best code / LP", "0/0",
             best_code(obj).get_str() + "/" + lp_maximize(obj, reduced).optimum.get_str());
  }

  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(n));
  std::uniform_int_distribution<int> coef(-5, 5);
  std::size_t agree = 0, agree_se = 0;
  std::string first_mismatch;
  for (int t = 0; t < trials; ++t) {
    CharVector m(n);
    for (Subset s : ckeys) m.set(s, coef(rng));
    const auto obj = objective_from_setfn(m).to_dense(fkeys);
    const Rational expected = best_code(obj);
    const Rational lp = lp_maximize(obj, reduced).optimum;
    if (lp == expected) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = "trial " + std::to_string(t) + ": " + expected.get_str() + " vs " + lp.get_str();
    }
    if (n == 4) agree_se += lp_maximize(obj, se_reduced).optimum == expected;
  }
  r.expect("random SE objectives with equal optima (0-imset-avoiding facets)", str(static_cast<std::size_t>(trials)),
           str(agree));
  if (!first_mismatch.empty()) r.notes.push_back("first mismatch " + first_mismatch);
  if (n == 4) {
    r.expect("random SE objectives with equal optima (SE facets only)", str(static_cast<std::size_t>(trials)),
             str(agree_se));
  }
  return r;
}

// ---------------------------------------------------------------- n = 5

VerificationReport verify_counterexample(const VerifyOptions&) {
  VerificationReport r;
  r.pipeline = "counterexample";
  Timer timer(r);
  constexpr int n = 5;
  const auto c = counterexample_constants();

  // (1)
  r.expect_true("fam translation of the char inequality equals the fam inequality",
                fam_from_char_ineq(c.ineq20) == c.ineq21);

  // (2)
  const auto dags = enumerate_dags(n);
  const auto fkeys = enumerate_family_indices(n);
  const auto ckeys = enumerate_cai(n);
  const DenseInequality ineq = c.ineq21.to_dense();
  std::vector<RationalVector> tight;
  std::set<RationalVector> tight_char;
  std::size_t violated = 0;
  for (const auto& g : dags) {
    const auto p = fam_vector(g).to_dense(fkeys);
    const int s = sgn(ineq.slack(p));
    if (s < 0) ++violated;
    if (s == 0) {
      tight.push_back(p);
      tight_char.insert(char_imset(g).to_dense(ckeys));
    }
  }
  r.notes.push_back(std::to_string(dags.size()) + " acyclic directed graphs enumerated");
  r.expect("DAG-codes violating / tight at the fam inequality", "0/153",
           str(violated) + "/" + str(tight.size()));

  // (3)
  r.expect("dimension of the tight face", "53", str(affine_rank(tight) - 1));

  // (4)
  const std::vector<RationalVector> tight_char_v(tight_char.begin(), tight_char.end());
  const std::size_t char_rank = affine_rank(tight_char_v);
  r.expect("tight characteristic imsets / affine rank / face dimension", "59/26/25",
           str(tight_char_v.size()) + "/" + str(char_rank) + "/" + str(char_rank - 1));

  // (5)
  const auto centre = centroid(tight);
  const auto dagger = c.fam_dagger.to_dense(fkeys);
  const Rational value = dot(c.obj_star.to_dense(fkeys), dagger);
  r.expect_true("centroid of the tight codes equals the published point", centre == dagger);
  r.expect("objective value at the published point", "16", value.get_str());

  // (6)
  std::size_t conv_tight = 0;
  for (const auto& cv : modified_convexity(n)) conv_tight += sgn(cv.slack(c.fam_dagger)) == 0;
  r.expect("convexity constraints tight at the published point", "0", str(conv_tight));

  // (7) eps = min over inequalities with positive value v at the point of (u - v) / (2v).
  std::vector<FamInequality> checked = modified_convexity(n);
  for (const auto& cl : cluster_family_fam(n)) checked.push_back(cl);
  bool slacks_positive = true;
  std::optional<Rational> eps;
  for (const auto& q : checked) {
    const Rational v = q.value(c.fam_dagger);
    if (sgn(q.bound - v) <= 0) slacks_positive = false;
    if (sgn(v) > 0) {
      const Rational e = (q.bound - v) / (2 * v);
      if (!eps || e < *eps) eps = e;
    }
  }
  r.expect_true("all convexity and cluster slacks positive at the published point", slacks_positive && eps.has_value());
  if (!eps) return r;
  r.notes.push_back("epsilon = " + format_rational(*eps));
  r.notes.push_back(
      "validity for every SE facet rests on the centroid lying in the relative interior of the tight face; only the "
      "cluster inequalities and the fam inequality are checked by computation");
  const FamVector star = Rational(1 + *eps) * c.fam_dagger;
  bool nonneg_ok = true;
  for (const auto& q : nonneg_constraints(n)) nonneg_ok = nonneg_ok && q.satisfied_by(star);
  std::size_t strict = 0;
  for (const auto& q : checked) strict += sgn(q.slack(star)) > 0;
  const Rational star_value = scalar_product(c.obj_star, star);
  r.expect_true("perturbed point: nonneg satisfied, 5 convexity and 49 clusters strict, value above 16",
                nonneg_ok && checked.size() == 54 && strict == 54 && star_value > 16,
                "nonneg " + std::string(nonneg_ok ? "ok" : "violated") + ", strict " + str(strict) + "/" +
                    str(checked.size()) + ", value " + format_rational(star_value));
  return r;
}

VerificationReport verify_counterexample_lp() {
  VerificationReport r;
  r.pipeline = "counterexample-lp";
  Timer timer(r);
  constexpr int n = 5;
  const auto c = counterexample_constants();
  const auto fkeys = enumerate_family_indices(n);
  const auto obj = c.obj_star.to_dense(fkeys);

  auto with = cluster_family_fam(n);
  with.push_back(c.ineq21);
  const Rational bounded = lp_maximize(obj, fam_constraints(n, with)).optimum;
  const Rational relaxed = lp_maximize(obj, fam_constraints(n, cluster_family_fam(n))).optimum;
  r.expect("LP optimum with clusters and the fam inequality", "16", bounded.get_str());
  r.expect_true("LP optimum with clusters only exceeds 16", relaxed > 16, format_rational(relaxed));
  return r;
}

// ---------------------------------------------------------------- faces closed under equivalence

VerificationReport explore_conjecture(int n, const VerifyOptions& options) {
  if (n != 3) throw std::invalid_argument("exhaustive face exploration is only feasible at n = 3");
  VerificationReport r;
  r.pipeline = "conjecture-n3";
  Timer timer(r);

  const auto dags = enumerate_dags(n);
  const VRep fvp = fam_polytope(n, dags);
  const HRep h = hull(fvp, options.dd);
  const std::uint32_t all = (std::uint32_t{1} << dags.size()) - 1;

  std::vector<std::uint32_t> facet_masks;
  for (const auto& f : h.inequalities) {
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < fvp.points.size(); ++i) {
      if (sgn(f.slack(fvp.points[i])) == 0) m |= std::uint32_t{1} << i;
    }
    facet_masks.push_back(m);
  }
  // Every nonempty face is an intersection of facets (the polytope itself is the empty intersection).
  std::set<std::uint32_t> faces{all};
  std::vector<std::uint32_t> frontier{all};
  while (!frontier.empty()) {
    const std::uint32_t f = frontier.back();
    frontier.pop_back();
    for (std::uint32_t g : facet_masks) {
      const std::uint32_t x = f & g;
      if (x != 0 && faces.insert(x).second) frontier.push_back(x);
    }
  }

  auto members = [&](std::uint32_t mask) {
    std::vector<Dag> out;
    for (std::size_t i = 0; i < dags.size(); ++i) {
      if ((mask >> i) & 1u) out.push_back(dags[i]);
    }
    return out;
  };

  std::size_t closed = 0, violations = 0;
  for (std::uint32_t f : faces) {
    const auto set = members(f);
    if (!is_closed_under_equivalence(set, dags)) continue;
    ++closed;
    if (!is_se_face(set).se_face) {
      ++violations;
      std::string names;
      for (std::size_t i = 0; i < dags.size(); ++i) {
        if ((f >> i) & 1u) names += (names.empty() ? "" : ",") + std::to_string(i);
      }
      r.notes.push_back("not SE: graphs " + names);
    }
  }
  r.notes.push_back(std::to_string(faces.size()) + " nonempty faces, " + std::to_string(closed) +
                    " closed under Markov equivalence");
  r.expect("closed faces that are not SE faces", "0", str(violations));

  std::uint32_t full = 0;
  for (std::size_t i = 0; i < dags.size(); ++i) {
    if (is_full_graph(dags[i])) full |= std::uint32_t{1} << i;
  }
  r.expect_true("the full graphs form an SE face", faces.count(full) > 0 && is_se_face(members(full)).se_face);
  return r;
}

std::string report_table(const VerificationReport& report) {
  std::ostringstream out;
  std::size_t width = 11;
  for (const auto& c : report.checks) width = std::max(width, c.description.size());
  char line[64];
  std::snprintf(line, sizeof line, "%.2f", report.elapsed_seconds);
  out << "pipeline " << report.pipeline << " (" << line << " s)\n";
  for (const auto& c : report.checks) {
    const char* status = c.skipped ? "SKIP" : (c.pass ? "PASS" : "FAIL");
    out << status << "  " << c.description << std::string(width - c.description.size(), ' ') << "  expected "
        << c.expected << "  observed " << c.observed << '\n';
  }
  for (const auto& note : report.notes) out << "note  " << note << '\n';
  out << (report.passed() ? "overall PASS" : "overall FAIL") << '\n';
  return out.str();
}

}  // namespace bnpoly
