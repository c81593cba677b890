// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails. Criteria 5 and 6 run the registered property suites.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bnpoly/verify.hpp"

using namespace bnpoly;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string failed_checks(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    if (c.pass || c.skipped) continue;
    out += "\n    failed: " + c.description + " (expected " + c.expected + ", observed " + c.observed + ")";
  }
  for (const auto& c : r.checks) {
    if (c.skipped) out += "\n    skipped: " + c.description + " (" + c.observed + ")";
  }
  return out;
}

Outcome from_report(const VerificationReport& r, double limit_seconds) {
  Outcome o;
  o.pass = r.passed() && !r.budget_exhausted && r.elapsed_seconds < limit_seconds;
  std::ostringstream s;
  s << r.checks.size() << " checks, " << r.elapsed_seconds << " s";
  if (r.elapsed_seconds >= limit_seconds) s << " (over the " << limit_seconds << " s limit)";
  if (r.budget_exhausted) s << ", budget exhausted";
  o.detail = s.str() + failed_checks(r);
  if (!o.pass) {
    for (const auto& note : r.notes) o.detail += "\n    note: " + note;
  }
  return o;
}

// Runs the named doctest cases. The match count guards against filters that silently match nothing.
Outcome run_suites(const std::vector<std::string>& names) {
  std::string filter;
  for (const auto& n : names) filter += (filter.empty() ? "" : ",") + n;
  std::ostringstream log;
  doctest::Context ctx;
  ctx.setOption("test-case", filter.c_str());
  ctx.setOption("no-intro", true);
  ctx.setOption("no-version", true);
  ctx.setOption("no-colors", true);
  ctx.setCout(&log);
  const int failures = ctx.run();
  // summary line: "[doctest] test cases: N | N passed | ..."
  std::size_t matched = 0;
  const std::string text = log.str();
  const auto at = text.rfind("test cases:");
  if (at != std::string::npos) matched = std::stoul(text.substr(at + 11));

  Outcome o;
  o.pass = failures == 0 && matched == names.size();
  o.detail = std::to_string(matched) + " of " + std::to_string(names.size()) + " suites matched";
  if (!o.pass) o.detail += "\n" + log.str();
  return o;
}

}  // namespace

int main() {
  VerifyOptions stretch;
  stretch.stretch = true;
  stretch.dd.budget.wall_time = std::chrono::hours(12);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"verify n3", [] { return from_report(verify_n3(), 10); }},
      {"verify n4 core", [] { return from_report(verify_n4(), 30 * 60); }},
      {"n4 stretch: FVP hull and FVP* vertices with the published witnesses",
       [&] { return from_report(verify_n4(stretch), 12 * 3600); }},
      {"verify counterexample", [] { return from_report(verify_counterexample(), 3600); }},
      {"binomial identities", [] { return run_suites({"alternating binomial sum identity"}); }},
      {"property suites",
       [] {
         return run_suites({"set function parametrization round trip", "char objective reproduces values on every DAG",
                            "cluster inequalities in both spaces",
                            "SE inequalities from supermodular functions are valid and class-closed",
                            "Moebius pair are mutually inverse", "SE objectives are constant on Markov classes"});
       }},
      {"optimum equivalence for SE objectives and the n5 LP",
       [] {
         Outcome o;
         const auto r3 = verify_theorem3(3, 100);
         const auto r4 = verify_theorem3(4, 25);
         const auto lp = verify_counterexample_lp();
         o.pass = r3.passed() && r4.passed() && lp.passed();
         o.detail = "n3 " + std::to_string(r3.checks.size()) + " checks, n4 " + std::to_string(r4.checks.size()) +
                    " checks, LP " + std::to_string(lp.checks.size()) + " checks" + failed_checks(r3) +
                    failed_checks(r4) + failed_checks(lp);
         return o;
       }},
      {"explore_conjecture(3)", [] { return from_report(explore_conjecture(3), 3600); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
              << o.detail << std::endl;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
