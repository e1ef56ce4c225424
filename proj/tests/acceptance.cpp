// SPDX-License-Identifier: MIT
//
// One PASS/FAIL line per acceptance criterion. Every comparison is exact
// (labels, coefficients and multiplicities are integers or symbols); the only
// numeric tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "apk/suites.hpp"

using namespace apk;

namespace {

constexpr double kHopfClosedLimit = 10.0;
constexpr double kHopfRandomLimit = 30.0;
constexpr double kFamilyLimit = 60.0;
constexpr double kDefaultLimit = 120.0;
constexpr int kRandomWords = 200;
constexpr int kMaxLetters = 10;
constexpr int kBlocks = 500;
constexpr int kPairs = 100;
constexpr std::uint32_t kSeed = 20240611;
constexpr unsigned kJobs = 4;

HalfInt h(int twice) { return HalfInt::from_twice(twice); }

struct Criterion {
  int id;
  std::string name;
  double limit;
  std::function<std::vector<Suite>()> run;
  std::function<std::string(const std::vector<Suite>&, bool&)> extra;  // optional extra condition
};

std::vector<Suite> family_and_duality(const std::vector<BaseCusp>& bases, FamilyKind kind, int lo, int hi) {
  std::vector<Suite> out;
  for (const auto& b : bases) {
    out.push_back(suite_family_grid(b, kind, lo, hi, kJobs));
    out.push_back(suite_duality_grid(b, kind, lo, hi, kJobs));
  }
  return out;
}

std::string expect_label_count(const std::vector<Suite>& suites, const std::string& case_name, std::size_t want,
                               bool& ok) {
  std::size_t seen = 0;
  for (const auto& s : suites)
    for (const auto& c : s.checks)
      if (c.name == case_name) {
        ++seen;
        if (!c.data.contains("count") || c.data["count"].get<std::size_t>() != want) ok = false;
      }
  if (seen == 0) ok = false;
  return case_name + " x" + std::to_string(seen) + " with " + std::to_string(want) + " labels";
}

}  // namespace

int main() {
  std::vector<Criterion> crit{
      {1, "M* closed forms on Delta and Zeta segments in [-4,4]", kHopfClosedLimit,
       [] { return std::vector<Suite>{suite_hopf_closed_form(HalfInt::of(-4), HalfInt::of(4))}; },
       [](const std::vector<Suite>& s, bool& ok) {
         if (s[0].checks.size() != 162) ok = false;
         return std::to_string(s[0].checks.size()) + " segments";
       }},
      {2, "coassociativity and multiplicativity on random words", kHopfRandomLimit,
       [] { return std::vector<Suite>{suite_hopf_random(kRandomWords, kMaxLetters, kSeed)}; }, nullptr},
      {3, "recursion endpoints delta([alpha,alpha+n];sigma), n in [0,4]", kDefaultLimit,
       [] { return std::vector<Suite>{suite_recursion_endpoints({h(3), h(4), h(5), h(6)}, 4)}; }, nullptr},
      {4, "alpha > 1 family, recursion vs closed form, alpha in {3/2,5/2}", kFamilyLimit,
       [] {
         return std::vector<Suite>{suite_family_grid(make_standard_base(h(3)), FamilyKind::RedGt1, 0, 3, kJobs),
                                   suite_family_grid(make_standard_base(h(5)), FamilyKind::RedGt1, 0, 3, kJobs)};
       },
       nullptr},
      {5, "alpha > 1 duality and endpoint identities", kDefaultLimit,
       [] {
         std::vector<Suite> out;
         for (int t : {3, 5}) {
           BaseCusp b = make_standard_base(h(t));
           out.push_back(suite_duality_grid(b, FamilyKind::RedGt1, 0, 3, kJobs));
           out.push_back(suite_endpoints(b, 0, 3));
         }
         return out;
       },
       nullptr},
      {6, "alpha = 0 family sign rule and duality", kDefaultLimit,
       [] { return family_and_duality({make_standard_base(h(0))}, FamilyKind::Red0, 0, 3); }, nullptr},
      {7, "alpha = 1/2 family and duality", kDefaultLimit,
       [] { return family_and_duality({make_standard_base(h(1))}, FamilyKind::RedHalf, 1, 3); }, nullptr},
      {8, "alpha = 1 family and duality, xi = +1 and -1", kDefaultLimit,
       [] {
         return family_and_duality({make_standard_base(h(2), 1), make_standard_base(h(2), -1)}, FamilyKind::Red1, 1,
                                   3);
       },
       nullptr},
      {9, "critical catalog at alpha in {0,1/2,1,3/2,2,5/2,3}", kDefaultLimit,
       [] {
         std::vector<Suite> out;
         for (int t = 0; t <= 6; ++t) out.push_back(suite_catalog(make_standard_base(h(t)), kJobs));
         return out;
       },
       [](const std::vector<Suite>& s, bool& ok) {
         return expect_label_count(s, "(a-2,a-1,a)", 8, ok) + "; " + expect_label_count(s, "(1/2,1/2,1/2)", 5, ok);
       }},
      {10, "complementary-series lemma at alpha in {2,3}", kDefaultLimit,
       [] {
         return std::vector<Suite>{suite_appendix(make_standard_base(h(4))), suite_appendix(make_standard_base(h(6)))};
       },
       nullptr},
      {11, "structural invariants", kDefaultLimit,
       [] { return std::vector<Suite>{suite_structural(kBlocks, kPairs, kSeed)}; }, nullptr},
  };

  int failed = 0;
  for (const auto& c : crit) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<Suite> suites;
    std::string error;
    try {
      suites = c.run();
    } catch (const std::exception& e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = error.empty() && !suites.empty();
    std::size_t passed = 0, total = 0, skipped = 0;
    for (const auto& s : suites) {
      ok = ok && s.pass();
      passed += s.passed();
      skipped += s.skipped();
      total += s.checks.size();
    }
    std::string extra;
    if (c.extra && error.empty()) extra = c.extra(suites, ok);
    if (secs > c.limit) ok = false;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s (limit %.0f s)", secs, c.limit);
    std::cout << (ok ? "PASS" : "FAIL") << " [" << c.id << "] " << c.name << ": " << passed << "/" << total
              << " checks" << (skipped ? ", " + std::to_string(skipped) + " skipped" : "")
              << (extra.empty() ? "" : ", " + extra) << ", " << timing << "\n";
    if (!error.empty()) std::cout << "    error: " << error << "\n";
    for (const auto& s : suites)
      for (const auto& k : s.checks)
        if (!k.pass && !k.skipped) std::cout << "    " << s.name << " / " << k.name << ": " << k.detail << "\n";
    if (!ok) ++failed;
  }
  std::cout << (crit.size() - failed) << "/" << crit.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
