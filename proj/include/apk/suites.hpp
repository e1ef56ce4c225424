// SPDX-License-Identifier: MIT
//
// Verification suites over grids of cases. Each suite is a list of named
// checks; a check that could not run because a construction is out of scope
// is marked skipped rather than passed.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apk/json_io.hpp"

namespace apk {

struct Check {
  std::string name;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  Json data;
};

struct Suite {
  std::string name;
  std::vector<Check> checks;
  bool pass() const;  // no failed check and at least one that ran
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  Json to_json() const;
};

// M* from its definition vs the closed forms, on every Delta and Zeta segment
// [x,y] with x <= y in [lo, hi] and y - x integral
Suite suite_hopf_closed_form(HalfInt lo, HalfInt hi);
// coassociativity of m* and multiplicativity of m*, M* on random words
Suite suite_hopf_random(int words, int max_letters, std::uint32_t seed);
// the delta([alpha,alpha+n];sigma) members with every certificate of multiplicity 1
Suite suite_recursion_endpoints(const std::vector<HalfInt>& alphas, int n_max);
// recursion vs closed form for m != n in [lo, hi], every eps rule of the kind
Suite suite_family_grid(const BaseCusp& base, FamilyKind kind, int lo, int hi, unsigned jobs = 1);
// parameter swap vs the closed form of the dual label, same grid
Suite suite_duality_grid(const BaseCusp& base, FamilyKind kind, int lo, int hi, unsigned jobs = 1);
// endpoint identities for n = m in [n_lo, n_hi] and the diagonal m = n in [0, n_hi]
Suite suite_endpoints(const BaseCusp& base, int n_lo, int n_hi);
// catalog cases with counts, criticality and pairings
Suite suite_catalog(const BaseCusp& base, unsigned jobs = 1);
// the complementary-series lemma for every admissible x
Suite suite_appendix(const BaseCusp& base);
// block dimension identity, aubert involution, reduce_step weight and
// termination, Jac commutation
Suite suite_structural(int blocks, int pairs, std::uint32_t seed);

// the family kind living at the base's alpha, if any
std::optional<FamilyKind> family_kind_at(HalfInt alpha);

}  // namespace apk
