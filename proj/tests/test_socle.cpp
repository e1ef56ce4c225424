// SPDX-License-Identifier: MIT
#include "apk/socle.hpp"
#include "doctest.h"

using namespace apk;

namespace {
HalfInt h(const char* s) { return HalfInt::parse(s); }
ExpString str(std::initializer_list<const char*> xs) {
  ExpString s;
  for (const char* x : xs) s.v.push_back({0, h(x)});
  return s;
}
}  // namespace

TEST_CASE("trace equivalence") {
  CHECK(trace_equivalent(str({"1", "3"}), str({"3", "1"})));
  CHECK_FALSE(trace_equivalent(str({"1", "2"}), str({"2", "1"})));
  CHECK(trace_equivalent(str({"1", "1/2"}), str({"1/2", "1"})));  // not linked
  CHECK(trace_equivalent(str({"0", "2", "-1"}), str({"2", "0", "-1"})));
  auto rest = strip_front(str({"3", "1", "0"}), Letter{0, h("1")});
  REQUIRE(rest.has_value());
  CHECK(*rest == str({"3", "0"}));
  CHECK_FALSE(strip_front(str({"2", "1"}), Letter{0, h("1")}).has_value());
}

TEST_CASE("nu^alpha x sigma has socle delta([alpha];sigma)") {
  auto base = make_standard_base(h("5/2"));
  auto sigma = LanglandsDatum::tempered(TemperedSymbol::cusp(h("5/2")));
  auto c = socle_step(base, h("5/2"), sigma);
  CHECK(c.target.str() == "delta([5/2];sigma)");
  CHECK(c.multiplicity == 1);
  auto l = socle_step(base, h("-5/2"), sigma);
  CHECK(l.target.str() == "L([5/2];sigma)");
  CHECK(l.multiplicity == 1);
}

TEST_CASE("Jac of a generalized Steinberg") {
  auto base = make_standard_base(h("5/2"));
  auto d = LanglandsDatum::tempered(TemperedSymbol::gen_steinberg(h("5/2"), 0));
  JacResult r = jac(base, d, h("5/2"));
  REQUIRE_FALSE(r.undecidable);
  CHECK(r.value.size() == 1);
  CHECK(r.value.coeff(LanglandsDatum::tempered(TemperedSymbol::cusp(h("5/2")))) == 1);
  CHECK(jac(base, d, h("3/2")).is_zero());
}

TEST_CASE("Jac commutes for non-adjacent exponents") {
  InducedExpr e{{GLGen::delta(h("1"), h("2")), GLGen::zeta(h("-3"), h("-3"))}, TemperedSymbol::cusp(h("2"))};
  CHECK(jac_commute_check(e, h("2"), h("-3")));
  CHECK(jac_commute_check(e, h("1"), h("3")));
}
