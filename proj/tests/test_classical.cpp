// SPDX-License-Identifier: MIT
#include "apk/classical.hpp"
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

TEST_CASE("standard bases") {
  auto b2 = make_standard_base(h("2"), -1);
  CHECK(b2.xi() == -1);
  CHECK(b2.base.eps_of(JordanBlock::make(1, 1)) == -1);
  CHECK(b2.base.eps_of(JordanBlock::make(3, 1)) == 1);
  auto b52 = make_standard_base(h("5/2"));
  CHECK(b52.base.eps_of(JordanBlock::make(2, 1)) == -1);
  CHECK(b52.base.eps_of(JordanBlock::make(4, 1)) == 1);
  CHECK(make_standard_base(h("0")).base.psi.on_line(0).empty());
  CHECK_THROWS_AS(make_standard_base(h("-1")), PreconditionError);
}

TEST_CASE("non-cuspidal eps_sigma is rejected") {
  auto b = make_standard_base(h("2"));
  b.base.eps[JordanBlock::make(3, 1)] = b.base.eps_of(JordanBlock::make(1, 1));
  b.base.eps[JordanBlock::make(1, 1, 1)] = 1;
  CHECK_THROWS(b.validate());
}

TEST_CASE("tempered symbols print in the usual notation") {
  CHECK(TemperedSymbol::cusp(h("5/2")).str() == "sigma");
  CHECK(TemperedSymbol::gen_steinberg(h("5/2"), 0).str() == "delta([5/2];sigma)");
  CHECK(TemperedSymbol::gen_steinberg(h("2"), 2).str() == "delta([2,4];sigma)");
  auto d = LanglandsDatum::make({Segment::point(h("1"))}, TemperedSymbol::gen_steinberg(h("2"), 0));
  CHECK(d.str() == "L([1];delta([2];sigma))");
}

TEST_CASE("strings of nu^x x sigma") {
  InducedExpr e{{GLGen::delta(h("5/2"), h("5/2"))}, TemperedSymbol::cusp(h("5/2"))};
  StringSum s = mu_star_cuspidal(e);
  CHECK(s.size() == 2);
  CHECK(s.coeff(str({"5/2"})) == 1);
  CHECK(s.coeff(str({"-5/2"})) == 1);
}

TEST_CASE("leading strings and envelopes") {
  auto ds = LanglandsDatum::tempered(TemperedSymbol::gen_steinberg(h("5/2"), 1));
  CHECK(leading_string(ds) == str({"7/2", "5/2"}));
  auto l = LanglandsDatum::make({Segment::point(h("1"))}, TemperedSymbol::cusp(h("2")));
  CHECK(leading_string(l) == str({"-1"}));
  CHECK(standard_module(l).gens.size() == 1);
  // the upper bound of a datum contains its leading string
  CHECK(datum_upper_bound(l).coeff(leading_string(l)) >= 1);
}
