// SPDX-License-Identifier: MIT
#include "apk/critical.hpp"
#include "doctest.h"

using namespace apk;

namespace {
HalfInt h(const char* s) { return HalfInt::parse(s); }
std::vector<HalfInt> hs(std::initializer_list<const char*> xs) {
  std::vector<HalfInt> v;
  for (const char* x : xs) v.push_back(h(x));
  return v;
}
}  // namespace

TEST_CASE("critical type") {
  CuspLine l{0, "rho", h("2"), Parity::Odd, std::nullopt};
  CHECK(is_critical(hs({"1", "2", "3"}), l));
  CHECK(is_critical(hs({"-1", "2", "2"}), l));
  CHECK_FALSE(is_critical(hs({"1", "3"}), l));
  CHECK_FALSE(is_critical(hs({"3", "4"}), l));
}

TEST_CASE("catalog sizes") {
  auto cat = catalog(make_standard_base(h("3")));
  auto it = std::find_if(cat.begin(), cat.end(), [](const CriticalCase& c) { return c.name == "(a-2,a-1,a)"; });
  REQUIRE(it != cat.end());
  CHECK(it->labels.size() == 8);
  auto half = catalog(make_standard_base(h("1/2")));
  auto jt = std::find_if(half.begin(), half.end(), [](const CriticalCase& c) { return c.name == "(1/2,1/2,1/2)"; });
  REQUIRE(jt != half.end());
  CHECK(jt->labels.size() == 5);
}

TEST_CASE("catalog verifies at alpha = 2") {
  for (const auto& r : verify_catalog(make_standard_base(h("2")), 2)) {
    INFO(r.name);
    CHECK(r.pass);
    CHECK(r.labels.size() == r.expected_count);
  }
}

TEST_CASE("complementary-series lemma") {
  auto r = appendix_lemma(make_standard_base(h("2")), h("1"));
  CHECK(r.pass);
  REQUIRE(r.got.has_value());
  CHECK(r.got->str() == "L([1];sigma)");
  CHECK(r.admissible);
}

TEST_CASE("support and parameters") {
  auto base = make_standard_base(h("2"));
  auto d = LanglandsDatum::make({Segment::point(h("1"))}, TemperedSymbol::gen_steinberg(h("2"), 0));
  CHECK(support(d) == hs({"1", "2"}));
  auto seg = psi_segments({JordanBlock::make(3, 1)});
  REQUIRE(seg.size() == 1);
  CHECK(seg[0] == Segment::make(h("-1"), h("1")));
  (void)base;
}
