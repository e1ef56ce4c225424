// SPDX-License-Identifier: MIT
#include <algorithm>
#include <random>

#include "apk/core.hpp"
#include "doctest.h"

using namespace apk;

namespace {
HalfInt h(const char* s) { return HalfInt::parse(s); }
}  // namespace

TEST_CASE("half-integer parsing and printing") {
  CHECK(h("5/2").twice() == 5);
  CHECK(h("2.5").twice() == 5);
  CHECK(h("-0.5").twice() == -1);
  CHECK(h("-1/2") == h("-0.5"));
  CHECK(h("3").twice() == 6);
  CHECK(h("4/2") == HalfInt::of(2));
  CHECK(h("7/2").str() == "7/2");
  CHECK(h("-3").str() == "-3");
  CHECK_THROWS_AS(h("1/3"), ParseError);
  CHECK_THROWS_AS(h("2.25"), ParseError);
  CHECK_THROWS_AS(h("abc"), ParseError);
  CHECK_THROWS_AS(h(""), ParseError);
}

TEST_CASE("half-integer arithmetic") {
  CHECK(h("1/2") + h("1/2") == HalfInt::of(1));
  CHECK((h("5/2") - 2).str() == "1/2");
  CHECK(-h("3/2") == h("-3/2"));
  CHECK(abs(h("-7/2")) == h("7/2"));
  CHECK(h("1/2").is_integer() == false);
  CHECK(steps(h("1/2"), h("7/2")) == 3);
  CHECK_THROWS_AS(steps(h("0"), h("1/2")), PreconditionError);
  CHECK_THROWS_AS(h("1/2").to_int(), PreconditionError);
}

TEST_CASE("cusp line validation") {
  CuspLine l;
  l.alpha = h("5/2");
  l.parity = Parity::Even;
  CHECK_NOTHROW(l.validate());
  l.parity = Parity::Odd;
  CHECK_THROWS_AS(l.validate(), PreconditionError);
  l.alpha = h("0");
  CHECK_NOTHROW(l.validate());
  l.alpha = h("-1");
  CHECK_THROWS_AS(l.validate(), PreconditionError);
}

TEST_CASE("segments") {
  auto s = Segment::make(h("0"), h("1"));
  CHECK(seg_contragredient(s) == Segment::make(h("-1"), h("0")));
  CHECK(seg_contragredient(Segment::point(h("5/2"))) == Segment::point(h("-5/2")));
  CHECK(Segment::make(h("3"), h("2")) == Segment::unit());
  CHECK(Segment::make(h("-4"), h("-5")) == Segment::unit());
  CHECK(seg_contragredient(Segment::make(h("3"), h("2"))) == Segment::unit());
  CHECK_THROWS_AS(Segment::make(h("3"), h("1")), PreconditionError);
  CHECK_THROWS_AS(Segment::make(h("0"), h("1/2")), PreconditionError);
  CHECK(s.length() == 2);
  CHECK(s.str() == "[0,1]");
  CHECK(Segment::point(h("1/2")).str() == "[1/2]");
  for (int x = -4; x <= 4; ++x)
    for (int y = x; y <= 4; ++y) {
      auto t = Segment::make(HalfInt::of(x), HalfInt::of(y));
      CHECK(seg_contragredient(seg_contragredient(t)) == t);
    }
}

TEST_CASE("word canonicalization") {
  auto a = GLGen::point(HalfInt::of(1));
  auto b = GLGen::point(HalfInt::of(0));
  CHECK(word_canon({a, b}) == word_canon({b, a}));
  CHECK(word_canon({a, b}).factors().front() == b);
  CHECK(GLGen::zeta(HalfInt::of(2), HalfInt::of(2)) == GLGen::delta(HalfInt::of(2), HalfInt::of(2)));
  CHECK(word_canon({}).is_unit());
  CHECK(GLWord::of(GLGen::delta(HalfInt::of(2), HalfInt::of(1))).is_unit());

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 100; ++t) {
    std::vector<GLGen> f;
    int n = 1 + t % 5;
    for (int i = 0; i < n; ++i) {
      int x = d(rng), len = std::abs(d(rng));
      f.push_back(t % 2 ? GLGen::zeta(HalfInt::of(x), HalfInt::of(x + len))
                        : GLGen::delta(HalfInt::of(x), HalfInt::of(x + len)));
    }
    auto w = word_canon(f);
    CHECK(word_canon(w.factors()) == w);
    auto g = f;
    std::shuffle(g.begin(), g.end(), rng);
    CHECK(word_canon(g) == w);
    CHECK(contragredient(contragredient(w)) == w);
  }
}

TEST_CASE("formal sums") {
  using S = FormalSum<int>;
  S a = S::single(1, 3), b = S::single(2, -1), c = S::single(1, -3);
  CHECK((a + b) + c == a + (b + c));
  CHECK(a + S{} == a);
  CHECK((a + c).empty());
  CHECK((a - a).empty());
  CHECK((a * 0).empty());
  CHECK(a.coeff(1) == 3);
  CHECK(a.coeff(5) == 0);
  CHECK(S::single(1, 2).leq(a));
  CHECK_FALSE(a.leq(S::single(1, 2)));
  const Coeff big = Coeff{1} << 60;
  S x = S::single(0, big), y = S::single(0, big - 1);
  CHECK((x + y).coeff(0) == 2 * big - 1);
  CHECK((x - y).coeff(0) == 1);
  CHECK_THROWS_AS(x * 16, OverflowError);
}

TEST_CASE("exponent strings") {
  auto s = ExpString::of({h("1"), h("1/2")});
  CHECK(s.str() == "(1,1/2)");
  CHECK((s + s).size() == 4);
  ExpString t{{{1, h("2")}}};
  CHECK(t.str() == "(r1:2)");
}
