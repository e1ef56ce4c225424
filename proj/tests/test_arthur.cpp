// SPDX-License-Identifier: MIT
#include <random>

#include "apk/arthur.hpp"
#include "doctest.h"

using namespace apk;

namespace {

HalfInt h(const char* s) { return HalfInt::parse(s); }

PacketPair make_pp(std::initializer_list<std::pair<JordanBlock, int>> blocks) {
  PacketPair pp;
  pp.psi.lines[0] = CuspLine{0, "rho", h("5/2"), Parity::Even, std::nullopt};
  for (const auto& [b, e] : blocks) {
    pp.psi.blocks.push_back(b);
    pp.eps[b] = e;
  }
  pp.psi.normalize();
  return pp;
}

}  // namespace

TEST_CASE("block coordinates") {
  auto b = JordanBlock::make(6, 1);
  CHECK(b.A() == h("5/2"));
  CHECK(b.B() == h("5/2"));
  CHECK(b.zeta() == 1);
  auto c = JordanBlock::make(1, 2);
  CHECK(c.A() == h("1/2"));
  CHECK(c.B() == h("1/2"));
  CHECK(c.zeta() == -1);
  CHECK(c.delta() == -1);
  CHECK(JordanBlock::elem(5, -1) == JordanBlock::make(1, 5));
  CHECK(b.swapped() == JordanBlock::make(1, 6));
}

TEST_CASE("sum of 2j+1 over [B, A] is ab") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(1, 12);
  for (int i = 0; i < 300; ++i) {
    int a = d(rng), b = d(rng);
    if ((a + b) % 2 == 1) ++a;  // any parity works; keep a mix
    auto blk = JordanBlock::make(a, b);
    std::int64_t s = 0;
    for (HalfInt j = blk.B(); j <= blk.A(); j = j + 1) s += j.twice() + 1;
    CHECK(s == static_cast<std::int64_t>(a) * b);
  }
}

TEST_CASE("diagonal restriction and predicates") {
  AParam p;
  p.blocks = {JordanBlock::make(3, 3)};
  auto d = psi_d(p);
  REQUIRE(d.size() == 3);
  CHECK(d[0].second == 1);
  CHECK(d[2].second == 5);

  AParam q;
  q.blocks = {JordanBlock::make(3, 1), JordanBlock::make(1, 3)};
  CHECK_FALSE(is_ddr(q));
  CHECK(is_elementary(q));
  CHECK_FALSE(is_tempered(q));
  CHECK_FALSE(is_cotempered(q));

  AParam t;
  t.lines[0] = CuspLine{0, "rho", h("5/2"), Parity::Even, std::nullopt};
  t.blocks = {JordanBlock::make(2, 1), JordanBlock::make(4, 1)};
  CHECK(is_tempered(t));
  CHECK(is_ddr(t));
}

TEST_CASE("eps validation") {
  auto pp = make_pp({{JordanBlock::make(6, 1), 1}, {JordanBlock::make(1, 2), -1}});
  CHECK_THROWS(pp.validate());
  pp.product_override = true;
  CHECK_NOTHROW(pp.validate());
  auto ok = make_pp({{JordanBlock::make(6, 1), -1}, {JordanBlock::make(1, 2), -1}});
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("aubert duality on parameters is an involution") {
  auto pp = make_pp({{JordanBlock::make(6, 1), -1}, {JordanBlock::make(1, 2), -1}, {JordanBlock::make(4, 1), 1}});
  pp.product_override = true;
  auto d = aubert_param(pp);
  for (const auto& b : d.psi.blocks) CHECK(std::find(pp.psi.blocks.begin(), pp.psi.blocks.end(), b.swapped()) != pp.psi.blocks.end());
  CHECK(aubert_param(d) == pp);
}

TEST_CASE("reduce step lowers a block by two") {
  auto pp = make_pp({{JordanBlock::make(6, 1), 1}, {JordanBlock::make(1, 2), -1}});
  pp.product_override = true;
  ReduceResult r = reduce_step(pp, 0);
  CHECK(r.next.psi.weight(0) == pp.psi.weight(0) - 2);
  CHECK(r.exponent == h("5/2"));
  CHECK(r.a == 6);
  // (1,2) next to (4,1) with opposite-sign chain is the boundary case a = b + 2
  auto bd = make_pp({{JordanBlock::make(6, 1), 1}, {JordanBlock::make(1, 2), -1}, {JordanBlock::make(4, 1), -1}});
  bd.product_override = true;
  CHECK_THROWS_AS(reduce_step(bd, 0), BoundaryCase);
}

TEST_CASE("admissible orders and domination") {
  AParam p;
  p.blocks = {JordanBlock::make(2, 1), JordanBlock::make(4, 1)};
  auto nat = natural_order(p);
  REQUIRE(nat.size() == 2);
  CHECK(nat.front() == JordanBlock::make(4, 1));
  CHECK(is_admissible_order(p, nat));
  auto shift = domination_shift(nat, nat);
  REQUIRE(shift.has_value());
  for (int t : *shift) CHECK(t == 0);
}
