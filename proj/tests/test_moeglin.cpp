// SPDX-License-Identifier: MIT
#include "apk/families.hpp"
#include "doctest.h"

using namespace apk;

namespace {

HalfInt h(const char* s) { return HalfInt::parse(s); }

PacketPair on_base(const BaseCusp& base, std::initializer_list<std::pair<JordanBlock, int>> rho) {
  PacketPair pp = base.base;
  auto& bl = pp.psi.blocks;
  for (auto it = bl.begin(); it != bl.end();) {
    if (it->line == 0) {
      pp.eps.erase(*it);
      it = bl.erase(it);
    } else {
      ++it;
    }
  }
  for (const auto& [b, e] : rho) bl.push_back(b), pp.eps[b] = e;
  pp.psi.normalize();
  return pp;
}

}  // namespace

TEST_CASE("one reduction down to the base") {
  auto base = make_standard_base(h("5/2"));
  auto pp = on_base(base, {{JordanBlock::make(6, 1), 1}, {JordanBlock::make(1, 2), -1}});
  auto tr = moeglin_rep(base, pp);
  CHECK(tr.result.str() == "delta([5/2];sigma)");
  CHECK(replay(base, tr) == tr.result);
  REQUIRE_FALSE(tr.certificates.empty());
  for (const auto& c : tr.certificates) CHECK(c.multiplicity == 1);
  CHECK(dual_of_elementary_ddr(base, pp).str() == "L([5/2];sigma)");
}

TEST_CASE("the base itself needs no step") {
  auto base = make_standard_base(h("2"));
  CHECK(matches_base(base, base.base));
  CHECK(moeglin_rep(base, base.base).result.str() == "sigma");
}

TEST_CASE("a parameter off the base is rejected") {
  auto base = make_standard_base(h("2"));
  auto pp = on_base(base, {{JordanBlock::make(1, 1), 1}, {JordanBlock::make(5, 1), -1}, {JordanBlock::make(1, 3), 1}});
  pp.eps[JordanBlock::make(1, 1, 1)] = -1;
  CHECK_THROWS(moeglin_rep(base, pp, true));
}

TEST_CASE("descent exponents along a domination") {
  BlockOrder high{JordanBlock::make(8, 1), JordanBlock::make(1, 2)};
  BlockOrder low{JordanBlock::make(6, 1), JordanBlock::make(1, 2)};
  auto ex = descent_exponents(high, low);
  REQUIRE(ex.size() == 1);
  CHECK(ex[0] == h("7/2"));
}
