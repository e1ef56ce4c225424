// SPDX-License-Identifier: MIT
#include "apk/json_io.hpp"
#include "doctest.h"

using namespace apk;

namespace {

HalfInt h(const char* s) { return HalfInt::parse(s); }

// every datum the catalogs and families produce at a few alphas
std::vector<std::pair<HalfInt, LanglandsDatum>> sample_data() {
  std::vector<std::pair<HalfInt, LanglandsDatum>> out;
  for (int t = 0; t <= 6; ++t) {
    HalfInt a = HalfInt::from_twice(t);
    for (const auto& c : catalog(make_standard_base(a)))
      for (const auto& l : c.labels)
        if (l.datum) out.emplace_back(a, *l.datum);
  }
  auto b = make_standard_base(h("5/2"));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      if (m != n)
        out.emplace_back(b.alpha(), family_datum(b, theorem_label(b, FamilyKind::RedGt1, m, n,
                                                                  n > m ? EpsRule::Eps : EpsRule::EpsPrime)));
  return out;
}

}  // namespace

TEST_CASE("datum text and JSON round trips") {
  auto data = sample_data();
  REQUIRE(data.size() > 40);
  for (const auto& [a, d] : data) {
    INFO(d.str());
    CHECK(parse_datum(d.str(), a) == d);
    CHECK(datum_from_json(to_json(d), a) == d);
    CHECK(datum_from_json(Json::parse(to_json(d).dump()), a) == d);
  }
}

TEST_CASE("segments encode doubled endpoints") {
  Json j = to_json(Segment::make(h("-1/2"), h("5/2")));
  CHECK(j["x2"] == -1);
  CHECK(j["y2"] == 5);
  CHECK(j["line"] == 0);
  CHECK(segment_from_json(j) == Segment::make(h("-1/2"), h("5/2")));
  CHECK(segment_from_json(Json::array({"1/2", 1.5})) == Segment::make(h("1/2"), h("3/2")));
  CHECK_THROWS_AS(segment_from_json(Json(3)), ParseError);
}

TEST_CASE("half-integers from JSON") {
  CHECK(halfint_from_json(Json("5/2")) == h("5/2"));
  CHECK(halfint_from_json(Json(2.5)) == h("5/2"));
  CHECK(halfint_from_json(Json(3)) == h("3"));
  CHECK_THROWS_AS(halfint_from_json(Json(0.25)), ParseError);
}

TEST_CASE("block syntax") {
  auto v = parse_blocks("(6,1)+,(1,2)-,(3,3)z-,r1:(1,1)");
  REQUIRE(v.size() == 4);
  CHECK(v[0].blk == JordanBlock::make(6, 1));
  CHECK(v[0].eps == 1);
  CHECK(v[1].eps == -1);
  CHECK(v[2].blk.zeta_choice == -1);
  CHECK(v[2].eps == 0);
  CHECK(v[3].blk.line == 1);
  CHECK_THROWS_AS(parse_blocks("(6,1)z+"), ParseError);
  CHECK_THROWS_AS(parse_blocks("(6,1"), ParseError);
}

TEST_CASE("packets round trip") {
  auto base = make_standard_base(h("2"));
  PacketPair pp = family_packet(base, FamilyKind::RedGt1, 2, 1, EpsRule::EpsPrime);
  PacketPair back = packet_from_json(to_json(pp));
  CHECK(back.psi.blocks == pp.psi.blocks);
  CHECK(back.eps == pp.eps);
}

TEST_CASE("words round trip") {
  for (const char* s : {"D[0,1]", "Z[-1,2]x[3/2]", "D[0,1]xD[0,1]xZ[2,3]"}) {
    GLWord w = parse_word(s);
    CHECK(parse_word(w.str()) == w);
  }
  CHECK_THROWS_AS(parse_gen("[0,1]"), ParseError);
}

TEST_CASE("certificate digests are stable") {
  auto base = make_standard_base(h("5/2"));
  auto c = socle_step(base, h("5/2"), LanglandsDatum::tempered(TemperedSymbol::cusp(h("5/2"))));
  Json a = to_json(c), b = to_json(c);
  CHECK(a["digest"] == b["digest"]);
  CHECK(a["digest"].get<std::string>().size() == 16);
  CHECK(a["mult"] == 1);
  CHECK(digest(Json{{"k", 1}}) != digest(Json{{"k", 2}}));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_datum("L([1];", h("2")), ParseError);
  CHECK_THROWS_AS(parse_datum("delta([3];sigma)", h("2")), ParseError);
  CHECK_THROWS_AS(parse_tempered("tau", h("1")), ParseError);
}
