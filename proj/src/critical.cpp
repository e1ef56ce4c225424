// SPDX-License-Identifier: MIT

#include "apk/critical.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace apk {

namespace {

const HalfInt kHalf = HalfInt::from_twice(1);
const HalfInt kThreeHalves = HalfInt::from_twice(3);

using Blocks = std::vector<JordanBlock>;

JordanBlock blk(int a, int b) { return JordanBlock::make(a, b, 0); }

// (a,b) when both entries are positive, nothing otherwise
Blocks opt(int a, int b) { return a >= 1 && b >= 1 ? Blocks{blk(a, b)} : Blocks{}; }

Blocks rho_of(const BaseCusp& base) { return base.base.psi.on_line(0); }

// rho line of psi_sigma without the blocks whose c is listed, plus `add`
Blocks edit(const BaseCusp& base, std::initializer_list<int> drop, const Blocks& add) {
  Blocks out;
  for (const auto& b : rho_of(base))
    if (std::find(drop.begin(), drop.end(), b.c()) == drop.end()) out.push_back(b);
  out.insert(out.end(), add.begin(), add.end());
  std::sort(out.begin(), out.end());
  return out;
}

Blocks cat(std::initializer_list<Blocks> parts) {
  Blocks out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Blocks transposed(Blocks v) {
  for (auto& b : v) b = b.swapped();
  std::sort(v.begin(), v.end());
  return v;
}

// replace `from` by `to`, or add `to` when `from` is absent
Blocks replace_or_add(Blocks v, const Blocks& from, const JordanBlock& to) {
  auto it = from.empty() ? v.end() : std::find(v.begin(), v.end(), from.front());
  if (it != v.end()) *it = to;
  else v.push_back(to);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Segment> pts(std::initializer_list<HalfInt> xs) {
  std::vector<Segment> out;
  for (HalfInt x : xs) out.push_back(Segment::point(x));
  return out;
}

LanglandsDatum L(std::vector<Segment> segs, TemperedSymbol t) { return LanglandsDatum::make(std::move(segs), t); }

CriticalLabel label(std::string name, std::optional<LanglandsDatum> d, Recipe r,
                    std::optional<std::string> partner = std::nullopt, std::string text = {}) {
  CriticalLabel l;
  l.name = std::move(name);
  l.datum = std::move(d);
  l.recipe = std::move(r);
  l.dual_partner = std::move(partner);
  l.text = text.empty() && l.datum ? l.datum->str() : std::move(text);
  return l;
}

Recipe packet(Blocks rho) { return Recipe{RecipeKind::Packet, std::move(rho), {}, {}, {}, {}, {}}; }
Recipe dual() { return Recipe{RecipeKind::Dual, {}, {}, {}, {}, {}, {}}; }
Recipe lpacket(Blocks rho) { return Recipe{RecipeKind::LPacket, std::move(rho), {}, {}, {}, {}, "L-packet inside A-packet"}; }
Recipe family(FamilyCase c) { return Recipe{RecipeKind::Family, {}, {}, {}, {}, c, {}}; }
Recipe add_pair(Blocks rho, LanglandsDatum pi0, JordanBlock b) {
  return Recipe{RecipeKind::AddPair, std::move(rho), pi0, b, {}, {}, "constituent of u(a,b) |x pi0"};
}
Recipe descent(Blocks rho, LanglandsDatum top, std::vector<std::pair<JordanBlock, JordanBlock>> shift) {
  return Recipe{RecipeKind::Descent, std::move(rho), top, {}, std::move(shift), {}, {}};
}
Recipe remark(std::string what) { return Recipe{RecipeKind::Remark, {}, {}, {}, {}, {}, std::move(what)}; }

// the two tempered and two cotempered subquotients that general facts cover
void add_remarks(std::vector<CriticalLabel>& v, int tempered, int cotempered) {
  for (int i = 1; i <= tempered; ++i) {
    std::string t = "temp" + std::to_string(i), c = "cotemp" + std::to_string(i);
    v.push_back(label(t, std::nullopt, remark("tempered"), i <= cotempered ? std::optional(c) : std::nullopt,
                      "tempered subquotient"));
  }
  for (int i = 1; i <= cotempered; ++i) {
    std::string t = "temp" + std::to_string(i), c = "cotemp" + std::to_string(i);
    v.push_back(label(c, std::nullopt, remark("cotempered"), i <= tempered ? std::optional(t) : std::nullopt,
                      "cotempered subquotient"));
  }
}

CriticalCase make_case(std::string name, std::vector<HalfInt> exps, std::string constraint, std::size_t count) {
  CriticalCase c;
  c.name = std::move(name);
  c.exponents = std::move(exps);
  c.alpha_constraint = std::move(constraint);
  c.expected_count = count;
  return c;
}

struct Entry {
  std::string name;
  bool (*applies)(HalfInt);
  CriticalCase (*build)(const BaseCusp&);
};

// alpha > 1 cases use T = 2alpha-1, L = 2alpha-3, LL = 2alpha-5
int top_c(const BaseCusp& b) { return static_cast<int>(b.alpha().twice()) - 1; }

CriticalCase case_a1_a(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  const int T = top_c(base), Lc = T - 2;
  auto c = make_case("(a-1,a)", {a - 1, a}, "alpha > 1", 4);
  auto& v = c.labels;
  v.push_back(label("pi1", L({}, TemperedSymbol::strongly_positive(a, 0, 0)),
                    packet(edit(base, {Lc, T}, {blk(T, 1), blk(T + 2, 1)})), "pi4"));
  v.push_back(label("pi2", L(pts({a - 1}), TemperedSymbol::gen_steinberg(a, 0)),
                    packet(edit(base, {Lc, T}, {blk(1, T), blk(T + 2, 1)})), "pi3"));
  v.push_back(label("pi3", L(pts({a - 1, a}), TemperedSymbol::cusp(a)), dual(), "pi2"));
  v.push_back(label("pi4", L({Segment::make(a - 1, a)}, TemperedSymbol::cusp(a)), dual(), "pi1"));
  return c;
}

CriticalCase case_01(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  auto c = make_case("(0,1)", {HalfInt(), HalfInt::of(1)}, "alpha = 0", 5);
  auto& v = c.labels;
  for (int s : {1, -1}) {
    auto sq = FamilyCase{FamilyKind::Red0, 0, 1, s > 0 ? FamilyLabel::PiPlus : FamilyLabel::PiMinus};
    auto du = dual_label(sq);
    std::string nm = s > 0 ? "delta+" : "delta-";
    v.push_back(label(nm, family_datum(base, sq), family(sq), nm + "^t"));
    v.push_back(label(nm + "^t", family_datum(base, du), family(du), nm));
  }
  v.push_back(label("pi2", L({Segment::make(HalfInt(), HalfInt::of(1))}, TemperedSymbol::cusp(a)),
                    lpacket(cat({rho_of(base), {blk(2, 2)}}))));
  return c;
}

CriticalCase case_a1_a_a1(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  const int T = top_c(base), Lc = T - 2;
  auto c = make_case("(a-1,a,a+1)", {a - 1, a, a + 1}, "alpha > 1", 4);
  auto& v = c.labels;
  v.push_back(label("pi1", L({}, TemperedSymbol::strongly_positive(a, 0, 1)),
                    packet(edit(base, {Lc, T}, {blk(T, 1), blk(T + 4, 1)})), "pi2"));
  v.push_back(label("pi2", L({Segment::make(a - 1, a), Segment::point(a + 1)}, TemperedSymbol::cusp(a)), dual(), "pi1"));
  v.push_back(label("pi3", L(pts({a - 1}), TemperedSymbol::gen_steinberg(a, 1)),
                    packet(edit(base, {Lc, T}, {blk(1, T), blk(T + 4, 1)})), "pi4"));
  v.push_back(label("pi4", L(pts({a - 1, a, a + 1}), TemperedSymbol::cusp(a)), dual(), "pi3"));
  return c;
}

CriticalCase case_a1_a_a(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  const int T = top_c(base), Lc = T - 2;
  auto c = make_case("(a-1,a,a)", {a - 1, a, a}, "alpha > 1", 1);
  // the m = n = 0 member, reached from the (m, n) = (0, 1) member by Jac_{alpha+1}
  auto top = family_datum(base, FamilyCase{FamilyKind::RedGt1, 0, 1, FamilyLabel::Pi});
  c.labels.push_back(label("pi0", L(pts({a - 1, a}), TemperedSymbol::gen_steinberg(a, 0)),
                           descent(edit(base, {Lc, T}, {blk(T + 4, 1), blk(1, T + 2)}), top,
                                   {{blk(T + 4, 1), blk(T + 2, 1)}})));
  return c;
}

CriticalCase case_hh3_32(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  auto c = make_case("(1/2,1/2,3/2)", {kHalf, kHalf, kThreeHalves}, "alpha = 3/2", 8);
  auto& v = c.labels;
  add_remarks(v, 2, 2);
  v.push_back(label("pi5", std::nullopt,
                    add_pair({blk(1, 4)}, L(pts({a}), TemperedSymbol::cusp(a)), blk(2, 1)), std::nullopt,
                    "L([3/2];delta([-1/2,1/2]) |x sigma)"));
  v.push_back(label("pi6", L(pts({kHalf, kHalf}), TemperedSymbol::gen_steinberg(a, 0)),
                    add_pair({blk(4, 1)}, L({}, TemperedSymbol::gen_steinberg(a, 0)), blk(1, 2))));
  v.push_back(label("pi7", L({Segment::make(-kHalf, a)}, TemperedSymbol::cusp(a)),
                    lpacket(cat({rho_of(base), {blk(3, 2)}}))));
  v.push_back(label("pi8", L(pts({kHalf}), TemperedSymbol::strongly_positive(a, 0, 0)),
                    descent({blk(1, 2), blk(4, 1), blk(6, 1)}, L(pts({kHalf}), TemperedSymbol::strongly_positive(a, 1, 1)),
                            {{blk(6, 1), blk(4, 1)}, {blk(4, 1), blk(2, 1)}})));
  return c;
}

CriticalCase case_a2_a1_a(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  const int T = top_c(base), Lc = T - 2, LL = T - 4;
  auto c = make_case("(a-2,a-1,a)", {a - 2, a - 1, a}, "alpha > 2", 8);
  auto& v = c.labels;
  v.push_back(label("pi1", std::nullopt, remark("tempered"), "pi8", "delta_sp([a-2],[a-1],[a];sigma)"));
  v.push_back(label("pi2", L(pts({a - 2}), TemperedSymbol::strongly_positive(a, 0, 0)),
                    packet(edit(base, {LL, Lc, T}, {blk(1, Lc), blk(T, 1), blk(T + 2, 1)})), "pi7"));
  v.push_back(label("pi3", L(pts({a - 2, a - 1}), TemperedSymbol::gen_steinberg(a, 0)),
                    packet(replace_or_add(edit(base, {Lc, T}, {blk(1, T), blk(T + 2, 1)}), opt(LL, 1), blk(Lc, 1))),
                    "pi6"));
  v.push_back(label("pi4", L({Segment::make(a - 2, a - 1)}, TemperedSymbol::gen_steinberg(a, 0)),
                    packet(edit(base, {LL, Lc, T}, {blk(1, Lc), blk(1, T), blk(T + 2, 1)})), "pi5"));
  v.push_back(label("pi5", L(pts({a - 2, a - 1, a}), TemperedSymbol::cusp(a)), dual(), "pi4"));
  v.push_back(label("pi6", L({Segment::point(a), Segment::make(a - 2, a - 1)}, TemperedSymbol::cusp(a)), dual(), "pi3"));
  v.push_back(label("pi7", L({Segment::make(a - 1, a), Segment::point(a - 2)}, TemperedSymbol::cusp(a)), dual(), "pi2"));
  // the Aubert dual of pi1's parameter
  v.push_back(label("pi8", L({Segment::make(a - 2, a)}, TemperedSymbol::cusp(a)),
                    packet(transposed(edit(base, {LL, Lc, T}, {blk(Lc, 1), blk(T, 1), blk(T + 2, 1)}))), "pi1"));
  return c;
}

CriticalCase case_012(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  auto c = make_case("(0,1,2)", {HalfInt(), HalfInt::of(1), HalfInt::of(2)}, "alpha = 2", 8);
  auto& v = c.labels;
  add_remarks(v, 2, 2);
  const Blocks psi2 = edit(base, {1, 3}, {blk(1, 3), blk(5, 1)});  // L([1];delta([2];sigma))
  const Blocks psi3 = transposed(psi2);                              // L([1],[2];sigma)
  const auto pi2 = L(pts({HalfInt::of(1)}), TemperedSymbol::gen_steinberg(a, 0));
  const auto pi3 = L(pts({HalfInt::of(1), HalfInt::of(2)}), TemperedSymbol::cusp(a));
  const HalfInt one = HalfInt::of(1), two = HalfInt::of(2);
  v.push_back(label("pi5", L(pts({one}), TemperedSymbol::zero_induced(a, 0)), add_pair(psi2, pi2, blk(1, 1)), "pi6"));
  v.push_back(label("pi6", L({Segment::point(two), Segment::make(HalfInt(), one)}, TemperedSymbol::cusp(a)),
                    add_pair(psi3, pi3, blk(1, 1)), "pi5"));
  v.push_back(label("pi7", L({Segment::make(HalfInt(), one)}, TemperedSymbol::gen_steinberg(a, 0)),
                    add_pair(psi2, pi2, blk(1, 1)), "pi8"));
  v.push_back(label("pi8", L(pts({one, two}), TemperedSymbol::zero_induced(a)), add_pair(psi3, pi3, blk(1, 1)), "pi7"));
  return c;
}

CriticalCase case_011_1(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  const HalfInt one = HalfInt::of(1);
  auto c = make_case("(0,1,1)", {HalfInt(), one, one}, "alpha = 1", 7);
  auto& v = c.labels;
  v.push_back(label("pi1", L({Segment::make(HalfInt(), one), Segment::point(one)}, TemperedSymbol::cusp(a)),
                    lpacket(edit(base, {1}, {blk(1, 3), blk(2, 2)})), "pi3"));
  v.push_back(label("pi3", L({Segment::make(HalfInt(), one)}, TemperedSymbol::gen_steinberg(a, 0)),
                    lpacket(edit(base, {1}, {blk(3, 1), blk(2, 2)})), "pi1"));
  v.push_back(label("pi4+", L(pts({one}), TemperedSymbol::tau_pm(1, 1)),
                    lpacket(cat({rho_of(base), {blk(3, 1), blk(1, 3)}}))));
  add_remarks(v, 2, 2);
  return c;
}

CriticalCase case_hh3_half(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  auto c = make_case("(1/2,1/2,3/2)", {kHalf, kHalf, kThreeHalves}, "alpha = 1/2", 8);
  auto& v = c.labels;
  add_remarks(v, 2, 2);
  v.push_back(label("pi3", L({Segment::make(-kHalf, kThreeHalves)}, TemperedSymbol::cusp(a)),
                    lpacket(cat({rho_of(base), {blk(3, 2)}})), "pi4"));
  v.push_back(label("pi4", L({Segment::make(kHalf, kThreeHalves)}, TemperedSymbol::gen_steinberg(a, 0)),
                    lpacket(cat({rho_of(base), {blk(2, 3)}})), "pi3"));
  const FamilyCase p7{FamilyKind::RedHalf, 1, 2, FamilyLabel::PiPlus};
  const FamilyCase p8 = dual_label(p7);
  v.push_back(label("pi7", family_datum(base, p7), family(p7), "pi8"));
  v.push_back(label("pi8", family_datum(base, p8), family(p8), "pi7"));
  return c;
}

CriticalCase case_hhh(const BaseCusp& base) {
  const HalfInt a = base.alpha();
  auto c = make_case("(1/2,1/2,1/2)", {kHalf, kHalf, kHalf}, "alpha = 1/2", 5);
  auto& v = c.labels;
  const Blocks r = rho_of(base);
  v.push_back(label("pi2", L(pts({kHalf}), TemperedSymbol::pm_square(a, kHalf, kHalf, -1)),
                    lpacket(cat({r, {blk(1, 2), blk(2, 1), blk(2, 1)}})), "pi3"));
  v.push_back(label("pi3", L(pts({kHalf, kHalf}), TemperedSymbol::gen_steinberg(a, 0)),
                    lpacket(cat({r, {blk(2, 1), blk(1, 2), blk(1, 2)}})), "pi2"));
  v.push_back(label("pi5", L(pts({kHalf}), TemperedSymbol::pm_square(a, kHalf, kHalf, 1)),
                    lpacket(cat({r, {blk(1, 2), blk(2, 1), blk(2, 1)}}))));
  add_remarks(v, 1, 1);
  return c;
}

CriticalCase case_011_0(const BaseCusp& base) {
  const HalfInt one = HalfInt::of(1);
  auto c = make_case("(0,1,1)", {HalfInt(), one, one}, "alpha = 0", 6);
  auto& v = c.labels;
  for (int s : {1, -1})
    v.push_back(label(s > 0 ? "pi3+" : "pi3-", L(pts({one}), TemperedSymbol::pm_zero_chain(1, s)),
                      lpacket(cat({rho_of(base), {blk(1, 3), blk(3, 1)}})), s > 0 ? "pi3-" : "pi3+"));
  add_remarks(v, 2, 2);
  return c;
}

CriticalCase case_001(const BaseCusp& base) {
  const HalfInt one = HalfInt::of(1);
  auto c = make_case("(0,0,1)", {HalfInt(), HalfInt(), one}, "alpha = 0", 6);
  auto& v = c.labels;
  for (int s : {1, -1})
    v.push_back(label(s > 0 ? "pi2+" : "pi2-", L({Segment::make(HalfInt(), one)}, TemperedSymbol::pm_zero_chain(0, s)),
                      lpacket(cat({rho_of(base), {blk(2, 2), blk(1, 1), blk(1, 1)}})), s > 0 ? "pi2-" : "pi2+"));
  add_remarks(v, 2, 2);
  return c;
}

bool gt1(HalfInt a) { return a > HalfInt::of(1); }
bool gt2(HalfInt a) { return a > HalfInt::of(2); }
bool is0(HalfInt a) { return a == HalfInt(); }
bool is_half(HalfInt a) { return a == kHalf; }
bool is1(HalfInt a) { return a == HalfInt::of(1); }
bool is32(HalfInt a) { return a == kThreeHalves; }
bool is2(HalfInt a) { return a == HalfInt::of(2); }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {"(a-1,a)", gt1, case_a1_a},
      {"(0,1)", is0, case_01},
      {"(a-1,a,a+1)", gt1, case_a1_a_a1},
      {"(a-1,a,a)", gt1, case_a1_a_a},
      {"(1/2,1/2,3/2) alpha=3/2", is32, case_hh3_32},
      {"(a-2,a-1,a)", gt2, case_a2_a1_a},
      {"(0,1,2)", is2, case_012},
      {"(0,1,1) alpha=1", is1, case_011_1},
      {"(1/2,1/2,3/2) alpha=1/2", is_half, case_hh3_half},
      {"(1/2,1/2,1/2)", is_half, case_hhh},
      {"(0,1,1) alpha=0", is0, case_011_0},
      {"(0,0,1)", is0, case_001},
  };
  return e;
}

std::vector<HalfInt> abs_sorted(std::vector<HalfInt> v) {
  for (auto& x : v) x = abs(x);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<HalfInt> block_points(const JordanBlock& b) {
  std::vector<HalfInt> out;
  for (const auto& s : psi_segments({b}))
    for (HalfInt x = s.x; x <= s.y; x = x + 1) out.push_back(x);
  return out;
}

std::string blocks_str(const Blocks& v) {
  std::string s;
  for (const auto& b : v) s += (s.empty() ? "" : ",") + b.str();
  return "{" + s + "}";
}

void merge_multiset_count(std::map<int, int>& m, int c, int d) {
  if ((m[c] += d) == 0) m.erase(c);
}

// Jordan blocks (as c values) of the tempered part on the rho line
std::map<int, int> tempered_jord(const BaseCusp& base, const TemperedSymbol& t) {
  std::map<int, int> j;
  for (const auto& b : rho_of(base)) {
    if (!b.elementary()) throw UnsupportedSymbol("psi_sigma must be elementary on the rho line");
    merge_multiset_count(j, b.c(), 1);
  }
  const int t2 = static_cast<int>(t.alpha.twice());
  auto drop = [&](int c) {
    if (c >= 1 && j.count(c)) merge_multiset_count(j, c, -1);
  };
  auto add = [&](int c) {
    if (c >= 1) merge_multiset_count(j, c, 1);
  };
  switch (t.tag) {
    case TempTag::Cusp: break;
    case TempTag::GenSteinberg: drop(t2 - 1), add(t2 + 1 + 2 * t.n); break;
    case TempTag::StronglyPositive:
      drop(t2 - 3), drop(t2 - 1), add(t2 - 1 + 2 * t.m), add(t2 + 1 + 2 * t.n);
      break;
    case TempTag::PMSquare: add(static_cast<int>(t.x.twice()) + 1), add(static_cast<int>(t.y.twice()) + 1); break;
    case TempTag::PMZeroChain: add(1), add(2 * t.n + 1); break;
    case TempTag::TauPM: drop(1), add(2 * t.n + 1), add(1), add(1); break;
    case TempTag::ZeroInduced:
      if (t.n >= 0) drop(t2 - 1), add(t2 + 1 + 2 * t.n);
      add(1), add(1);
      break;
  }
  return j;
}

struct Descended {
  PacketHit top;
  BlockOrder high, low;
  std::vector<HalfInt> jacs;
  JacResult result;
  bool admissible = false;
};

Descended descend(const BaseCusp& base, const Blocks& rho, const LanglandsDatum& top,
                  const std::vector<std::pair<JordanBlock, JordanBlock>>& shift) {
  Descended d{find_in_packet(base, rho, top), {}, {}, {}, {}, false};
  d.high = natural_order(d.top.pp.psi);
  d.low = d.high;
  for (auto& b : d.low)
    for (const auto& [from, to] : shift)
      if (b == from) {
        b = to;
        break;
      }
  AParam low_psi = d.top.pp.psi;
  low_psi.blocks = d.low;
  low_psi.normalize();
  d.admissible = is_admissible_order(low_psi, d.low);
  d.jacs = descent_exponents(d.high, d.low);
  d.result = dominate_descend(base, d.high, d.low, top);
  return d;
}

std::string order_str(const BlockOrder& o) {
  std::string s;
  for (const auto& b : o)
    if (b.line == 0) s += (s.empty() ? "" : ">") + b.str();
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------

bool is_critical(const std::vector<HalfInt>& exps, const CuspLine& line) {
  if (exps.empty()) return false;
  auto v = abs_sorted(exps);
  v.erase(std::unique(v.begin(), v.end()), v.end());
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] - v[i - 1] != HalfInt::of(1)) return false;
  return std::find(v.begin(), v.end(), line.alpha) != v.end();
}

const char* to_string(RecipeKind k) {
  switch (k) {
    case RecipeKind::Packet: return "packet";
    case RecipeKind::Dual: return "dual";
    case RecipeKind::Family: return "family";
    case RecipeKind::LPacket: return "lpacket";
    case RecipeKind::AddPair: return "add-pair";
    case RecipeKind::Descent: return "descent";
    case RecipeKind::Remark: return "remark";
  }
  return "?";
}

const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

std::vector<CriticalCase> catalog(const BaseCusp& base) {
  std::vector<CriticalCase> out;
  for (const auto& e : entries())
    if (e.applies(base.alpha())) {
      out.push_back(e.build(base));
      out.back().name = e.name;
    }
  return out;
}

std::vector<std::string> catalog_case_names() {
  std::vector<std::string> out;
  for (const auto& e : entries()) out.push_back(e.name);
  return out;
}

std::vector<HalfInt> support(const LanglandsDatum& d) {
  std::vector<HalfInt> out;
  for (const auto& g : full_cuspidal_envelope(d).gens)
    for (HalfInt x = g.seg.x; x <= g.seg.y; x = x + 1) out.push_back(x);
  return abs_sorted(out);
}

std::vector<Segment> l_parameter(const BaseCusp& base, const LanglandsDatum& d) {
  std::vector<Segment> out;
  for (const auto& s : d.segs) {
    out.push_back(s);
    out.push_back(seg_contragredient(s));
  }
  for (const auto& [c, mult] : tempered_jord(base, d.temp))
    for (int i = 0; i < mult; ++i) {
      HalfInt h = HalfInt::from_twice(c - 1);
      out.push_back(Segment::make(-h, h));
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Segment> psi_segments(const std::vector<JordanBlock>& rho) {
  std::vector<Segment> out;
  for (const auto& b : rho) {
    if (b.line != 0) continue;
    const HalfInt half_len = HalfInt::from_twice(b.a - 1);
    for (int j = 0; j < b.b; ++j) {
      HalfInt centre = HalfInt::from_twice(b.b - 1) - j;
      out.push_back(Segment::make(centre - half_len, centre + half_len));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

AParam with_rho_line(const BaseCusp& base, const std::vector<JordanBlock>& rho) {
  AParam p = base.base.psi;
  p.blocks.erase(std::remove_if(p.blocks.begin(), p.blocks.end(), [](const JordanBlock& b) { return b.line == 0; }),
                 p.blocks.end());
  p.blocks.insert(p.blocks.end(), rho.begin(), rho.end());
  p.normalize();
  return p;
}

PacketHit find_in_packet(const BaseCusp& base, const std::vector<JordanBlock>& rho, const LanglandsDatum& want) {
  PacketPair pp;
  pp.psi = with_rho_line(base, rho);
  Blocks distinct;
  for (const auto& b : pp.psi.blocks)
    if (b.line == 0 && std::find(distinct.begin(), distinct.end(), b) == distinct.end()) distinct.push_back(b);
  for (const auto& b : pp.psi.blocks)
    if (b.line != 0) pp.eps[b] = base.base.eps_of(b);
  if (distinct.size() > 16) throw PreconditionError("too many blocks to search eps");
  std::string seen;
  for (unsigned mask = 0; mask < (1u << distinct.size()); ++mask) {
    PacketPair q = pp;
    for (std::size_t i = 0; i < distinct.size(); ++i) q.eps[distinct[i]] = (mask >> i & 1u) ? -1 : 1;
    if (q.eps_product() != 1) continue;
    try {
      ReductionTrace tr = moeglin_rep(base, q, true);
      if (tr.result == want) return PacketHit{q, tr};
      seen += " " + q.str() + " -> " + tr.result.str() + ";";
    } catch (const Error& e) {
      seen += " " + q.str() + ": " + e.what() + ";";
    }
  }
  throw CertificateFailure(want.str() + " was not reached from " + pp.psi.str() + ":" + seen);
}

// ---------------------------------------------------------------------------

CaseReport verify_case(const BaseCusp& base, const CriticalCase& c) {
  CaseReport rep;
  rep.name = c.name;
  rep.alpha = base.alpha();
  rep.expected_count = c.expected_count;
  rep.critical = is_critical(c.exponents, base.rho());
  const auto case_support = abs_sorted(c.exponents);

  std::map<std::string, const CriticalLabel*> by_name;
  for (const auto& l : c.labels) by_name[l.name] = &l;
  std::map<std::string, PacketHit> hits;  // packet member behind each label (pi0 for AddPair)
  std::map<std::string, LabelReport> done;

  auto run = [&](const CriticalLabel& l) {
    LabelReport r;
    r.name = l.name;
    r.expected = l.display();
    r.kind = l.recipe.kind;
    const Recipe& rc = l.recipe;
    try {
      switch (rc.kind) {
        case RecipeKind::Packet: {
          if (!l.datum) throw PreconditionError("a packet recipe needs a datum");
          PacketHit h = find_in_packet(base, rc.rho, *l.datum);
          r.got = h.trace.result;
          r.packet = h.pp.str();
          r.certs = h.trace.certificates;
          r.external = h.trace.external;
          r.pass = true;
          hits.emplace(l.name, std::move(h));
          break;
        }
        case RecipeKind::Dual: {
          if (!l.dual_partner || !hits.count(*l.dual_partner))
            throw PreconditionError("the partner of a dual recipe must be a certified packet member");
          const PacketHit& ph = hits.at(*l.dual_partner);
          PacketPair dp = aubert_param(ph.pp);
          ReductionTrace tr = moeglin_rep(base, dp, true);
          r.got = tr.result;
          r.packet = dp.str();
          r.certs = tr.certificates;
          r.external = tr.external;
          r.pass = l.datum && tr.result == *l.datum;
          if (!r.pass) r.detail = "dual of " + *l.dual_partner + " is " + tr.result.str();
          hits.emplace(l.name, PacketHit{dp, tr});
          break;
        }
        case RecipeKind::Family: {
          const FamilyCase& fc = *rc.family;
          FamilyCheck fcheck = verify_family(base, fc.kind, fc.m, fc.n, rule_for(base, fc));
          r.got = fcheck.got;
          r.packet = fcheck.packet;
          r.certs = fcheck.certs;
          r.external = fcheck.external;
          r.pass = fcheck.pass && l.datum && family_datum(base, fc) == *l.datum;
          r.detail = fc.str() + (fcheck.error.empty() ? "" : ": " + fcheck.error);
          break;
        }
        case RecipeKind::LPacket: {
          if (!l.datum) throw PreconditionError("an L-packet recipe needs a datum");
          auto lp = l_parameter(base, *l.datum);
          auto ps = psi_segments(rc.rho);
          r.packet = with_rho_line(base, rc.rho).str();
          r.got = l.datum;
          r.external = true;
          r.pass = lp == ps;
          if (!r.pass) r.detail = "L-parameter does not match phi_psi";
          else r.detail = "L-parameter equals phi_psi (external result)";
          break;
        }
        case RecipeKind::AddPair: {
          PacketHit h = find_in_packet(base, rc.rho, *rc.via);
          r.packet = h.pp.str() + " + 2" + rc.pair->str();
          r.certs = h.trace.certificates;
          r.external = true;
          auto sup = support(*rc.via);
          for (HalfInt x : block_points(*rc.pair)) sup.push_back(x);
          sup = abs_sorted(sup);
          r.got = l.datum;
          r.pass = sup == case_support;
          r.detail = r.pass ? "pi0 = " + rc.via->str() + " certified; support matches (external result)"
                            : "support of pi0 and u(a,b) does not match the case";
          hits.emplace(l.name, std::move(h));
          break;
        }
        case RecipeKind::Descent: {
          if (!l.datum) throw PreconditionError("a descent recipe needs a datum");
          Descended d = descend(base, rc.rho, *rc.via, rc.shift);
          r.packet = d.top.pp.str() + " >> " + order_str(d.low);
          r.certs = d.top.trace.certificates;
          r.external = d.top.trace.external || d.result.external;
          std::string jacs;
          for (HalfInt x : d.jacs) jacs += " Jac_" + x.str();
          if (d.result.undecidable) {
            r.detail = "undecidable:" + d.result.reason;
          } else if (d.result.is_zero()) {
            r.detail = "descent gives 0";
          } else {
            r.got = d.result.value.begin()->first;
            r.pass = d.admissible && *r.got == *l.datum;
            r.detail = "from " + rc.via->str() + " by" + jacs + (d.admissible ? "" : " (order not admissible)");
          }
          break;
        }
        case RecipeKind::Remark:
          r.got = l.datum;
          r.external = true;
          r.pass = !(l.datum && rc.note == "tempered" && !l.datum->is_tempered());
          r.detail = rc.note + " (general fact)";
          break;
      }
    } catch (const Error& e) {
      r.pass = false;
      r.detail = e.what();
    }
    if (l.datum && support(*l.datum) != case_support) {
      r.pass = false;
      r.detail += "; cuspidal support differs from the case exponents";
    }
    done[l.name] = r;
  };

  for (const auto& l : c.labels)
    if (l.recipe.kind != RecipeKind::Dual) run(l);
  for (const auto& l : c.labels)
    if (l.recipe.kind == RecipeKind::Dual) run(l);
  for (const auto& l : c.labels) rep.labels.push_back(done.at(l.name));

  for (const auto& l : c.labels) {
    if (!l.dual_partner || l.name > *l.dual_partner) continue;
    PairReport p;
    p.a = l.name;
    p.b = *l.dual_partner;
    auto it = by_name.find(p.b);
    if (it == by_name.end() || it->second->dual_partner != l.name) {
      p.detail = "partner missing or not mutual";
      rep.pairs.push_back(p);
      continue;
    }
    const CriticalLabel& m = *it->second;
    const RecipeKind ka = l.recipe.kind, kb = m.recipe.kind;
    try {
      if (ka == RecipeKind::Dual || kb == RecipeKind::Dual) {
        p.route = "aubert";
        const std::string& dname = ka == RecipeKind::Dual ? l.name : m.name;
        p.pass = done.at(dname).pass && done.at(ka == RecipeKind::Dual ? m.name : l.name).pass;
      } else if (ka == RecipeKind::Packet && kb == RecipeKind::Packet) {
        p.route = "aubert";
        auto d = dual_of_elementary_ddr(base, hits.at(l.name).pp, true);
        p.pass = m.datum && d == *m.datum;
        if (!p.pass) p.detail = "dual is " + d.str();
      } else if (ka == RecipeKind::Family && kb == RecipeKind::Family) {
        p.route = "family duality";
        FamilyCheck fd = verify_duality(base, *l.recipe.family);
        p.pass = dual_label(*l.recipe.family) == *m.recipe.family && fd.pass;
        if (!p.pass) p.detail = fd.error;
      } else if (ka == RecipeKind::LPacket && kb == RecipeKind::LPacket) {
        p.route = "transposed parameter (external result)";
        auto shape = [](const Blocks& v) {
          std::vector<std::pair<int, int>> out;
          for (const auto& b : v) out.emplace_back(b.a, b.b);
          std::sort(out.begin(), out.end());
          return out;
        };
        auto ta = transposed(l.recipe.rho), tb = m.recipe.rho;
        p.pass = shape(ta) == shape(tb);
        if (!p.pass) p.detail = blocks_str(ta) + " != " + blocks_str(tb);
      } else if (ka == RecipeKind::AddPair && kb == RecipeKind::AddPair) {
        p.route = "aubert on pi0 (external result)";
        auto d = dual_of_elementary_ddr(base, hits.at(l.name).pp, true);
        p.pass = d == *m.recipe.via && m.recipe.pair == l.recipe.pair;
        if (!p.pass) p.detail = "dual of pi0 is " + d.str();
      } else if (ka == RecipeKind::Remark || kb == RecipeKind::Remark) {
        p.route = "remark";
        p.pass = true;
      } else {
        p.detail = "no route between these recipes";
      }
    } catch (const Error& e) {
      p.pass = false;
      p.detail = e.what();
    }
    rep.pairs.push_back(p);
  }

  rep.pass = rep.critical && rep.labels.size() == rep.expected_count &&
             std::all_of(rep.labels.begin(), rep.labels.end(), [](const LabelReport& r) { return r.pass; }) &&
             std::all_of(rep.pairs.begin(), rep.pairs.end(), [](const PairReport& p) { return p.pass; });
  return rep;
}

std::vector<CaseReport> verify_catalog(const BaseCusp& base, unsigned jobs) {
  const auto cases = catalog(base);
  std::vector<CaseReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < cases.size();) out[i] = verify_case(base, cases[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

// ---------------------------------------------------------------------------

AppendixReport appendix_lemma(const BaseCusp& base, HalfInt x) {
  const HalfInt a = base.alpha();
  if (a < HalfInt::of(1) || x < HalfInt() || !(a - x).is_integer() || a - x <= HalfInt())
    throw PreconditionError("the lemma needs alpha >= 1, x >= 0 and alpha - x a positive integer");
  AppendixReport r;
  r.x = x;
  r.alpha = a;
  const std::int64_t k = (a - x).to_int();
  if (x > HalfInt()) r.expected = LanglandsDatum::make({Segment::point(x)}, TemperedSymbol::cusp(a));
  if (x == HalfInt()) {
    // tempered: psi_sigma + E_{1,1} + E_{1,1}
    r.expected = LanglandsDatum::tempered(TemperedSymbol::zero_induced(a));
    auto rho = cat({rho_of(base), {blk(1, 1), blk(1, 1)}});
    r.packet = with_rho_line(base, rho).str();
    r.start = r.expected;
    r.got = r.expected;
    r.admissible = true;
    r.pass = l_parameter(base, r.expected) == psi_segments(rho);
    r.detail = "tempered parameter";
    return r;
  }
  const int T = top_c(base), Lc = T - 2, LL = T - 4;
  Blocks rho;
  std::vector<std::pair<JordanBlock, JordanBlock>> shift;
  if (k == 1) {
    rho = edit(base, {Lc, T}, {blk(1, T), blk(T + 2, 1)});
    r.start = L(pts({a - 1}), TemperedSymbol::gen_steinberg(a, 0));
    shift = {{blk(T + 2, 1), blk(T, 1)}};
  } else if (k == 2) {
    rho = edit(base, {LL, Lc, T}, {blk(1, Lc), blk(T, 1), blk(T + 2, 1)});
    r.start = L(pts({a - 2}), TemperedSymbol::strongly_positive(a, 0, 0));
    shift = {{blk(T, 1), blk(Lc, 1)}, {blk(T + 2, 1), blk(T, 1)}};
  } else {
    throw UnsupportedShift("x = alpha - " + std::to_string(k) + " needs the general X matrices");
  }
  Descended d = descend(base, rho, r.start, shift);
  r.packet = d.top.pp.str();
  r.low = order_str(d.low);
  r.jacs = d.jacs;
  r.certs = d.top.trace.certificates;
  r.admissible = d.admissible;
  r.external = d.result.external;
  if (d.result.undecidable) {
    r.detail = "undecidable: " + d.result.reason;
  } else if (d.result.is_zero()) {
    r.detail = "descent gives 0";
  } else {
    r.got = d.result.value.begin()->first;
    r.pass = d.admissible && *r.got == r.expected;
  }
  return r;
}

Tri is_primitive_candidate(const BaseCusp& base, const LanglandsDatum& pi, const std::optional<PacketPair>& packet) {
  if (packet) {
    auto tr = moeglin_rep(base, *packet, true);
    if (tr.result != pi) throw PreconditionError(pi.str() + " is not pi(psi, eps) for " + packet->str());
  }
  if (!pi.is_tempered()) return Tri::Unknown;
  // unitary Speh factors have exponent 0, which a discrete series cannot have
  if (pi.temp.square_integrable()) return Tri::Yes;
  // nu^0 |x tau0 or delta([-x,x]) |x sigma with tau0 tempered of smaller rank
  return Tri::No;
}

}  // namespace apk
